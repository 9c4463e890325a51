"""
Tests package for Exact Charpoly.
"""
