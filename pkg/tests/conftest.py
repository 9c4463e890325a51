"""
Test Configuration - Pytest fixtures and sample data.
"""
import pytest
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import settings

SAMPLES_DIR = settings.SAMPLES_DIR


# ===== Ring Fixtures =====

@pytest.fixture
def integers():
    """The ring Z."""
    from src.rings import IntegerRing
    return IntegerRing()


@pytest.fixture
def rationals():
    """The field Q."""
    from src.rings import RationalField
    return RationalField()


@pytest.fixture
def mod101():
    """The prime field Z/101Z."""
    from src.rings import IntegerModRing
    return IntegerModRing(101)


@pytest.fixture
def mod6():
    """Z/6Z, which has zero divisors."""
    from src.rings import IntegerModRing
    return IntegerModRing(6)


@pytest.fixture
def polyint():
    """Z[x]."""
    from src.rings import IntegerPolynomialRing
    return IntegerPolynomialRing()


@pytest.fixture(params=["int", "rational", "intmod:101", "polyint"])
def any_ring(request):
    """Each ring the algorithms are tested over."""
    from src.rings import make_ring
    return make_ring(request.param)


# ===== Matrix Fixtures =====

@pytest.fixture
def counter():
    """A fresh operation counter."""
    from src.matrix import OpCounter
    return OpCounter()


@pytest.fixture
def small_int_matrix(integers):
    """[[1, 2], [3, 4]]: charpoly x² - 5x - 2, det -2."""
    from src.matrix import Matrix
    return Matrix.from_ints(integers, [[1, 2], [3, 4]])


@pytest.fixture
def mod6_matrix(mod6):
    """3×3 matrix over Z/6Z; division by 2 and 3 is impossible."""
    from src.matrix import Matrix
    return Matrix.from_ints(mod6, [[1, 2, 3], [4, 5, 0], [2, 1, 5]])


# ===== Sample Files =====

@pytest.fixture
def samples_dir():
    """Directory of the sample matrix files."""
    return SAMPLES_DIR


@pytest.fixture
def sample_file(samples_dir):
    """Path of a sample matrix file by stem."""
    def _path(name: str) -> Path:
        return samples_dir / f"{name}.json"
    return _path
