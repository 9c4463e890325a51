"""
Configuration settings for Exact Charpoly.
"""
from pathlib import Path
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings."""

    # Paths
    BASE_DIR: Path = Path(__file__).parent.parent
    DATA_DIR: Path = BASE_DIR / "data"
    SAMPLES_DIR: Path = DATA_DIR / "samples"

    # Benchmark defaults (entries drawn from [BENCH_LO, BENCH_HI])
    BENCH_LO: int = -10
    BENCH_HI: int = 10
    BENCH_REPS: int = 1
    BENCH_SEED: int = 0
    BENCH_WORKERS: int = 1
    BENCH_EMIT: str = "csv"

    # Degree of random entries over the polynomial ring
    POLY_DEGREE: int = 1

    # Logging
    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"
        extra = "ignore"


settings = Settings()
