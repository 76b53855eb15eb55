import os

from dotenv import load_dotenv

load_dotenv()


def _float_list(raw: str) -> tuple[float, ...]:
    return tuple(float(token) for token in raw.split(",") if token.strip())


class Config:
    """Set up the basic environment config for the toolkit."""

    # Reproducibility
    DEFAULT_SEED = int(os.getenv("EFFNUM_SEED", "20180711"))
    RNG_ALGORITHM = "numpy.random.PCG64"

    # Axiom verification
    TRIALS = int(os.getenv("EFFNUM_TRIALS", "10000"))
    MAX_DIM = int(os.getenv("EFFNUM_MAX_DIM", "64"))
    ALPHA_GRID = _float_list(
        os.getenv("EFFNUM_ALPHA_GRID", "1e-4,0.01,0.1,0.25,0.5,0.75,1.0")
    )
    CONTINUITY_DELTA = float(os.getenv("EFFNUM_CONTINUITY_DELTA", "1e-6"))

    # Localization lab
    LATTICE_SIZES = tuple(
        int(size)
        for size in os.getenv("EFFNUM_SIZES", "64,128,256,512").split(",")
    )
    ENSEMBLE = int(os.getenv("EFFNUM_ENSEMBLE", "32"))

    # Output
    FLOAT_DIGITS = int(os.getenv("EFFNUM_FLOAT_DIGITS", "12"))

    # Logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()


class DevelopmentConfig(Config):
    """Development environment configuration."""

    LOG_LEVEL = "DEBUG"


class ProductionConfig(Config):
    """Production environment configuration."""


class TestingConfig(Config):
    """Testing environment configuration."""

    TRIALS = 400
    MAX_DIM = 16
    ENSEMBLE = 4
    LOG_LEVEL = "WARNING"


config_by_name = {
    "development": DevelopmentConfig,
    "production": ProductionConfig,
    "testing": TestingConfig,
}


def get_config():
    """Return the appropriate configuration object based on environment."""
    env = os.getenv("EFFNUM_ENV", "production")
    return config_by_name.get(env, ProductionConfig)
