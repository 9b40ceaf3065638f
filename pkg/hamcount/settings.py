from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="HAMCOUNT_", env_file=".env", extra="ignore")

    # Worker processes for subset-partitioned identity sums; --threads wins over this
    THREADS: int = 1
    PARALLEL_CHUNKS_PER_WORKER: int = 4

    # Enumeration limits. Oracles refuse above these instead of running for hours.
    BRUTE_CAP: int = 10      # n! loops
    FUNCTION_CAP: int = 8    # n^n loops
    SYMBOLIC_CAP: int = 6    # sym_det / sym_per / listings
    IDENTITY_CAP: int = 5    # sym_hc_identity_expand
    DERIVATIVE_CAP: int = 5  # derivative forms

    # Random matrices for verify/bench
    SEED: int = 20240611
    ENTRY_BOUND: int = 9
    VERIFY_SAMPLES: int = 500

    LOG_LEVEL: LogLevel = "WARNING"

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def _upper_level(cls, v):
        return v.upper() if isinstance(v, str) else v

settings = Settings()  # loads from env/.env
