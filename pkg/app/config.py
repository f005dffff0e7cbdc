from pydantic_settings import BaseSettings
from functools import lru_cache


class Settings(BaseSettings):
    # Resource caps
    max_basis: int = 200_000
    max_weyl: int = 1_000_000
    max_lambda: int = 250_000

    # Output
    default_format: str = "json"

    # Logging
    log_level: str = "WARNING"

    # App
    app_name: str = "Logarithmic W-algebra Toolkit"
    app_version: str = "1.0.0"

    class Config:
        env_file = ".env"
        env_prefix = "LOGW_"
        case_sensitive = False


@lru_cache()
def get_settings():
    return Settings()
