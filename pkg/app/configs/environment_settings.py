from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """CY2_* environment overrides; unset values fall back to config.yml"""
    model_config = SettingsConfigDict(env_prefix="CY2_", extra="ignore")

    seed: Optional[int] = None
    trials: Optional[int] = None
    rational_bound: Optional[int] = None
    log_level: Optional[str] = None
    config: str = "config.yml"


def get_settings() -> Settings:
    """Read the environment at call time so tests can patch it"""
    return Settings()
