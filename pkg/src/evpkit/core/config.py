import os
from enum import Enum

from pydantic_settings import BaseSettings, SettingsConfigDict

current_file_dir = os.path.dirname(os.path.realpath(__file__))
env_path = os.path.join(current_file_dir, "..", "..", ".env")


class BaseEvpkitSettings(BaseSettings):
    model_config = SettingsConfigDict(env_file=env_path, env_prefix="EVPKIT_", extra="ignore")


class OracleSettings(BaseEvpkitSettings):
    # Number of variables the Fourier-Motzkin eliminator may remove before giving up.
    FM_BUDGET: int = 12
    SCAN_WORKERS: int = 1


class GeometrySettings(BaseEvpkitSettings):
    ROLEWICZ_TRIALS: int = 200
    ROLEWICZ_SEED: int = 0


class LoggingSettings(BaseEvpkitSettings):
    LOG_LEVEL: str = "INFO"
    LOG_FILE: str | None = None


class EnvironmentOption(Enum):
    LOCAL = "local"
    STAGING = "staging"
    PRODUCTION = "production"


class EnvironmentSettings(BaseEvpkitSettings):
    ENVIRONMENT: EnvironmentOption = EnvironmentOption.LOCAL


class Settings(
    OracleSettings,
    GeometrySettings,
    LoggingSettings,
    EnvironmentSettings,
):
    pass


settings = Settings()
