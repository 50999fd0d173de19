from typing import Annotated, Literal

from dotenv import load_dotenv
from pydantic import BeforeValidator, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

LogLevel = Annotated[
    Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    BeforeValidator(lambda value: value.upper() if isinstance(value, str) else value),
]


class CertifySettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="QUARTIC_", extra="ignore")

    precision: int = Field(default=12, ge=1, le=200)
    circle_samples: int = Field(default=4096, ge=8)
    crosscheck: bool = True
    oracle_tolerance: float = Field(default=1e-6, gt=0)
    workers: int = Field(default=4, ge=1)
    log_level: LogLevel = "WARNING"


class EnvConfig:
    def __init__(self, env_file: str = ".env"):
        load_dotenv(env_file)
        self.settings = CertifySettings()

    def get(self, key: str):
        return getattr(self.settings, key)
