from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# pipelines that have not converged by this depth are reported incomplete
DEFAULT_REDUCTION_DEPTH = 32


class Settings(BaseSettings):
    # the below can be overriden by .env file
    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )
    enumeration_budget: int = Field(
        default=10_000_000, alias="JORDAN_ENUMERATION_BUDGET", gt=0
    )


settings = Settings()
