"""Application settings."""

import pydantic_settings


class Settings(pydantic_settings.BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = pydantic_settings.SettingsConfigDict(
        env_prefix="ANAHITA_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: str = "INFO"

    # Output
    telemetry_filename: str = "telemetry.csv"
    report_filename: str = "report.txt"

    # Perception decimation, in simulation ticks
    vision_decimation: int = 10
    acoustics_decimation: int = 100

    # Onboard camera frames rendered by the mission loop
    camera_width: int = 160
    camera_height: int = 120

    # Parallel scenario runs
    max_jobs: int = 4


settings = Settings()
