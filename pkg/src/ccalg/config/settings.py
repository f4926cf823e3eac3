import os
from typing import Optional

from dotenv import load_dotenv


class Settings:
    """Application settings."""

    def __init__(self, env_file: Optional[str] = None):
        load_dotenv(env_file)

        # Identification printed in report headers
        self.app_name = os.getenv("CCALG_APP_NAME", "ccalg")
        self.version = os.getenv("CCALG_VERSION", "0.1.0")

        # Logging configuration
        self.log_level = os.getenv("LOG_LEVEL", "WARNING")
        self.debug_mode = os.getenv("DEBUG", "false").lower() == "true"

        # Computation defaults
        self.threads = max(1, int(os.getenv("CCALG_THREADS", "1")))
        self.truncation = int(os.getenv("CCALG_TRUNCATION", "2"))
        self.output_format = os.getenv("CCALG_FORMAT", "text").lower()
        self.validate_on_load = os.getenv("CCALG_VALIDATE", "true").lower() == "true"


# Singleton instance
settings = Settings()
