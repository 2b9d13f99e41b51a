"""Configuration management for acm-toolkit."""

import logging
import sys
from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class AcmConfig(BaseSettings):
    """Configuration for acm-toolkit.

    All settings can be overridden via environment variables with ACM_ prefix.
    Example: ACM_NO_COLOR=1
    """

    # =========================================================================
    # Output
    # =========================================================================
    # Disables ANSI styling in CLI output (ACM_NO_COLOR)
    no_color: bool = False
    # Language used by reports when none is requested
    default_lang: str = "en"

    # =========================================================================
    # Model Limits
    # =========================================================================
    # Nested Expression rendering depth before giving up
    expression_depth_limit: int = 32

    # =========================================================================
    # Files and Workers
    # =========================================================================
    # Seconds to wait for the .lock sidecar when writing documents
    lock_timeout: float = 5.0
    # Documents processed concurrently when several files are given
    max_workers: int = 4

    # =========================================================================
    # MCP Server Settings
    # =========================================================================
    server_name: str = "acm-toolkit"
    server_host: str = "127.0.0.1"
    server_port: int = 8765
    transport: Literal["stdio", "sse", "streamable-http"] = "stdio"

    # =========================================================================
    # Logging
    # =========================================================================
    log_level: str = "WARNING"
    # Enable structured JSON audit events for commands and tool calls
    audit_log: bool = False

    # =========================================================================
    # Validators
    # =========================================================================
    @field_validator("expression_depth_limit")
    @classmethod
    def _depth_range(cls, v: int) -> int:
        if not (1 <= v <= 256):
            raise ValueError(f"expression_depth_limit must be 1-256, got {v}")
        return v

    @field_validator("lock_timeout")
    @classmethod
    def _positive_lock_timeout(cls, v: float) -> float:
        if v <= 0:
            raise ValueError(f"lock_timeout must be > 0 seconds, got {v}")
        return v

    @field_validator("max_workers")
    @classmethod
    def _workers_range(cls, v: int) -> int:
        if not (1 <= v <= 64):
            raise ValueError(f"max_workers must be 1-64, got {v}")
        return v

    @field_validator("server_port")
    @classmethod
    def _port_range(cls, v: int) -> int:
        if not (1 <= v <= 65535):
            raise ValueError(f"server_port must be 1-65535, got {v}")
        return v

    @field_validator("default_lang")
    @classmethod
    def _lang_present(cls, v: str) -> str:
        if not v.strip():
            raise ValueError("default_lang must be a non-empty language tag")
        return v

    @field_validator("log_level")
    @classmethod
    def _valid_log_level(cls, v: str) -> str:
        valid = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in valid:
            raise ValueError(f"log_level must be one of {valid}, got {v}")
        return v.upper()

    model_config = {
        "env_prefix": "ACM_",
        "env_file": ".env",
        "extra": "ignore",
    }


def configure_logging(level: str | None = None) -> None:
    """Send log records to stderr so stdout only carries command output."""
    logging.basicConfig(
        level=getattr(logging, (level or config.log_level).upper()),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


# Global configuration instance
config = AcmConfig()
