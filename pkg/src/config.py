import logging
import os
from typing import Any, Dict, Optional, Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, Field


DEFAULT_CONFIG: Dict[str, Any] = {
    "node_budget": 100_000_000,
    "time_budget": None,
    "workers": 1,
    "strict": False,
    "suite_count": 500,
    "seed": 2025,
    "sizes": "6..48",
    "log_level": "WARNING",
}


class Settings(BaseModel):
    """Runtime settings, read from the environment (and .env) with defaults"""

    node_budget: int = Field(DEFAULT_CONFIG["node_budget"], gt=0, description="Exact-solver node budget")
    time_budget: Optional[float] = Field(None, gt=0, description="Exact-solver wall-clock budget in seconds")
    workers: int = Field(1, ge=1, description="Worker processes for top-level solver branching")
    strict: bool = Field(False, description="Raise instead of completing a failed construction by search")
    suite_count: int = Field(500, gt=0, description="Generated instances per proven table cell")
    seed: int = Field(2025, description="Base seed for generated suites")
    sizes: Tuple[int, int] = Field((6, 48), description="Inclusive vertex-count range of generated suites")
    log_level: str = Field("WARNING", description="Logging level name")


def parse_sizes(text: str) -> Tuple[int, int]:
    """Parse 'a..b' (or a single 'a') into an inclusive range"""
    text = text.strip()
    if ".." in text:
        low, high = text.split("..", 1)
        low_n, high_n = int(low), int(high)
    else:
        low_n = high_n = int(text)
    if low_n < 1 or high_n < low_n:
        raise ValueError(f"invalid size range {text!r}")
    return low_n, high_n


def _as_bool(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "yes", "on")


def load_settings(config: Optional[Dict[str, Any]] = None) -> Settings:
    """Build settings from defaults, then the config dict, then PACKING_* env vars"""
    load_dotenv()
    config = {**DEFAULT_CONFIG, **(config or {})}

    time_budget = os.getenv("PACKING_TIME_BUDGET", config.get("time_budget"))
    return Settings(
        node_budget=int(os.getenv("PACKING_NODE_BUDGET", config["node_budget"])),
        time_budget=float(time_budget) if time_budget not in (None, "") else None,
        workers=int(os.getenv("PACKING_WORKERS", config["workers"])),
        strict=_as_bool(str(os.getenv("PACKING_STRICT", config["strict"]))),
        suite_count=int(os.getenv("PACKING_SUITE_COUNT", config["suite_count"])),
        seed=int(os.getenv("PACKING_SEED", config["seed"])),
        sizes=parse_sizes(str(os.getenv("PACKING_SIZES", config["sizes"]))),
        log_level=str(os.getenv("PACKING_LOG_LEVEL", config["log_level"])).upper(),
    )


def configure_logging(level: str = "WARNING") -> None:
    """Attach a single stream handler to the package root logger"""
    root = logging.getLogger("src")
    root.setLevel(getattr(logging, level.upper(), logging.WARNING))
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        root.addHandler(handler)
