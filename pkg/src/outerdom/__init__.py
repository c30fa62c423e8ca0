"""
outerdom - local dominating-set approximation on outerplanar graphs.

This file provides:
- Version numbering
- Working-directory and environment loading
- Protocols for the pluggable components (node programs and exact oracles).
"""

__version__ = "1.0.0"

import os
from collections.abc import Container, Sequence
from pathlib import Path
from typing import Any, Protocol

import dotenv

from outerdom.utils.log import logger, set_log_level

package_dir = Path(__file__).resolve().parent

_workdir_cache: Path | None = None


def get_workdir() -> Path:
    """Get the working directory.

    Priority:
    1. OUTERDOM_WORKDIR environment variable
    2. Current working directory
    """
    global _workdir_cache
    if _workdir_cache is None:
        _workdir_cache = Path(os.getenv("OUTERDOM_WORKDIR", ".")).resolve()
    return _workdir_cache


def set_workdir(path: Path | str) -> None:
    """Set the working directory programmatically."""
    global _workdir_cache
    _workdir_cache = Path(path).resolve()
    os.environ["OUTERDOM_WORKDIR"] = str(_workdir_cache)


def get_default_threads() -> int:
    """Worker threads for experiment fan-out (OUTERDOM_THREADS, default 1)."""
    try:
        return max(1, int(os.getenv("OUTERDOM_THREADS", "1")))
    except ValueError:
        return 1


def load_env() -> None:
    """Load environment from {workdir}/.env if it exists."""
    env_file = get_workdir() / ".env"
    if env_file.exists():
        dotenv.load_dotenv(dotenv_path=env_file)
        if level := os.getenv("OUTERDOM_LOG_LEVEL"):
            set_log_level(level.upper())


load_env()


# === Protocols ===


class NodeProgram(Protocol):
    """Protocol for anonymous node programs run by the synchronous simulator.

    Hooks only ever see the node's degree, its own state and the messages indexed by port.
    """

    name: str
    alphabet: Container[Any]

    def init(self, degree: int) -> Any: ...
    def compose(self, round_: int, state: Any) -> Sequence[Any]: ...
    def absorb(self, round_: int, state: Any, received: Sequence[Any]) -> Any: ...
    def decide(self, state: Any) -> bool: ...


class MdsOracle(Protocol):
    """Protocol for exact minimum dominating set solvers."""

    config: Any

    def solve(self, g: Any) -> Any: ...


__all__ = [
    # Protocols
    "NodeProgram",
    "MdsOracle",
    # Path utilities
    "package_dir",
    "get_workdir",
    "set_workdir",
    "get_default_threads",
    "load_env",
    # Version
    "__version__",
    # Logging
    "logger",
]
