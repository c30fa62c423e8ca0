import logging
import os
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

stderr_console = Console(stderr=True, highlight=False)
"""Everything human-facing goes to standard error; standard output carries data only."""


def _setup_root_logger() -> None:
    logger = logging.getLogger("outerdom")
    logger.setLevel(os.getenv("OUTERDOM_LOG_LEVEL", "INFO").upper())
    _handler = RichHandler(
        console=stderr_console,
        show_path=False,
        show_time=False,
        show_level=False,
        markup=True,
    )
    _formatter = logging.Formatter("%(name)s: %(levelname)s: %(message)s")
    _handler.setFormatter(_formatter)
    logger.addHandler(_handler)


def set_log_level(level: int | str) -> None:
    logging.getLogger("outerdom").setLevel(level)


def add_file_handler(path: Path | str, level: int = logging.DEBUG, *, print_path: bool = True) -> None:
    logger = logging.getLogger("outerdom")
    handler = logging.FileHandler(path)
    handler.setLevel(level)
    formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    handler.setFormatter(formatter)
    logger.addHandler(handler)
    if print_path:
        stderr_console.print(f"Logging to '{path}'")


_setup_root_logger()
logger = logging.getLogger("outerdom")


__all__ = ["logger", "stderr_console", "add_file_handler", "set_log_level"]
