# cli/utils.py

import logging
import os
from typing import Iterable, Optional

import coloredlogs
from dotenv import load_dotenv
from rich.console import Console
from rich.table import Table

from network.nodeset import NodeSet

from .config import LOG_FORMAT, LOG_LEVEL, LOG_LEVEL_ENV

console = Console(stderr=True)


def setup_logger(verbose: bool = False) -> logging.Logger:
    """
    Console logging for the runner. Level: --verbose, else the environment
    (a .env file is honored), else LOG_LEVEL.
    """
    load_dotenv()
    level = "DEBUG" if verbose else os.getenv(LOG_LEVEL_ENV, LOG_LEVEL)
    coloredlogs.install(level=level.upper(), fmt=LOG_FORMAT, stream=console.file)
    return logging.getLogger("cli")


def report_seed(seed: int) -> None:
    console.print(f"seed: {seed}", markup=False, highlight=False)


def report_error(message: str) -> None:
    console.print(f"error: {message}", style="bold red", markup=False, highlight=False, soft_wrap=True)


def report_blocks(title: str, blocks: Iterable[NodeSet], values: Iterable[float], total: Optional[float] = None) -> None:
    table = Table(title=title)
    table.add_column("block", justify="right")
    table.add_column("members")
    table.add_column("v(A)", justify="right")
    for k, (block, value) in enumerate(zip(blocks, values)):
        table.add_row(str(k), " ".join(str(i) for i in block), f"{value:.6g}")
    if total is not None:
        table.add_section()
        table.add_row("", "total", f"{total:.6g}")
    console.print(table)
