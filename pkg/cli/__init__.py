"""Command-line front end."""
from .bench import BenchRow, run_bench
from .commands import COMMANDS, CommandOutput
from .main import build_parser, main

__all__ = [
    "BenchRow",
    "run_bench",
    "COMMANDS",
    "CommandOutput",
    "build_parser",
    "main",
]
