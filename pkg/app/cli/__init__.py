# Command-line surface: argument parsing and the five subcommands.
from __future__ import annotations

import logging
from typing import Sequence

from .commands import COMMANDS, EXIT_BUDGET, EXIT_GEOMETRY, EXIT_INPUT, EXIT_OK, run
from .parser import build_parser

__all__ = ["COMMANDS", "EXIT_BUDGET", "EXIT_GEOMETRY", "EXIT_INPUT", "EXIT_OK", "build_parser", "main", "run"]


def main(argv: Sequence[str] | None = None, stdout=None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger("app").setLevel(logging.DEBUG)
    return run(args, stdout=stdout)
