from __future__ import annotations

import logging
import sys

from app.cli import main as cli_main


def main() -> None:
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
