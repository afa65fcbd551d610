"""
Application entry point.
"""

import sys

from bootstrapper.app_factory import run_cli


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
