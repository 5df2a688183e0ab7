"""YARTS verifier main entry point."""

from .cli import main

main()
