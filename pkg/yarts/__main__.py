"""
Command-line entry point.

This module makes it possible to use python -m yarts
"""

from .cli import main

main()
