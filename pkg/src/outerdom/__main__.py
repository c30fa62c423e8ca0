#!/usr/bin/env python3
"""This is what happens when you do `python -m outerdom`."""

from outerdom.run.cli import app

if __name__ == "__main__":
    app()
