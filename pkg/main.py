#!/usr/bin/env python
"""Entry point for gup-systems CLI."""
from gup_systems.cli import cli

if __name__ == '__main__':
    cli()
