#!/usr/bin/env python3
"""Verify every catalog pair and print one row each; extra args go to `lgmirror catalog`."""
import sys

from lgmirror.cli import main

if __name__ == "__main__":
    sys.exit(main(["catalog", *sys.argv[1:]]))
