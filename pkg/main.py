"""Entrypoint for the block matching toolkit.

The application lives in the :mod:`blockmatch` package; this file only hands
the command line to :func:`blockmatch.cli.cli_main`.

Run locally:  ``python main.py trajectory --dm 6``
Installed:    ``python -m blockmatch bench --prev a.pgm --cur b.pgm``
"""

from blockmatch.cli import cli_main

if __name__ == "__main__":
    raise SystemExit(cli_main())
