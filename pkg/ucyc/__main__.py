"""Run the command line interface with `python -m ucyc`."""

from .cli import main

raise SystemExit(main())
