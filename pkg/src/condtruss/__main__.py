"""Allows `python -m condtruss`."""

from .cli import main

if __name__ == "__main__":
    main()
