"""Finite checks for generalized Ramsey functions and semisaturated patterns."""

from ._ramsat import *  # noqa: F401,F403
from ._ramsat import __version__, run


def main() -> int:
    import sys

    code, out, err = run(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
