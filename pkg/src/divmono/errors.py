"""Exception hierarchy shared by all modules.

Two failure modes are distinguished so the CLI can map them to exit codes:
bad user input (exit 2) versus a violated internal arithmetic assertion
(exit 3), which always indicates a bug.
"""


class InputError(ValueError):
    """Invalid argument supplied by the caller (bad datum, modulus, range)."""


class ArithmeticBug(AssertionError):
    """An exact-divisibility or integrality check failed internally."""
