"""Exception types shared across the toolkit.

Every error raised on a documented failure path derives from ScenlibError so
the CLI can map failures to stable exit codes.
"""


class ScenlibError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(ScenlibError, ValueError):
    """Invalid configuration value; the message names the violated bound."""


class OutOfBoundsError(ScenlibError, ValueError):
    """A physical coordinate fell outside the grid; names the offending dimension."""


class GridMismatchError(ScenlibError, ValueError):
    """Two artifacts built on different grids were combined."""


class EmptyLibraryError(ScenlibError, ValueError):
    """An operation requiring a non-empty library received one with W = 0."""


class SupportViolationError(ScenlibError, ValueError):
    """A sampled scenario (or a cell with positive target mass) has zero sampling probability."""
