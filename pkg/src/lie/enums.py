"""
This module defines enumeration types used throughout the engine and the CLI.
"""

from enum import Enum, IntEnum


class Outcome(str, Enum):
    """Outcome of an obstruction check."""

    CONSISTENT = "consistent"
    EXCLUDED = "excluded"


class CheckMode(str, Enum):
    """Which variety class a presentation is checked against."""

    SMOOTH = "smooth"
    SMOOTH_PROPER = "smooth-proper"


class CheckName(str, Enum):
    """Names of the individual checks of the obstruction battery."""

    RELATION_DEGREES = "relation_degrees"
    WEIGHTS = "weights"
    CUP_PAIRING = "cup_pairing"
    MASSEY = "massey"


class MasseyStatus(str, Enum):
    """Status of a Massey triple product."""

    UNDEFINED = "undefined"
    VANISHING = "vanishing"
    NONVANISHING = "nonvanishing"


class ExitCode(IntEnum):
    """Process exit codes of the CLI."""

    OK = 0  # success / consistent
    INPUT_ERROR = 1  # usage or input error
    EXCLUDED = 2  # excluded verdict
    CAP_EXCEEDED = 3  # resource cap exceeded
