"""Desk-scale laboratory for key-agreement breakers and program-pair costs."""

__version__ = "0.1.0"

from .bitstrings import (  # noqa: F401
    Bits,
    PairCode,
    decode_pair,
    encode_pair,
    pad_pair,
    pair_length,
)
from .toyvm import (  # noqa: F401
    INFINITE,
    InteractionOutcome,
    VmLimits,
    interactive_complexity,
    plain_complexity,
    run_interactive,
    run_single,
)
