"""Triality workbench for the Weyl group W(D4)."""

import json

from ._core import (
    TrialityError,
    hilbert_symbol,
    hurwitz_closed,
    is_witt_equivalent,
    resolvent_pair,
    run_cli,
    triality_laws_hold,
    triality_on_rows,
    wd4_order,
)
from ._core import atlas_json as _atlas_json

__all__ = [
    "TrialityError",
    "atlas",
    "hilbert_symbol",
    "hurwitz_closed",
    "is_witt_equivalent",
    "resolvent_pair",
    "run_cli",
    "triality_laws_hold",
    "triality_on_rows",
    "wd4_order",
]


def atlas():
    """The 98 subgroup classes as dictionaries, in table row order."""
    return json.loads(_atlas_json())
