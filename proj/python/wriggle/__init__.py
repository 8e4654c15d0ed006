"""Gauss-code virtual tangles and the self-crossing wriggle polynomial.

Tangles travel as codec text ("tangle\\nclosed : O1+ O2+ U1+ U2+\\n"),
polynomials as canonical text ("t1 + t1^-1 - 2") or JSON term arrays.
"""

from wriggle._core import (
    TangleError,
    TangleSyntaxError,
    canonical,
    closure,
    connect,
    extension,
    random_tangle,
    reverse,
    scramble,
    self_crossing_wriggle,
    self_crossing_wriggle_json,
    validate,
    vlk,
    witness_search,
    wriggle_number,
    writhe,
)

__all__ = [
    "TangleError",
    "TangleSyntaxError",
    "canonical",
    "closure",
    "connect",
    "extension",
    "random_tangle",
    "reverse",
    "scramble",
    "self_crossing_wriggle",
    "self_crossing_wriggle_json",
    "validate",
    "vlk",
    "witness_search",
    "wriggle_number",
    "writhe",
]
