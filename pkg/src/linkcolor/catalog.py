"""Named example diagrams.

Small codes used across the tests and demos. Labels follow each
diagram's natural traversal; none of the entries is canonical in any
deeper sense, they are just fixed small instances with known invariants.
"""

from __future__ import annotations

from .diagram import Diagram, parse_diagram

__all__ = ["CODES", "load", "names"]

CODES: dict[str, str] = {
    # One crossing-free circle.
    "unknot": "O 1",
    # Unknot with a single curl.
    "kink": "X(1,2,2,1)",
    # Two crossing-free circles.
    "unlink2": "O 2",
    "hopf": "X(1,3,2,4);X(3,1,4,2)",
    "trefoil": "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)",
    "figure_eight": "X(2,1,4,5);X(5,6,7,3);X(6,4,1,8);X(8,2,3,7)",
    # Granny knot: two like-handed trefoil twist regions in series.
    "granny": "X(2,1,12,3);X(4,2,3,5);X(1,4,5,11);X(7,6,11,8);X(9,7,8,10);X(6,9,10,12)",
    # (2,4) torus link: one four-crossing twist region.
    "t2_4": "X(2,1,8,3);X(4,2,3,5);X(6,4,5,7);X(1,6,7,8)",
    # Trefoil with an extra curl; same knot, different diagram.
    "trefoil_kink": "X(1,4,2,5);X(3,6,4,1);X(10,2,6,3);X(5,9,9,10)",
}


def load(name: str) -> Diagram:
    try:
        return parse_diagram(CODES[name])
    except KeyError:
        raise KeyError(f"unknown diagram {name!r}; see names()") from None


def names() -> tuple[str, ...]:
    return tuple(CODES)
