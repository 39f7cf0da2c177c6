"""Built-in example atlases used by the tests, demos and CLI.

Four tiny models cover the interesting degenerate and non-degenerate shapes:
a line with one or two marked points, the coordinate triangle in the plane,
and a genus-one curve with one marked point (the one whose weight rows are
not generated by divisor classes alone).
"""

from __future__ import annotations

from .atlas import StrataAtlas, Stratum, generic_arrangement
from .errors import BadParams
from .linalg import RationalMatrix, vector
from .rings import elliptic_curve_ring, truncated_polynomial_ring

BUILTIN_NAMES = ("p1_1pt", "p1_2pts", "triangle", "elliptic_1pt")


def elliptic_with_point() -> StrataAtlas:
    """A genus-one curve and one marked point as the divisor."""
    x = Stratum(indices=(), label="", ring=elliptic_curve_ring())
    pt = Stratum(indices=(0,), label="", ring=truncated_polynomial_ring(0))
    restrictions = {
        (x.key, pt.key): {(0, (0, 0)): RationalMatrix([[1]])},
    }
    gysin = {
        (pt.key, x.key): {(0, (0, 0)): RationalMatrix([[1]])},
    }
    divisor_classes = {(0, x.key): vector([1])}
    return StrataAtlas(("P0",), [x, pt], restrictions, gysin, divisor_classes)


def builtin_atlas(name: str) -> StrataAtlas:
    if name == "p1_1pt":
        return generic_arrangement(1, 1)
    if name == "p1_2pts":
        return generic_arrangement(1, 2)
    if name == "triangle":
        return generic_arrangement(2, 3)
    if name == "elliptic_1pt":
        return elliptic_with_point()
    raise BadParams(f"unknown fixture {name!r}; have {', '.join(BUILTIN_NAMES)}")
