"""Horizontal compression: rows become initial segments anchored at x = 0."""

from __future__ import annotations

from fractions import Fraction

from .core import Point2, PointSet2D, Rational, minkowski_sum, rat
from .errors import EmptySet


def compress(x: PointSet2D) -> PointSet2D:
    """Replace each row of x by {0, 1, ..., len-1} at the same level.

    Conserves cardinality, the level set, and every row length; idempotent.
    """
    if len(x) == 0:
        raise EmptySet("compress needs a nonempty set")
    pts = []
    for level, xs in x.rows().items():
        pts.extend(Point2(i, level) for i in range(len(xs)))
    return PointSet2D(pts)


def compression_chain(a: PointSet2D, b: PointSet2D) -> list[Rational]:
    """The horizontal-section chain ending at the compressed sumset size.

    Returns [ |A+B|,
              sum over t of max |A_i + B_j| over rows with i + j = t,
              sum over t of max (|A_i| + |B_j| - 1),
              |compress(A) + compress(B)| ],
    monotone non-increasing, with the last two entries always equal.
    """
    if len(a) == 0 or len(b) == 0:
        raise EmptySet("compression_chain needs nonempty sets")
    ra, rb = a.rows(), b.rows()
    v1 = len(minkowski_sum(a, b))
    v2 = 0
    v3 = 0
    for t in sorted({i + j for i in ra for j in rb}):
        best_sum = 0
        best_card = 0
        for i in ra:
            j = t - i
            if j in rb:
                best_sum = max(best_sum, len({x1 + x2 for x1 in ra[i] for x2 in rb[j]}))
                best_card = max(best_card, len(ra[i]) + len(rb[j]) - 1)
        v2 += best_sum
        v3 += best_card
    v4 = len(minkowski_sum(compress(a), compress(b)))
    return [rat(Fraction(v)) for v in (v1, v2, v3, v4)]
