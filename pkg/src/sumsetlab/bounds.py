"""Sumset lower bounds and the sequence-averaging inequality behind them.

Four bound modes are evaluated exactly:

* lines:      m, n are the vertical line-cover counts of A and B,
               rhs = (|A|/m + |B|/n - 1)(m + n - 1);
* sections:   same rhs, but m, n are the maximal horizontal sections;
* doubling:   B must equal A, rhs = (2|A|/m - 1)(2m - 1) with m the
               vertical line-cover count;
* 1d:         both sets collinear on parallel lines, rhs = |A| + |B| - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import (PointSet2D, Rational, collinear_direction, cover_stats,
                   minkowski_sum, parallel_directions, rat, rat_str)
from .errors import EmptySet, ModeMismatch


class BoundMode(Enum):
    LINES_GS = "lines"
    SECTIONS_GS = "sections"
    DOUBLING = "doubling"
    ONE_DIMENSIONAL = "1d"


@dataclass(frozen=True)
class BoundReport:
    """Both sides of a sumset lower bound, with the exact gap."""

    mode: BoundMode
    m: int
    n: int
    lhs: Rational
    rhs: Rational
    gap: Rational
    extremal: bool

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "m": self.m,
            "n": self.n,
            "lhs": rat_str(self.lhs),
            "rhs": rat_str(self.rhs),
            "gap": rat_str(self.gap),
            "extremal": self.extremal,
        }


def mode_mn(mode: BoundMode, a: PointSet2D, b: PointSet2D) -> tuple[int, int]:
    """The (m, n) pair a mode plugs into its right-hand side."""
    sa, sb = cover_stats(a), cover_stats(b)
    if mode is BoundMode.LINES_GS or mode is BoundMode.DOUBLING:
        return sa.vertical_line_count, sb.vertical_line_count
    if mode is BoundMode.SECTIONS_GS:
        return sa.max_horizontal_section, sb.max_horizontal_section
    return 1, 1  # one-dimensional: each set lies on a single line


def bound(mode: BoundMode, a: PointSet2D, b: PointSet2D) -> BoundReport:
    """Evaluate the chosen lower bound exactly; lhs is |A+B| by enumeration."""
    if len(a) == 0 or len(b) == 0:
        raise EmptySet("bound needs nonempty sets")
    if mode is BoundMode.DOUBLING and a != b:
        raise ModeMismatch("doubling mode requires B = A")
    if mode is BoundMode.ONE_DIMENSIONAL:
        da, db = collinear_direction(a), collinear_direction(b)
        if da is None or db is None:
            raise ModeMismatch("1d mode requires both sets collinear")
        if not parallel_directions(da, db):
            raise ModeMismatch("1d mode requires the two lines to be parallel")

    m, n = mode_mn(mode, a, b)
    if mode is BoundMode.DOUBLING:
        rhs = (2 * Fraction(len(a), m) - 1) * (2 * m - 1)
    elif mode is BoundMode.ONE_DIMENSIONAL:
        rhs = Fraction(len(a) + len(b) - 1)
    else:
        rhs = (Fraction(len(a), m) + Fraction(len(b), n) - 1) * (m + n - 1)
    lhs = Fraction(len(minkowski_sum(a, b)))
    gap = lhs - rhs
    return BoundReport(mode, m, n, rat(lhs), rat(rhs), rat(gap), gap == 0)


def freiman_threshold_rhs(cardinality: int, m: int) -> Rational:
    """The doubling threshold (4 - 2/(m+1))·k - (2m+1), as a pure formula.

    Diagnostic only: the covering statement it belongs to has an unspecified
    size threshold which this artifact does not model.
    """
    return rat((4 - Fraction(2, m + 1)) * cardinality - (2 * m + 1))


@dataclass(frozen=True)
class SupportedSequence:
    """Non-negative rational values supported on a finite rational index set."""

    entries: dict

    def __post_init__(self):
        if not self.entries:
            raise EmptySet("SupportedSequence needs a nonempty index set")
        norm = {rat(i): rat(v) for i, v in self.entries.items()}
        if any(v < 0 for v in norm.values()):
            raise ModeMismatch("SupportedSequence values must be non-negative")
        object.__setattr__(self, "entries", norm)

    def indices(self) -> list[Rational]:
        return sorted(self.entries)

    def values_by_index(self) -> list[Rational]:
        return [self.entries[i] for i in self.indices()]

    def mean(self) -> Fraction:
        return Fraction(sum(Fraction(v) for v in self.entries.values()), len(self.entries))


@dataclass(frozen=True)
class AveragingReport:
    """The averaging inequality's quantities for a pair of sequences.

    full_mean is the sum of the pairwise maxima u_t over the index sumset,
    divided by |I| + |J| - 1; u_plus_mean averages only the |I| + |J| - 1
    largest u-values.  full_mean >= u_plus_mean >= rhs always holds, and for
    strictly positive values with min(|I|, |J|) >= 2 equality in the outer
    inequality is equivalent to ap_condition.
    """

    u_values: dict
    u_plus_mean: Rational
    full_mean: Rational
    rhs: Rational
    equality: bool
    ap_condition: bool

    def to_json_dict(self) -> dict:
        return {
            "u_values": {rat_str(t): rat_str(v) for t, v in sorted(self.u_values.items())},
            "u_plus_mean": rat_str(self.u_plus_mean),
            "full_mean": rat_str(self.full_mean),
            "rhs": rat_str(self.rhs),
            "equality": self.equality,
            "ap_condition": self.ap_condition,
        }


def u_values(a: SupportedSequence, b: SupportedSequence) -> dict:
    """u_t = max{a_i + b_j : i + j = t}, defined exactly on the index sumset."""
    out: dict = {}
    for i, av in a.entries.items():
        for j, bv in b.entries.items():
            t = i + j
            s = av + bv
            if t not in out or s > out[t]:
                out[t] = s
    return out


def _shared_difference(values: list) -> tuple[bool, object]:
    """(is an AP, its difference or None when shorter than 2)."""
    if len(values) <= 1:
        return True, None
    d = values[1] - values[0]
    return all(values[k + 1] - values[k] == d for k in range(len(values) - 1)), d


def ap_with_common_difference(*sequences: list) -> bool:
    """Each sequence an AP, and all their differences equal (singletons match any)."""
    diffs = set()
    for seq in sequences:
        ok, d = _shared_difference(seq)
        if not ok:
            return False
        if d is not None:
            diffs.add(d)
    return len(diffs) <= 1


def averaging_report(a: SupportedSequence, b: SupportedSequence) -> AveragingReport:
    u = u_values(a, b)
    k = len(a.entries) + len(b.entries) - 1
    full_mean = Fraction(sum(Fraction(v) for v in u.values()), k)
    largest = sorted(u.items(), key=lambda item: (item[1], item[0]), reverse=True)[:k]
    u_plus_mean = Fraction(sum(Fraction(v) for _, v in largest), k)
    rhs = a.mean() + b.mean()
    ap = ap_with_common_difference(a.indices(), b.indices()) and \
        ap_with_common_difference(a.values_by_index(), b.values_by_index())
    return AveragingReport(
        u_values=u,
        u_plus_mean=rat(u_plus_mean),
        full_mean=rat(full_mean),
        rhs=rat(rhs),
        equality=full_mean == rhs,
        ap_condition=ap,
    )


def chain_diagnostic(a: PointSet2D, b: PointSet2D) -> list[Rational]:
    """The vertical-section inequality chain down to the lines-mode rhs.

    Returns [ |A+B|,
              sum over t of max |A_i + B_{t-i}| over vertical sections,
              sum over t of max (|A_i| + |B_{t-i}| - 1),
              lines-mode rhs ],
    each value >= the next.  A lines-mode extremal pair forces all four equal.
    """
    if len(a) == 0 or len(b) == 0:
        raise EmptySet("chain_diagnostic needs nonempty sets")
    ca, cb = a.columns(), b.columns()
    v1 = Fraction(len(minkowski_sum(a, b)))
    v2 = Fraction(0)
    v3 = Fraction(0)
    for t in sorted({i + j for i in ca for j in cb}):
        best_sum = 0
        best_card = 0
        for i in ca:
            j = t - i
            if j in cb:
                best_sum = max(best_sum, len({y1 + y2 for y1 in ca[i] for y2 in cb[j]}))
                best_card = max(best_card, len(ca[i]) + len(cb[j]) - 1)
        v2 += best_sum
        v3 += best_card
    v4 = (Fraction(len(a), len(ca)) + Fraction(len(b), len(cb)) - 1) * (len(ca) + len(cb) - 1)
    return [rat(v1), rat(v2), rat(v3), rat(v4)]
