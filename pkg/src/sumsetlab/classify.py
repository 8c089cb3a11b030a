"""Decide extremality and match extremal pairs against the characterized
families, up to the allowed transformation groups.

Two normalization pipelines are implemented:

* lines mode (diagonal maps + translations): the x-projections must be
  arithmetic progressions with one shared difference, every vertical section
  an AP with one shared positive difference; after rescaling both axes the
  column minima/maxima must be APs with shared differences d and c.  Success
  means both sets are standard trapezoids with common slopes.

* sections mode (maps (x, y) -> (alpha x + gamma y, beta y), translations,
  and the four axis reflections): levels and rows are normalized the same
  way, then candidate shears are enumerated from the consecutive row-minimum
  and row-maximum differences observed in either set.  Shear candidates plus
  reflections are exhaustive here because every family's row-extreme
  sequences are piecewise arithmetic with a flat piece; the exhaustive sweep
  cross-validates this (an escape would surface as ExtremalUnclassified).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .bounds import BoundMode, bound
from .core import (AffineMap2D, Point2, PointSet2D, Rational,
                   arithmetic_progression_of, collinear_direction,
                   cover_stats, rat, rat_str)
from .errors import EmptySet, HypothesisViolated, NotCollinear
from .families import CaseCSpec, EpsilonSpec, TrapezoidSpec, gen_case_c, gen_eps_trapezoid, gen_trapezoid


class Verdict(Enum):
    NOT_EXTREMAL = "NotExtremal"
    ONE_DIMENSIONAL = "OneDimensional"
    TRAPEZOID_PAIR = "TrapezoidPair"
    EPS_TRAPEZOID_PAIR = "EpsTrapezoidPair"
    CASE_C_PAIR = "CaseCPair"
    EXTREMAL_UNCLASSIFIED = "ExtremalUnclassified"


@dataclass(frozen=True)
class RowProfile:
    """Per-level records: size, extreme x-values, and the row's common
    difference (None for singletons and for rows that are not progressions)."""

    levels: tuple
    counts: tuple
    min_xs: tuple
    max_xs: tuple
    common_differences: tuple

    @classmethod
    def of(cls, s: PointSet2D) -> "RowProfile":
        rows = s.rows()
        levels = tuple(sorted(rows))
        diffs = []
        for v in levels:
            ok, d = _ap_difference(rows[v])
            diffs.append(d if ok else None)
        return cls(
            levels=levels,
            counts=tuple(len(rows[v]) for v in levels),
            min_xs=tuple(rows[v][0] for v in levels),
            max_xs=tuple(rows[v][-1] for v in levels),
            common_differences=tuple(diffs),
        )


@dataclass(frozen=True)
class TrapezoidZones:
    """The three level intervals of a compression-normalized trapezoid
    (integer slopes c <= 0 <= d): the ramp governed by d, the full-width
    middle band, and the ramp governed by c."""

    i1: tuple[int, int]
    i2: tuple[int, int]
    i3: tuple[int, int]
    spec: TrapezoidSpec

    @classmethod
    def of(cls, spec: TrapezoidSpec) -> "TrapezoidZones":
        if not (isinstance(spec.c, int) and isinstance(spec.d, int)
                and spec.c <= 0 <= spec.d):
            raise HypothesisViolated("zones need integer slopes c <= 0 <= d")
        m, h, c, d = spec.m, spec.h, spec.c, spec.d
        return cls(
            i1=(0, (m - 1) * d),
            i2=((m - 1) * d, h - 1 + (m - 1) * c),
            i3=(h - 1 + (m - 1) * c, h - 1),
            spec=spec,
        )

    def expected_row_count(self, level: int) -> int:
        """The piecewise row-cardinality profile: a d-ramp, a flat band of
        width m, and a c-ramp."""
        m, h, c, d = self.spec.m, self.spec.h, self.spec.c, self.spec.d
        if not self.i1[0] <= level <= self.i3[1]:
            return 0
        if self.i2[0] <= level <= self.i2[1]:
            return m
        if level < self.i2[0]:
            return level // d + 1
        return (h - 1 - level) // (-c) + 1


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    details: dict = field(default_factory=dict)
    witness_map: Optional[AffineMap2D] = None

    def to_json_dict(self) -> dict:
        out = {"verdict": self.verdict.value}
        out.update(_jsonify(self.details))
        if self.witness_map is not None:
            out["witness_map"] = self.witness_map.to_json_dict()
        return out


def _jsonify(value):
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, (TrapezoidSpec, EpsilonSpec, CaseCSpec, AffineMap2D)):
        return value.to_json_dict()
    if isinstance(value, Fraction):
        return rat_str(value)
    if isinstance(value, Point2):
        return [rat_str(value.x), rat_str(value.y)]
    return value


def is_extremal(a: PointSet2D, b: PointSet2D, mode: BoundMode) -> bool:
    """True exactly when the pair attains the mode's lower bound."""
    return bound(mode, a, b).extremal


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

def _ap_difference(values: list) -> tuple[bool, Optional[Rational]]:
    if len(values) <= 1:
        return True, None
    d = values[1] - values[0]
    return all(values[k + 1] - values[k] == d for k in range(len(values) - 1)), d


def _shared_section_difference(sets: list[PointSet2D], axis_rows: bool) -> Optional[Rational]:
    """One common difference making every section of every set an AP, or None."""
    diffs = set()
    for s in sets:
        groups = s.rows() if axis_rows else s.columns()
        for vals in groups.values():
            ok, d = _ap_difference(vals)
            if not ok:
                return None
            if d is not None:
                diffs.add(d)
    if len(diffs) > 1:
        return None
    return diffs.pop() if diffs else rat(1)


def _trapezoid_spec_of(s: PointSet2D) -> Optional[tuple[TrapezoidSpec, Point2]]:
    """Recognize s as a translate of a materialized trapezoid.

    Returns (spec, anchor) with s == gen_trapezoid(spec) + anchor, requiring
    consecutive integer x-positions, difference-1 columns, and arithmetic
    column minima (difference d) and maxima (difference c).
    """
    cols = s.columns()
    xs = sorted(cols)
    x0 = xs[0]
    if any(x - x0 != k for k, x in enumerate(xs)):
        return None
    mins, maxs = [], []
    for x in xs:
        ys = cols[x]
        ok, d = _ap_difference(ys)
        if not ok or (d is not None and d != 1):
            return None
        mins.append(ys[0])
        maxs.append(ys[-1])
    okd, d = _ap_difference(mins)
    okc, c = _ap_difference(maxs)
    if not (okd and okc):
        return None
    m = len(xs)
    h = int(maxs[0] - mins[0]) + 1
    d = rat(0) if d is None else d
    c = rat(0) if c is None else c
    try:
        spec = TrapezoidSpec(m, h, c, d)
    except Exception:
        return None
    return spec, Point2(x0, mins[0])


# ---------------------------------------------------------------------------
# one-dimensional characterization
# ---------------------------------------------------------------------------

def classify_1d(a: PointSet2D, b: PointSet2D) -> Classification:
    """The torsion-free one-dimensional case: |A+B| >= |A| + |B| - 1 with
    equality iff min(|A|, |B|) = 1 or both are APs with a common difference."""
    if len(a) == 0 or len(b) == 0:
        raise EmptySet("classify_1d needs nonempty sets")
    da, db = collinear_direction(a), collinear_direction(b)
    if da is None or db is None:
        raise NotCollinear("classify_1d needs collinear inputs")
    rep = bound(BoundMode.ONE_DIMENSIONAL, a, b)  # raises ModeMismatch if not parallel
    min_case = min(len(a), len(b)) == 1
    delta_a = arithmetic_progression_of(a)
    delta_b = arithmetic_progression_of(b)
    ap_case = (
        delta_a is not None and delta_b is not None
        and (len(a) == 1 or len(b) == 1 or delta_a == delta_b)
    )
    return Classification(
        verdict=Verdict.ONE_DIMENSIONAL,
        details={
            "equality": rep.extremal,
            "min_case": min_case,
            "ap_case": ap_case,
            "common_difference": delta_a if (ap_case and len(a) > 1) else (delta_b if ap_case else None),
        },
    )


# ---------------------------------------------------------------------------
# lines-mode characterization (diagonal group)
# ---------------------------------------------------------------------------

def classify_thm2(a: PointSet2D, b: PointSet2D) -> Classification:
    if len(a) == 0 or len(b) == 0:
        raise EmptySet("classify_thm2 needs nonempty sets")
    if collinear_direction(a) is not None or collinear_direction(b) is not None:
        return classify_1d(a, b)
    if not is_extremal(a, b, BoundMode.LINES_GS):
        return Classification(Verdict.NOT_EXTREMAL)

    # (1) x-projections: APs with one shared difference alpha
    ok_a, alpha_a = _ap_difference(a.xs())
    ok_b, alpha_b = _ap_difference(b.xs())
    alphas = {v for v in (alpha_a, alpha_b) if v is not None}
    if not (ok_a and ok_b) or len(alphas) != 1:
        return Classification(Verdict.EXTREMAL_UNCLASSIFIED)
    alpha = alphas.pop()

    inv_alpha = Fraction(1) / alpha
    a1 = PointSet2D(Point2(p.x * inv_alpha, p.y) for p in a)
    b1 = PointSet2D(Point2(p.x * inv_alpha, p.y) for p in b)

    # (2) vertical sections: APs with one shared positive difference beta
    beta = _shared_section_difference([a1, b1], axis_rows=False)
    if beta is None:
        return Classification(Verdict.EXTREMAL_UNCLASSIFIED)
    inv_beta = Fraction(1) / beta
    a2 = PointSet2D(Point2(p.x, p.y * inv_beta) for p in a1)
    b2 = PointSet2D(Point2(p.x, p.y * inv_beta) for p in b1)

    # (3) column extrema: shared slopes d (minima) and c (maxima)
    ra = _trapezoid_spec_of(a2)
    rb = _trapezoid_spec_of(b2)
    if ra is None or rb is None:
        return Classification(Verdict.EXTREMAL_UNCLASSIFIED)
    spec_a, anchor_a = ra
    spec_b, anchor_b = rb
    if spec_a.c != spec_b.c or spec_a.d != spec_b.d:
        return Classification(Verdict.EXTREMAL_UNCLASSIFIED)
    witness = AffineMap2D.diagonal(inv_alpha, inv_beta)
    return Classification(
        verdict=Verdict.TRAPEZOID_PAIR,
        details={"spec_a": spec_a, "spec_b": spec_b,
                 "anchor_a": anchor_a, "anchor_b": anchor_b},
        witness_map=witness,
    )


# ---------------------------------------------------------------------------
# sections-mode characterization (upper-triangular group + reflections)
# ---------------------------------------------------------------------------

def _normalize_levels(s: PointSet2D, dy: Rational) -> PointSet2D:
    y0 = min(p.y for p in s)
    inv = Fraction(1) / dy
    return PointSet2D(Point2(p.x, (p.y - y0) * inv) for p in s)


def _integer_form(s: PointSet2D) -> Optional[PointSet2D]:
    """Translate so min x = min y = 0 and require integer coordinates."""
    x0 = min(p.x for p in s)
    y0 = min(p.y for p in s)
    pts = []
    for p in s:
        x, y = p.x - x0, p.y - y0
        if Fraction(x).denominator != 1 or Fraction(y).denominator != 1:
            return None
        pts.append(Point2(int(x), int(y)))
    return PointSet2D(pts)


def _reflect(s: PointSet2D, rx: bool, ry: bool) -> PointSet2D:
    return PointSet2D(Point2(-p.x if rx else p.x, -p.y if ry else p.y) for p in s)


def _match_trapezoid(s: PointSet2D, mode_m: int) -> Optional[TrapezoidSpec]:
    r = _trapezoid_spec_of(s)
    if r is None:
        return None
    spec, _ = r
    if spec.m != mode_m:
        return None
    return spec


def _match_eps(s: PointSet2D, mode_m: int) -> Optional[EpsilonSpec]:
    """Recognize s (integer form, min x = min y = 0) as a shifted trapezoid."""
    rows = s.rows()
    levels = sorted(rows)
    height = len(levels)
    if levels != list(range(height)):
        return None
    if mode_m < 2:
        return None
    counts = {v: len(rows[v]) for v in levels}
    c_max = (height - 1) // (mode_m - 1)
    for c in range(0, c_max + 1):
        h = height - (mode_m - 1) * c
        if h < 1:
            continue
        for d in range(0, height + 1):
            if c == 0 and d == 0:
                continue
            try:
                base_spec = TrapezoidSpec(mode_m, h, c, d)
            except Exception:
                continue
            base = gen_trapezoid(base_spec)
            if len(base) != len(s):
                continue
            base_rows = base.rows()
            if sorted(base_rows) != levels:
                continue
            if any(len(base_rows[v]) != counts[v] for v in levels):
                continue
            shifts = [rows[v][0] - base_rows[v][0] for v in levels]
            shifts = [sh - shifts[0] for sh in shifts]
            if any(sh < 0 for sh in shifts):
                continue
            if any(shifts[i + 1] - shifts[i] not in (0, 1) for i in range(height - 1)):
                continue
            ones = frozenset(i for i in range(1, height) if shifts[i] - shifts[i - 1] == 1)
            try:
                eps_spec = EpsilonSpec(base_spec, ones)
            except Exception:
                continue
            cand = _integer_form(gen_eps_trapezoid(eps_spec))
            if cand == s:
                return eps_spec
    return None


def _match_case_c(sa: PointSet2D, sb: PointSet2D, m: int, n: int) -> Optional[CaseCSpec]:
    height_a = int(max(p.y for p in sa)) + 1
    k = height_a - 4 * m + 4
    if k < 1 or k % 2 == 0:
        return None
    try:
        spec = CaseCSpec(m, n, k)
    except Exception:
        return None
    ga, gb = gen_case_c(spec)
    if _integer_form(ga) == sa and _integer_form(gb) == sb:
        return spec
    return None


def _normalized_candidates(a2: PointSet2D, b2: PointSet2D):
    """Yield (a3, b3, rx, ry, gamma) for every reflection and candidate shear
    that lands both sets on integer coordinates."""
    for rx, ry in ((False, False), (True, False), (False, True), (True, True)):
        ar = _reflect(a2, rx, ry)
        br = _reflect(b2, rx, ry)
        candidates = {rat(0)}
        for s in (ar, br):
            profile = RowProfile.of(s)
            for i in range(len(profile.levels) - 1):
                step = profile.levels[i + 1] - profile.levels[i]
                candidates.add(rat(Fraction(profile.min_xs[i + 1] - profile.min_xs[i]) / step))
                candidates.add(rat(Fraction(profile.max_xs[i + 1] - profile.max_xs[i]) / step))
        for gamma in sorted(candidates, key=lambda v: (abs(Fraction(v)), Fraction(v))):
            a3 = _integer_form(PointSet2D(Point2(p.x - gamma * p.y, p.y) for p in ar))
            b3 = _integer_form(PointSet2D(Point2(p.x - gamma * p.y, p.y) for p in br))
            if a3 is None or b3 is None:
                continue
            yield a3, b3, rx, ry, gamma


def _match_family(tag: str, a3: PointSet2D, b3: PointSet2D, m: int, n: int) -> Optional[dict]:
    if tag == "a":
        ta = _match_trapezoid(a3, m)
        tb = _match_trapezoid(b3, n)
        if ta is not None and tb is not None and ta.c == tb.c and ta.d == tb.d:
            return {"spec_a": ta, "spec_b": tb}
        return None
    if tag == "b":
        for sa, sb, mm, nn, swapped in ((a3, b3, m, n, False), (b3, a3, n, m, True)):
            eps = _match_eps(sa, mm)
            if eps is not None:
                partner = _match_trapezoid(sb, nn)
                want_h = (nn - 1) * int(eps.base.d) + 1
                if partner is not None and partner.h == want_h \
                        and partner.c == eps.base.c and partner.d == eps.base.d:
                    return {"eps_spec": eps, "partner": partner, "roles_swapped": swapped}
        return None
    for sa, sb, mm, nn, swapped in ((a3, b3, m, n, False), (b3, a3, n, m, True)):
        cc = _match_case_c(sa, sb, mm, nn)
        if cc is not None:
            return {"spec": cc, "roles_swapped": swapped}
    return None


def classify_thm3(a: PointSet2D, b: PointSet2D) -> Classification:
    if len(a) == 0 or len(b) == 0:
        raise EmptySet("classify_thm3 needs nonempty sets")
    sa, sb = cover_stats(a), cover_stats(b)
    m, n = sa.max_horizontal_section, sb.max_horizontal_section
    if m < 2 or n < 2:
        raise HypothesisViolated("sections-mode characterization needs m, n >= 2 "
                                 "(the m = 1 regime admits wild extremal pairs)")
    if not (sa.is_two_dimensional and sb.is_two_dimensional):
        raise HypothesisViolated("sections-mode characterization needs two-dimensional sets")
    if not is_extremal(a, b, BoundMode.SECTIONS_GS):
        return Classification(Verdict.NOT_EXTREMAL)

    # (1) level sets: APs with one shared difference
    ok_a, dy_a = _ap_difference(a.ys())
    ok_b, dy_b = _ap_difference(b.ys())
    dys = {v for v in (dy_a, dy_b) if v is not None}
    if not (ok_a and ok_b) or len(dys) != 1:
        return Classification(Verdict.EXTREMAL_UNCLASSIFIED)
    dy = dys.pop()
    a1 = _normalize_levels(a, dy)
    b1 = _normalize_levels(b, dy)

    # (2) rows: APs with one shared difference
    dx = _shared_section_difference([a1, b1], axis_rows=True)
    if dx is None:
        return Classification(Verdict.EXTREMAL_UNCLASSIFIED)
    inv_dx = Fraction(1) / dx
    a2 = PointSet2D(Point2(p.x * inv_dx, p.y) for p in a1)
    b2 = PointSet2D(Point2(p.x * inv_dx, p.y) for p in b1)

    # (3) families in specificity order, each searched over every reflection
    # and candidate shear.  The families can overlap up to the group (a
    # standard pair may be a shifted pair in sheared coordinates), so the
    # tie-break runs at the orbit level to keep verdicts group-invariant;
    # any further families the orbit admits are reported in also_matches.
    found_tag = None
    details: dict = {}
    transform = None
    for tag in ("a", "b", "c"):
        for a3, b3, rx, ry, gamma in _normalized_candidates(a2, b2):
            got = _match_family(tag, a3, b3, m, n)
            if got is not None:
                found_tag = tag
                details = dict(got)
                transform = (rx, ry, gamma)
                break
        if found_tag:
            break
    if not found_tag:
        return Classification(Verdict.EXTREMAL_UNCLASSIFIED)

    extras = [t for t in ("a", "b", "c") if t != found_tag and any(
        _match_family(t, a3, b3, m, n) is not None
        for a3, b3, _, _, _ in _normalized_candidates(a2, b2))]
    if extras:
        details["also_matches"] = extras
    rx, ry, gamma = transform
    details["reflection"] = {"x": rx, "y": ry}
    # witness: shear(gamma) . reflection . diag(1/dx, 1/dy), linear part
    refl = AffineMap2D.diagonal(-1 if rx else 1, -1 if ry else 1)
    shear = AffineMap2D.upper_triangular(1, -gamma, 1)
    witness = shear.compose(refl).compose(
        AffineMap2D.diagonal(inv_dx, Fraction(1) / dy))
    verdict = {"a": Verdict.TRAPEZOID_PAIR,
               "b": Verdict.EPS_TRAPEZOID_PAIR,
               "c": Verdict.CASE_C_PAIR}[found_tag]
    return Classification(verdict=verdict, details=details, witness_map=witness)


# ---------------------------------------------------------------------------
# split property of sections-extremal pairs
# ---------------------------------------------------------------------------

def split_check(a: PointSet2D, b: PointSet2D) -> bool:
    """Split both sets at their first full-width levels and test that both
    half-pairs are sections-extremal again (they must be)."""
    sa, sb = cover_stats(a), cover_stats(b)
    m, n = sa.max_horizontal_section, sb.max_horizontal_section
    if m < 2 or n < 2:
        raise HypothesisViolated("split_check needs m, n >= 2")
    if not is_extremal(a, b, BoundMode.SECTIONS_GS):
        raise HypothesisViolated("split_check needs a sections-extremal pair")
    rows_a, rows_b = a.rows(), b.rows()
    t = min(v for v, xs in rows_a.items() if len(xs) == m)
    t_prime = min(v for v, xs in rows_b.items() if len(xs) == n)
    a_minus = PointSet2D(p for p in a if p.y <= t)
    a_plus = PointSet2D(p for p in a if p.y >= t)
    b_minus = PointSet2D(p for p in b if p.y <= t_prime)
    b_plus = PointSet2D(p for p in b if p.y >= t_prime)
    return (is_extremal(a_minus, b_minus, BoundMode.SECTIONS_GS)
            and is_extremal(a_plus, b_plus, BoundMode.SECTIONS_GS))
