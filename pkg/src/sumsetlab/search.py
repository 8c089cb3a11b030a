"""Brute-force oracle: enumerate small lattice pairs, assert the bounds
universally, harvest extremal pairs, and cross-check the classifiers.

Enumeration covers the translation-normalized subsets of a W x H grid
(min x = min y = 0); every grid subset is a translate of one of these and
every checked quantity is translation-invariant.  The transformation groups
are deliberately NOT quotiented: classification absorbs equivalence, and raw
enumeration keeps this oracle trivially correct.

The hot loop runs on plain machine integers (points encoded as x*K + y so
vector sums become int sums), which keeps the default 3x3 configuration in
the seconds range; classifiers only see the rare extremal pairs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

from .bounds import BoundMode, bound, chain_diagnostic
from .classify import Verdict, classify_1d, classify_thm2, classify_thm3
from .compression import compression_chain
from .core import (Point2, PointSet2D, collinear_direction, cover_stats,
                   dumps_points, parallel_directions)
from .errors import ConsistencyError, InvalidSpec

OUT_OF_HYPOTHESIS = "OutOfHypothesis"


@dataclass(frozen=True)
class SweepConfig:
    grid_width: int
    grid_height: int
    mode: BoundMode
    max_size_a: Optional[int] = None
    max_size_b: Optional[int] = None
    require_two_dimensional: bool = False
    min_mn: int = 1
    shard_index: int = 0
    shard_count: int = 1
    collect_extremal: bool = False

    def __post_init__(self):
        if self.grid_width < 1 or self.grid_height < 1:
            raise InvalidSpec("grid dimensions must be positive")
        if self.grid_width * self.grid_height > 16:
            raise InvalidSpec("grid too large: subset enumeration is 2^(W*H) "
                              "per side; at most 16 cells are supported")
        if not (0 <= self.shard_index < self.shard_count):
            raise InvalidSpec("need 0 <= shard_index < shard_count")
        if self.min_mn < 1:
            raise InvalidSpec("min_mn must be >= 1")


@dataclass
class SweepReport:
    pairs_checked: int = 0
    violations: list = field(default_factory=list)
    extremal_count: int = 0
    classified_tally: dict = field(default_factory=dict)
    unclassified: list = field(default_factory=list)
    wild_regime_count: int = 0
    extremal_pairs: Optional[list] = None

    def to_json_dict(self) -> dict:
        return {
            "pairs_checked": self.pairs_checked,
            "violations": list(self.violations),
            "extremal_count": self.extremal_count,
            "classified_tally": dict(sorted(self.classified_tally.items())),
            "unclassified": list(self.unclassified),
            "wild_regime_count": self.wild_regime_count,
        }

    @property
    def ok(self) -> bool:
        return not self.violations and not self.unclassified


def encode_pair(a: PointSet2D, b: PointSet2D) -> str:
    """A reproducible two-set record in point-set file syntax."""
    return "# set: A\n" + dumps_points(a) + "# set: B\n" + dumps_points(b)


@dataclass(frozen=True)
class _Subset:
    pts: tuple
    size: int
    lines_m: int
    sections_m: int
    two_dimensional: bool
    direction: Optional[tuple]  # primitive line direction, (0, 0) wildcard, or None


def _analyze(pts: tuple) -> _Subset:
    xs = {x for x, _ in pts}
    row_counts: dict[int, int] = {}
    for _, y in pts:
        row_counts[y] = row_counts.get(y, 0) + 1
    ps = PointSet2D(pts)
    d = collinear_direction(ps)
    return _Subset(
        pts=pts,
        size=len(pts),
        lines_m=len(xs),
        sections_m=max(row_counts.values()),
        two_dimensional=d is None,
        direction=None if d is None else (d.x, d.y),
    )


def enumerate_subsets(width: int, height: int, max_size: Optional[int] = None,
                      require_two_dimensional: bool = False) -> list[_Subset]:
    """Translation-normalized nonempty subsets of the grid, in a fixed order."""
    cells = [(x, y) for x in range(width) for y in range(height)]
    out = []
    for mask in range(1, 1 << len(cells)):
        if max_size is not None and mask.bit_count() > max_size:
            continue
        pts = tuple(cells[i] for i in range(len(cells)) if mask >> i & 1)
        if min(x for x, _ in pts) != 0 or min(y for _, y in pts) != 0:
            continue
        sub = _analyze(pts)
        if require_two_dimensional and not sub.two_dimensional:
            continue
        out.append(sub)
    return out


def _mode_m(sub: _Subset, mode: BoundMode) -> int:
    if mode is BoundMode.SECTIONS_GS:
        return sub.sections_m
    return sub.lines_m


def _bound_holds_tight(mode: BoundMode, a: _Subset, b: _Subset, lhs: int) -> tuple[bool, bool]:
    """(violated, extremal) via exact integer cross-multiplication."""
    if mode is BoundMode.ONE_DIMENSIONAL:
        rhs = a.size + b.size - 1
        return lhs < rhs, lhs == rhs
    if mode is BoundMode.DOUBLING:
        m = a.lines_m
        lhs_m = lhs * m
        rhs_m = (2 * a.size - m) * (2 * m - 1)
        return lhs_m < rhs_m, lhs_m == rhs_m
    m, n = _mode_m(a, mode), _mode_m(b, mode)
    lhs_mn = lhs * m * n
    rhs_mn = (a.size * n + b.size * m - m * n) * (m + n - 1)
    return lhs_mn < rhs_mn, lhs_mn == rhs_mn


def _classify_extremal(mode: BoundMode, a: _Subset, b: _Subset,
                       report: SweepReport) -> None:
    ps_a, ps_b = PointSet2D(a.pts), PointSet2D(b.pts)
    both_2d = a.two_dimensional and b.two_dimensional
    both_1d_parallel = (
        a.direction is not None and b.direction is not None
        and parallel_directions(Point2(*a.direction), Point2(*b.direction))
    )
    if mode is BoundMode.SECTIONS_GS and (a.sections_m == 1 or b.sections_m == 1):
        report.wild_regime_count += 1
        return
    if both_2d:
        cls = classify_thm2(ps_a, ps_b) if mode in (BoundMode.LINES_GS, BoundMode.DOUBLING) \
            else classify_thm3(ps_a, ps_b)
        tag = cls.verdict.value
        report.classified_tally[tag] = report.classified_tally.get(tag, 0) + 1
        if cls.verdict is Verdict.EXTREMAL_UNCLASSIFIED:
            report.unclassified.append(encode_pair(ps_a, ps_b))
        elif cls.verdict is Verdict.NOT_EXTREMAL:
            raise ConsistencyError("sweep extremality disagrees with classifier")
        return
    if both_1d_parallel:
        cls = classify_1d(ps_a, ps_b)
        if not cls.details["equality"]:
            raise ConsistencyError("sweep extremality disagrees with 1d characterization")
        tag = cls.verdict.value
        report.classified_tally[tag] = report.classified_tally.get(tag, 0) + 1
        return
    report.classified_tally[OUT_OF_HYPOTHESIS] = report.classified_tally.get(OUT_OF_HYPOTHESIS, 0) + 1


def sweep(config: SweepConfig) -> SweepReport:
    """Run this config's shard of the exhaustive pair enumeration."""
    subs_a = enumerate_subsets(config.grid_width, config.grid_height,
                               config.max_size_a, config.require_two_dimensional)
    if config.mode is BoundMode.DOUBLING:
        subs_b = None
    else:
        subs_b = enumerate_subsets(config.grid_width, config.grid_height,
                                   config.max_size_b, config.require_two_dimensional)

    k = 2 * (config.grid_width + config.grid_height)
    report = SweepReport(extremal_pairs=[] if config.collect_extremal else None)

    for idx, a in enumerate(subs_a):
        if idx % config.shard_count != config.shard_index:
            continue
        enc_a = [x * k + y for x, y in a.pts]
        b_iter = [a] if config.mode is BoundMode.DOUBLING else subs_b
        for b in b_iter:
            if config.mode is BoundMode.ONE_DIMENSIONAL:
                if a.direction is None or b.direction is None:
                    continue
                da, db = a.direction, b.direction
                if da != (0, 0) and db != (0, 0) and da[0] * db[1] - da[1] * db[0] != 0:
                    continue
            if config.min_mn > 1 and (_mode_m(a, config.mode) < config.min_mn
                                      or _mode_m(b, config.mode) < config.min_mn):
                continue
            report.pairs_checked += 1
            lhs = len({p + x * k + y for p in enc_a for x, y in b.pts})
            violated, extremal = _bound_holds_tight(config.mode, a, b, lhs)
            if violated:
                report.violations.append(encode_pair(PointSet2D(a.pts), PointSet2D(b.pts)))
                continue
            if extremal:
                report.extremal_count += 1
                if report.extremal_pairs is not None:
                    report.extremal_pairs.append((a.pts, b.pts))
                _classify_extremal(config.mode, a, b, report)
    report.violations.sort()
    report.unclassified.sort()
    return report


def merge_reports(parts: list[SweepReport]) -> SweepReport:
    """Order-independent merge of shard reports."""
    merged = SweepReport()
    collect = any(p.extremal_pairs is not None for p in parts)
    if collect:
        merged.extremal_pairs = []
    for p in parts:
        merged.pairs_checked += p.pairs_checked
        merged.extremal_count += p.extremal_count
        merged.wild_regime_count += p.wild_regime_count
        merged.violations.extend(p.violations)
        merged.unclassified.extend(p.unclassified)
        for tag, count in p.classified_tally.items():
            merged.classified_tally[tag] = merged.classified_tally.get(tag, 0) + count
        if collect and p.extremal_pairs is not None:
            merged.extremal_pairs.extend(p.extremal_pairs)
    merged.violations.sort()
    merged.unclassified.sort()
    if collect:
        merged.extremal_pairs.sort()
    return merged


def run_sharded(config: SweepConfig, jobs: int = 1) -> SweepReport:
    """Run all config.shard_count shards (in-process or via worker processes)
    and merge; the result is independent of the shard count and of jobs."""
    shards = [replace(config, shard_index=i) for i in range(config.shard_count)]
    if jobs <= 1 or config.shard_count == 1:
        parts = [sweep(s) for s in shards]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, config.shard_count)) as pool:
            parts = list(pool.map(sweep, shards))
    return merge_reports(parts)


def oracle_pair_check(a: PointSet2D, b: PointSet2D) -> dict:
    """One diagnostic record bundling everything computable about a pair.

    This is the reference oracle: sumset size, every applicable bound report,
    both inequality chains, and whichever classification verdicts apply.
    """
    from .core import minkowski_sum

    record: dict = {
        "size_a": len(a),
        "size_b": len(b),
        "sumset_size": len(minkowski_sum(a, b)),
        "bounds": {},
        "classifications": {},
    }
    da, db = collinear_direction(a), collinear_direction(b)
    applicable = [BoundMode.LINES_GS, BoundMode.SECTIONS_GS]
    if a == b:
        applicable.append(BoundMode.DOUBLING)
    if da is not None and db is not None and parallel_directions(da, db):
        applicable.append(BoundMode.ONE_DIMENSIONAL)
    for mode in applicable:
        record["bounds"][mode.value] = bound(mode, a, b).to_json_dict()
    record["chain_diagnostic"] = [str(v) for v in chain_diagnostic(a, b)]
    record["compression_chain"] = [str(v) for v in compression_chain(a, b)]
    stats_a, stats_b = cover_stats(a), cover_stats(b)
    if stats_a.is_two_dimensional and stats_b.is_two_dimensional:
        record["classifications"]["thm2"] = classify_thm2(a, b).to_json_dict()
        if stats_a.max_horizontal_section >= 2 and stats_b.max_horizontal_section >= 2:
            record["classifications"]["thm3"] = classify_thm3(a, b).to_json_dict()
    if BoundMode.ONE_DIMENSIONAL in applicable:
        record["classifications"]["1d"] = classify_1d(a, b).to_json_dict()
    return record
