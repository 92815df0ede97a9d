"""Exhaustive census of ordinary isogeny classes I(t, p) over a prime field.

The census walks every j-invariant, expands twists, and buckets the resulting
F_p-isomorphism classes by Frobenius trace.  It is the ground-truth oracle the
theorem checks run against: per conductor f | v the number of distinct
j-invariants with endomorphism order of conductor f must equal h(f^2 D_K).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .curves import Curve, curves_for_j
from .errors import VerificationError
from .finitefield import PrimeField
from .quadforms import (
    DiscriminantDecomposition,
    WeightedDecomposition,
    decompose,
    weighted_decomposition,
)

DEFAULT_CENSUS_BOUND = 5000

__all__ = [
    "DEFAULT_CENSUS_BOUND",
    "IsogenyClassSummary",
    "CensusResult",
    "DeuringReport",
    "build_census",
    "verify_deuring_counts",
    "summary_json",
]


@dataclass
class IsogenyClassSummary:
    """All ordinary F_p-isomorphism classes with a fixed trace t."""

    p: int
    t: int
    delta: int
    decomposition: DiscriminantDecomposition
    members: tuple[Curve, ...]
    j_set: frozenset[int]
    # j-invariant -> conductor of End, filled by volcano.classify_rings
    ring_of: dict[int, int] | None = None

    @property
    def weighted(self) -> WeightedDecomposition:
        return weighted_decomposition(self.delta)

    def member_mass(self) -> Fraction:
        """Sum of 1/#Aut over members, the weighted size of the class."""
        return sum((Fraction(1, c.aut_count) for c in self.members), Fraction(0))


@dataclass
class CensusResult:
    p: int
    classes: dict[int, IsogenyClassSummary]
    supersingular: tuple[Curve, ...]

    @property
    def total_classes(self) -> int:
        return sum(len(s.members) for s in self.classes.values()) + len(self.supersingular)


def build_census(field, bound: int = DEFAULT_CENSUS_BOUND) -> CensusResult:
    """Census of every F_p-isomorphism class, bucketed by trace.

    Supersingular classes (t = 0 for p >= 5) are kept aside and never enter
    isogeny-class machinery.
    """
    p = int(field) if not isinstance(field, PrimeField) else field.p
    PrimeField(p)
    if p > bound:
        raise ValueError(f"p = {p} exceeds the census bound {bound}")
    buckets: dict[int, list[Curve]] = {}
    supersingular: list[Curve] = []
    for j in range(p):
        for curve in curves_for_j(j, p):
            if curve.is_ordinary:
                buckets.setdefault(curve.trace, []).append(curve)
            else:
                supersingular.append(curve)
    classes: dict[int, IsogenyClassSummary] = {}
    for t in sorted(buckets):
        members = tuple(sorted(buckets[t], key=lambda c: (c.j, c.a, c.b)))
        delta = t * t - 4 * p
        classes[t] = IsogenyClassSummary(
            p=p,
            t=t,
            delta=delta,
            decomposition=decompose(delta),
            members=members,
            j_set=frozenset(c.j for c in members),
        )
    expected_traces = {t for t in range(-isqrt(4 * p - 1), isqrt(4 * p - 1) + 1) if t}
    assert set(classes) == expected_traces, "census must cover every ordinary trace"
    return CensusResult(p, classes, tuple(supersingular))


@dataclass
class DeuringReport:
    """Per-conductor expected (h(D_f)) vs censused j-invariant counts."""

    p: int
    t: int
    delta: int
    rows: tuple[tuple[int, int, int, int], ...]  # (f, D_f, expected, actual)
    weighted_expected: Fraction
    weighted_actual: Fraction

    @property
    def ok(self) -> bool:
        return all(exp == act for _, _, exp, act in self.rows) and (
            self.weighted_expected == self.weighted_actual
        )

    def mismatches(self) -> list[tuple[int, int, int, int]]:
        return [row for row in self.rows if row[2] != row[3]]


def verify_deuring_counts(summary: IsogenyClassSummary, strict: bool = False) -> DeuringReport:
    """Check the per-order decomposition of one isogeny class.

    The unweighted identity (j-count per conductor = h(D_f)) is the assertable
    reading of the decomposition theorem; the automorphism-weighted mass per
    conductor is compared with h*(D_f) as well.
    """
    if summary.ring_of is None:
        raise ValueError("summary.ring_of is empty; run volcano.classify_rings first")
    wd = summary.weighted
    counts: dict[int, int] = {f: 0 for f in wd.per_f}
    for j in summary.j_set:
        counts[summary.ring_of[j]] += 1
    mass: dict[int, Fraction] = {f: Fraction(0) for f in wd.per_f}
    for curve in summary.members:
        mass[summary.ring_of[curve.j]] += Fraction(1, curve.aut_count)
    rows = tuple(
        (f, f * f * summary.decomposition.fundamental, wd.per_f[f].h, counts[f])
        for f in wd.decomposition.divisors
    )
    report = DeuringReport(
        p=summary.p,
        t=summary.t,
        delta=summary.delta,
        rows=rows,
        weighted_expected=wd.total,
        weighted_actual=sum(mass.values(), Fraction(0)),
    )
    if strict and not report.ok:
        raise VerificationError(
            f"Deuring count mismatch for p={summary.p}, t={summary.t}: "
            f"{report.mismatches()}"
        )
    return report


def summary_json(summary: IsogenyClassSummary) -> dict:
    """Census report payload; requires a classified summary for j counts."""
    wd = summary.weighted
    counts: dict[int, int] | None = None
    if summary.ring_of is not None:
        counts = {f: 0 for f in wd.per_f}
        for j in summary.j_set:
            counts[summary.ring_of[j]] += 1
    per_f = []
    for f in summary.decomposition.divisors:
        cd = wd.per_f[f]
        entry = {
            "f": f,
            "D_f": cd.disc,
            "h": cd.h,
            "h_star": f"{cd.h_star.numerator}/{cd.h_star.denominator}",
        }
        if counts is not None:
            entry["j_count"] = counts[f]
        per_f.append(entry)
    return {
        "p": summary.p,
        "t": summary.t,
        "delta": summary.delta,
        "v": summary.decomposition.v,
        "D_K": summary.decomposition.fundamental,
        "per_f": per_f,
        "j_invariants": sorted(summary.j_set),
    }
