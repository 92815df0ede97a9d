"""Global weighted distributions of endomorphism rings, as exact rationals.

Everything is a function of the Frobenius discriminant delta = v^2 D_K alone:
the exact density of the order of conductor f is h*(D_f) / sum_g h*(D_g), the
containment density sums exact densities over multiples, and bucketing the
divisors of v by l-adic valuation gives the conductor-valuation law.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .census import IsogenyClassSummary
from .quadforms import WeightedDecomposition, weighted_decomposition

__all__ = [
    "DensityReport",
    "LevelMassReport",
    "CensusComparison",
    "exact_density",
    "level_masses",
    "compare_with_census",
    "fraction_str",
    "decimal_str",
    "density_json",
]


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x: Fraction, digits: int = 12) -> str:
    """Decimal rendering to 12 significant digits (reports only; math stays exact)."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


@dataclass(frozen=True)
class DensityReport:
    delta: int
    v: int
    fundamental: int
    weighted: WeightedDecomposition
    exact: dict[int, Fraction]
    containment: dict[int, Fraction]
    total_mass: Fraction


def exact_density(delta: int) -> DensityReport:
    """Exact and containment densities for every f | v."""
    wd = weighted_decomposition(delta)
    total = wd.total
    divisors = wd.decomposition.divisors
    exact = {f: wd.per_f[f].h_star / total for f in divisors}
    containment = {
        f: sum((exact[g] for g in divisors if g % f == 0), Fraction(0)) for f in divisors
    }
    assert sum(exact.values()) == 1
    assert containment[1] == 1
    return DensityReport(
        delta=delta,
        v=wd.decomposition.v,
        fundamental=wd.decomposition.fundamental,
        weighted=wd,
        exact=exact,
        containment=containment,
        total_mass=total,
    )


@dataclass(frozen=True)
class LevelMassReport:
    delta: int
    ell: int
    masses: tuple[Fraction, ...]  # M_0 .. M_d
    probabilities: tuple[Fraction, ...]


def level_masses(delta: int, ell: int) -> LevelMassReport:
    """Mass M_i = sum of h*(D_f) over f | v with v_l(f) = i, and the induced law."""
    wd = weighted_decomposition(delta)
    v = wd.decomposition.v
    depth = 0
    while v % ell**(depth + 1) == 0:
        depth += 1
    masses = [Fraction(0)] * (depth + 1)
    for f, cd in wd.per_f.items():
        i = 0
        while f % ell == 0:
            f //= ell
            i += 1
        masses[i] += cd.h_star
    assert sum(masses) == wd.total
    probabilities = tuple(m / wd.total for m in masses)
    assert sum(probabilities) == 1
    return LevelMassReport(delta, ell, tuple(masses), probabilities)


@dataclass(frozen=True)
class CensusComparison:
    """Paper density vs censused frequencies, per conductor.

    rows: (f, paper_density, j_frequency, weighted_frequency).  The paper
    density and the automorphism-weighted census frequency agree identically;
    the plain j-invariant frequency differs exactly when some D_f is -3 or -4.
    """

    delta: int
    rows: tuple[tuple[int, Fraction, Fraction, Fraction], ...]

    def flagged(self) -> list[int]:
        return [f for f, paper, jfreq, _ in self.rows if paper != jfreq]


def compare_with_census(report: DensityReport, summary: IsogenyClassSummary) -> CensusComparison:
    if summary.ring_of is None:
        raise ValueError("summary.ring_of is empty; run volcano.classify_rings first")
    if summary.delta != report.delta:
        raise ValueError("density report and census class have different discriminants")
    divisors = report.weighted.decomposition.divisors
    j_counts = {f: 0 for f in divisors}
    for j in summary.j_set:
        j_counts[summary.ring_of[j]] += 1
    mass = {f: Fraction(0) for f in divisors}
    for curve in summary.members:
        mass[summary.ring_of[curve.j]] += Fraction(1, curve.aut_count)
    total_j = sum(j_counts.values())
    total_mass = sum(mass.values(), Fraction(0))
    rows = tuple(
        (
            f,
            report.exact[f],
            Fraction(j_counts[f], total_j),
            mass[f] / total_mass,
        )
        for f in divisors
    )
    return CensusComparison(delta=report.delta, rows=rows)


def density_json(report: DensityReport, level_report: LevelMassReport | None = None) -> dict:
    payload = {
        "delta": report.delta,
        "v": report.v,
        "D_K": report.fundamental,
        "total_mass": fraction_str(report.total_mass),
        "per_f": [
            {
                "f": f,
                "exact": fraction_str(report.exact[f]),
                "exact_decimal": decimal_str(report.exact[f]),
                "containment": fraction_str(report.containment[f]),
                "containment_decimal": decimal_str(report.containment[f]),
            }
            for f in report.weighted.decomposition.divisors
        ],
    }
    if level_report is not None:
        payload["levels"] = {
            "ell": level_report.ell,
            "masses": [fraction_str(m) for m in level_report.masses],
            "law": {
                str(i): fraction_str(pr) for i, pr in enumerate(level_report.probabilities)
            },
        }
    return payload
