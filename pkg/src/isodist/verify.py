"""Theorem verification sweeps over ranges of primes.

These drive the falsification machinery end to end: exhaustive censuses
checked against class numbers, volcano components checked against the
structure theorem, and the CM existence channels checked against each other.
The CLI verify subcommands and the acceptance test suite both run these.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .census import CensusResult, DeuringReport, build_census, verify_deuring_counts
from .classfield import cm_existence, hilbert_discriminants
from .errors import NonSquarefreePolynomialError
from .finitefield import is_prime
from .volcano import StructureReport, classify_census, components, verify_structure

__all__ = [
    "primes_in",
    "classified_census",
    "deuring_sweep",
    "volcano_sweep",
    "EquivalenceSummary",
    "equivalence_sweep",
]


def primes_in(lo: int, hi: int) -> list[int]:
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


@lru_cache(maxsize=None)
def classified_census(p: int, bound: int = 5000) -> CensusResult:
    """Census of F_p with ring_of filled wherever the embedded modular
    polynomials allow (always, for p <= 500); cached per prime."""
    result = build_census(p, bound=bound)
    classify_census(result, strict=False)
    return result


def deuring_sweep(p_max: int = 500, p_min: int = 5) -> tuple[list[DeuringReport], int]:
    """Per-order census counts vs h(D_f), for every ordinary class, every p.

    Returns (reports, skipped) where skipped counts classes left unclassified
    because some prime factor of v exceeds the embedded modular polynomial
    levels (impossible for p <= 500).
    """
    reports = []
    skipped = 0
    for p in primes_in(p_min, p_max):
        result = classified_census(p)
        for t in sorted(result.classes):
            summary = result.classes[t]
            if summary.ring_of is None:
                skipped += 1
                continue
            reports.append(verify_deuring_counts(summary))
    return reports, skipped


def volcano_sweep(p_max: int = 500, ells: tuple[int, ...] = (2, 3), p_min: int = 5) -> tuple[list[StructureReport], int]:
    """Structure-theorem reports for all non-special components.

    Returns (reports, skipped_special) where skipped_special counts components
    containing j = 0 or 1728, which the theorem's hypothesis excludes.
    """
    reports: list[StructureReport] = []
    skipped = 0
    for p in primes_in(p_min, p_max):
        result = classified_census(p)
        for t in sorted(result.classes):
            summary = result.classes[t]
            for ell in ells:
                for comp in components(summary, ell):
                    if comp.contains_special_j:
                        skipped += 1
                        continue
                    reports.append(verify_structure(comp, summary))
    return reports, skipped


@dataclass
class EquivalenceSummary:
    """Tallies from the CM existence equivalence sweep (criterion 4)."""

    pairs_checked: int
    census_checked: int
    skipped_ramified: int  # p | D
    skipped_nonsquarefree: int  # p | disc(H_D)
    positives: int


def equivalence_sweep(
    p_max: int = 2000,
    census_max: int = 500,
    discs: tuple[int, ...] | None = None,
) -> EquivalenceSummary:
    """Check representation = splitting (= census for small p) for all (D, p).

    Any channel disagreement raises VerificationError from cm_existence, so a
    returned summary means every evaluated pair agreed (and every positive had
    the full h(D) distinct roots).
    """
    discs = discs if discs is not None else hilbert_discriminants()
    pairs = census_used = ramified = nonsquarefree = positives = 0
    for p in primes_in(5, p_max):
        census = classified_census(p) if p <= census_max else None
        for disc in discs:
            if disc % p == 0:
                ramified += 1
                continue
            try:
                record = cm_existence(disc, p, census=census)
            except NonSquarefreePolynomialError:
                nonsquarefree += 1
                continue
            pairs += 1
            if record.by_census is not None:
                census_used += 1
            if record.by_representation:
                positives += 1
    return EquivalenceSummary(pairs, census_used, ramified, nonsquarefree, positives)
