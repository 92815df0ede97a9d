"""Horizontal variation: CM existence per prime and Chebotarev densities.

For a fixed order of discriminant D, three independent channels decide
whether F_p carries an ordinary curve with that endomorphism ring:

  representation: 4p = t^2 + |D| v^2 has a solution with t > 0, p not | t;
  splitting:      p splits in the imaginary quadratic field ((D|p) = 1) and
                  the embedded Hilbert class polynomial H_D splits completely
                  mod p, i.e. p splits completely in the ring class field;
  census:         a classified census of F_p exhibits the order.

The channels must agree; when they fire, H_D mod p has exactly h(D) distinct
roots.  Scanning p over a range measures the natural density of such primes
against the Chebotarev value 1/(2 h(D)).

HILBERT_TABLE is generated offline (scripts/derive_hilbert_table.py) by the
classical complex-analytic method at two working precisions; this module only
ever reduces it mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import (
    NonSquarefreePolynomialError,
    UnsupportedDiscriminantError,
    VerificationError,
)
from .finitefield import (
    count_distinct_roots,
    kronecker,
    poly_derivative,
    poly_gcd,
    splits_completely,
)
from .quadforms import class_number, validate_discriminant

__all__ = [
    "HILBERT_TABLE",
    "hilbert_discriminants",
    "hilbert_polynomial",
    "hilbert_mod_p",
    "representation_test",
    "ExistenceRecord",
    "cm_existence",
    "ScanReport",
    "chebotarev_scan",
    "primes_up_to",
    "logarithmic_integral",
    "scan_csv",
    "scan_json",
]

DEFAULT_SCAN_CAP = 10**8

# generated by scripts/derive_hilbert_table.py (do not edit by hand)
HILBERT_TABLE: dict[int, tuple[int, ...]] = {
    -3: (0, 1),
    -4: (-1728, 1),
    -7: (3375, 1),
    -8: (-8000, 1),
    -11: (32768, 1),
    -12: (-54000, 1),
    -15: (-121287375, 191025, 1),
    -16: (-287496, 1),
    -19: (884736, 1),
    -20: (-681472000, -1264000, 1),
    -23: (12771880859375, -5151296875, 3491750, 1),
    -24: (14670139392, -4834944, 1),
    -27: (12288000, 1),
    -28: (-16581375, 1),
    -31: (1566028350940383, -58682638134, 39491307, 1),
    -32: (12167000000, -52250000, 1),
    -36: (-1790957481984, -153542016, 1),
    -43: (884736000, 1),
    -47: (
        16042929600623870849609375,
        -14982472850828613281250,
        5115161850595703125,
        -9987963828125,
        2257834125,
        1,
    ),
    -64: (-7367066619912, -82226316240, 1),
    -67: (147197952000, 1),
    -163: (262537412640768000, 1),
}


def hilbert_discriminants() -> tuple[int, ...]:
    return tuple(sorted(HILBERT_TABLE, reverse=True))


def hilbert_polynomial(disc: int) -> tuple[int, ...]:
    """Exact integer coefficients of H_D, constant term first, monic."""
    if disc not in HILBERT_TABLE:
        raise UnsupportedDiscriminantError(
            f"D = {disc} is not in the embedded Hilbert table"
        )
    coeffs = HILBERT_TABLE[disc]
    assert len(coeffs) - 1 == class_number(disc).h
    return coeffs


def hilbert_mod_p(disc: int, field) -> tuple[int, ...]:
    p = int(field)
    return tuple(c % p for c in hilbert_polynomial(disc))


def representation_test(disc: int, field) -> tuple[int, int] | None:
    """Smallest-v solution (t, v) of 4p = t^2 + |D| v^2 with t > 0, p not | t."""
    p = int(field)
    validate_discriminant(disc)
    if p < 5:
        raise ValueError("p must be at least 5")
    if disc % p == 0:
        raise ValueError(f"p = {p} divides D = {disc}")
    n = -disc
    v = 1
    while n * v * v < 4 * p:
        rest = 4 * p - n * v * v
        t = isqrt(rest)
        if t * t == rest and t > 0 and t % p:
            return t, v
        v += 1
    return None


def _brute_force_representation(disc: int, p: int) -> bool:
    """Independent oracle: loop t instead of v."""
    n = -disc
    for t in range(1, isqrt(4 * p) + 1):
        if t % p == 0:
            continue
        rest = 4 * p - t * t
        if rest <= 0 or rest % n:
            continue
        w = isqrt(rest // n)
        if w >= 1 and w * w == rest // n:
            return True
    return False


@dataclass(frozen=True)
class ExistenceRecord:
    """Channel-by-channel CM existence verdict for (D, p)."""

    disc: int
    p: int
    by_representation: bool
    by_splitting: bool | None  # None: D outside the Hilbert table
    by_census: bool | None  # None: census not evaluated
    representation: tuple[int, int] | None
    root_count: int | None

    @property
    def exists(self) -> bool:
        return self.by_representation


def cm_existence(disc: int, field, census=None) -> ExistenceRecord:
    """Evaluate all available channels and insist they agree.

    census, when given, is a classified census result for p (ring_of filled);
    disagreement between any two evaluated channels raises VerificationError.
    """
    p = int(field)
    rep = representation_test(disc, p)
    by_rep = rep is not None

    by_split: bool | None = None
    root_count: int | None = None
    if disc in HILBERT_TABLE:
        if kronecker(disc, p) != 1:
            # p inert or ramified in K: p cannot split completely in the ring
            # class field, whatever H_D does mod p
            by_split = False
        else:
            h_mod = hilbert_mod_p(disc, p)
            if poly_gcd(h_mod, poly_derivative(h_mod, p), p) != (1,):
                raise NonSquarefreePolynomialError(
                    f"H_{disc} is not squarefree mod {p} (p divides disc(H_D))"
                )
            by_split = splits_completely(h_mod, p)
            root_count = count_distinct_roots(h_mod, p)

    by_census: bool | None = None
    if census is not None:
        discs_seen = set()
        for summary in census.classes.values():
            if summary.ring_of is None:
                raise ValueError("census must be classified before the census channel")
            d_k = summary.decomposition.fundamental
            discs_seen.update(f * f * d_k for f in set(summary.ring_of.values()))
        by_census = disc in discs_seen

    for name, value in (("splitting", by_split), ("census", by_census)):
        if value is not None and value != by_rep:
            raise VerificationError(
                f"CM existence channels disagree for D={disc}, p={p}: "
                f"representation={by_rep}, {name}={value}"
            )
    if by_rep and root_count is not None and root_count != class_number(disc).h:
        raise VerificationError(
            f"H_{disc} mod {p} has {root_count} roots, expected h = {class_number(disc).h}"
        )
    return ExistenceRecord(disc, p, by_rep, by_split, by_census, rep, root_count)


# --- prime scans --------------------------------------------------------------


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n, by segmented odd-only sieve."""
    if n < 2:
        return np.array([], dtype=np.int64)
    base_limit = isqrt(n)
    is_prime = np.ones(base_limit + 1, dtype=bool)
    is_prime[:2] = False
    for q in range(2, isqrt(base_limit) + 1):
        if is_prime[q]:
            is_prime[q * q :: q] = False
    base = np.flatnonzero(is_prime)
    chunks = [np.array([2], dtype=np.int64)] if n >= 2 else []
    segment = max(1 << 18, base_limit + 1)
    low = 3
    while low <= n:
        high = min(low + 2 * segment, n + 1)
        odd_count = (high - low + 1) // 2
        mask = np.ones(odd_count, dtype=bool)
        for q in base[1:]:
            start = max(q * q, ((low + q - 1) // q) * q)
            if start % 2 == 0:
                start += q
            if start < high:
                mask[(start - low) // 2 :: q] = False
        chunks.append(low + 2 * np.flatnonzero(mask).astype(np.int64))
        low = high if high % 2 else high + 1
    return np.concatenate(chunks) if chunks else np.array([], dtype=np.int64)


def _adaptive_simpson(f, a: float, b: float, eps: float) -> float:
    def simpson(x0, x2, f0, f1, f2):
        return (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2)

    def recurse(x0, x2, f0, f2, whole, eps, depth):
        x1 = 0.5 * (x0 + x2)
        xl, xr = 0.5 * (x0 + x1), 0.5 * (x1 + x2)
        fl, f1, fr = f(xl), f(x1), f(xr)
        left = simpson(x0, x1, f0, fl, f1)
        right = simpson(x1, x2, f1, fr, f2)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return recurse(x0, x1, f0, f1, left, eps / 2.0, depth - 1) + recurse(
            x1, x2, f1, f2, right, eps / 2.0, depth - 1
        )

    f0, f2 = f(a), f(b)
    mid = 0.5 * (a + b)
    whole = simpson(a, b, f0, f(mid), f2)
    return recurse(a, b, f0, f2, whole, eps, 60)


def logarithmic_integral(x: float) -> float:
    """Li(x) = integral of 1/ln(u) du on [2, x], adaptive Simpson, rel err < 1e-9."""
    if x <= 2:
        return 0.0
    return _adaptive_simpson(lambda u: 1.0 / math.log(u), 2.0, float(x), 1e-12 * x)


def _scan_block(args) -> np.ndarray:
    disc, block = args
    n = -disc
    qualifies = np.zeros(block.shape, dtype=bool)
    v = 1
    while True:
        rest = 4 * block - n * v * v
        live = rest > 0
        if not live.any():
            break
        t = np.zeros_like(block)
        t[live] = np.sqrt(rest[live].astype(np.float64)).astype(np.int64)
        # float sqrt can be off by one at the edges
        for shift in (-1, 0, 1):
            cand = t + shift
            ok = live & (cand > 0)
            safe = np.where(ok, cand, 1)
            qualifies |= ok & (safe * safe == rest) & (block % safe != 0)
        v += 1
    return qualifies


@dataclass(frozen=True)
class ScanReport:
    disc: int
    x_max: int
    primes_tested: int
    qualifying: int
    empirical_density: Fraction
    reference_density: Fraction
    li_reference: float
    per_checkpoint: tuple[tuple[int, int, int], ...]  # (x, primes_tested, qualifying)


def chebotarev_scan(
    disc: int,
    x_max: int,
    threads: int = 1,
    cap: int = DEFAULT_SCAN_CAP,
) -> ScanReport:
    """Count primes p <= x_max (p not | D) admitting CM by the order of disc D.

    Checkpoints are recorded at x = 10^3, 10^4, ... for convergence tables.
    The per-prime test is the vectorized representation loop over v; blocks
    of primes are processed independently (and in parallel when threads > 1).
    """
    validate_discriminant(disc)
    if x_max > cap:
        raise ValueError(f"x_max = {x_max} exceeds the scan cap {cap}")
    primes = primes_up_to(x_max)
    primes = primes[primes >= 5]
    # excluded primes (p | D) are all <= |D|
    small = primes <= -disc
    if small.any():
        drop = np.array([disc % int(p) == 0 for p in primes[small]])
        keep = np.ones(primes.size, dtype=bool)
        keep[np.flatnonzero(small)[drop]] = False
        primes = primes[keep]
    blocks = np.array_split(primes, max(1, min(len(primes), 8 * max(1, threads))))
    blocks = [b for b in blocks if b.size]
    tasks = [(disc, b) for b in blocks]
    if threads > 1 and len(blocks) > 1:
        import multiprocessing

        with multiprocessing.Pool(threads) as pool:
            flags = pool.map(_scan_block, tasks)
    else:
        flags = [_scan_block(t) for t in tasks]
    qualifies = np.concatenate(flags) if flags else np.array([], dtype=bool)
    h = class_number(disc).h
    checkpoints = []
    x = 1000
    while x < x_max:
        idx = int(np.searchsorted(primes, x, side="right"))
        checkpoints.append((x, idx, int(qualifies[:idx].sum())))
        x *= 10
    tested = int(primes.size)
    qual = int(qualifies.sum())
    checkpoints.append((x_max, tested, qual))
    return ScanReport(
        disc=disc,
        x_max=x_max,
        primes_tested=tested,
        qualifying=qual,
        empirical_density=Fraction(qual, tested) if tested else Fraction(0),
        reference_density=Fraction(1, 2 * h),
        li_reference=logarithmic_integral(x_max) / (2 * h),
        per_checkpoint=tuple(checkpoints),
    )


def scan_csv(report: ScanReport) -> str:
    lines = ["x,primes_tested,qualifying,empirical,reference,li_over_2h"]
    ref = report.reference_density
    for x, tested, qual in report.per_checkpoint:
        emp = qual / tested if tested else 0.0
        li = logarithmic_integral(x) / (2 * class_number(report.disc).h)
        lines.append(f"{x},{tested},{qual},{emp:.10f},{float(ref):.10f},{li:.4f}")
    return "\n".join(lines) + "\n"


def scan_json(report: ScanReport) -> dict:
    return {
        "disc": report.disc,
        "x_max": report.x_max,
        "primes_tested": report.primes_tested,
        "qualifying": report.qualifying,
        "empirical_density": f"{report.empirical_density.numerator}/{report.empirical_density.denominator}",
        "empirical_decimal": float(report.empirical_density),
        "reference_density": f"1/{2 * class_number(report.disc).h}",
        "li_reference": report.li_reference,
        "per_checkpoint": [
            {"x": x, "primes_tested": tested, "qualifying": qual}
            for x, tested, qual in report.per_checkpoint
        ],
    }
