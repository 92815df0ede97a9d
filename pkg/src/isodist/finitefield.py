"""Prime fields F_p and dense univariate polynomial arithmetic over them.

Polynomials are tuples of residues in [0, p), constant term first, with no
trailing zeros (the zero polynomial is the empty tuple).  Degrees stay small
(at most a few hundred), so everything is plain dense arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonSquarefreePolynomialError

__all__ = [
    "PrimeField",
    "is_prime",
    "kronecker",
    "sqrt_mod_p",
    "poly_trim",
    "poly_add",
    "poly_mul",
    "poly_divmod",
    "poly_mod",
    "poly_gcd",
    "poly_pow_mod",
    "poly_eval",
    "poly_derivative",
    "count_distinct_roots",
    "splits_completely",
    "roots_mod_p",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3 * 10^24 (covers 2^64)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """A prime p >= 5, checked on construction."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 5 or self.p >= 2**63 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not a prime in [5, 2^63)")

    def __int__(self) -> int:
        return self.p


def kronecker(n: int, m: int) -> int:
    """Kronecker symbol (n|m), defined for all integers."""
    if m == 0:
        return 1 if n in (1, -1) else 0
    result = 1
    if m < 0:
        m = -m
        if n < 0:
            result = -result
    # pull out the even part of m: (n|2) = 0, 1, -1 for n even, n = +-1, +-3 mod 8
    while m % 2 == 0:
        m //= 2
        if n % 2 == 0:
            return 0
        if n % 8 in (3, 5):
            result = -result
    # unit part of n: (-1|m) = -1 iff m = 3 mod 4
    if n < 0:
        n = -n
        if m % 4 == 3:
            result = -result
    if m == 1:
        return result
    n %= m
    # Jacobi symbol loop with quadratic reciprocity
    while n:
        while n % 2 == 0:
            n //= 2
            if m % 8 in (3, 5):
                result = -result
        n, m = m, n
        if n % 4 == 3 and m % 4 == 3:
            result = -result
        n %= m
    return result if m == 1 else 0


def sqrt_mod_p(a: int, p: int) -> int | None:
    """The smaller square root of a mod p, or None for a non-residue.

    Deterministic Tonelli-Shanks; the needed non-residue is found by
    sequential search, which is fine at the sizes used here.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return min(r, p - r)


# --- dense polynomial arithmetic ---------------------------------------------


def poly_trim(f) -> tuple[int, ...]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_add(f, g, p: int) -> tuple[int, ...]:
    n = max(len(f), len(g))
    return poly_trim((
        ((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)
    ))


def poly_mul(f, g, p: int) -> tuple[int, ...]:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    return poly_trim(v % p for v in out)


def poly_divmod(f, g, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    f, g = poly_trim(f), poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [0] * max(0, len(f) - len(g) + 1)
    inv_lead = pow(g[-1], p - 2, p)
    for i in range(len(f) - len(g), -1, -1):
        coeff = r[i + len(g) - 1] * inv_lead % p
        if coeff:
            q[i] = coeff
            for j, gj in enumerate(g):
                r[i + j] = (r[i + j] - coeff * gj) % p
    return poly_trim(q), poly_trim(r)


def poly_mod(f, g, p: int) -> tuple[int, ...]:
    return poly_divmod(f, g, p)[1]


def poly_gcd(f, g, p: int) -> tuple[int, ...]:
    """Monic gcd."""
    f, g = poly_trim(f), poly_trim(g)
    while g:
        f, g = g, poly_mod(f, g, p)
    if f:
        inv = pow(f[-1], p - 2, p)
        f = tuple(c * inv % p for c in f)
    return f


def poly_pow_mod(base, exponent: int, modulus, p: int) -> tuple[int, ...]:
    """base^exponent mod modulus by square-and-multiply."""
    modulus = poly_trim(modulus)
    if not modulus or len(modulus) < 2:
        raise ZeroDivisionError("modulus must have degree >= 1")
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    result = poly_mod((1,), modulus, p)
    acc = poly_mod(base, modulus, p)
    while exponent:
        if exponent & 1:
            result = poly_mod(poly_mul(result, acc, p), modulus, p)
        exponent >>= 1
        if exponent:
            acc = poly_mod(poly_mul(acc, acc, p), modulus, p)
    return result


def poly_eval(f, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def poly_derivative(f, p: int) -> tuple[int, ...]:
    return poly_trim((i * c) % p for i, c in enumerate(f) if i >= 1)


def _xp_minus_x_gcd(f, p: int) -> tuple[int, ...]:
    """gcd(X^p - X, f): the product of the distinct linear factors of f."""
    xp = poly_pow_mod((0, 1), p, f, p)
    return poly_gcd(poly_add(xp, (0, p - 1), p), f, p)


def count_distinct_roots(f, p: int) -> int:
    """Number of distinct roots of f in F_p."""
    f = poly_trim(f)
    if not f:
        raise ValueError("zero polynomial")
    if len(f) == 1:
        return 0
    return max(len(_xp_minus_x_gcd(f, p)) - 1, 0)


def splits_completely(f, p: int) -> bool:
    """Whether squarefree f factors into deg(f) distinct linear factors over F_p."""
    f = poly_trim(f)
    if not f:
        raise ValueError("zero polynomial")
    if poly_gcd(f, poly_derivative(f, p), p) != (1,):
        raise NonSquarefreePolynomialError("polynomial is not squarefree mod p")
    return count_distinct_roots(f, p) == len(f) - 1


def _linear_roots(g, p: int) -> list[int]:
    """Roots of g, a product of distinct linear factors (degree kept tiny)."""
    g = poly_trim(g)
    deg = len(g) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [(-g[0]) * pow(g[1], p - 2, p) % p]
    if deg == 2:
        inv2a = pow(2 * g[2] % p, p - 2, p)
        d = (g[1] * g[1] - 4 * g[2] * g[0]) % p
        s = sqrt_mod_p(d, p)
        assert s is not None
        return [(-g[1] + s) * inv2a % p, (-g[1] - s) * inv2a % p]
    # split with gcd(g, (X+c)^((p-1)/2) - 1) for successive shifts c
    for c in range(p):
        h = poly_pow_mod((c, 1), (p - 1) // 2, g, p)
        d = poly_gcd(poly_add(h, (p - 1,), p), g, p)
        if 0 < len(d) - 1 < deg:
            rest = poly_divmod(g, d, p)[0]
            return _linear_roots(d, p) + _linear_roots(rest, p)
    raise AssertionError("failed to split a product of distinct linear factors")


def roots_mod_p(f, p: int) -> list[tuple[int, int]]:
    """(root, multiplicity) pairs of f over F_p, sorted by root."""
    f = poly_trim(f)
    if not f:
        raise ValueError("zero polynomial")
    if len(f) == 1:
        return []
    distinct = _linear_roots(_xp_minus_x_gcd(f, p), p)
    out = []
    for r in sorted(distinct):
        mult = 0
        g = f
        while True:
            q, rem = poly_divmod(g, (-r % p, 1), p)
            if rem:
                break
            mult += 1
            g = q
        assert mult >= 1
        out.append((r, mult))
    return out
