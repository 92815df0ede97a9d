"""Short Weierstrass curves y^2 = x^3 + ax + b over F_p.

Point counting is an exact quadratic character sum, vectorized with numpy.
The census never loops over raw (a, b) pairs: it walks j-invariants and
expands each into its twist classes, one curve per F_p-isomorphism class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .errors import SingularCurveError
from .finitefield import PrimeField, is_prime

__all__ = [
    "Curve",
    "point_count",
    "j_invariant",
    "curves_for_j",
    "primitive_root",
    "char_table",
]


@dataclass(frozen=True)
class Curve:
    """One F_p-isomorphism class, carried by a concrete equation."""

    p: int
    a: int
    b: int
    j: int
    trace: int
    aut_count: int

    @property
    def order(self) -> int:
        return self.p + 1 - self.trace

    @property
    def is_ordinary(self) -> bool:
        # p >= 5 and |trace| < p, so p | trace only for trace = 0
        return self.trace != 0


def _as_p(field) -> int:
    p = int(field)
    if p < 5 or not is_prime(p):
        raise ValueError(f"need a prime p >= 5, got {p}")
    return p


@lru_cache(maxsize=64)
def char_table(p: int) -> np.ndarray:
    """chi(x) for x in [0, p): 0 at 0, +1 at nonzero squares, -1 otherwise."""
    table = -np.ones(p, dtype=np.int64)
    xs = np.arange(p, dtype=np.int64)
    table[(xs * xs) % p] = 1
    table[0] = 0
    return table


def point_count(a: int, b: int, field) -> int:
    """Frobenius trace t = p + 1 - #E(F_p), via t = -sum_x chi(x^3 + ax + b)."""
    p = _as_p(field)
    a %= p
    b %= p
    if (4 * a * a * a + 27 * b * b) % p == 0:
        raise SingularCurveError(f"y^2 = x^3 + {a}x + {b} is singular mod {p}")
    xs = np.arange(p, dtype=np.int64)
    rhs = ((xs * xs % p) * xs + a * xs + b) % p
    t = -int(char_table(p)[rhs].sum())
    assert t * t <= 4 * p
    return t


def j_invariant(a: int, b: int, field) -> int:
    p = _as_p(field)
    a %= p
    b %= p
    disc = (4 * a * a * a + 27 * b * b) % p
    if disc == 0:
        raise SingularCurveError(f"y^2 = x^3 + {a}x + {b} is singular mod {p}")
    return 1728 * 4 * pow(a, 3, p) * pow(disc, p - 2, p) % p


@lru_cache(maxsize=64)
def primitive_root(p: int) -> int:
    factors = []
    n = p - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no primitive root found")


def _nonresidue(p: int) -> int:
    g = primitive_root(p)
    return g  # a generator is never a square


def curves_for_j(j: int, field) -> list[Curve]:
    """All F_p-isomorphism classes (twists) with the given j-invariant.

    Generic j: a quadratic twist pair with traces t and -t.  j = 1728: the
    quartic twist family a = g^i, b = 0 (gcd(4, p-1) classes); j = 0: the
    sextic family a = 0, b = g^i (gcd(6, p-1) classes).
    """
    p = _as_p(field)
    j %= p
    if j == 0:
        w = gcd(6, p - 1)
        g = primitive_root(p)
        eqs = [(0, pow(g, i, p)) for i in range(w)]
        auts = w
    elif j == 1728 % p:
        w = gcd(4, p - 1)
        g = primitive_root(p)
        eqs = [(pow(g, i, p), 0) for i in range(w)]
        auts = w
    else:
        k = j * pow((1728 - j) % p, p - 2, p) % p
        a, b = 3 * k % p, 2 * k % p
        n = _nonresidue(p)
        eqs = [(a, b), (a * n * n % p, b * pow(n, 3, p))]
        auts = 2
    out = []
    for a, b in eqs:
        assert j_invariant(a, b, p) == j
        out.append(Curve(p, a, b, j, point_count(a, b, p), auts))
    if j != 0 and j != 1728 % p:
        assert out[0].trace == -out[1].trace
    return out
