#!/usr/bin/env python3
"""Derive classical modular polynomials Phi_ell(X, Y) exactly and emit a table.

Method: exact integer q-expansions.  With j the elliptic j-function and
u = q^(1/ell), the conjugates j((tau + k)/ell) have u-expansions whose n-th
coefficient is [u^n](j^1) times a root of unity, so the power sums
P_m = sum_k j((tau+k)/ell)^m are plain q-series: P_m[q^n] = ell * [u^(ell n)](j^m).
Newton's identities give the elementary symmetric functions e_m, hence

    Phi(X, j(tau)) = (X - j(ell tau)) * sum_m (-1)^m e_m X^(ell - m),

whose X-coefficients are SL2(Z)-invariant with bounded poles and therefore
integer polynomials in j.  The final reduction must cancel the q-expansion
identically; any nonzero tail would expose a bug, which makes the derivation
self-checking.  The result is additionally checked for symmetry and for the
Kronecker congruence Phi_ell = (X^ell - Y)(X - Y^ell) mod ell.

Writes src/isodist/_modpoly_data.py.  Run time: a few minutes for ell <= 23.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

LEVELS = (2, 3, 5, 7, 11, 13, 17, 19, 23)
GUARD = 8  # extra q-precision beyond the constant term


class Series:
    """Truncated Laurent series sum_{n >= off} c[n - off] q^n, integer coeffs."""

    __slots__ = ("off", "c")

    def __init__(self, off: int, coeffs):
        self.off = off
        self.c = list(coeffs)

    def coeff(self, n: int) -> int:
        i = n - self.off
        return self.c[i] if 0 <= i < len(self.c) else 0

    def top(self) -> int:
        return self.off + len(self.c) - 1

    def trim(self, top: int) -> "Series":
        keep = max(0, top - self.off + 1)
        return Series(self.off, self.c[:keep])

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.c)

    def add(self, other: "Series") -> "Series":
        off = min(self.off, other.off)
        top = max(self.top(), other.top())
        out = [0] * (top - off + 1)
        for src in (self, other):
            for i, v in enumerate(src.c):
                out[src.off + i - off] += v
        return Series(off, out)

    def scale(self, k: int) -> "Series":
        return Series(self.off, [k * v for v in self.c])

    def mul(self, other: "Series", top: int) -> "Series":
        off = self.off + other.off
        n = top - off + 1
        if n <= 0:
            return Series(off, [])
        out = [0] * n
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            if i >= n:
                break
            jmax = min(len(other.c), n - i)
            for j in range(jmax):
                b = other.c[j]
                if b:
                    out[i + j] += a * b
        return Series(off, out)


def poly_mul_int(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def series_inverse(c: list[int], n: int) -> list[int]:
    """Inverse of a power series with constant term 1, to n terms."""
    assert c[0] == 1
    inv = [0] * n
    inv[0] = 1
    for k in range(1, n):
        acc = 0
        for i in range(1, min(k, len(c) - 1) + 1):
            acc += c[i] * inv[k - i]
        inv[k] = -acc
    return inv


def j_coefficients(n_terms: int) -> list[int]:
    """Coefficients c_0..c_{n_terms-1} of j = q^-1 (c_0 + c_1 q + ...)."""
    n = n_terms
    # Euler product prod (1 - q^k) via the pentagonal number theorem
    euler = [0] * n
    euler[0] = 1
    k = 1
    while True:
        done = True
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e < n:
                euler[e] += -1 if k % 2 else 1
                done = False
        if done:
            break
        k += 1
    p24 = euler
    for _ in range(3):  # ^8 via three squarings
        p24 = poly_mul_int(p24, p24)[:n]
    p24 = poly_mul_int(poly_mul_int(p24, p24)[:n], p24)[:n]  # ^8^3 = ^24
    sigma3 = [0] * n
    for d in range(1, n):
        for m in range(d, n, d):
            sigma3[m] += d * d * d
    e4 = [240 * v for v in sigma3]
    e4[0] = 1
    e4cecubed = poly_mul_int(poly_mul_int(e4, e4)[:n], e4)[:n]
    j = poly_mul_int(e4cecubed, series_inverse(p24, n))[:n]
    assert j[0] == 1 and j[1] == 744 and j[2] == 196884, "j-expansion sanity"
    return j


def derive(ell: int, jq: list[int]) -> dict[tuple[int, int], int]:
    # each truncated multiplication against a pole-bearing series shaves one
    # exponent of validity off the top; pad so every window stays exact
    top_q = GUARD + 2 * ell + 2
    top_u = ell * top_q + ell  # extra ell terms keep all j^m exact to ell*top_q
    n_u = top_u + 2  # coefficients of u^-1 .. u^top_u

    j_u = Series(-1, jq[:n_u])

    # power sums P_m(q) = ell * sum_{ell | n} [u^n] j^m
    power: Series = j_u
    p_series: dict[int, Series] = {}
    for m in range(1, ell + 1):
        if m > 1:
            power = power.mul(j_u, top_u)
        lo = -(m // ell) * ell
        coeffs = [ell * power.coeff(n) for n in range(lo, ell * top_q + 1, ell)]
        p_series[m] = Series(lo // ell, coeffs)

    # Newton's identities; divisions must be exact
    e_series: dict[int, Series] = {0: Series(0, [1])}
    for m in range(1, ell + 1):
        acc = Series(0, [])
        sign = 1
        for i in range(1, m + 1):
            term = e_series[m - i].mul(p_series[i], top_q)
            acc = acc.add(term.scale(sign))
            sign = -sign
        assert all(v % m == 0 for v in acc.c), f"Newton identity not integral at m={m}"
        e_series[m] = Series(acc.off, [v // m for v in acc.c]).trim(top_q)

    # j(ell tau) on the window [-ell, top_q]
    jl = Series(-ell, [0] * (top_q + ell + 1))
    for n in range(-1, top_q // ell + 1):
        if -ell <= ell * n <= top_q:
            jl.c[ell * n + ell] = jq[n + 1]

    # Phi(X) = (X - j(ell tau)) * sum_m (-1)^m e_m X^(ell - m)
    coeff_series: list[Series] = [Series(0, []) for _ in range(ell + 2)]
    for m in range(ell + 1):
        sign = -1 if m % 2 else 1
        # X * A(X) contributes (-1)^m e_m at X^(ell - m + 1)
        coeff_series[ell - m + 1] = coeff_series[ell - m + 1].add(e_series[m].scale(sign))
        # -j(ell tau) * A(X) contributes -(-1)^m jl * e_m at X^(ell - m)
        prod = e_series[m].mul(jl, GUARD)
        coeff_series[ell - m] = coeff_series[ell - m].add(prod.scale(-sign))

    # j-powers for the reduction to polynomials in j (computed with headroom:
    # every multiplication against the pole loses one exact top exponent)
    top_jp = GUARD + ell + 2
    j_pow: list[Series] = [Series(0, [1])]
    j_window = Series(-1, jq[: top_jp + ell + 5])
    for d in range(1, ell + 2):
        j_pow.append(j_pow[-1].mul(j_window, top_jp))
    j_pow = [s.trim(GUARD) for s in j_pow]

    table: dict[tuple[int, int], int] = {}
    for i in range(ell + 2):
        s = coeff_series[i].trim(GUARD)
        poly: dict[int, int] = {}
        while True:
            low = None
            for n in range(s.off, 1):
                if s.coeff(n):
                    low = n
                    break
            if low is None:
                break
            alpha = s.coeff(low)
            d = -low
            poly[d] = alpha
            s = s.add(j_pow[d].scale(-alpha).trim(GUARD))
        gamma = s.coeff(0)
        if gamma:
            poly[0] = gamma
            s = s.add(Series(0, [-gamma]))
        assert s.trim(GUARD).is_zero(), f"nonzero tail reducing X^{i} coefficient"
        for d, alpha in poly.items():
            table[(i, d)] = alpha
    return table


def validate(ell: int, table: dict[tuple[int, int], int]) -> None:
    deg = ell + 1
    full = [[table.get((i, k), 0) for k in range(deg + 1)] for i in range(deg + 1)]
    for i in range(deg + 1):
        for k in range(deg + 1):
            assert full[i][k] == full[k][i], f"Phi_{ell} not symmetric at {(i, k)}"
    assert full[deg][0] == 1 and full[0][deg] == 1
    assert all(full[deg][k] == 0 for k in range(1, deg + 1))
    # Kronecker congruence: Phi = (X^ell - Y)(X - Y^ell) mod ell
    kron = {(deg, 0): 1, (0, deg): 1, (ell, ell): -1, (1, 1): -1}
    for i in range(deg + 1):
        for k in range(deg + 1):
            assert (full[i][k] - kron.get((i, k), 0)) % ell == 0, (
                f"Kronecker congruence fails for Phi_{ell} at {(i, k)}"
            )
    print(f"  Phi_{ell}: {sum(1 for v in table.values() if v)} nonzero coeffs, "
          f"largest has {max(len(str(abs(v))) for v in table.values())} digits")


PHI2_KNOWN = {
    (3, 0): 1,
    (2, 2): -1,
    (2, 1): 1488,
    (2, 0): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000,
    (0, 0): -157464000000000,
}


def main() -> int:
    out_path = Path(__file__).resolve().parents[1] / "src" / "isodist" / "_modpoly_data.py"
    max_terms = max(LEVELS) * (GUARD + 2 * max(LEVELS) + 2) + max(LEVELS) + 4
    print(f"computing j-expansion to {max_terms} terms ...")
    jq = j_coefficients(max_terms)
    tables: dict[int, dict[tuple[int, int], int]] = {}
    for ell in LEVELS:
        t0 = time.time()
        tables[ell] = derive(ell, jq)
        validate(ell, tables[ell])
        print(f"  elapsed {time.time() - t0:.1f}s")
    # independent anchor: the textbook Phi_2
    for (i, k), v in PHI2_KNOWN.items():
        assert tables[2].get((i, k), 0) == v, f"Phi_2 disagrees with textbook at {(i, k)}"
        assert tables[2].get((k, i), 0) == v
    lines = [
        '"""Classical modular polynomial coefficient tables (generated file).',
        "",
        "Generated by scripts/derive_modular_polynomials.py; do not edit by hand.",
        "PHI[ell][(i, k)] is the coefficient of X^i Y^k as a decimal string, stored",
        'for i >= k only (the polynomials are symmetric in X and Y).',
        '"""',
        "",
        "PHI: dict[int, dict[tuple[int, int], str]] = {",
    ]
    for ell in LEVELS:
        lines.append(f"    {ell}: {{")
        for (i, k) in sorted(tables[ell], reverse=True):
            if i < k:
                continue
            v = tables[ell][(i, k)]
            if v:
                lines.append(f'        ({i}, {k}): "{v}",')
        lines.append("    },")
    lines.append("}")
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {out_path} ({out_path.stat().st_size} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
