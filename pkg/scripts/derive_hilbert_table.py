#!/usr/bin/env python3
"""Derive the embedded Hilbert class polynomial table with mpmath.

For each discriminant D in the fixed list, H_D(X) is the monic integer
polynomial whose roots are j((-b + sqrt(D)) / 2a) over the reduced primitive
forms (a, b, c) of discriminant D.  The roots are evaluated with mpmath's
Klein j (rescaled by 1728) at two working precisions; coefficients must round
to the same integers at both, with tiny rounding residue, before they are
accepted.  Output is pasted into src/isodist/classfield.py as HILBERT_TABLE.
"""

from __future__ import annotations

import sys
from pathlib import Path

import mpmath

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from isodist.quadforms import reduced_forms  # noqa: E402

DISCS = (-3, -4, -7, -8, -11, -12, -15, -16, -19, -20, -23, -24,
         -27, -28, -31, -32, -36, -43, -47, -64, -67, -163)

# anchors known exactly (class number 1); any mismatch aborts the run
KNOWN = {
    -3: (0,),
    -4: (-1728,),
    -7: (3375,),
    -8: (-8000,),
    -11: (32768,),
    -12: (-54000,),
    -16: (-287496,),
    -19: (884736,),
    -27: (12288000,),
    -28: (-16581375,),
    -43: (884736000,),
    -67: (147197952000,),
    -163: (262537412640768000,),
}


def hilbert_coefficients(disc: int, dps: int) -> tuple[int, ...]:
    with mpmath.workdps(dps):
        assert abs(1728 * mpmath.kleinj(mpmath.mpc(0, 1)) - 1728) < 1e-20
        roots = []
        for form in reduced_forms(disc):
            tau = (-form.b + mpmath.sqrt(mpmath.mpc(disc))) / (2 * form.a)
            roots.append(1728 * mpmath.kleinj(tau))
        poly = [mpmath.mpc(1)]
        for r in roots:
            poly = [mpmath.mpc(0)] + poly
            for i in range(len(poly) - 1):
                poly[i] -= r * poly[i + 1]
        out = []
        for c in poly:
            assert abs(c.imag) < mpmath.mpf(10) ** (-dps // 3)
            n = int(mpmath.nint(c.real))
            assert abs(c.real - n) < mpmath.mpf(10) ** (-dps // 3), (disc, c)
            out.append(n)
        assert out[-1] == 1
        return tuple(out)


def main() -> int:
    lines = ["HILBERT_TABLE: dict[int, tuple[int, ...]] = {"]
    for disc in DISCS:
        lo = hilbert_coefficients(disc, 90)
        hi = hilbert_coefficients(disc, 150)
        assert lo == hi, f"precision disagreement at D = {disc}"
        if disc in KNOWN:
            assert lo[:-1] == KNOWN[disc], f"known constant term mismatch at D = {disc}"
        h = len(lo) - 1
        print(f"D={disc}: degree {h}, coeffs {lo}")
        lines.append(f"    {disc}: {lo!r},")
    lines.append("}")
    out = Path(__file__).with_name("hilbert_table_generated.py")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
