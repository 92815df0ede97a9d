"""Command-line surface.

Subcommands: quad {class-number, decompose}, census, volcano, dist,
cheb {test, scan}, hilbert {show, split}, verify {deuring, volcano,
cm-equivalence}.  Exit status 0 = success, 1 = a verification/assertion
failure, 2 = usage error.  Output is deterministic: fixed field order, no
timestamps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import census as census_mod
from . import classfield, distributions, quadforms, verify, volcano
from .errors import IsodistError, VerificationError
from .finitefield import is_prime

__all__ = ["main", "build_parser"]


def _fraction(x) -> str:
    return distributions.fraction_str(x)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload) -> None:
    _emit(args, json.dumps(payload, indent=2) + "\n")


def _require_prime(p: int) -> int:
    if p < 5 or not is_prime(p):
        raise IsodistError(f"need a prime p >= 5, got {p}")
    return p


# --- subcommand handlers ------------------------------------------------------


def _cmd_quad_class_number(args) -> int:
    cd = quadforms.class_number(args.disc)
    _emit_json(args, {
        "disc": cd.disc,
        "h": cd.h,
        "w": cd.w,
        "h_star": _fraction(cd.h_star),
        "ring_class_degree": cd.ring_class_degree,
    })
    return 0


def _cmd_quad_decompose(args) -> int:
    wd = quadforms.weighted_decomposition(args.delta)
    _emit_json(args, {
        "delta": wd.delta,
        "v": wd.decomposition.v,
        "D_K": wd.decomposition.fundamental,
        "divisors": list(wd.decomposition.divisors),
        "per_f": [
            {
                "f": f,
                "D_f": cd.disc,
                "h": cd.h,
                "w": cd.w,
                "h_star": _fraction(cd.h_star),
            }
            for f, cd in wd.per_f.items()
        ],
        "total_h_star": _fraction(wd.total),
        "kronecker_sum": wd.kronecker_sum,
    })
    return 0


def _cmd_census(args) -> int:
    p = _require_prime(args.p)
    result = census_mod.build_census(p, bound=args.census_bound)
    skipped = volcano.classify_census(result, strict=False)
    payload = {
        "p": p,
        "supersingular_classes": len(result.supersingular),
        "unclassified_traces": skipped,
        "classes": [census_mod.summary_json(result.classes[t]) for t in sorted(result.classes)],
    }
    if args.t is not None:
        if args.t not in result.classes:
            raise IsodistError(f"no ordinary class with t = {args.t} over F_{p}")
        payload = census_mod.summary_json(result.classes[args.t])
    _emit_json(args, payload)
    return 0


def _cmd_volcano(args) -> int:
    p = _require_prime(args.p)
    result = verify.classified_census(p, bound=args.census_bound)
    if args.t not in result.classes:
        raise IsodistError(f"no ordinary class with t = {args.t} over F_{p}")
    summary = result.classes[args.t]
    comps = volcano.components(summary, args.ell)
    if args.dot:
        dot = "".join(volcano.to_dot(c, summary) for c in comps)
        with open(args.dot, "w") as fh:
            fh.write(dot)
    if args.output == "dot":
        _emit(args, "".join(volcano.to_dot(c, summary) for c in comps))
        return 0
    payload = []
    status = 0
    for comp in comps:
        entry = {
            "ell": comp.ell,
            "depth": comp.depth,
            "vertices": list(comp.vertices),
            "levels": {str(j): comp.level_of[j] for j in comp.vertices},
            "level_sizes": list(comp.level_sizes()),
            "contains_special_j": comp.contains_special_j,
        }
        if not comp.contains_special_j:
            report = volcano.verify_structure(comp, summary)
            entry["structure_ok"] = report.ok
            entry["violations"] = list(report.violations)
            if not report.ok:
                status = 1
        payload.append(entry)
    _emit_json(args, {"p": p, "t": args.t, "delta": summary.delta, "components": payload})
    return status


def _cmd_dist(args) -> int:
    if args.delta is not None:
        delta = args.delta
    else:
        if args.p is None or args.t is None:
            raise IsodistError("dist needs either --delta or both --p and --t")
        p = _require_prime(args.p)
        if args.t == 0 or args.t * args.t >= 4 * p:
            raise IsodistError(f"t = {args.t} is not an ordinary trace for p = {p}")
        delta = args.t * args.t - 4 * p
    report = distributions.exact_density(delta)
    level = distributions.level_masses(delta, args.ell) if args.ell else None
    _emit_json(args, distributions.density_json(report, level))
    return 0


def _cmd_cheb_test(args) -> int:
    p = _require_prime(args.p)
    census = None
    if p <= args.census_bound:
        census = verify.classified_census(p)
    record = classfield.cm_existence(args.disc, p, census=census)
    _emit_json(args, {
        "disc": record.disc,
        "p": record.p,
        "exists": record.exists,
        "by_representation": record.by_representation,
        "by_splitting": record.by_splitting,
        "by_census": record.by_census,
        "representation": list(record.representation) if record.representation else None,
        "root_count": record.root_count,
    })
    return 0


def _cmd_cheb_scan(args) -> int:
    report = classfield.chebotarev_scan(args.disc, args.xmax, threads=args.threads)
    if args.output == "json":
        _emit_json(args, classfield.scan_json(report))
    else:
        _emit(args, classfield.scan_csv(report))
    return 0


def _cmd_hilbert_show(args) -> int:
    coeffs = classfield.hilbert_polynomial(args.disc)
    _emit_json(args, {
        "disc": args.disc,
        "degree": len(coeffs) - 1,
        "coefficients": [str(c) for c in coeffs],
    })
    return 0


def _cmd_hilbert_split(args) -> int:
    p = _require_prime(args.p)
    record = classfield.cm_existence(args.disc, p)
    h_mod = classfield.hilbert_mod_p(args.disc, p)
    from .finitefield import roots_mod_p

    roots = roots_mod_p(h_mod, p)
    _emit_json(args, {
        "disc": args.disc,
        "p": p,
        "coefficients_mod_p": list(h_mod),
        "roots": [r for r, _ in roots],
        "distinct_roots": record.root_count if record.root_count is not None else len(roots),
        "splits_completely": bool(record.by_splitting),
        "h": quadforms.class_number(args.disc).h,
    })
    return 0


def _cmd_verify_deuring(args) -> int:
    reports, skipped = verify.deuring_sweep(p_max=args.census_bound)
    bad = [r for r in reports if not r.ok]
    for r in bad:
        print(f"FAIL p={r.p} t={r.t} delta={r.delta}: {r.mismatches()}", file=sys.stderr)
    _emit(args, (
        f"deuring: {len(reports)} classes checked up to p <= {args.census_bound}, "
        f"{len(bad)} mismatches, {skipped} skipped\n"
    ))
    return 1 if bad else 0


def _cmd_verify_volcano(args) -> int:
    reports, special = verify.volcano_sweep(p_max=args.census_bound, ells=tuple(args.ell or (2, 3)))
    bad = [r for r in reports if not r.ok]
    for r in bad:
        print(f"FAIL p={r.p} t={r.t} l={r.ell}: {r.violations}", file=sys.stderr)
    _emit(args, (
        f"volcano: {len(reports)} components checked up to p <= {args.census_bound}, "
        f"{len(bad)} violations, {special} special components reported only\n"
    ))
    return 1 if bad else 0


def _cmd_verify_cm(args) -> int:
    summary = verify.equivalence_sweep(p_max=args.xmax, census_max=args.census_bound)
    _emit(args, (
        f"cm-equivalence: {summary.pairs_checked} (D, p) pairs agreed "
        f"({summary.census_checked} with census channel, {summary.positives} positives, "
        f"{summary.skipped_ramified} ramified and {summary.skipped_nonsquarefree} "
        f"non-squarefree pairs skipped)\n"
    ))
    return 0


# --- parser -------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", metavar="PATH", help="write the report to a file")
    parser.add_argument(
        "--output", choices=("json", "csv", "dot", "text"), default=None,
        help="output format (default depends on the subcommand)",
    )
    parser.add_argument(
        "--threads", type=int, default=max(1, os.cpu_count() or 1),
        help="worker processes for scans (default: available parallelism)",
    )


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="isodist",
        description="Endomorphism-ring distributions in ordinary isogeny classes over F_p",
    )
    sub = top.add_subparsers(dest="command", required=True)

    quad = sub.add_parser("quad", help="discriminants, forms, class numbers")
    quad_sub = quad.add_subparsers(dest="subcommand", required=True)
    qcn = quad_sub.add_parser("class-number", help="h, w, h* for a discriminant")
    qcn.add_argument("-D", "--disc", type=int, required=True)
    _add_common(qcn)
    qcn.set_defaults(func=_cmd_quad_class_number)
    qd = quad_sub.add_parser("decompose", help="delta = v^2 D_K and the divisor lattice")
    qd.add_argument("--delta", type=int, required=True)
    _add_common(qd)
    qd.set_defaults(func=_cmd_quad_decompose)

    cen = sub.add_parser("census", help="exhaustive isogeny-class census of F_p")
    cen.add_argument("--p", type=int, required=True)
    cen.add_argument("--t", type=int, default=None, help="restrict to one trace")
    cen.add_argument("--census-bound", type=int, default=census_mod.DEFAULT_CENSUS_BOUND)
    _add_common(cen)
    cen.set_defaults(func=_cmd_census)

    vol = sub.add_parser("volcano", help="l-isogeny volcano of one class")
    vol.add_argument("--p", type=int, required=True)
    vol.add_argument("--t", type=int, required=True)
    vol.add_argument("--ell", type=int, required=True)
    vol.add_argument("--dot", metavar="PATH", help="write DOT graph to a file")
    vol.add_argument("--census-bound", type=int, default=census_mod.DEFAULT_CENSUS_BOUND)
    _add_common(vol)
    vol.set_defaults(func=_cmd_volcano)

    dist = sub.add_parser("dist", help="global weighted distributions")
    dist.add_argument("--delta", type=int, default=None)
    dist.add_argument("--p", type=int, default=None)
    dist.add_argument("--t", type=int, default=None)
    dist.add_argument("--ell", type=int, default=None, help="also emit the l-adic law")
    _add_common(dist)
    dist.set_defaults(func=_cmd_dist)

    cheb = sub.add_parser("cheb", help="CM existence tests and Chebotarev scans")
    cheb_sub = cheb.add_subparsers(dest="subcommand", required=True)
    ct = cheb_sub.add_parser("test", help="all CM existence channels at one prime")
    ct.add_argument("-D", "--disc", type=int, required=True)
    ct.add_argument("--p", type=int, required=True)
    ct.add_argument("--census-bound", type=int, default=500)
    _add_common(ct)
    ct.set_defaults(func=_cmd_cheb_test)
    cs = cheb_sub.add_parser("scan", help="density of CM primes up to a bound")
    cs.add_argument("-D", "--disc", type=int, required=True)
    cs.add_argument("--xmax", type=int, required=True)
    _add_common(cs)
    cs.set_defaults(func=_cmd_cheb_scan)

    hil = sub.add_parser("hilbert", help="embedded Hilbert class polynomials")
    hil_sub = hil.add_subparsers(dest="subcommand", required=True)
    hs = hil_sub.add_parser("show", help="integer coefficients of H_D")
    hs.add_argument("-D", "--disc", type=int, required=True)
    _add_common(hs)
    hs.set_defaults(func=_cmd_hilbert_show)
    hp = hil_sub.add_parser("split", help="factorization behaviour of H_D mod p")
    hp.add_argument("-D", "--disc", type=int, required=True)
    hp.add_argument("--p", type=int, required=True)
    _add_common(hp)
    hp.set_defaults(func=_cmd_hilbert_split)

    ver = sub.add_parser("verify", help="run the theorem verification suites")
    ver_sub = ver.add_subparsers(dest="subcommand", required=True)
    vd = ver_sub.add_parser("deuring", help="census counts = h(D_f) for all classes")
    vd.add_argument("--census-bound", type=int, default=500)
    _add_common(vd)
    vd.set_defaults(func=_cmd_verify_deuring)
    vv = ver_sub.add_parser("volcano", help="volcano structure theorem on all components")
    vv.add_argument("--census-bound", type=int, default=500)
    vv.add_argument("--ell", type=int, action="append", help="levels to check (default 2 and 3)")
    _add_common(vv)
    vv.set_defaults(func=_cmd_verify_volcano)
    vc = ver_sub.add_parser("cm-equivalence", help="CM existence channels agree")
    vc.add_argument("--xmax", type=int, default=2000, help="prime bound for the channels")
    vc.add_argument("--census-bound", type=int, default=500)
    _add_common(vc)
    vc.set_defaults(func=_cmd_verify_cm)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"ERROR VERIFICATION_FAILED: {exc}", file=sys.stderr)
        return 1
    except IsodistError as exc:
        print(f"ERROR {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"ERROR INVALID_INPUT: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
