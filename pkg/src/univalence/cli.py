"""Command-line front end.

Subcommands: ``certify``, ``oracle``, ``gallery``, ``scan`` and ``profile``.
Exit status is 0 when a run completes without finding anything, 2 when it
finds a refutation, a failed gallery claim or a conjecture violation, and 1
on errors (bad arguments, malformed descriptors).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict
from typing import List, Optional

import numpy as np

from . import certify as C
from .coeffs import a2_scan, bn_scan, conjecture_scan
from .descriptor import load_descriptor, to_descriptor
from .errors import BadOrder, DescriptorError, ModelError, ZeroInDisk
from .gallery import GALLERY, build, verify_gallery
from .model import MeroFunction, u_operator, z_over_f
from .oracle import OracleConfig, injectivity_scan

EXIT_OK, EXIT_ERROR, EXIT_FOUND = 0, 1, 2


def _clean(x):
    """Make a value JSON-safe: complex -> [re, im], non-finite -> null."""
    if isinstance(x, (complex, np.complexfloating)):
        return [_clean(float(x.real)), _clean(float(x.imag))]
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else None
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, np.ndarray)):
        return [_clean(v) for v in x]
    return x


def dumps(obj) -> str:
    # repr-based float output is the shortest string that round-trips exactly
    return json.dumps(_clean(obj), indent=2, allow_nan=False) + "\n"


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _add_member_args(sp: argparse.ArgumentParser) -> None:
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="JSON function descriptor")
    src.add_argument("--gallery", choices=sorted(GALLERY), help="named closed-form member")
    sp.add_argument("--p", type=float, default=0.5, help="pole of the gallery member")
    sp.add_argument("--lambda", dest="lam", type=float, default=None, help="gallery parameter lambda")
    sp.add_argument("--a", type=_complex_arg, default=None, help="gallery parameter a")
    sp.add_argument("--n", type=int, default=None, help="gallery parameter n")
    sp.add_argument("--theta", type=float, default=None, help="gallery parameter theta")


def _add_sup_args(sp: argparse.ArgumentParser) -> None:
    d = C.CertifyConfig()
    sp.add_argument("--order", type=int, default=d.order, help="series truncation order")
    sp.add_argument("--r-max", type=float, default=d.r_max)
    sp.add_argument("--n-radii", type=int, default=d.n_radii)
    sp.add_argument("--n-angles", type=int, default=d.n_angles)
    sp.add_argument("--tol-rel", type=float, default=d.tol_rel)


def _add_oracle_args(sp: argparse.ArgumentParser) -> None:
    d = OracleConfig()
    sp.add_argument("--oracle-n-r", type=int, default=d.n_r)
    sp.add_argument("--oracle-n-theta", type=int, default=d.n_theta)
    sp.add_argument("--oracle-r-max", type=float, default=d.r_max)
    sp.add_argument("--oracle-delta-sep", type=float, default=d.delta_sep)


def _add_output_args(sp: argparse.ArgumentParser, default_format: str = "json") -> None:
    sp.add_argument("--format", choices=("json", "csv"), default=default_format)
    sp.add_argument("--output", help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="univalence", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("certify", help="run every applicable criterion on one member")
    _add_member_args(sp)
    sp.add_argument("--against", type=float, default=1.0, help="lambda to certify against")
    sp.add_argument("--nth", type=int, nargs="+", default=[3, 4, 5], help="orders for the n-th derivative test")
    _add_sup_args(sp)
    _add_output_args(sp)

    sp = sub.add_parser("oracle", help="grid injectivity scan and critical points")
    _add_member_args(sp)
    _add_oracle_args(sp)
    _add_output_args(sp)

    sp = sub.add_parser("gallery", help="verify gallery claims, or describe one member with --name")
    sp.add_argument("--name", choices=sorted(GALLERY), default=None)
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--lambda", dest="lam", type=float, default=0.5)
    sp.add_argument("--a", type=_complex_arg, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--theta", type=float, default=None)
    _add_sup_args(sp)
    _add_oracle_args(sp)
    _add_output_args(sp)

    sp = sub.add_parser("scan", help="randomized coefficient scans")
    sp.add_argument("--kind", choices=("conjecture", "bn", "a2"), default="conjecture")
    sp.add_argument("--p", type=float, default=0.3)
    sp.add_argument("--lambda", dest="lam", type=float, default=0.7)
    sp.add_argument("--nmin", type=int, default=3)
    sp.add_argument("--nmax", type=int, default=8)
    sp.add_argument("--trials", type=int, default=500)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--w-degree", type=int, default=None, help="fix the degree of w (default: random 0..6)")
    _add_output_args(sp)

    sp = sub.add_parser("profile", help="CSV of max|U_f| per radius and |U_f| around |z| = r_max")
    _add_member_args(sp)
    _add_sup_args(sp)
    _add_output_args(sp, default_format="csv")
    return parser


def _member(args) -> MeroFunction:
    if args.file:
        return load_descriptor(args.file)
    entry = GALLERY[args.gallery]
    given = {"p": args.p, "lam": args.lam, "a": args.a, "n": args.n, "theta": args.theta}
    params = {k: v for k, v in given.items() if k in entry.params and v is not None}
    missing = [k for k in entry.params if k not in params]
    if missing:
        raise DescriptorError(f"missing parameter(s) {missing}", f"gallery {args.gallery}")
    return build(args.gallery, **params)


def _certify_cfg(args) -> C.CertifyConfig:
    return C.CertifyConfig(args.order, args.r_max, args.n_radii, args.n_angles, args.tol_rel)


def _oracle_cfg(args) -> OracleConfig:
    return OracleConfig(n_r=args.oracle_n_r, n_theta=args.oracle_n_theta, r_max=args.oracle_r_max,
                        delta_sep=args.oracle_delta_sep)


def _config(args, **extra) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in ("output", "func")}
    cfg.update(extra)
    return cfg


def _result_row(r: C.CertificateResult) -> dict:
    return {"method": r.method, "verdict": str(r.verdict), "margin": r.margin, "threshold": r.threshold,
            "value": r.value, "witness": r.witness, "r_max": r.r_max}


def cmd_certify(args):
    f = _member(args)
    cfg = _certify_cfg(args)
    lam = args.against
    rows = [_result_row(C.certify_thmB(f, lam, cfg)), _result_row(C.certify_vp(f, lam, cfg))]
    checks = [("thm3", lambda: C.certify_second_derivative(f, lam, cfg))]
    checks += [(f"thm4_n{n}", (lambda n=n: C.certify_nth(f, n, cfg))) for n in args.nth]
    for method, run in checks:
        try:
            rows.append(_result_row(run()))
        except (ZeroInDisk, BadOrder) as exc:
            rows.append({"method": method, "verdict": "NotApplicable", "margin": None, "threshold": None,
                         "value": None, "witness": None, "r_max": None, "reason": str(exc)})
    try:
        tests = C.coefficient_tests(f, lam, n_for_iii=3, order=cfg.order)
    except ZeroInDisk as exc:
        tests = []
        rows.append({"method": "thm5", "verdict": "NotApplicable", "reason": str(exc)})
    for t in tests:
        verdict = "CertifiedDisk" if (t.status == "pass" and t.rigorous) else "Inconclusive"
        rows.append({"method": t.name, "verdict": verdict, "margin": t.margin, "threshold": t.threshold,
                     "value": t.total, "witness": None, "r_max": None, "status": t.status})
    report = {"config": _config(args, resolved=asdict(cfg), pole=f.pole, descriptor=to_descriptor(f)),
              "results": rows}
    found = any(r["verdict"] == "Refuted" for r in rows)
    if args.format == "csv":
        cols = ["method", "verdict", "threshold", "value", "margin", "witness_re", "witness_im"]
        body = []
        for r in rows:
            w = r.get("witness")
            body.append([r["method"], r["verdict"], r.get("threshold"), r.get("value"), r.get("margin"),
                         None if w is None else w.real, None if w is None else w.imag])
        return _csv(cols, body), found
    return dumps(report), found


def cmd_oracle(args):
    f = _member(args)
    cfg = _oracle_cfg(args)
    rep = injectivity_scan(f, cfg)
    result = {"verdict": rep.verdict, "witness": rep.witness, "critical_point": rep.critical_point,
              "grid": rep.grid, "excluded": rep.excluded, "note": rep.note}
    if args.format == "csv":
        z = rep.witness or rep.critical_point or ()
        return _csv(["verdict", "z1_re", "z1_im", "z2_re", "z2_im"],
                    [[rep.verdict] + sum(([c.real, c.imag] for c in z if isinstance(c, complex)), [])]), not rep.clean
    report = {"config": _config(args, resolved=asdict(cfg), exclusion=rep.excluded), "results": [result]}
    return dumps(report), not rep.clean


def cmd_gallery(args):
    if args.name:
        args.gallery, args.file = args.name, None
        f = _member(args)
        s = z_over_f(f, args.order)
        result = {"name": args.name, "descriptor": to_descriptor(f), "residue": f.residue,
                  "b": list(s.coeffs[:12]), "u": list(u_operator(f, args.order).coeffs[:12])}
        return (dumps({"config": _config(args), "results": [result]}) if args.format == "json"
                else _csv(["n", "b_re", "b_im"], [[n, b.real, b.imag] for n, b in enumerate(s.coeffs[:12])])), False
    rep = verify_gallery(args.p, args.lam, _certify_cfg(args), _oracle_cfg(args))
    rows = [{"claim": c.name, "passed": c.passed, "detail": c.detail, "tolerance": c.tolerance} for c in rep.claims]
    if args.format == "csv":
        return _csv(["claim", "passed", "detail", "tolerance"],
                    [[r["claim"], r["passed"], r["detail"], r["tolerance"]] for r in rows]), not rep.passed
    return dumps({"config": _config(args), "results": rows}), not rep.passed


def cmd_scan(args):
    if args.kind == "conjecture":
        rep = conjecture_scan(args.p, args.lam, (args.nmin, args.nmax), args.trials, args.seed, args.w_degree)
    elif args.kind == "bn":
        rep = bn_scan(args.p, args.lam, args.nmax, args.trials, args.seed, args.w_degree)
    else:
        rep = a2_scan(args.p, args.lam, args.trials, args.seed, args.w_degree)
    if args.format == "csv":
        return _csv(["n", "max_ratio", "argmax_trial", "reference_ratio"], rep.csv_rows()), rep.violated
    return dumps({"config": _config(args), "results": [rep.to_dict()]}), rep.violated


def cmd_profile(args):
    f = _member(args)
    u = u_operator(f, args.order)
    rows = []
    for r in C.sample_radii(args.r_max, args.n_radii):
        value, theta = C.circle_max(u, r, args.n_angles)
        rows.append([r, theta, value])
    theta = 2 * np.pi * np.arange(args.n_angles) / args.n_angles
    vals = np.abs(u(args.r_max * np.exp(1j * theta)))
    rows += [[args.r_max, t, v] for t, v in zip(theta, vals)]
    if args.format == "json":
        return dumps({"config": _config(args), "results": [{"r": r, "theta": t, "abs_u": v} for r, t, v in rows]}), False
    return _csv(["r", "theta", "abs_u"], rows), False


def _csv(header: List[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if v is None else (repr(float(v)) if isinstance(v, (float, np.floating)) else v)
                    for v in row])
    return buf.getvalue()


COMMANDS = {"certify": cmd_certify, "oracle": cmd_oracle, "gallery": cmd_gallery,
            "scan": cmd_scan, "profile": cmd_profile}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, found = COMMANDS[args.command](args)
    except (DescriptorError, ModelError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FOUND if found else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
