"""Command line front end.

    spherical-vectors arg "sqrt(2)/2 (1 + i)"
    spherical-vectors mul "k" "i"
    spherical-vectors add "sqrt(6)/6 (2-j-k)" "sqrt(2)/2 (1+i)"
    spherical-vectors pair "(1,0,0)" "(0,1,0)"
    spherical-vectors paper-check --json
    spherical-vectors figure fig6 out.svg

Exit status: 0 on success, 1 if a check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import goldens
from .literals import parse_quaternion, parse_spherical_vector, parse_vector
from .polar import arg, argument_pair
from .quaternion import Quaternion, mul, norm
from .scene import FIGURES, figure_scene
from .spherical_vector import SphericalVector, add, chain_pair, from_pair, mu

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def fmt_real(x: float) -> str:
    s = format(float(x), ".15g")
    return "0" if s == "-0" else s


def fmt_vec(v) -> str:
    return "(" + ", ".join(fmt_real(c) for c in v) + ")"


def fmt_quat(q) -> str:
    q = Quaternion.of(q)
    out = fmt_real(q.s)
    for coef, unit in ((q.ci, "i"), (q.cj, "j"), (q.ck, "k")):
        text = fmt_real(coef)
        out += f" - {text[1:]}{unit}" if text.startswith("-") else f" + {text}{unit}"
    return out


def _kind(alpha: SphericalVector) -> str:
    if alpha.is_zero:
        return "zero"
    if alpha.is_straight:
        return "straight"
    return "proper"


def _sv_dict(alpha: SphericalVector) -> dict:
    return {"lambda": alpha.lam, "n": list(alpha.n), "kind": _kind(alpha)}


def _emit(args, data: dict, lines: list[str]):
    if args.json:
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))


def cmd_arg(args) -> int:
    q = parse_quaternion(args.quaternion)
    alpha = arg(q)
    u, v = argument_pair(q)
    _emit(args, {
        "quaternion": list(q), "modulus": norm(q), "arg": _sv_dict(alpha),
        "pair": {"u": list(u), "v": list(v)},
    }, [
        f"q       = {fmt_quat(q)}",
        f"|q|     = {fmt_real(norm(q))}",
        f"lambda  = {fmt_real(alpha.lam)}",
        f"n       = {fmt_vec(alpha.n)}",
        f"kind    = {_kind(alpha)}",
        f"pair u  = {fmt_vec(u)}",
        f"pair v  = {fmt_vec(v)}",
    ])
    return EXIT_OK


def cmd_mul(args) -> int:
    p, q = parse_quaternion(args.p), parse_quaternion(args.q)
    pq = mul(p, q)
    lines = [f"pq = {fmt_quat(pq)}"]
    data = {"product": list(pq)}
    if norm(p) > 0 and norm(q) > 0:
        total = add(arg(q), arg(p))
        lines += ["arg(pq) = arg(q) + arg(p):",
                  f"  lambda = {fmt_real(total.lam)}",
                  f"  n      = {fmt_vec(total.n)}"]
        data["arg"] = _sv_dict(total)
    _emit(args, data, lines)
    return EXIT_OK


def cmd_add(args) -> int:
    alpha = parse_spherical_vector(args.alpha)
    beta = parse_spherical_vector(args.beta)
    total = add(alpha, beta)
    u, v, w = chain_pair(alpha, beta, flip=args.flip)
    _emit(args, {
        "alpha": _sv_dict(alpha), "beta": _sv_dict(beta), "sum": _sv_dict(total),
        "chain": {"u": list(u), "v": list(v), "w": list(w)},
        "quaternion": list(mu(total)),
    }, [
        f"alpha        = ({fmt_real(alpha.lam)}, {fmt_vec(alpha.n)})",
        f"beta         = ({fmt_real(beta.lam)}, {fmt_vec(beta.n)})",
        f"alpha + beta = ({fmt_real(total.lam)}, {fmt_vec(total.n)})  [{_kind(total)}]",
        f"mu(sum)      = {fmt_quat(mu(total))}",
        f"chain u      = {fmt_vec(u)}",
        f"chain v      = {fmt_vec(v)}",
        f"chain w      = {fmt_vec(w)}",
    ])
    return EXIT_OK


def cmd_pair(args) -> int:
    u, v = parse_vector(args.u), parse_vector(args.v)
    alpha = from_pair(u, v)
    _emit(args, {"arg": _sv_dict(alpha), "quaternion": list(mu(alpha))}, [
        f"lambda = {fmt_real(alpha.lam)}",
        f"n      = {fmt_vec(alpha.n)}",
        f"mu     = {fmt_quat(mu(alpha))}",
    ])
    return EXIT_OK


def cmd_paper_check(args) -> int:
    results = goldens.run_checks(tol=args.tol, perturb=args.perturb)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({
            "tolerance": args.tol,
            "passed": ok,
            "total": len(results),
            "failed": sum(not r.passed for r in results),
            "cases": [r.as_dict() for r in results],
        }, indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.id:<28} err={r.max_error:.3g}  {r.description}")
        print(f"{sum(r.passed for r in results)}/{len(results)} passed (tol={args.tol:g})")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_figure(args) -> int:
    scene = figure_scene(args.name)
    fmt = args.format or ("svg" if args.out.lower().endswith(".svg") else "json")
    text = scene.to_svg() if fmt == "svg" else scene.to_json()
    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps({"figure": args.name, "format": fmt, "path": args.out,
                          "points": len(scene.points), "arcs": len(scene.arcs)}))
    else:
        print(f"wrote {args.out} ({fmt}, {len(scene.points)} points, {len(scene.arcs)} arcs)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help="comparison tolerance (default %(default)s)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="spherical-vectors",
        description="Spherical-vector arguments of quaternions.")
    parser.add_argument("--tol", type=float, default=goldens.DEFAULT_TOL,
                        help="comparison tolerance (default %(default)s)")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arg", parents=[common], help="argument and a representative pair of a quaternion")
    p.add_argument("quaternion")
    p.set_defaults(func=cmd_arg)

    p = sub.add_parser("mul", parents=[common], help="quaternion product and its argument")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("add", parents=[common],
                       help="sum of two spherical-vectors (sv(lam,a,b,c) or quaternions)")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("--flip", action="store_true", help="report the other chain (-u, -v, -w)")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("pair", parents=[common], help="spherical-vector of an ordered pair of vectors")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("paper-check", parents=[common], help="verify the worked examples")
    p.add_argument("--perturb", type=float, default=0.0,
                   help="shift every expected value (harness self-test)")
    p.set_defaults(func=cmd_paper_check)

    p = sub.add_parser("figure", parents=[common], help="write figure scene data")
    p.add_argument("name", choices=FIGURES)
    p.add_argument("out")
    p.add_argument("--format", choices=("json", "svg"),
                   help="output format (default: from the file extension)")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
