"""Command-line front end.

    wedderburn decompose ALGEBRA [--seed N] [--out CERT]
    wedderburn verify ALGEBRA CERT
    wedderburn generate {matrix,cyclic-group,quaternion,direct-sum} ... [--out FILE]
    wedderburn scramble ALGEBRA [--seed N | --matrix P.json [--invert]] [--out FILE]
    wedderburn validate ALGEBRA

Exit codes: 0 success, 1 input error, 2 inconclusive, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io
from .algebra import (change_of_basis, direct_sum, group_algebra_cyclic, matrix_algebra,
                      quaternion_algebra, restrict_scalars, scramble, validate)
from .certify import verify_certificate
from .decompose import decompose
from .errors import AlgebraError, FormatError
from .fields import GF, QQ
from .linalg import inverse

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE, EXIT_VERIFY = 0, 1, 2, 3


def _field_label(F) -> str:
    spec = F.spec()
    if spec["kind"] == "prime":
        return f"GF({spec['p']})"
    if spec["kind"] == "extension":
        return f"GF({spec['p']}^{spec['deg']})"
    return "QQ"


def summary_line(cert) -> str:
    F = cert.algebra.field
    if cert.outcome == "decomposed":
        return (f"decomposed n={cert.n} dimD={cert.corner_dim} field={_field_label(F)} "
                f"commutativeD={str(cert.commutative).lower()}")
    if cert.outcome == "not_prime":
        a, b = (json.dumps([F.to_json(x) for x in w]).replace(" ", "") for w in cert.witness)
        return f"not_prime witness={a},{b}"
    return f"inconclusive retries={cert.retries}"


def _emit(text: str, out) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_decompose(args) -> int:
    A = io.read_algebra(args.input)
    cert = decompose(A, seed=args.seed)
    if args.out:
        io.write_certificate(cert, args.out)
    print(summary_line(cert))
    return EXIT_INCONCLUSIVE if cert.outcome == "inconclusive" else EXIT_OK


def cmd_verify(args) -> int:
    A = io.read_algebra(args.algebra)
    cert = io.read_certificate(args.certificate, A)
    report = verify_certificate(A, cert)
    print(report.render())
    return EXIT_OK if report.ok else EXIT_VERIFY


def _field_from_args(args):
    if getattr(args, "rational", False):
        return QQ
    if args.p is None:
        raise FormatError("--p is required (or --rational)")
    if args.modulus:
        return GF(args.p, modulus=[int(c) for c in args.modulus.split(",")])
    return GF(args.p, args.deg)


def cmd_generate(args) -> int:
    if args.kind == "matrix":
        A = matrix_algebra(args.n, _field_from_args(args))
    elif args.kind == "cyclic-group":
        A = group_algebra_cyclic(args.m, _field_from_args(args))
    elif args.kind == "quaternion":
        A = quaternion_algebra()
    else:
        A = direct_sum(io.read_algebra(args.left), io.read_algebra(args.right))
    if getattr(args, "over_prime", False):
        A = restrict_scalars(A)
    report = validate(A)
    if not report.ok:
        print(f"generated algebra failed validation: {report}", file=sys.stderr)
        return EXIT_INPUT
    _emit(io.dumps_algebra(A), args.out)
    return EXIT_OK


def cmd_scramble(args) -> int:
    A = io.read_algebra(args.input)
    if args.matrix:
        with open(args.matrix, encoding="utf-8") as fh:
            F, P = io.loads_matrix(fh.read(), args.matrix)
        A.field.check(F)
        if args.invert:
            P = inverse(F, P)
        B = change_of_basis(A, P)
    else:
        B, P = scramble(A, args.seed)
    _emit(io.dumps_algebra(B), args.out)
    sidecar = args.sidecar or (f"{args.out}.basis.json" if args.out else None)
    if sidecar:
        with open(sidecar, "w", encoding="utf-8") as fh:
            fh.write(io.dumps_matrix(A.field, P))
    return EXIT_OK


def cmd_validate(args) -> int:
    A = io.read_algebra(args.input, check=False)
    report = validate(A)
    print(f"dim={A.dim} field={_field_label(A.field)} {report}")
    return EXIT_OK if report.ok else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wedderburn",
                                     description="Certified R = M_n(D) decompositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose an algebra file")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="certificate file to write")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a certificate against its algebra")
    p.add_argument("algebra")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a fixture algebra")
    gen = p.add_subparsers(dest="kind", required=True)
    for kind, extra in (("matrix", "n"), ("cyclic-group", "m")):
        g = gen.add_parser(kind)
        g.add_argument(f"--{extra}", type=int, required=True)
        g.add_argument("--p", type=int)
        g.add_argument("--deg", type=int, default=1)
        g.add_argument("--modulus", help="comma-separated low-to-high coefficients")
        g.add_argument("--rational", action="store_true", help="work over Q")
        g.add_argument("--over-prime", action="store_true",
                       help="restrict scalars from GF(p^deg) to GF(p)")
        g.add_argument("--out")
        g.set_defaults(func=cmd_generate)
    g = gen.add_parser("quaternion")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)
    g = gen.add_parser("direct-sum")
    g.add_argument("left")
    g.add_argument("right")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    p = sub.add_parser("scramble", help="random change of basis")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--matrix", help="use this basis matrix instead of a random one")
    p.add_argument("--invert", action="store_true", help="apply the inverse of --matrix")
    p.add_argument("--out")
    p.add_argument("--sidecar", help="where to record P (default OUT.basis.json)")
    p.set_defaults(func=cmd_scramble)

    p = sub.add_parser("validate", help="check associativity and unity")
    p.add_argument("input")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AlgebraError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
