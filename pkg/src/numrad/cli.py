"""Command-line front end.

Exit codes: 0 success, 1 input parse error, 2 solver non-convergence,
3 dimension/shape error.  No environment variables or config files are
consulted.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import io, oracle, radius, tensor
from .linalg import DimensionError, norms
from .radius import (ExtremeDecomposition, NormResult, RadiusWitness,
                     SolverNonConvergence)
from .sdp import SolverOptions


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nr",
        description="Numerical radius, dual norm, operator/nuclear norms, "
                    "and 2xmxn tensor norms via SDP.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, tol=True, max_iter=True):
        if tol:
            p.add_argument("--tol", type=float, default=1e-8)
        if max_iter:
            p.add_argument("--max-iter", type=int, default=500)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("r", help="numerical radius")
    p.add_argument("matrix")
    p.add_argument("--method", choices=["ipm", "sweep"], default="ipm")
    p.add_argument("--witness", action="store_true")
    add_common(p)

    p = sub.add_parser("rdual", help="dual numerical radius")
    p.add_argument("matrix")
    p.add_argument("--certificate", action="store_true")
    add_common(p)

    p = sub.add_parser("opnorm", help="operator norm")
    p.add_argument("matrix")
    p.add_argument("--method", choices=["ipm", "svd"], default="ipm")
    add_common(p)

    p = sub.add_parser("nuclear", help="nuclear norm")
    p.add_argument("matrix")
    p.add_argument("--method", choices=["ipm", "svd"], default="ipm")
    add_common(p)

    p = sub.add_parser("tensor", help="2xmxn tensor norms")
    p.add_argument("kind", choices=["spectral", "nuclear"])
    p.add_argument("tensor")
    add_common(p)

    p = sub.add_parser("check", help="cross-check report")
    p.add_argument("matrix")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=64)
    add_common(p, tol=False, max_iter=False)
    return parser


def _options(args) -> SolverOptions:
    return SolverOptions(eps_gap=args.tol, eps_feas=max(10.0 * args.tol, 1e-9),
                         max_iter=args.max_iter)


def _certificate_dict(cert) -> dict | None:
    if cert is None:
        return None
    if isinstance(cert, RadiusWitness):
        return {
            "type": "radius_witness",
            "theta": cert.theta,
            "x_re": cert.x.real.tolist(),
            "x_im": cert.x.imag.tolist(),
        }
    if isinstance(cert, ExtremeDecomposition):
        return {
            "type": "extreme_decomposition",
            "terms": [
                {"weight": p, "phase": theta,
                 "v_re": v.real.tolist(), "v_im": v.imag.tolist()}
                for p, theta, v in cert.terms
            ],
        }
    raise TypeError(f"unknown certificate type {type(cert)!r}")


def certificate_from_dict(obj: dict):
    """Inverse of the certificate JSON encoding (used to round-trip output)."""
    if obj["type"] == "radius_witness":
        return RadiusWitness(
            theta=obj["theta"],
            x=np.asarray(obj["x_re"]) + 1j * np.asarray(obj["x_im"]))
    if obj["type"] == "extreme_decomposition":
        return ExtremeDecomposition(terms=tuple(
            (t["weight"], t["phase"],
             np.asarray(t["v_re"]) + 1j * np.asarray(t["v_im"]))
            for t in obj["terms"]))
    raise ValueError(f"unknown certificate type {obj.get('type')!r}")


def _emit(quantity: str, value: float, gap, iterations, method: str,
          certificate, as_json: bool) -> None:
    if as_json:
        print(json.dumps({
            "quantity": quantity,
            "value": value,
            "gap": gap,
            "iterations": iterations,
            "method": method,
            "certificate": _certificate_dict(certificate),
        }))
        return
    print(f"{quantity} = {value:.12g}")
    if gap is not None:
        print(f"  gap = {gap:.3e}, iterations = {iterations}")
    if isinstance(certificate, RadiusWitness):
        print(f"  witness theta = {certificate.theta:.12g}")
        print(f"  witness x = {np.array2string(certificate.x, precision=12)}")
    elif isinstance(certificate, ExtremeDecomposition):
        print(f"  decomposition terms = {len(certificate.terms)}")
        for p, theta, _ in certificate.terms:
            print(f"    weight = {p:.12g}, phase = {theta:.12g}")


def _emit_result(result: NormResult, as_json: bool) -> None:
    _emit(result.quantity.value, result.value, result.gap, result.iterations,
          result.method, result.certificate, as_json)


def run(argv) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "r":
            mat = io.load_matrix(args.matrix)
            if args.method == "sweep":
                value, _ = oracle.sweep_radius(mat, max(args.tol, 1e-9))
                _emit("r", value, None, None, "sweep", None, args.json)
            else:
                result = radius.numerical_radius(mat, _options(args),
                                                 witness=args.witness)
                _emit_result(result, args.json)
        elif args.command == "rdual":
            mat = io.load_matrix(args.matrix)
            result = radius.dual_numerical_radius(mat, _options(args),
                                                  certificate=args.certificate)
            _emit_result(result, args.json)
        elif args.command in ("opnorm", "nuclear"):
            mat = io.load_matrix(args.matrix)
            if args.method == "svd":
                _, op, nuc = norms(mat)
                value = op if args.command == "opnorm" else nuc
                _emit(args.command, value, None, None, "svd", None, args.json)
            else:
                fn = (radius.op_norm_sdp if args.command == "opnorm"
                      else radius.nuclear_norm_sdp)
                _emit_result(fn(mat, _options(args)), args.json)
        elif args.command == "tensor":
            t = io.load_tensor(args.tensor)
            fn = (tensor.tensor_spectral if args.kind == "spectral"
                  else tensor.tensor_nuclear)
            result = fn(t, _options(args))
            _emit(f"tensor_{args.kind}", result.value, result.gap,
                  result.iterations, "ipm", None, args.json)
        elif args.command == "check":
            mat = io.load_matrix(args.matrix)
            report = oracle.crosscheck(mat, trials=args.trials, seed=args.seed)
            if args.json:
                print(json.dumps(report.to_dict()))
            else:
                for name, value in report.values.items():
                    print(f"{name} = {value:.12g}")
                for name, (ok, disc, tol) in report.checks.items():
                    print(f"check {name}: {'pass' if ok else 'FAIL'} "
                          f"(discrepancy {disc:.3e}, tol {tol:.1e})")
                for name, message in report.errors.items():
                    print(f"error {name}: {message}")
            return 0 if report.passed else 1
    except io.InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except SolverNonConvergence as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 2
    except DimensionError as exc:
        print(f"shape error: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
