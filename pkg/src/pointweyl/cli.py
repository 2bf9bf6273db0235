"""Command-line front end: ``pointweyl <subcommand> ...``.

Exit codes: 0 success, 2 invalid input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .errors import NumericalFailure
from .formats import (
    dumps,
    load_json,
    matrix_csv,
    parse_boundary,
    parse_config,
    parse_function,
    parse_grid,
    parse_sequence,
)
from .geometry import collinear_config, interaction_sums, min_separation, upper_density_estimate
from .rpdf import gram_matrix, omega3_invertibility_certificate, strong_pd_profile
from .spectral import (
    ac_certificate,
    bc_residual,
    negative_spectrum,
    negativity_count,
    nonnegativity_check,
    resolvent_kernel,
)
from .verify import run_suite
from .weyl import krein_coupling, triplet_matrices, weyl_zero

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse already exits 2; keep the message on stderr
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_INPUT)


def _floats(text: str, n: int | None = None) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc
    if n is not None and len(vals) != n:
        raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers, got {text!r}")
    return vals


def _complex(text: str) -> complex:
    re, im = _floats(text, 2)
    return complex(re, im)


def _point(text: str) -> list[float]:
    return _floats(text, 3)


def _t_grid(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"t-grid must look like a:b:n, got {text!r}")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if not (0 < a <= b) or n < 1:
        raise argparse.ArgumentTypeError("t-grid needs 0 < a <= b and n >= 1")
    return np.linspace(a, b, n)


def _manifest(args: argparse.Namespace, inputs: dict) -> dict:
    params = {
        k: (v.tolist() if isinstance(v, np.ndarray) else v)
        for k, v in sorted(vars(args).items())
        if k not in {"command", "func"} and k not in inputs
    }
    if isinstance(params.get("z"), complex):
        params["z"] = [params["z"].real, params["z"].imag]
    return {
        "command": args.command,
        "inputs": inputs,
        "parameters": params,
        "version": __version__,
        "seed": getattr(args, "seed", None),
    }


def _load_config(args):
    cfg = parse_config(load_json(args.config))
    if args.truncate is not None:
        cfg = cfg.truncate(args.truncate)
    return cfg


def _cmd_geometry(args) -> str:
    inputs = {}
    seq = None
    if args.lambdas:
        seq = parse_sequence(load_json(args.lambdas))
        inputs["lambdas"] = args.lambdas
        cfg = collinear_config(seq)
        if args.truncate is not None:
            cfg = cfg.truncate(args.truncate)
            seq = type(seq)(seq.lambdas[: args.truncate])
    elif args.config:
        inputs["config"] = args.config
        cfg = _load_config(args)
    else:
        raise ValueError("geometry needs a config file or --lambdas")
    out = {
        "manifest": _manifest(args, inputs),
        "m": cfg.m,
        "min_separation": min_separation(cfg),
        "interaction_sums": interaction_sums(cfg),
    }
    if seq is not None:
        out["density_estimates"] = upper_density_estimate(seq, args.windows)
    return dumps(out)


def _cmd_gram(args) -> str:
    cfg = _load_config(args)
    f = parse_function(load_json(args.function))
    rep = gram_matrix(f, cfg)
    if args.csv:
        return matrix_csv(rep.matrix)
    out = {"manifest": _manifest(args, {"config": args.config, "function": args.function}), "gram": rep}
    if args.profile:
        out["profile"] = strong_pd_profile(f, cfg)
    if args.omega3_r is not None:
        out["omega3_certificate"] = omega3_invertibility_certificate(cfg, args.omega3_r)
    return dumps(out)


def _cmd_spectrum(args) -> str:
    cfg = _load_config(args)
    B = _load_boundary(args, cfg)
    rep = negative_spectrum(cfg, B, args.tol)
    out = {
        "manifest": _manifest(args, {"config": args.config, "boundary": args.boundary}),
        "eigenvalues": rep.eigenvalues,
        "kappa_minus": rep.kappa_minus,
        "negativity_count": negativity_count(cfg, B),
        "nonnegative": nonnegativity_check(cfg, B),
        "report": rep,
    }
    return dumps(out)


def _load_boundary(args, cfg):
    B = parse_boundary(load_json(args.boundary))
    if args.truncate is not None and B.m > cfg.m:
        B = type(B)(B.matrix[: cfg.m, : cfg.m])
    return B


def _cmd_resolvent(args) -> str:
    cfg = _load_config(args)
    B = _load_boundary(args, cfg)
    xs, ys = parse_grid(load_json(args.grid))
    z = args.z
    buf = io.StringIO()
    manifest = _manifest(args, {"config": args.config, "boundary": args.boundary, "grid": args.grid})
    buf.write("# manifest: " + json.dumps(manifest, sort_keys=True) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x1", "x2", "x3", "y1", "y2", "y3", "z_re", "z_im", "re", "im"])
    for x in xs:
        for y in ys:
            v = resolvent_kernel(cfg, B, z, x, y)
            w.writerow([repr(float(c)) for c in (*x, *y, z.real, z.imag, v.real, v.imag)])
    if args.bc_check:
        for y in ys:
            res = bc_residual(cfg, B, z, y, args.h)
            for k, r in enumerate(res):
                buf.write(f"# bc_residual,{k},{repr(float(y[0]))},{repr(float(y[1]))},{repr(float(y[2]))},{r!r}\n")
    return buf.getvalue()


def _cmd_certify_ac(args) -> str:
    cfg = _load_config(args)
    cert = ac_certificate(cfg, args.t_grid)
    return dumps({"manifest": _manifest(args, {"config": args.config}), "certificate": cert})


def _cmd_krein(args) -> str:
    cfg = _load_config(args)
    tm = triplet_matrices(cfg)
    out = {
        "manifest": _manifest(args, {"config": args.config}),
        "T0": tm.T0,
        "T1": tm.T1,
        "M0": weyl_zero(cfg),
        "Xi": krein_coupling(cfg),
    }
    return dumps(out)


def _cmd_verify(args) -> str:
    results = run_suite(args.seed, args.samples)
    return dumps(
        {"manifest": _manifest(args, {}), "all_passed": all(r["passed"] for r in results), "results": results}
    )


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pointweyl", description="Point-interaction spectral toolkit.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, config=True):
        sp = sub.add_parser(name, help=help_)
        if config:
            sp.add_argument("config", help="point configuration JSON")
        sp.add_argument("--truncate", type=int, metavar="M", help="keep only the first M points")
        sp.set_defaults(func=func)
        return sp

    sp = add("geometry", _cmd_geometry, "separation, interaction sums, density estimates", config=False)
    sp.add_argument("config", nargs="?", help="point configuration JSON")
    sp.add_argument("--lambdas", help="sequence JSON, embedded on the x3-axis")
    sp.add_argument(
        "--windows", type=_floats, default=[1.0, 10.0, 100.0], help="window lengths r (comma-separated)"
    )

    sp = add("gram", _cmd_gram, "Gram matrix of a radial function")
    sp.add_argument("--function", required=True, help="radial function JSON")
    sp.add_argument("--profile", action="store_true", help="include the leading-block lambda_min profile")
    sp.add_argument("--omega3-r", type=float, dest="omega3_r", metavar="R", help="Omega_3 invertibility certificate")
    sp.add_argument("--csv", action="store_true", help="emit the matrix as CSV only")

    sp = add("spectrum", _cmd_spectrum, "negative eigenvalues of H_B")
    sp.add_argument("--boundary", required=True, help="boundary operator JSON")
    sp.add_argument("--tol", type=float, default=1e-9, help="bisection tolerance in kappa")

    sp = add("resolvent", _cmd_resolvent, "resolvent kernel on a grid (CSV)")
    sp.add_argument("--boundary", required=True)
    sp.add_argument("--z", type=_complex, required=True, metavar="RE,IM")
    sp.add_argument("--grid", required=True, help="grid JSON with 'x' and 'y' point lists")
    sp.add_argument("--bc-check", action="store_true", dest="bc_check", help="append boundary-condition residuals")
    sp.add_argument("--h", type=float, default=1e-3, help="probe radius for --bc-check")
    sp.add_argument("--csv", action="store_true", help="accepted for symmetry; output is always CSV")

    sp = add("certify-ac", _cmd_certify_ac, "M_I(t) positivity certificate")
    sp.add_argument("--t-grid", type=_t_grid, required=True, dest="t_grid", metavar="A:B:N")

    add("krein", _cmd_krein, "T0, T1, M(0) and the Krein coupling")

    sp = add("verify", _cmd_verify, "run the oracle suite", config=False)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=1_000_000)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except NumericalFailure as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return EXIT_NUMERIC
    except (ValueError, IndexError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INPUT
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if args.command == "verify" and not json.loads(text)["all_passed"]:
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
