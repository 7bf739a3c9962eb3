"""``astkit`` command line: grid evaluation and the verification sweep.

Exit status: 0 success, 1 usage error, 2 verification failure,
3 numerical non-convergence.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import threading
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from . import __version__, astdist, sinetransform, verify
from .errors import AccuracyWarning, ConvergenceError, DomainError

__all__ = ["EvalConfig", "UsageError", "parse_args", "run", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_CONVERGENCE = 3

# catch_warnings mutates global state, so capture under a lock
_WARN_LOCK = threading.Lock()

COMMANDS = ("eval-cf", "eval-pdf", "eval-sin-integral", "eval-limit", "verify")


class UsageError(Exception):
    """Bad command-line input; the message names the offending flag."""


@dataclass(frozen=True)
class EvalConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    grid: tuple[float, float, int] | None = None
    format: str = "csv"
    tol: float = verify.DEFAULT_TOL
    out_path: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="astkit", description="AST characteristic function toolkit")
    parser.add_argument("--version", action="version", version=f"astkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="write records here instead of stdout")
        p.add_argument("--steps", type=int, default=101)

    def ast_flags(p):
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--nu1", type=float, required=True)
        p.add_argument("--nu2", type=float, required=True)
        p.add_argument("--mu", type=float, default=None)
        p.add_argument("--sigma", type=float, default=None)

    p = sub.add_parser("eval-cf", help="characteristic function on a t grid")
    ast_flags(p)
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    common(p)

    p = sub.add_parser("eval-pdf", help="density on an x grid")
    ast_flags(p)
    p.add_argument("--x-min", type=float, required=True)
    p.add_argument("--x-max", type=float, required=True)
    common(p)

    p = sub.add_parser("eval-sin-integral", help="sine integral on an a grid")
    order = p.add_mutually_exclusive_group(required=True)
    order.add_argument("--rho", type=float)
    order.add_argument("--n", type=int)
    p.add_argument("--a-min", type=float, required=True)
    p.add_argument("--a-max", type=float, required=True)
    p.add_argument("--b", type=float, default=1.0)
    common(p)

    p = sub.add_parser("eval-limit", help="Bessel-Struve limit on an x grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x-min", type=float, required=True)
    p.add_argument("--x-max", type=float, required=True)
    common(p)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--tol", type=float, default=verify.DEFAULT_TOL)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    return parser


def _finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise UsageError(f"--{name} must be finite")


def _grid(lo: float, hi: float, steps: int, name: str) -> tuple[float, float, int]:
    _finite(f"{name}-min", lo)
    _finite(f"{name}-max", hi)
    if lo > hi:
        raise UsageError(f"--{name}-min must not exceed --{name}-max")
    if steps < 1:
        raise UsageError("--steps must be >= 1")
    return lo, hi, steps


def parse_args(argv: list[str]) -> EvalConfig:
    """Validate ``argv`` into an :class:`EvalConfig`; raises :class:`UsageError`."""
    ns = _build_parser().parse_args(argv)
    cmd = ns.command
    if cmd == "verify":
        if not (1e-12 <= ns.tol <= 1e-3):
            raise UsageError("--tol must lie in [1e-12, 1e-3]")
        return EvalConfig(cmd, {}, None, ns.format, ns.tol, ns.out)

    params: dict[str, Any] = {}
    if cmd in ("eval-cf", "eval-pdf"):
        if not (0.0 < ns.alpha < 1.0):
            raise UsageError("--alpha: alpha must be in (0,1)")
        for name in ("nu1", "nu2"):
            v = getattr(ns, name)
            if not (math.isfinite(v) and v > 0.0):
                raise UsageError(f"--{name}: {name} must be > 0")
        params = {"alpha": ns.alpha, "nu1": ns.nu1, "nu2": ns.nu2}
        if ns.mu is not None or ns.sigma is not None:
            mu = 0.0 if ns.mu is None else ns.mu
            sigma = 1.0 if ns.sigma is None else ns.sigma
            _finite("mu", mu)
            if not (math.isfinite(sigma) and sigma > 0.0):
                raise UsageError("--sigma: sigma must be > 0")
            params.update(mu=mu, sigma=sigma)
        grid = _grid(ns.t_min, ns.t_max, ns.steps, "t") if cmd == "eval-cf" else _grid(ns.x_min, ns.x_max, ns.steps, "x")
    elif cmd == "eval-sin-integral":
        if ns.n is not None:
            if ns.n < 1:
                raise UsageError("--n must be a positive integer")
            params["n"] = ns.n
        else:
            if not (math.isfinite(ns.rho) and ns.rho > 0.0):
                raise UsageError("--rho must be > 0")
            params["rho"] = ns.rho
        if not (math.isfinite(ns.b) and ns.b > 0.0):
            raise UsageError("--b must be > 0")
        params["b"] = ns.b
        grid = _grid(ns.a_min, ns.a_max, ns.steps, "a")
        if grid[0] < 0.0:
            raise UsageError("--a-min must be >= 0")
    else:
        if ns.n < 1:
            raise UsageError("--n must be a positive integer")
        params["n"] = ns.n
        grid = _grid(ns.x_min, ns.x_max, ns.steps, "x")
        if grid[0] <= 0.0:
            raise UsageError("--x-min must be > 0")
    return EvalConfig(cmd, params, grid, ns.format, verify.DEFAULT_TOL, ns.out)


def grid_points(lo: float, hi: float, steps: int) -> list[float]:
    """Inclusive grid; ``steps == 1`` is just ``lo``."""
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps - 1)] + [hi]


def _workers() -> int:
    raw = os.environ.get("ASTKIT_THREADS")
    if raw is None:
        return min(8, os.cpu_count() or 1)
    try:
        n = int(raw)
    except ValueError:
        raise UsageError("ASTKIT_THREADS must be a positive integer") from None
    if n < 1:
        raise UsageError("ASTKIT_THREADS must be a positive integer")
    return n


def _row_function(cfg: EvalConfig) -> tuple[list[str], Callable[[float], list]]:
    p = cfg.params
    if cfg.command in ("eval-cf", "eval-pdf"):
        if "sigma" in p:
            ls = astdist.make_loc_scale(p["alpha"], p["nu1"], p["nu2"], p["mu"], p["sigma"])
            cf = lambda t: astdist.cf_loc_scale(ls, t)  # noqa: E731
            dens = lambda x: astdist.pdf_loc_scale(ls, x)  # noqa: E731
        else:
            base = astdist.make_params(p["alpha"], p["nu1"], p["nu2"])
            cf = lambda t: astdist.cf(base, t)  # noqa: E731
            dens = lambda x: astdist.pdf(base, x)  # noqa: E731
        if cfg.command == "eval-cf":
            def row(t):
                c = cf(t)
                return [t, c.re, c.im]
            return ["t", "re", "im"], row
        return ["x", "f"], lambda x: [x, dens(x)]

    if cfg.command == "eval-sin-integral":
        key = "n" if "n" in p else "rho"
        order, b = p[key], p["b"]

        def row(a):
            with _WARN_LOCK, warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", AccuracyWarning)
                value = sinetransform.sine_integral(order, a, b)
            flag = int(any(issubclass(w.category, AccuracyWarning) for w in caught))
            return [order, a, b, value, flag]
        return [key, "a", "b", "value", "warning"], row

    n = p["n"]
    return ["n", "x", "value"], lambda x: [n, x, sinetransform.bessel_struve_limit(n, x)]


def _fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, int)):
        return str(int(v))
    return "%.17g" % v


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    return v


def _emit(cfg: EvalConfig, header: list[str], rows: list[list], meta: dict, stream) -> None:
    if cfg.format == "json":
        doc = {"meta": meta, "rows": [[_json_value(v) for v in r] for r in rows]}
        json.dump(doc, stream)
        stream.write("\n")
        return
    for k, v in meta.items():
        if k != "params":
            stream.write(f"# {k}={v}\n")
    for k, v in meta.get("params", {}).items():
        stream.write(f"# {k}={_fmt(v) if isinstance(v, float) else v}\n")
    stream.write(",".join(header) + "\n")
    for r in rows:
        stream.write(",".join(_fmt(v) for v in r) + "\n")


def _open_out(cfg: EvalConfig):
    return open(cfg.out_path, "w", encoding="utf-8", newline="") if cfg.out_path else sys.stdout


def run(cfg: EvalConfig) -> int:
    """Execute ``cfg`` and return the exit status."""
    try:
        if cfg.command == "verify":
            results = verify.run_checks(cfg.tol)
            header = ["check", "max_rel_err", "tolerance", "pass"]
            rows = [[r.check_id, r.max_rel_err, r.tolerance, int(r.passed)] for r in results]
            meta = {"command": cfg.command, "version": __version__, "params": {"tol": cfg.tol}}
            status = EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY
        else:
            header, row = _row_function(cfg)
            points = grid_points(*cfg.grid)
            with ThreadPoolExecutor(max_workers=_workers()) as pool:
                rows = list(pool.map(row, points))  # map keeps grid order
            meta = {
                "command": cfg.command,
                "version": __version__,
                "params": dict(cfg.params, min=cfg.grid[0], max=cfg.grid[1], steps=cfg.grid[2]),
            }
            status = EXIT_OK
    except ConvergenceError as exc:
        print(f"astkit: numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (DomainError, UsageError) as exc:
        print(f"astkit: {exc}", file=sys.stderr)
        return EXIT_USAGE

    stream = _open_out(cfg)
    try:
        _emit(cfg, header, rows, meta, stream)
    finally:
        if stream is not sys.stdout:
            stream.close()
    if status == EXIT_VERIFY:
        failed = ", ".join(r[0] for r in rows if not r[3])
        print(f"astkit: verification failed: {failed}", file=sys.stderr)
    return status


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"astkit: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
