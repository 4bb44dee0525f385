"""Command-line front end.

    bohrlab radius --problem cesaro-th1
    bohrlab majorant --operator cesaro --a 0.5 --gamma 0.3 --rho 0.4
    bohrlab sweep --operator bernardi --beta 1 --a-grid 0.9,0.99,0.999,0.9999 --rho-grid 0.5:0.65:16
    bohrlab verify --seed 42
    bohrlab figures --out figures/

Exit codes: 0 success, 1 numeric or I/O failure, 2 invalid arguments,
3 verification failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .domain import CoefficientSeries, Normalization
from .errors import BohrLabError, ContractError, DivergenceError, DomainError
from .extremal import ExtremalParams, extremal_series, sweep_margins
from .figures import write_figures
from .operators import BoundKind, majorant, target_bound
from .radius import ProblemTag, RadiusProblem, radius_for
from .report import emit_table
from .verify import run_suite

log = logging.getLogger("bohrlab")

EXIT_OK, EXIT_NUMERIC, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3
COMMANDS = ("radius", "majorant", "sweep", "verify", "figures")


class UsageError(BohrLabError):
    pass


@dataclass
class RunConfig:
    command: str
    problem: Optional[str] = None
    operator: Optional[str] = None
    scheme: str = "per-outer"
    gamma: float = 0.0
    beta: Optional[float] = None
    m: int = 0
    a: Optional[float] = None
    rho: Optional[float] = None
    coeffs: Optional[list] = None
    a_grid: Optional[list] = None
    rho_grid: Optional[list] = None
    seed: int = 42
    tol: float = 1e-12
    output_path: str = "-"
    format: str = "csv"
    extra: dict = field(default_factory=dict)

    def bound_kind(self) -> BoundKind:
        if self.operator is None:
            raise UsageError(f"{self.command} needs --operator")
        if self.operator == "bernardi":
            if self.beta is None:
                raise UsageError("--operator bernardi needs --beta")
            return BoundKind.bernardi(self.beta)
        if self.operator == "dft":
            return BoundKind.dft(Normalization(self.scheme))
        if self.operator == "cesaro":
            return BoundKind.cesaro()
        return BoundKind.plain()

    def radius_problem(self) -> RadiusProblem:
        if self.problem is None:
            raise UsageError("radius needs --problem")
        tag = ProblemTag(self.problem)
        needs_beta = tag in (ProblemTag.BERNARDI_TH2, ProblemTag.BERNARDI_THC, ProblemTag.BERNARDI_OMEGA)
        if needs_beta and self.beta is None:
            raise UsageError(f"--problem {self.problem} needs --beta")
        return RadiusProblem(tag, gamma=self.gamma, beta=self.beta if needs_beta else None, m=self.m)


def parse_grid(text: str) -> list[float]:
    """'lo:hi:n' (n equispaced points, ends included) or 'x1,x2,...'."""
    try:
        if ":" in text:
            lo, hi, n = text.split(":")
            return [float(v) for v in np.linspace(float(lo), float(hi), int(n))]
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}: {exc}") from None


def parse_coeffs(text: str) -> list[complex]:
    try:
        return [complex(v.replace(" ", "")) for v in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bohrlab", description="Bohr-type inequalities for operator majorants on shifted disks."
    )
    verbosity = argparse.ArgumentParser(add_help=False)
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[verbosity])

    def common(p, out_default="-"):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", dest="output_path", default=out_default, help="output path ('-' for stdout)")

    def operator(p):
        p.add_argument("--operator", choices=("plain", "cesaro", "bernardi", "dft"), required=True)
        p.add_argument("--scheme", choices=[s.value for s in Normalization], default="per-outer",
                       help="DFT normalization (default: per-outer)")
        p.add_argument("--beta", type=float)
        p.add_argument("--gamma", type=float, default=0.0)

    p = add("radius", help="solve a radius equation")
    p.add_argument("--problem", choices=[t.value for t in ProblemTag], required=True)
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--beta", type=float)
    p.add_argument("--m", type=int, default=0)
    common(p)

    p = add("majorant", help="evaluate a majorant for the extremal family or a polynomial")
    operator(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--a", type=float, help="extremal family parameter in (0, 1)")
    src.add_argument("--coeffs", type=parse_coeffs, help="exact polynomial coefficients, comma separated")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    common(p)

    p = add("sweep", help="tabulate sharpness margins over (a, rho)")
    operator(p)
    p.add_argument("--a-grid", type=parse_grid, required=True)
    p.add_argument("--rho-grid", type=parse_grid, required=True)
    common(p)

    p = add("verify", help="run the property suite")
    p.add_argument("--seed", type=int, default=42)
    common(p)

    p = add("figures", help="write plot data for the three figures")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", dest="output_path", default="figures", help="output directory")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    known = {f for f in RunConfig.__dataclass_fields__}
    values = {k: v for k, v in vars(args).items() if k in known and v is not None}
    return RunConfig(**values)


def run(config: RunConfig) -> int:
    fmt, out = config.format, config.output_path
    if config.command == "radius":
        problem = config.radius_problem()
        cert = radius_for(problem)
        emit_table(cert, fmt, out, meta={"problem": problem.label})
        return EXIT_OK
    if config.command == "majorant":
        kind = config.bound_kind()
        if config.rho is None:
            raise UsageError("majorant needs --rho")
        if config.coeffs is not None:
            series = CoefficientSeries.polynomial(config.coeffs, gamma=config.gamma)
            source = "polynomial"
        else:
            series = extremal_series(ExtremalParams(config.a, config.gamma), config.rho, config.tol)
            source = f"extremal(a={config.a:g})"
        value = majorant(kind, series, config.rho, config.tol)
        bound = target_bound(kind, config.rho)
        meta = {"operator": kind.label, "function": source, "gamma": config.gamma, "rho": config.rho,
                "bound": bound, "margin": value.value - bound}
        emit_table(value, fmt, out, meta=meta)
        return EXIT_OK
    if config.command == "sweep":
        kind = config.bound_kind()
        table = sweep_margins(kind, config.gamma, config.a_grid, config.rho_grid)
        emit_table(table, fmt, out)
        return EXIT_OK
    if config.command == "verify":
        report = run_suite(config.seed)
        emit_table(report.table(), fmt, out)
        for c in report.checks:
            log.info("%s %s worst=%.3e", "PASS" if c.passed else "FAIL", c.name, c.worst)
        return EXIT_OK if report.passed else EXIT_VERIFY
    if config.command == "figures":
        for path in write_figures(out, fmt):
            log.info("wrote %s", path)
        return EXIT_OK
    raise UsageError(f"unknown command {config.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return run(config_from_args(args))
    except (UsageError, DomainError, ContractError, DivergenceError) as exc:
        parser.print_usage(sys.stderr)
        print(f"bohrlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BohrLabError, OSError) as exc:
        print(f"bohrlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
