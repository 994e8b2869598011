"""Command-line front end: reproducible tables in CSV or JSON.

Commands
--------
pressure      total pressure and energy per hyperarea for one setup
profile       stress-tensor components on a z grid (optionally the
              everywhere-finite subtracted profile with exterior rows)
fluctuations  squared field-strength fluctuations on a z grid
sweep         global quantities across a range of dimensions
verify        run the oracle consistency suite; exit 1 on any failure

Exit codes: 0 success, 1 verification failure, 2 usage error. Identical
configurations produce byte-identical output. All numbers are printed
with 12 significant digits; lengths enter every result only through
exact powers, so rescaling --length never changes the digits in an
unpredictable way.

The environment variable CASIMIR_MAX_THREADS (default 1) bounds the
number of worker threads used to evaluate profile grid points; rows are
always assembled in grid order, so the output does not depend on it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

from . import core, verify
from .core import EmBC, Region, ScalarBC, Spacetime, Theory, TheoryKind
from .errors import DomainError

UNITS = "hbar = c = 1; densities/pressures scale as 1/L^D, energies per hyperarea as 1/L^(D-1)"

_T = TypeVar("_T")
_U = TypeVar("_U")


class UsageError(Exception):
    """Invalid run configuration; message names the offending field."""


def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.11e}"
    return str(value)


def _round12(value: float) -> float:
    return float(f"{value:.11e}")


def _json_cell(value: object) -> object:
    if isinstance(value, float):
        return _round12(value)
    return value


def _max_threads() -> int:
    raw = os.environ.get("CASIMIR_MAX_THREADS", "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise UsageError(f"CASIMIR_MAX_THREADS: not an integer: {raw!r}") from exc
    if n < 1:
        raise UsageError(f"CASIMIR_MAX_THREADS: must be >= 1, got {n}")
    return n


def _map_ordered(fn: Callable[[_T], _U], items: Sequence[_T]) -> list[_U]:
    workers = min(_max_threads(), max(len(items), 1))
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _render(
    config: dict[str, object],
    columns: list[str],
    rows: list[list[object]],
    fmt: str,
    output: str | None,
) -> None:
    if fmt == "json":
        doc = {
            "config": config,
            "columns": columns,
            "rows": [[_json_cell(v) for v in row] for row in rows],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [f"# units: {config['units']}"]
        lines.append(",".join(columns))
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="") as handle:
            handle.write(text)


_THEORY_KINDS = {k.value: k for k in TheoryKind}
_SCALAR_BCS = {b.value: b for b in ScalarBC}
_EM_BCS = {b.value: b for b in EmBC}


def _build_theory(kind_name: str, bc_name: str | None) -> Theory:
    kind = _THEORY_KINDS[kind_name]
    if kind is TheoryKind.MAXWELL:
        if bc_name is None:
            bc_name = EmBC.METALLIC.value
        if bc_name not in _EM_BCS:
            raise UsageError(f"--bc: {bc_name!r} is not valid for Maxwell theory")
        return Theory(kind, _EM_BCS[bc_name])
    if bc_name is None:
        bc_name = ScalarBC.DIRICHLET.value
    if bc_name not in _SCALAR_BCS:
        raise UsageError(f"--bc: {bc_name!r} is not valid for a scalar theory")
    return Theory(kind, _SCALAR_BCS[bc_name])


def _spacetime(args: argparse.Namespace) -> Spacetime:
    try:
        return Spacetime(args.dim, args.length)
    except ValueError as exc:
        field = "--dim" if "dim_D" in str(exc) else "--length"
        raise UsageError(f"{field}: {exc}") from exc


def _base_config(args: argparse.Namespace, th: Theory | None = None) -> dict[str, object]:
    cfg: dict[str, object] = {
        "command": args.command,
        "dim": args.dim,
        "length": _round12(args.length),
        "units": UNITS,
    }
    if th is not None:
        cfg["theory"] = th.kind.value
        cfg["bc"] = th.bc.value
    return cfg


def _cmd_pressure(args: argparse.Namespace) -> int:
    st = _spacetime(args)
    th = _build_theory(args.theory, args.bc)
    if th.kind is TheoryKind.MAXWELL and st.dim_D == 2:
        print(
            "warning: Maxwell theory at D=2 has no propagating degrees of freedom",
            file=sys.stderr,
        )
    p = core.pressure(st, th)
    energy = core.total_energy_per_area(st, th)
    columns = ["dim", "length", "theory", "bc", "pressure", "energy_per_area"]
    rows: list[list[object]] = [[st.dim_D, st.plate_gap_L, th.kind.value, th.bc.value, p, energy]]
    _render(_base_config(args, th), columns, rows, args.format, args.output)
    return 0


def _interior_grid(length: float, samples: int) -> list[float]:
    return [length * (i + 0.5) / samples for i in range(samples)]


def _profile_rows(args: argparse.Namespace, st: Spacetime, th: Theory) -> list[list[object]]:
    length = st.plate_gap_L
    grid = _interior_grid(length, args.samples)
    if args.subtracted:
        if th.kind is not TheoryKind.MAXWELL:
            raise UsageError("--subtracted: only defined for --theory maxwell")
        exterior_left = [-length * (i + 0.5) / args.samples for i in range(args.samples)]
        exterior_right = [length + length * (i + 0.5) / args.samples for i in range(args.samples)]
        profile = core.subtracted_profile(st, th.bc, exterior_left + grid + exterior_right)
        return [
            [s.z, s.tensor.t00, s.tensor.tzz, s.tensor.t_transverse, s.tensor.trace, s.region.value]
            for s in profile.samples
        ]
    if any(z == 0.0 or z == length for z in grid):
        raise UsageError("--samples: grid point falls on a plate; densities diverge there")

    if th.kind is TheoryKind.MAXWELL:
        tensor_at = lambda z: core.em_stress(st, th.bc, z)  # noqa: E731
    else:
        improved = th.kind is TheoryKind.SCALAR_IMPROVED
        tensor_at = lambda z: core.scalar_stress(st, th.bc, z, improved=improved)  # noqa: E731
    tensors = _map_ordered(tensor_at, grid)
    return [
        [z, t.t00, t.tzz, t.t_transverse, t.trace, Region.INTERIOR.value]
        for z, t in zip(grid, tensors)
    ]


def _cmd_profile(args: argparse.Namespace) -> int:
    if args.samples < 2:
        raise UsageError(f"--samples: must be >= 2, got {args.samples}")
    st = _spacetime(args)
    th = _build_theory(args.theory, args.bc)
    rows = _profile_rows(args, st, th)
    config = _base_config(args, th)
    config["samples"] = args.samples
    config["subtracted"] = bool(args.subtracted)
    columns = ["z", "t00", "tzz", "t_transverse", "trace", "region"]
    _render(config, columns, rows, args.format, args.output)
    return 0


def _cmd_fluctuations(args: argparse.Namespace) -> int:
    if args.samples < 2:
        raise UsageError(f"--samples: must be >= 2, got {args.samples}")
    st = _spacetime(args)
    if st.dim_D < 3:
        raise UsageError("--dim: fluctuations need D >= 3 (no transverse direction at D=2)")
    bc = _EM_BCS[args.bc or EmBC.METALLIC.value]
    grid = _interior_grid(st.plate_gap_L, args.samples)
    records = _map_ordered(lambda z: core.em_fluctuations(st, bc, z), grid)
    rows: list[list[object]] = [
        [z, r.ez2, r.ei2, r.biz2, r.bij2] for z, r in zip(grid, records)
    ]
    config = _base_config(args)
    config["theory"] = TheoryKind.MAXWELL.value
    config["bc"] = bc.value
    config["samples"] = args.samples
    columns = ["z", "Ez2", "Ei2", "Biz2", "Bij2"]
    _render(config, columns, rows, args.format, args.output)
    return 0


def _parse_dims(text: str) -> range:
    try:
        lo_text, hi_text = text.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise UsageError(f"--dims: expected LO:HI, got {text!r}") from exc
    if lo > hi:
        raise UsageError(f"--dims: empty range {text!r}")
    if lo < 2 or hi > 24:
        raise UsageError(f"--dims: range must stay within 2:24, got {text!r}")
    return range(lo, hi + 1)


def _cmd_sweep(args: argparse.Namespace) -> int:
    dims = _parse_dims(args.dims)
    rows: list[list[object]] = []
    for dim in dims:
        st = Spacetime(dim, args.length)
        e0 = core.base_energy_density(st)
        p_scalar = core.pressure(st, Theory(TheoryKind.SCALAR_CANONICAL, ScalarBC.DIRICHLET))
        p_maxwell = core.pressure(st, Theory(TheoryKind.MAXWELL, EmBC.METALLIC))
        rows.append([dim, e0, p_scalar, p_maxwell])
    config: dict[str, object] = {
        "command": args.command,
        "dims": args.dims,
        "length": _round12(args.length),
        "units": UNITS,
    }
    columns = ["dim", "base_energy_density", "pressure_scalar", "pressure_maxwell"]
    _render(config, columns, rows, args.format, args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_checks(quick=args.quick)
    rows: list[list[object]] = [
        [r.name, r.residual, r.tolerance, "pass" if r.passed else "FAIL"] for r in results
    ]
    config: dict[str, object] = {
        "command": args.command,
        "quick": bool(args.quick),
        "units": UNITS,
    }
    columns = ["check", "residual", "tolerance", "status"]
    _render(config, columns, rows, args.format, args.output)
    failures = [r for r in results if not r.passed]
    if failures:
        worst = max(failures, key=lambda r: r.residual / r.tolerance)
        print(
            f"verification failed: worst residual {worst.residual:.3e} "
            f"(tolerance {worst.tolerance:.3e}) in check {worst.name}",
            file=sys.stderr,
        )
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-slab",
        description="Vacuum energies, pressures and stress profiles between parallel hyperplanes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, theory: bool = True) -> None:
        p.add_argument("--dim", type=int, default=4, help="spacetime dimension D (2..24)")
        p.add_argument("--length", type=float, default=1.0, help="plate separation L")
        if theory:
            p.add_argument(
                "--theory",
                choices=sorted(_THEORY_KINDS),
                default=TheoryKind.MAXWELL.value,
            )
            p.add_argument(
                "--bc",
                choices=sorted(_SCALAR_BCS) + sorted(_EM_BCS),
                default=None,
                help="boundary condition (default: metallic for maxwell, dirichlet for scalars)",
            )
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default=None, metavar="PATH", help="write to file instead of stdout")

    p_pressure = sub.add_parser("pressure", help="pressure and total energy per hyperarea")
    add_common(p_pressure)

    p_profile = sub.add_parser("profile", help="stress tensor on a midpoint z grid")
    add_common(p_profile)
    p_profile.add_argument("--samples", type=int, default=64)
    p_profile.add_argument(
        "--subtracted",
        action="store_true",
        help="emit the everywhere-finite subtracted profile, including exterior rows",
    )

    p_fluct = sub.add_parser("fluctuations", help="squared field fluctuations on a z grid")
    p_fluct.add_argument("--dim", type=int, default=4)
    p_fluct.add_argument("--length", type=float, default=1.0)
    p_fluct.add_argument("--bc", choices=sorted(_EM_BCS), default=None)
    p_fluct.add_argument("--samples", type=int, default=16)
    p_fluct.add_argument("--format", choices=("csv", "json"), default="csv")
    p_fluct.add_argument("--output", default=None, metavar="PATH")

    p_sweep = sub.add_parser("sweep", help="global quantities across dimensions")
    p_sweep.add_argument("--dims", default="2:12", help="inclusive dimension range LO:HI")
    p_sweep.add_argument("--length", type=float, default=1.0)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--output", default=None, metavar="PATH")

    p_verify = sub.add_parser("verify", help="run the oracle consistency suite")
    p_verify.add_argument(
        "--quick", action="store_true", help="100x smaller budgets, 100x looser tolerances"
    )
    p_verify.add_argument("--format", choices=("csv", "json"), default="csv")
    p_verify.add_argument("--output", default=None, metavar="PATH")

    return parser


_DISPATCH = {
    "pressure": _cmd_pressure,
    "profile": _cmd_profile,
    "fluctuations": _cmd_fluctuations,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
