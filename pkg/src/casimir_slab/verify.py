"""End-to-end consistency checks pairing closed forms with oracles.

Each check reports the worst residual it observed together with the
tolerance it was held to; the CLI renders the results as a
machine-readable table. Quick mode cuts the series budgets by 100x and
relaxes every tolerance by the same factor, trading confidence for
runtime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import core, oracle, specfun
from .core import EmBC, ScalarBC, Spacetime, Theory, TheoryKind

__all__ = ["CheckResult", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def _rel(got: float, want: float, floor: float = 1e-300) -> float:
    return abs(got - want) / max(abs(want), floor)


def _spread(values: list[float]) -> float:
    lo, hi = min(values), max(values)
    return (hi - lo) / max(abs(lo), abs(hi), 1e-300)


_ALL_THEORIES = (
    Theory(TheoryKind.SCALAR_CANONICAL, ScalarBC.DIRICHLET),
    Theory(TheoryKind.SCALAR_CANONICAL, ScalarBC.NEUMANN),
    Theory(TheoryKind.SCALAR_IMPROVED, ScalarBC.DIRICHLET),
    Theory(TheoryKind.SCALAR_IMPROVED, ScalarBC.NEUMANN),
    Theory(TheoryKind.MAXWELL, EmBC.METALLIC),
    Theory(TheoryKind.MAXWELL, EmBC.MIT),
)


def _check_classic_pressure(tol: float) -> CheckResult:
    st = Spacetime(4, 1.0)
    got = core.pressure(st, Theory(TheoryKind.MAXWELL, EmBC.METALLIC))
    return CheckResult("classic-pressure-d4", _rel(got, -math.pi**2 / 240.0), tol)


def _check_f_dual_forms(budget: oracle.SeriesBudget, tol: float) -> CheckResult:
    worst = 0.0
    for dim in (4, 6, 8):
        st = Spacetime(dim, 1.0)
        for x in (0.1, 0.25, 0.5):
            hurwitz_form = core.f_profile(st, x)
            image = oracle.image_profile_sum(dim, x, budget)
            cot_form = (
                math.pi**dim
                / math.factorial(dim - 1)
                * specfun.cot_derivative(dim - 1, math.pi * x)
            )
            worst = max(
                worst,
                _rel(hurwitz_form, image),
                _rel(cot_form, image),
                _rel(hurwitz_form, cot_form),
            )
    worst = max(worst, _rel(core.f_profile(Spacetime(4, 1.0), 0.5), math.pi**4 / 3.0))
    return CheckResult("f-profile-dual-closed-forms", worst, tol)


def _green_points() -> list[tuple[float, float, float]]:
    rng = np.random.default_rng(20260808)
    pts: list[tuple[float, float, float]] = []
    while len(pts) < 20:
        k = float(rng.uniform(0.1, 10.0))
        z = float(rng.uniform(0.1, 0.9))
        zp = float(rng.uniform(0.1, 0.9))
        if abs(z - zp) >= 0.1:
            pts.append((k, z, zp))
    return pts


def _check_green(budget: oracle.SeriesBudget, tol: float) -> list[CheckResult]:
    pts = _green_points()
    doubled = oracle.SeriesBudget(
        max_images=budget.max_images,
        max_modes=2 * budget.max_modes,
        tail_order=budget.tail_order,
    )
    errs, errs2 = [], []
    for k, z, zp in pts:
        exact = oracle.green_closed(k, z, zp, 1.0)
        errs.append(
            abs(oracle.green_mode_sum(k, z, zp, 1.0, ScalarBC.DIRICHLET, budget) - exact)
        )
        errs2.append(
            abs(oracle.green_mode_sum(k, z, zp, 1.0, ScalarBC.DIRICHLET, doubled) - exact)
        )
    rms = math.sqrt(sum(e * e for e in errs) / len(errs))
    rms2 = math.sqrt(sum(e * e for e in errs2) / len(errs2))
    ratio = rms / max(rms2, 1e-300)
    return [
        CheckResult("green-mode-vs-closed", max(errs), tol),
        # quadratic truncation error: doubling the modes should cut the
        # rms error by about 4; allow [1, 7].
        CheckResult("green-convergence-rate", abs(ratio / 4.0 - 1.0), 0.75),
    ]


def _check_cutoff(budget: oracle.SeriesBudget, tol: float, scale: float) -> list[CheckResult]:
    worst = 0.0
    drift = 0.0
    for dim in (2, 3):
        st = Spacetime(dim, 1.0)
        want = core.total_energy_per_area(
            st, Theory(TheoryKind.SCALAR_CANONICAL, ScalarBC.DIRICHLET)
        )
        sched = oracle.default_cutoff_schedule(dim, scale)
        got = oracle.cutoff_casimir_energy(dim, 1.0, sched, budget)
        worst = max(worst, _rel(got, want))
        doubled = oracle.default_cutoff_schedule(dim, 2.0 * scale)
        got_doubled = oracle.cutoff_casimir_energy(dim, 1.0, doubled, budget)
        drift = max(drift, _rel(got_doubled, got))
    return [
        CheckResult("cutoff-zeta-validation", worst, tol),
        CheckResult("cutoff-regulator-independence", drift, 2.0 * tol),
    ]


def _check_pressure_constancy(tol_spread: float, tol_force: float) -> list[CheckResult]:
    worst_spread = 0.0
    worst_force = 0.0
    zs = [(i + 0.5) / 64.0 for i in range(64)]
    for dim in range(2, 13):
        st = Spacetime(dim, 1.0)
        for th in _ALL_THEORIES:
            if th.kind is TheoryKind.MAXWELL and dim < 3:
                continue
            if th.kind is TheoryKind.MAXWELL:
                tzzs = [core.em_stress(st, th.bc, z).tzz for z in zs]
            else:
                tzzs = [
                    core.scalar_stress(
                        st, th.bc, z, improved=th.kind is TheoryKind.SCALAR_IMPROVED
                    ).tzz
                    for z in zs
                ]
            worst_spread = max(worst_spread, _spread(tzzs))
            h = 1e-6
            fd = -(
                core.total_energy_per_area(Spacetime(dim, 1.0 + h), th)
                - core.total_energy_per_area(Spacetime(dim, 1.0 - h), th)
            ) / (2.0 * h)
            p = core.pressure(st, th)
            worst_force = max(worst_force, abs(fd - p) / max(abs(p), 1e-30))
    return [
        CheckResult("pressure-z-uniformity", worst_spread, tol_spread),
        CheckResult("force-energy-consistency", worst_force, tol_force),
    ]


def _check_conformal_and_improved(tol: float) -> list[CheckResult]:
    zs = [(i + 0.5) / 16.0 for i in range(16)]
    worst_const = 0.0
    st4 = Spacetime(4, 1.0)
    vals = [core.em_stress(st4, EmBC.METALLIC, z).t00 for z in zs]
    worst_const = max(worst_const, _spread(vals))
    st2 = Spacetime(2, 1.0)
    vals = [core.scalar_stress(st2, ScalarBC.DIRICHLET, z).t00 for z in zs]
    worst_const = max(worst_const, _spread(vals))

    worst_improved = 0.0
    for dim in range(3, 13):
        st = Spacetime(dim, 1.0)
        e0 = core.base_energy_density(st)
        t = core.scalar_stress(st, ScalarBC.NEUMANN, 0.37, improved=True)
        scale = abs(e0)
        worst_improved = max(
            worst_improved,
            abs(t.t00 - e0) / scale,
            abs(t.t_transverse + e0) / scale,
            abs(t.tzz - (dim - 1) * e0) / scale,
            abs(t.trace) / scale,
        )
    return [
        CheckResult("conformal-constancy", worst_const, tol),
        CheckResult("improved-tensor-pattern", worst_improved, tol),
    ]


def _check_trace_identity(tol: float) -> CheckResult:
    worst = 0.0
    for dim in range(3, 11):
        st = Spacetime(dim, 1.0)
        for bc in (EmBC.METALLIC, EmBC.MIT):
            for z in (0.1, 0.3, 0.5):
                t = core.em_stress(st, bc, z)
                fl = core.em_fluctuations(st, bc, z)
                rhs = (dim / 4.0 - 1.0) * core.field_invariant(fl, dim)
                scale = max(abs(t.t00), abs(t.tzz), 1e-300)
                worst = max(worst, abs(t.trace - rhs) / scale)
    return CheckResult("maxwell-trace-identity", worst, tol)


def _check_duality_and_displays(tol: float) -> CheckResult:
    worst = 0.0
    for dim in (3, 4, 6, 9):
        st = Spacetime(dim, 1.0)
        for z in (0.2, 0.5, 0.8):
            met = core.em_fluctuations(st, EmBC.METALLIC, z)
            mit = core.em_fluctuations(st, EmBC.MIT, z)
            scale = max(abs(met.ez2), abs(met.ei2), 1e-300)
            worst = max(worst, abs(met.biz2 + met.ez2) / scale)
            if dim > 3:
                worst = max(worst, abs(met.bij2 + met.ei2) / scale)
            # swapping the wall type flips only the profile term, so the
            # bc sum must reduce to twice the uniform part; measured
            # relative to the (possibly much larger) summands, since the
            # profile terms cancel in float arithmetic
            sum_ez = met.ez2 + mit.ez2
            base = -2.0 * (dim - 2) * core.base_energy_density(st)
            worst = max(
                worst, abs(sum_ez - base) / max(abs(met.ez2), abs(mit.ez2), base)
            )
    st4 = Spacetime(4, 1.0)
    for zfrac in (0.25, 0.5, 0.75):
        theta = math.pi * zfrac
        fl = core.em_fluctuations(st4, EmBC.METALLIC, zfrac)
        want_ez = (math.pi**2 / 48.0) * (core.F_theta(theta) + 1.0 / 15.0)
        want_ei = (math.pi**2 / 48.0) * (core.F_theta(theta) - 1.0 / 15.0)
        worst = max(worst, _rel(fl.ez2, want_ez), _rel(fl.ei2, want_ei))
    return CheckResult("duality-and-d4-displays", worst, tol)


def _check_degeneracy(tol: float) -> CheckResult:
    worst = 0.0
    for dim in range(3, 13):
        st = Spacetime(dim, 1.0)
        for em_bc in (EmBC.METALLIC, EmBC.MIT):
            em_tzz = core.em_stress(st, em_bc, 0.31).tzz
            sc_tzz = core.scalar_stress(st, em_bc.scalar_bc, 0.31).tzz
            worst = max(worst, _rel(em_tzz, (dim - 2) * sc_tzz))
        # Dirichlet/Neumann exchange flips only the profile term: the bc
        # sum drops it, so compare at the scale of the summands (the
        # profile terms can dwarf the uniform part near the plates)
        zd = core.scalar_energy_density(st, ScalarBC.DIRICHLET, 0.2)
        zn = core.scalar_energy_density(st, ScalarBC.NEUMANN, 0.2)
        e0 = core.base_energy_density(st)
        worst = max(worst, abs(zd + zn - 2.0 * e0) / max(abs(zd), abs(zn), abs(e0)))
    return CheckResult("bc-exchange-and-degeneracy", worst, tol)


def _check_cancellation(n_interior: int, tol: float) -> CheckResult:
    worst = 0.0
    n_ext = 32
    for dim in range(5, 11):
        st = Spacetime(dim, 1.0)
        delta = 1e-8
        grid = (
            [-(i + 0.5) / n_ext for i in range(n_ext)]
            + list(np.linspace(delta, 1.0 - delta, n_interior))
            + [1.0 + (i + 0.5) / n_ext for i in range(n_ext)]
        )
        prof = core.subtracted_profile(st, EmBC.METALLIC, grid)
        split = oracle.profile_energy_integral(prof, st)
        want = core.total_energy_per_area(st, Theory(TheoryKind.MAXWELL, EmBC.METALLIC))
        worst = max(worst, _rel(split.total, want))
    return CheckResult("subtracted-energy-cancellation", worst, tol)


def _check_single_plate(tol: float) -> list[CheckResult]:
    sp = core.single_plate_stress(6, EmBC.METALLIC, 1.0)
    far = core.em_stress(Spacetime(6, 1000.0), EmBC.METALLIC, 1.0)
    residual = _rel(far.t00, sp.t00)
    t4 = core.single_plate_stress(4, EmBC.METALLIC, 0.7)
    exact_zero = max(abs(t4.t00), abs(t4.tzz), abs(t4.t_transverse), abs(t4.trace))
    # convergence rate measured where the deviation is still far above
    # double-precision noise
    dev10 = _rel(core.em_stress(Spacetime(6, 10.0), EmBC.METALLIC, 1.0).t00, sp.t00)
    dev100 = _rel(core.em_stress(Spacetime(6, 100.0), EmBC.METALLIC, 1.0).t00, sp.t00)
    slope = math.log10(dev10 / dev100)
    return [
        CheckResult("single-plate-limit", max(residual, exact_zero), tol),
        CheckResult("single-plate-falloff-rate", abs(slope - 6.0), 0.5),
    ]


def run_checks(quick: bool = False) -> list[CheckResult]:
    """Run every consistency check; returns one result per check."""
    relax = 100.0 if quick else 1.0
    images = 10**4 if quick else 10**6
    modes = 10**3 if quick else 10**4
    # the smallest regulator in the scaled schedule dictates the number
    # of modes the D=3 sum needs before its own exponential cutoff bites
    cutoff_budget = oracle.SeriesBudget(max_modes=2000 if quick else 40000)
    cutoff_scale = 6.0 if quick else 1.0
    budget = oracle.SeriesBudget(max_images=images, max_modes=modes)
    n_interior = 257 if quick else 1025

    results = [_check_classic_pressure(1e-10 * relax)]
    results.append(_check_f_dual_forms(budget, 1e-9 * relax))
    results.extend(_check_green(budget, 1e-6 * relax))
    results.extend(_check_cutoff(cutoff_budget, 1e-3 * relax, cutoff_scale))
    results.extend(_check_pressure_constancy(1e-10 * relax, 1e-7 * relax))
    results.extend(_check_conformal_and_improved(1e-10 * relax))
    results.append(_check_trace_identity(1e-10 * relax))
    results.append(_check_duality_and_displays(1e-10 * relax))
    results.append(_check_degeneracy(1e-10 * relax))
    results.append(_check_cancellation(n_interior, 1e-6 * relax))
    results.extend(_check_single_plate(1e-6 * relax))
    return results
