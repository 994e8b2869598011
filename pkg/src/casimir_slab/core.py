"""Closed-form vacuum energies, pressures and stress tensors for a slab.

Geometry: two parallel hyperplanes a distance L apart in D-dimensional
flat spacetime (D = 1 + d, metric diag(1, -1, ..., -1)), natural units
hbar = c = 1. The plates sit at z = 0 and z = L; "transverse" means the
D - 2 spatial directions parallel to the plates.

Every density or pressure returned here scales as 1/L^D; energies per
unit plate hyperarea scale as 1/L^(D-1). Stress tensors are reported as
physical component values (t00 = energy density, tzz = normal pressure,
t_transverse = the common value of the diagonal transverse components),
so callers never handle metric signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from . import specfun
from .errors import DomainError

__all__ = [
    "ScalarBC",
    "EmBC",
    "TheoryKind",
    "Theory",
    "Spacetime",
    "StressTensor",
    "Region",
    "ProfileSample",
    "Profile",
    "FieldFluctuations",
    "base_energy_density",
    "total_energy_per_area",
    "pressure",
    "f_profile",
    "F_theta",
    "scalar_energy_density",
    "scalar_stress",
    "em_fluctuations",
    "em_stress",
    "single_plate_stress",
    "f_tilde",
    "subtracted_profile",
    "field_invariant",
]

_MIN_DIM = 2
_MAX_DIM = 24  # series/Bernoulli tails are validated in this range only


class ScalarBC(Enum):
    """Boundary condition for the scalar field on both plates."""

    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"


class EmBC(Enum):
    """Electromagnetic boundary condition; maps rigidly onto a scalar one.

    Perfectly conducting (metallic) walls constrain the gauge field like
    Dirichlet plates; the bag-model (MIT) condition is the dual choice
    and behaves like Neumann plates. The mapping is not configurable.
    """

    METALLIC = "metallic"
    MIT = "mit"

    @property
    def scalar_bc(self) -> ScalarBC:
        return ScalarBC.DIRICHLET if self is EmBC.METALLIC else ScalarBC.NEUMANN


class TheoryKind(Enum):
    SCALAR_CANONICAL = "scalar-canonical"
    SCALAR_IMPROVED = "scalar-improved"
    MAXWELL = "maxwell"


@dataclass(frozen=True)
class Theory:
    """Field content plus the stress tensor convention to evaluate.

    The improved scalar differs from the canonical one only by the
    total-derivative improvement term that restores tracelessness; it
    changes the local energy distribution but never the force.
    """

    kind: TheoryKind
    bc: ScalarBC | EmBC

    def __post_init__(self) -> None:
        if self.kind is TheoryKind.MAXWELL:
            if not isinstance(self.bc, EmBC):
                raise ValueError("Maxwell theory requires an EmBC boundary condition")
        elif not isinstance(self.bc, ScalarBC):
            raise ValueError("scalar theories require a ScalarBC boundary condition")

    @property
    def scalar_bc(self) -> ScalarBC:
        """The scalar boundary condition the computation reduces to."""
        if isinstance(self.bc, EmBC):
            return self.bc.scalar_bc
        return self.bc


@dataclass(frozen=True)
class Spacetime:
    """Slab geometry: spacetime dimension D and plate separation L."""

    dim_D: int
    plate_gap_L: float = 1.0

    def __post_init__(self) -> None:
        if self.dim_D != int(self.dim_D) or not _MIN_DIM <= self.dim_D <= _MAX_DIM:
            raise ValueError(
                f"dim_D must be an integer in [{_MIN_DIM}, {_MAX_DIM}], got {self.dim_D}"
            )
        if not (math.isfinite(self.plate_gap_L) and self.plate_gap_L > 0.0):
            raise ValueError(f"plate_gap_L must be positive, got {self.plate_gap_L}")


@dataclass(frozen=True)
class StressTensor:
    """Diagonal stress-tensor values at one point.

    t00: energy density. tzz: pressure normal to the plates.
    t_transverse: common value of the diagonal components along the
    plate directions. trace: t00 - (D-2) t_transverse - tzz.
    """

    t00: float
    tzz: float
    t_transverse: float
    trace: float


class Region(Enum):
    LEFT_EXTERIOR = "left-exterior"
    INTERIOR = "interior"
    RIGHT_EXTERIOR = "right-exterior"


@dataclass(frozen=True)
class ProfileSample:
    z: float
    region: Region
    tensor: StressTensor


@dataclass(frozen=True)
class Profile:
    """Stress tensor sampled on a strictly increasing z grid."""

    spacetime: Spacetime
    theory: Theory
    samples: tuple[ProfileSample, ...]

    def __post_init__(self) -> None:
        zs = [s.z for s in self.samples]
        if any(b <= a for a, b in zip(zs, zs[1:])):
            raise ValueError("profile samples must be strictly increasing in z")
        length = self.spacetime.plate_gap_L
        for s in self.samples:
            if s.region is Region.INTERIOR and not 0.0 < s.z < length:
                raise ValueError(f"interior sample at z={s.z} outside (0, L)")


@dataclass(frozen=True)
class FieldFluctuations:
    """Squared field-strength fluctuations at one point between plates.

    ez2: normal electric component. ei2: one transverse electric
    component (no sum). biz2: one magnetic component with a normal
    index. bij2: one purely transverse magnetic component (0 when D = 3,
    where no transverse pair exists).
    """

    ez2: float
    ei2: float
    biz2: float
    bij2: float


def _plate_scale(dim: int, length: float) -> float:
    # gamma(D/2) / ((4 pi)^(D/2) L^D): the overall scale of every
    # slab-induced density.
    return specfun.gamma(dim / 2.0) / ((4.0 * math.pi) ** (dim / 2.0) * length**dim)


def _bc_sign(bc: ScalarBC | EmBC) -> float:
    # Upper sign for Dirichlet-like conditions throughout.
    scalar = bc.scalar_bc if isinstance(bc, EmBC) else bc
    return 1.0 if scalar is ScalarBC.DIRICHLET else -1.0


def _check_interior(st: Spacetime, z: float) -> None:
    if not 0.0 < z < st.plate_gap_L:
        raise DomainError(
            f"z={z} is on or outside the plates; densities diverge at z=0 and z=L"
        )


def base_energy_density(st: Spacetime) -> float:
    """Uniform vacuum energy density of the slab (scalar field, per mode).

    -gamma(D/2) zeta(D) / ((4 pi)^(D/2) L^D): always negative, scaling
    as 1/L^D.
    """
    return -(_plate_scale(st.dim_D, st.plate_gap_L) * specfun.riemann_zeta(float(st.dim_D)))


def total_energy_per_area(st: Spacetime, th: Theory) -> float:
    """Vacuum energy per unit plate hyperarea.

    Scalar: E = e0 L (canonical and improved agree; the improvement term
    is a total derivative and cannot shift the integral). Maxwell: D - 2
    field polarizations multiply the scalar result.
    """
    e0_l = base_energy_density(st) * st.plate_gap_L
    if th.kind is TheoryKind.MAXWELL:
        dof = st.dim_D - 2
        if dof == 0:
            return 0.0
        return dof * e0_l
    return e0_l


def pressure(st: Spacetime, th: Theory) -> float:
    """Normal force per unit hyperarea on the plates, -dE/dL.

    Equals (D-1) e0 for one scalar mode and (D-2)(D-1) e0 for the
    Maxwell field; negative (attractive) in every dimension with
    propagating modes.
    """
    e0 = base_energy_density(st)
    if th.kind is TheoryKind.MAXWELL:
        coeff = (st.dim_D - 2) * (st.dim_D - 1)
        if coeff == 0:
            return 0.0
        return coeff * e0
    return (st.dim_D - 1) * e0


def f_profile(st: Spacetime, x: float) -> float:
    """Dimensionless image-sum profile sum_j |j + x|^(-D), 0 < x < 1.

    Evaluated through its Hurwitz closed form
    zeta_H(D, x) + zeta_H(D, 1-x); symmetric about x = 1/2 and diverging
    as x^-D at the plates.
    """
    if not 0.0 < x < 1.0:
        raise DomainError(f"f_profile: x={x} is on a plate; the image sum diverges")
    d = float(st.dim_D)
    return specfun.hurwitz_zeta(d, x) + specfun.hurwitz_zeta(d, 1.0 - x)


def F_theta(theta: float) -> float:
    """Position-dependence factor 3/sin^4 - 2/sin^2 at D = 4.

    Normalized so that the midpoint value is 1; every position-dependent
    expectation value in four dimensions is proportional to it.
    """
    if not 0.0 < theta < math.pi:
        raise DomainError(f"F_theta: theta={theta} outside (0, pi)")
    s2 = math.sin(theta) ** 2
    return 3.0 / s2**2 - 2.0 / s2


def scalar_energy_density(st: Spacetime, bc: ScalarBC, z: float) -> float:
    """Local vacuum energy density of the canonical scalar at 0 < z < L.

    -(scale) [zeta(D) +/- (D/2 - 1) f(z/L)], upper sign for Dirichlet.
    The f term vanishes identically at D = 2 (the conformal case) and
    diverges at the plates otherwise.
    """
    _check_interior(st, z)
    dim = st.dim_D
    scale = _plate_scale(dim, st.plate_gap_L)
    zeta = specfun.riemann_zeta(float(dim))
    coef = dim / 2.0 - 1.0
    if coef == 0.0:
        return -(scale * zeta)
    f = f_profile(st, z / st.plate_gap_L)
    return -scale * (zeta + _bc_sign(bc) * coef * f)


def _assemble(dim: int, t00: float, tzz: float) -> StressTensor:
    # All tensors here are proportional to the transverse metric in the
    # barred block, so t_transverse = -t00 and the trace follows. The
    # "+ 0.0" normalizes negative zeros produced by vanishing
    # coefficients so reports never print -0.
    return StressTensor(
        t00=t00 + 0.0,
        tzz=tzz + 0.0,
        t_transverse=-t00 + 0.0,
        trace=(dim - 1) * t00 - tzz + 0.0,
    )


def scalar_stress(
    st: Spacetime, bc: ScalarBC, z: float, improved: bool = False
) -> StressTensor:
    """Scalar stress tensor at 0 < z < L (massless field).

    Canonical: t00 is the z-dependent local density, tzz = (D-1) e0 is
    position independent. Improved: the traceless tensor, with constant
    t00 = e0, t_transverse = -e0, tzz = (D-1) e0. At D = 2 the two
    coincide because the improvement coefficient vanishes.
    """
    _check_interior(st, z)
    dim = st.dim_D
    e0 = base_energy_density(st)
    tzz = (dim - 1) * e0
    if improved:
        t00 = e0
    else:
        t00 = scalar_energy_density(st, bc, z)
    return _assemble(dim, t00, tzz)


def em_fluctuations(st: Spacetime, bc: EmBC, z: float) -> FieldFluctuations:
    """Squared electric/magnetic fluctuations between the plates, D >= 3.

    With the common scale A = gamma(D/2)/((4 pi)^(D/2) L^D) and the
    profile f = f(z/L), metallic walls give

        ez2 = (D-2) A [zeta(D) + f/2],   ei2 = -2 A [zeta(D) - f/2],

    and the dual (MIT) condition flips the sign of the f terms. The
    magnetic entries follow from duality: biz2 = -ez2, bij2 = -ei2
    (bij2 is reported as 0 at D = 3 where no transverse pair exists).
    """
    if st.dim_D < 3:
        raise DomainError("em_fluctuations: Maxwell needs D >= 3")
    _check_interior(st, z)
    dim = st.dim_D
    scale = _plate_scale(dim, st.plate_gap_L)
    zeta = specfun.riemann_zeta(float(dim))
    f = f_profile(st, z / st.plate_gap_L)
    s = _bc_sign(bc)
    ez2 = (dim - 2) * scale * (zeta + s * 0.5 * f)
    ei2 = -2.0 * scale * (zeta - s * 0.5 * f)
    bij2 = 0.0 if dim == 3 else -ei2
    return FieldFluctuations(ez2=ez2, ei2=ei2, biz2=-ez2, bij2=bij2)


def field_invariant(fl: FieldFluctuations, dim_D: int) -> float:
    """Full contraction of the squared field strength from its components.

    Counting the D-2 transverse directions once per electric component
    and per mixed magnetic component, and the (D-2)(D-3)/2 unordered
    transverse pairs twice (antisymmetry), the invariant is

        F^2 = -2 [(D-2) ei2 + ez2] + 2 (D-2) biz2 + (D-2)(D-3) bij2.
    """
    dof = dim_D - 2
    return (
        -2.0 * (dof * fl.ei2 + fl.ez2)
        + 2.0 * dof * fl.biz2
        + dof * (dim_D - 3) * fl.bij2
    )


def em_stress(st: Spacetime, bc: EmBC, z: float) -> StressTensor:
    """Maxwell stress tensor between the plates, D >= 3.

    t00 = -(D-2) A [zeta(D) +/- (D/2 - 2) f(z/L)] (upper sign metallic),
    tzz = (D-2)(D-1) e0 independent of z. The position-dependent term
    carries the coefficient D/2 - 2, which vanishes exactly at D = 4:
    the conformal case with a constant energy density.
    """
    if st.dim_D < 3:
        raise DomainError("em_stress: Maxwell needs D >= 3")
    _check_interior(st, z)
    dim = st.dim_D
    e0 = base_energy_density(st)
    tzz = ((dim - 2) * (dim - 1)) * e0
    coef = dim / 2.0 - 2.0
    if coef == 0.0:
        t00 = (dim - 2) * e0
    else:
        scale = _plate_scale(dim, st.plate_gap_L)
        zeta = specfun.riemann_zeta(float(dim))
        f = f_profile(st, z / st.plate_gap_L)
        t00 = -(dim - 2) * scale * (zeta + _bc_sign(bc) * coef * f)
    return _assemble(dim, t00, tzz)


def single_plate_stress(dim_D: int, bc: EmBC, z: float) -> StressTensor:
    """Maxwell stress induced by one plate at z = 0, evaluated at z != 0.

    The infinite-separation limit of the two-plate tensor: tzz vanishes
    on both sides, and the remaining components fall off as |z|^-D with
    coefficient -(D-2)(D/2-2) gamma(D/2)/(4 pi)^(D/2) for metallic walls
    (sign reversed for MIT). Identically zero at D = 4.
    """
    if not _MIN_DIM <= dim_D <= _MAX_DIM or dim_D != int(dim_D):
        raise ValueError(f"dim_D must be an integer in [{_MIN_DIM}, {_MAX_DIM}]")
    if dim_D < 3:
        raise DomainError("single_plate_stress: Maxwell needs D >= 3")
    if z == 0.0:
        raise DomainError("single_plate_stress: on-plate point z=0")
    coef = dim_D / 2.0 - 2.0
    if coef == 0.0:
        return StressTensor(0.0, 0.0, 0.0, 0.0)
    t00 = -_bc_sign(bc) * (dim_D - 2) * coef * _plate_scale(dim_D, abs(z))
    return _assemble(dim_D, t00, 0.0)


def f_tilde(st: Spacetime, x: float) -> float:
    """Plate-term-subtracted profile, finite on the closed interval [0, 1].

    zeta_H(D, 1+x) + zeta_H(D, 2-x): the image profile with the two
    nearest-image contributions x^-D and (1-x)^-D removed; symmetric
    about x = 1/2.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"f_tilde: x={x} outside [0, 1]")
    d = float(st.dim_D)
    return specfun.hurwitz_zeta(d, 1.0 + x) + specfun.hurwitz_zeta(d, 2.0 - x)


def _subtracted_tensor(st: Spacetime, bc: EmBC, z: float) -> tuple[Region, StressTensor]:
    dim = st.dim_D
    length = st.plate_gap_L
    s = _bc_sign(bc)
    coef = dim / 2.0 - 2.0
    prefac = -(dim - 2) * _plate_scale(dim, length)
    if z < 0.0:
        region = Region.LEFT_EXTERIOR
        bracket = -s * coef * (length / (length - z)) ** dim
        tzz = 0.0
    elif z > length:
        region = Region.RIGHT_EXTERIOR
        bracket = -s * coef * (length / z) ** dim
        tzz = 0.0
    else:
        region = Region.INTERIOR
        zeta = specfun.riemann_zeta(float(dim))
        bracket = zeta + s * coef * f_tilde(st, z / length)
        tzz = ((dim - 2) * (dim - 1)) * base_energy_density(st)
    t00 = prefac * bracket
    return region, _assemble(dim, t00, tzz)


def subtracted_profile(st: Spacetime, bc: EmBC, z_grid: Iterable[float]) -> Profile:
    """Everywhere-finite Maxwell stress profile, plate self-energies removed.

    Subtracting from the two-plate tensor the single-plate |z|^-D tails
    of both plates (both sides each) leaves a piecewise expression that
    is finite for all z: the interior bracket uses the subtracted
    profile function, the exterior branches are pure power laws with
    zero pressure. Grid points may lie outside the slab but must avoid
    z = 0 and z = L exactly, where the branch assignment is ambiguous;
    probe the two one-sided limits instead.
    """
    if st.dim_D < 3:
        raise DomainError("subtracted_profile: Maxwell needs D >= 3")
    zs = sorted(z_grid)
    samples = []
    for z in zs:
        if z == 0.0 or z == st.plate_gap_L:
            raise DomainError(
                f"subtracted_profile: grid point z={z} sits exactly on a plate"
            )
        region, tensor = _subtracted_tensor(st, bc, z)
        samples.append(ProfileSample(z=z, region=region, tensor=tensor))
    theory = Theory(TheoryKind.MAXWELL, bc)
    return Profile(spacetime=st, theory=theory, samples=tuple(samples))
