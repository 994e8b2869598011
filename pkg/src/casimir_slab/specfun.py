"""High-precision real special functions.

Everything downstream (energy densities, stress profiles, fluctuation
records) reduces to the functions in this module: the gamma function,
the Riemann zeta function including its continuation to negative
argument, the Hurwitz zeta function, polygamma functions, repeated
cotangent derivatives and the generalized Coulomb potential of a point
source in n spatial dimensions.

All functions are deterministic pure maps on Python floats; there is no
internal mutable state, so every operation is safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "Precision",
    "gamma",
    "riemann_zeta",
    "hurwitz_zeta",
    "polygamma",
    "cot_derivative",
    "coulomb_potential",
]


@dataclass(frozen=True)
class Precision:
    """Accuracy knobs for the series evaluations.

    abs_tol: early-exit threshold for tail corrections (must be > 0).
    max_terms: cap on the number of directly summed terms (>= 16).
    """

    abs_tol: float = 1e-15
    max_terms: int = 512

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise ValueError("abs_tol must be positive")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")


_DEFAULT_PRECISION = Precision()

# Exact Bernoulli numbers B_2 .. B_20. Stored as rationals so the
# Euler-Maclaurin coefficients below are reproducible to the last bit.
_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
)

# B_2k / (2k)! for k = 1..10, as floats.
_EM_COEFF = tuple(
    float(b / math.factorial(2 * (k + 1))) for k, b in enumerate(_BERNOULLI)
)

# B_2k / (2k (2k-1)) for k = 1..6: Stirling-series correction terms.
_STIRLING_COEFF = tuple(
    float(b / (2 * (k + 1) * (2 * (k + 1) - 1))) for k, b in enumerate(_BERNOULLI[:6])
)

# Lanczos approximation, g = 607/128, 15 terms (Numerical Recipes 3rd ed.).
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)

_SQRT_TWO_PI = 2.5066282746310005
_LANCZOS_G_PLUS_HALF = 607.0 / 128.0 + 0.5


def _ln_gamma_lanczos(x: float) -> float:
    # Valid for x > 0; near machine precision for moderate arguments.
    tmp = x + _LANCZOS_G_PLUS_HALF
    tmp = (x + 0.5) * math.log(tmp) - tmp
    ser = _LANCZOS_C0
    y = x
    for c in _LANCZOS:
        y += 1.0
        ser += c / y
    return tmp + math.log(_SQRT_TWO_PI * ser / x)


def _ln_gamma_stirling(x: float) -> float:
    # Asymptotic series with six correction terms; used for x > 30 where
    # it is already far below double rounding.
    acc = (x - 0.5) * math.log(x) - x + 0.5 * math.log(2.0 * math.pi)
    xp = x
    x2 = x * x
    for c in _STIRLING_COEFF:
        acc += c / xp
        xp *= x2
    return acc


def gamma(x: float) -> float:
    """Gamma function of a real argument.

    Uses a 15-term Lanczos approximation for 0.5 <= x <= 30, the
    Stirling series beyond, and the reflection identity
    gamma(x) gamma(1-x) = pi / sin(pi x) below 0.5.

    Raises DomainError at the poles x = 0, -1, -2, ...
    """
    if not math.isfinite(x):
        raise DomainError("gamma: argument must be finite")
    if x <= 0.0 and x == math.floor(x):
        raise DomainError(f"gamma: pole at non-positive integer x={x}")
    if x < 0.5:
        # sin(pi x) is safe here: callers stay in |x| < a few hundred.
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    if x <= 30.0:
        return math.exp(_ln_gamma_lanczos(x))
    return math.exp(_ln_gamma_stirling(x))


def _rising(s: float, n: int) -> float:
    # s (s+1) ... (s+n-1)
    acc = 1.0
    for i in range(n):
        acc *= s + i
    return acc


def _zeta_em(s: float) -> float:
    # Euler-Maclaurin continuation of sum n^-s: 20 direct terms plus the
    # tail through the B_12 term. Valid (far beyond the accuracy target)
    # for s > -11, s != 1.
    n_direct = 20
    acc = 0.0
    for n in range(1, n_direct):
        acc += float(n) ** (-s)
    big_n = float(n_direct)
    acc += 0.5 * big_n ** (-s)
    acc += big_n ** (1.0 - s) / (s - 1.0)
    for k in range(1, 7):
        acc += _EM_COEFF[k - 1] * _rising(s, 2 * k - 1) * big_n ** (-s - 2 * k + 1)
    return acc


def riemann_zeta(s: float) -> float:
    """Riemann zeta function of a real argument, s != 1.

    Direct Euler-Maclaurin summation for s >= 0; for s < 0 the value is
    mapped to 1-s > 1 through the reflection formula

        gamma(s/2) pi^(-s/2) zeta(s) = gamma((1-s)/2) pi^((s-1)/2) zeta(1-s).
    """
    if not math.isfinite(s):
        raise DomainError("riemann_zeta: argument must be finite")
    if s == 1.0:
        raise DomainError("riemann_zeta: pole at s=1")
    if s >= 0.0:
        return _zeta_em(s)
    if s == math.floor(s) and int(s) % 2 == 0:
        return 0.0  # trivial zeros; the reflection route would hit a gamma pole
    return (
        math.pi ** (s - 0.5) * gamma((1.0 - s) / 2.0) / gamma(s / 2.0) * _zeta_em(1.0 - s)
    )


def hurwitz_zeta(s: float, a: float, precision: Precision = _DEFAULT_PRECISION) -> float:
    """Hurwitz zeta function sum_{n>=0} (n+a)^-s for s > 1, a > 0.

    For a < 1 the leading a^-s terms are peeled off until the shifted
    argument exceeds 1 (this keeps the near-plate evaluations exact in
    the dominant term), then a short direct sum plus an Euler-Maclaurin
    tail with Bernoulli numbers through B_20 finishes the job.
    """
    if not (math.isfinite(s) and math.isfinite(a)):
        raise DomainError("hurwitz_zeta: arguments must be finite")
    if s <= 1.0:
        raise DomainError(f"hurwitz_zeta: requires s > 1, got s={s}")
    if a <= 0.0:
        raise DomainError(f"hurwitz_zeta: requires a > 0, got a={a}")
    acc = 0.0
    shifted = a
    terms = 0
    while shifted < 1.0:
        acc += shifted ** (-s)
        shifted += 1.0
        terms += 1
    # Direct terms until the tail expansion point is comfortably large.
    n_direct = max(0, 16 - int(shifted))
    n_direct = min(n_direct, precision.max_terms - terms)
    for n in range(n_direct):
        acc += (shifted + n) ** (-s)
    x = shifted + n_direct
    acc += x ** (1.0 - s) / (s - 1.0)
    acc += 0.5 * x ** (-s)
    for k in range(1, 11):
        term = _EM_COEFF[k - 1] * _rising(s, 2 * k - 1) * x ** (-s - 2 * k + 1)
        acc += term
        if abs(term) < precision.abs_tol * abs(acc):
            break
    return acc


def polygamma(k: int, x: float) -> float:
    """k-th derivative of the digamma function, k >= 1, x > 0.

    Evaluated through the Hurwitz zeta function:
    psi^(k)(x) = (-1)^(k+1) k! zeta_H(k+1, x).
    """
    if k < 1 or k != int(k):
        raise DomainError(f"polygamma: order must be a positive integer, got {k}")
    if x <= 0.0:
        raise DomainError(f"polygamma: requires x > 0, got x={x}")
    sign = 1.0 if k % 2 == 1 else -1.0
    return sign * math.factorial(k) * hurwitz_zeta(float(k + 1), x)


def cot_derivative(order: int, theta: float) -> float:
    """(-d/dtheta)^order of cot(theta) for theta strictly inside (0, pi).

    Each derivative maps a polynomial P(c) in c = cot(theta) to
    P'(c) (1 + c^2), so the coefficients stay exact integers; the final
    polynomial is evaluated at c by Horner's rule. Since the surviving
    coefficients are all non-negative and the polynomial has fixed
    parity, the evaluation involves no cancellation.
    """
    if order < 1 or order != int(order):
        raise DomainError(f"cot_derivative: order must be a positive integer, got {order}")
    if not 0.0 < theta < math.pi:
        raise DomainError(f"cot_derivative: theta must lie in (0, pi), got {theta}")
    coeffs = [0, 1]  # cot itself, as a polynomial in c
    for _ in range(order):
        deriv = [i * coeffs[i] for i in range(1, len(coeffs))]
        nxt = [0] * (len(deriv) + 2)
        for i, d in enumerate(deriv):
            nxt[i] += d
            nxt[i + 2] += d
        coeffs = nxt
    c = math.cos(theta) / math.sin(theta)
    acc = 0.0
    for coef in reversed(coeffs):
        acc = acc * c + coef
    return acc


def coulomb_potential(n: int, r: float) -> float:
    """Potential of a unit point source in n >= 3 spatial dimensions.

    V_n(r) = gamma(n/2 - 1) / (4 pi^(n/2) r^(n-2)), the kernel whose
    image sums build the slab correlators.
    """
    if n < 3 or n != int(n):
        raise DomainError(f"coulomb_potential: requires integer n >= 3, got {n}")
    if not r > 0.0:
        raise DomainError(f"coulomb_potential: requires r > 0, got r={r}")
    return gamma(n / 2.0 - 1.0) / (4.0 * math.pi ** (n / 2.0) * r ** (n - 2))
