"""Gaussian-type distribution functions and unit-volume radii.

The bounds in this package are phrased through the one-dimensional
distribution function of the density exp(-pi x^2),

    phi(a) = int_{-inf}^{a} exp(-pi x^2) dx,

and its generalization to exponents p in [1, 2],

    phi_p(a) = int_{-inf}^{a} exp(-kappa_p |x|^p) dx,
    kappa_p  = 2^p Gamma(1 + 1/p)^p,

where kappa_p is chosen so the density has total mass one (kappa_1 = 2,
kappa_2 = pi).  psi_p(a) = phi_p(e^{1/p} a) is the rescaled variant that
appears as the limit law of hyperplane sections of l_p balls.

Evaluation goes through erfc and the regularized incomplete gamma
functions, which stay accurate deep in the tails; the inverses use the
corresponding inverse special functions.  A quadrature-plus-bisection
route lives in the test suite as an independent cross-check.

unit_volume_radius gives the scaling factor omega_n that normalizes each
body family to volume one; everything is evaluated through log-gamma so
large n does not overflow.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as sp

from .bodies import BodyFamily, validate_p
from .errors import DomainError

SQRT_PI = math.sqrt(math.pi)
SQRT_E = math.sqrt(math.e)


def phi(a):
    """Distribution function of exp(-pi x^2); accepts scalars or arrays.

    Computed as erfc(-sqrt(pi) a)/2, which is stable in both tails and
    maps -inf/+inf to 0/1.
    """
    a = np.asarray(a, dtype=float)
    out = 0.5 * sp.erfc(-SQRT_PI * a)
    return float(out) if out.ndim == 0 else out


def phi_inv(eps):
    """Inverse of phi on (0, 1); accepts scalars or arrays.

    Uses erfcinv on whichever tail is small: small eps goes through
    erfcinv(2 eps) directly, eps > 1/2 reflects through 1 - eps (exact
    in floating point on [1/2, 1)), so both tails keep full relative
    accuracy and phi_inv(1 - eps) = -phi_inv(eps) by construction.
    """
    eps = np.asarray(eps, dtype=float)
    if np.any(eps <= 0.0) or np.any(eps >= 1.0):
        raise DomainError("phi_inv needs eps in (0, 1)")
    low = np.minimum(eps, 1.0 - eps)
    sign = np.where(eps <= 0.5, -1.0, 1.0)
    out = sign * sp.erfcinv(2.0 * low) / SQRT_PI
    return float(out) if out.ndim == 0 else out


def kappa(p: float) -> float:
    """Normalizing constant 2^p Gamma(1+1/p)^p of the exponent-p density."""
    p = validate_p(p)
    return 2.0**p * math.gamma(1.0 + 1.0 / p) ** p


def phi_p(a, p: float):
    """Distribution function of exp(-kappa_p |x|^p) for p in [1, 2].

    Reduces to the incomplete gamma functions on each half line:
    for a < 0 the value is Q(1/p, kappa_p |a|^p)/2, for a >= 0 it is
    1/2 + P(1/p, kappa_p a^p)/2, with P, Q the regularized pair.
    phi_p(0, p) = 1/2 exactly and phi_2 coincides with phi.
    """
    p = validate_p(p)
    a = np.asarray(a, dtype=float)
    z = kappa(p) * np.abs(a) ** p
    with np.errstate(invalid="ignore"):
        out = np.where(a < 0.0, 0.5 * sp.gammaincc(1.0 / p, z),
                       0.5 + 0.5 * sp.gammainc(1.0 / p, z))
    return float(out) if out.ndim == 0 else out


def phi_p_inv(eps: float, p: float) -> float:
    """Inverse of phi_p(., p) on (0, 1)."""
    p = validate_p(p)
    eps = float(eps)
    if not 0.0 < eps < 1.0:
        raise DomainError(f"phi_p_inv needs eps in (0, 1), got {eps}")
    if eps == 0.5:
        return 0.0
    k = kappa(p)
    if eps < 0.5:
        z = sp.gammainccinv(1.0 / p, 2.0 * eps)
        return float(-((z / k) ** (1.0 / p)))
    z = sp.gammaincinv(1.0 / p, 2.0 * eps - 1.0)
    return float((z / k) ** (1.0 / p))


def psi_p(a, p: float):
    """Section-limit distribution function phi_p(e^{1/p} a)."""
    return phi_p(math.exp(1.0 / p) * np.asarray(a, dtype=float), p)


def psi_p_inv(eps: float, p: float) -> float:
    """Inverse of psi_p(., p); equals phi_p_inv(eps, p) / e^{1/p}."""
    return phi_p_inv(eps, p) / math.exp(1.0 / validate_p(p))


def phi_inv_asymptote(eps: float) -> float:
    """Leading-order form -sqrt(-ln eps)/sqrt(pi) of phi_inv as eps -> 0.

    The ratio asymptote/actual tends to 1; the approach is slow because
    the neglected log-correction decays like ln(-ln eps)/(-ln eps).
    """
    eps = float(eps)
    if not 0.0 < eps < 0.5:
        raise DomainError(f"asymptote defined for eps in (0, 1/2), got {eps}")
    return -math.sqrt(-math.log(eps)) / SQRT_PI


def psi_p_inv_asymptote(eps: float, p: float) -> float:
    """Leading-order form -(-ln eps)^{1/p} / (2 e^{1/p} Gamma(1+1/p))."""
    p = validate_p(p)
    eps = float(eps)
    if not 0.0 < eps < 0.5:
        raise DomainError(f"asymptote defined for eps in (0, 1/2), got {eps}")
    return -((-math.log(eps)) ** (1.0 / p)) / (
        2.0 * math.exp(1.0 / p) * math.gamma(1.0 + 1.0 / p)
    )


def unit_volume_radius(family: BodyFamily | str, n: int, p: float | None = None) -> float:
    """Scaling factor omega_n that gives the family's body volume one.

    ball:    Gamma(n/2+1)^{1/n} / sqrt(pi)      (euclidean radius)
    lp:      Gamma(1+n/p)^{1/n} / (2 Gamma(1+1/p))
    simplex: (n! / (n sqrt(n)))^{1/(n-1)}, n >= 2; the regular simplex
             omega_n * Delta_n then has side sqrt(2) * omega_n
    cube:    1 (the side of (0,1)^n)

    Asymptotically the ball radius grows like sqrt(n/(2 pi e)) and the
    simplex factor like n/e.
    """
    if isinstance(family, str):
        family = BodyFamily(family, p) if family == "lp" else BodyFamily(family)
    n = int(n)
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    if family.kind == "cube":
        return 1.0
    if family.kind == "ball":
        return math.exp(sp.gammaln(n / 2.0 + 1.0) / n) / SQRT_PI
    if family.kind == "lp":
        q = family.p
        return math.exp(sp.gammaln(1.0 + n / q) / n) / (2.0 * math.gamma(1.0 + 1.0 / q))
    # simplex: the exponent 1/(n-1) needs n >= 2
    if n < 2:
        raise DomainError("simplex radius needs n >= 2")
    return math.exp((sp.gammaln(n + 1.0) - 1.5 * math.log(n)) / (n - 1.0))
