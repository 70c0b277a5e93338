"""Hyperplane sections of unit-volume bodies and their n -> inf limits.

For the unit-volume l_p ball omega_n B_p^n in R^n, the (n-1)-volume of
the section {x_1 = x} is

    S_n(x) = (1 - x^p/omega_n^p)^{(n-1)/p}
             * Gamma(1+n/p) / (2 omega_n Gamma(1+1/p) Gamma(1+(n-1)/p)),

for 0 <= x <= omega_n and 0 beyond, and the cap volume past x is
V_n(x) = 1/2 - int_0^x S_n(t) dt.  As n grows, S_n converges uniformly
to the density

    psi_p(x) = e^{1/p} exp(-(2 Gamma(1+1/p) e^{1/p} x)^p)

and V_n(x) to psi_p's upper tail, which is Psi_p(-x) = phi_p(-e^{1/p} x)
by symmetry.  These limits are what make the cap bounds dimension-free.

The module also carries two cube-side section tools: the distribution
function of a sum of n independent uniforms (diagonal slabs of the cube
cut by sum(x) = s) and the distribution of a scaled coordinate of a
random point on the sphere S^{n-1}, plus the plane geometry of the
orthogonal-ball construction used to push cap bounds between bodies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy import integrate
from scipy import special as sp

from .bodies import BodyFamily, validate_p
from .errors import DomainError
from .specfun import phi_p, unit_volume_radius


def _section_log_prefactor(p: float, n: int, omega: float) -> float:
    return (sp.gammaln(1.0 + n / p) - sp.gammaln(1.0 + 1.0 / p)
            - sp.gammaln(1.0 + (n - 1.0) / p) - math.log(2.0 * omega))


def lp_section_area(x, p: float, n: int):
    """Section volume S_n(x) of the unit-volume l_p ball at height x >= 0.

    Evaluated in log space so large n neither overflows nor loses the
    (1 - (x/omega)^p)^{(n-1)/p} decay.  Zero for x beyond omega_n.
    """
    p = validate_p(p)
    n = int(n)
    if n < 2:
        raise DomainError(f"section area needs n >= 2, got {n}")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise DomainError("section height must be >= 0")
    omega = unit_volume_radius("lp", n, p)
    logpref = _section_log_prefactor(p, n, omega)
    ratio = np.minimum((x / omega) ** p, 1.0)
    with np.errstate(divide="ignore"):
        out = np.where(x < omega,
                       np.exp(logpref + ((n - 1.0) / p) * np.log1p(-ratio)),
                       0.0)
    return float(out) if out.ndim == 0 else out


def lp_tail_volume(x: float, p: float, n: int) -> float:
    """Cap volume V_n(x) = 1/2 - int_0^x S_n(t) dt, clamped to [0, 1/2].

    Adaptive quadrature of the section area to absolute tolerance 1e-12;
    an incomplete-beta closed form serves as the independent check in the
    tests.
    """
    p = validate_p(p)
    n = int(n)
    if n < 2:
        raise DomainError(f"tail volume needs n >= 2, got {n}")
    x = float(x)
    if x < 0.0:
        raise DomainError("cap height must be >= 0")
    omega = unit_volume_radius("lp", n, p)
    if x >= omega:
        return 0.0
    val, _ = integrate.quad(lambda t: lp_section_area(t, p, n), 0.0, x,
                            epsabs=1e-12, epsrel=1e-12, limit=200)
    return float(min(0.5, max(0.0, 0.5 - val)))


def psi_p_density_limit(x, p: float):
    """Limit density e^{1/p} exp(-(2 Gamma(1+1/p) e^{1/p} x)^p).

    Integrates to 1/2 over [0, inf); at p = 2 this is sqrt(e) e^{-pi e x^2}.
    """
    p = validate_p(p)
    x = np.asarray(x, dtype=float)
    scale = 2.0 * math.gamma(1.0 + 1.0 / p) * math.exp(1.0 / p)
    out = math.exp(1.0 / p) * np.exp(-np.abs(scale * x) ** p)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class SectionCurve:
    p: float
    n: int
    grid: np.ndarray
    areas: np.ndarray
    tails: np.ndarray
    omega: float


def section_curve(p: float, n: int, grid: Sequence[float]) -> SectionCurve:
    """S_n and V_n sampled on an increasing grid of heights.

    The tail values come from cumulative segment quadrature, one short
    adaptive panel per grid cell, so the whole curve costs one pass.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2 or np.any(np.diff(grid) <= 0) or grid[0] < 0:
        raise DomainError("grid must be increasing and nonnegative")
    p = validate_p(p)
    omega = unit_volume_radius("lp", n, p)
    areas = lp_section_area(grid, p, n)
    tails = np.empty_like(grid)
    acc, _ = (integrate.quad(lambda t: lp_section_area(t, p, n), 0.0,
                             min(grid[0], omega), epsabs=1e-12, epsrel=1e-12)
              if grid[0] > 0 else (0.0, 0.0))
    tails[0] = 0.5 - acc
    for i in range(1, grid.size):
        lo, hi = min(grid[i - 1], omega), min(grid[i], omega)
        if hi > lo:
            seg, _ = integrate.quad(lambda t: lp_section_area(t, p, n), lo, hi,
                                    epsabs=1e-13, epsrel=1e-12)
            acc += seg
        tails[i] = 0.5 - acc
    np.clip(tails, 0.0, 0.5, out=tails)
    return SectionCurve(p, int(n), grid, areas, tails, omega)


@dataclass(frozen=True)
class ConvergenceReport:
    p: float
    n_list: tuple
    sup_gap_tail: tuple   # sup_x |V_n(x) - Psi_p(-x)| per n
    sup_gap_area: tuple   # sup_x |S_n(x) - psi_p(x)| per n
    decreasing: bool


def convergence_report(p: float, n_list: Sequence[int],
                       grid: Sequence[float]) -> ConvergenceReport:
    """Uniform gaps between finite-n sections and their limit laws.

    Both gap sequences should decrease along an increasing n_list; the
    report records whether they do.
    """
    p = validate_p(p)
    n_list = tuple(int(n) for n in n_list)
    if any(n < 2 for n in n_list):
        raise DomainError("dimensions must be >= 2")
    grid = np.asarray(grid, dtype=float)
    tail_limit = phi_p(-math.exp(1.0 / p) * grid, p)
    area_limit = psi_p_density_limit(grid, p)
    gaps_v, gaps_s = [], []
    for n in n_list:
        curve = section_curve(p, n, grid)
        gaps_v.append(float(np.max(np.abs(curve.tails - tail_limit))))
        gaps_s.append(float(np.max(np.abs(curve.areas - area_limit))))
    dec = all(a > b for a, b in zip(gaps_v, gaps_v[1:])) and \
        all(a > b for a, b in zip(gaps_s, gaps_s[1:]))
    return ConvergenceReport(p, n_list, tuple(gaps_v), tuple(gaps_s), dec)


@dataclass(frozen=True)
class OrthogonalBallGeometry:
    """Plane data of the ball orthogonal to a cap of width d.

    A ball of radius r centered at O such that its boundary passes
    orthogonally through the rim of the slice at depth d of a ball of
    radius omega.  r = omega^2/d - d/4 needs 0 < d < 2 omega; then
    OA = sqrt(omega^2 + r^2) = r + d/2 and the foot of O on the slice
    axis sits at OH = d/(1 + d^2/(4 omega^2)) <= d.
    """

    d: float
    omega: float
    r: float
    oa: float
    oh: float


def orthogonal_ball_geometry(d: float, omega: float) -> OrthogonalBallGeometry:
    d, omega = float(d), float(omega)
    if omega <= 0.0:
        raise DomainError("omega must be positive")
    if not 0.0 < d < 2.0 * omega:
        raise DomainError(f"need 0 < d < 2*omega for a positive radius, got d={d}")
    r = omega * omega / d - d / 4.0
    oa = math.hypot(omega, r)
    oh = d / (1.0 + d * d / (4.0 * omega * omega))
    return OrthogonalBallGeometry(d, omega, r, oa, oh)


_EXACT_SUM_LIMIT = 40


def cube_sum_cdf(n: int, s: float) -> float:
    """P(U_1 + ... + U_n <= s) for independent uniforms on (0, 1).

    The alternating-sum form

        (1/n!) sum_{j=0}^{floor(s)} (-1)^j C(n, j) (s - j)^n

    cancels catastrophically in floats (about seven digits gone by
    n = 40), so for n <= 40 it is evaluated in exact rational arithmetic
    on the binary value of s and rounded once at the end.  For larger n
    the normal approximation with mean n/2 and variance n/12 takes over.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    s = float(s)
    if s <= 0.0:
        return 0.0
    if s >= n:
        return 1.0
    if n > _EXACT_SUM_LIMIT:
        z = (s - 0.5 * n) / math.sqrt(n / 12.0)
        return 0.5 * math.erfc(-z / math.sqrt(2.0))
    sF = Fraction(s)
    total = Fraction(0)
    for j in range(int(sF) + 1):
        total += (-1) ** j * math.comb(n, j) * (sF - j) ** n
    return min(1.0, max(0.0, float(total / math.factorial(n))))


def sphere_projection_cdf(n: int, x: float) -> float:
    """P(sqrt(n) <u, e> <= x) for u uniform on the sphere S^{n-1}.

    The coordinate t = <u, e> has density proportional to
    (1 - t^2)^{(n-3)/2}, so the distribution function reduces to a
    regularized incomplete beta in t^2.  At n = 3 the coordinate is
    uniform on [-1, 1] and the formula collapses to (1 + x/sqrt(3))/2.
    """
    n = int(n)
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    y = float(x) / math.sqrt(n)
    if y <= -1.0:
        return 0.0
    if y >= 1.0:
        return 1.0
    half_mass = 0.5 * sp.betainc(0.5, (n - 1.0) / 2.0, y * y)
    return 0.5 + math.copysign(half_mass, y)
