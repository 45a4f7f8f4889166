"""Polar quadrature on the unit disk.

All integrals use the normalized area measure: the full disk has measure 1,
so every Euclidean polar integral carries a 1/pi factor.  The workhorse is a
tensor rule, Gauss-Legendre in the radial variable times a uniform (periodic
trapezoid) rule in the angle, refined by node doubling until two successive
estimates agree to a relative tolerance or a node cap is hit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

NODE_CAP = 2**20
REL_TOL = 1e-8


@lru_cache(maxsize=None)
def gauss_legendre_01(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights mapped to (0, 1)."""
    x, w = np.polynomial.legendre.leggauss(n)
    return (x + 1.0) / 2.0, w / 2.0


def gauss_legendre(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    x, w = gauss_legendre_01(n)
    return a + (b - a) * x, (b - a) * w


@dataclass(frozen=True)
class PolarGrid:
    """Tensor quadrature grid for the disk annulus r in [r_lo, r_hi).

    ``points`` are complex nodes, ``weights`` the normalized-area weights,
    so ``sum(weights * f(points))`` approximates ``integral f dA`` over the
    annulus.  ``radii``/``radial_weights`` expose the radial rule for
    integrands that are radial (then the angular sum collapses).
    """

    points: np.ndarray
    weights: np.ndarray
    radii: np.ndarray
    radial_weights: np.ndarray
    angles: np.ndarray
    r_lo: float
    r_hi: float

    @property
    def size(self) -> int:
        return self.points.size


@lru_cache(maxsize=64)
def polar_grid(n_r: int = 128, n_theta: int = 256,
               r_lo: float = 0.0, r_hi: float = 1.0) -> PolarGrid:
    r, wr = gauss_legendre(n_r, r_lo, r_hi)
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    # dA = (1/pi) r dr dtheta, trapezoid weight 2*pi/n_theta
    w_ang = 2.0 / n_theta
    pts = (r[:, None] * np.exp(1j * theta)[None, :]).ravel()
    wts = (wr * r)[:, None].repeat(n_theta, axis=1).ravel() * w_ang
    return PolarGrid(points=pts, weights=wts, radii=r,
                     radial_weights=2.0 * wr * r, angles=theta,
                     r_lo=r_lo, r_hi=r_hi)


def _refine(estimate, n0: int, rel_tol: float, cap: int) -> tuple[float, bool]:
    """Double nodes until two successive estimates agree."""
    prev = estimate(n0)
    n = 2 * n0
    while n <= cap:
        cur = estimate(n)
        if abs(cur - prev) <= rel_tol * max(abs(cur), 1e-300):
            return cur, True
        prev = cur
        n *= 2
    return prev, False


def integrate_disk_radial(profile, rel_tol: float = REL_TOL) -> tuple[float, bool]:
    """integral of profile(|z|) over the whole disk, dA normalized: 2*int r*p(r)dr."""

    def est(n):
        r, w = gauss_legendre_01(n)
        return float(2.0 * np.sum(w * r * profile(r)))

    return _refine(est, 64, rel_tol, 2**16)


def integrate_euclidean_disk(f, center: complex, radius: float,
                             rel_tol: float = REL_TOL) -> tuple[float, bool]:
    """integral of f over the Euclidean disk |z - center| < radius, dA normalized.

    Local polar coordinates around the center keep the integrand smooth no
    matter how small or boundary-hugging the disk is.  ``f`` must accept a
    complex ndarray.
    """

    def est(n):
        n_s = max(8, n // 8)
        n_phi = max(16, n // 2)
        s, ws = gauss_legendre(n_s, 0.0, radius)
        phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
        z = center + s[:, None] * np.exp(1j * phi)[None, :]
        vals = f(z)
        return float(np.sum((ws * s) @ vals) * 2.0 / n_phi)

    return _refine(est, 128, rel_tol, 2**13)


def integrate_carleson_square(profile, vertex_mod: float,
                              r_lo: float = 0.0, r_hi: float = 1.0,
                              rel_tol: float = REL_TOL) -> tuple[float, bool]:
    """Mass of a radial profile over the Carleson square with |vertex| = vertex_mod.

    The angular width is (1-|z|)/pi, so the mass is
    (1-|z|)/pi^2 * int_{|z|}^{1} t * profile(t) dt, with the radial interval
    optionally clipped to [r_lo, r_hi).
    """
    lo = max(vertex_mod, r_lo)
    hi = min(1.0, r_hi)
    if lo >= hi:
        return 0.0, True
    if vertex_mod == 0.0:
        # degenerate square = whole disk
        def est(n):
            t, w = gauss_legendre(n, lo, hi)
            return float(2.0 * np.sum(w * t * profile(t)))
    else:
        width = (1.0 - vertex_mod) / np.pi**2

        def est(n):
            t, w = gauss_legendre(n, lo, hi)
            return float(width * np.sum(w * t * profile(t)))

    return _refine(est, 64, rel_tol, 2**16)


def radial_integral(fn, a: float, b: float, rel_tol: float = 1e-12,
                    points=None) -> float:
    """High-accuracy 1D integral via adaptive quadrature (QAGS)."""
    if a >= b:
        return 0.0
    val, _ = integrate.quad(fn, a, b, epsabs=0.0, epsrel=rel_tol,
                            limit=200, points=points)
    return val
