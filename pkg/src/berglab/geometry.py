"""Hyperbolic geometry of the unit disk.

Mobius maps, the Bergman metric beta(a,z) = artanh|phi_a(z)|, Bergman disks
realized as Euclidean disks, Carleson squares, and separated covering point
sets built on concentric hyperbolic rings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


class GeometryError(ValueError):
    pass


def check_disk_point(z: complex, name: str = "z") -> complex:
    z = complex(z)
    if abs(z) >= 1.0:
        raise GeometryError(f"{name} = {z} is not strictly inside the unit disk")
    return z


def mobius(a: complex, z) -> complex:
    """phi_a(z) = (a - z) / (1 - conj(a) z); involutive automorphism of the disk."""
    a = complex(a)
    return (a - z) / (1.0 - np.conj(a) * z)


def bergman_distance(a: complex, z) -> float:
    """beta(a, z) = (1/2) log((1+|phi_a(z)|)/(1-|phi_a(z)|)) = artanh|phi_a(z)|."""
    m = np.abs(mobius(a, z))
    return np.arctanh(m)


def disk_euclidean(z: complex, r: float) -> tuple[complex, float]:
    """Euclidean (center, radius) of the Bergman disk D(z, r).

    With s = tanh(r) this is the pseudohyperbolic disk |phi_z(w)| < s:
    center (1-s^2) z / (1 - s^2 |z|^2), radius s (1-|z|^2) / (1 - s^2 |z|^2).
    """
    if r <= 0:
        raise GeometryError("hyperbolic radius must be positive")
    z = check_disk_point(z)
    s = math.tanh(r)
    t2 = abs(z) ** 2
    denom = 1.0 - s * s * t2
    c = (1.0 - s * s) * z / denom
    rho = s * (1.0 - t2) / denom
    return c, rho


@dataclass(frozen=True)
class HyperbolicDisk:
    """Bergman disk D(center, radius); Euclidean data derived at construction."""

    center: complex
    radius: float
    euclidean_center: complex = field(init=False)
    euclidean_radius: float = field(init=False)

    def __post_init__(self):
        c, rho = disk_euclidean(self.center, self.radius)
        object.__setattr__(self, "euclidean_center", c)
        object.__setattr__(self, "euclidean_radius", rho)

    def contains(self, z) -> np.ndarray:
        """Non-strict membership (boundary counts as inside, atom convention)."""
        return np.abs(np.asarray(z) - self.euclidean_center) <= self.euclidean_radius

    @property
    def radial_span(self) -> tuple[float, float]:
        t = abs(self.euclidean_center)
        return max(0.0, t - self.euclidean_radius), min(1.0, t + self.euclidean_radius)


@dataclass(frozen=True)
class CarlesonSquare:
    """S_z = { re^{i theta} : |z| <= r < 1, |theta - arg z| < (1-|z|)/(2 pi) }.

    S_0 is the whole disk: arg 0 is undefined and the angular width tends to
    the full circle as |z| -> 0 anyway.
    """

    vertex: complex

    def __post_init__(self):
        check_disk_point(self.vertex, "vertex")

    @property
    def is_whole_disk(self) -> bool:
        return self.vertex == 0

    @property
    def half_width(self) -> float:
        return (1.0 - abs(self.vertex)) / (2.0 * np.pi)

    def contains(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if self.is_whole_disk:
            return np.abs(z) < 1.0
        radial = (np.abs(z) >= abs(self.vertex)) & (np.abs(z) < 1.0)
        dtheta = np.angle(z * np.exp(-1j * np.angle(self.vertex)))
        return radial & (np.abs(dtheta) <= self.half_width)


def carleson_square(z: complex) -> CarlesonSquare:
    return CarlesonSquare(vertex=complex(z))


class WholeDisk:
    """Sentinel region for integrals over the full disk."""

    def contains(self, z) -> np.ndarray:
        return np.abs(np.asarray(z)) < 1.0


WHOLE_DISK = WholeDisk()


def _ring_point_count(s: float, ring_beta: float) -> int:
    """Largest n with pairwise hyperbolic chord >= s between adjacent ring points.

    Chord formula in the curvature -1 model (distances doubled relative to
    beta): cosh d2 = 1 + sinh^2(2R) (1 - cos dtheta) with d2 = 2 beta.
    """
    sh2 = math.sinh(2.0 * ring_beta) ** 2
    one_minus_cos = (math.cosh(2.0 * s) - 1.0) / sh2
    if one_minus_cos >= 2.0:
        return 1
    dtheta_min = math.acos(1.0 - one_minus_cos)
    return max(1, int(math.floor(2.0 * math.pi / dtheta_min)))


@dataclass(frozen=True)
class Lattice:
    points: np.ndarray
    ring_index: np.ndarray
    separation: float
    covering_radius: float
    cutoff: float

    @property
    def size(self) -> int:
        return self.points.size


def generate_lattice(s: float, r: float, cutoff: float = 1e-3) -> Lattice:
    """Concentric-ring lattice: ring k at hyperbolic radius k*s, points spaced
    so adjacent same-ring chords are >= s.  Rings stop once the Euclidean ring
    radius would exceed 1 - cutoff.  Deterministic (angular offset golden-angle
    per ring)."""
    if not (0.0 < s <= r):
        raise GeometryError(f"need 0 < s <= r, got s={s}, r={r}")
    pts = [0.0 + 0.0j]
    rings = [0]
    k = 1
    while True:
        beta_k = k * s
        t_k = math.tanh(beta_k)
        if t_k > 1.0 - cutoff:
            break
        n_k = _ring_point_count(s, beta_k)
        offset = (k * GOLDEN_ANGLE) % (2.0 * math.pi)
        theta = offset + 2.0 * math.pi * np.arange(n_k) / n_k
        pts.append(t_k * np.exp(1j * theta))
        rings.extend([k] * n_k)
        k += 1
    points = np.concatenate([np.atleast_1d(np.asarray(p, dtype=complex)) for p in pts])
    return Lattice(points=points, ring_index=np.asarray(rings, dtype=int),
                   separation=s, covering_radius=r, cutoff=cutoff)


def pairwise_min_beta(points: np.ndarray, block: int = 512) -> float:
    """Minimum pairwise Bergman distance, blocked to bound memory."""
    n = points.size
    if n < 2:
        return math.inf
    best = math.inf
    for i0 in range(0, n, block):
        a = points[i0:i0 + block]
        for j0 in range(i0, n, block):
            b = points[j0:j0 + block]
            num = np.abs(a[:, None] - b[None, :])
            den = np.abs(1.0 - np.conj(a)[:, None] * b[None, :])
            m = num / den
            if j0 == i0:
                np.fill_diagonal(m, 1.0)
            best = min(best, float(np.min(m)))
    return math.atanh(best) if best < 1.0 else math.inf


def probe_points(n: int, beta_max: float) -> np.ndarray:
    """Deterministic quasi-uniform (in hyperbolic area) probes up to beta_max.

    Hyperbolic area of a beta-ball grows like sinh^2, so radii are placed by
    inverting that area law; angles follow the golden-angle spiral.
    """
    u = (np.arange(n) + 0.5) / n
    radii = np.arcsinh(np.sqrt(u) * math.sinh(beta_max))
    theta = np.arange(n) * GOLDEN_ANGLE
    return np.tanh(radii) * np.exp(1j * theta)


@dataclass(frozen=True)
class LatticeReport:
    min_pairwise_beta: float
    max_probe_distance: float
    n_probes: int
    separation_ok: bool
    covering_ok: bool
    max_disk_overlap: int


def verify_lattice(lat: Lattice, n_probes: int = 10_000,
                   overlap_radius: float | None = None,
                   beta_slack: float = 1e-9,
                   cover_slack: float = 1e-6) -> LatticeReport:
    """Exhaustive separation check plus covering check on quasi-uniform probes.

    Failures are reported, not raised.  ``max_disk_overlap`` counts, for
    R = overlap_radius (default covering radius), the largest number of other
    lattice points within 2R of any lattice point: the finite-overlap constant
    of the disks D(a_j, R).
    """
    min_beta = pairwise_min_beta(lat.points)
    beta_cut = math.atanh(1.0 - lat.cutoff)
    probes = probe_points(n_probes, beta_cut)
    max_probe = 0.0
    for i0 in range(0, n_probes, 1024):
        p = probes[i0:i0 + 1024]
        num = np.abs(p[:, None] - lat.points[None, :])
        den = np.abs(1.0 - np.conj(p)[:, None] * lat.points[None, :])
        nearest = np.min(num / den, axis=1)
        max_probe = max(max_probe, float(np.max(np.arctanh(nearest))))
    R = lat.covering_radius if overlap_radius is None else overlap_radius
    thr = math.tanh(2.0 * R)
    overlap = 0
    for i0 in range(0, lat.size, 512):
        a = lat.points[i0:i0 + 512]
        num = np.abs(a[:, None] - lat.points[None, :])
        den = np.abs(1.0 - np.conj(a)[:, None] * lat.points[None, :])
        cnt = np.sum(num / den < thr, axis=1) - 1
        overlap = max(overlap, int(np.max(cnt)))
    return LatticeReport(
        min_pairwise_beta=min_beta,
        max_probe_distance=max_probe,
        n_probes=n_probes,
        separation_ok=bool(min_beta >= lat.separation - beta_slack),
        covering_ok=bool(lat.size > 0
                         and max_probe <= lat.covering_radius + cover_slack),
        max_disk_overlap=overlap,
    )


def greedy_lattice(s: float, cutoff: float = 1e-2, n_candidates: int = 20_000,
                   seed: int = 0) -> Lattice:
    """Greedy s-separated subset of quasi-uniform candidates.

    Verification-time alternative to the ring construction; covering radius of
    the result is whatever the probes report, recorded as s for bookkeeping.
    """
    rng = np.random.default_rng(seed)
    beta_cut = math.atanh(1.0 - cutoff)
    cand = probe_points(n_candidates, beta_cut)
    cand = cand[rng.permutation(n_candidates)]
    kept: list[complex] = [0.0 + 0.0j]
    thr = math.tanh(s)
    arr = np.asarray(kept)
    for z in cand:
        d = np.abs(arr - z) / np.abs(1.0 - np.conj(arr) * z)
        if np.all(d >= thr):
            kept.append(complex(z))
            arr = np.asarray(kept)
    return Lattice(points=np.asarray(kept), ring_index=np.zeros(len(kept), dtype=int),
                   separation=s, covering_radius=s, cutoff=cutoff)
