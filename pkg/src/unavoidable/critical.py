"""Critical determinant of a symmetric convex polygon.

For a 0-symmetric planar convex body every lattice spanned by ``u, v`` with
``u``, ``v`` and ``u + v`` on the boundary is admissible, and the critical
lattices are among them.  We therefore minimize ``det(u, v(u))`` over ``u`` on
half of the boundary in floating point, then rationalize the winning basis
and rescale it so that its shortest nonzero vector has gauge exactly 1, which
makes admissibility an exact fact rather than a numerical one.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import NotSymmetric, ToleranceNotReached
from .geometry import ConvexPolygon
from .lattice import Lattice2, shortest_vector

_BISECTION_STEPS = 64


class _Boundary:
    def __init__(self, ball: ConvexPolygon):
        self.V = np.array([[float(x), float(y)] for x, y in ball.vertices])
        self.E = np.roll(self.V, -1, axis=0) - self.V
        self.W = np.array([[float(a), float(b)] for a, b in ball.edge_covectors])
        self.m = len(self.V)

    def at(self, s):
        s = np.mod(s, self.m)
        i = np.floor(s).astype(int) % self.m
        t = s - np.floor(s)
        return self.V[i] + t[..., None] * self.E[i]

    def gauge(self, x):
        return np.maximum((x @ self.W.T).max(axis=-1), 0.0)

    def partner(self, s):
        """For ``u = at(s)``, the boundary point ``v`` with ``u + v`` on the boundary
        and ``det(u, v) > 0``."""
        s = np.atleast_1d(np.asarray(s, dtype=float))
        u = self.at(s)
        lo = s.copy()
        hi = s + self.m / 2
        for _ in range(_BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            above = self.gauge(u + self.at(mid)) > 1.0
            lo = np.where(above, mid, lo)
            hi = np.where(above, hi, mid)
        v = self.at(0.5 * (lo + hi))
        return u, v

    def det(self, s):
        u, v = self.partner(s)
        return u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]


def _minimize(boundary: _Boundary, samples: int, candidates: int = 8, zoom_steps: int = 12):
    """Global grid search followed by a vectorized zoom around the best local minima."""
    half = boundary.m / 2
    grid = np.linspace(0.0, half, samples, endpoint=False)
    values = boundary.det(grid)
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    minima = np.flatnonzero((values <= left) & (values <= right))
    centers = grid[minima[np.argsort(values[minima])][:candidates]]
    width = half / samples
    offsets = np.linspace(-1.0, 1.0, 33)
    for _ in range(zoom_steps):
        pts = (centers[:, None] + width * offsets[None, :]).ravel()
        vals = boundary.det(pts).reshape(len(centers), -1)
        centers = pts.reshape(len(centers), -1)[np.arange(len(centers)), vals.argmin(axis=1)]
        width /= 8
    vals = boundary.det(centers)
    k = int(vals.argmin())
    return float(centers[k]), float(vals[k])


def _exact_admissible(ball: ConvexPolygon, u, v, max_den: int) -> Lattice2:
    uq = (Fraction(float(u[0])).limit_denominator(max_den), Fraction(float(u[1])).limit_denominator(max_den))
    vq = (Fraction(float(v[0])).limit_denominator(max_den), Fraction(float(v[1])).limit_denominator(max_den))
    L = Lattice2(uq, vq)
    _, shortest = shortest_vector(ball, L)
    # After rescaling, the least gauge over nonzero lattice points is exactly
    # 1, so no lattice point other than 0 is interior.
    return L.scaled(1 / shortest)


def critical_lattice_symmetric(ball: ConvexPolygon, tol: float = 1e-6):
    """Return ``(lattice, delta)``: an exactly admissible lattice of ``ball``
    whose determinant ``delta`` is within ``tol`` of the critical determinant."""
    if not ball.is_symmetric:
        raise NotSymmetric("critical determinants are only computed for 0-symmetric bodies")
    boundary = _Boundary(ball)
    samples = max(2048, 128 * boundary.m)
    previous = None
    for _ in range(3):
        s, estimate = _minimize(boundary, samples)
        if previous is not None and abs(previous - estimate) > tol / 2:
            previous = estimate
            samples *= 4
            continue
        u, v = boundary.partner(s)
        for max_den in (10**2, 10**4, 10**6, 10**9, 10**12):
            L = _exact_admissible(ball, u[0], v[0], max_den)
            delta = float(L.det)
            if abs(delta - estimate) <= tol / 2:
                return L, delta
        previous = estimate
        samples *= 4
    raise ToleranceNotReached(f"could not certify the critical determinant to within {tol}")


def exact_admissible(ball: ConvexPolygon, L: Lattice2) -> bool:
    """True iff no nonzero point of ``L`` lies in the interior of ``ball``."""
    _, shortest = shortest_vector(ball, L)
    return shortest >= 1


__all__ = ["critical_lattice_symmetric", "exact_admissible"]

