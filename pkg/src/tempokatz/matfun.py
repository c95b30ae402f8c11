"""Analytic weight functions given by Maclaurin coefficients, the shift
operator on them, and their application to vectors through a matrix argument.

A weight function f(z) = sum_r c_r z^r with c_r >= 0 turns walk counts into
centrality scores.  The shift operator maps f to sum_r c_{r+1} z^r, which
compensates for edge-space walks being one step shorter than the node-space
walks they represent.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

DEFAULT_TOL = 1e-12
DEFAULT_RMAX = 10_000


@dataclass(frozen=True)
class CoefficientFunction:
    """Analytic function with nonnegative Maclaurin coefficients.

    ``coeff(r)`` returns c_r; ``radius`` is the radius of convergence.
    ``degree`` is set for polynomials (c_r = 0 beyond it).  ``geometric``
    holds (gamma, delta) when c_r = gamma * delta**r, which unlocks the
    linear-solve fast path.
    """

    coeff: Callable[[int], float]
    radius: float
    name: str
    degree: Optional[int] = None
    geometric: Optional[tuple[float, float]] = None

    def __call__(self, r):
        if self.degree is not None and r > self.degree:
            return 0.0
        c = self.coeff(r)
        if c < 0:
            raise ValueError(f"negative coefficient c_{r} = {c} in {self.name}")
        return c


def resolvent(gamma=1.0, delta=1.0):
    """f(z) = gamma / (1 - delta z); c_r = gamma * delta**r."""
    if gamma < 0 or delta < 0:
        raise ValueError("gamma and delta must be nonnegative")
    radius = math.inf if delta == 0.0 else 1.0 / delta
    return CoefficientFunction(
        coeff=lambda r: gamma * delta**r,
        radius=radius,
        name=f"resolvent(gamma={gamma}, delta={delta})",
        geometric=(gamma, delta),
    )


def exponential():
    """f(z) = e^z; c_r = 1/r!."""
    # 1/r! underflows below the double range for r > 170
    return CoefficientFunction(
        coeff=lambda r: 1.0 / math.factorial(r) if r <= 170 else 0.0,
        radius=math.inf,
        name="exponential",
    )


def polynomial(coeffs, name=None):
    """Finite coefficient list, c_r = coeffs[r] (zero beyond the list)."""
    coeffs = tuple(float(c) for c in coeffs)
    if any(c < 0 for c in coeffs):
        raise ValueError("coefficients must be nonnegative")
    return CoefficientFunction(
        coeff=lambda r: coeffs[r] if r < len(coeffs) else 0.0,
        radius=math.inf,
        name=name or f"polynomial(degree={len(coeffs) - 1})",
        degree=max(len(coeffs) - 1, 0),
    )


def monomial(r, c=1.0):
    """c * z^r, used to extract single walk-length contributions."""
    return polynomial([0.0] * r + [c], name=f"monomial(r={r})")


def from_coefficient_file(path):
    """Read one nonnegative coefficient per line (line r holds c_r)."""
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno + 1}: not a number: {line!r}"
                ) from None
    if not values:
        raise ValueError(f"{path}: no coefficients")
    return polynomial(values, name=f"coeffs:{path}")


def partial_op(f):
    """Shift the coefficient sequence: returns r -> c_{r+1}, same radius."""
    geometric = None
    if f.geometric is not None:
        gamma, delta = f.geometric
        geometric = (gamma * delta, delta)
    degree = None
    if f.degree is not None:
        degree = max(f.degree - 1, 0)
    return CoefficientFunction(
        coeff=lambda r: f(r + 1),
        radius=f.radius,
        name=f"shift({f.name})",
        degree=degree,
        geometric=geometric,
    )


def evaluate(f, z, tol=DEFAULT_TOL, rmax=DEFAULT_RMAX):
    """Scalar truncated-series evaluation of f at z."""
    acc = 0.0
    power = 1.0
    rstop = rmax if f.degree is None else min(rmax, f.degree)
    for r in range(rstop + 1):
        c = f(r)
        term = c * power
        acc += term
        if c > 0 and abs(term) <= tol * max(abs(acc), 1e-300) and r > 0:
            break
        power *= z
    return acc


class SeriesResult(NamedTuple):
    value: np.ndarray
    truncated: bool
    terms: int


def apply_series(M, alpha, g, v, tol=DEFAULT_TOL, rmax=DEFAULT_RMAX):
    """Evaluate sum_r g_r alpha^r M^r v by accumulating sparse mat-vecs.

    Stops when the new term's max-norm drops below tol times the accumulated
    sum's max-norm, exactly when M annihilates the power vector (nilpotent
    case), or after rmax terms (flagged as truncated).  The caller is
    responsible for alpha being inside radius(g) / rho(M).
    """
    v = np.asarray(v, dtype=float).ravel()
    if M.shape[0] != M.shape[1] or M.shape[0] != v.shape[0]:
        raise ValueError(
            f"dimension mismatch: M is {M.shape}, v has length {v.shape[0]}"
        )
    power = v.copy()
    acc = g(0) * power
    rstop = rmax if g.degree is None else min(rmax, g.degree)
    terms = 1
    for r in range(1, rstop + 1):
        power = alpha * (M @ power)
        terms += 1
        if not power.any():
            return SeriesResult(acc, False, terms)
        c = g(r)
        if c != 0.0:
            acc = acc + c * power
            term_norm = c * np.max(np.abs(power))
            if term_norm <= tol * max(np.max(np.abs(acc)), 1e-300):
                return SeriesResult(acc, False, terms)
    if g.degree is not None and rstop == g.degree:
        return SeriesResult(acc, False, terms)
    return SeriesResult(acc, True, terms)


class SolveError(RuntimeError):
    """Linear system could not be solved to the residual tolerance."""


def resolvent_solve(M, alpha, v, tol=DEFAULT_TOL):
    """Solve (I - alpha M) x = v with a sparse direct factorization.

    The residual contract ||(I - alpha M) x - v||_inf <= tol * ||v||_inf is
    checked; requires alpha * rho(M) < 1 for the result to mean a walk series.
    """
    v = np.asarray(v, dtype=float).ravel()
    if M.shape[0] != M.shape[1] or M.shape[0] != v.shape[0]:
        raise ValueError(
            f"dimension mismatch: M is {M.shape}, v has length {v.shape[0]}"
        )
    if alpha == 0.0:
        return v.copy()
    A = sp.csc_array(sp.eye_array(M.shape[0], format="csc") - alpha * M)
    with warnings.catch_warnings():
        # a singular system surfaces through the residual check below
        warnings.simplefilter("ignore", spla.MatrixRankWarning)
        x = spla.spsolve(A, v)
    x = np.asarray(x).ravel()
    resid = np.max(np.abs(A @ x - v))
    vnorm = np.max(np.abs(v)) if v.size else 0.0
    if not np.isfinite(resid) or resid > tol * max(vnorm, 1e-300):
        raise SolveError(
            f"residual {resid:.3e} exceeds {tol:.1e} * ||v|| (system near singular?)"
        )
    return x
