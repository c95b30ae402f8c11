"""Spectral radii and the admissible parameter interval (0, ell) per mode.

For the standard and NBT-in-time modes, the centrality series converge for
alpha below 1 / max_tau rho(A^[tau]).  For the modes that forbid
within-snapshot backtracking they converge for alpha below
min_tau 1 / rho(B^[tau]), which equals the smallest-modulus eigenvalue of a
cubic matrix polynomial in the adjacency matrix (checked in the test suite).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.sparse as sp

from .line_space import Mode, hashimoto_matrix
from .temporal_graph import adjacency_matrix

DEFAULT_TOL = 1e-10
DEFAULT_MAXIT = 10_000


class RadiusEstimate(NamedTuple):
    value: float
    converged: bool
    iterations: int


@dataclass(frozen=True)
class AlphaBound:
    """Supremum ``ell`` of admissible alpha, with per-snapshot radii.

    ``per_snapshot[tau-1] = (rho_tau, lambda_tau)`` where rho_tau is the
    adjacency spectral radius and lambda_tau = 1 / rho(B^[tau]).
    """

    ell: float
    per_snapshot: tuple[tuple[float, float], ...]
    mode: Mode
    converged: bool = True


#: up to this dimension the radius is computed by dense eigenvalues outright;
#: power iteration on nonnormal matrices can satisfy a Rayleigh-increment
#: stopping rule while still being ~1e-7 away from the true radius
DENSE_DIRECT_MAX = 512

#: above this dimension the dense fallback for stalled iterations is skipped
DENSE_FALLBACK_MAX = 4096

#: consecutive stable Rayleigh quotients required before declaring convergence;
#: guards against transient stagnation on nonnormal (e.g. nilpotent) matrices
_STABLE_WINDOW = 12


def spectral_radius(m, tol=DEFAULT_TOL, maxit=DEFAULT_MAXIT):
    """Dominant eigenvalue modulus of a (nonnegative) sparse matrix.

    Matrices up to DENSE_DIRECT_MAX are handled by a dense eigenvalue
    computation, which is exact to machine precision and cheap at that size.
    Larger ones use power iteration from the all-ones vector, deterministically perturbed if
    the iteration stalls on a nonzero matrix.  Convergence requires the
    relative change of the Rayleigh quotient to stay below ``tol`` for a run
    of consecutive iterations.  If power iteration runs out of iterations
    (periodic or defective dominant part) a deterministic dense eigenvalue
    computation is used for matrices up to DENSE_FALLBACK_MAX; beyond that a
    non-converged result carrying the last iterate is returned.
    """
    if m.shape[0] != m.shape[1]:
        raise ValueError("spectral_radius needs a square matrix")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = m.shape[0]
    if n == 0 or _nnz(m) == 0:
        return RadiusEstimate(0.0, True, 0)
    if n <= DENSE_DIRECT_MAX:
        dense = np.asarray(m.todense())
        value = float(np.max(np.abs(np.linalg.eigvals(dense))))
        # tiny moduli on a nilpotent matrix are eigensolver noise
        if value <= 1e-12 * max(1.0, float(np.abs(dense).sum())):
            value = 0.0
        return RadiusEstimate(value, True, 0)
    v = np.ones(n) / math.sqrt(n)
    lam = 0.0
    lam_old = np.inf
    stable = 0
    perturbed = False
    for it in range(1, maxit + 1):
        w = m @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            if not perturbed:
                # all-ones landed in the kernel; restart from a fixed ramp
                v = np.arange(1, n + 1, dtype=float)
                v /= np.linalg.norm(v)
                perturbed = True
                lam_old = np.inf
                stable = 0
                continue
            # nilpotent action: dominant eigenvalue is zero
            return RadiusEstimate(0.0, True, it)
        lam = float(v @ w)
        v = w / norm
        if abs(lam - lam_old) <= tol * max(abs(lam), 1e-300):
            stable += 1
            if stable >= _STABLE_WINDOW:
                return RadiusEstimate(abs(lam), True, it)
        else:
            stable = 0
        lam_old = lam
    if n <= DENSE_FALLBACK_MAX:
        eigs = np.linalg.eigvals(np.asarray(m.todense()))
        return RadiusEstimate(float(np.max(np.abs(eigs))), True, maxit)
    return RadiusEstimate(abs(lam), False, maxit)


def _nnz(m):
    return sp.coo_array(m).nnz


def deg_matrices(a):
    """Reciprocity matrices of an adjacency matrix.

    D is diagonal with D_ii = (A^2)_ii, the number of reciprocated partners
    of node i; S = A o A^T marks mutually connected pairs.
    """
    a = sp.csr_array(a)
    d = np.asarray((a @ a).diagonal()).ravel()
    D = sp.csr_array(sp.diags_array(d, shape=a.shape))
    S = sp.csr_array(a.multiply(a.T))
    S.eliminate_zeros()
    return D, S


def nbt_radius(snapshot, n, tol=DEFAULT_TOL, maxit=DEFAULT_MAXIT):
    """lambda_tau = 1 / rho(B^[tau]); +inf when the Hashimoto matrix is nilpotent."""
    B = hashimoto_matrix(snapshot, n)
    est = spectral_radius(B, tol=tol, maxit=maxit)
    if not est.converged:
        raise NonConvergenceError(est)
    if est.value == 0.0:
        return math.inf
    return 1.0 / est.value


class NonConvergenceError(RuntimeError):
    """Power iteration ran out of iterations; carries the last estimate."""

    def __init__(self, estimate):
        super().__init__(
            f"power iteration did not converge in {estimate.iterations} iterations "
            f"(last value {estimate.value})"
        )
        self.estimate = estimate


def alpha_bound(net, mode, tol=DEFAULT_TOL, maxit=DEFAULT_MAXIT):
    """Admissible interval supremum ell for the given mode.

    Standard / NBT-in-time: ell = (max_tau rho(A^[tau]))^-1.
    NBT-in-space / NBT-both: ell = min_tau 1 / rho(B^[tau]).
    An all-empty network gives ell = +inf.
    """
    per = []
    converged = True
    for tau in range(1, net.N + 1):
        snap = net.snapshot(tau)
        est_a = spectral_radius(adjacency_matrix(net, tau), tol=tol, maxit=maxit)
        est_b = spectral_radius(hashimoto_matrix(snap, net.n), tol=tol, maxit=maxit)
        converged = converged and est_a.converged and est_b.converged
        lam = math.inf if est_b.value == 0.0 else 1.0 / est_b.value
        per.append((est_a.value, lam))
    if mode in (Mode.STANDARD, Mode.NBT_TIME):
        rho = max(r for r, _ in per)
        ell = math.inf if rho == 0.0 else 1.0 / rho
    else:
        ell = min(lam for _, lam in per)
    return AlphaBound(ell=ell, per_snapshot=tuple(per), mode=mode, converged=converged)
