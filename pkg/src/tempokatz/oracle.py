"""Ground-truth brute-force enumeration of temporal walks, the weighted walk
sum, and the scalar functional-equation checker for product-form centralities.

Everything here is for tests and validation: exact integer walk counts by
depth-first enumeration, weights applied afterwards, and the scalar identity
that characterizes when a product of per-snapshot matrix functions can
reproduce length-consistent walk weights (only the resolvent family can).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.linalg

from .line_space import Mode
from .matfun import evaluate
from .temporal_graph import adjacency_matrix

GUARD_DEFAULT = 10**8


class EnumerationGuardError(RuntimeError):
    """Estimated walk count too large for exhaustive enumeration."""


@dataclass
class WalkCountTensor:
    """Exact walk counts per (start, end, length), in integer arithmetic."""

    n: int
    max_len: int
    mode: Mode
    counts: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def count(self, i, j, r):
        if r == 0:
            return 1 if i == j else 0
        return self.counts.get((i, j, r), 0)

    def matrix(self, r):
        """Dense n x n matrix of length-r walk counts (Python-int objects)."""
        out = np.zeros((self.n, self.n), dtype=object)
        for i in range(self.n):
            out[i, i] = 0
        if r == 0:
            for i in range(self.n):
                out[i, i] = 1
            return out
        for (i, j, rr), c in self.counts.items():
            if rr == r:
                out[i, j] += c
        return out


def _edges_by_source(net):
    """All time-stamped edges grouped by source node: node -> [(tau, u, v)]."""
    table = {i: [] for i in range(net.n)}
    for snap in net.snapshots:
        for u, v in snap.edges:
            table[u].append((snap.tau, u, v))
    return table


def _admissible(last, nxt, mode):
    """May edge ``nxt`` follow edge ``last`` in a temporal walk of this mode?"""
    t1, u1, v1 = last
    t2, u2, v2 = nxt
    if t2 < t1 or u2 != v1:
        return False
    if v2 == u1:  # immediately reversed pair
        if t2 == t1 and mode in (Mode.NBT_SPACE, Mode.NBT_BOTH):
            return False
        if t2 > t1 and mode in (Mode.NBT_TIME, Mode.NBT_BOTH):
            return False
    return True


def enumerate_temporal_walks(net, max_len, mode, guard=GUARD_DEFAULT):
    """Exhaustively count temporal walks of length 1..max_len for every
    (start, end) pair.

    Depth-first recursion memoized on (last edge, remaining length): the last
    traversed edge is exactly the state that decides which continuations
    backtrack.  Raises :class:`EnumerationGuardError` when the crude estimate
    n * max_outdegree**max_len exceeds ``guard``.
    """
    by_source = _edges_by_source(net)
    max_deg = max((len(v) for v in by_source.values()), default=0)
    estimate = net.n * max(max_deg, 1) ** max_len
    if estimate > guard:
        raise EnumerationGuardError(
            f"estimated walk count {estimate:.3g} exceeds guard {guard:.3g}"
        )
    tensor = WalkCountTensor(n=net.n, max_len=max_len, mode=mode)

    @lru_cache(maxsize=None)
    def extensions(last, remaining):
        """end node -> number of admissible continuations of exactly
        ``remaining`` further edges after traversing ``last``."""
        if remaining == 0:
            return ((last[2], 1),)
        totals: dict[int, int] = {}
        for nxt in by_source[last[2]]:
            if not _admissible(last, nxt, mode):
                continue
            for end, c in extensions(nxt, remaining - 1):
                totals[end] = totals.get(end, 0) + c
        return tuple(sorted(totals.items()))

    for start in range(net.n):
        for first in by_source[start]:
            for r in range(1, max_len + 1):
                for end, c in extensions(first, r - 1):
                    key = (start, end, r)
                    tensor.counts[key] = tensor.counts.get(key, 0) + c
    return tensor


def weighted_walk_sum(counts, f, alpha):
    """Dense n x n matrix with entry (i, j) = sum_r c_r alpha^r counts(i,j,r),
    truncated at the tensor's max_len.  Oracle for the communicability matrix."""
    n = counts.n
    out = f(0) * np.eye(n)
    for r in range(1, counts.max_len + 1):
        c = f(r)
        if c == 0.0:
            continue
        out += c * alpha**r * counts.matrix(r).astype(float)
    return out


def naive_exponential_product(net, beta):
    """prod_tau expm(beta A^[tau]), the length-inconsistent construction kept
    only to demonstrate how it misweights multi-snapshot walks."""
    out = np.eye(net.n)
    for tau in range(1, net.N + 1):
        out = out @ scipy.linalg.expm(beta * adjacency_matrix(net, tau).todense())
    return np.asarray(out)


def homogeneous_symmetric(r, xs):
    """Complete homogeneous symmetric polynomial h_r(x_1, ..., x_N) by dynamic
    programming over one variable at a time."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if not xs:
        raise ValueError("xs must be non-empty")
    h = [1.0] + [0.0] * r
    for x in xs:
        for j in range(1, r + 1):
            h[j] += x * h[j - 1]
    return h[r]


def functional_equation_residual(f, g, N, alpha, xs, rmax=200):
    """Residual of sum_r c_r alpha^r h_r(xs) = prod_i g(alpha x_i).

    Zero (to truncation error) exactly when the weight function admits a
    combinatorially correct product form over N >= 2 snapshots; positive
    otherwise.  xs is padded with zeros (or truncated) to length N.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    xs = list(xs)[:N] + [0.0] * max(0, N - len(xs))
    lhs = sum(f(r) * alpha**r * homogeneous_symmetric(r, xs) for r in range(rmax + 1))
    rhs = 1.0
    for x in xs:
        rhs *= evaluate(g, alpha * x, rmax=rmax)
    return abs(lhs - rhs)
