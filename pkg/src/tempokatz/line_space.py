"""Edge-space machinery: source/target matrices, line-graph and Hashimoto
matrices, cross-time transition blocks, and the global transition matrix.

Edges are ordered globally by snapshot, then lexicographically by
(source, target) within a snapshot.  The global transition matrix M is the
m x m block upper-triangular matrix whose diagonal blocks encode length-2
walks within a snapshot and whose off-diagonal blocks encode length-2 walks
across (not necessarily consecutive) snapshots.  The four modes select which
blocks admit immediately-reversed edge pairs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla


class Mode(enum.Enum):
    """Which immediately-reversed edge pairs are forbidden.

    STANDARD allows all length-2 transitions.  NBT_SPACE forbids reversals
    within a snapshot, NBT_TIME forbids reversals across snapshots, NBT_BOTH
    forbids both.
    """

    STANDARD = "standard"
    NBT_SPACE = "nbt-space"
    NBT_TIME = "nbt-time"
    NBT_BOTH = "nbt-both"


#: modes whose diagonal blocks forbid within-snapshot reversals
_NBT_DIAGONAL = (Mode.NBT_SPACE, Mode.NBT_BOTH)
#: modes whose off-diagonal blocks forbid across-snapshot reversals
_NBT_OFFDIAG = (Mode.NBT_TIME, Mode.NBT_BOTH)


@dataclass(frozen=True)
class EdgeSpaceIndex:
    """Global ordering of all m time-stamped edges.

    ``entries[g] = (tau, source, target)`` for global edge id g; ``offsets``
    has length N+1 with the start index of each snapshot's edge block.
    """

    entries: tuple[tuple[int, int, int], ...]
    offsets: tuple[int, ...]

    @property
    def m(self):
        return len(self.entries)

    def globalize(self, tau, local):
        """Global edge id of the ``local``-th edge of snapshot ``tau``."""
        return self.offsets[tau - 1] + local

    def snapshot_slice(self, tau):
        return slice(self.offsets[tau - 1], self.offsets[tau])


@lru_cache(maxsize=None)
def edge_space_index(net):
    entries = []
    offsets = [0]
    for snap in net.snapshots:
        entries.extend((snap.tau, u, v) for u, v in snap.edges)
        offsets.append(len(entries))
    return EdgeSpaceIndex(entries=tuple(entries), offsets=tuple(offsets))


@lru_cache(maxsize=None)
def source_target_matrices(snapshot, n):
    """Source and target incidence matrices L, R (m_tau x n, one 1 per row)."""
    m = snapshot.m
    rows = np.arange(m)
    src = np.array([u for u, _ in snapshot.edges], dtype=int)
    tgt = np.array([v for _, v in snapshot.edges], dtype=int)
    ones = np.ones(m)
    L = sp.csr_array((ones, (rows, src)), shape=(m, n))
    R = sp.csr_array((ones, (rows, tgt)), shape=(m, n))
    return L, R


@lru_cache(maxsize=None)
def line_graph_matrix(snapshot, n):
    """Adjacency matrix W = R L^T of the snapshot's line graph."""
    L, R = source_target_matrices(snapshot, n)
    W = sp.csr_array(R @ L.T)
    W.eliminate_zeros()
    return W


@lru_cache(maxsize=None)
def hashimoto_matrix(snapshot, n):
    """Hashimoto matrix B = W - W o W^T (reversed pairs knocked out)."""
    W = line_graph_matrix(snapshot, n)
    B = sp.csr_array(W - W.multiply(W.T))
    B.eliminate_zeros()
    return B


def _check_tau_pair(net, tau1, tau2):
    if not 1 <= tau1 < tau2 <= net.N:
        raise ValueError(f"need 1 <= tau1 < tau2 <= N, got ({tau1}, {tau2})")


@lru_cache(maxsize=None)
def cross_transition(net, tau1, tau2):
    """Cross-snapshot transition block W^[tau1,tau2] = R^[tau1] (L^[tau2])^T."""
    _check_tau_pair(net, tau1, tau2)
    _, R1 = source_target_matrices(net.snapshot(tau1), net.n)
    L2, _ = source_target_matrices(net.snapshot(tau2), net.n)
    W12 = sp.csr_array(R1 @ L2.T)
    W12.eliminate_zeros()
    return W12


@lru_cache(maxsize=None)
def cross_hashimoto(net, tau1, tau2):
    """Cross-snapshot block with reversed pairs removed,
    B^[tau1,tau2] = W^[tau1,tau2] - W^[tau1,tau2] o (W^[tau2,tau1])^T."""
    _check_tau_pair(net, tau1, tau2)
    n = net.n
    L1, R1 = source_target_matrices(net.snapshot(tau1), n)
    L2, R2 = source_target_matrices(net.snapshot(tau2), n)
    W12 = sp.csr_array(R1 @ L2.T)
    W21 = sp.csr_array(R2 @ L1.T)
    B12 = sp.csr_array(W12 - W12.multiply(W21.T))
    B12.eliminate_zeros()
    return B12


@lru_cache(maxsize=None)
def global_source_target(net):
    """Vertical stacks of the per-snapshot L and R matrices (m x n)."""
    Ls, Rs = [], []
    for snap in net.snapshots:
        L, R = source_target_matrices(snap, net.n)
        Ls.append(L)
        Rs.append(R)
    return sp.csr_array(sp.vstack(Ls)), sp.csr_array(sp.vstack(Rs))


def _diagonal_block(net, tau, mode):
    snap = net.snapshot(tau)
    if mode in _NBT_DIAGONAL:
        return hashimoto_matrix(snap, net.n)
    return line_graph_matrix(snap, net.n)


def _offdiagonal_block(net, tau1, tau2, mode):
    if mode in _NBT_OFFDIAG:
        return cross_hashimoto(net, tau1, tau2)
    return cross_transition(net, tau1, tau2)


@lru_cache(maxsize=None)
def global_transition(net, mode):
    """Assemble the m x m block upper-triangular global transition matrix."""
    N = net.N
    blocks = [[None] * N for _ in range(N)]
    for t1 in range(1, N + 1):
        blocks[t1 - 1][t1 - 1] = _diagonal_block(net, t1, mode)
        for t2 in range(t1 + 1, N + 1):
            blocks[t1 - 1][t2 - 1] = _offdiagonal_block(net, t1, t2, mode)
    M = sp.csr_array(sp.bmat(blocks, format="csr"))
    M.eliminate_zeros()
    return M


def global_transition_operator(net, mode):
    """The same matrix as :func:`global_transition`, as a matrix-free
    LinearOperator applying the blocks one at a time."""
    index = edge_space_index(net)
    m = index.m
    N = net.N
    slices = [index.snapshot_slice(t) for t in range(1, N + 1)]

    def matvec(v):
        v = np.asarray(v).reshape(m)
        out = np.zeros(m)
        for t1 in range(1, N + 1):
            acc = _diagonal_block(net, t1, mode) @ v[slices[t1 - 1]]
            for t2 in range(t1 + 1, N + 1):
                acc = acc + _offdiagonal_block(net, t1, t2, mode) @ v[slices[t2 - 1]]
            out[slices[t1 - 1]] = acc
        return out

    return spla.LinearOperator((m, m), matvec=matvec, dtype=float)


def dump_coordinate(matrix, stream):
    """Write a sparse matrix in text coordinate format:
    `nrows ncols nnz` header, then one `row col value` line per nonzero."""
    coo = sp.coo_array(matrix)
    stream.write(f"{coo.shape[0]} {coo.shape[1]} {coo.nnz}\n")
    order = np.lexsort((coo.col, coo.row))
    for r, c, v in zip(coo.row[order], coo.col[order], coo.data[order]):
        stream.write(f"{r} {c} {v:.17g}\n")
