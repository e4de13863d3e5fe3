"""Symplectic linear algebra: the standard form, Lagrangian subspaces,
transversality and the positivity predicate on Lagrangian triples.

Conventions: the standard form is J = [[0, Id_n], [-Id_n, 0]]; L0s is the
span of e_1..e_n, L0u the span of e_{n+1}..e_{2n}.  A Lagrangian is stored
as a 2n x n frame with orthonormal columns.
"""
from __future__ import annotations

import numpy as np

from .errors import InvalidInput, TransversalityError, InvarianceError

SYMPLECTIC_TOL = 1e-9
TRANSVERSE_TOL = 1e-8
POSDEF_TOL = 1e-8
GRAPH_ASYM_TOL = 1e-6
FRAME_TOL = 1e-8


def standard_form(n):
    """The 2n x 2n matrix of the standard symplectic form."""
    if n < 1:
        raise InvalidInput("half-dimension must be >= 1, got %r" % (n,))
    J = np.zeros((2 * n, 2 * n))
    J[:n, n:] = np.eye(n)
    J[n:, :n] = -np.eye(n)
    return J


def is_symplectic(M, tol=SYMPLECTIC_TOL):
    """True iff M^T J M = J, with tolerance relative to the matrix norm."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] % 2:
        raise InvalidInput("expected an even-dimensional square matrix, got shape %r" % (M.shape,))
    n = M.shape[0] // 2
    J = standard_form(n)
    scale = max(1.0, float(np.max(np.abs(M))) ** 2)
    return float(np.max(np.abs(M.T @ J @ M - J))) <= tol * scale


class Lagrangian:
    """An n-dimensional isotropic subspace of R^{2n}, stored as an
    orthonormal frame (QR-corrected at construction)."""

    def __init__(self, frame, tol=FRAME_TOL):
        F = np.asarray(frame, dtype=float)
        if F.ndim != 2 or F.shape[0] != 2 * F.shape[1]:
            raise InvalidInput("Lagrangian frame must be 2n x n, got shape %r" % (F.shape,))
        n = F.shape[1]
        Q, R = np.linalg.qr(F)
        if np.min(np.abs(np.diag(R))) < 1e-12:
            raise InvalidInput("frame columns are not independent")
        # keep the orientation of the input frame
        Q = Q * np.sign(np.diag(R))
        iso = float(np.max(np.abs(Q.T @ standard_form(n) @ Q)))
        if iso > tol:
            raise InvalidInput("subspace is not isotropic (residue %.3e)" % iso)
        self.n = n
        self.frame = Q
        self.frame.setflags(write=False)

    @classmethod
    def spanning(cls, *vectors):
        return cls(np.column_stack(vectors))

    def apply(self, M):
        """Image g.L under a matrix, as a new Lagrangian."""
        return Lagrangian(np.asarray(M, dtype=float) @ self.frame)

    def equals(self, other, tol=FRAME_TOL):
        """Subspace equality via principal angles."""
        if self.n != other.n:
            return False
        s = np.linalg.svd(self.frame.T @ other.frame, compute_uv=False)
        return bool(np.min(s) > 1.0 - tol)

    def __repr__(self):
        return "Lagrangian(n=%d)" % self.n


def lagrangian_l0s(n):
    F = np.zeros((2 * n, n))
    F[:n] = np.eye(n)
    return Lagrangian(F)


def lagrangian_l0u(n):
    F = np.zeros((2 * n, n))
    F[n:] = np.eye(n)
    return Lagrangian(F)


def graph_lagrangian(M):
    """u^s(M) . L0u = {(Mv, v)} for symmetric M."""
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    return Lagrangian(np.vstack([M, np.eye(n)]))


def is_transverse(L1, L2, tol=TRANSVERSE_TOL):
    if L1.n != L2.n:
        raise InvalidInput("dimension mismatch: n=%d vs n=%d" % (L1.n, L2.n))
    s = np.linalg.svd(np.hstack([L1.frame, L2.frame]), compute_uv=False)
    return bool(s[-1] > tol)


def _symplectic_frame(Ls, Lu):
    """Symplectic basis matrix P sending (L0s, L0u) to (Ls, Lu)."""
    S = Ls.frame
    G = S.T @ standard_form(Ls.n) @ Lu.frame
    U = Lu.frame @ np.linalg.inv(G)
    return np.hstack([S, U])


def graph_matrix(Ls, L, Lu):
    """The unique symmetric M with L = u^s(M) . L0u after moving (Ls, Lu)
    to the standard position."""
    n = Ls.n
    if not is_transverse(Ls, Lu):
        raise TransversalityError("reference Lagrangians are not transverse")
    P = _symplectic_frame(Ls, Lu)
    J = standard_form(n)
    Pinv = -J @ P.T @ J
    F = Pinv @ L.frame
    X, Y = F[:n], F[n:]
    sv = np.linalg.svd(Y, compute_uv=False)
    if sv[-1] <= TRANSVERSE_TOL * max(1.0, sv[0]):
        raise TransversalityError("L is not transverse to Ls")
    M = X @ np.linalg.inv(Y)
    asym = float(np.max(np.abs(M - M.T)))
    if asym > GRAPH_ASYM_TOL * max(1.0, float(np.max(np.abs(M)))):
        raise TransversalityError("graph matrix not symmetric (residue %.3e)" % asym)
    return 0.5 * (M + M.T)


def triple_is_positive(Ls, L, Lu, tol=POSDEF_TOL):
    """Positivity of the triple (Ls, L, Lu): graph form positive definite."""
    if not (is_transverse(Ls, L) and is_transverse(L, Lu) and is_transverse(Ls, Lu)):
        raise TransversalityError("triple is not pairwise transverse")
    M = graph_matrix(Ls, L, Lu)
    return bool(np.min(np.linalg.eigvalsh(M)) > tol)


def restrict_to_lagrangian(g, L, tol=1e-8):
    """Matrix of g acting on the g-invariant Lagrangian L, in L's frame."""
    g = np.asarray(g, dtype=float)
    gF = g @ L.frame
    A = L.frame.T @ gF
    resid = float(np.max(np.abs(gF - L.frame @ A)))
    if resid > tol * max(1.0, float(np.max(np.abs(gF)))):
        raise InvarianceError("subspace is not invariant (residue %.3e)" % resid)
    return A
