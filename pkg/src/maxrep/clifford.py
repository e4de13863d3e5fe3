"""Clifford algebra arithmetic for Pin(n) and second Stiefel-Whitney
classes of finite-image orthogonal representations.

Elements are stored blade by blade, a blade being a bitmask over the n
generators, with the convention e_i^2 = +1.  Orthogonal matrices are
lifted to Pin(n) through their Householder factorization; the sw2 bit
of a representation is the sign of the product of lifted commutators,
which does not depend on the choice of lifts because the extension is
central.
"""

import numpy as np

from .errors import InvalidInput, LiftingError

_PRUNE = 1e-14


def _blade_mul_sign(a, b):
    """Sign of (blade a) * (blade b); the resulting blade is a ^ b."""
    sign = 1
    j = 0
    while b:
        if b & 1:
            # e_j moves past the generators of a above position j
            if bin(a >> (j + 1)).count("1") % 2:
                sign = -sign
        b >>= 1
        j += 1
    return sign


class CliffordElement:
    """Real Clifford algebra element over n generators with e_i^2 = +1,
    held as a map blade-bitmask -> coefficient."""

    def __init__(self, n, coefficients=None):
        self.n = int(n)
        self.coefficients = {}
        for k, v in (coefficients or {}).items():
            if abs(v) > _PRUNE:
                self.coefficients[int(k)] = float(v)

    @classmethod
    def scalar(cls, n, value=1.0):
        return cls(n, {0: value})

    def __mul__(self, other):
        if not isinstance(other, CliffordElement) or other.n != self.n:
            raise InvalidInput("can only multiply elements over the same generators")
        out = {}
        for a, ca in self.coefficients.items():
            for b, cb in other.coefficients.items():
                k = a ^ b
                out[k] = out.get(k, 0.0) + _blade_mul_sign(a, b) * ca * cb
        return CliffordElement(self.n, out)

    def __neg__(self):
        return CliffordElement(self.n, {k: -v for k, v in self.coefficients.items()})

    def reverse(self):
        out = {}
        for a, c in self.coefficients.items():
            k = bin(a).count("1")
            out[a] = c * (-1.0) ** (k * (k - 1) // 2)
        return CliffordElement(self.n, out)

    def scalar_part(self):
        return self.coefficients.get(0, 0.0)

    def norm(self):
        return (self * self.reverse()).scalar_part()

    def inverse(self):
        """Inverse of a unit-norm group element: reverse over norm."""
        nrm = self.norm()
        if abs(nrm) < 1e-12:
            raise InvalidInput("element has no versor inverse")
        rev = self.reverse()
        return CliffordElement(self.n, {k: v / nrm
                                        for k, v in rev.coefficients.items()})

    def parity(self):
        """0 or 1 for even/odd elements; mixed grades raise."""
        parities = {bin(a).count("1") % 2 for a in self.coefficients}
        if len(parities) > 1:
            raise InvalidInput("element mixes even and odd grades")
        return parities.pop() if parities else 0


def vector_element(v):
    """Degree-1 element with coordinates v."""
    v = np.asarray(v, dtype=float)
    return CliffordElement(len(v), {1 << i: v[i] for i in range(len(v))})


def project_pin(x):
    """Pin(n) -> O(n) by the twisted adjoint action on degree-1
    elements, column by column."""
    sgn = -1.0 if x.parity() else 1.0
    xi = x.inverse()
    n = x.n
    M = np.zeros((n, n))
    for j in range(n):
        img = x * CliffordElement(n, {1 << j: 1.0}) * xi
        for k, v in img.coefficients.items():
            if k == 0 or (k & (k - 1)):
                raise LiftingError("projection left blade %d, not degree 1" % k)
            M[k.bit_length() - 1, j] = sgn * v
    return M


def lift_orthogonal(M, tol=1e-10):
    """One of the two Pin(n) lifts of an orthogonal matrix, as the blade
    product of its Householder reflection vectors.  Columns already in
    place (reflection vector below tol) are skipped."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidInput("expected a square matrix, got shape %r" % (M.shape,))
    n = M.shape[0]
    if np.max(np.abs(M.T @ M - np.eye(n))) > 1e-9:
        raise InvalidInput("matrix is not orthogonal")
    work = M.copy()
    lift = CliffordElement.scalar(n)
    for j in range(n):
        v = work[:, j].copy()
        v[j] -= 1.0
        nv = np.linalg.norm(v)
        if nv < tol:
            continue
        v /= nv
        work = (np.eye(n) - 2.0 * np.outer(v, v)) @ work
        lift = lift * vector_element(v)
    if np.max(np.abs(work - np.eye(n))) > 1e-8:
        raise LiftingError("Householder factorization did not close")
    assert abs(lift.norm() - 1.0) <= 1e-9
    return lift


def pin_commutator(x, y):
    return x * y * x.inverse() * y.inverse()


def sw2_orthogonal(theta):
    """Second Stiefel-Whitney class of a finite-image orthogonal
    representation: the sign of the product over handles of the lifted
    commutators, 0 for +1 and 1 for -1."""
    prod = CliffordElement.scalar(theta.n)
    for i in range(theta.presentation.genus):
        la = lift_orthogonal(theta.generators["a%d" % (i + 1)])
        lb = lift_orthogonal(theta.generators["b%d" % (i + 1)])
        prod = prod * pin_commutator(la, lb)
    s = prod.scalar_part()
    off = max((abs(v) for k, v in prod.coefficients.items() if k != 0),
              default=0.0)
    if off > 1e-8 or abs(abs(s) - 1.0) > 1e-8:
        raise LiftingError("commutator product is not a scalar sign "
                           "(scalar %.3e, off-scalar %.3e)" % (s, off))
    return 0 if s > 0 else 1
