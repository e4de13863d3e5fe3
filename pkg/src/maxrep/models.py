"""Model maximal representations into Sp(2n,R).

Matrix-level embeddings (irreducible SL(2,R) -> Sp(2n,R), diagonal and
pairwise-diagonal SL(2,R) x SL(2,R) -> Sp(4,R), tensor with a compact
orthogonal factor) and the representation constructors built on them:
irreducible / diagonal Fuchsian, twisted diagonal, hybrids glued along
one or two separating curves, amalgams, and central epsilon twists.

The irreducible embedding acts on odd symmetric powers of R^2.  In the
scaled monomial basis used here the invariant pairing becomes a scalar
multiple of the standard symplectic form and the embedding multiplies
the fundamental group of the maximal compact by +n (winding-tested; the
naive monomial order gives -n for half the sign choices).
"""

import math

import numpy as np

from .errors import (GluingError, InvalidInput, UnrealizableInvariants)
from .fuchsian import FuchsianRep, closed_double, closed_single, comm2, inv2, det2
from .surface import evaluate_word, standard_presentation
from .symplectic import is_symplectic

KAPPA = np.diag([1.0, -1.0, 1.0, -1.0])


# ----------------------------------------------------------- matrix embeddings


def _check_sl2(A):
    A = np.asarray(A, dtype=float)
    if A.shape != (2, 2):
        raise InvalidInput("expected a 2x2 matrix, got shape %r" % (A.shape,))
    if abs(det2(A) - 1.0) > 1e-8:
        raise InvalidInput("matrix must have determinant 1, got %r" % det2(A))
    return A


def _sym_power_matrix(n, A):
    """Action of A on degree-(2n-1) polynomials in the basis
    P_k = X^{2n-1-k} Y^k / k!  (column k by binomial convolution)."""
    m = 2 * n - 1
    a, b, c, d = A[0, 0], A[0, 1], A[1, 0], A[1, 1]
    S = np.zeros((m + 1, m + 1))
    fact = [math.factorial(j) for j in range(m + 1)]
    for k in range(m + 1):
        p1 = np.array([math.comb(m - k, i) * a ** (m - k - i) * c ** i
                       for i in range(m - k + 1)])
        p2 = np.array([math.comb(k, i) * b ** (k - i) * d ** i
                       for i in range(k + 1)])
        prod = np.convolve(p1, p2)          # index = Y-degree
        for j in range(m + 1):
            S[j, k] = prod[j] * fact[j] / fact[k]
    return S


_BASIS_CACHE = {}


def _darboux_basis(n):
    """Columns give the symplectic basis in P_k coordinates:

      e_j     = (-1)^{j+1}    sqrt(C(2n-1,j-1)) X^{2n-j} Y^{j-1}
      e_{n+j} = (-1)^{n+1}    sqrt(C(2n-1,j-1)) X^{j-1}  Y^{2n-j}

    The pairing of P_{j-1} with P_{2n-j} makes every product
    omega(e_j, e_{n+j}) equal to (-1)^{n+1}, so the Gram matrix is that
    constant times the standard form and the image is symplectic for
    the standard form.  The n-dependent sign keeps the compact winding
    at +n for every n.
    """
    if n in _BASIS_CACHE:
        return _BASIS_CACHE[n]
    m = 2 * n - 1
    T = np.zeros((2 * n, 2 * n))
    sigp = (-1.0) ** (n + 1)
    for j in range(1, n + 1):
        root = math.sqrt(math.comb(m, j - 1))
        T[j - 1, j - 1] = (-1.0) ** (j + 1) * root * math.factorial(j - 1)
        T[m - (j - 1), n + j - 1] = sigp * root * math.factorial(2 * n - j)
    _BASIS_CACHE[n] = (T, np.linalg.inv(T))
    return _BASIS_CACHE[n]


def irreducible_embedding(n, A):
    """Image of a det-1 2x2 matrix under the irreducible representation
    into Sp(2n,R) (action on odd symmetric powers of the plane)."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidInput("n must be a positive integer, got %r" % (n,))
    A = _check_sl2(A)
    T, Tinv = _darboux_basis(n)
    return Tinv @ _sym_power_matrix(n, A) @ T


def diagonal_embedding(n, A):
    """Diagonal embedding A -> A acting on each plane
    W_i = span(e_i, e_{n+i})."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidInput("n must be a positive integer, got %r" % (n,))
    A = _check_sl2(A)
    return np.kron(A, np.eye(n))


def psi(A, B):
    """Pairwise-diagonal embedding of SL(2,R) x SL(2,R) into Sp(4,R):
    A acts on span(e_1, e_3), B on span(e_2, e_4)."""
    A = _check_sl2(A)
    B = _check_sl2(B)
    M = np.zeros((4, 4))
    M[0, 0], M[0, 2], M[2, 0], M[2, 2] = A[0, 0], A[0, 1], A[1, 0], A[1, 1]
    M[1, 1], M[1, 3], M[3, 1], M[3, 3] = B[0, 0], B[0, 1], B[1, 0], B[1, 1]
    return M


def tensor_embedding(A, Theta):
    """Action of (A, Theta) in SL(2,R) x O(n) on R^2 (x) R^n, written in
    the symplectic basis e_i = X (x) w_i, e_{n+i} = Y (x) w_i."""
    A = _check_sl2(A)
    Theta = np.asarray(Theta, dtype=float)
    return np.kron(A, Theta)


# ------------------------------------------------------- representation types


class Representation:
    """Surface-group representation with matrix generators, a target
    group descriptor and a construction tag used by the invariant
    computations."""

    _FAMILIES = ("Sp2n", "SL2", "On")

    def __init__(self, family, n, presentation, generators, metadata=None,
                 relator_tol=1e-6, certified_residue=None):
        if family not in self._FAMILIES:
            raise InvalidInput("unknown target family %r" % (family,))
        self.family = family
        self.n = int(n)
        self.presentation = presentation
        self.metadata = dict(metadata or {})
        self.generators = {}
        for name in presentation.generators:
            if name not in generators:
                raise InvalidInput("missing generator %r" % name)
            M = np.asarray(generators[name], dtype=float)
            self._check_membership(name, M)
            self.generators[name] = M
        if certified_residue is not None:
            # Constructors whose relator word multiplies dozens of
            # large-entry factors certify closure through an
            # algebraically equal short product instead (commutators
            # collected in the 2x2 factors before embedding).  The
            # letter-by-letter float64 product is conditioned like the
            # squared norm of the partial products (1e13 and up for the
            # genus-3 hybrids), so evaluating it directly measures
            # rounding noise, not the group relation.
            self.relator_residue = float(certified_residue)
        else:
            rel = evaluate_word(self, presentation.relator)
            dim = rel.shape[0]
            self.relator_residue = float(np.max(np.abs(rel - np.eye(dim))))
        if self.relator_residue > relator_tol:
            raise InvalidInput("relator residue %.2e exceeds %.0e"
                               % (self.relator_residue, relator_tol))

    def _check_membership(self, name, M):
        if self.family == "Sp2n":
            if M.shape != (2 * self.n, 2 * self.n):
                raise InvalidInput("generator %r has shape %r, expected %r"
                                   % (name, M.shape, (2 * self.n, 2 * self.n)))
            if not is_symplectic(M):
                raise InvalidInput("generator %r is not symplectic" % name)
        elif self.family == "SL2":
            if M.shape != (2, 2) or abs(det2(M) - 1.0) > 1e-8:
                raise InvalidInput("generator %r is not in SL(2,R)" % name)
        else:
            if M.shape != (self.n, self.n) or \
                    np.max(np.abs(M.T @ M - np.eye(self.n))) > 1e-10:
                raise InvalidInput("generator %r is not orthogonal" % name)

    @property
    def genus(self):
        return self.presentation.genus

    @property
    def tag(self):
        return self.metadata.get("tag")

    def __call__(self, word):
        return evaluate_word(self, word)


class OrthogonalRep:
    """Representation into O(n) with finite image, used as the compact
    twisting factor of twisted diagonal representations."""

    def __init__(self, n, presentation, generators, tag=None):
        self.n = int(n)
        self.presentation = presentation
        self.tag = dict(tag or {})
        self.generators = {}
        for name in presentation.generators:
            if name not in generators:
                raise InvalidInput("missing generator %r" % name)
            M = np.asarray(generators[name], dtype=float)
            if M.shape != (self.n, self.n):
                raise InvalidInput("generator %r has shape %r" % (name, M.shape))
            if np.max(np.abs(M.T @ M - np.eye(self.n))) > 1e-10:
                raise InvalidInput("generator %r is not orthogonal" % name)
            self.generators[name] = M
        rel = evaluate_word(self, presentation.relator)
        if np.max(np.abs(rel - np.eye(self.n))) > 1e-10:
            raise InvalidInput("orthogonal relator does not close")
        self.finite_image = True

    @property
    def genus(self):
        return self.presentation.genus

    def __call__(self, word):
        return evaluate_word(self, word)


# ------------------------------------------------------------- constructors


def _hyperbolic_sign_bits(iota):
    """Per-generator bit: 1 when the expanding eigenvalue is negative
    (equivalently the trace, for hyperbolic matrices)."""
    bits = []
    for name in iota.presentation.generators:
        bits.append(1 if np.trace(iota.generators[name]) < 0 else 0)
    return tuple(bits)


def _sl2_relator_product(presentation, generators):
    """Product of handle commutators evaluated in the 2x2 factors.
    Accurate to ~1e-11 even where the embedded 2n x 2n word is not."""
    out = np.eye(2)
    for i in range(presentation.genus):
        out = out @ comm2(generators["a%d" % (i + 1)],
                          generators["b%d" % (i + 1)])
    return out


def irreducible_fuchsian(iota, n=2):
    """Compose a discrete SL(2,R) representation with the irreducible
    embedding into Sp(2n,R)."""
    gens = {nm: irreducible_embedding(n, M)
            for nm, M in iota.generators.items()}
    meta = {"tag": "irr", "iota_bits": _hyperbolic_sign_bits(iota)}
    P = _sl2_relator_product(iota.presentation, iota.generators)
    residue = float(np.max(np.abs(irreducible_embedding(n, P) - np.eye(2 * n))))
    return Representation("Sp2n", n, iota.presentation, gens, meta,
                          certified_residue=residue)


def diagonal_fuchsian(iota, n=2):
    """Compose a discrete SL(2,R) representation with the diagonal
    embedding into Sp(2n,R)."""
    gens = {nm: diagonal_embedding(n, M) for nm, M in iota.generators.items()}
    meta = {"tag": "diagonal", "iota_bits": _hyperbolic_sign_bits(iota)}
    P = _sl2_relator_product(iota.presentation, iota.generators)
    residue = float(np.max(np.abs(P - np.eye(2))))
    return Representation("Sp2n", n, iota.presentation, gens, meta,
                          certified_residue=residue)


def product_fuchsian(tau1, tau2):
    """Pairwise-diagonal representation psi(tau1, tau2) into Sp(4,R)
    from two SL(2,R) representations with the same presentation."""
    if tau1.presentation.generators != tau2.presentation.generators:
        raise InvalidInput("factors must share a presentation")
    gens = {nm: psi(tau1.generators[nm], tau2.generators[nm])
            for nm in tau1.presentation.generators}
    meta = {"tag": "diagonal", "pair": True,
            "iota_bits": _hyperbolic_sign_bits(tau1)}
    P1 = _sl2_relator_product(tau1.presentation, tau1.generators)
    P2 = _sl2_relator_product(tau2.presentation, tau2.generators)
    residue = float(np.max(np.abs(psi(P1, P2) - np.eye(4))))
    return Representation("Sp2n", 2, tau1.presentation, gens, meta,
                          certified_residue=residue)


def twisted_diagonal(iota, theta):
    """Tensor a discrete SL(2,R) representation with a finite-image
    orthogonal representation of the same surface group."""
    if not isinstance(iota, FuchsianRep):
        raise InvalidInput("first argument must be a Fuchsian representation")
    if iota.presentation.generators != theta.presentation.generators:
        raise InvalidInput("presentation mismatch between the two factors")
    n = theta.n
    gens = {nm: tensor_embedding(iota.generators[nm], theta.generators[nm])
            for nm in iota.presentation.generators}
    meta = {"tag": "twisted", "theta": dict(theta.tag),
            "iota_bits": _hyperbolic_sign_bits(iota)}
    # The tensor is multiplicative factor by factor, so the relator
    # image splits as (2x2 product) (x) (orthogonal relator image).
    P = _sl2_relator_product(iota.presentation, iota.generators)
    rel_theta = evaluate_word(theta, theta.presentation.relator)
    residue = float(np.max(np.abs(np.kron(P, rel_theta) - np.eye(2 * n))))
    return Representation("Sp2n", n, iota.presentation, gens, meta,
                          certified_residue=residue)


def orthogonal_catalog(alpha, beta, n, genus=None):
    """Finite-image representation into O(n) with prescribed invariants:
    determinant signs alpha on the generators and lifting obstruction
    beta over the whole surface.

    Images are built generator by generator from two commuting
    involutions, a reflection R (det -1) and a rotation Z by pi in a
    coordinate plane (det +1): the R-exponents realize alpha, and for
    beta = 1 a single Z is inserted on the partner of the first
    generator carrying an R, which flips the sign of the lifted
    commutator.  When alpha = 0 and beta = 1 no reflection is
    available, and the rank-3 pair of rotations by pi about orthogonal
    axes (the images of the quaternions i and j) is used instead.
    """
    if hasattr(alpha, "bits"):
        alpha = alpha.bits
    alpha = tuple(int(b) % 2 for b in alpha)
    beta = int(beta) % 2
    if len(alpha) % 2 != 0 or len(alpha) < 4:
        raise InvalidInput("alpha must list one bit per generator")
    if genus is None:
        genus = len(alpha) // 2
    if len(alpha) != 2 * genus:
        raise InvalidInput("alpha has %d bits for genus %d"
                           % (len(alpha), genus))
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidInput("n must be a positive integer")
    any_alpha = any(alpha)
    if beta == 1 and n == 1:
        raise UnrealizableInvariants("beta = 1 is not realizable in O(1)")
    if beta == 1 and not any_alpha and n <= 2:
        raise UnrealizableInvariants(
            "beta = 1 with trivial alpha needs n >= 3")
    if any_alpha and n < 1:
        raise UnrealizableInvariants("no reflections available")

    pres = standard_presentation(genus)
    eye = np.eye(n)

    def refl():
        M = np.array(eye)
        M[0, 0] = -1.0
        return M

    def rot_pi():
        M = np.array(eye)
        M[0, 0] = M[1, 1] = -1.0
        return M

    gens = {nm: np.array(eye) for nm in pres.generators}
    if beta == 1 and not any_alpha:
        qi = np.array(eye)
        qi[1, 1] = qi[2, 2] = -1.0          # rotation by pi about the 1st axis
        qj = np.array(eye)
        qj[0, 0] = qj[2, 2] = -1.0          # rotation by pi about the 2nd axis
        gens["a1"], gens["b1"] = qi, qj
    else:
        # R-exponents from alpha; one Z on the partner of the first
        # reflected generator when beta = 1.
        z_slot = None
        if beta == 1:
            for i in range(genus):
                if alpha[2 * i]:
                    z_slot = 2 * i + 1
                    break
                if alpha[2 * i + 1]:
                    z_slot = 2 * i
                    break
        for i in range(genus):
            for j, nm in ((2 * i, "a%d" % (i + 1)), (2 * i + 1, "b%d" % (i + 1))):
                M = np.array(eye)
                if alpha[j]:
                    M = M @ refl()
                if z_slot == j:
                    M = M @ rot_pi()
                gens[nm] = M
    tag = {"alpha": list(alpha), "beta": beta, "n": n}
    return OrthogonalRep(n, pres, gens, tag)


def epsilon_twist(rep, eps_minus1):
    """Extend a representation to {+-1} x pi_1 by sending the central
    -1 to eps_minus1 * Id; generator images are unchanged."""
    if rep.family != "Sp2n" or rep.n != 2:
        raise InvalidInput("epsilon twist is defined for Sp(4,R) targets")
    if eps_minus1 not in (1, -1):
        raise InvalidInput("eps_minus1 must be +1 or -1")
    meta = dict(rep.metadata)
    meta = {"tag": "epsilon-twist", "eps_minus1": int(eps_minus1),
            "base": meta}
    # Central signs cancel inside each handle commutator, so the
    # relator image is the same as the base representation's.
    out = Representation("Sp2n", 2, rep.presentation, rep.generators, meta,
                         certified_residue=rep.relator_residue)
    out.central_image = eps_minus1 * np.eye(4)
    return out


# ------------------------------------------------------------------ hybrids


def _sl2_expanding_frame(M):
    """SL(2,R) matrix P with P diag(lambda_+, lambda_-) P^-1 = M, the
    expanding eigenvector first."""
    evals, evecs = np.linalg.eig(M)
    if np.max(np.abs(evals.imag)) > 1e-9:
        raise GluingError("curve holonomy is not real-diagonalizable")
    evals, evecs = evals.real, evecs.real
    order = np.argsort(-np.abs(evals))
    P = evecs[:, order]
    if det2(P) < 0:
        P[:, 1] = -P[:, 1]
    return P / np.sqrt(det2(P))


def _kappa_conj(M):
    return KAPPA @ M @ KAPPA


def _positive_trace(A):
    """Positive-trace lift of a hyperbolic SL(2,R) element.  The sign
    is invisible to commutators (so to the relator and the curve
    holonomies) but a negative factor inside a psi pair would flip the
    orientation of the attracting Lagrangian along that generator and
    twist sw1 away from zero."""
    return -A if np.trace(A) < 0 else A


def hybrid(genus, chi_l, adjustment=1, m=0.5):
    """Maximal representation into Sp(4,R) glued from an irreducible
    block of Euler characteristic chi_l and pairwise-diagonal blocks.

    Odd chi_l uses one separating curve: the first (1 - chi_l)/2
    handles carry the irreducible embedding of a discrete
    representation iota whose curve holonomy is the exact diagonal
    -diag(e^m, e^{-m}); the remaining handles carry psi of a pair with
    curve lengths (6m, 2m), and both sides agree on the curve exactly.
    Even chi_l uses two curves: handle 1 carries the psi pair, the next
    -chi_l/2 handles the irreducible block, and the rest the psi pair
    conjugated so the matching condition holds on the second curve too.

    adjustment = -1 conjugates the irreducible block (and whatever is
    glued to its far side) by diag(1,-1,1,-1), which realizes the
    companion relative Euler value.
    """
    if not isinstance(genus, (int, np.integer)) or genus < 2:
        raise InvalidInput("genus must be an integer >= 2")
    if not isinstance(chi_l, (int, np.integer)) or not 3 - 2 * genus <= chi_l <= -1:
        raise InvalidInput("chi_l must lie in [%d, -1], got %r"
                           % (3 - 2 * genus, chi_l))
    if adjustment not in (1, -1):
        raise InvalidInput("adjustment must be +1 or -1")
    if not m > 0:
        raise InvalidInput("m must be positive")
    pres = standard_presentation(genus)
    irr_tag = "irr" if adjustment == 1 else "irr_adj"

    if chi_l % 2 == 1:
        genus_l = (1 - chi_l) // 2
        iota = closed_single(genus, genus_l, 2 * m)
        tau1 = closed_single(genus, genus_l, 6 * m)
        gens = {}
        for i in range(genus):
            for k, nm in ((2 * i, "a%d" % (i + 1)), (2 * i + 1, "b%d" % (i + 1))):
                if i < genus_l:
                    M = irreducible_embedding(2, iota[k])
                    if adjustment == -1:
                        M = _kappa_conj(M)
                else:
                    M = psi(_positive_trace(tau1[k]), _positive_trace(iota[k]))
                gens[nm] = M
        # Certify closure on the factored relator: commutators collected
        # in SL(2) first, embeddings applied to the three short factors.
        # Conjugating the irreducible side by diag(1,-1,1,-1) only flips
        # entry signs of the relator, so one computation covers both
        # adjustments.
        Pl, Qr, Pr = np.eye(2), np.eye(2), np.eye(2)
        for i in range(genus):
            ci = comm2(iota[2 * i], iota[2 * i + 1])
            if i < genus_l:
                Pl = Pl @ ci
            else:
                Qr = Qr @ comm2(tau1[2 * i], tau1[2 * i + 1])
                Pr = Pr @ ci
        rel_fac = irreducible_embedding(2, Pl) @ psi(Qr, Pr)
        curves = [{"genus_l": genus_l, "left": irr_tag, "right": "diag"}]
    else:
        h_mid = (-chi_l) // 2
        iota = closed_double(genus, h_mid, 2 * m, 2 * m)
        tau1 = closed_double(genus, h_mid, 6 * m, 6 * m)
        U2 = np.eye(2)
        V2 = np.eye(2)
        for i in range(1 + h_mid):
            U2 = U2 @ comm2(iota[2 * i], iota[2 * i + 1])
            V2 = V2 @ comm2(tau1[2 * i], tau1[2 * i + 1])
        Pu = _sl2_expanding_frame(U2)
        Q1 = _sl2_expanding_frame(V2)
        # T intertwines the psi pair with the irreducible embedding on
        # the second curve: T psi(V2, U2) T^-1 = irr(U2).
        T = irreducible_embedding(2, Pu) @ psi(inv2(Q1), inv2(Pu))
        Tinv = psi(Q1, Pu) @ irreducible_embedding(2, inv2(Pu))
        gens = {}
        for i in range(genus):
            for k, nm in ((2 * i, "a%d" % (i + 1)), (2 * i + 1, "b%d" % (i + 1))):
                if i == 0:
                    M = psi(_positive_trace(tau1[k]), _positive_trace(iota[k]))
                elif i <= h_mid:
                    M = irreducible_embedding(2, iota[k])
                    if adjustment == -1:
                        M = _kappa_conj(M)
                else:
                    M = T @ psi(_positive_trace(tau1[k]),
                                _positive_trace(iota[k])) @ Tinv
                    if adjustment == -1:
                        M = _kappa_conj(M)
                gens[nm] = M
        Pmid, Qrest, Prest = np.eye(2), np.eye(2), np.eye(2)
        for i in range(1, genus):
            ci = comm2(iota[2 * i], iota[2 * i + 1])
            if i <= h_mid:
                Pmid = Pmid @ ci
            else:
                Qrest = Qrest @ comm2(tau1[2 * i], tau1[2 * i + 1])
                Prest = Prest @ ci
        rel_fac = psi(comm2(tau1[0], tau1[1]), comm2(iota[0], iota[1])) \
            @ irreducible_embedding(2, Pmid) \
            @ T @ psi(Qrest, Prest) @ Tinv
        curves = [{"genus_l": 1, "left": "diag", "right": irr_tag},
                  {"genus_l": 1 + h_mid, "left": irr_tag, "right": "diag"}]

    residue = float(np.max(np.abs(rel_fac - np.eye(4))))
    if residue > 1e-6:
        # Reached only by double-curve gluings at genus >= 4: the
        # conjugated factors there overrun what float64 entries can
        # resolve, so refuse rather than hand back a broken gluing.
        raise GluingError(
            "certified relator residue %.2e exceeds 1e-6 for genus=%d, "
            "chi_l=%d; this double-curve gluing needs more precision "
            "than float64 carries" % (residue, genus, chi_l))
    meta = {"tag": "hybrid", "chi_l": int(chi_l),
            "adjustment": int(adjustment), "m": float(m), "curves": curves}
    try:
        return Representation("Sp2n", 2, pres, gens, meta,
                              certified_residue=residue)
    except InvalidInput as exc:
        raise GluingError("hybrid gluing failed: %s" % exc) from exc


def amalgamate(rep_l, rep_r, dec):
    """Splice two representations along a standard separating curve:
    generators on the first dec.genus_l handles come from rep_l, the
    rest from rep_r.  Both inputs must be defined on the whole surface
    group and agree on the curve."""
    if rep_l.family != rep_r.family or rep_l.n != rep_r.n:
        raise InvalidInput("amalgam factors target different groups")
    if rep_l.presentation.generators != rep_r.presentation.generators:
        raise InvalidInput("amalgam factors on different presentations")
    if dec.genus != rep_l.genus:
        raise InvalidInput("decomposition genus %d does not match %d"
                           % (dec.genus, rep_l.genus))
    Ml = rep_l(dec.gamma)
    Mr = rep_r(dec.gamma)
    if np.max(np.abs(Ml - Mr)) > 1e-6:
        raise GluingError("curve holonomies differ by %.2e"
                          % float(np.max(np.abs(Ml - Mr))))
    gens = {}
    for i in range(dec.genus):
        src = rep_l if i < dec.genus_l else rep_r
        for nm in ("a%d" % (i + 1), "b%d" % (i + 1)):
            gens[nm] = src.generators[nm]
    curve = {"genus_l": dec.genus_l,
             "left": _side_tag(rep_l), "right": _side_tag(rep_r)}
    meta = {"tag": "amalgam", "curves": [curve],
            "left": rep_l.metadata, "right": rep_r.metadata}
    # The splice relator telescopes: the left handles multiply to the
    # curve holonomy of rep_l, the rest to the inverse holonomy of
    # rep_r, so closure is certified by the holonomy mismatch plus the
    # factors' own certified residues.
    mismatch = float(np.max(np.abs(Ml @ np.linalg.inv(Mr) - np.eye(Ml.shape[0]))))
    residue = max(mismatch, rep_l.relator_residue, rep_r.relator_residue)
    try:
        return Representation(rep_l.family, rep_l.n, rep_l.presentation,
                              gens, meta, certified_residue=residue)
    except InvalidInput as exc:
        raise GluingError("amalgam does not close: %s" % exc) from exc


def _side_tag(rep):
    tag = rep.metadata.get("tag")
    if tag in ("irr", "diagonal"):
        return "irr" if tag == "irr" else "diag"
    return tag or "unknown"
