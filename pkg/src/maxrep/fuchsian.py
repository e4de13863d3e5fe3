"""Discrete embeddings of surface groups into SL(2,R).

Two construction paths: side pairings of the regular hyperbolic 4g-gon
(fast, no length control), and closed-form trace-coordinate assemblies
from one-holed tori, pants and spheres-with-handles (full control of
the lengths of standard separating curves, as needed by the hybrid
constructions).  Euler numbers are computed by lifting the projective
circle action to R and reading off the translation of the relator lift.

Numerical conventions that matter for accuracy: 2x2 inverses always go
through the adjugate (np.linalg.inv loses ~5 digits on the large
matrices appearing in genus >= 4 assemblies), and long words are
evaluated letter by letter left to right so intermediate products never
exceed the norm of the final answer times the largest letter.
"""

import numpy as np

from .errors import (ComputationError, ConstructionError, InvalidInput,
                     QuadratureError)
from .surface import evaluate_word, standard_presentation

# ------------------------------------------------------------- 2x2 helpers


def det2(M):
    return M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]


def inv2(M):
    """Adjugate inverse; exact to roundoff for det-1 matrices."""
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]],
                    dtype=M.dtype) / det2(M)


def _eye2(dtype=float):
    return np.eye(2, dtype=dtype)


def comm2(a, b):
    return a @ b @ inv2(a) @ inv2(b)


def hyperbolic_log(M):
    """Real log of a 2x2 matrix with positive distinct eigenvalues."""
    t, d = np.trace(M), det2(M)
    disc_sq = t * t - 4 * d
    if disc_sq <= 0:
        raise InvalidInput("matrix has no real eigenvalue splitting")
    disc = np.sqrt(disc_sq)
    l1, l2 = (t + disc) / 2, (t - disc) / 2
    if not l1 > l2 > 0:
        raise InvalidInput("matrix eigenvalues are not positive")
    return (np.log(l1) - np.log(l2)) / (l1 - l2) * (M - l2 * _eye2(M.dtype)) \
        + np.log(l2) * _eye2(M.dtype)


def mink(u, v):
    """tr(uv)/2 on traceless 2x2 matrices: signature (2,1) pairing,
    <u,u> = -det u."""
    return np.trace(u @ v) / 2.0


def exp_traceless(u):
    d = np.linalg.det(u)
    if d < 0:
        r = np.sqrt(-d)
        return np.cosh(r) * np.eye(2) + np.sinh(r) / r * u
    r = np.sqrt(d)
    if r < 1e-12:
        return np.eye(2) + u
    return np.cos(r) * np.eye(2) + np.sin(r) / r * u


def translation_length(A):
    """Translation length 2*arccosh(|tr A|/2) of a det-1 matrix."""
    A = np.asarray(A, dtype=float)
    if abs(det2(A) - 1.0) > 1e-8:
        raise InvalidInput("matrix must have determinant 1")
    half = abs(np.trace(A)) / 2.0
    if half < 1.0 - 1e-12:
        raise InvalidInput("elliptic matrix has no translation length")
    return 2.0 * float(np.arccosh(max(half, 1.0)))


# -------------------------------------------------------- representation type


class FuchsianRep:
    """Assignment of det-1 hyperbolic matrices to the standard
    generators, with relator evaluating to +-Id within tolerance."""

    def __init__(self, presentation, generators, relator_tol=1e-6):
        self.presentation = presentation
        self.generators = {}
        for name in presentation.generators:
            if name not in generators:
                raise InvalidInput("missing generator %r" % name)
            M = np.asarray(generators[name], dtype=float)
            if M.shape != (2, 2):
                raise InvalidInput("generator %r is not 2x2" % name)
            if abs(det2(M) - 1.0) > 1e-10:
                raise InvalidInput("generator %r has determinant %r"
                                   % (name, det2(M)))
            if abs(np.trace(M)) <= 2.0:
                raise InvalidInput("generator %r is not hyperbolic" % name)
            self.generators[name] = M
        rel = evaluate_word(self, presentation.relator)
        dev_plus = float(np.max(np.abs(rel - np.eye(2))))
        dev_minus = float(np.max(np.abs(rel + np.eye(2))))
        self.relator_sign = 1 if dev_plus <= dev_minus else -1
        self.relator_residue = min(dev_plus, dev_minus)
        if self.relator_residue > relator_tol:
            raise InvalidInput("relator residue %.2e exceeds %.0e"
                               % (self.relator_residue, relator_tol))

    @property
    def genus(self):
        return self.presentation.genus

    def __call__(self, word):
        return evaluate_word(self, word)


# ------------------------------------------------------ regular 4g-gon model

_CAYLEY = np.array([[1.0, -1j], [1.0, 1j]])


def _moebius(M, z):
    a, b = M[0]
    c, d = M[1]
    return (a * z + b) / (c * z + d)


def _su11_translate(p):
    d = np.sqrt(1.0 - abs(p) ** 2)
    return np.array([[1.0, -p], [-np.conj(p), 1.0]], dtype=complex) / d


def _su11_rotation(phi):
    return np.array([[np.exp(1j * phi / 2), 0.0],
                     [0.0, np.exp(-1j * phi / 2)]])


def _segment_frame(p1, p2):
    # maps the geodesic through p1, p2 to the real axis with p1 at 0
    T = _su11_translate(p1)
    w = _moebius(T, p2)
    return _su11_rotation(-np.angle(w)) @ T


def _pair_map(p1, p2, q1, q2):
    return np.linalg.inv(_segment_frame(q1, q2)) @ _segment_frame(p1, p2)


def _su11_to_sl2(M):
    g = np.linalg.inv(_CAYLEY) @ M @ _CAYLEY
    if np.max(np.abs(g.imag)) > 1e-9:
        raise ConstructionError("disk isometry did not convert to SL(2,R)")
    g = g.real
    return g / np.sqrt(det2(g))


def _polygon_side_pairings(genus):
    """Side-pairing isometries of the regular 4g-gon with vertex angle
    2 pi / 4g, in the disk model.  Side k is paired with side k+2
    within each block of four."""
    N = 4 * genus
    R = np.arccosh(1.0 / np.tan(np.pi / N) ** 2)
    r = np.tanh(R / 2)
    verts = [r * np.exp(2j * np.pi * k / N) for k in range(N)]
    sides = [(verts[k], verts[(k + 1) % N]) for k in range(N)]
    S = []
    for i in range(genus):
        for j in range(2):
            pos = 4 * i + j
            inv = 4 * i + j + 2
            p1, p2 = sides[inv]
            q1, q2 = sides[pos]
            S.append(_pair_map(p1, p2, q2, q1))
    return S


def fuchsian_from_polygon(genus):
    """Discrete embedding from the regular 4g-gon side pairings.

    The vertex cycle of the tessellation yields the relation
    prod_i a_i b_i^-1 a_i^-1 b_i, so the pair maps are reassigned as
    (a_i, b_i) = (S_{2i}, S_{2i+1}^-1) to satisfy the standard
    commutator relator.  All generators share the trace 2/tan(pi/4g)^2
    - 2 ... (hyperbolic for every genus >= 2).
    """
    if genus < 2:
        raise InvalidInput("genus must be >= 2, got %r" % (genus,))
    S = _polygon_side_pairings(genus)
    pres = standard_presentation(genus)
    gens = {}
    for i in range(genus):
        gens["a%d" % (i + 1)] = _su11_to_sl2(S[2 * i])
        gens["b%d" % (i + 1)] = _su11_to_sl2(np.linalg.inv(S[2 * i + 1]))
    return FuchsianRep(pres, gens)


# --------------------------------------------- trace-coordinate assemblies

_FRAME_SEEDS = [
    np.array([np.cos(t), np.sin(t)]) for t in np.linspace(0.0, np.pi, 13)[:-1]
]


def conjugator(K, C):
    """SL(2,R) matrix P with P K P^-1 = C, for trace-matched inputs.

    Companion-frame method: P [v | Kv] = [w | Cw] conjugates exactly by
    Cayley-Hamilton, no eigendecomposition.  Frames are scanned for
    conditioning; det P > 0 is restored with the K-reflection, which
    commutes with K.
    """
    if abs(np.trace(K) - np.trace(C)) > 1e-9:
        raise InvalidInput("conjugator needs trace-matched matrices")
    best, best_score = None, np.inf
    for v in _FRAME_SEEDS:
        v = v.astype(K.dtype)
        Fv = np.column_stack([v, K @ v])
        dv = det2(Fv)
        if abs(dv) < 1e-12:
            continue
        cv = np.sum(Fv * Fv) / abs(dv)
        for w in _FRAME_SEEDS:
            w = w.astype(K.dtype)
            Fw = np.column_stack([w, C @ w])
            dw = det2(Fw)
            if abs(dw) < 1e-12:
                continue
            P = Fw @ inv2(Fv)
            if det2(P) < 0:
                tK = np.trace(K)
                if tK * tK <= 4.0:
                    continue
                RK = (2.0 * K - tK * _eye2(K.dtype)) / np.sqrt(tK * tK - 4.0)
                P = P @ RK
            P = P / np.sqrt(det2(P))
            score = np.sum(P * P) * cv * (np.sum(Fw * Fw) / abs(dw))
            if score < best_score:
                best, best_score = P, score
    if best is None:
        raise ConstructionError("no conjugating frame found")
    return best


def split_direction(uA, tau):
    """Unit-hyperbolic traceless uB with <uA, uB> = tau, closed form."""
    J0 = np.array([[0.0, 1.0], [-1.0, 0.0]])
    W = np.array([[1.0, 0.0], [0.0, -1.0]])
    if abs(tau) >= 1.0:
        V = J0 - mink(J0, uA) * uA              # timelike component
        V = V / np.sqrt(-mink(V, V))
        uB = tau * uA + np.sqrt(tau * tau - 1.0) * V
    else:
        V = W - mink(W, uA) * uA
        nv = mink(V, V)
        if abs(nv) < 1e-8:                      # uA parallel to W: use other
            V = np.array([[0.0, 1.0], [1.0, 0.0]])
            V = V - mink(V, uA) * uA
            nv = mink(V, V)
        V = V / np.sqrt(nv)
        uB = tau * uA + np.sqrt(1.0 - tau * tau) * V
    if abs(mink(uB, uB) - 1.0) > 1e-9:
        raise ConstructionError("splitting direction not unit hyperbolic")
    return uB


def _axis_data(C):
    """(uA, alpha) with C = sign * exp(alpha uA), uA unit hyperbolic."""
    T = np.trace(C)
    Y = hyperbolic_log(-C if T < 0 else C)
    alpha = np.sqrt(max(-det2(Y), 0.0))
    if alpha < 1e-12:
        raise ConstructionError("curve holonomy degenerated to +-Id")
    return Y / alpha, alpha


def torus_piece(C):
    """(a, b) hyperbolic with [a, b] = C exactly, |tr C| >= 2 + eps.

    [a,b] = C forces tr(a^-1 C) = tr(a), which pins the Minkowski
    pairing of the axes of a and C; then b = b0 (xI + ya) where b0
    conjugates a^-1 to a^-1 C and (x, y) runs over the det-1 hyperbola
    x^2 + tr(a) xy + y^2 = 1.  Works for both signs of tr C: the
    negative side is the discrete (one-holed torus) regime, the
    positive side is the non-discrete variant.
    """
    T = np.trace(C)
    if abs(T) < 2.0 + 1e-12:
        raise InvalidInput("torus piece needs |tr C| > 2, got %r" % (T,))
    uA, alpha = _axis_data(C)
    sa, ca = np.sinh(alpha), np.cosh(alpha)
    best = None
    for r in (0.6, 0.9, 1.4):
        cr, sr = np.cosh(r), np.sinh(r)
        ta = 2.0 * cr
        if T < 0:
            tau_a = cr * (ca + 1.0) / (sr * sa)
        else:
            tau_a = cr * (ca - 1.0) / (sr * sa)
        u = split_direction(uA, tau_a)
        a = exp_traceless(r * u)
        ai = inv2(a)
        Kp = ai @ C                       # trace ta by construction
        b0 = conjugator(ai, Kp)           # b0 a^-1 b0^-1 = a^-1 C
        # det(b0 (xI + ya)) = x^2 + ta xy + y^2 = (x + ta y/2)^2 - c^2 y^2
        c = np.sqrt(ta * ta / 4.0 - 1.0)
        for sgn in (1.0, -1.0):
            for s in np.linspace(-3.0, 3.0, 61):
                yy = np.sinh(s) / c
                xx = sgn * np.cosh(s) - ta * yy / 2.0
                b = b0 @ (xx * _eye2(C.dtype) + yy * a)
                if abs(np.trace(b)) <= 2.05:
                    continue
                err = np.max(np.abs(a @ b @ ai @ inv2(b) - C))
                if err > 1e-8:
                    continue
                nrm = np.sum(b * b)
                if best is None or nrm < best[0]:
                    best = (nrm, a, b)
    if best is None:
        raise ConstructionError("no hyperbolic torus solution for trace %r"
                                % (T,))
    return best[1], best[2]


def pants(x, y, z):
    """Normalized boundary matrices C1, C2, C3 with the given traces
    and C1 C2 C3 = Id."""
    zeta = (z + np.sqrt(z * z - 4.0)) / 2.0
    C1 = np.array([[x, -1.0], [1.0, 0.0]])
    C2 = np.array([[0.0, zeta], [-1.0 / zeta, y]])
    C3 = inv2(C1 @ C2)
    return C1, C2, C3


def genus_piece(h, C):
    """Generators (a_1, b_1, ..., a_h, b_h) with prod [a_i, b_i] = C.

    Splits C = D * Crest with both factors of trace sign(tr C) *
    2 cosh(beta), choosing the splitting axis in closed form from the
    Minkowski pairing; no conjugations, so norms stay moderate.
    """
    if h < 1:
        raise InvalidInput("piece needs at least one handle")
    if h == 1:
        return list(torus_piece(C))
    beta = 2.0                             # longer internal curves: tamer axes
    T = np.trace(C)
    uA, alpha = _axis_data(C)
    ca, sa = np.cosh(alpha), np.sinh(alpha)
    cb, sb = np.cosh(beta), np.sinh(beta)
    if T < 0:
        tau = cb * (ca + 1.0) / (sa * sb)
    else:
        tau = cb * (ca - 1.0) / (sa * sb)
    uB = split_direction(uA, tau)
    eB = exp_traceless(beta * uB)
    if T < 0:
        D = (-C) @ inv2(eB)                # trace -2cosh(beta)
        Crest = -eB
    else:
        D = C @ inv2(eB)                   # trace +2cosh(beta)
        Crest = eB
    if abs(abs(np.trace(D)) - 2 * cb) > 1e-8:
        raise ConstructionError("piece splitting lost the trace target")
    return list(torus_piece(D)) + genus_piece(h - 1, Crest)


def _pairs_to_gens(mats, genus):
    pres = standard_presentation(genus)
    gens = {}
    for i in range(genus):
        gens["a%d" % (i + 1)] = mats[2 * i]
        gens["b%d" % (i + 1)] = mats[2 * i + 1]
    return FuchsianRep(pres, gens)


def closed_single(genus, genus_l, ell, sign=-1):
    """Closed-surface generators whose first genus_l commutators
    multiply exactly to sign * diag(e^{ell/2}, e^{-ell/2})."""
    if genus < 2 or not 1 <= genus_l <= genus - 1:
        raise InvalidInput("invalid (genus, genus_l) = (%r, %r)"
                           % (genus, genus_l))
    if ell <= 0:
        raise InvalidInput("curve length must be positive")
    if sign not in (1, -1):
        raise InvalidInput("sign must be +1 or -1")
    B = sign * np.diag([np.exp(ell / 2), np.exp(-ell / 2)])
    mats = genus_piece(genus_l, B) + genus_piece(genus - genus_l, inv2(B))
    return mats


def closed_double(genus, h_mid, ell1, ell2):
    """Closed-surface generators with two standard separating curves of
    prescribed lengths.

    The curve after handle 1 gets length ell1 and maps to the exact
    matrix -diag(e^{ell1/2}, e^{-ell1/2}); the curve after handle
    1 + h_mid gets length ell2 (holonomy conjugate to the corresponding
    diagonal).  The middle h_mid handles sit between the two curves.
    Built from a pants with cuff traces (-2cosh(ell1/2), internal,
    -2cosh(ell2/2)) and three handle pieces.
    """
    h_rest = genus - 1 - h_mid
    if h_mid < 1 or h_rest < 1:
        raise InvalidInput("need one handle on each side of the middle block")
    if ell1 <= 0 or ell2 <= 0:
        raise InvalidInput("curve lengths must be positive")
    y_internal = -2.0 * np.cosh(1.0)
    C1, C2, C3 = pants(-2.0 * np.cosh(ell1 / 2), y_internal,
                       -2.0 * np.cosh(ell2 / 2))
    mats = genus_piece(1, C1) + genus_piece(h_mid, C2) \
        + genus_piece(h_rest, C3)
    target = -np.diag([np.exp(ell1 / 2), np.exp(-ell1 / 2)])
    P = conjugator(C1, target)
    Pi = inv2(P)
    return [P @ M @ Pi for M in mats]


def fuchsian_with_lengths(genus, genus_l, length_gamma, sign_gamma=-1):
    """Representation in which the standard separating curve after
    handle genus_l has the prescribed translation length, and maps to
    exactly sign_gamma * diag(e^{l/2}, e^{-l/2}).

    sign_gamma = -1 is the discrete case (Euler number 2g-2); the +1
    variant satisfies the same trace coordinates but is not discrete
    (a separating curve in a discrete embedding always carries the
    negative lift sign).
    """
    mats = closed_single(genus, genus_l, length_gamma, sign=sign_gamma)
    return _pairs_to_gens(mats, genus)


def fuchsian_two_curve_lengths(genus, h_mid, ell1, ell2):
    """Discrete representation with prescribed lengths on the standard
    separating curves after handle 1 and after handle 1 + h_mid; the
    first curve's holonomy is exactly diagonal."""
    return _pairs_to_gens(closed_double(genus, h_mid, ell1, ell2), genus)


# ------------------------------------------------------------- Euler number
# For g in GL+(2,R) the direction image of angle t is arg(z(t)) with
# z(t) = u cos t + v sin t, u = g11 + i g21, v = g12 + i g22.  Since
# z(t + pi) = -z(t), the argument sweep over any step < pi is < pi, so
# the principal-branch gap arg(z2/z1) is the exact sweep: no branch
# ambiguity.


def _rp1_lift(g):
    u = g[0, 0] + 1j * g[1, 0]
    v = g[0, 1] + 1j * g[1, 1]

    def h(x):
        n = max(1, int(abs(x) / (np.pi / 8)) + 1)
        ts = np.linspace(0.0, x, n + 1)
        cur = np.angle(u) % np.pi
        zprev = u
        for t in ts[1:]:
            z = u * np.cos(t) + v * np.sin(t)
            cur += np.angle(z / zprev)
            zprev = z
        return cur

    return h


def _rp1_raw(g):
    def raw(x):
        w = g @ np.array([np.cos(x), np.sin(x)])
        return np.arctan2(w[1], w[0]) % np.pi

    return raw


def _walk_word(lift_pairs, word, period, x0=0.0):
    x = x0
    for idx, sgn in reversed(word):
        h, raw_inv = lift_pairs[idx]
        if sgn > 0:
            x = h(x)
        else:
            y0 = raw_inv(x)
            k = np.round((h(y0) - x) / period)
            y = y0 - period * k
            if abs(h(y) - x) > 1e-6:
                raise ComputationError("projective lift walk lost its branch")
            x = y
    return x


def euler_number_sl2(rep):
    """Integer Euler number of a representation into SL(2,R) or
    PSL(2,R), by lifting the projective circle action.

    rep: a FuchsianRep, or any mapping of generator names to 2x2
    matrices covering some standard presentation.  The relator must
    evaluate to +-Id within 1e-6.  Sign convention: the regular-polygon
    representation of genus g returns +(2g-2).
    """
    gens = rep.generators if hasattr(rep, "generators") else dict(rep)
    genus = len(gens) // 2
    if len(gens) != 2 * genus or genus < 1:
        raise InvalidInput("generator set does not cover a surface group")
    if genus >= 2:
        rel = evaluate_word(gens, standard_presentation(genus).relator)
        dev = min(float(np.max(np.abs(rel - np.eye(2)))),
                  float(np.max(np.abs(rel + np.eye(2)))))
        if dev > 1e-6:
            raise InvalidInput("relator residue %.2e: not a representation"
                               % dev)
    mats = []
    for i in range(genus):
        for nm in ("a%d" % (i + 1), "b%d" % (i + 1)):
            if nm not in gens:
                raise InvalidInput("missing generator %r" % nm)
            M = np.asarray(gens[nm], dtype=float)
            if det2(M) <= 0:
                raise InvalidInput("generator %r not in GL+(2,R)" % nm)
            mats.append(M / np.sqrt(det2(M)))
    word = []
    for i in range(genus):
        word += [(2 * i, 1), (2 * i + 1, 1), (2 * i, -1), (2 * i + 1, -1)]
    pairs = [(_rp1_lift(M), _rp1_raw(inv2(M))) for M in mats]
    shift = _walk_word(pairs, word, np.pi) / np.pi
    e = -shift
    k = int(round(e))
    if abs(e - k) > 0.1:
        raise QuadratureError("Euler number residue %.3f too large"
                              % abs(e - k))
    return k
