"""Topological invariants of maximal representations into Sp(2n,R):
attracting Lagrangians, first and second Stiefel-Whitney classes,
Toledo number, relative Euler class, plus positivity and Anosov
diagnostics, the component classifier and the census tables.

Conventions fixed here: the reference Lagrangian is span(e_1..e_n)
with its frame orientation, separating curves are the standard words
prod_{i<=genus_l} [a_i, b_i], and the Toledo sign makes the diagonal
Fuchsian model come out at +n(g-1).
"""

import numpy as np
from scipy.linalg import schur

from .clifford import sw2_orthogonal
from .cohomology import (CohomClassF2, TorsionClassZ, admissible,
                         epsilon_twist_euler, mv_connecting, sw_tensor)
from .errors import (AnosovError, InvalidInput, InvarianceError,
                     TransversalityError)
from .fuchsian import fuchsian_from_polygon
from .models import (KAPPA, diagonal_embedding, irreducible_embedding,
                     orthogonal_catalog)
from .surface import GroupWord
from .symplectic import (Lagrangian, graph_matrix, is_transverse,
                         restrict_to_lagrangian, standard_form)
from .winding import adaptive_winding, complex_linear_det, winding_number

ANOSOV_GAP_TOL = 1e-6


# ------------------------------------------------------ attracting subspaces


class AttractingData:
    """Attracting/repelling Lagrangian pair of a proximal symplectic
    matrix, with the eigenvalue-modulus gap certifying proximality."""

    def __init__(self, lagrangian, repelling, gap, word=None):
        self.lagrangian = lagrangian
        self.repelling = repelling
        self.gap = float(gap)
        self.word = word

    def __repr__(self):
        return "AttractingData(gap=%.6g)" % self.gap


def _dominant_subspace(M, n, threshold):
    """Orthonormal frame of the invariant subspace for the n
    eigenvalues of largest modulus, from an ordered real Schur
    decomposition.  Power iteration is hopeless here: random words can
    have modulus gaps within a factor 1.0001 of one."""
    _, Z, sdim = schur(np.asarray(M, dtype=float), output="real",
                       sort=lambda re, im: np.hypot(re, im) > threshold)
    if sdim != n:
        raise AnosovError("modulus split selected %d of %d directions; "
                          "the gap is ambiguous under rounding" % (sdim, n))
    return Z[:, :n]


def attracting_lagrangian(g, gap_tol=ANOSOV_GAP_TOL):
    """Attracting and repelling Lagrangians of a proximal symplectic
    matrix, certified invariant and mutually transverse."""
    g = np.asarray(g, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] % 2:
        raise InvalidInput("expected an even square matrix, got shape %r"
                           % (g.shape,))
    n = g.shape[0] // 2
    moduli = np.sort(np.abs(np.linalg.eigvals(g)))[::-1]
    if moduli[n] < 1e-300 or moduli[n - 1] / moduli[n] <= 1.0 + gap_tol:
        raise AnosovError("eigenvalue moduli do not split %d:%d "
                          "(gap %.3e)" % (n, n, moduli[n - 1] / max(moduli[n], 1e-300)))
    gap = moduli[n - 1] / moduli[n]
    # symplectic inverse J^T g^T J: long words overflow the numerical
    # inverse long before the modulus split degrades
    J = standard_form(n)
    ginv = J.T @ g.T @ J
    threshold = float(np.sqrt(moduli[n - 1] * moduli[n]))
    att = Lagrangian(_dominant_subspace(g, n, threshold))
    rep = Lagrangian(_dominant_subspace(ginv, n, 1.0 / threshold))
    restrict_to_lagrangian(g, att)
    restrict_to_lagrangian(ginv, rep)
    if not is_transverse(att, rep):
        raise AnosovError("attracting and repelling subspaces meet")
    return AttractingData(att, rep, gap)


# -------------------------------------------------------- sw1, sw2, reports


def sw1(rep):
    """First Stiefel-Whitney class from the determinant signs of the
    generator holonomies on their attracting Lagrangians; the fiber
    bit is n mod 2."""
    if rep.family != "Sp2n":
        raise InvalidInput("sw1 is computed for Sp(2n,R) representations")
    bits = []
    for name in rep.presentation.generators:
        M = rep.generators[name]
        data = attracting_lagrangian(M)
        R = restrict_to_lagrangian(M, data.lagrangian)
        bits.append(1 if np.linalg.det(R) < 0 else 0)
    return CohomClassF2(rep.genus, 1, bits, fiber_bit=rep.n % 2)


def sw2(rep):
    """Second Stiefel-Whitney class, dispatched on the model metadata.

    irr and diagonal models use the closed form n(n-1)/2 (g-1);
    twisted models tensor the spin class of the Fuchsian factor with
    the orthogonal factor's (sw1, sw2), the latter recomputed from the
    catalog data through actual Pin(n) lifts; hybrids (n = 2) reduce to
    the relative Euler class mod 2; a central twist by -1 shifts by
    g-1.  Without model metadata the class is not computed.
    """
    meta = rep.metadata
    g, n = rep.genus, rep.n
    shift = 0
    if meta.get("tag") == "epsilon-twist":
        if meta["eps_minus1"] == -1:
            shift = (g - 1) % 2
        meta = meta["base"]
    tag = meta.get("tag")
    if tag in ("hybrid", "amalgam"):
        if n != 2:
            raise InvalidInput("hybrid sw2 is defined for Sp(4,R)")
        # euler_relative already accounts for any central twist
        return euler_relative(rep).value % 2
    if tag in ("irr", "diagonal"):
        val = (n * (n - 1) // 2) * (g - 1) % 2
    elif tag == "twisted":
        th = meta.get("theta", {})
        if "alpha" not in th or "beta" not in th:
            raise InvalidInput("twisted sw2 needs catalog metadata on the "
                               "orthogonal factor")
        theta = orthogonal_catalog(th["alpha"], th["beta"], th["n"], genus=g)
        spin = CohomClassF2(g, 1, meta["iota_bits"], fiber_bit=1)
        det_bits = [1 if np.linalg.det(theta.generators[nm]) < 0 else 0
                    for nm in theta.presentation.generators]
        sw1_w = CohomClassF2(g, 1, det_bits, fiber_bit=0)
        sw2_w = sw2_orthogonal(theta)
        _, out = sw_tensor(spin, (sw1_w, sw2_w), n)
        val = out.surface_bit
    else:
        raise InvalidInput("sw2 needs model metadata (irr, diagonal, "
                           "twisted or hybrid)")
    return (val + shift) % 2


# ------------------------------------------------------------ Toledo number


class _PolarPath:
    """Path t -> U^t P^t from the identity to M = U P, geodesic in the
    unitary factor and log-linear in the positive factor.  Evaluating
    on an array of parameters returns the stacked matrices."""

    def __init__(self, M):
        M = np.asarray(M, dtype=float)
        m = M.shape[0] // 2
        W, sv, Vt = np.linalg.svd(M)
        U = W @ Vt
        u = U[:m, :m] - 1j * U[:m, m:]
        evals, evecs = np.linalg.eig(u)
        self.phases = np.angle(evals)
        self.V = evecs
        self.Vinv = np.linalg.inv(evecs)
        P = Vt.T @ (sv[:, None] * Vt)
        lam, Q = np.linalg.eigh(P)
        self.loglam = np.log(lam)
        self.Q = Q
        self.m = m

    def _unitary(self, ss):
        m = self.m
        u = (self.V * np.exp(1j * np.outer(ss, self.phases))[:, None, :]) \
            @ self.Vinv
        out = np.empty((len(ss), 2 * m, 2 * m))
        out[:, :m, :m] = u.real
        out[:, :m, m:] = -u.imag
        out[:, m:, :m] = u.imag
        out[:, m:, m:] = u.real
        return out

    def _positive(self, ss):
        return (self.Q * np.exp(np.outer(ss, self.loglam))[:, None, :]) \
            @ self.Q.T

    def __call__(self, s, sign=1):
        s = np.asarray(s, dtype=float)
        scalar = s.ndim == 0
        ss = s.reshape(-1)
        if sign >= 0:
            out = self._unitary(ss) @ self._positive(ss)
        else:
            # (U P)^-1 = P^-1 U^T from the stored spectral data; the
            # worst generators are too ill-conditioned for a numerical
            # inverse of the sampled matrices
            out = self._positive(-ss) @ \
                self._unitary(ss).transpose(0, 2, 1)
        return out[0] if scalar else out


class _LinearPath:
    """Straight-line matrix path, used to close the relator loop from
    the letterwise endpoint (identity plus storage rounding drift)
    back to the exact identity."""

    def __init__(self, start, end):
        self.start = np.asarray(start, dtype=float)
        self.step = np.asarray(end, dtype=float) - self.start

    def __call__(self, s, sign=1):
        s = np.asarray(s, dtype=float)
        if s.ndim == 0:
            return self.start + s * self.step
        return self.start + s.reshape(-1, 1, 1) * self.step


def _extended_inverse(M):
    """Gauss-Jordan inverse in extended precision.  LAPACK only works
    in double, and for the worst hybrid generators the double-precision
    compounding along the relator word is an order of magnitude above
    the storage rounding floor of the generators themselves."""
    n = M.shape[0]
    A = np.hstack([M.astype(np.longdouble), np.eye(n, dtype=np.longdouble)])
    for col in range(n):
        p = col + int(np.argmax(np.abs(A[col:, col])))
        if p != col:
            A[[col, p]] = A[[p, col]]
        A[col] /= A[col, col]
        for r in range(n):
            if r != col:
                A[r] -= A[r, col] * A[col]
    return A[:, n:]


def toledo(rep, n_max=2 ** 20):
    """Toledo number: minus the winding of the complex-linear
    determinant along the relator loop built from polar paths of the
    generator images.  The sign is calibrated so the diagonal Fuchsian
    model returns +n(g-1).

    Inverse letters travel backwards along the forward letter's own
    path (pointwise matrix inverse).  This matters: each generator
    appears once plain and once inverted in the relator, so path
    choices cancel in pairs only when the inverse letter retraces the
    same lift, and the winding is then independent of how the letter
    paths were picked.
    """
    if rep.family != "Sp2n":
        raise InvalidInput("Toledo number is computed for Sp(2n,R)")
    if rep.relator_residue > 1e-6:
        raise InvalidInput("relator residue %.2e: representation does not "
                           "close" % rep.relator_residue)
    paths = {name: _PolarPath(M) for name, M in rep.generators.items()}
    steps = {name: M.astype(np.longdouble)
             for name, M in rep.generators.items()}
    inv_steps = {name: _extended_inverse(M)
                 for name, M in rep.generators.items()}
    segments = []
    prefix = np.eye(2 * rep.n, dtype=np.longdouble)
    for name, sign in rep.presentation.relator.letters:
        segments.append((prefix.astype(float), paths[name], sign))
        prefix = prefix @ (inv_steps[name] if sign < 0 else steps[name])
    # letterwise evaluation of the full relator lands near, not at, the
    # identity (true closure was certified at construction); a short
    # straight segment closes the loop without affecting the winding
    end = prefix.astype(float)
    drift = float(np.max(np.abs(end - np.eye(2 * rep.n))))
    if drift > 0.5:
        raise InvalidInput("letterwise relator drift %.2f is too large to "
                           "close the loop" % drift)
    segments.append((np.eye(2 * rep.n), _LinearPath(end, np.eye(2 * rep.n)),
                     1))
    L = len(segments)

    def phase(ts):
        x = np.asarray(ts, dtype=float) * L
        j = np.minimum(x.astype(int), L - 1)
        zs = np.empty(len(x), dtype=complex)
        for k in range(L):
            mask = j == k
            if not mask.any():
                continue
            pre, path, sign = segments[k]
            zs[mask] = complex_linear_det(pre @ path(x[mask] - k, sign))
        return zs

    w = adaptive_winding(phase, n_start=max(256, 32 * L), n_max=n_max)
    return -w


# ----------------------------------------------------- relative Euler class


def side_loop_winding(side, samples=256):
    """Winding over a half turn of the twisting circle of the inverse
    Lagrangian block N(theta)^-1 in the factorization of
    phi_diag(R(theta))^-1 (side model)(R(theta)) through a unipotent
    times a block-triangular symplectic matrix.  This is the per-side
    fiber-class contribution: +1 for the irreducible side, 0 for the
    diagonal side, -1 for the sign-adjusted irreducible side."""
    loop = []
    for theta in np.linspace(0.0, np.pi, samples + 1):
        c, s = np.cos(theta), np.sin(theta)
        R = np.array([[c, -s], [s, c]])
        Rinv = np.array([[c, s], [-s, c]])
        if side in ("diag", "diagonal"):
            S = diagonal_embedding(2, R)
        elif side == "irr":
            S = irreducible_embedding(2, R)
        elif side == "irr_adj":
            S = KAPPA @ irreducible_embedding(2, R) @ KAPPA
        else:
            raise InvalidInput("unknown side model %r" % (side,))
        G = diagonal_embedding(2, Rinv) @ S
        N = G[:2, :2]
        Ninv = np.linalg.inv(N)
        Msym = G[2:, :2] @ Ninv
        if np.max(np.abs(Msym - Msym.T)) > 1e-8:
            raise TransversalityError(
                "trivialization change is not a Lagrangian graph at "
                "theta=%.4f" % theta)
        resid = np.max(np.abs(G[2:, 2:] - Msym @ G[:2, 2:] - Ninv.T))
        if resid > 1e-8:
            raise TransversalityError(
                "block factorization failed at theta=%.4f (residue %.2e)"
                % (theta, resid))
        loop.append(Ninv)
    return winding_number(loop)


def euler_relative(rep, dec=None):
    """Relative Euler class in the torsion of the integral H^2 of the
    unit tangent bundle, measured against the standard reference
    Lagrangian span(e_1, e_2) and the standard separating words.

    Representations without gluing curves in their metadata (the
    diagonal, irreducible and SO-twisted full-surface models) sit in
    the reference component, value g-1.  Each gluing curve contributes
    its side windings through the Mayer-Vietoris connecting map; a
    central twist by -1 shifts the total by g-1.
    """
    if rep.family != "Sp2n" or rep.n != 2:
        raise InvalidInput("relative Euler class is defined for Sp(4,R)")
    meta = rep.metadata
    eps = 1
    if meta.get("tag") == "epsilon-twist":
        eps = meta["eps_minus1"]
        meta = meta["base"]
    if not sw1(rep).is_zero():
        raise InvalidInput("relative Euler class needs sw1 = 0")
    g = rep.genus
    if dec is not None and dec.genus != g:
        raise InvalidInput("decomposition genus %d does not match %d"
                           % (dec.genus, g))
    total = TorsionClassZ(g, g - 1)
    for curve in meta.get("curves", ()):
        s = side_loop_winding(curve["left"]) - side_loop_winding(curve["right"])
        total = total + mv_connecting((s, 0), g, curve["genus_l"])
    return epsilon_twist_euler(total, eps)


# ------------------------------------------------- classifier and the census


def _sp_count(n, genus):
    if n == 2:
        return 3 * 2 ** (2 * genus) + 2 * genus - 4
    if n >= 3:
        return 3 * 2 ** (2 * genus)
    raise InvalidInput("component counts need n >= 2")


def _mcg_count(n, genus):
    return 6 if n >= 3 else 2 * genus + 2


def census(n, genus, variant="sp", k=None, center_order=None,
           criterion_holds=True):
    """Component count tables: plain Sp(2n,R), its cyclic k-covers,
    PSp(2n,R), and covers of the Hitchin component with center of the
    given order (the lifting criterion is passed in as a boolean since
    it depends on divisibility data of the cover)."""
    if not isinstance(genus, (int, np.integer)) or genus < 2:
        raise InvalidInput("genus must be an integer >= 2")
    v = str(variant).replace("_", "-").lower()
    out = {"variant": v, "n": int(n), "genus": int(genus)}
    if v == "sp":
        out["count"] = _sp_count(n, genus)
        out["mcg_classes"] = _mcg_count(n, genus)
    elif v in ("sp-cover", "sp-k"):
        if k is None or int(k) < 1:
            raise InvalidInput("sp-cover needs k >= 1")
        k = int(k)
        out["k"] = k
        if (n * (genus - 1)) % k:
            out["count"] = 0
        else:
            out["count"] = k ** (2 * genus) * _sp_count(n, genus)
    elif v == "psp":
        if n == 2:
            out["count"] = 2 ** (2 * genus) + 2 * genus - 2
        elif n % 2:
            out["count"] = 3
        else:
            out["count"] = 2 ** (2 * genus) + 2
    elif v == "hitchin-cover":
        if center_order is None or int(center_order) < 1:
            raise InvalidInput("hitchin-cover needs the center order")
        out["center_order"] = int(center_order)
        out["count"] = (int(center_order) ** (2 * genus)
                        if criterion_holds else 0)
    else:
        raise InvalidInput("unknown census variant %r" % (variant,))
    return out


def classify_component(report, n, genus):
    """Component descriptor from an invariant report, with the global
    and mapping-class-group-quotient counts.

    n >= 3 components are keyed by (sw1, sw2); for n = 2 the key is
    (sw1, sw2) when sw1 is nonzero and the relative Euler value when
    sw1 vanishes.  The Hitchin flag marks the reference component of
    the irreducible model."""
    s1 = report["sw1"]
    if s1.genus != genus:
        raise InvalidInput("report genus %d does not match %d"
                           % (s1.genus, genus))
    s2 = report.get("sw2")
    e = report.get("euler")
    tag = report.get("tag")
    if s2 is not None and not admissible(s1, s2, n):
        raise InvalidInput("inconsistent report: (sw1, sw2) not admissible")
    surface_zero = not any(s1.surface_bits)
    if n >= 3:
        if s2 is None:
            raise InvalidInput("n >= 3 classification needs sw2")
        desc = "sw1=%s|%d;sw2=%d" % ("".join(map(str, s1.surface_bits)),
                                     s1.fiber_bit, s2)
        hitchin = surface_zero and tag == "irr"
    elif n == 2:
        if surface_zero:
            if e is None:
                raise InvalidInput("n = 2, sw1 = 0 classification needs the "
                                   "relative Euler class")
            desc = "euler=%d" % e.value
            hitchin = (e.value == genus - 1) and tag == "irr"
        else:
            if s2 is None:
                raise InvalidInput("n = 2, sw1 != 0 classification needs sw2")
            desc = "sw1=%s|%d;sw2=%d" % ("".join(map(str, s1.surface_bits)),
                                         s1.fiber_bit, s2)
            hitchin = False
    else:
        raise InvalidInput("classification needs n >= 2")
    return {"component": desc, "hitchin": hitchin,
            "total_components": _sp_count(n, genus),
            "mcg_components": _mcg_count(n, genus)}


# -------------------------------------------- positivity and Anosov checks


def _as_word(word):
    if isinstance(word, GroupWord):
        return word
    return GroupWord.parse(word)


def _boundary_angle(A):
    """Attracting fixed point of a hyperbolic 2x2 matrix as an angle on
    the boundary circle (x -> 2 atan x, with infinity at pi)."""
    A = np.asarray(A, dtype=float)
    tr = A[0, 0] + A[1, 1]
    if abs(tr) <= 2.0 + 1e-12:
        raise AnosovError("word image is not hyperbolic (trace %.4f)" % tr)
    evals, evecs = np.linalg.eig(A)
    v = evecs[:, int(np.argmax(np.abs(evals)))]
    return float(2.0 * np.arctan2(v[0], v[1])) % (2.0 * np.pi)


def reference_ordered(words, iota=None, genus=None):
    """Attracting-fixed-point angles of the words under the reference
    Fuchsian group, with a degeneracy check; returns (angles, positively
    ordered flag)."""
    if iota is None:
        iota = fuchsian_from_polygon(genus)
    ws = [_as_word(w) for w in words]
    angles = [_boundary_angle(iota(w)) for w in ws]
    two_pi = 2.0 * np.pi
    for i in range(len(angles)):
        for j in range(i + 1, len(angles)):
            d = abs(angles[i] - angles[j]) % two_pi
            if min(d, two_pi - d) < 1e-8:
                raise InvalidInput("degenerate sample: words %s and %s share "
                                   "a fixed point" % (ws[i], ws[j]))
    if len(angles) == 3:
        d1 = (angles[1] - angles[0]) % two_pi
        d2 = (angles[2] - angles[0]) % two_pi
        return angles, bool(d1 < d2)
    return angles, True


def check_positivity_sample(rep, words, iota=None):
    """Positivity of the attracting-Lagrangian triple over three words
    whose reference fixed points are cyclically positively ordered.
    Returns the minimal eigenvalue margin of the graph form."""
    ws = [_as_word(w) for w in words]
    if len(ws) != 3:
        raise InvalidInput("positivity samples take exactly three words")
    _, positive_order = reference_ordered(ws, iota=iota, genus=rep.genus)
    if not positive_order:
        ws = ws[::-1]
    lags = [attracting_lagrangian(rep(w)).lagrangian for w in ws]
    M = graph_matrix(lags[2], lags[1], lags[0])
    evals = np.linalg.eigvalsh(M)
    if float(np.min(np.abs(evals))) < 1e-12 * float(np.max(np.abs(evals))):
        raise InvalidInput("degenerate sample: graph form spans too many "
                           "orders of magnitude to certify a sign")
    margin = float(np.min(evals))
    return {"positive": margin > 0.0, "margin": margin}


def _random_words(presentation, rng, length):
    names = list(presentation.generators)
    letters = []
    for _ in range(length):
        letters.append((names[rng.integers(len(names))],
                        1 if rng.random() < 0.5 else -1))
    return GroupWord(letters)


def positivity_suite(rep, samples=50, seed=0, max_length=3):
    """Sample random word triples (distinct reference fixed points,
    hyperbolic images) and check positivity; returns pass count and the
    worst margin."""
    rng = np.random.default_rng(seed)
    iota = fuchsian_from_polygon(rep.genus)
    results = []
    while len(results) < samples:
        ws = [_random_words(rep.presentation, rng,
                            int(rng.integers(1, max_length + 1)))
              for _ in range(3)]
        try:
            res = check_positivity_sample(rep, ws, iota=iota)
        except (InvalidInput, AnosovError, TransversalityError):
            # shared fixed points, non-hyperbolic images or numerically
            # tangent Lagrangians: resample rather than fail the suite
            continue
        results.append(res)
    worst = min(r["margin"] for r in results)
    return {"samples": len(results),
            "passed": sum(1 for r in results if r["positive"]),
            "worst_margin": worst}


def holonomy_type(g, tol=1e-6):
    """Spectral type of a proximal holonomy on its attracting
    Lagrangian: regular-semisimple, has-elliptic-part,
    has-parabolic-part, or mixed."""
    data = attracting_lagrangian(g)
    A = restrict_to_lagrangian(np.asarray(g, dtype=float), data.lagrangian)
    evals = np.linalg.eigvals(A)
    scale = max(1.0, float(np.max(np.abs(evals))))
    elliptic = bool(np.any(np.abs(evals.imag) > tol * scale))
    parabolic = False
    reals = sorted(ev.real for ev in evals if abs(ev.imag) <= tol * scale)
    i = 0
    while i < len(reals):
        j = i
        while j + 1 < len(reals) and reals[j + 1] - reals[i] <= tol * scale:
            j += 1
        mult = j - i + 1
        if mult > 1:
            lam = sum(reals[i:j + 1]) / mult
            sv = np.linalg.svd(A - lam * np.eye(A.shape[0]), compute_uv=False)
            nullity = int(np.sum(sv <= tol * scale))
            if nullity < mult:
                parabolic = True
        i = j + 1
    if elliptic and parabolic:
        return "mixed"
    if parabolic:
        return "has-parabolic-part"
    if elliptic:
        return "has-elliptic-part"
    return "regular-semisimple"


def verify_anosov_eigen(rep, words):
    """Per-word check that every eigenvalue modulus of the attracting
    restriction exceeds one; failures are reported, not raised."""
    results = []
    for w in words:
        w = _as_word(w)
        entry = {"word": str(w)}
        try:
            M = rep(w)
            data = attracting_lagrangian(M)
            A = restrict_to_lagrangian(M, data.lagrangian)
            margin = float(np.min(np.abs(np.linalg.eigvals(A))) - 1.0)
            entry["margin"] = margin
            entry["ok"] = margin > 0.0
        except (AnosovError, InvarianceError, InvalidInput) as exc:
            entry["ok"] = False
            entry["error"] = str(exc)
        results.append(entry)
    return {"all_pass": all(e["ok"] for e in results), "results": results}


def eigen_suite(rep, samples=20, seed=0, max_length=6):
    """Random-word Anosov eigenvalue check used by the verification
    CLI."""
    rng = np.random.default_rng(seed)
    words = []
    while len(words) < samples:
        w = _random_words(rep.presentation, rng,
                          int(rng.integers(1, max_length + 1)))
        if len(w) > 0:
            words.append(w)
    return verify_anosov_eigen(rep, words)


# -------------------------------------------------------------- full report


def invariant_report(rep, with_euler=True):
    """Collect the invariants of a model representation into a plain
    dict (class objects, not serialized)."""
    report = {"tag": rep.tag, "genus": rep.genus, "n": rep.n}
    report["sw1"] = sw1(rep)
    try:
        report["sw2"] = sw2(rep)
    except InvalidInput:
        report["sw2"] = None
    report["toledo"] = toledo(rep)
    report["euler"] = None
    if with_euler and rep.n == 2 and report["sw1"].is_zero():
        try:
            report["euler"] = euler_relative(rep)
        except InvalidInput:
            report["euler"] = None
    return report
