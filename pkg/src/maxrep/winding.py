"""Winding numbers of matrix loops via polar decomposition.

A loop in GL+(2,R) has a well-defined rotation part (the orthogonal
factor of the polar decomposition); its accumulated angle divided by
2 pi is the winding number.  For loops of symplectic matrices the same
role is played by the complex determinant of the unitary polar factor.
Every extraction is certified: consecutive angle steps must stay below
a threshold and the total must sit close to an integer, otherwise the
loop is refused as under-sampled.
"""

import numpy as np

from .errors import InvalidInput, QuadratureError

TWO_PI = 2.0 * np.pi


def rotation_angle(M):
    """Polar-rotation angle of a 2x2 matrix with det > 0.

    For M = R(theta) P with P positive definite, returns theta in
    (-pi, pi].  Both atan2 arguments are trace(P)-multiples of
    (sin theta, cos theta), so they never vanish simultaneously.
    """
    M = np.asarray(M, dtype=float)
    if M.shape != (2, 2):
        raise InvalidInput("expected a 2x2 matrix, got shape %r" % (M.shape,))
    if M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] <= 0:
        raise InvalidInput("matrix is not in GL+(2,R)")
    return float(np.arctan2(M[1, 0] - M[0, 1], M[0, 0] + M[1, 1]))


def unitary_part(M):
    """Orthogonal polar factor of a symplectic matrix, as an n x n
    complex unitary.

    The polar factor of a symplectic matrix lies in the intersection
    with the orthogonal group and has block form [[A, B], [-B, A]];
    the corresponding unitary is A - iB.
    """
    M = np.asarray(M, dtype=float)
    m = M.shape[0] // 2
    W, _, Vt = np.linalg.svd(M)
    Q = W @ Vt
    A = Q[:m, :m]
    B = Q[:m, m:]
    return A - 1j * B


def unitary_det(M):
    """Complex determinant of the unitary polar factor (a point on the
    unit circle)."""
    return complex(np.linalg.det(unitary_part(M)))


def complex_linear_det(M):
    """det of the complex-linear part (A + D)/2 + i (C - B)/2 of a
    symplectic matrix with n x n blocks [[A, B], [C, D]].

    Nonzero on all of Sp(2n,R), and equal to det(A - iB) on the
    orthogonal subgroup, so loops wind exactly as the determinant of
    the unitary polar factor does.  Unlike the polar route this needs
    no SVD and its conditioning grows like |M| instead of |M|^2, which
    is what keeps long word loops certifiable.

    Accepts a stack of matrices (..., 2m, 2m) and returns a matching
    stack of determinants.
    """
    M = np.asarray(M, dtype=float)
    m = M.shape[-1] // 2
    A, B = M[..., :m, :m], M[..., :m, m:]
    C, D = M[..., m:, :m], M[..., m:, m:]
    dets = np.linalg.det(0.5 * (A + D) + 0.5j * (C - B))
    return complex(dets) if dets.ndim == 0 else dets


def angle_steps(angles):
    """Consecutive differences of a sequence of angles, wrapped to
    (-pi, pi]."""
    d = np.diff(np.asarray(angles, dtype=float))
    return (d + np.pi) % TWO_PI - np.pi


def _certified_turns(angles, max_step, residue_tol, context):
    steps = angle_steps(angles)
    worst = float(np.max(np.abs(steps))) if len(steps) else 0.0
    if worst >= max_step:
        raise QuadratureError(
            "%s: under-sampled (max angle step %.4f >= %.4f)"
            % (context, worst, max_step))
    turns = float(np.sum(steps)) / TWO_PI
    k = int(round(turns))
    if abs(turns - k) > residue_tol:
        raise QuadratureError(
            "%s: winding residue %.4f exceeds %.3f"
            % (context, abs(turns - k), residue_tol))
    return k


def winding_number(loop, close_tol=1e-8, max_step=0.5 * np.pi,
                   residue_tol=0.1):
    """Winding number of a sampled closed loop of GL+(2,R) matrices.

    The first and last samples must agree within close_tol; the
    rotation angle may not jump by max_step or more between samples.
    """
    mats = [np.asarray(M, dtype=float) for M in loop]
    if len(mats) < 3:
        raise InvalidInput("need at least 3 samples, got %d" % len(mats))
    if float(np.max(np.abs(mats[0] - mats[-1]))) > close_tol:
        raise InvalidInput("loop is not closed (ends differ by %.2e)"
                           % float(np.max(np.abs(mats[0] - mats[-1]))))
    angles = [rotation_angle(M) for M in mats]
    return _certified_turns(angles, max_step, residue_tol, "matrix loop")


def winding_of_phases(zs, close_tol=1e-8, max_step=0.5 * np.pi,
                      residue_tol=0.1):
    """Winding number of a sampled closed loop in C minus the origin."""
    zs = np.asarray(zs, dtype=complex)
    if len(zs) < 3:
        raise InvalidInput("need at least 3 samples, got %d" % len(zs))
    if np.min(np.abs(zs)) < 1e-12:
        raise InvalidInput("loop passes through the origin")
    if abs(zs[0] - zs[-1]) > close_tol * max(1.0, abs(zs[0])):
        raise InvalidInput("loop is not closed")
    return _certified_turns(np.angle(zs), max_step, residue_tol, "phase loop")


def adaptive_winding(f, n_start=256, n_max=2 ** 20, max_step=0.25 * np.pi,
                     residue_tol=0.1, close_tol=1e-8):
    """Winding of t -> f(t) in C*, t in [0, 1], f(0) = f(1).

    f is vectorized: it gets a 1-d array of parameters and returns the
    matching array of nonzero complex values.  Starts from a uniform
    grid and bisects every interval whose angle step reaches max_step;
    refinement is local because the loops this is used on have isolated
    narrow fast sweeps (products passing close to a unit singular
    pair), and uniform doubling would need astronomically many samples
    to resolve those.  Gives up past n_max total samples, or when an
    offending interval has shrunk to the machine floor, which signals
    an actual jump rather than a fast sweep.
    """
    ts = np.linspace(0.0, 1.0, int(n_start) + 1)
    zs = np.asarray(f(ts), dtype=complex)
    while True:
        steps = angle_steps(np.angle(zs))
        bad = np.nonzero(np.abs(steps) >= max_step)[0]
        if len(bad) == 0:
            break
        widths = ts[bad + 1] - ts[bad]
        if float(np.min(widths)) < 1e-14:
            k = bad[int(np.argmin(widths))]
            raise QuadratureError(
                "phase loop: jump of %.4f at t=%.12f does not resolve "
                "under refinement" % (abs(steps[k]), ts[k]))
        if len(ts) + len(bad) > n_max:
            raise QuadratureError(
                "phase loop: %d samples exceed the budget of %d"
                % (len(ts) + len(bad), int(n_max)))
        mids = 0.5 * (ts[bad] + ts[bad + 1])
        zm = np.asarray(f(mids), dtype=complex)
        ts = np.insert(ts, bad + 1, mids)
        zs = np.insert(zs, bad + 1, zm)
    return winding_of_phases(zs, close_tol=close_tol, max_step=max_step,
                             residue_tol=residue_tol)
