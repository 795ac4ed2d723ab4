"""Correspondences between null geometry in 6-space and isotropic spinor
subspaces.

A null 6-vector x acts as an antilinear operator with a 2-dimensional
kernel; that kernel is a maximal totally isotropic spinor plane, and the
assignment is a bijection onto such planes.  A maximal (2-dimensional)
Q-isotropic plane in 6-space determines an isotropic spinor *line* as the
image of the composite of its two basis operators, and conversely a spinor
line v determines the plane of all x whose operator annihilates v.  The
idempotent composites built from a null vector and a partner (normalized
so the pairing is 1/2 -- the value that actually makes x.y and y.x
idempotent) serve as executable cross-checks throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import GAMMA, compose, x_matrix
from .errors import NotIsotropicSpinor, NotNull, RankFailure, ZeroVector
from .forms import (
    DEFAULT_TOL,
    Q_DIAG,
    as_spinor,
    as_vec6,
    g_form,
    is_null,
    projectivize,
    q_bilinear,
    q_form,
)


@dataclass(frozen=True)
class SpinorPlane:
    """Two independent spinors spanning a totally isotropic plane."""

    b1: np.ndarray
    b2: np.ndarray


@dataclass(frozen=True)
class SpinorLine:
    """An isotropic spinor modulo complex scale."""

    rep: np.ndarray


@dataclass(frozen=True)
class IsotropicPlaneE:
    """Two independent 6-vectors spanning a maximal Q-isotropic plane."""

    x1: np.ndarray
    x2: np.ndarray


def spinor_line(v, tol: float = DEFAULT_TOL) -> SpinorLine:
    """Validate and canonicalize an isotropic spinor representative
    (largest-magnitude component scaled to 1)."""
    v = as_spinor(v)
    n2 = float(np.real(np.vdot(v, v)))
    if n2 <= tol:
        raise ZeroVector("spinor line needs a nonzero representative")
    if abs(g_form(v, v)) > tol * n2:
        raise NotIsotropicSpinor(f"(v|v) = {g_form(v, v):g} is not zero")
    k = int(np.argmax(np.abs(v)))
    return SpinorLine(v / v[k])


def isotropic_plane(x1, x2, tol: float = DEFAULT_TOL) -> IsotropicPlaneE:
    """Validate a totally isotropic plane given by two basis vectors."""
    x1 = as_vec6(x1)
    x2 = as_vec6(x2)
    scale = float(np.linalg.norm(x1) * np.linalg.norm(x2))
    if scale <= tol:
        raise ZeroVector("isotropic plane needs nonzero basis vectors")
    s = np.linalg.svd(np.vstack([x1, x2]), compute_uv=False)
    if s[1] <= tol * s[0]:
        raise RankFailure("basis vectors are linearly dependent")
    for val in (q_form(x1), q_form(x2), q_bilinear(x1, x2)):
        if abs(val) > tol * scale:
            raise NotNull(f"plane is not totally isotropic (pairing {val:g})")
    return IsotropicPlaneE(x1, x2)


def partner_null_vector(x, tol: float = DEFAULT_TOL) -> np.ndarray:
    """A second null vector y with (x, y) = 1/2 exactly.

    Deterministic choice: take z = e_beta with beta the first index
    maximizing |(x, e_beta)|, then y = z / (2(x,z)) - (z,z) x / (4(x,z)^2).
    The pairing value 1/2 is what makes the composite operators of x and y
    idempotent.
    """
    x = as_vec6(x)
    if float(np.linalg.norm(x)) <= tol:
        raise ZeroVector("partner of the zero vector is undefined")
    if not is_null(x, tol):
        raise NotNull(f"Q(x) = {q_form(x):g} is not null")
    beta = int(np.argmax(np.abs(x)))
    z = np.zeros(6)
    z[beta] = 1.0
    xz = q_bilinear(x, z)
    return z / (2.0 * xz) - q_form(z) * x / (4.0 * xz * xz)


def _antilinear_kernel(x, tol: float) -> np.ndarray:
    """Basis (rows) of the kernel of the antilinear operator of a null x.

    The matrix null space of X consists of vectors v with X v = 0; the
    antilinear kernel is its conjugate, {u : X conj(u) = 0}, which is why
    the rows of vh are used *without* conjugation.
    """
    xm = x_matrix(x).m
    _, s, vh = np.linalg.svd(xm)
    small = s <= tol * s[0]
    if int(np.sum(small)) != 2:
        raise RankFailure(
            f"kernel dimension {int(np.sum(small))} != 2; input is not cleanly null"
        )
    return vh[2:]


def null_to_spinor_plane(x, tol: float = DEFAULT_TOL) -> SpinorPlane:
    """Kernel plane of the antilinear operator of a null vector; scale
    invariant, and totally isotropic for the spinor form."""
    x = as_vec6(x)
    if float(np.linalg.norm(x)) <= tol:
        raise ZeroVector("null_to_spinor_plane needs a nonzero vector")
    if not is_null(x, tol):
        raise NotNull(f"Q(x) = {q_form(x):g} is not null")
    # for anything past the nullity gate the two kernel singular values sit
    # orders of magnitude below the top pair, so a loose threshold is safe
    ker = _antilinear_kernel(x / np.linalg.norm(x), 1e-6)
    return SpinorPlane(ker[0], ker[1])


def plane_to_spinor_line(n: IsotropicPlaneE, tol: float = DEFAULT_TOL) -> SpinorLine:
    """Image line of the composite operator of the plane's basis pair.

    The composite X(x1) . conj(X(x2)) of a totally isotropic pair has rank
    exactly 1, and changing the basis rescales the operator by the change
    determinant, so the image line is an invariant of the plane.
    """
    m = compose(x_matrix(n.x1), x_matrix(n.x2)).m
    u, s, _ = np.linalg.svd(m)
    if s[0] <= tol or s[1] > max(tol, 1e-9) * s[0]:
        raise RankFailure(
            f"composite operator rank is not 1 (singular values {s[:2]})"
        )
    return spinor_line(u[:, 0], tol)


def spinor_line_to_plane(v, tol: float = DEFAULT_TOL) -> IsotropicPlaneE:
    """All x whose antilinear operator annihilates the given isotropic
    spinor: 8 real equations in the 6 real coefficients, with a solution
    space of dimension exactly 2."""
    if isinstance(v, SpinorLine):
        v = v.rep
    v = as_spinor(v)
    n2 = float(np.real(np.vdot(v, v)))
    if n2 <= tol:
        raise ZeroVector("spinor line needs a nonzero representative")
    if abs(g_form(v, v)) > tol * n2:
        raise NotIsotropicSpinor(f"(v|v) = {g_form(v, v):g} is not zero")
    cols = np.stack([GAMMA[a] @ np.conj(v) for a in range(6)], axis=1)
    system = np.vstack([np.real(cols), np.imag(cols)])
    _, s, vh = np.linalg.svd(system)
    small = int(np.sum(s <= max(tol, 1e-9) * s[0]))
    if small != 2:
        raise RankFailure(f"solution space dimension {small} != 2")
    return isotropic_plane(vh[4], vh[5], max(tol, 1e-8))


def plane_from_spinor_plane(p: SpinorPlane, tol: float = DEFAULT_TOL):
    """The unique projective null class whose operator kernel is the given
    isotropic spinor plane (inverse of null_to_spinor_plane)."""
    blocks = []
    for b in (p.b1, p.b2):
        b = as_spinor(b)
        cols = np.stack([GAMMA[a] @ np.conj(b) for a in range(6)], axis=1)
        blocks.append(np.real(cols))
        blocks.append(np.imag(cols))
    system = np.vstack(blocks)
    _, s, vh = np.linalg.svd(system)
    small = int(np.sum(s <= max(tol, 1e-9) * s[0]))
    if small != 1:
        raise RankFailure(f"annihilator dimension {small} != 1")
    return projectivize(vh[5], max(tol, 1e-8))


def idempotent_pair(x, y=None, tol: float = DEFAULT_TOL):
    """Composites P = x.y and Q = y.x for a null vector and a partner with
    (x, y) = 1/2; both are idempotent, sum to the identity, and have
    complex trace 2.  Returned as plain 4x4 matrices."""
    x = as_vec6(x)
    if y is None:
        y = partner_null_vector(x, tol)
    y = as_vec6(y)
    p = compose(x_matrix(x), x_matrix(y)).m
    q = compose(x_matrix(y), x_matrix(x)).m
    return p, q


def dual_isotropic_basis(n: IsotropicPlaneE, tol: float = DEFAULT_TOL):
    """Null vectors y1, y2 with (x_i, y_j) = delta_ij / 2 and (y1, y2) = 0.

    Each y starts as a least-squares solution of the pairing constraints
    and is then corrected along the plane (which leaves the constraints
    untouched, since the plane pairs to zero with itself) to restore
    exact nullity.
    """
    rows = np.vstack([as_vec6(n.x1) * Q_DIAG, as_vec6(n.x2) * Q_DIAG])
    y1, *_ = np.linalg.lstsq(rows, np.array([1.0, 0.0]), rcond=None)
    y1 = y1 - (q_form(y1) / 2.0) * n.x1
    y1 = y1 / 2.0
    rows2 = np.vstack([rows, y1 * Q_DIAG])
    y2, *_ = np.linalg.lstsq(rows2, np.array([0.0, 1.0, 0.0]), rcond=None)
    y2 = y2 - (q_form(y2) / 2.0) * n.x2
    y2 = y2 / 2.0
    checks = [
        q_bilinear(n.x1, y1) - 0.5,
        q_bilinear(n.x2, y2) - 0.5,
        q_bilinear(n.x1, y2),
        q_bilinear(n.x2, y1),
        q_bilinear(y1, y2),
        q_form(y1),
        q_form(y2),
    ]
    if max(abs(c) for c in checks) > max(tol, 1e-8):
        raise RankFailure("dual basis construction failed the pairing checks")
    return y1, y2


def four_idempotents(n: IsotropicPlaneE, tol: float = DEFAULT_TOL):
    """The four commuting rank-1 idempotents R1..R4 of an isotropic plane:
    products of P_i = x_i.y_i and their complements Q_i = y_i.x_i over a
    dual basis.  They multiply to zero pairwise, sum to the identity, and
    each has complex trace 1; the image of R1 is the image line of the
    plane's composite operator."""
    y1, y2 = dual_isotropic_basis(n, tol)
    p1, q1 = idempotent_pair(n.x1, y1, tol)
    p2, q2 = idempotent_pair(n.x2, y2, tol)
    return p1 @ p2, p1 @ q2, q1 @ p2, q1 @ q2


def image_basis(m: np.ndarray, dim: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of the image of a matrix, with the
    dimension asserted rather than inferred."""
    u, s, _ = np.linalg.svd(m)
    got = int(np.sum(s > max(tol, 1e-9) * s[0]))
    if got != dim:
        raise RankFailure(f"image dimension {got} != {dim}")
    return u[:, :dim]


def same_span(a: np.ndarray, b: np.ndarray, tol: float = 1e-8) -> bool:
    """Whether two sets of column vectors span the same subspace."""
    a = np.atleast_2d(a)
    b = np.atleast_2d(b)
    if a.shape != b.shape:
        return False
    stacked = np.hstack([a, b])
    s = np.linalg.svd(stacked, compute_uv=False)
    rank_a = int(np.sum(np.linalg.svd(a, compute_uv=False) > tol * s[0]))
    rank_all = int(np.sum(s > tol * s[0]))
    return rank_all == rank_a
