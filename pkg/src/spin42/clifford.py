"""Antilinear generator algebra on the (2,2) spinor space.

Six constant 4x4 matrices Sigma_alpha (antisymmetric) and their partners
Gamma_alpha = Sigma_alpha . G realize the vectors of the (4,2) space as
antilinear operators f -> Gamma . conj(f).  The composite of two such
operators is complex linear, the anticommutators reproduce the quadratic
form, each generator is anti-self-adjoint for the pseudo-Hermitian form,
and det(X(x)) = Q(x)^2.  All table entries live on the {0, +-1, +-i}
lattice, so the structural identities hold with zero floating-point error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import IndexOutOfRange, NotInGammaSpan
from .forms import DEFAULT_TOL, G4, Q_DIAG, as_spinor, as_vec6, q_form

_i = 1j

SIGMA = np.array([
    [[0, 0, -_i, 0], [0, 0, 0, _i], [_i, 0, 0, 0], [0, -_i, 0, 0]],
    [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, 0, 0, _i], [0, 0, _i, 0], [0, -_i, 0, 0], [-_i, 0, 0, 0]],
    [[0, _i, 0, 0], [-_i, 0, 0, 0], [0, 0, 0, -_i], [0, 0, _i, 0]],
    [[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
    [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
], dtype=complex)
SIGMA.setflags(write=False)

GAMMA = np.array([
    [[0, 0, _i, 0], [0, 0, 0, -_i], [_i, 0, 0, 0], [0, -_i, 0, 0]],
    [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, 0, 0, -_i], [0, 0, -_i, 0], [0, -_i, 0, 0], [-_i, 0, 0, 0]],
    [[0, _i, 0, 0], [-_i, 0, 0, 0], [0, 0, 0, _i], [0, 0, -_i, 0]],
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
    [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
], dtype=complex)
GAMMA.setflags(write=False)


def _levi_civita4() -> np.ndarray:
    eps = np.zeros((4, 4, 4, 4))
    for perm in itertools.permutations(range(4)):
        sign = 1
        p = list(perm)
        for a in range(4):
            for b in range(a + 1, 4):
                if p[a] > p[b]:
                    sign = -sign
        eps[perm] = sign
    return eps


EPS4 = _levi_civita4()
EPS4.setflags(write=False)


@dataclass(frozen=True)
class AntilinearOp:
    """Matrix m of an antilinear map v -> m . conj(v)."""

    m: np.ndarray


@dataclass(frozen=True)
class LinearOp:
    """Matrix m of a complex-linear map v -> m . v.

    Kept as a separate type from AntilinearOp: the composite of two
    antilinear maps is linear, and mixing the two kinds silently is the
    main notational hazard of this construction.
    """

    m: np.ndarray


def gamma(alpha: int) -> AntilinearOp:
    """The alpha-th antilinear generator, alpha in 1..6."""
    if not 1 <= alpha <= 6:
        raise IndexOutOfRange(f"generator index {alpha} outside 1..6")
    return AntilinearOp(GAMMA[alpha - 1])


def apply(a: AntilinearOp, v) -> np.ndarray:
    """Act on a spinor: (a v)^i = m^i_j conj(v^j)."""
    v = as_spinor(v)
    return a.m @ np.conj(v)


def compose(a: AntilinearOp, b: AntilinearOp) -> LinearOp:
    """Composite antilinear-after-antilinear, which is complex linear:
    a(b(v)) = (A . conj(B)) v."""
    return LinearOp(a.m @ np.conj(b.m))


def antilinear_adjoint(a: AntilinearOp) -> AntilinearOp:
    """Adjoint for the pseudo-Hermitian form: the unique a* with
    (a v | w) = (a* w | v) for all v, w.  In matrix form m* = G . m^T . G
    (for an antilinear operator the transpose appears, not the conjugate
    transpose)."""
    return AntilinearOp(G4 @ a.m.T @ G4)


def x_matrix(x) -> AntilinearOp:
    """The antilinear operator of a 6-vector, X = sum_alpha x^alpha Gamma_alpha."""
    x = as_vec6(x)
    return AntilinearOp(np.tensordot(x, GAMMA, axes=(0, 0)))


def vector_from_op(a: AntilinearOp, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Inverse of x_matrix on its image.

    The generators are orthogonal for the Frobenius pairing with
    <Gamma_a, Gamma_b> = 4 delta_ab, so the real least-squares fit has the
    closed form x^a = Re tr(m Gamma_a^dagger) / 4 and the residual check
    is sharp.  Raises NotInGammaSpan when the residual exceeds tolerance.
    """
    coeffs = np.real(np.einsum("ij,aij->a", a.m, np.conj(GAMMA))) / 4.0
    fit = np.tensordot(coeffs, GAMMA, axes=(0, 0))
    residual = float(np.max(np.abs(a.m - fit)))
    scale = max(1.0, float(np.max(np.abs(a.m))))
    if residual > tol * scale:
        raise NotInGammaSpan(
            f"operator is not a real generator combination (residual {residual:g})"
        )
    return coeffs


def det4(m: np.ndarray) -> complex:
    """4x4 determinant by direct permutation expansion.

    Exact on the {0,+-1,+-i} lattice of the generator tables (no LU
    rounding), and perfectly adequate numerically at this size.
    """
    total = 0.0 + 0.0j
    for perm in itertools.permutations(range(4)):
        sign = 1
        p = list(perm)
        for a in range(4):
            for b in range(a + 1, 4):
                if p[a] > p[b]:
                    sign = -sign
        term = m[0, perm[0]] * m[1, perm[1]] * m[2, perm[2]] * m[3, perm[3]]
        total += sign * term
    return total


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity audit."""

    checks_run: int
    max_deviation: float
    passed: bool


def check_clifford_relations(tol: float = 0.0, gamma_table=None) -> CheckReport:
    """Audit all 36 anticommutators against 2 Q_ab I.

    With the shipped tables the deviation is exactly zero, so tol=0 passes.
    A custom gamma_table (same shape) can be audited for corruption tests.
    """
    table = GAMMA if gamma_table is None else np.asarray(gamma_table, dtype=complex)
    eye = np.eye(4)
    worst = 0.0
    n = 0
    for a in range(6):
        for b in range(6):
            anti = table[a] @ np.conj(table[b]) + table[b] @ np.conj(table[a])
            target = 2.0 * (Q_DIAG[a] if a == b else 0.0) * eye
            worst = max(worst, float(np.max(np.abs(anti - target))))
            n += 1
    return CheckReport(checks_run=n, max_deviation=worst, passed=worst <= tol)


def check_sigma_selfduality(tol: float = 0.0) -> CheckReport:
    """Entrywise audit of conj(Sigma^ij) = 1/2 eps^{ijkl} G_km G_ln Sigma^mn
    with eps^{1234} = +1; exact for the shipped tables."""
    worst = 0.0
    for a in range(6):
        rhs = 0.5 * np.einsum("ijkl,km,ln,mn->ij", EPS4, G4, G4, SIGMA[a])
        worst = max(worst, float(np.max(np.abs(np.conj(SIGMA[a]) - rhs))))
    return CheckReport(checks_run=6, max_deviation=worst, passed=worst <= tol)


def reality_residual(x) -> float:
    """Max entrywise deviation in the reality condition
    conj(X)^i_j = 1/2 eps^{imnk} G_mj G_nl X^l_k."""
    xm = x_matrix(x).m
    rhs = 0.5 * np.einsum("imnk,mj,nl,lk->ij", EPS4, G4, G4, xm)
    return float(np.max(np.abs(np.conj(xm) - rhs)))


def check_x_reality(x, tol: float = 1e-12) -> CheckReport:
    dev = reality_residual(x)
    return CheckReport(checks_run=1, max_deviation=dev, passed=dev <= tol)


def det_identity(x) -> tuple[float, float]:
    """Return (det X(x) as a real number, Q(x)^2); the two must agree and
    the determinant's imaginary part must vanish."""
    x = as_vec6(x)
    d = det4(x_matrix(x).m)
    return float(d.real), q_form(x) ** 2
