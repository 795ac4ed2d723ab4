"""Exterior algebra of the spinor space with an antilinear Hodge star.

Grades run 0..4 over complex 4-space.  The pseudo-Hermitian form extends
to each grade by the determinant rule (conjugating the second argument),
and the star operator is *antilinear*, defined by

    x wedge (star y) = (x | y) e        for all x of the same grade as y,

with e = e1^e2^e3^e4 the volume element.  On bivectors the star squares
to +1 and splits the space into real 6-dimensional eigenspaces; the fixed
one is the real span of six basis bivectors E_alpha built from the
generator tables, and phi: x -> x^alpha E_alpha identifies the (4,2)
vector space with it.

Sign convention that matters downstream: the Gram matrix of the E_alpha
is (E_a | E_b) = -Q_ab.  The Hermitian form restricted to the self-dual
subspace has signature (2,4), so no star-fixed basis can have Gram +Q;
the minus sign is forced, and every identity in this package (the
decomposability criterion, the group action, the correspondences) is
stated and tested with it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from .clifford import SIGMA
from .errors import (
    GradeMismatch,
    GradeOverflow,
    IndexOutOfRange,
    NotRealCombination,
    NotSelfDual,
)
from .forms import DEFAULT_TOL, G_DIAG, as_vec6

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class KVector:
    """Grade-k element stored as a full antisymmetric array with k axes of
    length 4 (grade 0 is a 0-d array).  Full storage wastes a few entries
    but removes index-ordering bugs."""

    k: int
    comps: np.ndarray


def scalar(c) -> KVector:
    return KVector(0, np.asarray(c, dtype=complex))


def vector(v) -> KVector:
    v = np.asarray(v, dtype=complex)
    if v.shape != (4,):
        raise ValueError("grade-1 input must be a 4-vector")
    return KVector(1, v)


def basis_kvector(indices) -> KVector:
    """Wedge of basis spinor directions, 1-based indices."""
    out = scalar(1.0)
    for i in indices:
        if not 1 <= i <= 4:
            raise IndexOutOfRange(f"basis index {i} outside 1..4")
        e = np.zeros(4, dtype=complex)
        e[i - 1] = 1.0
        out = wedge(out, vector(e))
    return out


def _antisymmetrize(t: np.ndarray) -> np.ndarray:
    n = t.ndim
    if n <= 1:
        return t
    out = np.zeros_like(t)
    for perm in itertools.permutations(range(n)):
        sign = 1
        p = list(perm)
        for a in range(n):
            for b in range(a + 1, n):
                if p[a] > p[b]:
                    sign = -sign
        out += sign * np.transpose(t, perm)
    return out / factorial(n)


def wedge(a: KVector, b: KVector) -> KVector:
    """Graded product with the determinant normalization:
    (v ^ w)^{ij} = v^i w^j - v^j w^i for vectors."""
    p, q = a.k, b.k
    if p + q > 4:
        raise GradeOverflow(f"grades {p}+{q} exceed 4")
    t = np.tensordot(a.comps, b.comps, axes=0)
    coef = factorial(p + q) / (factorial(p) * factorial(q))
    return KVector(p + q, coef * _antisymmetrize(t))


def herm_inner(a: KVector, b: KVector) -> complex:
    """(a | b) = (1/k!) G_{i1 j1} ... G_{ik jk} a^{i...} conj(b^{j...})."""
    if a.k != b.k:
        raise GradeMismatch(f"grades {a.k} and {b.k} differ")
    if a.k == 0:
        return complex(a.comps * np.conj(b.comps))
    weight = np.ones(())
    for _ in range(a.k):
        weight = np.multiply.outer(weight, G_DIAG)
    return complex(np.sum(a.comps * weight * np.conj(b.comps)) / factorial(a.k))


def basis_bivector(alpha: int) -> KVector:
    """E_alpha, with components Sigma_alpha / sqrt(2): star-fixed, and
    pairwise (E_a | E_b) = -Q_ab (see the module docstring for why the
    sign cannot be +)."""
    if not 1 <= alpha <= 6:
        raise IndexOutOfRange(f"bivector index {alpha} outside 1..6")
    return KVector(2, SIGMA[alpha - 1] / _SQRT2)


def _combos(k: int):
    return list(itertools.combinations(range(4), k))


def _coeffs_of(kv: KVector) -> np.ndarray:
    return np.array([kv.comps[c] for c in _combos(kv.k)], dtype=complex)


def _from_coeffs(k: int, coeffs) -> KVector:
    comps = np.zeros((4,) * k, dtype=complex)
    if k == 0:
        return KVector(0, np.asarray(complex(coeffs[0])))
    for c, combo in zip(coeffs, _combos(k)):
        for perm in itertools.permutations(range(k)):
            sign = 1
            p = list(perm)
            for a in range(k):
                for b in range(a + 1, k):
                    if p[a] > p[b]:
                        sign = -sign
            comps[tuple(combo[j] for j in perm)] = sign * c
    return KVector(k, comps)


@lru_cache(maxsize=None)
def _star_matrix(k: int) -> np.ndarray:
    """Matrix S with star(y) = S . conj(coeffs(y)) in the increasing-index
    monomial basis, obtained by solving the defining relation
    e_I ^ (star e_J) = (e_I | e_J) e against all monomials."""
    rows = _combos(k)
    cols = _combos(4 - k)
    w = np.zeros((len(rows), len(cols)), dtype=complex)
    for ri, i_combo in enumerate(rows):
        ei = basis_kvector([i + 1 for i in i_combo])
        for ci, m_combo in enumerate(cols):
            em = basis_kvector([m + 1 for m in m_combo])
            w[ri, ci] = wedge(ei, em).comps[0, 1, 2, 3]
    rhs = np.zeros((len(rows), len(rows)), dtype=complex)
    for ri, i_combo in enumerate(rows):
        ei = basis_kvector([i + 1 for i in i_combo])
        for ji, j_combo in enumerate(rows):
            ej = basis_kvector([j + 1 for j in j_combo])
            rhs[ri, ji] = herm_inner(ei, ej)
    # columns of the solution are the star images of each monomial e_J
    return np.linalg.solve(w, rhs)


def hodge_star(y: KVector) -> KVector:
    """Antilinear star: grade k -> 4-k, with x ^ star(y) = (x|y) e."""
    s = _star_matrix(y.k)
    coeffs = s @ np.conj(_coeffs_of(y))
    return _from_coeffs(4 - y.k, coeffs)


def kv_norm(a: KVector) -> float:
    return float(np.linalg.norm(np.ravel(a.comps)))


def kv_add(a: KVector, b: KVector) -> KVector:
    if a.k != b.k:
        raise GradeMismatch(f"grades {a.k} and {b.k} differ")
    return KVector(a.k, a.comps + b.comps)


def kv_scale(c, a: KVector) -> KVector:
    return KVector(a.k, c * a.comps)


def selfdual_split(b: KVector) -> tuple[KVector, KVector]:
    """Split a bivector into its star-fixed and star-negated halves."""
    if b.k != 2:
        raise GradeMismatch("self-dual split is defined on bivectors")
    sb = hodge_star(b)
    return (
        KVector(2, (b.comps + sb.comps) / 2.0),
        KVector(2, (b.comps - sb.comps) / 2.0),
    )


def phi(x) -> KVector:
    """Real-linear embedding of the 6-space into self-dual bivectors,
    phi(x) = x^alpha E_alpha."""
    x = as_vec6(x)
    return KVector(2, np.tensordot(x, SIGMA, axes=(0, 0)) / _SQRT2)


def phi_inverse(b: KVector, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Coordinates of a self-dual bivector in the E_alpha basis.

    The E_alpha are Frobenius-orthogonal with <E_a, E_b> = 2 delta_ab, so
    x^a = Re <b, E_a> / 2 is the exact projection; the residual then
    certifies that b really was a real combination.
    """
    if b.k != 2:
        raise GradeMismatch("phi_inverse is defined on bivectors")
    scale = max(1.0, kv_norm(b))
    sb = hodge_star(b)
    if float(np.max(np.abs(sb.comps - b.comps))) > tol * scale:
        raise NotSelfDual("bivector is not fixed by the star")
    coeffs = np.real(np.einsum("ij,aij->a", b.comps, np.conj(SIGMA))) / (2.0 * _SQRT2)
    fit = np.tensordot(coeffs, SIGMA, axes=(0, 0)) / _SQRT2
    if float(np.max(np.abs(b.comps - fit))) > tol * scale:
        raise NotRealCombination("bivector is outside the real basis span")
    return coeffs


def is_decomposable(b: KVector, tol: float = DEFAULT_TOL) -> bool:
    """A bivector is a single wedge v ^ w exactly when b ^ b = 0; the
    threshold scales with ||b||^2 for scale invariance."""
    if b.k != 2:
        raise GradeMismatch("decomposability is defined on bivectors")
    n = kv_norm(b)
    if n == 0.0:
        return True
    return kv_norm(wedge(b, b)) <= tol * n * n
