"""Lie-algebra generators and commutator checks."""

from collections import namedtuple

import numpy as np

from .group_core import LABELS, basis_matrix

__all__ = [
    "Angles",
    "ScaleParams",
    "generator",
    "generator_ce",
    "commutator",
    "COMMUTATOR_TABLE",
    "CommutatorCheck",
    "verify_commutator_table",
    "LieAxiomReport",
    "lie_axiom_check",
]

Angles = namedtuple("Angles", "x y z")
ScaleParams = namedtuple("ScaleParams", "c e", defaults=(0.0, 0.0))


def _as_angles(angles):
    x, y, z = angles
    return complex(x), complex(y), complex(z)


def _dtype_for(values):
    return complex if any(complex(v).imag != 0 for v in values) else float


def generator(angles):
    """6x6 generator for rotation angles ``(x, y, z)``.

    Real angles give a real skew-symmetric matrix; complex angles give the
    analytic continuation. ``generator((1, 0, 0))`` is the transpose of the
    ``b`` matrix, and likewise ``y`` and ``z`` pick out ``d^T`` and ``f^T``.
    """
    x, y, z = _as_angles(angles)
    g = np.array(
        [
            [0, x, 0, z, 0, y],
            [-x, 0, -z, 0, -y, 0],
            [0, z, 0, y, 0, x],
            [-z, 0, -y, 0, -x, 0],
            [0, y, 0, x, 0, z],
            [-y, 0, -x, 0, -z, 0],
        ],
        dtype=complex,
    )
    if _dtype_for((x, y, z)) is float:
        return g.real.copy()
    return g


def generator_ce(angles, scales):
    """Generator with the ``c`` and ``e`` slots filled by real scale factors.

    Trace is zero for any input. The matrix is skew-symmetric exactly when
    ``e == -c`` (and the angles are real).
    """
    x, y, z = _as_angles(angles)
    c, e = (float(s) for s in scales)
    g = np.array(
        [
            [0, x, c, z, e, y],
            [-x, 0, -z, c, -y, e],
            [e, z, 0, y, c, x],
            [-z, e, -y, 0, -x, c],
            [c, y, e, x, 0, z],
            [-y, c, -x, e, -z, 0],
        ],
        dtype=complex,
    )
    if _dtype_for((x, y, z)) is float:
        return g.real.copy()
    return g


def commutator(m, n):
    """``MN - NM``."""
    m = np.asarray(m)
    n = np.asarray(n)
    if m.shape != n.shape or m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"commutator needs two square matrices of equal size, got {m.shape} and {n.shape}")
    return m @ n - n @ m


# [X, Y] = P - Q; (P, Q) = (None, None) for a vanishing commutator.
COMMUTATOR_TABLE = (
    ("b", "d", "c", "e"), ("d", "b", "e", "c"), ("d", "f", "c", "e"),
    ("f", "d", "e", "c"), ("f", "b", "c", "e"), ("b", "f", "e", "c"),
    ("b", "c", "f", "d"), ("c", "b", "d", "f"), ("d", "c", "b", "f"),
    ("c", "d", "f", "b"), ("f", "c", "d", "b"), ("c", "f", "b", "d"),
    ("b", "e", "d", "f"), ("e", "b", "f", "d"), ("d", "e", "f", "b"),
    ("e", "d", "b", "f"), ("f", "e", "b", "d"), ("e", "f", "d", "b"),
    ("c", "e", None, None), ("e", "c", None, None),
)

CommutatorCheck = namedtuple("CommutatorCheck", "text holds")


def verify_commutator_table():
    """Check every entry of :data:`COMMUTATOR_TABLE` in integer arithmetic."""
    report = []
    for x, y, p, q in COMMUTATOR_TABLE:
        lhs = commutator(basis_matrix(x), basis_matrix(y))
        if p is None:
            rhs = np.zeros((6, 6), dtype=np.int64)
            text = f"[{x}, {y}] = 0"
        else:
            rhs = basis_matrix(p) - basis_matrix(q)
            text = f"[{x}, {y}] = {p} - {q}"
        report.append(CommutatorCheck(text, bool(np.array_equal(lhs, rhs))))
    return report


LieAxiomReport = namedtuple(
    "LieAxiomReport",
    "samples bilinearity anticommutativity jacobi jacobi_basis skewness",
)


def _jacobi(x, y, z):
    return commutator(x, commutator(y, z)) + commutator(z, commutator(x, y)) + commutator(y, commutator(z, x))


def lie_axiom_check(samples, seed=0):
    """Bilinearity, anticommutativity and Jacobi on random real combinations.

    Each sample draws three random real combinations of the ``b, c, d, e, f``
    matrices plus two random coefficients. Residuals are max-abs entries;
    ``jacobi_basis`` is the exact (integer) Jacobi residual over all
    triples of basis matrices and ``skewness`` is the largest
    ``||g^T + g||_inf`` over random real angle triples.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    basis = np.stack([basis_matrix(lbl).astype(float) for lbl in "bcdef"])

    jacobi_basis = 0
    for p in LABELS:
        for q in LABELS:
            for r in LABELS:
                res = _jacobi(basis_matrix(p), basis_matrix(q), basis_matrix(r))
                jacobi_basis = max(jacobi_basis, int(np.abs(res).max()))

    bil = anti = jac = skew = 0.0
    for _ in range(samples):
        x, y, z = np.einsum("kn,nij->kij", rng.uniform(-1, 1, (3, 5)), basis)
        a, b = rng.uniform(-3, 3, 2)
        left = commutator(a * x + b * y, z) - (a * commutator(x, z) + b * commutator(y, z))
        right = commutator(z, a * x + b * y) - (a * commutator(z, x) + b * commutator(z, y))
        bil = max(bil, np.abs(left).max(), np.abs(right).max())
        anti = max(anti, np.abs(commutator(x, y) + commutator(y, x)).max())
        jac = max(jac, np.abs(_jacobi(x, y, z)).max())
        g = generator(rng.uniform(-np.pi, np.pi, 3))
        skew = max(skew, np.abs(g.T + g).sum(axis=1).max())

    return LieAxiomReport(samples, float(bil), float(anti), float(jac), jacobi_basis, float(skew))
