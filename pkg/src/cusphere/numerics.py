"""Small dense matrix kernels for 2x2, 3x3 and 6x6 problems.

The matrix exponential here is the ground truth that every closed form in
the package is checked against, so it is written out explicitly rather than
delegated.
"""

import math

import numpy as np

__all__ = [
    "as_matrix",
    "expm",
    "det",
    "dagger",
    "norm_inf",
    "residual_orthogonal",
    "residual_unitary",
]

# Taylor degree and scaled-norm bound for the production exponential.
# With ||A||_1 <= 1/4 the first omitted term is below 0.25**19 / 19! ~ 3e-29.
_TAYLOR_DEGREE = 18
_THETA = 0.25
_MAX_SQUARINGS = 1024


def as_matrix(m):
    """Return ``m`` as a square 2D array (float or complex), validating shape."""
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.issubdtype(a.dtype, np.complexfloating):
        a = a.astype(float)
    return a


def norm_inf(m):
    """Maximum absolute row sum."""
    a = np.asarray(m)
    return float(np.abs(a).sum(axis=1).max())


def expm(m):
    """Matrix exponential by scaling and squaring with a truncated Taylor kernel.

    The input is scaled by ``2**-s`` so that its 1-norm is at most 1/4, the
    series is summed to degree 18 in Horner form and the result is squared
    ``s`` times.

    Raises
    ------
    OverflowError
        If the input is not finite or the result overflows.
    """
    a = as_matrix(m)
    if not np.all(np.isfinite(a)):
        raise OverflowError("expm: input has non-finite entries")
    n = a.shape[0]
    norm1 = float(np.abs(a).sum(axis=0).max())
    s = 0
    if norm1 > _THETA:
        s = int(math.ceil(math.log2(norm1 / _THETA)))
    if s > _MAX_SQUARINGS:
        raise OverflowError(f"expm: norm {norm1:g} is out of range")
    a = a / (2.0 ** s)

    ident = np.eye(n, dtype=a.dtype)
    result = ident.copy()
    for k in range(_TAYLOR_DEGREE, 0, -1):
        result = ident + (a @ result) / k
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(s):
            result = result @ result
    if not np.all(np.isfinite(result)):
        raise OverflowError(f"expm: result overflowed (input norm {norm1:g})")
    return result


def det(m):
    """Determinant via LU factorisation with partial pivoting."""
    a = as_matrix(m)
    d = np.linalg.det(a)
    if np.iscomplexobj(d):
        return complex(d)
    return float(d)


def dagger(m):
    """Conjugate transpose."""
    return np.conj(np.asarray(m)).T


def residual_orthogonal(m):
    """||M^T M - I||_inf. Uses the plain transpose, also for complex input."""
    a = as_matrix(m)
    return norm_inf(a.T @ a - np.eye(a.shape[0]))


def residual_unitary(m):
    """||M^H M - I||_inf."""
    a = as_matrix(m)
    return norm_inf(dagger(a) @ a - np.eye(a.shape[0]))
