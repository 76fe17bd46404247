"""Closed-form group matrices, the claimed spectrum and the C^3 <-> R^6 embedding.

All closed forms are built from two arguments of the angle triple:

* ``r``, the principal square root of ``x^2 + y^2 + z^2 - xy - yz - xz``
* ``gamma = x + y + z``

together with the directional coefficients ``px, py, pz`` (``(x - y/2 - z/2)/r``
and its cyclic shifts). The coefficients are 0/0 on the line ``x = y = z``,
so every ``p * sin(r)`` product is evaluated as ``numerator * sinc(r)``.
"""

from dataclasses import dataclass

import numpy as np

from .generators import generator, generator_ce
from .numerics import det, expm

__all__ = [
    "DEGENERATE_R",
    "SphericalArgs",
    "spherical_args",
    "sinc",
    "group_matrix",
    "group_matrix_expm",
    "row_sum_identity",
    "claimed_spectrum",
    "SpectrumReport",
    "verify_spectrum",
    "u3_generator",
    "group_matrix_u3",
    "embed_complex",
    "group_matrix_ce",
]

DEGENERATE_R = 1e-6


def _is_real(values):
    return all(complex(v).imag == 0 for v in values)


def _narrow(m):
    """Drop an all-zero imaginary part."""
    if np.iscomplexobj(m) and not np.any(m.imag):
        return m.real.copy()
    return m


def sinc(r):
    """``sin(r) / r`` with a 4-term Taylor series below :data:`DEGENERATE_R`."""
    if abs(r) < DEGENERATE_R:
        r2 = r * r
        return 1 - r2 / 6 + r2 * r2 / 120 - r2 * r2 * r2 / 5040
    return np.sin(r) / r


@dataclass(frozen=True)
class SphericalArgs:
    r: complex
    gamma: complex
    px: complex
    py: complex
    pz: complex
    # p-coefficient numerators: (x - y/2 - z/2), (-x/2 + y - z/2), (-x/2 - y/2 + z)
    nx: complex
    ny: complex
    nz: complex
    degenerate: bool


def spherical_args(angles):
    """Evaluate ``r``, ``gamma`` and the directional coefficients.

    When ``|r| < DEGENERATE_R`` the ``p`` values are NaN and ``degenerate``
    is set; the numerators are always available.
    """
    x, y, z = (complex(a) for a in angles)
    # half the sum of squared differences: same value, but never negative for real input
    r2 = ((x - y) ** 2 + (y - z) ** 2 + (z - x) ** 2) / 2
    r = complex(np.sqrt(r2))
    nx = x - y / 2 - z / 2
    ny = -x / 2 + y - z / 2
    nz = -x / 2 - y / 2 + z
    degenerate = abs(r) < DEGENERATE_R
    if degenerate:
        px = py = pz = complex("nan")
    else:
        px, py, pz = nx / r, ny / r, nz / r
    return SphericalArgs(r, x + y + z, px, py, pz, nx, ny, nz, degenerate)


def _assemble(r, gamma, nums):
    """Fill the 6x6 closed form given ``r``, ``gamma`` and (nx, ny, nz)."""
    snc = sinc(r)
    c2 = 2 * np.cos(r) / 3 + np.cos(gamma) / 3
    cm = -np.cos(r) / 3 + np.cos(gamma) / 3
    sx, sy, sz = (n * snc * 2 / 3 + np.sin(gamma) / 3 for n in nums)
    return np.array(
        [
            [c2, sx, cm, sz, cm, sy],
            [-sx, c2, -sz, cm, -sy, cm],
            [cm, sz, c2, sy, cm, sx],
            [-sz, cm, -sy, c2, -sx, cm],
            [cm, sy, cm, sx, c2, sz],
            [-sy, cm, -sx, cm, -sz, c2],
        ],
        dtype=complex,
    )


def group_matrix(angles):
    """Closed-form ``exp(generator(angles))``.

    Returns a real orthogonal matrix for real angles and a complex one
    otherwise.
    """
    sa = spherical_args(angles)
    g = _assemble(sa.r, sa.gamma, (sa.nx, sa.ny, sa.nz))
    return g.real.copy() if _is_real(angles) else g


def row_sum_identity(angles):
    """Largest deviation of the line sums from ``cos(gamma)`` and ``±sin(gamma)``.

    In each row and column, entries whose row and column indices share
    parity are the cosine slots; they must add to ``cos(gamma)``. The rest
    are sine slots and add to ``+sin(gamma)`` on odd rows and even columns
    (1-based), ``-sin(gamma)`` on even rows and odd columns.
    """
    g = group_matrix(angles)
    gamma = complex(sum(complex(a) for a in angles))
    cg, sg = np.cos(gamma), np.sin(gamma)
    worst = 0.0
    for k in range(6):
        same = [j for j in range(6) if (j - k) % 2 == 0]
        other = [j for j in range(6) if (j - k) % 2 == 1]
        # k is 0-based: k even is an odd (1-based) row
        row_sign = 1 if k % 2 == 0 else -1
        worst = max(
            worst,
            abs(g[k, same].sum() - cg),
            abs(g[k, other].sum() - row_sign * sg),
            abs(g[same, k].sum() - cg),
            abs(g[other, k].sum() + row_sign * sg),
        )
    return float(worst)


def claimed_spectrum(angles):
    """``[e^{-ir}, e^{-ir}, e^{ir}, e^{ir}, e^{-i gamma}, e^{i gamma}]``."""
    sa = spherical_args(angles)
    er, eg = np.exp(1j * sa.r), np.exp(1j * sa.gamma)
    return np.array([1 / er, 1 / er, er, er, 1 / eg, eg], dtype=complex)


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: np.ndarray
    det_residuals: np.ndarray
    trace_error: float
    det_error: float

    @property
    def max_det_residual(self):
        return float(self.det_residuals.max())


def verify_spectrum(angles):
    """Check the claimed spectrum against the closed-form matrix.

    For each value ``lam`` the residual ``|det(G - lam I)|`` is computed;
    the sum and product of the six values are compared with ``trace(G)`` and
    ``det(G)``. No eigensolver is involved.
    """
    g = group_matrix(angles)
    lams = claimed_spectrum(angles)
    ident = np.eye(6)
    residuals = np.array([abs(det(g - lam * ident)) for lam in lams])
    trace_error = abs(lams.sum() - np.trace(g))
    det_error = abs(np.prod(lams) - det(g))
    return SpectrumReport(lams, residuals, float(trace_error), float(det_error))


def u3_generator(angles):
    """3x3 complex generator ``i * [[x, z, y], [z, y, x], [y, x, z]]``."""
    x, y, z = (complex(a) for a in angles)
    return 1j * np.array([[x, z, y], [z, y, x], [y, x, z]], dtype=complex)


def group_matrix_u3(angles):
    """Closed-form ``exp(u3_generator(angles))``; symmetric by construction."""
    sa = spherical_args(angles)
    snc = sinc(sa.r)
    eg = np.exp(1j * sa.gamma) / 3
    diag = 2 * np.cos(sa.r) / 3
    off = -np.cos(sa.r) / 3
    tx, ty, tz = (n * snc * 2j / 3 for n in (sa.nx, sa.ny, sa.nz))
    return np.array(
        [
            [eg + diag + tx, eg + off + tz, eg + off + ty],
            [eg + off + tz, eg + diag + ty, eg + off + tx],
            [eg + off + ty, eg + off + tx, eg + diag + tz],
        ],
        dtype=complex,
    )


def embed_complex(m):
    """Real 2n x 2n form of a complex n x n matrix.

    Each entry ``a + bi`` becomes the block ``[[a, b], [-b, a]]``; complex
    coordinate ``k`` maps onto real coordinates ``(2k, 2k + 1)`` (0-based).
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    re, im = m.real, m.imag
    out = np.zeros((2 * n, 2 * n))
    out[0::2, 0::2] = re
    out[1::2, 1::2] = re
    out[0::2, 1::2] = im
    out[1::2, 0::2] = -im
    return out


def group_matrix_ce(angles, scales):
    """``expm(generator_ce(angles, scales))``. There is no closed form for this one."""
    return _narrow(expm(generator_ce(angles, scales)))


def group_matrix_expm(angles):
    """Numeric ``expm(generator(angles))``, the reference for :func:`group_matrix`."""
    return _narrow(expm(generator(angles)))
