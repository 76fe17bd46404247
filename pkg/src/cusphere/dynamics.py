"""Rotating six-vectors: single-angle progressions, plane orbits and trajectories.

States are row vectors ordered ``(X_r, X_i, Y_r, Y_i, Z_r, Z_i)`` and a group
matrix acts by right multiplication, ``v' = v @ G``. With this convention a
quarter turn about ``X`` sends ``X_r`` to ``+X_i``; the column convention
``G @ v`` sends it to ``-X_i``. ``action="column"`` is accepted everywhere
for comparison.
"""

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .closed_form import group_matrix, group_matrix_ce
from .generators import ScaleParams
from .group_core import basis_matrix

__all__ = [
    "SLOT_NAMES",
    "AXES",
    "rotate",
    "quarter_turn_matrix",
    "quarter_turn_progression",
    "PUBLISHED_PROGRESSIONS",
    "PUBLISHED_PLANE_ORBITS",
    "format_slot",
    "AxisMap",
    "plane_orbit",
    "Trajectory",
    "trajectory",
    "CSV_HEADER",
    "trajectory_to_csv",
    "read_trajectory_csv",
    "quadrature_check",
]

SLOT_NAMES = ("X_r", "X_i", "Y_r", "Y_i", "Z_r", "Z_i")
AXES = ("X", "Y", "Z")

_SNAP_TOL = 1e-12


def rotate(v, g, action="row"):
    v = np.asarray(v)
    g = np.asarray(g)
    if action == "row":
        return v @ g
    if action == "column":
        return g @ v
    raise ValueError(f"action must be 'row' or 'column', got {action!r}")


def _signed_slot(v):
    """Locate the single ±1 entry of a (numerically) signed unit vector."""
    v = np.asarray(v)
    j = int(np.argmax(np.abs(v)))
    sign = 1 if np.real(v[j]) > 0 else -1
    expected = np.zeros(6)
    expected[j] = sign
    if np.abs(v - expected).max() > _SNAP_TOL:
        raise ValueError(f"vector is not a signed basis vector: {v}")
    return j, sign


def format_slot(slot, sign):
    return ("-" if sign < 0 else "") + SLOT_NAMES[slot]


def quarter_turn_matrix(axis):
    """Group matrix for a rotation by pi/2 about one of ``X``, ``Y``, ``Z``."""
    angles = [0.0, 0.0, 0.0]
    angles[AXES.index(axis)] = np.pi / 2
    return group_matrix(angles)


def quarter_turn_progression(axis, action="row"):
    """Signed slots visited by ``X_r``, ``Y_r`` and ``Z_r`` over four quarter turns.

    Returns a 3x4 list of ``(slot, sign)``; rows are the starting slots
    ``X_r, Y_r, Z_r``.
    """
    g = quarter_turn_matrix(axis)
    table = []
    for start in (0, 2, 4):
        v = np.zeros(6)
        v[start] = 1.0
        row = []
        for _ in range(4):
            v = rotate(v, g, action)
            slot, sign = _signed_slot(v)
            row.append((slot, sign))
            # snap to the exact signed basis vector so rounding never accumulates
            v = np.zeros(6)
            v[slot] = sign
        table.append(row)
    return table


# Quarter-turn progressions as printed, rows starting from X_r, Y_r, Z_r.
PUBLISHED_PROGRESSIONS = {
    "X": (("X_i", "-X_r", "-X_i", "X_r"), ("Z_i", "-Y_r", "-Z_i", "Y_r"), ("Y_i", "-Z_r", "-Y_i", "Z_r")),
    "Y": (("Z_i", "-X_r", "-Z_i", "X_r"), ("Y_i", "-Y_r", "-Y_i", "Y_r"), ("X_i", "-Z_r", "-X_i", "Z_r")),
    "Z": (("Y_i", "-X_r", "-Y_i", "X_r"), ("X_i", "-Y_r", "-X_i", "Y_r"), ("Z_i", "-Z_r", "-Z_i", "Z_r")),
}

# Oriented-plane orbits as printed: per axis, the cell after steps 1..6.
# The subscript names the axis pair the source pair lands on.
PUBLISHED_PLANE_ORBITS = {
    "minus_c": {
        "X": ("-X_y", "X_z", "-X_x", "X_y", "-X_z", "X_x"),
        "Y": ("-Y_z", "Y_x", "-Y_y", "Y_z", "-Y_x", "Y_y"),
        "Z": ("-Z_x", "Z_y", "-Z_z", "Z_x", "-Z_y", "Z_z"),
    },
    "minus_e": {
        "X": ("-X_z", "X_y", "-X_x", "X_z", "-X_y", "X_x"),
        "Y": ("-Y_x", "Y_z", "-Y_y", "Y_x", "-Y_z", "Y_y"),
        "Z": ("-Z_y", "Z_x", "-Z_z", "Z_y", "-Z_x", "Z_z"),
    },
}


@dataclass(frozen=True)
class AxisMap:
    """Where each coordinate slot lands: ``targets[k] = (destination, sign)``."""

    targets: tuple

    @classmethod
    def from_matrix(cls, m, action="row"):
        m = np.asarray(m)
        targets = []
        for k in range(6):
            v = np.zeros(6, dtype=m.dtype)
            v[k] = 1
            targets.append(_signed_slot(rotate(v, m, action)))
        return cls(tuple(targets))

    def is_identity(self):
        return all(t == (k, 1) for k, t in enumerate(self.targets))

    def is_negation(self):
        return all(t == (k, -1) for k, t in enumerate(self.targets))

    def axis_cells(self):
        """Per-axis reading, e.g. ``{"X": "-X_y", ...}``.

        ``"-X_y"`` means both X slots land, negated, on the matching Y slots.
        Raises ``ValueError`` if a pair is split or its components swap.
        """
        cells = {}
        for a, name in enumerate(AXES):
            (d0, s0), (d1, s1) = self.targets[2 * a], self.targets[2 * a + 1]
            if s0 != s1 or d0 % 2 != 0 or d1 != d0 + 1:
                raise ValueError(f"axis {name} does not move as a pair: {self.targets}")
            dest = AXES[d0 // 2].lower()
            cells[name] = ("-" if s0 < 0 else "") + f"{name}_{dest}"
        return cells

    def __str__(self):
        return " ".join(f"{SLOT_NAMES[k]}->{format_slot(*t)}" for k, t in enumerate(self.targets))


def plane_orbit(plane, action="row"):
    """Slot maps after 1..6 applications of ``-c`` (``"minus_c"``) or ``-e`` (``"minus_e"``)."""
    labels = {"minus_c": "c", "minus_e": "e", "c": "c", "e": "e"}
    if plane not in labels:
        raise ValueError(f"plane must be 'minus_c' or 'minus_e', got {plane!r}")
    step = -basis_matrix(labels[plane])
    acc = np.eye(6, dtype=np.int64)
    maps = []
    for _ in range(6):
        acc = acc @ step if action == "row" else step @ acc
        maps.append(AxisMap.from_matrix(acc, action))
    return maps


@dataclass
class Trajectory:
    states: np.ndarray
    angles: tuple
    scales: ScaleParams = field(default_factory=ScaleParams)

    @property
    def steps(self):
        return len(self.states) - 1

    def norms(self):
        return np.linalg.norm(self.states, axis=1)

    def __len__(self):
        return len(self.states)


def trajectory(angles, scales=None, steps=0, v0=(1, 0, 0, 0, 0, 0), action="row"):
    """Iterate a fixed group matrix ``steps`` times starting from ``v0``.

    The matrix is the closed form when no scales are given (or both are
    zero) and the numeric exponential of the scaled generator otherwise.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    scales = ScaleParams(*scales) if scales is not None else ScaleParams()
    if scales.c == 0 and scales.e == 0:
        g = group_matrix(angles)
    else:
        g = group_matrix_ce(angles, scales)
    v = np.asarray(v0)
    dtype = np.result_type(g.dtype, v.dtype, float)
    states = np.empty((steps + 1, 6), dtype=dtype)
    states[0] = v
    for k in range(steps):
        states[k + 1] = rotate(states[k], g, action)
    return Trajectory(states, tuple(angles), scales)


CSV_HEADER = ["step"] + [f"c{k}_{part}" for k in range(1, 7) for part in ("re", "im")]


def _fmt(x):
    return "0" if x == 0 else format(x, ".17g")


def trajectory_to_csv(traj, fh=None):
    """Write the trajectory as CSV; returns the text when ``fh`` is None."""
    out = fh if fh is not None else io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    states = np.asarray(traj.states, dtype=complex)
    for k, row in enumerate(states):
        cells = [str(k)]
        for value in row:
            cells.append(_fmt(float(value.real)))
            cells.append(_fmt(float(value.imag)))
        writer.writerow(cells)
    if fh is None:
        return out.getvalue()
    return None


def read_trajectory_csv(fh):
    """Parse CSV from :func:`trajectory_to_csv` into a complex ``(steps+1, 6)`` array."""
    if isinstance(fh, str):
        fh = io.StringIO(fh)
    reader = csv.reader(fh)
    header = next(reader)
    if header != CSV_HEADER:
        raise ValueError(f"unexpected header: {header}")
    rows = []
    for k, cells in enumerate(reader):
        if int(cells[0]) != k:
            raise ValueError(f"step column out of order at row {k}")
        vals = [float(c) for c in cells[1:]]
        rows.append([complex(vals[2 * j], vals[2 * j + 1]) for j in range(6)])
    return np.array(rows, dtype=complex).reshape(-1, 6)


def quadrature_check(dim, n, integrand=None):
    """Composite trapezoid over ``[0, 2pi]^dim`` with ``n`` nodes per axis.

    The default integrand is ``exp(i * (x1 + ... + x_dim))``; a callable
    taking ``dim`` coordinate arrays can be passed instead.
    """
    if dim not in (1, 3):
        raise ValueError("dim must be 1 or 3")
    if n < 8:
        raise ValueError("n must be >= 8")
    # periodic integrand: the trapezoid rule reduces to equal weights on n nodes
    nodes = 2 * np.pi * np.arange(n) / n
    grids = np.meshgrid(*([nodes] * dim), indexing="ij", sparse=True)
    if integrand is None:
        values = np.exp(1j * sum(grids))
    else:
        values = np.broadcast_to(integrand(*grids), (n,) * dim)
    h = 2 * np.pi / n
    return complex(np.sum(values) * h ** dim)
