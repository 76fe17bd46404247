"""The order-12 group of signed 6x6 permutation matrices.

Elements are written ``±a .. ±f``. ``a`` is the identity, ``b``, ``d`` and
``f`` square to ``-a`` and generate the group; ``c`` and ``e`` are defined
through products (``c = -bf``, ``e = -bd``) so they never need to be typed
in by hand.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "LABELS",
    "NotAGroupElement",
    "SignedElement",
    "basis_matrix",
    "identify",
    "multiply",
    "cayley_table",
    "PUBLISHED_CAYLEY",
    "cayley_mismatches",
    "Relation",
    "relation_audit",
    "enumerate_group",
    "reduce_word",
    "adjoint_layout",
    "generator_layout",
    "rot2_reference",
    "rot2_hyperbolic",
]

LABELS = ("a", "b", "c", "d", "e", "f")


class NotAGroupElement(ValueError):
    """Raised when a matrix is not one of the twelve group matrices."""


@dataclass(frozen=True, order=True)
class SignedElement:
    label: str
    sign: int = 1

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown label {self.label!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    @classmethod
    def parse(cls, token):
        """Parse ``'a'``, ``'+b'`` or ``'-c'``."""
        token = token.strip()
        sign = 1
        if token[:1] in "+-":
            sign = -1 if token[0] == "-" else 1
            token = token[1:]
        return cls(token, sign)

    @property
    def matrix(self):
        return self.sign * basis_matrix(self.label)

    def __neg__(self):
        return SignedElement(self.label, -self.sign)

    def __mul__(self, other):
        return multiply(self, other)

    def __str__(self):
        return self.label if self.sign > 0 else "-" + self.label

    def signed(self):
        """Token with an explicit sign, e.g. ``+a``."""
        return ("+" if self.sign > 0 else "-") + self.label


def _from_entries(entries):
    m = np.zeros((6, 6), dtype=np.int64)
    for (row, col), value in entries.items():
        m[row - 1, col - 1] = value
    return m


@lru_cache(maxsize=None)
def _basis():
    b = _from_entries({(1, 2): -1, (2, 1): 1, (3, 6): -1, (4, 5): 1, (5, 4): -1, (6, 3): 1})
    d = _from_entries({(1, 6): -1, (2, 5): 1, (3, 4): -1, (4, 3): 1, (5, 2): -1, (6, 1): 1})
    f = _from_entries({(1, 4): -1, (2, 3): 1, (3, 2): -1, (4, 1): 1, (5, 6): -1, (6, 5): 1})
    mats = {
        "a": np.eye(6, dtype=np.int64),
        "b": b,
        "c": -(b @ f),
        "d": d,
        "e": -(b @ d),
        "f": f,
    }
    for m in mats.values():
        m.setflags(write=False)
    return mats


def basis_matrix(label):
    """Integer 6x6 matrix of the positive element ``label``.

    The returned array is read-only; copy it before mutating.
    """
    if isinstance(label, SignedElement):
        return label.matrix
    try:
        return _basis()[label]
    except KeyError:
        raise ValueError(f"unknown label {label!r}") from None


def identify(m):
    """Return the :class:`SignedElement` whose matrix equals ``m``."""
    m = np.asarray(m)
    if m.shape != (6, 6):
        raise NotAGroupElement(f"expected a 6x6 matrix, got shape {m.shape}")
    for label, mat in _basis().items():
        if np.array_equal(m, mat):
            return SignedElement(label, 1)
        if np.array_equal(m, -mat):
            return SignedElement(label, -1)
    raise NotAGroupElement("matrix is not one of the 12 signed group matrices")


def multiply(x, y):
    return identify(x.matrix @ y.matrix)


def cayley_table():
    """6x6 list of products, entry ``[r][s] = (+r)(+s)``."""
    return [[multiply(SignedElement(r), SignedElement(s)) for s in LABELS] for r in LABELS]


# Multiplication table as printed (row times column).
PUBLISHED_CAYLEY = (
    ("a", "b", "c", "d", "e", "f"),
    ("b", "-a", "f", "-e", "d", "-c"),
    ("c", "d", "e", "f", "a", "b"),
    ("d", "-c", "b", "-a", "f", "-e"),
    ("e", "f", "a", "b", "c", "d"),
    ("f", "-e", "d", "-c", "b", "-a"),
)


def cayley_mismatches(table=None):
    """Cells ``(row, col, computed, printed)`` where the table differs from print."""
    table = cayley_table() if table is None else table
    out = []
    for r, (row, printed) in enumerate(zip(table, PUBLISHED_CAYLEY)):
        for s, (cell, token) in enumerate(zip(row, printed)):
            if cell != SignedElement.parse(token):
                out.append((LABELS[r], LABELS[s], str(cell), token))
    return out


def _word_value(word):
    m = np.eye(6, dtype=np.int64)
    for token in word:
        element = token if isinstance(token, SignedElement) else SignedElement.parse(token)
        m = m @ element.matrix
    return identify(m)


def reduce_word(word):
    """Product of the letters of ``word`` taken left to right.

    ``word`` is a string such as ``"bfdbdbfb"`` or a sequence of labels or
    :class:`SignedElement` values.
    """
    return _word_value(list(word))


@dataclass(frozen=True)
class Relation:
    text: str
    lhs: SignedElement
    rhs: SignedElement

    @property
    def holds(self):
        return self.lhs == self.rhs

    def describe(self):
        status = "CONFIRMED" if self.holds else "CONTRADICTED"
        return f"{self.text}: {status} (actual {self.lhs.signed()})"


# (printed relation, left word, right word); the words use signed tokens.
_RELATIONS = [
    ("b^2 = -1", ["b", "b"], ["-a"]),
    ("d^2 = -1", ["d", "d"], ["-a"]),
    ("f^2 = -1", ["f", "f"], ["-a"]),
    ("bd = -e", ["b", "d"], ["-e"]),
    ("df = -e", ["d", "f"], ["-e"]),
    ("fb = -e", ["f", "b"], ["-e"]),
    ("bf = -c", ["b", "f"], ["-c"]),
    ("fd = -c", ["f", "d"], ["-c"]),
    ("db = -c", ["d", "b"], ["-c"]),
    ("bf = fd", ["b", "f"], ["f", "d"]),
    ("df = fb", ["d", "f"], ["f", "b"]),
    ("bd = df", ["b", "d"], ["d", "f"]),
    ("e^3 = -1", ["e", "e", "e"], ["-a"]),
    ("c^3 = -1", ["c", "c", "c"], ["-a"]),
    ("ce = 1", ["c", "e"], ["a"]),
    ("(-c)(-e) = 1", ["-c", "-e"], ["a"]),
]


def relation_audit():
    """Evaluate each printed product relation with the integer matrices.

    The cube relations for ``c`` and ``e`` come out contradicted: both cube
    to ``+a``, which is what the Cayley table rows for ``c`` and ``e`` say.
    """
    return [Relation(text, _word_value(lhs), _word_value(rhs)) for text, lhs, rhs in _RELATIONS]


def enumerate_group(generators=("b", "d", "f")):
    """Closure of the generators under multiplication (breadth first)."""
    gens = [SignedElement.parse(g) if isinstance(g, str) else g for g in generators]
    seen = {SignedElement("a")}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


_ADJOINT = [
    "a -b c -f e -d",
    "b a f c d e",
    "e -f a -d c -b",
    "f e d a b c",
    "c -d e -b a -f",
    "d c b e f a",
]


def adjoint_layout():
    """Positional 6x6 layout of signed labels that the generators are read from."""
    return [[SignedElement.parse(t) for t in row.split()] for row in _ADJOINT]


def generator_layout():
    """:func:`adjoint_layout` with the ``a``, ``c`` and ``e`` slots set to ``None``."""
    return [
        [None if cell.label in ("a", "c", "e") else cell for cell in row]
        for row in adjoint_layout()
    ]


def rot2_reference(scale, angle):
    """``exp(scale) * [[cos, -sin], [sin, cos]]`` at ``angle``."""
    c, s = np.cos(angle), np.sin(angle)
    return np.exp(scale) * np.array([[c, -s], [s, c]])


def rot2_hyperbolic(angle):
    """Boost matrix ``[[cosh, sinh], [sinh, cosh]]``."""
    ch, sh = np.cosh(angle), np.sinh(angle)
    return np.array([[ch, sh], [sh, ch]])
