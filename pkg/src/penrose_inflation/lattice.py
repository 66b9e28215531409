"""The superspace lattice Z^5: levels, the cyclic action, projectors, embeddings.

Lattice points are plain 5-tuples of ints.  The physical and internal
projections are realized as the complex embeddings

    d(x) = sum_k x_k z^k        c(x) = sum_k x_k z^(2k)

with ``z = exp(2*pi*i/5)`` and ``k = 1..5``.  Both are similarities of the
orthogonal projections onto E and E': written in the orthonormal basis
``sqrt(2/5) (cos, sin)(2*pi*k/5)`` of E, ``pi x`` is ``d(x) / sqrt(5/2)``, and
likewise for ``c`` and E' with angles ``4*pi*k/5``.  The scale is constant,
so every containment decision can be made on the embeddings directly.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .golden import TAU, TAU_CONJ, Cyclo, Quad

__all__ = [
    "FIVE_W",
    "ProjectorKind",
    "unit",
    "level",
    "cyclic_shift",
    "embed_phys",
    "embed_int",
    "circulant",
    "projector_matrix",
    "canonicalize",
    "mat_mul",
    "mat_add",
    "mat_scale",
    "mat_vec",
]

LatticePoint = tuple  # five ints

FIVE_W = (1, 1, 1, 1, 1)

# similarity factor between the embeddings and the orthogonal projections
PROJECTION_SCALE_SQ = Fraction(2, 5)


class ProjectorKind(enum.Enum):
    PHYS = "phys"
    INT = "int"
    PAR = "par"


def unit(k: int) -> tuple:
    """Canonical basis vector ``e_k`` for ``k`` in 1..5."""
    if not 1 <= k <= 5:
        raise ValueError(f"basis index must be in 1..5, got {k}")
    return tuple(1 if i == k - 1 else 0 for i in range(5))


def level(x) -> int:
    return sum(x)


def cyclic_shift(x, k: int = 1) -> tuple:
    """Apply ``a^k`` where ``a(x1,..,x5) = (x2,x3,x4,x5,x1)``."""
    k %= 5
    x = tuple(x)
    return x[k:] + x[:k]


def embed_phys(x) -> Cyclo:
    # coefficient of z^k is x_k; z^5 = 1 puts x5 on the constant term
    return Cyclo.from_powers((x[4], x[0], x[1], x[2], x[3]))


def embed_int(x) -> Cyclo:
    # z^(2k) for k = 1..5 is z^2, z^4, z^1, z^3, z^0
    return Cyclo.from_powers((x[4], x[2], x[0], x[3], x[1]))


def circulant(a, b, c) -> list[list]:
    """The symmetric circulant matrix with first row ``(a, b, c, c, b)``."""
    row = (a, b, c, c, b)
    return [[row[(j - i) % 5] for j in range(5)] for i in range(5)]


def projector_matrix(kind: ProjectorKind) -> list[list[Quad]]:
    fifth = Fraction(1, 5)
    if kind is ProjectorKind.PHYS:
        m = circulant(Quad(2), -TAU_CONJ, -TAU)
    elif kind is ProjectorKind.INT:
        m = circulant(Quad(2), -TAU, -TAU_CONJ)
    elif kind is ProjectorKind.PAR:
        m = circulant(Quad(1), Quad(1), Quad(1))
    else:
        raise ValueError(f"unknown projector {kind!r}")
    return mat_scale(m, fifth)


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(5)), Quad(0)) for j in range(5)] for i in range(5)]


def mat_add(a, b):
    return [[a[i][j] + b[i][j] for j in range(5)] for i in range(5)]


def mat_scale(a, s):
    return [[s * a[i][j] for j in range(5)] for i in range(5)]


def mat_vec(a, x):
    return tuple(sum((a[i][k] * x[k] for k in range(5)), Quad(0)) for i in range(5))


def canonicalize(x, allow_zero: bool = False) -> tuple[tuple, int]:
    """Shift ``x`` by ``m*(1,1,1,1,1)`` to bring its level into 1..4.

    Returns ``(x + m*(1,1,1,1,1), m)``.  Levels divisible by 5 carry no
    pattern points; they raise ``ValueError`` unless ``allow_zero`` asks for
    the level-0 representative.
    """
    n = level(x)
    if n % 5 == 0:
        if not allow_zero:
            raise ValueError(f"level {n} is divisible by 5; the window W_{n} is empty")
        m = -n // 5
    else:
        m = -(n // 5)
    return tuple(v + m for v in x), m
