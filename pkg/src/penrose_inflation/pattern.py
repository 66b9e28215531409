"""Finite patches of the Penrose-type pattern P_v.

A lattice point ``x`` of level ``n`` (taken mod 5 into 1..4) contributes the
vertex ``d(x)`` when its internal image ``c(x)`` lies in the open window
``v + W_n``.  Shifts are internal images of rational 5-vectors, so every
decision is exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import scan
from .golden import Cyclo
from .lattice import canonicalize, embed_int, embed_phys, level, unit
from .window import Containment, window_contains, window_scale

__all__ = [
    "Shift",
    "Membership",
    "PatchPoint",
    "Face",
    "PatternPatch",
    "is_member",
    "generate",
    "build_edges_faces",
    "singular_witness",
    "tile_kind",
    "PROJECTION_UNIT",
    "ZERO_SHIFT",
]

# length of one embedding unit in orthogonal-projection coordinates
PROJECTION_UNIT = "sqrt(2/5)"


def _display(z: complex) -> tuple[float, float]:
    return float(f"{z.real:.12g}"), float(f"{z.imag:.12g}")


@dataclass(frozen=True)
class Shift:
    """Window shift ``v = sum_k s_k z^(2k)`` for a rational superspace vector ``s``."""

    coords: tuple[Fraction, ...] = (Fraction(0),) * 5

    def __post_init__(self):
        if len(self.coords) != 5:
            raise ValueError(f"a shift needs 5 coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def parse(cls, text: str) -> "Shift":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 5:
            raise ValueError(f"shift needs 5 comma-separated rationals, got {text!r}")
        try:
            return cls(tuple(Fraction(p) for p in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational in shift {text!r}: {exc}") from None

    @property
    def v(self) -> Cyclo:
        return embed_int_rational(self.coords)

    @property
    def is_zero(self) -> bool:
        return not self.v

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coords]

    def __str__(self):
        return ",".join(self.as_strings())


def embed_int_rational(s) -> Cyclo:
    D, w = scan.shift_integers(s)
    return Cyclo.from_powers(w, D)


ZERO_SHIFT = Shift()


class Membership(enum.Enum):
    MEMBER = "member"
    BOUNDARY = "boundary"
    NON_MEMBER = "non_member"


_FROM_CONTAINMENT = {
    Containment.INSIDE: Membership.MEMBER,
    Containment.BOUNDARY: Membership.BOUNDARY,
    Containment.OUTSIDE: Membership.NON_MEMBER,
}


def is_member(shift: Shift, x) -> Membership:
    """Exact three-way membership of the lattice point ``x`` in the strip."""
    n = level(x)
    if n % 5 == 0:
        return Membership.NON_MEMBER
    xc, _ = canonicalize(x)
    return _FROM_CONTAINMENT[window_contains(level(xc), embed_int(xc), shift.v)]


def tile_kind(j: int, k: int) -> str:
    """Thick (acute angle 72 deg) or thin (36 deg) for generators e_j, e_k."""
    diff = (k - j) % 5
    if diff in (1, 4):
        return "thick"
    if diff in (2, 3):
        return "thin"
    raise ValueError(f"generators {j} and {k} do not span a rhomb")


@dataclass(frozen=True)
class PatchPoint:
    x: tuple
    n: int
    display: tuple[float, float]

    @property
    def phys(self) -> Cyclo:
        return embed_phys(self.x)


@dataclass(frozen=True)
class Face:
    verts: tuple[int, int, int, int]
    kind: str
    gens: tuple[int, int]


@dataclass
class PatternPatch:
    shift: Shift
    radius: float
    points: list[PatchPoint] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)
    faces: list[Face] = field(default_factory=list)
    singular: bool = False
    witness: tuple | None = None
    meta: dict = field(default_factory=dict)

    def index(self) -> dict[tuple, int]:
        return {p.x: i for i, p in enumerate(self.points)}


def _exact_within(x, radius2: Fraction) -> bool:
    return embed_phys(x).abs2() <= radius2


def _scan_pattern(shift: Shift, radius: float, backend=None, max_candidates=scan.DEFAULT_MAX_CANDIDATES):
    """Members and boundary hits with ``|d(x)| <= radius``, sorted by preimage."""
    anchor = shift.v.to_complex()
    r2 = Fraction(radius) ** 2
    members, boundary = [], []
    for n in (1, 2, 3, 4):
        s = window_scale(n)
        hits = scan.scan_level(
            n, shift.coords, scan.window_constraints(n), radius,
            float(abs(s)), anchor, backend=backend, max_candidates=max_candidates,
        )
        for x, code in hits:
            if not _exact_within(x, r2):
                continue
            status = is_member(shift, x)
            expected = Membership.MEMBER if code == 1 else Membership.BOUNDARY
            if status is not expected:
                raise ArithmeticError(f"kernel and exact membership disagree at {x}: {code} vs {status}")
            (members if code == 1 else boundary).append(x)
    members.sort()
    boundary.sort()
    return members, boundary


def generate(shift: Shift, radius: float, backend: str | None = None,
             max_candidates: int = scan.DEFAULT_MAX_CANDIDATES) -> PatternPatch:
    """All points of P_v with ``|d(x)| <= radius``, by exact window test.

    Points are ordered lexicographically by canonical preimage.  Boundary
    lattice points met in the same box mark the patch singular.
    """
    if not (isinstance(radius, (int, float, Fraction)) and radius > 0 and math.isfinite(radius)):
        raise ValueError(f"radius must be a positive finite number, got {radius!r}")
    members, boundary = _scan_pattern(shift, radius, backend, max_candidates)
    points = [PatchPoint(x, level(x), _display(embed_phys(x).to_complex())) for x in members]
    return PatternPatch(
        shift=shift,
        radius=float(radius),
        points=points,
        singular=bool(boundary),
        witness=boundary[0] if boundary else None,
        meta={"unit": "embedding (edge length 1)", "to_projection_scale": PROJECTION_UNIT},
    )


def build_edges_faces(patch: PatternPatch) -> PatternPatch:
    """Add unit edges ``{x, x+e_k}`` and rhombs ``{x, x+e_j, x+e_j+e_k, x+e_k}``."""
    index = patch.index()
    units = [unit(k) for k in range(1, 6)]

    def add(x, e):
        return tuple(a + b for a, b in zip(x, e))

    edges, faces = [], []
    for i, p in enumerate(patch.points):
        for e in units:
            other = index.get(add(p.x, e))
            if other is not None:
                edges.append((i, other))
        for j in range(5):
            xj = add(p.x, units[j])
            ij = index.get(xj)
            if ij is None:
                continue
            for k in range(j + 1, 5):
                ik = index.get(add(p.x, units[k]))
                ijk = index.get(add(xj, units[k]))
                if ik is not None and ijk is not None:
                    faces.append(Face((i, ij, ijk, ik), tile_kind(j + 1, k + 1), (j + 1, k + 1)))
    patch.edges = edges
    patch.faces = faces
    return patch


def singular_witness(shift: Shift, radius: float, backend: str | None = None,
                     max_candidates: int = scan.DEFAULT_MAX_CANDIDATES):
    """First lattice point (lexicographic) on the window frontier with ``|d| <= radius``.

    ``None`` only certifies that no frontier point exists within this radius.
    """
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius!r}")
    _, boundary = _scan_pattern(shift, radius, backend, max_candidates)
    return boundary[0] if boundary else None
