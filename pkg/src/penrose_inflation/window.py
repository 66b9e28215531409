"""Pentagon windows W_n and exact containment predicates.

W_1 is the open regular pentagon whose vertices are the five fifth roots of
unity in the internal embedding.  The other windows are scaled copies,
``W_n = s_n * W_1`` with ``s_n`` in ``{1, -tau, tau, -1}`` for
``n = 1, 2, 3, 4 (mod 5)`` and ``W_n`` empty for ``n = 0 (mod 5)``.

Edge ``j`` of W_1 joins ``z^j`` and ``z^(j+1)``.  Its outward normal is the
cyclotomic integer ``nu_j = z^j + z^(j+1)`` (length tau, left unnormalized)
and ``z`` lies strictly inside W_1 iff ``Re(z * conj(nu_j)) < (1 + tau)/2``
for every ``j``.  Margins below are expressed in units of that functional;
divide by ``tau`` to get Euclidean distances in the internal embedding.
"""

from __future__ import annotations

import enum

from .golden import TAU, Cyclo, Quad

__all__ = [
    "Containment",
    "HALF_PLANE_THRESHOLD",
    "window_scale",
    "pentagon_halfplanes",
    "functional",
    "functional_table",
    "window_contains",
    "scaled_pentagon_contained",
    "containment_margin",
    "pentagon_vertices",
]


class Containment(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


HALF_PLANE_THRESHOLD = (1 + TAU) / 2

_SCALES = {1: Quad(1), 2: -TAU, 3: TAU, 4: Quad(-1)}


def window_scale(n: int) -> Quad | None:
    """``s_n`` with ``W_n = s_n * W_1``; ``None`` when W_n is empty."""
    return _SCALES.get(n % 5)


def _normal(j: int) -> Cyclo:
    return Cyclo.zeta_power(j) + Cyclo.zeta_power(j + 1)


def pentagon_halfplanes() -> list[tuple[Cyclo, Quad]]:
    return [(_normal(j), HALF_PLANE_THRESHOLD) for j in range(5)]


def pentagon_vertices() -> list[Cyclo]:
    return [Cyclo.zeta_power(m) for m in range(5)]


# _TABLE[j][m] = Re(z^m * conj(nu_j)); a linear functional on Q(z) is fixed by
# its values on the basis 1, z, z^2, z^3
_TABLE = [[(Cyclo.zeta_power(m) * _normal(j).conj()).real_part() for m in range(5)] for j in range(5)]


def functional_table() -> list[list[Quad]]:
    """Exact values ``Re(z^m * conj(nu_j))`` indexed ``[j][m]``, ``m = 0..4``."""
    return [row[:] for row in _TABLE]


def functional(j: int, z: Cyclo) -> Quad:
    """``Re(z * conj(nu_j))`` computed exactly."""
    row = _TABLE[j % 5]
    acc = Quad(0)
    for m, c in enumerate(z.coeffs):
        if c:
            acc = acc + row[m] * c
    return acc


def _classify_unit(z: Cyclo) -> Containment:
    on_edge = False
    for j in range(5):
        s = (HALF_PLANE_THRESHOLD - functional(j, z)).sign()
        if s < 0:
            return Containment.OUTSIDE
        if s == 0:
            on_edge = True
    return Containment.BOUNDARY if on_edge else Containment.INSIDE


def window_contains(n: int, z: Cyclo, v: Cyclo | None = None) -> Containment:
    """Classify ``z`` against the open window ``v + W_n``."""
    s = window_scale(n)
    if s is None:
        return Containment.OUTSIDE
    w = z if v is None else z - v
    return _classify_unit(w.scale(1 / s))


def scaled_pentagon_contained(r, strict: bool = False) -> bool:
    """Whether ``r * W_1`` lies in ``W_1``.

    Non-strict compares the open sets (closure of ``rW_1`` inside the
    closure of W_1); strict asks for the closure of ``rW_1`` inside the
    open W_1.  The inradius/circumradius ratio of the pentagon, tau/2,
    bounds the negative scalings.
    """
    r = Quad(0) + r
    if r.sign() == 0:
        return True
    if r.sign() > 0:
        return r < 1 if strict else r <= 1
    return -r < TAU / 2 if strict else -r <= TAU / 2


def containment_margin(r, host_scale_abs=1) -> Quad:
    """Slack left when ``r * W_1`` sits strictly inside the host window.

    The host is ``s * W_1`` with ``|s| = host_scale_abs``.  The result is the
    minimum over the host's half-planes of (threshold minus the largest value
    the functional takes on the closure of ``r * W_1``), scaled by ``|s|``.
    A translate of ``r * W_1`` by ``w`` (in normalized host orientation) stays
    inside iff every functional of ``w`` is below this value.  Units are the
    functional's; Euclidean slack is the margin divided by ``tau``.
    """
    r = Quad(0) + r
    if not scaled_pentagon_contained(r, strict=True):
        raise ValueError(f"closure of {r}·W1 is not strictly inside W1; no positive margin")
    verts = [Cyclo.zeta_power(m).scale(r) for m in range(5)]
    best = None
    for j in range(5):
        top = max(functional(j, p) for p in verts)
        slack = HALF_PLANE_THRESHOLD - top
        if best is None or slack < best:
            best = slack
    return best * host_scale_abs
