"""Bounded lattice scans: candidate boxes, integer constraints, kernel dispatch.

A lattice point of level ``n`` satisfies the coordinate identity

    x_k = (2/5) Re(d(x) conj z^k) + (2/5) Re(c(x) conj z^(2k)) + n/5

so ``|d(x)| <= R`` together with ``|c(x) - anchor| <= rho`` confines every
coordinate to an interval of half-width ``(2/5)(R + rho)``.  The float box is
widened before rounding; exact filtering happens afterwards.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import _kernels
from .golden import Quad
from .window import HALF_PLANE_THRESHOLD, functional_table, window_scale

DEFAULT_MAX_CANDIDATES = 40_000_000

_BOX_SLACK = 1e-7


class BoxTooLargeError(ValueError):
    """The candidate box exceeds the configured ``max_candidates`` bound."""


class Constraint(NamedTuple):
    """``mult * f_j(c(x) - v) < thr``, with ``f_j`` the j-th edge functional."""

    j: int
    mult: Quad
    thr: Quad


def _int_table() -> tuple[np.ndarray, np.ndarray]:
    tab = functional_table()
    tp = np.zeros((5, 5), dtype=np.int64)
    tq = np.zeros((5, 5), dtype=np.int64)
    for j in range(5):
        for m in range(5):
            a, b, d = (tab[j][m] * 4).int_parts()
            if d != 1:
                raise ArithmeticError("edge functional table is not in (1/4)Z[sqrt5]")
            tp[j, m], tq[j, m] = a, b
    return tp, tq


TAB_P, TAB_Q = _int_table()


def window_constraints(n: int) -> list[Constraint]:
    """Constraints for ``c(x)`` in ``v + W_n`` (strict, open window)."""
    s = window_scale(n)
    if s is None:
        raise ValueError(f"W_{n} is empty")
    sigma = Quad(s.sign())
    return [Constraint(j, sigma, HALF_PLANE_THRESHOLD * abs(s)) for j in range(5)]


def shift_integers(coords) -> tuple[int, list[int]]:
    """``(D, w)`` with ``sum_k s_k z^(2k) = sum_m w_m z^m / D``."""
    fr = [Fraction(c) for c in coords]
    D = 1
    for f in fr:
        D = D * f.denominator // math.gcd(D, f.denominator)
    ints = [int(f * D) for f in fr]
    # power-basis order of z^(2k): m=0 <- s5, 1 <- s3, 2 <- s1, 3 <- s4, 4 <- s2
    return D, [ints[4], ints[2], ints[0], ints[3], ints[1]]


def _to_pairs(c: Constraint, D: int) -> tuple[int, int, int, int, int]:
    ma, mb, md = c.mult.int_parts()
    ta, tb, td = (c.thr * (4 * D)).int_parts()
    L = md * td // math.gcd(md, td)
    return c.j, ma * (L // md), mb * (L // md), ta * (L // td), tb * (L // td)


def candidate_box(n: int, anchor: complex, phys_radius: float, int_radius: float):
    """Integer ranges for ``x1..x4`` and ``x5`` at level ``n``."""
    hw = 0.4 * (phys_radius + int_radius) + _BOX_SLACK
    lo, hi = [], []
    for k in range(1, 6):
        rot = complex(math.cos(4 * math.pi * k / 5), -math.sin(4 * math.pi * k / 5))
        centre = n / 5 + 0.4 * (anchor * rot).real
        lo.append(math.ceil(centre - hw))
        hi.append(math.floor(centre + hw))
    return lo[:4], hi[:4], lo[4], hi[4]


def box_size(lo, hi) -> int:
    size = 1
    for a, b in zip(lo, hi):
        size *= max(b - a + 1, 0)
    return size


def scan_level(
    n: int,
    shift_coords,
    constraints: list[Constraint],
    phys_radius: float,
    int_radius: float,
    anchor: complex,
    backend: str | None = None,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> list[tuple[tuple, int]]:
    """All level-``n`` points in the box passing the constraints.

    Returns ``(x, code)`` pairs in lexicographic order of ``x``, code 1 for
    strict passes and 2 for boundary hits.  The radius filter here is a
    widened float test; callers re-check radii exactly.
    """
    lo, hi, x5lo, x5hi = candidate_box(n, anchor, phys_radius, int_radius)
    size = box_size(lo, hi)
    if size > max_candidates:
        raise BoxTooLargeError(
            f"candidate box of {size} points exceeds max_candidates={max_candidates}; "
            "reduce the radius or raise max_candidates"
        )
    if size == 0:
        return []
    D, w = shift_integers(shift_coords)
    pairs = [_to_pairs(c, D) for c in constraints]
    X = max(abs(v) for v in (*lo, *hi, x5lo, x5hi)) + abs(n)
    B = D * X + max(abs(v) for v in w)
    F = 15 * B
    magnitude = max(abs(p[3]) + abs(p[4]) + (abs(p[1]) + abs(p[2])) * 6 * F for p in pairs)
    r2max = phys_radius * phys_radius * (1 + 1e-9) + 1e-9
    codes = _kernels.run_scan(
        backend or _kernels.default_backend(),
        n, lo, hi, x5lo, x5hi, D, w, TAB_P, TAB_Q, pairs,
        _kernels.DCOS, _kernels.DSIN, r2max, magnitude,
    )
    hits = np.flatnonzero(codes)
    if hits.size == 0:
        return []
    dims = [h - l + 1 for l, h in zip(lo, hi)]
    idx = np.unravel_index(hits, dims)
    out = []
    for row, code in zip(zip(*idx), codes[hits]):
        x = [int(row[i]) + lo[i] for i in range(4)]
        x.append(n - sum(x))
        out.append((tuple(x), int(code)))
    return out
