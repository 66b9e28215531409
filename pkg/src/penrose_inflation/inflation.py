"""Inflation symmetries: integer superspace maps, the factor set, centers.

A triple of integers ``(alpha, beta, gamma)`` fixes the scalings

    lam   = (alpha - beta)/2 + beta*tau        on E
    lam'  = (alpha - beta)/2 + beta*tau'       on E'
    lam'' = (alpha + 5*gamma)/2                on E''

and the superspace map ``A = lam*pi + lam'*pi' + lam''*pi''``, which is the
circulant ``M((alpha+gamma)/2, (gamma+beta)/2, (gamma-beta)/2)``.  ``A`` is
integral iff the three integers share a parity.  If ``lam' W_n`` fits in
``W_{lam'' n}`` for n = 1..4, then ``x -> lam x`` preserves the singular
pattern; strict fits leave room for a whole neighbourhood of centers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import scan
from .golden import TAU, TAU_CONJ, Quad, as_quad
from .lattice import (
    ProjectorKind,
    canonicalize,
    circulant,
    embed_int,
    embed_phys,
    level,
    mat_add,
    mat_scale,
    projector_matrix,
)
from .pattern import (
    Membership,
    PatternPatch,
    Shift,
    ZERO_SHIFT,
    build_edges_faces,
    generate,
    is_member,
    singular_witness,
)
from .window import (
    HALF_PLANE_THRESHOLD,
    containment_margin,
    functional,
    scaled_pentagon_contained,
    window_scale,
)

__all__ = [
    "TripleClass",
    "InflationTriple",
    "PreconditionError",
    "triple_from_abg",
    "triple_for_branch",
    "matrix_A",
    "classify",
    "containment_ratios",
    "interval_for_branch",
    "LambdaFactor",
    "enumerate_lambda",
    "apply_inflation_exact",
    "VerifyReport",
    "verify_patch",
    "center_qualifies",
    "admissible_margins",
    "CenterResult",
    "find_centers",
]


class TripleClass(enum.Enum):
    NOT_IN_L = "not_in_L"
    L_ONLY = "L_only"
    L_TILDE_BOUNDARY = "L_tilde_boundary"
    L_TILDE_0 = "L_tilde_0"

    @property
    def rank(self) -> int:
        return _RANK[self]

    @property
    def in_l_tilde(self) -> bool:
        return self in (TripleClass.L_TILDE_BOUNDARY, TripleClass.L_TILDE_0)


_RANK = {
    TripleClass.NOT_IN_L: 0,
    TripleClass.L_ONLY: 1,
    TripleClass.L_TILDE_BOUNDARY: 2,
    TripleClass.L_TILDE_0: 3,
}


class PreconditionError(ValueError):
    """Structured precondition failure: ``code`` names the violated condition."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class InflationTriple:
    alpha: int
    beta: int
    gamma: int

    @property
    def valid(self) -> bool:
        return self.alpha % 2 == self.beta % 2 == self.gamma % 2

    @property
    def lam(self) -> Quad:
        return Fraction(self.alpha - self.beta, 2) + TAU * self.beta

    @property
    def lam_conj(self) -> Quad:
        return Fraction(self.alpha - self.beta, 2) + TAU_CONJ * self.beta

    @property
    def lam_par(self) -> Quad:
        return Quad(Fraction(self.alpha + 5 * self.gamma, 2))

    @cached_property
    def cls(self) -> TripleClass:
        return classify(self)

    def __str__(self):
        return f"({self.alpha},{self.beta},{self.gamma})"


def triple_from_abg(alpha: int, beta: int, gamma: int) -> InflationTriple:
    return InflationTriple(int(alpha), int(beta), int(gamma))


def triple_for_branch(n: int, beta: int, gamma: int) -> InflationTriple:
    """The triple with ``lam'' = n``, i.e. ``alpha = 2n - 5*gamma``."""
    return InflationTriple(2 * n - 5 * gamma, beta, gamma)


def matrix_A(t: InflationTriple) -> tuple[list[list[Quad]], bool]:
    """``A`` from the projector sum, checked against the circulant closed form."""
    pi, pi_i, pi_p = (projector_matrix(k) for k in ProjectorKind)
    A = mat_add(mat_add(mat_scale(pi, t.lam), mat_scale(pi_i, t.lam_conj)), mat_scale(pi_p, t.lam_par))
    closed = circulant(
        Quad(Fraction(t.alpha + t.gamma, 2)),
        Quad(Fraction(t.gamma + t.beta, 2)),
        Quad(Fraction(t.gamma - t.beta, 2)),
    )
    if A != closed:
        raise ArithmeticError(f"projector sum and closed form disagree for {t}")
    integral = all(e.is_integer() for row in A for e in row)
    return A, integral


def _int_matrix(t: InflationTriple) -> list[list[int]]:
    if not t.valid:
        raise PreconditionError("not_integral", f"A is not integral for {t}: parities differ")
    a, b, c = (t.alpha + t.gamma) // 2, (t.gamma + t.beta) // 2, (t.gamma - t.beta) // 2
    return circulant(a, b, c)


def containment_ratios(t: InflationTriple) -> list[Quad | None]:
    """``r_n = lam' s_n / s_{lam'' n}`` for n = 1..4 (None if the target window is empty)."""
    lpp = int(t.lam_par)
    out = []
    for n in (1, 2, 3, 4):
        target = window_scale(lpp * n)
        out.append(None if target is None else t.lam_conj * window_scale(n) / target)
    return out


def classify(t: InflationTriple) -> TripleClass:
    if not t.valid:
        return TripleClass.NOT_IN_L
    ratios = containment_ratios(t)
    if any(r is None or not scaled_pentagon_contained(r) for r in ratios):
        return TripleClass.L_ONLY
    if all(scaled_pentagon_contained(r, strict=True) for r in ratios):
        return TripleClass.L_TILDE_0
    return TripleClass.L_TILDE_BOUNDARY


_INTERVALS = {
    1: (-TAU / 2, Quad(1)),
    2: (Quad(Fraction(-1, 2)), TAU - 1),
    3: (1 - TAU, Quad(Fraction(1, 2))),
    4: (Quad(-1), TAU / 2),
}


def interval_for_branch(n: int) -> tuple[Quad, Quad]:
    """Closed interval for ``lam'`` on the branch ``lam'' = n`` (note ``1/tau = tau - 1``)."""
    if n not in _INTERVALS:
        raise ValueError(f"branch must be in 1..4, got {n}")
    return _INTERVALS[n]


@dataclass
class LambdaFactor:
    value: Quad
    witnesses: list[tuple[int, int, int, TripleClass]] = field(default_factory=list)

    @property
    def cls(self) -> TripleClass:
        return max((w[3] for w in self.witnesses), key=lambda c: c.rank)

    @property
    def branch(self) -> int:
        return self.witnesses[0][0]

    @property
    def beta(self) -> int:
        return self.witnesses[0][1]

    @property
    def gamma(self) -> int:
        return self.witnesses[0][2]

    @property
    def conj(self) -> Quad:
        return self.value.conj()


def enumerate_lambda(bound) -> list[LambdaFactor]:
    """Every factor ``lam`` with ``|lam| <= bound`` from the four interval branches.

    With ``lam' = lam + ...`` confined to ``[lo_n, hi_n]`` and ``|lam| <= B``:
    ``beta*sqrt5 = lam - lam'`` and ``5*gamma = 2n - beta - (lam + lam')``
    bound ``beta`` and ``gamma``; the scan then filters exactly.
    """
    B = as_quad(bound) if not isinstance(bound, float) else Quad(Fraction(bound))
    if B.sign() <= 0:
        raise ValueError("bound must be positive")
    Bf = float(B) + 1e-9
    found: dict[Quad, LambdaFactor] = {}
    for n in (1, 2, 3, 4):
        lo, hi = interval_for_branch(n)
        span = Bf + max(abs(float(lo)), abs(float(hi)))
        bmax = math.floor(span / math.sqrt(5)) + 1
        for beta in range(-bmax, bmax + 1):
            g_lo = math.floor((2 * n - beta - span) / 5) - 1
            g_hi = math.ceil((2 * n - beta + span) / 5) + 1
            for gamma in range(g_lo, g_hi + 1):
                if (beta - gamma) % 2:
                    continue
                t = triple_for_branch(n, beta, gamma)
                lam, lamc = t.lam, t.lam_conj
                if abs(lam) > B or not (lo <= lamc <= hi):
                    continue
                cls = classify(t)
                if not cls.in_l_tilde:
                    raise ArithmeticError(f"interval branch {n} admits {t} but containment fails")
                found.setdefault(lam, LambdaFactor(lam)).witnesses.append((n, beta, gamma, cls))
    return [found[k] for k in sorted(found)]


def apply_inflation_exact(x, t: InflationTriple, center=(0, 0, 0, 0, 0)) -> tuple:
    """``A_t x = center + A (x - center)`` in exact integers."""
    A = _int_matrix(t)
    if level(center) != 0:
        raise PreconditionError("center_level", f"center {tuple(center)} has level {level(center)}, need 0")
    y = [a - c for a, c in zip(x, center)]
    return tuple(center[i] + sum(A[i][k] * y[k] for k in range(5)) for i in range(5))


def admissible_margins(t: InflationTriple) -> list[tuple[int, Quad]]:
    """Per source level n: ``(sign of host scale, slack)`` for ``lam' W_n`` inside its host.

    A translation ``w`` keeps every ``w + lam' W_n`` strictly inside
    ``W_{lam'' n}`` iff ``f_j(sign * w) < slack`` for all edges ``j`` and all n.
    """
    lpp = int(t.lam_par)
    out = []
    for n, r in zip((1, 2, 3, 4), containment_ratios(t)):
        host = window_scale(lpp * n)
        if r is None or not scaled_pentagon_contained(r, strict=True):
            raise PreconditionError("not_L_tilde_0", f"{t} is not in L~0: no guaranteed neighbourhood")
        out.append((host.sign(), containment_margin(r, abs(host))))
    return out


def _center_ok(t: InflationTriple, shift: Shift, center, margins) -> bool:
    kappa = 1 - t.lam_conj
    u = (embed_int(center) - shift.v).scale(kappa)
    for sign, slack in margins:
        for j in range(5):
            if functional(j, u) * sign >= slack:
                return False
    return True


def center_qualifies(shift: Shift, t: InflationTriple, center) -> bool:
    """Whether ``center`` is an inflation center guaranteed by the window containments."""
    if level(center) != 0:
        return False
    if shift.is_zero and not any(center):
        return classify(t).in_l_tilde
    if classify(t) is not TripleClass.L_TILDE_0:
        return False
    return _center_ok(t, shift, center, admissible_margins(t))


@dataclass
class VerifyReport:
    triple: InflationTriple
    center: tuple
    checked: int = 0
    failures: list[tuple[tuple, tuple, str]] = field(default_factory=list)
    lookup_checked: int = 0
    lookup_failures: list[tuple[tuple, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.lookup_failures

    def summary(self) -> str:
        s = f"{self.checked} points checked, {len(self.failures)} failures"
        if self.lookup_checked:
            s += f"; {self.lookup_checked} in-patch images, {len(self.lookup_failures)} missing"
        return s


def verify_patch(patch: PatternPatch, t: InflationTriple, center=(0, 0, 0, 0, 0), lookup: bool = False) -> VerifyReport:
    """Map every patch point by ``A_t`` and test the image for exact membership.

    The test needs no image lookup, so points near the rim are checked as
    well as interior ones.  With ``lookup`` the images landing within the
    patch radius must also be present in the patch.
    """
    center = tuple(int(c) for c in center)
    if not t.valid:
        raise PreconditionError("not_integral", f"A is not integral for {t}: parities differ")
    if level(center) != 0:
        raise PreconditionError("center_level", f"center {center} has level {level(center)}, need 0")
    if not patch.shift.is_zero and not center_qualifies(patch.shift, t, center):
        raise PreconditionError(
            "center_not_admissible",
            f"center {center} is not an admissible inflation center of the shifted pattern for {t}",
        )
    report = VerifyReport(t, center)
    index = patch.index() if lookup else None
    r2 = Fraction(patch.radius) ** 2
    for p in patch.points:
        y = apply_inflation_exact(p.x, t, center)
        status = is_member(patch.shift, y)
        report.checked += 1
        if status is not Membership.MEMBER:
            report.failures.append((p.x, y, status.value))
            continue
        if index is not None and embed_phys(y).abs2() <= r2:
            report.lookup_checked += 1
            canon, _ = canonicalize(y)
            if canon not in index:
                report.lookup_failures.append((p.x, canon))
    return report


@dataclass(frozen=True)
class CenterResult:
    t: tuple
    center_display: tuple[float, float]
    margin_used: Quad


def _admissible_radius(margins, kappa: Quad) -> Quad:
    return min(m for _, m in margins) / abs(kappa)


def find_centers(
    shift: Shift,
    t: InflationTriple,
    search_radius: float,
    max_count: int = 100,
    validate_radius: float = 3.0,
    backend: str | None = None,
    max_candidates: int = scan.DEFAULT_MAX_CANDIDATES,
) -> list[CenterResult]:
    """Level-0 lattice points ``t`` with ``|d(t)| <= search_radius`` that are inflation centers.

    Acceptance is the exact per-edge inequality
    ``f_j(sign_n * (1 - lam')(c(t) - v)) < slack_n`` for every source level
    n; ``margin_used`` reports ``min slack / |1 - lam'|`` in functional units
    (divide by tau for a Euclidean radius in the internal plane).  Results
    are ordered by distance from the origin, then lexicographically, and each
    is re-checked on a patch of radius ``validate_radius``.
    """
    if search_radius <= 0:
        raise ValueError("search_radius must be positive")
    if t.lam_conj == 1:
        raise PreconditionError("degenerate", f"lam' = 1 for {t}: no neighbourhood construction")
    if classify(t) is not TripleClass.L_TILDE_0:
        raise PreconditionError("not_L_tilde_0", f"{t} is not in L~0: no guaranteed neighbourhood")
    if not shift.is_zero:
        w = singular_witness(shift, search_radius, backend=backend, max_candidates=max_candidates)
        if w is not None:
            raise PreconditionError("singular_shift", f"shift {shift} is singular: frontier point {w}")
    margins = admissible_margins(t)
    kappa = 1 - t.lam_conj
    rho = _admissible_radius(margins, kappa)
    constraints = [
        scan.Constraint(j, kappa * sign, slack) for sign, slack in margins for j in range(5)
    ]
    # the admissible region lies in a pentagon of circumradius slack / (|kappa| h)
    int_radius = float(rho / HALF_PLANE_THRESHOLD) * (1 + 1e-9)
    hits = scan.scan_level(
        0, shift.coords, constraints, search_radius, int_radius,
        shift.v.to_complex(), backend=backend, max_candidates=max_candidates,
    )
    r2 = Fraction(search_radius) ** 2
    cands = []
    for x, code in hits:
        if code != 1:
            continue
        d2 = embed_phys(x).abs2()
        if d2 > r2:
            continue
        if not _center_ok(t, shift, x, margins):
            raise ArithmeticError(f"kernel accepted {x} but the exact margin test rejects it")
        cands.append((d2, x))
    cands.sort()
    patch = generate(shift, validate_radius, backend=backend)
    out = []
    for _, x in cands[:max_count]:
        rep = verify_patch(patch, t, x)
        if not rep.ok:
            raise ArithmeticError(f"center {x} failed re-validation: {rep.failures[:3]}")
        z = embed_phys(x).to_complex()
        out.append(CenterResult(x, (float(f"{z.real:.12g}"), float(f"{z.imag:.12g}")), rho))
    return out
