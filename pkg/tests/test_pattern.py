import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from penrose_inflation import scan
from penrose_inflation.lattice import canonicalize, cyclic_shift, embed_phys, level
from penrose_inflation.pattern import (
    Membership,
    Shift,
    build_edges_faces,
    generate,
    is_member,
    singular_witness,
    tile_kind,
)

from .conftest import SEVENTH

K = np.arange(1, 6)
C1, S1 = np.cos(2 * np.pi * K / 5), np.sin(2 * np.pi * K / 5)
C2, S2 = np.cos(4 * np.pi * K / 5), np.sin(4 * np.pi * K / 5)
PI_INT = 0.4 * (np.outer(C2, C2) + np.outer(S2, S2))


def strip_slack(x, s):
    """LP oracle: largest t with some y in x + E inside the cube pi'(s) + [t, 1-t]^5.

    Only the E' component of the shift enters, so the cube is translated
    inside E' and the levels of its sections are unchanged.
    """
    x = np.asarray(x, float)
    s = PI_INT @ np.asarray([float(c) for c in s])
    # variables (a, b, t); y = x + a*C1 + b*S1
    A, ub = [], []
    for k in range(5):
        A.append([-C1[k], -S1[k], 1.0]); ub.append(x[k] - s[k])
        A.append([C1[k], S1[k], 1.0]); ub.append(s[k] + 1 - x[k])
    res = linprog([0, 0, -1], A_ub=A, b_ub=ub, bounds=[(None, None)] * 2 + [(None, 1)], method="highs")
    assert res.status == 0
    return -res.fun


def brute_force(shift, radius, widen=3):
    """Exact membership over the box |x_k| <= radius + widen at every nonzero level."""
    r = int(math.ceil(radius)) + widen
    rng = np.arange(-r, r + 1)
    g = np.stack(np.meshgrid(rng, rng, rng, rng, indexing="ij"), -1).reshape(-1, 4)
    v = shift.v.to_complex()
    out = []
    for n in (1, 2, 3, 4):
        x = np.concatenate([g, (n - g.sum(1))[:, None]], 1)
        d = x @ (C1 + 1j * S1)
        c = x @ (C2 + 1j * S2)
        keep = (np.abs(d) <= radius + 1e-6) & (np.abs(c - v) <= 1.7)
        for row in x[keep]:
            xt = tuple(int(a) for a in row)
            if embed_phys(xt).abs2() <= Fraction(radius) ** 2 and is_member(shift, xt) is Membership.MEMBER:
                out.append(xt)
    return sorted(out)


def test_examples(origin_patch8):
    p = origin_patch8
    assert len(p.points) == 200
    assert p.singular
    assert p.witness == (-3, -1, 2, 3, 1)
    assert p.points == sorted(p.points, key=lambda q: q.x)
    assert all(1 <= q.n <= 4 for q in p.points)
    assert tile_kind(1, 2) == "thick" and tile_kind(1, 3) == "thin" and tile_kind(5, 1) == "thick"
    with pytest.raises(ValueError):
        tile_kind(2, 2)
    assert is_member(Shift(), (1, 0, 0, 0, 0)) is Membership.BOUNDARY
    assert is_member(Shift(), (1, 1, 0, 0, 0)) is Membership.MEMBER
    assert is_member(Shift(), (1, 0, 1, 0, 0)) is Membership.BOUNDARY
    assert is_member(Shift(), (2, 0, 0, 0, 0)) is Membership.NON_MEMBER
    assert is_member(Shift(), (0, 0, 0, 0, 0)) is Membership.NON_MEMBER
    assert is_member(Shift(), (1, 1, 1, -1, -1)) is Membership.NON_MEMBER
    assert is_member(Shift(), p.witness) is Membership.BOUNDARY


def test_witness_is_first_boundary_point():
    assert singular_witness(Shift(), 2) == (0, 0, 0, 0, 1)
    assert singular_witness(SEVENTH, 4) is None
    with pytest.raises(ValueError):
        singular_witness(Shift(), 0)


def test_shift_parsing():
    s = Shift.parse("1/7, 0, 0, 0, -2/3")
    assert s.coords[0] == Fraction(1, 7) and s.coords[4] == Fraction(-2, 3)
    assert str(s) == "1/7,0,0,0,-2/3"
    assert Shift.parse("1,1,1,1,1").is_zero
    for bad in ("1,2", "a,0,0,0,0", "1/0,0,0,0,0"):
        with pytest.raises(ValueError):
            Shift.parse(bad)


@pytest.mark.parametrize("shift", [Shift(), SEVENTH, Shift.parse("1/3,1/5,0,0,0")], ids=["zero", "seventh", "mixed"])
def test_membership_matches_strip_lp(shift):
    found = 0
    for x in brute_force_candidates(4):
        if level(x) % 5 == 0:
            continue
        slack = strip_slack(x, shift.coords)
        if abs(slack) < 1e-7:
            assert is_member(shift, x) is not Membership.MEMBER or slack > 0
            continue
        want = Membership.MEMBER if slack > 0 else Membership.NON_MEMBER
        got = is_member(shift, x)
        if got is Membership.BOUNDARY:
            pytest.fail(f"exact boundary at {x} but LP slack {slack}")
        assert got is want, (x, slack)
        found += want is Membership.MEMBER
    assert found > 20


def brute_force_candidates(radius):
    r = int(radius)
    pts = []
    for g in itertools.product(range(-2, 3), repeat=4):
        for n in (1, 2, 3, 4):
            x = (*g, n - sum(g))
            if abs(embed_phys(x).to_complex()) <= radius:
                pts.append(x)
    return pts


def test_completeness_against_brute_force(origin_patch8):
    assert [p.x for p in origin_patch8.points] == brute_force(Shift(), 8)


def test_completeness_shifted(seventh_patch10):
    assert [p.x for p in seventh_patch10.points] == brute_force(SEVENTH, 10)
    assert not seventh_patch10.singular and seventh_patch10.witness is None


def test_distinct_physical_positions(origin_patch8):
    pos = {p.phys for p in origin_patch8.points}
    assert len(pos) == len(origin_patch8.points)


def test_tenfold_symmetry_at_zero_shift(origin_patch8):
    pts = {p.x for p in origin_patch8.points}
    for x in pts:
        assert canonicalize(cyclic_shift(x))[0] in pts
        assert canonicalize(tuple(-a for a in x))[0] in pts


def test_edges_have_unit_length(origin_patch8):
    P = origin_patch8.points
    assert origin_patch8.edges
    for i, j in origin_patch8.edges:
        (x1, y1), (x2, y2) = P[i].display, P[j].display
        assert math.hypot(x1 - x2, y1 - y2) == pytest.approx(1.0, abs=1e-9)
        assert (embed_phys(P[i].x) - embed_phys(P[j].x)).abs2() == 1


def _angles(face, points):
    v = [np.array(points[i].display) for i in face.verts]
    out = []
    for k in range(4):
        a, b = v[k - 1] - v[k], v[(k + 1) % 4] - v[k]
        out.append(round(math.degrees(math.acos(np.dot(a, b) / np.linalg.norm(a) / np.linalg.norm(b)))))
    return tuple(sorted(out))


def test_two_rhomb_classes(origin_patch8):
    classes = {}
    for f in origin_patch8.faces:
        classes.setdefault(_angles(f, origin_patch8.points), set()).add(f.kind)
    assert classes == {(72, 72, 108, 108): {"thick"}, (36, 36, 144, 144): {"thin"}}


def test_tiling_structure_nonsingular(seventh_patch10):
    p = seventh_patch10
    assert len(p.points) - len(p.edges) + len(p.faces) == 1
    count = {}
    edge_set = {tuple(sorted(e)) for e in p.edges}
    for f in p.faces:
        for k in range(4):
            e = tuple(sorted((f.verts[k], f.verts[(k + 1) % 4])))
            assert e in edge_set
            count[e] = count.get(e, 0) + 1
    assert max(count.values()) == 2


def test_radius_validation():
    for bad in (0, -1, float("inf"), float("nan")):
        with pytest.raises(ValueError):
            generate(Shift(), bad)


def test_box_guard():
    with pytest.raises(scan.BoxTooLargeError, match="max_candidates"):
        generate(Shift(), 8, max_candidates=100)


def test_edges_and_faces_gens(origin_patch6):
    P = origin_patch6.points
    for f in origin_patch6.faces:
        j, k = f.gens
        x0 = P[f.verts[0]].x
        assert P[f.verts[1]].x[j - 1] == x0[j - 1] + 1
        assert P[f.verts[3]].x[k - 1] == x0[k - 1] + 1
        assert f.kind == tile_kind(j, k)
