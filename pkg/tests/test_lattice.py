import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from penrose_inflation.golden import TAU, Cyclo, Quad
from penrose_inflation.lattice import (
    ProjectorKind,
    canonicalize,
    circulant,
    cyclic_shift,
    embed_int,
    embed_phys,
    level,
    mat_add,
    mat_mul,
    mat_vec,
    projector_matrix,
    unit,
)

points = st.tuples(*[st.integers(-30, 30)] * 5)
ZETA = Cyclo.zeta_power(1)


def orthonormal_projections(x):
    """Float oracle: orthogonal projections onto E and E' in cos/sin bases."""
    k = np.arange(1, 6)
    a, b = 2 * np.pi * k / 5, 4 * np.pi * k / 5
    basis = np.array([np.cos(a), np.sin(a), np.cos(b), np.sin(b)]) * math.sqrt(2 / 5)
    p = basis @ np.asarray(x, dtype=float)
    return complex(p[0], p[1]), complex(p[2], p[3])


def test_examples():
    assert unit(1) == (1, 0, 0, 0, 0)
    assert level((3, -1, 0, 2, 1)) == 5
    assert cyclic_shift((1, 2, 3, 4, 5)) == (2, 3, 4, 5, 1)
    assert cyclic_shift((1, 2, 3, 4, 5), 5) == (1, 2, 3, 4, 5)
    assert embed_phys(unit(5)) == 1
    assert embed_phys(unit(1)) == ZETA
    assert embed_int(unit(1)) == Cyclo.zeta_power(2)
    assert embed_phys((1, 1, 1, 1, 1)) == 0
    assert embed_int((1, 1, 1, 1, 1)) == 0
    with pytest.raises(ValueError):
        unit(0)


def test_canonicalize():
    assert canonicalize((1, 1, 1, 1, 3)) == ((0, 0, 0, 0, 2), -1)
    assert canonicalize((0, 0, 0, 0, -1)) == ((1, 1, 1, 1, 0), 1)
    with pytest.raises(ValueError):
        canonicalize((1, 2, 2, 0, 0))
    assert canonicalize((1, 2, 2, 0, 0), allow_zero=True) == ((0, 1, 1, -1, -1), -1)


@given(points)
def test_canonicalize_properties(x):
    if level(x) % 5 == 0:
        return
    y, m = canonicalize(x)
    assert 1 <= level(y) <= 4
    assert embed_phys(y) == embed_phys(x)
    assert embed_int(y) == embed_int(x)
    assert y == tuple(v + m for v in x)


@given(points)
def test_cyclic_equivariance(x):
    # the cyclic shift rotates d by z and c by z^2
    ax = cyclic_shift(x)
    assert embed_phys(ax) * ZETA == embed_phys(x)
    assert embed_int(ax) * Cyclo.zeta_power(2) == embed_int(x)
    assert level(ax) == level(x)


@given(points)
def test_embedding_is_rotated_scaled_projection(x):
    pe, pi = orthonormal_projections(x)
    s = math.sqrt(5 / 2)
    assert cmath.isclose(embed_phys(x).to_complex(), s * pe, abs_tol=1e-9)
    assert cmath.isclose(embed_int(x).to_complex(), s * pi, abs_tol=1e-9)


@given(points)
def test_coordinate_identity(x):
    # x_k = (2/5) Re(d conj z^k) + (2/5) Re(c conj z^2k) + level/5, exactly
    d, c = embed_phys(x), embed_int(x)
    for k in range(1, 6):
        val = (Fraction(2, 5) * (d * Cyclo.zeta_power(-k)).real_part()
               + Fraction(2, 5) * (c * Cyclo.zeta_power(-2 * k)).real_part()
               + Fraction(level(x), 5))
        assert val == x[k - 1]


def test_projectors_are_complementary_idempotents():
    mats = [projector_matrix(k) for k in ProjectorKind]
    ident = circulant(Quad(1), Quad(0), Quad(0))
    zero = circulant(Quad(0), Quad(0), Quad(0))
    assert mat_add(mat_add(mats[0], mats[1]), mats[2]) == ident
    for i, a in enumerate(mats):
        for j, b in enumerate(mats):
            assert mat_mul(a, b) == (a if i == j else zero)
    for a in mats:
        assert all(a[i][j] == a[j][i] for i in range(5) for j in range(5))


@given(points)
def test_projector_kernel_matches_embedding(x):
    pi = projector_matrix(ProjectorKind.PHYS)
    px = mat_vec(pi, x)
    # d only sees the E component, and c kills it
    d_of_px = sum((Cyclo.zeta_power(k + 1).scale(px[k]) for k in range(5)), Cyclo(0))
    assert d_of_px == embed_phys(x)
    pint = mat_vec(projector_matrix(ProjectorKind.INT), x)
    assert sum((Cyclo.zeta_power(k + 1).scale(pint[k]) for k in range(5)), Cyclo(0)) == 0


def test_projector_entries():
    pi = projector_matrix(ProjectorKind.PHYS)
    assert pi[0][0] == Fraction(2, 5)
    assert pi[0][1] == (TAU - 1) / 5
    assert pi[0][2] == -TAU / 5
