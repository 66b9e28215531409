import numpy as np
import pytest

from penrose_inflation import _kernels, scan
from penrose_inflation.pattern import Membership, Shift, generate, is_member

from .conftest import SEVENTH


@pytest.mark.parametrize("shift", [Shift(), SEVENTH], ids=["zero", "seventh"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_backends_agree(shift, n):
    args = (n, shift.coords, scan.window_constraints(n), 9.0, 1.7, shift.v.to_complex())
    a = scan.scan_level(*args, backend="numba")
    b = scan.scan_level(*args, backend="numpy")
    assert a == b and a


def test_object_mode_agrees_with_exact_membership():
    # a large denominator pushes the integer bound past int64 headroom
    shift = Shift.parse("1/1000003,2/999983,0,0,0")
    patch = generate(shift, 3)
    assert patch.points
    for p in patch.points:
        assert is_member(shift, p.x) is Membership.MEMBER
    small = generate(Shift.parse("1/7,2/11,0,0,0"), 3, backend="numpy")
    assert small.points


def test_env_flag(monkeypatch):
    monkeypatch.setenv(_kernels.ENV_FLAG, "numpy")
    assert _kernels.default_backend() == "numpy"
    monkeypatch.setenv(_kernels.ENV_FLAG, "numba")
    assert _kernels.default_backend() == "numba"
    monkeypatch.setenv(_kernels.ENV_FLAG, "fortran")
    with pytest.raises(ValueError):
        _kernels.default_backend()


def test_sign_np_matches_scalar():
    rng = np.random.default_rng(3)
    p = rng.integers(-50, 50, 2000)
    q = rng.integers(-25, 25, 2000)
    got = _kernels._sign_np(p, q)
    want = [int(np.sign(a + b * np.sqrt(5))) for a, b in zip(p, q)]
    assert list(got) == want
    big = _kernels._sign_np(np.array([10**30], dtype=object), np.array([-(10**30)], dtype=object))
    assert list(big) == [-1]


def test_empty_box():
    assert scan.box_size([0, 1], [-1, 3]) == 0
    assert scan.shift_integers(["1/2", "1/3", 0, 0, 0]) == (6, [0, 0, 3, 0, 2])
