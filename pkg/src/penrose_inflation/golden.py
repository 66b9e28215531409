"""Exact arithmetic in Q(sqrt5) and in the fifth cyclotomic field Q(zeta).

Both types are immutable and keep a canonical representation, so equality
is a field-wise comparison.  Internally every value is stored as integer
numerators over one shared positive denominator; the public ``p``/``q`` and
``coeffs`` accessors hand back :class:`fractions.Fraction` objects.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from numbers import Rational

__all__ = [
    "Quad",
    "Cyclo",
    "TAU",
    "TAU_CONJ",
    "SQRT5",
    "ZETA",
    "quad_sign",
    "as_quad",
]


def _gcd_all(*vals: int) -> int:
    return reduce(math.gcd, vals)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Quad:
    """The real number ``p + q*sqrt(5)`` with rational ``p`` and ``q``."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, p=0, q=0):
        fp, fq = _as_fraction(p), _as_fraction(q)
        d = fp.denominator * fq.denominator // math.gcd(fp.denominator, fq.denominator)
        self._set(fp.numerator * (d // fp.denominator), fq.numerator * (d // fq.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        if d < 0:
            a, b, d = -a, -b, -d
        g = _gcd_all(a, b, d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        if a == 0 and b == 0:
            d = 1
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "Quad":
        obj = cls.__new__(cls)
        obj._set(a, b, d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Quad is immutable")

    # -- accessors -------------------------------------------------------
    @property
    def p(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def q(self) -> Fraction:
        return Fraction(self._b, self._d)

    def int_parts(self) -> tuple[int, int, int]:
        """``(a, b, d)`` with value ``(a + b*sqrt5) / d``, ``d > 0``, reduced."""
        return self._a, self._b, self._d

    def tau_coords(self) -> tuple[Fraction, Fraction]:
        """Coordinates ``(u, w)`` with ``self == u + w*tau``."""
        return self.p - self.q, 2 * self.q

    def is_rational(self) -> bool:
        return self._b == 0

    def is_integer(self) -> bool:
        return self._b == 0 and self._d == 1

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = as_quad(other, strict=False)
        if o is None:
            return NotImplemented
        return Quad._raw(self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return Quad._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = as_quad(other, strict=False)
        if o is None:
            return NotImplemented
        return Quad._raw(self._a * o._d - o._a * self._d, self._b * o._d - o._b * self._d, self._d * o._d)

    def __rsub__(self, other):
        o = as_quad(other, strict=False)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = as_quad(other, strict=False)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return Quad._raw(a1 * a2 + 5 * b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "Quad":
        a, b, d = self._a, self._b, self._d
        norm = a * a - 5 * b * b
        if norm == 0:
            raise ZeroDivisionError("Quad division by zero")
        # d / (a + b s5) = d (a - b s5) / norm
        return Quad._raw(d * a, -d * b, norm)

    def __truediv__(self, other):
        o = as_quad(other, strict=False)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = as_quad(other, strict=False)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        acc, base = ONE, self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def conj(self) -> "Quad":
        """Galois conjugate ``p - q*sqrt5``."""
        return Quad._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._a * self._a - 5 * self._b * self._b, self._d * self._d)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- ordering --------------------------------------------------------
    def sign(self) -> int:
        return _sign_pair(self._a, self._b)

    def __eq__(self, other):
        o = as_quad(other, strict=False)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def _cmp(self, other) -> int | None:
        o = as_quad(other, strict=False)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __bool__(self):
        return self._a != 0 or self._b != 0

    # -- conversion ------------------------------------------------------
    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self._a

    def __float__(self):
        return float(Fraction(self._a, self._d)) + float(Fraction(self._b, self._d)) * math.sqrt(5.0)

    def __repr__(self):
        return f"Quad({str(self.p)!r}, {str(self.q)!r})"

    def __str__(self):
        u, w = self.tau_coords()
        if w == 0:
            return str(u)
        op = "+" if w > 0 else "-"
        return f"{u} {op} {abs(w)}·τ"


def _sign_pair(a: int, b: int) -> int:
    """Sign of ``a + b*sqrt5`` for integers ``a``, ``b``."""
    if a >= 0 and b >= 0:
        return 1 if (a or b) else 0
    if a <= 0 and b <= 0:
        return -1
    # opposite signs; a*a == 5*b*b is impossible for nonzero pairs
    if a > 0:
        return 1 if a * a > 5 * b * b else -1
    return 1 if 5 * b * b > a * a else -1


def as_quad(x, strict: bool = True) -> Quad | None:
    if isinstance(x, Quad):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        f = Fraction(x)
        return Quad._raw(f.numerator, 0, f.denominator)
    if strict:
        raise TypeError(f"cannot interpret {x!r} as a Quad")
    return None


def quad_sign(x: Quad) -> int:
    """-1, 0 or 1 according to the sign of the real number ``x``."""
    return x.sign()


ONE = Quad._raw(1, 0, 1)
ZERO = Quad._raw(0, 0, 1)
SQRT5 = Quad._raw(0, 1, 1)
TAU = Quad._raw(1, 1, 2)
TAU_CONJ = Quad._raw(1, -1, 2)


class Cyclo:
    """Element ``c0 + c1*z + c2*z^2 + c3*z^3`` of Q(z), ``z = exp(2*pi*i/5)``.

    ``z^4`` is eliminated eagerly through ``1 + z + z^2 + z^3 + z^4 = 0``.
    """

    __slots__ = ("_c", "_d")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        fs = [_as_fraction(c) for c in (c0, c1, c2, c3)]
        d = reduce(lambda x, y: x * y // math.gcd(x, y), (f.denominator for f in fs), 1)
        self._set(tuple(f.numerator * (d // f.denominator) for f in fs), d)

    def _set(self, c: tuple, d: int) -> None:
        if d < 0:
            c, d = tuple(-x for x in c), -d
        g = _gcd_all(d, *c)
        if g > 1:
            c, d = tuple(x // g for x in c), d // g
        if not any(c):
            d = 1
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_d", d)

    @classmethod
    def _raw(cls, c: tuple, d: int) -> "Cyclo":
        obj = cls.__new__(cls)
        obj._set(c, d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo is immutable")

    @classmethod
    def from_powers(cls, coeffs, d: int = 1) -> "Cyclo":
        """Build ``sum(coeffs[m] * z^m) / d`` from integer coefficients, any length."""
        e = [0] * 5
        for m, c in enumerate(coeffs):
            e[m % 5] += c
        return cls._raw((e[0] - e[4], e[1] - e[4], e[2] - e[4], e[3] - e[4]), d)

    @classmethod
    def zeta_power(cls, k: int) -> "Cyclo":
        e = [0] * 5
        e[k % 5] = 1
        return cls.from_powers(e)

    @classmethod
    def from_quad(cls, x: Quad) -> "Cyclo":
        # sqrt5 = z - z^2 - z^3 + z^4 = -1 - 2 z^2 - 2 z^3
        a, b, d = x.int_parts()
        return cls._raw((a - b, 0, -2 * b, -2 * b), d)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._d) for c in self._c)

    def int_parts(self) -> tuple[tuple[int, ...], int]:
        return self._c, self._d

    def __add__(self, other):
        o = _as_cyclo(other)
        if o is None:
            return NotImplemented
        d = self._d * o._d
        return Cyclo._raw(tuple(x * o._d + y * self._d for x, y in zip(self._c, o._c)), d)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._raw(tuple(-x for x in self._c), self._d)

    def __sub__(self, other):
        o = _as_cyclo(other)
        if o is None:
            return NotImplemented
        d = self._d * o._d
        return Cyclo._raw(tuple(x * o._d - y * self._d for x, y in zip(self._c, o._c)), d)

    def __rsub__(self, other):
        o = _as_cyclo(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Quad):
            return self.scale(other)
        o = _as_cyclo(other)
        if o is None:
            return NotImplemented
        e = [0] * 5
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(o._c):
                    e[(i + j) % 5] += x * y
        return Cyclo._raw((e[0] - e[4], e[1] - e[4], e[2] - e[4], e[3] - e[4]), self._d * o._d)

    __rmul__ = __mul__

    def scale(self, s) -> "Cyclo":
        """Multiply by a Quad (or rational) scalar."""
        s = as_quad(s)
        if s.is_rational():
            a, _, d = s.int_parts()
            return Cyclo._raw(tuple(a * x for x in self._c), d * self._d)
        return self * Cyclo.from_quad(s)

    def conj(self) -> "Cyclo":
        """Complex conjugation ``z^k -> z^(5-k)``."""
        c0, c1, c2, c3 = self._c
        # c0 + c1 z^4 + c2 z^3 + c3 z^2, then eliminate z^4
        return Cyclo._raw((c0 - c1, -c1, c3 - c1, c2 - c1), self._d)

    def real_part(self) -> Quad:
        """Exact real part as an element of Q(sqrt5)."""
        s = self + self.conj()
        c0, c1, c2, c3 = s._c
        if c1 != 0 or c2 != c3:
            raise ArithmeticError(f"symmetrized element {s!r} is not real")
        # (c0 + c2 (z^2 + z^3)) / (2 d) with z^2 + z^3 = -tau
        return (Quad._raw(c0, 0, 1) - TAU * c2) / (2 * s._d)

    def abs2(self) -> Quad:
        """Exact squared modulus."""
        return (self * self.conj()).real_part()

    def to_complex(self) -> complex:
        c = self._c
        z = complex(float(Fraction(c[0], self._d)), 0.0)
        for k in (1, 2, 3):
            if c[k]:
                z += float(Fraction(c[k], self._d)) * _ZETA_F[k]
        return z

    def to_complex_float(self) -> tuple[float, float]:
        z = self.to_complex()
        return z.real, z.imag

    def __eq__(self, other):
        o = _as_cyclo(other)
        if o is None:
            return NotImplemented
        return self._c == o._c and self._d == o._d

    def __hash__(self):
        return hash((self._c, self._d))

    def __bool__(self):
        return any(self._c)

    def __repr__(self):
        return "Cyclo({})".format(", ".join(repr(str(c)) for c in self.coeffs))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}·ζ^{k}")
        return " + ".join(terms) if terms else "0"


def _as_cyclo(x) -> Cyclo | None:
    if isinstance(x, Cyclo):
        return x
    if isinstance(x, Quad):
        return Cyclo.from_quad(x)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        f = Fraction(x)
        return Cyclo._raw((f.numerator, 0, 0, 0), f.denominator)
    return None


_ZETA_F = [complex(math.cos(2 * math.pi * k / 5), math.sin(2 * math.pi * k / 5)) for k in range(5)]

ZETA = Cyclo.zeta_power(1)
