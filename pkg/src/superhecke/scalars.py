"""Exact scalar arithmetic: big rationals, Laurent polynomials in q, and their fraction field.

Two scalar modes run through the whole package.  "poly" mode computes over the
Laurent polynomial ring Z[q, q^-1]; it is used wherever no division occurs
(groupoid data, Hecke structure constants).  "eval" mode computes over Q at a
fixed rational q0 (default 2); it is used for representation matrices and rank
computations, which need a field.

All values are immutable after construction and safe to share between threads.
Division by zero raises ZeroDivisionError.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

#: Arbitrary-precision rational scalar.  fractions.Fraction already maintains
#: the invariants we need: always reduced, denominator positive, 0 == 0/1.
BigRational = Fraction

Scalar = Union[Fraction, "LaurentPoly", "RationalFunction"]


def rational_from_string(s: str) -> Fraction:
    """Parse "num/den" or "num" into a rational."""
    return Fraction(s)


def rational_to_string(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


class LaurentPoly:
    """Laurent polynomial in q with integer coefficients.

    Stored as a sorted tuple of (exponent, coefficient) pairs with no zero
    coefficients; the zero polynomial is the empty tuple.  This makes equal
    values structurally identical, so equality and hashing are cheap.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
                if not acc[e]:
                    del acc[e]
        self._c = tuple(sorted(acc.items()))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(((0, 1),))

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls(((1, 1),))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls(((exp, coeff),))

    @classmethod
    def from_int(cls, k: int) -> "LaurentPoly":
        return cls(((0, k),)) if k else cls()

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._c

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return self._c[0][0]

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return self._c[-1][0]

    def coefficient(self, exp: int) -> int:
        for e, c in self._c:
            if e == exp:
                return c
        return 0

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self._c)
        for e, c in o._c:
            d[e] = d.get(e, 0) + c
        return LaurentPoly(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(tuple((e, -c) for e, c in self._c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d: dict[int, int] = {}
        for e1, c1 in self._c:
            for e2, c2 in o._c:
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly(d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers leave the ring; use inverse()")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self._c))

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero Laurent polynomial")
        return RationalFunction(LaurentPoly.one(), self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None and isinstance(other, RationalFunction):
            return RationalFunction(self, LaurentPoly.one()) / other
        if o is None:
            return NotImplemented
        return RationalFunction(self, o)

    def evaluate(self, q0: Fraction) -> Fraction:
        """Exact substitution q -> q0.  Needs q0 != 0 if negative exponents occur."""
        q0 = Fraction(q0)
        total = Fraction(0)
        for e, c in self._c:
            total += c * q0**e
        return total

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in reversed(self._c):
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _content(p: LaurentPoly) -> int:
    g = 0
    for _, c in p.items():
        g = gcd(g, abs(c))
    return g


def _poly_divmod_frac(num: list[Fraction], den: list[Fraction]):
    """Division of coefficient lists (ascending degree) over Q."""
    num = num[:]
    dn = len(den) - 1
    lead = den[-1]
    quo = [Fraction(0)] * max(0, len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        f = num[i] / lead
        quo[i - dn] = f
        if f:
            for j in range(dn + 1):
                num[i - dn + j] -= f * den[j]
    while num and not num[-1]:
        num.pop()
    return quo, num


def _to_frac_list(p: LaurentPoly) -> tuple[list[Fraction], int]:
    """Shift to an ordinary polynomial; return (ascending coeff list, shift)."""
    if p.is_zero:
        return [], 0
    mn = p.min_exp
    size = p.max_exp - mn + 1
    out = [Fraction(0)] * size
    for e, c in p.items():
        out[e - mn] = Fraction(c)
    return out, mn


def _primitive_from_frac_list(coeffs: list[Fraction]) -> LaurentPoly:
    """Clear denominators and content; force positive leading coefficient."""
    if not coeffs:
        return LaurentPoly.zero()
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return LaurentPoly(tuple((i, c) for i, c in enumerate(ints) if c))


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd up to units q^k: primitive, positive leading coefficient, min exponent 0."""
    if a.is_zero and b.is_zero:
        return LaurentPoly.zero()
    if a.is_zero:
        return _primitive_from_frac_list(_to_frac_list(b)[0])
    if b.is_zero:
        return _primitive_from_frac_list(_to_frac_list(a)[0])
    fa, _ = _to_frac_list(a)
    fb, _ = _to_frac_list(b)
    while fb:
        _, fa = _poly_divmod_frac(fa, fb)
        fa, fb = fb, fa
    return _primitive_from_frac_list(fa)


def laurent_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division; raises ValueError if b does not divide a."""
    if b.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero:
        return LaurentPoly.zero()
    fa, sa = _to_frac_list(a)
    fb, sb = _to_frac_list(b)
    quo, rem = _poly_divmod_frac(fa, fb)
    if rem:
        raise ValueError("not divisible")
    out: dict[int, int] = {}
    for i, c in enumerate(quo):
        if c:
            if c.denominator != 1:
                raise ValueError("not divisible over the integers")
            out[i + sa - sb] = int(c)
    return LaurentPoly(out)


class RationalFunction:
    """Quotient of integer Laurent polynomials, kept in a canonical form.

    Invariants: denominator nonzero; numerator and denominator coprime and
    with coprime integer contents; denominator has min exponent 0 and positive
    leading coefficient.  Two equal values therefore have identical storage.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = LaurentPoly.one()):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", LaurentPoly.zero())
            object.__setattr__(self, "den", LaurentPoly.one())
            return
        g = laurent_gcd(num, den)
        num = laurent_exact_div(num, g)
        den = laurent_exact_div(den, g)
        # gcd of integer contents
        cg = gcd(_content(num), _content(den))
        if cg > 1:
            num = LaurentPoly(tuple((e, c // cg) for e, c in num.items()))
            den = LaurentPoly(tuple((e, c // cg) for e, c in den.items()))
        # normalize the unit q^k * (+-1)
        shift = den.min_exp
        num = num.shift(-shift)
        den = den.shift(-shift)
        if den.items()[-1][1] < 0:
            num = -num
            den = -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        return cls(p, LaurentPoly.one())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        if isinstance(other, int):
            return RationalFunction(LaurentPoly.from_int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def evaluate(self, q0: Fraction) -> Fraction:
        d = self.den.evaluate(q0)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q = {q0}")
        return self.num.evaluate(q0) / d

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == LaurentPoly.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def eval_at(p: "LaurentPoly | RationalFunction", q0: Fraction) -> Fraction:
    """Exact evaluation of a poly-mode scalar at a rational point."""
    return p.evaluate(Fraction(q0))


def laurent_to_json(p: LaurentPoly) -> list[list]:
    """Encode as [[exponent, coefficient-string], ...], exponents ascending."""
    return [[e, str(c)] for e, c in p.items()]


def laurent_from_json(data) -> LaurentPoly:
    return LaurentPoly(tuple((int(e), int(c)) for e, c in data))


def scalar_to_json(x: Scalar):
    if isinstance(x, Fraction):
        return rational_to_string(x)
    if isinstance(x, LaurentPoly):
        return laurent_to_json(x)
    raise TypeError(f"cannot serialize scalar of type {type(x)!r}")
