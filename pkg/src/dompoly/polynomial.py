"""Exact dense univariate polynomials over the integers and the rationals."""
from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

Number = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class NonIntegralError(ArithmeticError):
    """A rational polynomial was expected to have integer coefficients."""


def _trim(cs: List) -> Tuple:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class _DensePoly:
    """Shared ring arithmetic; subclasses fix the coefficient domain."""

    __slots__ = ("coeffs",)

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([self._coerce(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1):
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c):
        return cls((c,))

    def _wrap(self, other):
        if isinstance(other, _DensePoly):
            return other
        if isinstance(other, Fraction) and other.denominator != 1:
            return RatPolynomial((other,))
        if isinstance(other, (int, Fraction)):
            return type(self)((other,))
        return NotImplemented

    @property
    def degree(self) -> int:
        """Degree; ``-1`` stands in for the zero polynomial's minus infinity."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int):
        return self.coefficient(i)

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def min_support(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no support")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable")

    def _result_type(self, other):
        if isinstance(self, RatPolynomial) or isinstance(other, RatPolynomial):
            return RatPolynomial
        return type(self)

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._result_type(other)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._result_type(other)(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return self._result_type(other)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = type(self).one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int):
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return type(self)([0] * k + list(self.coeffs))

    def compose(self, q):
        """``self(q(x))`` by Horner's scheme."""
        q = self._wrap(q)
        acc = self._result_type(q)(())
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divmod(self, q):
        q = self._wrap(q)
        if not q.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = q.coeffs[-1]
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - len(q.coeffs) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(q.coeffs) - 1]
            if c == 0:
                continue
            if isinstance(lead, int) and isinstance(c, int) and not isinstance(self, RatPolynomial):
                f, r = divmod(c, lead)
                if r:
                    raise InexactDivisionError(f"coefficient {c} not divisible by {lead}")
            else:
                f = Fraction(c) / lead
            quot[k] = f
            for j, cq in enumerate(q.coeffs):
                rem[k + j] -= f * cq
        return self._result_type(q)(quot), self._result_type(q)(rem)

    def exact_divide(self, q):
        try:
            quot, rem = self.divmod(q)
        except InexactDivisionError as exc:
            raise InexactDivisionError(f"{self} is not divisible by {q}: {exc}") from None
        if rem:
            raise InexactDivisionError(f"{self} is not divisible by {q} (remainder {rem})")
        return quot

    def __floordiv__(self, q):
        return self.exact_divide(q)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self)((other,))
        if not isinstance(other, _DensePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


class IntPolynomial(_DensePoly):
    """Polynomial with arbitrary-precision integer coefficients, lowest degree first."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, bool):
            return int(c)
        if isinstance(c, int):
            return c
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        raise TypeError(f"integer coefficient required, got {c!r}")

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        data = json.loads(text) if isinstance(text, str) else text
        return cls(int(s) for s in data)

    def to_rational(self) -> "RatPolynomial":
        return RatPolynomial(self.coeffs)


class RatPolynomial(_DensePoly):
    """Polynomial with exact rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, (int, Fraction)):
            return Fraction(c)
        if isinstance(c, Rational):
            return Fraction(c.numerator, c.denominator)
        raise TypeError(f"rational coefficient required, got {c!r}")

    def _result_type(self, other):
        return RatPolynomial

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self) -> IntPolynomial:
        bad = [(i, c) for i, c in enumerate(self.coeffs) if c.denominator != 1]
        if bad:
            i, c = bad[0]
            raise NonIntegralError(f"coefficient of x^{i} is {c}, not an integer")
        return IntPolynomial(c.numerator for c in self.coeffs)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "RatPolynomial":
        data = json.loads(text) if isinstance(text, str) else text
        return cls(Fraction(s) for s in data)


X = IntPolynomial.x()
ONE = IntPolynomial.one()
ZERO = IntPolynomial.zero()


def parse_rational(text: str) -> Fraction:
    """Parse ``a`` or ``a/b``; decimal and float notation are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational of the form a or a/b: {text!r}") from None
    if d == 0:
        raise ValueError("zero denominator")
    return Fraction(n, d)


def add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a - b


def mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def compose(p: _DensePoly, q: _DensePoly) -> _DensePoly:
    return p.compose(q)


def exact_divide(p: _DensePoly, q: _DensePoly) -> _DensePoly:
    if not q:
        raise ValueError("division by the zero polynomial")
    return p.exact_divide(q)


def eval_rational(p: _DensePoly, t: Number) -> Fraction:
    return Fraction(p(Fraction(t)))


def coefficient(p: _DensePoly, i: int):
    return p.coefficient(i)


def min_support(p: _DensePoly) -> int:
    return p.min_support()


def binomial_shift(r: int) -> IntPolynomial:
    """``(x + 1)**r - 1``."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return (X + 1) ** r - 1


def lagrange_interpolate(points: Sequence[Tuple[Number, Number]]) -> RatPolynomial:
    """Unique polynomial of degree < len(points) through ``points``, exactly.

    Newton divided differences over ``Fraction``.
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [Fraction(px) for px, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("abscissae must be pairwise distinct")
    coef = [Fraction(py) for _, py in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = RatPolynomial((coef[-1],))
    for i in range(n - 2, -1, -1):
        result = result * RatPolynomial((-xs[i], 1)) + coef[i]
    return result
