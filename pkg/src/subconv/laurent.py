"""Exact Laurent polynomials over the rationals.

A Laurent polynomial is stored densely between its lowest and highest
nonzero degree.  Every constructor canonicalizes (trims zero ends, reduces
fractions) so two polynomials are equal iff their stored fields are equal.
All arithmetic uses :class:`fractions.Fraction`; nothing is ever rounded.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

from .errors import NotDivisible, ZeroArgument

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def to_rational(x: RationalLike) -> Fraction:
    """Convert ``x`` to a Fraction, refusing floats.

    Floats are rejected because a binary float silently turns ``0.1`` into
    a 55-bit fraction; pass ``"1/10"`` or ``Fraction(1, 10)`` instead.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class LaurentPolynomial:
    """Finitely supported map ``degree -> Fraction``.

    ``coefficients[j]`` is the coefficient of ``z**(lowest_degree + j)``.
    The zero polynomial has no coefficients and ``lowest_degree == 0``.
    Instances are immutable and hashable.
    """

    __slots__ = ("_lo", "_coeffs")

    def __init__(self, coefficients: Iterable[RationalLike] = (), lowest_degree: int = 0):
        cs = [to_rational(c) for c in coefficients]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        stop = len(cs)
        while stop > start and cs[stop - 1] == 0:
            stop -= 1
        if start == stop:
            self._lo = 0
            self._coeffs: tuple[Fraction, ...] = ()
        else:
            self._lo = int(lowest_degree) + start
            self._coeffs = tuple(cs[start:stop])

    # construction helpers

    @classmethod
    def from_dict(cls, terms: Mapping[int, RationalLike]) -> "LaurentPolynomial":
        terms = {d: c for d, c in terms.items() if to_rational(c) != 0}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(d, 0) for d in range(lo, hi + 1)], lo)

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "LaurentPolynomial":
        return cls([coefficient], degree)

    @classmethod
    def constant(cls, c: RationalLike) -> "LaurentPolynomial":
        return cls([c], 0)

    # fields

    @property
    def lowest_degree(self) -> int:
        return self._lo

    @property
    def highest_degree(self) -> int:
        """Top degree; equals ``lowest_degree - 1`` for the zero polynomial."""
        return self._lo + len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, degree: int) -> Fraction:
        j = degree - self._lo
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return Fraction(0)

    def items(self):
        """Yield ``(degree, coefficient)`` for every nonzero term."""
        for j, c in enumerate(self._coeffs):
            if c:
                yield self._lo + j, c

    def __len__(self) -> int:
        return len(self._coeffs)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial([-c for c in self._coeffs], self._lo)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = to_rational(scalar)
        return LaurentPolynomial([c / s for c in self._coeffs], self._lo)

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    # comparison / display

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self._lo == other._lo and self._coeffs == other._coeffs
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self == other

    def __hash__(self):
        return hash((self._lo, self._coeffs))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({[str(c) for c in self._coeffs]!r}, lowest_degree={self._lo})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self.items():
            if d == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}z" if d == 1 else f"{mag}z^{d}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def _coerce(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, str):
        return NotImplemented
    try:
        return LaurentPolynomial.constant(to_rational(x))
    except TypeError:
        return NotImplemented


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
Z = LaurentPolynomial.monomial(1)
ONE_PLUS_Z = LaurentPolynomial([1, 1], 0)


def add(p: LaurentPolynomial, r: LaurentPolynomial) -> LaurentPolynomial:
    if p.is_zero():
        return r
    if r.is_zero():
        return p
    lo = min(p.lowest_degree, r.lowest_degree)
    hi = max(p.highest_degree, r.highest_degree)
    return LaurentPolynomial(
        [p.coefficient(d) + r.coefficient(d) for d in range(lo, hi + 1)], lo
    )


def multiply(p: LaurentPolynomial, r: LaurentPolynomial) -> LaurentPolynomial:
    """Convolve coefficient sequences; lowest degrees add."""
    if p.is_zero() or r.is_zero():
        return ZERO
    a, b = p.coefficients, r.coefficients
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return LaurentPolynomial(out, p.lowest_degree + r.lowest_degree)


def upsample(p: LaurentPolynomial, m: int) -> LaurentPolynomial:
    """Return ``p(z**m)``."""
    if m < 1:
        raise ValueError(f"upsampling factor must be >= 1, got {m}")
    if m == 1 or p.is_zero():
        return p
    out = [Fraction(0)] * ((len(p) - 1) * m + 1)
    out[::m] = p.coefficients
    return LaurentPolynomial(out, p.lowest_degree * m)


def evaluate(p: LaurentPolynomial, x: RationalLike) -> Fraction:
    x = to_rational(x)
    if x == 0:
        if p.lowest_degree < 0 and not p.is_zero():
            raise ZeroArgument("cannot evaluate negative powers of z at 0")
        return p.coefficient(0)
    # Horner from the top, then rescale by the lowest power.
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc * x ** p.lowest_degree


def divide_by_one_plus_z(p: LaurentPolynomial) -> LaurentPolynomial:
    """Exact quotient ``q`` with ``(1 + z) * q == p``.

    Long division runs from the highest degree down; the leftover at the
    lowest degree is the remainder and must vanish.
    """
    if p.is_zero():
        return ZERO
    lo, hi = p.lowest_degree, p.highest_degree
    q = [Fraction(0)] * (hi - lo)  # degrees lo .. hi-1
    carry = Fraction(0)
    for d in range(hi, lo, -1):
        carry = p.coefficient(d) - carry
        q[d - 1 - lo] = carry
    remainder = p.coefficient(lo) - carry
    if remainder != 0:
        raise NotDivisible(
            f"{p} is not divisible by 1 + z (value at -1 is {evaluate(p, -1)})"
        )
    return LaurentPolynomial(q, lo)


def symbol_power(q: LaurentPolynomial, L: int) -> LaurentPolynomial:
    """Symbol of the ``L``-fold iterate: ``q(z) q(z^2) ... q(z^(2^(L-1)))``."""
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    result = q
    for _ in range(L - 1):
        result = multiply(q, upsample(result, 2))
    return result


def coset_abs_sums(p: LaurentPolynomial, m: int) -> list[Fraction]:
    """Entry ``r`` is the sum of ``|p_d|`` over degrees ``d = r (mod m)``."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    sums = [Fraction(0)] * m
    for d, c in p.items():
        sums[d % m] += abs(c)
    return sums


def coset_signed_sums(p: LaurentPolynomial, m: int) -> list[Fraction]:
    """Like :func:`coset_abs_sums` without the absolute values.

    For ``m == 2`` this is ``[even-degree sum, odd-degree sum]``.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    sums = [Fraction(0)] * m
    for d, c in p.items():
        sums[d % m] += c
    return sums
