"""Masks, symbols and the norm quantities of a binary subdivision scheme."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

from .errors import PreconditionViolated
from .laurent import (
    LaurentPolynomial,
    RationalLike,
    coset_abs_sums,
    coset_signed_sums,
    divide_by_one_plus_z,
    evaluate,
    symbol_power,
    to_rational,
)


@dataclass(frozen=True)
class Mask:
    """Finite mask ``a_offset, ..., a_{offset+n-1}``.

    Zero entries at either end are trimmed (and the offset adjusted), so
    the first and last stored coefficients are always nonzero.
    """

    offset: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [to_rational(c) for c in self.coefficients]
        if not any(cs):
            raise ValueError("a mask needs at least one nonzero coefficient")
        start = next(i for i, c in enumerate(cs) if c)
        stop = len(cs) - next(i for i, c in enumerate(reversed(cs)) if c)
        object.__setattr__(self, "offset", int(self.offset) + start)
        object.__setattr__(self, "coefficients", tuple(cs[start:stop]))

    @classmethod
    def of(cls, coefficients: Iterable[RationalLike], offset: int = 0) -> "Mask":
        return cls(offset, tuple(coefficients))

    @property
    def last(self) -> int:
        """Index of the last coefficient."""
        return self.offset + len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)


def symbol_from_mask(m: Mask) -> LaurentPolynomial:
    return LaurentPolynomial(m.coefficients, m.offset)


def mask_from_symbol(p: LaurentPolynomial) -> Mask:
    if p.is_zero():
        raise ValueError("the zero symbol has no mask")
    return Mask(p.lowest_degree, p.coefficients)


@dataclass(frozen=True)
class Scheme:
    """The subdivision operator ``S_a`` defined by a mask."""

    mask: Mask
    name: Optional[str] = field(default=None, compare=False)

    @classmethod
    def from_symbol(cls, symbol: LaurentPolynomial, name: Optional[str] = None) -> "Scheme":
        return cls(mask_from_symbol(symbol), name)

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[RationalLike], offset: int = 0,
                          name: Optional[str] = None) -> "Scheme":
        return cls(Mask.of(coefficients, offset), name)

    @cached_property
    def symbol(self) -> LaurentPolynomial:
        return symbol_from_mask(self.mask)

    def __str__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"{label}a(z) = {self.symbol}"


@dataclass(frozen=True)
class NecessaryConditions:
    """Outcome of checking ``a(1) == 2`` and ``a(-1) == 0``."""

    a_at_1: Fraction
    a_at_minus1: Fraction

    @property
    def violations(self) -> tuple[str, ...]:
        out = []
        if self.a_at_1 != 2:
            out.append(f"a(1) = {self.a_at_1}, expected 2")
        if self.a_at_minus1 != 0:
            out.append(f"a(-1) = {self.a_at_minus1}, expected 0")
        return tuple(out)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def _symbol_of(s) -> LaurentPolynomial:
    return s.symbol if isinstance(s, Scheme) else s


def check_necessary_conditions(s) -> NecessaryConditions:
    a = _symbol_of(s)
    return NecessaryConditions(evaluate(a, 1), evaluate(a, -1))


def difference_symbol(s) -> LaurentPolynomial:
    """Symbol ``q = a / (1 + z)`` of the scheme acting on first differences.

    Raises :class:`~subconv.errors.NotDivisible` when ``a(-1) != 0``.
    """
    return divide_by_one_plus_z(_symbol_of(s))


def operator_norm(q: LaurentPolynomial, L: int) -> Fraction:
    """Sup-norm of ``S_q^L``: largest absolute coset sum of ``q^L`` mod ``2^L``."""
    return max(coset_abs_sums(symbol_power(q, L), 2 ** L))


def binary_coset_norm(q: LaurentPolynomial, L: int) -> Fraction:
    """Larger of the even- and odd-degree absolute sums of ``q^L``.

    Agrees with :func:`operator_norm` at ``L == 1`` only.
    """
    return max(coset_abs_sums(symbol_power(q, L), 2))


def even_odd_sums(q: LaurentPolynomial) -> tuple[Fraction, Fraction]:
    """Signed even/odd coefficient sums ``(S_e, S_o)`` of a difference symbol.

    Requires ``q(1) == 1``; the result is checked against the closed forms
    ``((1 + q(-1)) / 2, (1 - q(-1)) / 2)``.
    """
    at_1 = evaluate(q, 1)
    if at_1 != 1:
        raise PreconditionViolated(f"q(1) = {at_1}, expected 1")
    s_e, s_o = coset_signed_sums(q, 2)
    at_m1 = evaluate(q, -1)
    if (s_e, s_o) != ((1 + at_m1) / 2, (1 - at_m1) / 2):
        raise RuntimeError(f"even/odd sums of {q} disagree with q(-1) = {at_m1}")
    return s_e, s_o
