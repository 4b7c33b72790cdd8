"""Named test schemes and seeded random generators for audits."""
from __future__ import annotations

import random
from fractions import Fraction

from .laurent import ONE_PLUS_Z, LaurentPolynomial, RationalLike, to_rational
from .refine import GridSequence
from .scheme import Scheme


def spline(m: int, centered: bool = False) -> Scheme:
    """B-spline scheme of degree ``m`` with symbol ``(1 + z)^(m+1) / 2^m``.

    ``centered`` shifts the mask so its support is symmetric about 0
    (only possible for odd ``m``), e.g. the linear spline becomes
    ``[1/2, 1, 1/2]`` at offset -1.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")
    symbol = ONE_PLUS_Z ** (m + 1) / 2 ** m
    offset = 0
    if centered:
        if m % 2 == 0:
            raise ValueError("only odd-degree spline masks can be centred")
        offset = -(m + 1) // 2
    return Scheme.from_coefficients(symbol.coefficients, offset, name=f"spline-{m}")


def four_point(w: RationalLike = Fraction(1, 16)) -> Scheme:
    """Interpolatory four-point scheme with tension ``w`` (1/16 by default)."""
    w = to_rational(w)
    half = Fraction(1, 2)
    return Scheme.from_coefficients([-w, 0, half + w, 1, half + w, 0, -w], -3, name="four-point")


def lazy() -> Scheme:
    """Symbol ``1 + z``: duplicates every value, never contracts."""
    return Scheme.from_coefficients([1, 1], 0, name="lazy")


def divergent_example() -> Scheme:
    """``a(z) = 2 + z - z^2 = (1 + z)(2 - z)``, with ``q(-1) = 3``."""
    return Scheme.from_coefficients([2, 1, -1], 0, name="divergent")


def named_schemes() -> dict[str, Scheme]:
    out = {f"spline-{m}": spline(m) for m in range(1, 5)}
    out["four-point"] = four_point()
    out["lazy"] = lazy()
    out["divergent"] = divergent_example()
    return out


def random_unit_sum_symbol(rng: random.Random, lo: int = -5, hi: int = 5,
                           max_numerator: int = 9, max_denominator: int = 6) -> LaurentPolynomial:
    """Random rational Laurent polynomial supported in ``[lo, hi]`` with value 1 at z = 1."""
    while True:
        a = rng.randint(lo, hi)
        b = rng.randint(a, hi)
        coeffs = [Fraction(rng.randint(-max_numerator, max_numerator),
                           rng.randint(1, max_denominator)) for _ in range(b - a + 1)]
        total = sum(coeffs)
        if total != 0:
            return LaurentPolynomial([c / total for c in coeffs], a)


def random_sequence(rng: random.Random, max_len: int = 8, max_numerator: int = 20,
                    max_denominator: int = 7) -> GridSequence:
    n = rng.randint(1, max_len)
    values = [Fraction(rng.randint(-max_numerator, max_numerator), rng.randint(1, max_denominator))
              for _ in range(n)]
    return GridSequence.of(values, offset=rng.randint(-4, 4))
