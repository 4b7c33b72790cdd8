"""Sufficient-condition smoothness certificates.

If ``a(z) = (1 + z)^n q_n(z)`` and the scheme with symbol ``2^n q_n``
converges, then ``S_a`` has C^n limits.  The check is one-directional: a
failed sub-check means "not certified", never "not C^n".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .analyzer import DEFAULT_MAX_ITER, AnalysisReport, analyze_improved
from .errors import PreconditionViolated
from .laurent import LaurentPolynomial, divide_by_one_plus_z, evaluate
from .scheme import Scheme


def one_plus_z_multiplicity(a: LaurentPolynomial) -> int:
    """Largest ``n`` such that ``(1 + z)^n`` divides ``a`` exactly."""
    if a.is_zero():
        raise ValueError("multiplicity is undefined for the zero polynomial")
    n = 0
    while evaluate(a, -1) == 0:
        a = divide_by_one_plus_z(a)
        n += 1
    return n


@dataclass(frozen=True)
class OrderCheck:
    n: int
    symbol: LaurentPolynomial  # 2^n q_n
    report: AnalysisReport

    @property
    def certified(self) -> bool:
        return self.report.verdict.convergent


@dataclass(frozen=True)
class SmoothnessReport:
    base: AnalysisReport
    multiplicity: int
    certified_order: int
    per_order: tuple[OrderCheck, ...]


def certify_smoothness(s: Scheme, M: int = DEFAULT_MAX_ITER,
                       max_order: Optional[int] = None) -> SmoothnessReport:
    """Find the largest ``n`` whose divided-difference chain converges.

    Orders are tried as ``n = 1, 2, ...`` up to ``multiplicity - 1`` (or
    ``max_order`` if smaller) and the search stops at the first order that
    is not certified.
    """
    base = analyze_improved(s, M)
    if not base.verdict.convergent:
        raise PreconditionViolated(
            f"base scheme is not certified convergent ({base.kind.value}, {base.verdict.reason.value})"
        )
    a = s.symbol
    mult = one_plus_z_multiplicity(a)
    top = mult - 1 if max_order is None else min(max_order, mult - 1)
    checks = []
    certified = 0
    q_n = a
    for n in range(1, top + 1):
        q_n = divide_by_one_plus_z(q_n)
        symbol = q_n * 2 ** n
        report = analyze_improved(Scheme.from_symbol(symbol), M)
        checks.append(OrderCheck(n, symbol, report))
        if not report.verdict.convergent:
            break
        certified = n
    return SmoothnessReport(base, mult, certified, tuple(checks))
