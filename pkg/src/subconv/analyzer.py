"""Convergence decisions for binary univariate linear subdivision schemes.

Two procedures are provided.  :func:`analyze_baseline` runs the classical
norm loop: after the necessary-condition gate it forms the difference
symbol ``q`` and tests ``||S_q^L|| < 1`` for ``L = 1..M``.
:func:`analyze_improved` first tries two cheap shortcuts that read
everything off ``q`` directly:

* ``|q(-1)| > 1`` flags divergence: the signed even/odd sums of ``q^L``
  do not depend on ``L`` and one of them exceeds 1 in modulus;
* non-negative coefficients in ``q`` give ``||S_q|| = max(S_e, S_o)``.

Only when neither applies does it fall back to the loop.

The first shortcut bounds the even/odd coset sums of ``q^L``, which are
not the ``mod 2^L`` row sums that make up ``||S_q^L||`` once ``L >= 2``.
Schemes with ``|q(-1)| > 1`` can still converge (see
``tests/test_analyzer.py::test_q_minus_one_alone_is_not_a_proof``), so by
default the flag is only acted on after :func:`has_nondecaying_mode`
confirms it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import PreconditionViolated
from .laurent import (
    LaurentPolynomial,
    coset_abs_sums,
    divide_by_one_plus_z,
    evaluate,
    multiply,
    upsample,
)
from .scheme import (
    Scheme,
    binary_coset_norm,
    check_necessary_conditions,
    difference_symbol,
    even_odd_sums,
)

DEFAULT_MAX_ITER = 8
HALF = Fraction(1, 2)


class Kind(str, enum.Enum):
    CONVERGENT = "convergent"
    DIVERGENT = "divergent"
    INCONCLUSIVE = "inconclusive"


class Reason(str, enum.Enum):
    NECESSARY_CONDITION_FAILED = "necessary-condition"
    Q_MINUS_ONE_EXCEEDS_ONE = "q-minus-one"
    NONNEGATIVE_SHORTCUT = "nonnegative-shortcut"
    ITERATIVE_NORM_CONTRACTION = "iterative-norm"
    ITERATION_BUDGET_EXHAUSTED = "budget-exhausted"


_DIVERGENT_REASONS = {Reason.NECESSARY_CONDITION_FAILED, Reason.Q_MINUS_ONE_EXCEEDS_ONE}


@dataclass(frozen=True)
class ConvergenceVerdict:
    kind: Kind
    reason: Reason
    mu: Optional[Fraction] = None
    L: Optional[int] = None

    def __post_init__(self):
        if self.kind is Kind.CONVERGENT:
            if self.mu is None or not 0 < self.mu < 1 or self.L is None or self.L < 1:
                raise ValueError(f"invalid convergent verdict mu={self.mu}, L={self.L}")
        elif self.mu is not None or self.L is not None:
            raise ValueError("mu and L are only defined for convergent verdicts")
        if self.kind is Kind.DIVERGENT and self.reason not in _DIVERGENT_REASONS:
            raise ValueError(f"{self.reason} cannot justify divergence")

    @property
    def convergent(self) -> bool:
        return self.kind is Kind.CONVERGENT


@dataclass(frozen=True)
class AnalysisReport:
    """Everything computed while deciding one scheme.

    Fields that need ``q`` (``q_at_minus1``, ``s_e``, ``s_o``,
    ``q_nonnegative``) are ``None`` when the necessary conditions fail.
    ``levels_examined`` counts iterations of the norm loop.
    ``nondecaying_mode`` is set only when the ``|q(-1)| > 1`` flag was
    checked against :func:`has_nondecaying_mode`.
    """

    algorithm: str
    max_iter: int
    verdict: ConvergenceVerdict
    a_at_1: Fraction
    a_at_minus1: Fraction
    q: Optional[LaurentPolynomial] = None
    q_at_minus1: Optional[Fraction] = None
    s_e: Optional[Fraction] = None
    s_o: Optional[Fraction] = None
    q_nonnegative: Optional[bool] = None
    norms_per_level: tuple[tuple[int, Fraction], ...] = ()
    binary_coset_norms: tuple[tuple[int, Fraction], ...] = ()
    levels_examined: int = 0
    nondecaying_mode: Optional[bool] = None

    @property
    def kind(self) -> Kind:
        return self.verdict.kind

    @property
    def mu(self) -> Optional[Fraction]:
        return self.verdict.mu

    @property
    def L(self) -> Optional[int]:
        return self.verdict.L


def _norm_loop(q: LaurentPolynomial, M: int):
    norms, binary = [], []
    qL = q
    for L in range(1, M + 1):
        if L > 1:
            qL = multiply(q, upsample(qL, 2))
        norm = max(coset_abs_sums(qL, 2 ** L))
        norms.append((L, norm))
        binary.append((L, max(coset_abs_sums(qL, 2))))
        if norm < 1:
            verdict = ConvergenceVerdict(Kind.CONVERGENT, Reason.ITERATIVE_NORM_CONTRACTION, norm, L)
            return verdict, tuple(norms), tuple(binary)
    return (ConvergenceVerdict(Kind.INCONCLUSIVE, Reason.ITERATION_BUDGET_EXHAUSTED),
            tuple(norms), tuple(binary))


def local_subdivision_matrix(q: LaurentPolynomial) -> list[list[Fraction]]:
    """Matrix ``A[i][j] = q_{i-2j}`` on the index window ``[-hi, -lo]``.

    Values of ``S_q g`` inside that window depend only on values of ``g``
    inside it, so ``(S_q^k g)|W = A^k (g|W)``.
    """
    lo, hi = q.lowest_degree, q.highest_degree
    idx = range(-hi, -lo + 1)
    return [[q.coefficient(i - 2 * j) for j in idx] for i in idx]


def _charpoly(A: list[list[Fraction]]) -> list[Fraction]:
    """Characteristic polynomial coefficients, constant term first."""
    import sympy

    M = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in A])
    lam = sympy.Symbol("lam")
    coeffs = M.charpoly(lam).all_coeffs()  # highest degree first
    return [Fraction(int(c.p), int(c.q)) for c in reversed(coeffs)]


def all_roots_inside_unit_disk(coeffs: list[Fraction]) -> bool:
    """Exact Schur-Cohn test; ``coeffs`` are real, constant term first."""
    p = list(coeffs)
    while p and p[-1] == 0:
        p.pop()
    while len(p) > 1:
        c0, cn = p[0], p[-1]
        if abs(cn) <= abs(c0):
            return False
        # (cn p(z) - c0 p*(z)) / z, where p* is p with coefficients reversed
        rev = p[::-1]
        p = [cn * a - c0 * b for a, b in zip(p, rev)][1:]
    return True


def has_nondecaying_mode(q: LaurentPolynomial) -> bool:
    """True when ``S_q`` has a finitely supported input that never decays.

    That happens iff the local subdivision matrix has an eigenvalue of
    modulus >= 1.  Every finitely supported sequence is the difference
    sequence of bounded data, so a convergent scheme cannot have such a
    mode: a True result proves divergence.
    """
    if q.is_zero():
        return False
    return not all_roots_inside_unit_disk(_charpoly(local_subdivision_matrix(q)))


def _analyze(s: Scheme, M: int, improved: bool, confirm_divergence: bool = True) -> AnalysisReport:
    if M < 1:
        raise ValueError(f"iteration budget must be >= 1, got {M}")
    algorithm = "improved" if improved else "baseline"
    nc = check_necessary_conditions(s)
    if not nc:
        return AnalysisReport(
            algorithm, M,
            ConvergenceVerdict(Kind.DIVERGENT, Reason.NECESSARY_CONDITION_FAILED),
            nc.a_at_1, nc.a_at_minus1,
        )
    q = difference_symbol(s)
    q_m1 = evaluate(q, -1)
    s_e, s_o = even_odd_sums(q)
    nonneg = all(c >= 0 for c in q.coefficients)
    common = dict(q=q, q_at_minus1=q_m1, s_e=s_e, s_o=s_o, q_nonnegative=nonneg)

    if improved:
        flagged = abs(q_m1) > 1
        if flagged and confirm_divergence:
            common["nondecaying_mode"] = has_nondecaying_mode(q)
        if flagged and common.get("nondecaying_mode", True):
            verdict = ConvergenceVerdict(Kind.DIVERGENT, Reason.Q_MINUS_ONE_EXCEEDS_ONE)
            return AnalysisReport(algorithm, M, verdict, nc.a_at_1, nc.a_at_minus1, **common)
        # max(S_e, S_o) == 1 happens when one coset of q is empty (e.g. q = 1);
        # there is no contraction then, so defer to the loop.
        if nonneg and max(s_e, s_o) < 1:
            verdict = ConvergenceVerdict(Kind.CONVERGENT, Reason.NONNEGATIVE_SHORTCUT,
                                         max(s_e, s_o), 1)
            return AnalysisReport(algorithm, M, verdict, nc.a_at_1, nc.a_at_minus1, **common)

    verdict, norms, binary = _norm_loop(q, M)
    return AnalysisReport(algorithm, M, verdict, nc.a_at_1, nc.a_at_minus1,
                          norms_per_level=norms, binary_coset_norms=binary,
                          levels_examined=len(norms), **common)


def analyze_baseline(s: Scheme, M: int = DEFAULT_MAX_ITER) -> AnalysisReport:
    """Decide convergence with the plain norm loop over ``L = 1..M``."""
    return _analyze(s, M, improved=False)


def analyze_improved(s: Scheme, M: int = DEFAULT_MAX_ITER,
                     confirm_divergence: bool = True) -> AnalysisReport:
    """Decide convergence, trying the ``q(-1)`` and non-negativity tests first.

    ``|q(-1)| == 1`` is not treated as divergent; the loop still runs.
    With ``confirm_divergence=False`` the ``q(-1)`` flag alone yields a
    divergent verdict, which is unsound for some inputs.
    """
    return _analyze(s, M, improved=True, confirm_divergence=confirm_divergence)


@dataclass(frozen=True)
class AuditRow:
    L: int
    binary_coset_norm: Fraction
    passed: bool


def lower_bound_audit(q: LaurentPolynomial, L_max: int) -> list[AuditRow]:
    """Check ``binary_coset_norm(q, L) >= 1/2`` for ``L = 1..L_max``.

    Any ``q`` with ``q(1) == 1`` must pass: the even and odd signed sums of
    ``q^L`` add to 1, so one of them is at least 1/2 in modulus.
    """
    at_1 = evaluate(q, 1)
    if at_1 != 1:
        raise PreconditionViolated(f"q(1) = {at_1}, expected 1")
    rows = []
    for L in range(1, L_max + 1):
        value = binary_coset_norm(q, L)
        rows.append(AuditRow(L, value, value >= HALF))
    return rows


@dataclass(frozen=True)
class SeSoClass:
    s_e: Fraction
    s_o: Fraction
    in_unit_interval: bool
    both_half: bool


def classify_se_so(s: Scheme) -> SeSoClass:
    """Locate ``S_e, S_o`` relative to ``[0, 1]`` and ``1/2``.

    ``both_half`` must coincide with ``(1 + z)^2`` dividing ``a``; this is
    verified on every call.
    """
    nc = check_necessary_conditions(s)
    if not nc:
        raise PreconditionViolated("; ".join(nc.violations))
    q = difference_symbol(s)
    s_e, s_o = even_odd_sums(q)
    both_half = s_e == s_o == HALF
    double_root = evaluate(q, -1) == 0
    if double_root:
        divide_by_one_plus_z(q)  # must not raise
    if both_half != double_root:
        raise RuntimeError(f"S_e = S_o = 1/2 disagrees with root multiplicity for {s}")
    return SeSoClass(s_e, s_o, 0 <= s_e <= 1 and 0 <= s_o <= 1, both_half)
