"""Deciding convergence for a handful of classical masks.

Run with ``python3 demos/01_convergence_verdicts.py``.
"""
from fractions import Fraction

from subconv import corpus
from subconv.analyzer import analyze_baseline, analyze_improved
from subconv.scheme import Scheme, difference_symbol

# A scheme is a finitely supported mask; its symbol is the Laurent
# polynomial a(z) = sum a_i z^i.  The corpus module has the usual suspects.
schemes = corpus.named_schemes()
for name, s in schemes.items():
    print(f"{name:12s} mask={[str(c) for c in s.mask.coefficients]} offset={s.mask.offset}")

# The baseline procedure forms q = a / (1 + z) and looks for the first L
# with ||S_q^L|| < 1.  The improved one tries two shortcuts before looping.
print()
print(f"{'scheme':12s} {'baseline':>24s} {'improved':>30s}")
for name, s in schemes.items():
    b = analyze_baseline(s)
    i = analyze_improved(s)
    left = f"{b.kind.value} L={b.L} mu={b.mu}"
    right = f"{i.kind.value} via {i.verdict.reason.value}"
    print(f"{name:12s} {left:>24s} {right:>30s}")

# The four-point scheme has a negative coefficient in q, so the improved
# procedure falls back to the norm loop and finds mu = 5/8 at L = 1.
q = difference_symbol(corpus.four_point())
print("\nfour-point q:", [str(c) for c in q.coefficients], "q(-1) =", q(-1))

# A mask can also be given directly.  Perturbing the four-point weight
# beyond the classical range breaks the contraction within eight levels.
for w in (Fraction(1, 16), Fraction(1, 8), Fraction(1, 4)):
    r = analyze_improved(corpus.four_point(w))
    print(f"w={w}: {r.kind.value} ({r.verdict.reason.value}), levels examined {r.levels_examined}")

# The symbol 2 + z - z^2 satisfies a(1) = 2 and a(-1) = 0 but diverges.
r = analyze_improved(Scheme.from_coefficients([2, 1, -1]))
print("\n[2, 1, -1]:", r.kind.value, "q(-1) =", r.q_at_minus1,
      "confirmed by a non-decaying mode:", r.nondecaying_mode)
