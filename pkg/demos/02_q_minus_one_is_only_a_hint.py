"""Why |q(-1)| > 1 is not, on its own, a proof of divergence.

The signed even/odd sums of q^L never change with L, and |q(-1)| > 1 makes
one of them exceed 1.  Those sums are mod-2 cosets, though, and for L >= 2
the norm of S_q^L is built from mod-2^L cosets.  Below is a scheme whose
q(-1) is 59/47 and which converges anyway.
"""
from fractions import Fraction

from subconv.analyzer import analyze_baseline, analyze_improved, has_nondecaying_mode
from subconv.laurent import ONE_PLUS_Z, LaurentPolynomial
from subconv.refine import GridSequence, contraction_trace
from subconv.scheme import Scheme, operator_norm

q = LaurentPolynomial([-4, 12, -20, 32, 18, 9], -1) / 47
s = Scheme.from_symbol(q * ONE_PLUS_Z)

print("q(1)  =", q(1))
print("q(-1) =", q(-1))
for L in (1, 2, 3):
    print(f"||S_q^{L}|| = {operator_norm(q, L)}  (~{float(operator_norm(q, L)):.4f})")

literal = analyze_improved(s, confirm_divergence=False)
checked = analyze_improved(s)
print("\nq(-1) flag alone:         ", literal.kind.value)
print("flag plus spectral check: ", checked.kind.value, "mu =", checked.mu, "L =", checked.L)
print("non-decaying mode found:  ", has_nondecaying_mode(q))

# The refinement itself agrees: the differences shrink geometrically.
tr = contraction_trace(s, GridSequence.delta_sequence(), 12, analyze_baseline(s).verdict)
for lv in tr.levels[::3]:
    print(f"k={lv.k:2d} ||delta f^k|| ~ {float(lv.delta_norm):.3e}")
print("certified bound held at every level:", tr.bound_satisfied)
