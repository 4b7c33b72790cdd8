"""Certifying C^n smoothness by peeling off factors of (1 + z).

If a = (1 + z)^(n+1) b and the scheme with symbol 2^n a / (1 + z)^n
converges, the limit curves are C^n.  This is a sufficient condition only.
"""
from subconv import corpus
from subconv.smoothness import certify_smoothness

for name in ("spline-1", "spline-2", "spline-3", "four-point"):
    rep = certify_smoothness(corpus.named_schemes()[name])
    print(f"{name}: (1+z) multiplicity {rep.multiplicity}, certified C^{rep.certified_order}")
    for c in rep.per_order:
        status = "certified" if c.certified else "not certified"
        print(f"    n={c.n}: {c.report.kind.value:12s} mu={c.report.mu} L={c.report.L} -> {status}")

# B-splines of degree m are C^(m-1); the chain reaches that for small m.
for m in range(1, 7):
    rep = certify_smoothness(corpus.spline(m))
    print(f"degree-{m} spline certified C^{rep.certified_order}")
