import pytest

from subconv import corpus
from subconv.analyzer import Kind
from subconv.errors import PreconditionViolated
from subconv.laurent import ONE_PLUS_Z, LaurentPolynomial as LP, evaluate
from subconv.smoothness import certify_smoothness, one_plus_z_multiplicity


@pytest.mark.parametrize("a, n", [
    (ONE_PLUS_Z ** 4 / 8, 4),
    (LP([2, 1, -1]), 1),
    (LP([3, -1]), 0),
    (corpus.four_point().symbol, 4),
])
def test_multiplicity(a, n):
    assert one_plus_z_multiplicity(a) == n


def test_multiplicity_of_zero():
    with pytest.raises(ValueError):
        one_plus_z_multiplicity(LP())


def test_cubic_chain():
    rep = certify_smoothness(corpus.spline(3), 8)
    assert rep.multiplicity == 4
    assert rep.certified_order == 2
    assert [c.symbol for c in rep.per_order] == [ONE_PLUS_Z ** 3 / 4, ONE_PLUS_Z ** 2 / 2, ONE_PLUS_Z]
    assert [c.report.kind for c in rep.per_order] == [Kind.CONVERGENT, Kind.CONVERGENT, Kind.INCONCLUSIVE]


def test_linear_spline():
    rep = certify_smoothness(corpus.spline(1), 8)
    assert rep.certified_order == 0
    assert rep.per_order[0].symbol == ONE_PLUS_Z


def test_four_point_is_c1_certified():
    rep = certify_smoothness(corpus.four_point(), 8)
    assert rep.certified_order >= 1
    assert rep.per_order[0].report.kind is Kind.CONVERGENT


@pytest.mark.parametrize("m", range(1, 6))
def test_spline_family(m):
    rep = certify_smoothness(corpus.spline(m), 8)
    assert rep.certified_order == m - 1
    assert rep.certified_order < rep.multiplicity


def test_intermediate_symbols_satisfy_necessary_conditions():
    for s in (corpus.spline(4), corpus.four_point()):
        rep = certify_smoothness(s, 8)
        for c in rep.per_order:
            assert evaluate(c.symbol, 1) == 2
            assert evaluate(c.symbol, -1) == 0


def test_budget_monotone():
    s = corpus.four_point()
    orders = [certify_smoothness(s, M).certified_order for M in (1, 2, 4, 8)]
    assert orders == sorted(orders)


def test_max_order_caps_search():
    rep = certify_smoothness(corpus.spline(5), 8, max_order=2)
    assert rep.certified_order == 2
    assert len(rep.per_order) == 2


@pytest.mark.parametrize("s", [corpus.divergent_example(), corpus.lazy()])
def test_requires_convergent_base(s):
    with pytest.raises(PreconditionViolated):
        certify_smoothness(s, 8)
