import random
from fractions import Fraction as F

import numpy as np
import pytest

from oracles import forward_difference, hat, subdivide
from subconv import corpus
from subconv.analyzer import analyze_improved
from subconv.errors import PreconditionViolated
from subconv.laurent import symbol_power
from subconv.refine import (
    GridSequence,
    apply,
    apply_stride,
    basic_limit_samples,
    contraction_trace,
    delta,
    polyline,
    refine_float,
    refine_to_level,
)
from subconv.scheme import Scheme, difference_symbol

DELTA = GridSequence.delta_sequence()
LINEAR = corpus.spline(1, centered=True)


def as_dict(f):
    return {f.offset + j: v for j, v in enumerate(f.values)}


def strip(d):
    return {k: v for k, v in d.items() if v}


class TestApply:
    def test_delta_reproduces_mask(self):
        f = apply(LINEAR, DELTA)
        assert f.level == 1 and f.offset == -1
        assert f.values == (F(1, 2), 1, F(1, 2))

    def test_four_point_delta(self):
        f = apply(corpus.four_point(), DELTA)
        assert f.offset == -3
        assert f.values == tuple(F(c, 16) for c in (-1, 0, 9, 16, 9, 0, -1))

    @pytest.mark.parametrize("name", ["spline-1", "spline-2", "spline-3", "four-point"])
    def test_constant_reproduction_in_interior(self, name):
        s = corpus.named_schemes()[name]
        f = apply(s, GridSequence.of([1, 1, 1, 1]))
        interior = [v for v, b in zip(f.values, f.interior) if b]
        assert interior and all(v == 1 for v in interior)

    def test_shape(self):
        s = corpus.four_point()
        f = GridSequence.of([1, 2, 3], offset=2)
        out = apply(s, f)
        assert out.offset == s.mask.offset + 2 * f.offset
        assert len(out) == len(s.mask) + 2 * (len(f) - 1)

    def test_matches_dict_oracle(self):
        rng = random.Random(4)
        for s in corpus.named_schemes().values():
            mask = {s.mask.offset + j: c for j, c in enumerate(s.mask.coefficients)}
            for _ in range(10):
                f = corpus.random_sequence(rng)
                assert strip(as_dict(apply(s, f))) == strip(subdivide(mask, as_dict(f)))

    def test_empty(self):
        assert apply(LINEAR, GridSequence.of([])).values == ()


class TestRefineToLevel:
    def test_zero_levels(self):
        f = GridSequence.of([1, 2, 3])
        assert refine_to_level(LINEAR, f, 0) == f

    def test_hat_at_level_3(self):
        f = refine_to_level(LINEAR, DELTA, 3)
        for i in range(f.offset, f.last + 1):
            assert f[i] == hat(F(i, 8))

    def test_uncentred_linear_spline_drifts(self):
        # offset-0 mask: level-k samples form a hat centred at 1 - 2^-k
        f = refine_to_level(corpus.spline(1), DELTA, 4)
        centre = 1 - F(1, 16)
        for i in range(f.offset, f.last + 1):
            assert f[i] == hat(F(i, 16) - centre)

    def test_composition(self):
        s = corpus.four_point()
        f0 = GridSequence.of([1, -2, F(1, 3)], offset=-1)
        assert refine_to_level(s, f0, 5) == refine_to_level(s, refine_to_level(s, f0, 2), 3)


class TestDelta:
    def test_constant_window(self):
        d = delta(GridSequence.of([7, 7, 7]))
        assert d.values == (7, 0, 0, -7)
        assert d.offset == -1

    def test_zero(self):
        assert delta(GridSequence.of([0])).values == (0, 0)

    def test_hat(self):
        assert delta(GridSequence.of([F(1, 2), 1, F(1, 2)], -1)).values == (F(1, 2), F(1, 2), F(-1, 2), F(-1, 2))

    def test_matches_oracle(self):
        rng = random.Random(9)
        for _ in range(30):
            f = corpus.random_sequence(rng)
            assert as_dict(delta(f)) == forward_difference(as_dict(f))


class TestCommutation:
    @pytest.mark.parametrize("name", list(corpus.named_schemes()))
    def test_difference_scheme_commutes(self, name):
        s = corpus.named_schemes()[name]
        q = difference_symbol(s)
        rng = random.Random(name)
        for _ in range(20):
            f = corpus.random_sequence(rng)
            lhs = delta(apply(s, f))
            rhs = apply(q, delta(f))
            assert lhs.values == rhs.values
            assert lhs.offset == rhs.offset + 1


class TestStrideEquivalence:
    @pytest.mark.parametrize("L", [1, 2, 3])
    def test_iterated_equals_symbol_power(self, L):
        rng = random.Random(L)
        for s in (corpus.four_point(), corpus.spline(2), corpus.divergent_example()):
            q = difference_symbol(s)
            for _ in range(10):
                f = corpus.random_sequence(rng)
                lhs = refine_to_level(q, f, L)
                rhs = apply_stride(symbol_power(q, L), f, 2 ** L, levels=L)
                assert strip(as_dict(lhs)) == strip(as_dict(rhs))
                assert lhs.level == rhs.level


class TestContractionTrace:
    def test_cubic_ratios(self):
        s = corpus.spline(3)
        tr = contraction_trace(s, DELTA, 10, analyze_improved(s).verdict)
        assert all(r <= F(1, 2) for r in tr.ratios)
        assert tr.bound_satisfied

    def test_lazy_ratios(self):
        tr = contraction_trace(corpus.lazy(), DELTA, 6)
        assert tr.ratios == [1] * 6
        assert tr.bound_checks is None and tr.bound_satisfied is None

    def test_four_point_ratios(self):
        s = corpus.four_point()
        tr = contraction_trace(s, DELTA, 10, analyze_improved(s).verdict)
        assert all(r <= F(5, 8) for r in tr.ratios)
        assert tr.bound_satisfied

    def test_linear_ratios_exactly_half(self):
        tr = contraction_trace(LINEAR, DELTA, 8)
        assert tr.ratios == [F(1, 2)] * 8

    def test_bound_with_contractivity_number_two(self):
        from test_analyzer import CONVERGENT_WITH_LARGE_Q_MINUS_ONE
        from subconv.laurent import ONE_PLUS_Z

        s = Scheme.from_symbol(CONVERGENT_WITH_LARGE_Q_MINUS_ONE * ONE_PLUS_Z)
        v = analyze_improved(s).verdict
        assert v.L == 2
        rng = random.Random(0)
        for f0 in [DELTA] + [corpus.random_sequence(rng) for _ in range(5)]:
            assert contraction_trace(s, f0, 8, v).bound_satisfied

    def test_interior_window_reported(self):
        tr = contraction_trace(corpus.spline(2), GridSequence.of([1, 2, 3, 4, 5, 6]), 2)
        assert tr.levels[0].interior_window is not None


class TestPolyline:
    def test_delta(self):
        assert polyline(DELTA) == [(0, 1)]
        assert polyline(DELTA, pad=1) == [(-1, 0), (0, 1), (1, 0)]

    def test_hat_level_1(self):
        f = GridSequence.of([F(1, 2), 1, F(1, 2)], offset=-1, level=1)
        assert polyline(f) == [(F(-1, 2), F(1, 2)), (0, 1), (F(1, 2), F(1, 2))]

    def test_empty(self):
        assert polyline(GridSequence.of([])) == []
        boundary_only = apply(corpus.four_point(), DELTA)
        assert polyline(boundary_only, interior_only=True) == []


class TestBasicLimit:
    def test_level_zero(self):
        assert basic_limit_samples(LINEAR, 0) == DELTA

    def test_linear_hat(self):
        f = basic_limit_samples(LINEAR, 5)
        assert all(f[i] == hat(F(i, 32)) for i in range(-40, 41))

    def test_four_point_interpolates(self):
        s = corpus.four_point()
        assert basic_limit_samples(s, 1).values == s.mask.coefficients
        prev = basic_limit_samples(s, 0)
        for k in range(1, 6):
            cur = basic_limit_samples(s, k)
            assert cur[0] == 1
            assert all(cur[2 * i] == prev[i] for i in range(prev.offset, prev.last + 1))
            prev = cur

    def test_precondition(self):
        with pytest.raises(PreconditionViolated):
            basic_limit_samples(Scheme.from_coefficients([1, 0, 1]), 2)


def test_float_path_tracks_exact():
    s = corpus.four_point()
    f0 = GridSequence.of([0, 1, F(1, 2), -1], offset=-2)
    t, v = refine_float(s, f0, 6)
    exact = refine_to_level(s, f0, 6)
    assert np.allclose(v, [float(x) for x in exact.values], rtol=0, atol=1e-12)
    assert np.allclose(t, [float(exact.parameter(i)) for i in range(exact.offset, exact.last + 1)])


@pytest.mark.parametrize("name", ["spline-3", "four-point", "spline-2"])
def test_certified_bound_on_random_starts(name):
    s = corpus.named_schemes()[name]
    v = analyze_improved(s).verdict
    rng = random.Random(name)
    for _ in range(20):
        assert contraction_trace(s, corpus.random_sequence(rng), 12, v).bound_satisfied
