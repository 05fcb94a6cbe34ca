"""Tests for column-by-column synthesis."""

import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdsynth.errors import NotOrthogonalError, ParityError, ReductionError
from tdsynth.exact.matrix import DyadicVector, basis_vector, identity, normalize, vector_base2_lde
from tdsynth.generators.gates import (
    Generator,
    GeneratorKind,
    Ring,
    apply_word_vector,
    evaluate_word,
)
from tdsynth.generators.sampling import random_element, random_with_lde
from tdsynth.synthesis.local import (
    column_cost_bound,
    local_cost_envelope,
    reduce_column,
    reduce_quadruple,
    synthesize_local,
)


class TestReduceQuadruple:
    def test_all_ones(self):
        step, gens = reduce_quadruple([1, 1, 1, 1], (0, 1, 2, 3))
        assert step.tau == (0, 0, 0, 0)
        assert step.result == (2, 0, 0, 0)
        assert gens == [Generator.k(0, 1, 2, 3)]

    def test_three_mod_four_flipped(self):
        step, gens = reduce_quadruple([1, 3, 1, 3], (0, 1, 2, 3))
        assert step.tau == (0, 1, 0, 1)
        assert all(x % 2 == 0 for x in step.result)
        assert gens == [Generator.neg_one(1), Generator.neg_one(3), Generator.k(0, 1, 2, 3)]

    def test_negative_entries(self):
        # -1 is 3 mod 4
        step, _ = reduce_quadruple([0, -1, 0, 1, 5, 0, 7], (1, 3, 4, 6))
        assert step.tau == (1, 0, 0, 1)
        assert all(x % 2 == 0 for x in step.result)

    def test_even_entry_rejected(self, caplog):
        with caplog.at_level(logging.ERROR), pytest.raises(ReductionError):
            reduce_quadruple([1, 2, 1, 1], (0, 1, 2, 3))
        assert "even entries [1, 2, 1, 1]" in caplog.text

    def test_positions_must_increase(self):
        with pytest.raises(ValueError):
            reduce_quadruple([1, 1, 1, 1], (0, 2, 1, 3))


class TestReduceColumn:
    def test_negated_basis_vector(self):
        w = reduce_column(basis_vector(4, 3, sign=-1), 0)
        assert list(w) == [Generator.neg_one(3), Generator.x(0, 3)]

    def test_already_in_place(self):
        assert len(reduce_column(basis_vector(8, 5), 5)) == 0

    def test_uniform_column(self):
        v = DyadicVector(4, 2, (1, 1, 1, 1))
        w = reduce_column(v, 0)
        assert list(w) == [Generator.k(0, 1, 2, 3)]
        assert apply_word_vector(w, v) == basis_vector(4, 0)

    def test_odd_exponent_rejected(self):
        with pytest.raises(ParityError):
            reduce_column(DyadicVector(2, 1, (1, 1)), 0)

    def test_non_unit_rejected(self):
        with pytest.raises(NotOrthogonalError):
            reduce_column(DyadicVector(4, 0, (1, 1, 0, 0)), 0)

    def test_fixed_level_guard(self, caplog):
        with caplog.at_level(logging.ERROR), pytest.raises(ReductionError):
            reduce_column(basis_vector(4, 0), 2, min_index=1)
        assert [r.levelname for r in caplog.records] == ["ERROR"]

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 100_000), k=st.sampled_from([0, 2, 4, 6]))
    def test_column_within_bound(self, seed, k):
        _, u = random_with_lde(8, k, Ring.INTEGRAL, seed)
        col = u.column(0)
        w = reduce_column(col, 0)
        assert apply_word_vector(w, col) == basis_vector(8, 0)
        assert len(w) <= column_cost_bound(8, vector_base2_lde(col))


class TestSynthesizeLocal:
    def test_identity(self):
        assert len(synthesize_local(identity(8))) == 0

    def test_k(self, k_matrix):
        assert list(synthesize_local(k_matrix)) == [Generator.k(0, 1, 2, 3)]

    def test_ccx(self, ccx):
        assert evaluate_word(synthesize_local(ccx)) == ccx

    def test_odd_exponent_ends_with_ih(self, h02_h13):
        w = synthesize_local(h02_h13)
        assert w[-1] == Generator.ih()
        assert w.count(GeneratorKind.IH) == 1
        assert evaluate_word(w) == h02_h13

    def test_odd_exponent_outside_integral_ring(self, h02_h13):
        with pytest.raises(ParityError):
            synthesize_local(h02_h13, Ring.INTEGRAL)

    def test_not_orthogonal(self):
        with pytest.raises(NotOrthogonalError):
            synthesize_local(normalize([[1, 1], [1, 1]], 1))

    def test_odd_dimension(self):
        _, u = random_element(5, 30, Ring.INTEGRAL, seed=4)
        assert evaluate_word(synthesize_local(u, Ring.INTEGRAL)) == u

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 100_000), length=st.integers(0, 40))
    def test_resynthesis_scaled(self, seed, length):
        _, u = random_element(8, length, Ring.SCALED, seed)
        w = synthesize_local(u)
        assert evaluate_word(w) == u
        assert w.count(GeneratorKind.IH) == u.k % 2

    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(0, 100_000))
    def test_resynthesis_integral_has_no_ih(self, seed):
        _, u = random_element(6, 30, Ring.INTEGRAL, seed)
        w = synthesize_local(u, Ring.INTEGRAL)
        assert evaluate_word(w) == u
        assert w.count(GeneratorKind.IH) == 0


class TestCostFormulas:
    def test_column_bound(self):
        assert column_cost_bound(8, 3) == 32
        assert column_cost_bound(8, 0) == 2

    def test_envelope(self):
        assert local_cost_envelope(4, 1) == 26
        assert local_cost_envelope(8, 2) == 1004
