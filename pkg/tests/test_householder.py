"""Tests for Householder synthesis on the doubled dimension."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdsynth.errors import ParityError
from tdsynth.exact.matrix import (
    block,
    dot,
    identity,
    is_zero,
    multiply_vector,
    normalize,
    outer_projector_sum,
    reflection_matrix,
    transpose,
)
from tdsynth.generators.gates import Generator, GeneratorKind, Ring, evaluate_word
from tdsynth.generators.sampling import random_with_lde
from tdsynth.synthesis.householder import (
    embed,
    fixed_vectors,
    householder_factors,
    householder_target,
    reflection_vectors,
    synthesize_householder,
    synthesize_reflection,
)


class TestEmbed:
    def test_identity(self):
        op = embed(identity(2))
        assert op.embedded == normalize(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]], 0
        )

    def test_symmetric_involution(self, k_matrix):
        e = embed(k_matrix).embedded
        assert e.n == 8
        assert transpose(e) == e
        assert (e @ e).is_identity()

    def test_symmetric_source_is_block_diagonal(self, cx):
        e = embed(cx).embedded
        assert block(e, 0, 0, 4) == cx
        assert is_zero(block(e, 0, 4, 4))


class TestAxes:
    def test_identity_axes(self):
        axes = reflection_vectors(identity(2))
        assert axes[0].entries == (0, 0, -1, 0) and axes[0].k == 0

    def test_eigenvectors(self, k_matrix):
        e = embed(k_matrix).embedded
        for w in reflection_vectors(k_matrix):
            assert multiply_vector(e, w) == w.negate()
        for v in fixed_vectors(k_matrix):
            assert multiply_vector(e, v) == v

    def test_orthonormal(self, ccx):
        axes = reflection_vectors(ccx)
        for i, a in enumerate(axes):
            assert a.is_unit()
            for b in axes[i + 1:]:
                assert dot(a, b)[0] == 0

    def test_completeness(self, k_matrix):
        axes = reflection_vectors(k_matrix)
        fixed = fixed_vectors(k_matrix)
        assert outer_projector_sum(axes + fixed, [1] * 8) == identity(8)

    def test_spectral_decomposition(self, k_matrix):
        axes = reflection_vectors(k_matrix)
        fixed = fixed_vectors(k_matrix)
        assert outer_projector_sum(fixed + axes, [1] * 4 + [-1] * 4) == embed(k_matrix).embedded

    def test_odd_exponent_has_no_dyadic_axes(self, h02_h13):
        with pytest.raises(ParityError):
            reflection_vectors(h02_h13)


class TestReflections:
    def test_word_shape(self, k_matrix):
        for axis in reflection_vectors(k_matrix):
            r = synthesize_reflection(axis)
            items = list(r.word)
            mid = len(items) // 2
            assert len(items) % 2 == 1
            assert items[mid] == Generator.neg_one(0)
            assert items[:mid] == items[mid + 1:][::-1]

    def test_word_value(self, k_matrix):
        for axis in reflection_vectors(k_matrix):
            assert evaluate_word(synthesize_reflection(axis).word) == reflection_matrix(axis)

    def test_product_is_embedding(self, ccx):
        op, reflections = householder_factors(ccx)
        product = identity(16)
        for r in reflections:
            product = evaluate_word(r.word) @ product
        assert product == op.embedded

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(0, 100_000), k=st.sampled_from([0, 2, 4]))
    def test_reflections_commute(self, seed, k):
        _, u = random_with_lde(8, k, Ring.SCALED, seed)
        op, reflections = householder_factors(u)
        forward = identity(16)
        backward = identity(16)
        for r in reflections:
            forward = evaluate_word(r.word) @ forward
        for r in reversed(reflections):
            backward = evaluate_word(r.word) @ backward
        assert forward == backward == op.embedded

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(0, 100_000), k=st.sampled_from([0, 2, 4]))
    def test_axis_sign_is_irrelevant(self, seed, k):
        _, u = random_with_lde(8, k, Ring.SCALED, seed)
        for axis in reflection_vectors(u):
            flipped = axis.negate()
            assert reflection_matrix(flipped) == reflection_matrix(axis)
            assert synthesize_reflection(flipped).word == synthesize_reflection(axis).word

    def test_threads_do_not_change_result(self, k_matrix):
        _, one = householder_factors(k_matrix, threads=1)
        _, many = householder_factors(k_matrix, threads=4)
        assert [r.word for r in one] == [r.word for r in many]


class TestSynthesizeHouseholder:
    def test_even_exponent(self, k_matrix):
        word, wrapper = synthesize_householder(k_matrix)
        assert word.n == 8
        assert wrapper.available
        assert wrapper.pre == ["X@anc", "H@anc"] and wrapper.post == ["H@anc"]
        assert evaluate_word(word) == householder_target(k_matrix) == embed(k_matrix).embedded

    def test_odd_exponent_appends_ih(self, h02_h13):
        word, _ = synthesize_householder(h02_h13)
        assert word[-1] == Generator.ih()
        assert evaluate_word(word) == householder_target(h02_h13)

    def test_integral_ring_has_no_wrapper(self, k_matrix):
        word, wrapper = synthesize_householder(k_matrix, Ring.INTEGRAL)
        assert not wrapper.available
        assert word.count(GeneratorKind.IH) == 0

    def test_integral_ring_rejects_odd_exponent(self, h02_h13):
        with pytest.raises(ParityError):
            synthesize_householder(h02_h13, Ring.INTEGRAL)

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(0, 100_000), k=st.integers(0, 4))
    def test_random(self, seed, k):
        _, u = random_with_lde(8, k, Ring.SCALED, seed)
        word, _ = synthesize_householder(u)
        assert word.n == 16
        assert evaluate_word(word) == householder_target(u)
