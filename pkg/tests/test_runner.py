"""Integration tests for algorithm dispatch and verification."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdsynth.errors import NotOrthogonalError, ParityError
from tdsynth.exact.matrix import normalize
from tdsynth.generators.gates import GeneratorKind, Ring, evaluate_word
from tdsynth.generators.sampling import random_with_lde
from tdsynth.synthesis.householder import householder_target
from tdsynth.synthesis.runner import ALGORITHMS, synthesize


@pytest.mark.integration
class TestSynthesize:
    @pytest.mark.parametrize("algorithm", ALGORITHMS)
    def test_k(self, algorithm, k_matrix):
        outcome = synthesize(k_matrix, algorithm)
        assert outcome.report.verified
        assert outcome.report.algorithm == algorithm
        assert outcome.report.word_length == len(outcome.word)

    def test_local_report(self, h02_h13):
        report = synthesize(h02_h13, "local").report
        assert report.k_initial == 1
        assert report.ih_count == 1
        assert report.steps == [] and report.wrapper is None

    def test_global_steps(self, k_matrix):
        report = synthesize(k_matrix, "global").report
        assert [s.kind for s in report.steps] == ["row-paired", "row-paired", "base"]
        assert report.rewrite_blowup is None

    def test_global_integral_is_ih_free(self, k_matrix):
        outcome = synthesize(k_matrix, "global", Ring.INTEGRAL)
        assert outcome.word.count(GeneratorKind.IH) == 0
        assert evaluate_word(outcome.word) == k_matrix
        assert outcome.report.rewrite_blowup >= 1.0

    def test_householder_with_circuit(self, k_matrix):
        outcome = synthesize(k_matrix, "householder", with_circuit=True)
        assert outcome.circuit is not None
        assert outcome.circuit.ancillas == 1 and outcome.circuit.qubits == 2
        assert outcome.report.wrapper.available

    def test_householder_integral_has_no_circuit(self, k_matrix):
        outcome = synthesize(k_matrix, "householder", Ring.INTEGRAL, with_circuit=True)
        assert outcome.circuit is None
        assert not outcome.report.wrapper.available

    @pytest.mark.parametrize("algo", ["local", "householder", "global"])
    def test_integral_rejects_odd_exponent(self, h02_h13, algo):
        with pytest.raises(ParityError):
            synthesize(h02_h13, algo, Ring.INTEGRAL)

    def test_not_orthogonal(self):
        with pytest.raises(NotOrthogonalError):
            synthesize(normalize([[1, 0], [1, 1]], 0), "local")

    def test_unknown_algorithm(self, k_matrix):
        with pytest.raises(ValueError):
            synthesize(k_matrix, "annealing")

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(0, 100_000), k=st.integers(0, 6))
    def test_all_algorithms_agree_on_value(self, seed, k):
        _, u = random_with_lde(8, k, Ring.SCALED, seed)
        for algorithm in ALGORITHMS:
            word = synthesize(u, algorithm).word
            target = householder_target(u) if algorithm == "householder" else u
            assert evaluate_word(word) == target

    @settings(max_examples=10, deadline=None)
    @given(seed=st.integers(0, 100_000), k=st.sampled_from([2, 4, 6]))
    def test_integral_global(self, seed, k):
        _, u = random_with_lde(8, k, Ring.INTEGRAL, seed)
        outcome = synthesize(u, "global", Ring.INTEGRAL)
        assert outcome.word.count(GeneratorKind.IH) == 0
