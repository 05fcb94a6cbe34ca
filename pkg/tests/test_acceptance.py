"""Seeded large-sample checks over every algorithm.

These sweep hundreds of random instances each; deselect with -m "not slow".
"""

import pytest

from tdsynth.analysis.bench import bench_cell, fit_quadratic_scale
from tdsynth.circuit.ir import check_ancilla_contract, householder_circuit
from tdsynth.exact.matrix import binary_pattern, lde_sqrt2, transpose
from tdsynth.generators.gates import Generator, GeneratorKind, Ring, apply_left, evaluate_word
from tdsynth.generators.sampling import random_element, random_with_lde
from tdsynth.pattern.classify import classify_pattern
from tdsynth.synthesis.globalsyn import run_global
from tdsynth.synthesis.householder import embed, householder_factors, householder_target, synthesize_householder
from tdsynth.synthesis.local import column_cost_bound, local_cost_envelope, synthesize_local
from tdsynth.synthesis.rewrite import check_relations, eliminate_ih_pairs

pytestmark = [pytest.mark.slow, pytest.mark.integration]

RESYNTHESIS_COUNT = 500
LDE_BOUND_COUNT = 1000
PATTERN_COUNT = 1000
HOUSEHOLDER_COUNT = 200
INTEGRAL_COUNT = 200
WORD_LENGTH = 40


def _even_source(u):
    return u if u.k % 2 == 0 else apply_left(Generator.ih(), u)


class TestResynthesis:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
    def test_local(self, n):
        for seed in range(RESYNTHESIS_COUNT):
            _, u = random_element(n, WORD_LENGTH, Ring.SCALED, seed)
            assert evaluate_word(synthesize_local(u)) == u, f"seed {seed}"

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_householder(self, n):
        for seed in range(RESYNTHESIS_COUNT):
            _, u = random_element(n, WORD_LENGTH, Ring.SCALED, seed)
            word, _ = synthesize_householder(u)
            assert evaluate_word(word) == householder_target(u), f"seed {seed}"

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_global(self, n):
        for seed in range(RESYNTHESIS_COUNT):
            _, u = random_element(n, WORD_LENGTH, Ring.SCALED, seed)
            run = run_global(u)
            assert evaluate_word(run.word) == u, f"seed {seed}"
            assert all(s.progressed for s in run.steps), f"seed {seed}"


class TestFiniteGroupBounds:
    @pytest.mark.parametrize("n, bound", [(2, 1), (4, 2)])
    def test_lde_bound(self, n, bound):
        for seed in range(LDE_BOUND_COUNT):
            _, u = random_element(n, WORD_LENGTH, Ring.SCALED, seed)
            assert lde_sqrt2(u) <= bound, f"seed {seed}"


class TestPatternCoverage:
    def test_every_sample_classifies(self):
        for seed in range(PATTERN_COUNT):
            _, u = random_with_lde(8, 2 + seed % 12, Ring.SCALED, seed)
            b = binary_pattern(u)
            assert classify_pattern(b).reconstruct() == b, f"seed {seed}"


class TestRelations:
    def test_all_instances_at_eight(self):
        assert all(ok for _, ok in check_relations(8))


class TestHouseholderStructure:
    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_embedding_and_reflections(self, n):
        for seed in range(HOUSEHOLDER_COUNT):
            _, u = random_element(n, WORD_LENGTH, Ring.SCALED, seed)
            source = _even_source(u)
            op, reflections = householder_factors(source)
            e = op.embedded
            assert transpose(e) == e and (e @ e).is_identity()
            product = reflections[0].word
            for r in reflections[1:]:
                product = product + r.word
            assert evaluate_word(product) == e, f"seed {seed}"

    @pytest.mark.parametrize("n, m", [(2, 1), (4, 2)])
    def test_wrapper_contract(self, n, m):
        for seed in range(HOUSEHOLDER_COUNT):
            _, u = random_element(n, WORD_LENGTH, Ring.SCALED, seed)
            word, wrapper = synthesize_householder(u)
            assert check_ancilla_contract(householder_circuit(word, wrapper, m), u), f"seed {seed}"

    def test_embedding_of_hadamard(self, hadamard):
        assert embed(hadamard).embedded.n == 4


class TestIntegralElimination:
    def test_global_words_become_ih_free(self):
        for seed in range(INTEGRAL_COUNT):
            _, u = random_element(8, WORD_LENGTH, Ring.INTEGRAL, seed)
            run = run_global(u)
            assert run.word.count(GeneratorKind.IH) % 2 == 0
            assert all(s.progressed for s in run.steps)
            out = eliminate_ih_pairs(run.word)
            assert out.count(GeneratorKind.IH) == 0
            assert evaluate_word(out) == u, f"seed {seed}"


class TestGrowth:
    K_VALUES = [5, 10, 20, 40]

    def test_global_at_most_doubles(self):
        means = {k: bench_cell("global", 8, k, 20, seed=3).mean_length for k in self.K_VALUES}
        for k in self.K_VALUES[:-1]:
            assert means[2 * k] <= 2.2 * means[k]

    def test_local_within_envelope(self):
        for k in self.K_VALUES:
            row = bench_cell("local", 8, k, 20, seed=3)
            # odd exponents cost one extra I⊗H
            assert row.max_length <= local_cost_envelope(8, (k + 1) // 2) + 1

    def test_householder_quadratic_in_n(self):
        k = 2
        ns = [4, 8, 16]
        means = [bench_cell("householder", n, k, 10, seed=3).mean_length for n in ns]
        c = fit_quadratic_scale(ns, means)
        assert c > 0
        for n, mean in zip(ns, means):
            # n reflections, each a column reduction, a sign flip and its reversal
            assert mean <= n * (2 * column_cost_bound(2 * n, k // 2 + 1) + 1)
