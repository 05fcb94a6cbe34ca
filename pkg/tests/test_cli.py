"""End-to-end tests for the command-line front end."""

import csv
import json

import pytest

from tdsynth.circuit.textio import read_circuit
from tdsynth.cli import (
    EXIT_INVALID,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    build_parser,
    main,
    read_matrix,
    write_matrix,
)
from tdsynth.exact.matrix import identity
from tdsynth.generators.gates import Generator, GeneratorWord, evaluate_word
from tdsynth.generators.wordio import read_word, write_word


@pytest.fixture
def k_file(tmp_path, k_matrix):
    path = tmp_path / "k.json"
    write_matrix(k_matrix, path)
    return path


@pytest.mark.integration
class TestSynthAndVerify:
    @pytest.mark.parametrize("algo", ["local", "global"])
    def test_synth_then_verify(self, tmp_path, k_file, k_matrix, algo):
        out = tmp_path / "k.word"
        assert main(["synth", "--algo", algo, "--in", str(k_file), "--out", str(out)]) == EXIT_OK
        assert evaluate_word(read_word(out)) == k_matrix
        report = json.loads((tmp_path / "k.word.report.json").read_text())
        assert report["verified"] and report["algorithm"] == algo
        assert main(["verify", "--in", str(k_file), "--word", str(out)]) == EXIT_OK

    def test_householder_writes_circuit(self, tmp_path, k_file):
        out = tmp_path / "k.word"
        assert main(["synth", "--algo", "householder", "--in", str(k_file), "--out", str(out)]) == EXIT_OK
        c = read_circuit(tmp_path / "k.word.circuit")
        assert c.ancillas == 1 and c.qubits == 2
        assert read_word(out).n == 8

    def test_verify_mismatch(self, tmp_path, k_file):
        word = tmp_path / "wrong.word"
        write_word(GeneratorWord(4, (Generator.x(0, 1),)), word)
        assert main(["verify", "--in", str(k_file), "--word", str(word)]) == EXIT_MISMATCH

    def test_verify_dimension_mismatch(self, tmp_path, k_file):
        word = tmp_path / "wide.word"
        write_word(GeneratorWord(8), word)
        assert main(["verify", "--in", str(k_file), "--word", str(word)]) == EXIT_MISMATCH


class TestInvalidInput:
    def test_missing_file(self, tmp_path):
        assert main(["synth", "--in", str(tmp_path / "absent.json")]) == EXIT_INVALID

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 2, "k": 0, "entries": [[1, 0]]}')
        assert main(["synth", "--in", str(path)]) == EXIT_INVALID

    def test_not_orthogonal(self, tmp_path):
        path = tmp_path / "ones.json"
        path.write_text('{"n": 2, "k": 0, "entries": [[1, 1], [1, 1]]}')
        assert main(["synth", "--in", str(path)]) == EXIT_INVALID

    def test_integral_odd_exponent(self, tmp_path, h02_h13):
        path = tmp_path / "h.json"
        write_matrix(h02_h13, path)
        assert main(["synth", "--ring", "integral", "--in", str(path)]) == EXIT_INVALID

    def test_bad_word_file(self, tmp_path, k_file):
        word = tmp_path / "bad.word"
        word.write_text("dim 4\nQ[0]\n")
        assert main(["verify", "--in", str(k_file), "--word", str(word)]) == EXIT_INVALID

    def test_unknown_algorithm_is_argparse_error(self, k_file):
        with pytest.raises(SystemExit):
            main(["synth", "--algo", "annealing", "--in", str(k_file)])


class TestUnsupported:
    def test_global_at_six(self, tmp_path):
        path = tmp_path / "i6.json"
        write_matrix(identity(6), path)
        assert main(["synth", "--algo", "global", "--in", str(path)]) == EXIT_UNSUPPORTED

    def test_pattern_at_two(self, tmp_path, hadamard):
        path = tmp_path / "h.json"
        write_matrix(hadamard, path)
        assert main(["pattern", "--in", str(path)]) == EXIT_UNSUPPORTED


class TestOtherCommands:
    def test_random_batch(self, tmp_path):
        out = tmp_path / "u.json"
        assert main(["random", "--n", "8", "--k", "4", "--count", "2", "--seed", "3", "--out", str(out)]) == EXIT_OK
        for i in range(2):
            assert read_matrix(tmp_path / f"u_{i}.json").k == 4

    def test_random_is_reproducible(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        main(["random", "--n", "4", "--seed", "9", "--out", str(a)])
        main(["random", "--n", "4", "--seed", "9", "--out", str(b)])
        assert a.read_text() == b.read_text()

    def test_pattern(self, tmp_path, k_file):
        out = tmp_path / "p.json"
        assert main(["pattern", "--in", str(k_file), "--out", str(out)]) == EXIT_OK
        assert json.loads(out.read_text())["label"] == "B2"

    def test_bench(self, tmp_path):
        out = tmp_path / "bench.csv"
        argv = ["bench", "--algo", "local", "global", "--n", "4", "--k", "0", "1", "2",
                "--count", "3", "--out", str(out)]
        assert main(argv) == EXIT_OK
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 6
        assert {r["algorithm"] for r in rows} == {"local", "global"}

    def test_relations_check(self):
        assert main(["relations-check", "--n", "4"]) == EXIT_OK

    def test_parser_requires_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])
