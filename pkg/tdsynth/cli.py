"""
Command-line front end.

    tdsynth synth --algo global --ring scaled --in U.json --out U.word
    tdsynth verify --in U.json --word U.word
    tdsynth random --n 8 --k 10 --count 5 --seed 1 --out samples/U.json
    tdsynth pattern --in U.json
    tdsynth bench --algo local global --n 8 --k 5 10 20 40 --count 20 --out bench.csv
    tdsynth relations-check

Exit codes: 0 success, 1 verify mismatch, 2 invalid input, 3 verification
failure or internal inconsistency, 4 algorithm/dimension mismatch.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from .analysis.bench import run_bench
from .circuit.textio import write_circuit
from .config import get_config, load_config_from_env
from .errors import (
    InvalidGeneratorError,
    NotOrthogonalError,
    ParityError,
    ParseError,
    PatternMatchError,
    ReductionError,
    RewriteError,
    ShapeError,
    SynthesisError,
    UnsupportedDimensionError,
    VerificationError,
)
from .exact.matrix import binary_pattern, require_orthogonal
from .generators.gates import Ring, evaluate_word
from .generators.sampling import random_element, random_with_lde
from .generators.wordio import format_word, read_word, write_word
from .models.entities import MatrixFile, PatternReport, RunConfig
from .pattern.classify import classify_pattern
from .report.export import to_csv, to_json, write_csv, write_json
from .synthesis.rewrite import check_relations
from .synthesis.runner import ALGORITHMS, synthesize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3
EXIT_UNSUPPORTED = 4

_INVALID = (ParseError, ShapeError, NotOrthogonalError, ParityError, InvalidGeneratorError)
_INTERNAL = (VerificationError, ReductionError, RewriteError, PatternMatchError)


def setup_logging(log_file: str = None, level: str = "INFO") -> None:
    handlers = [logging.StreamHandler(sys.stdout)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format="%(asctime)s %(levelname)-8s %(name)s — %(message)s",
        handlers=handlers,
        force=True,
    )


def read_matrix(path: Path):
    """Load a matrix file; the reader normalizes to canonical form."""
    return MatrixFile.model_validate_json(Path(path).read_text()).to_matrix()


def write_matrix(u, path: Optional[Path]) -> None:
    text = to_json(MatrixFile.from_matrix(u))
    if path is None:
        print(text)
    else:
        Path(path).write_text(text + "\n")


def _sibling(path: Path, suffix: str) -> Path:
    return path.with_name(path.name + suffix)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_synth(config: RunConfig) -> int:
    if config.input_path is None:
        raise ParseError("synth needs --in")
    u = read_matrix(config.input_path)
    config.check_dimension(u.n)
    outcome = synthesize(u, config.algorithm, Ring(config.ring), with_circuit=True)

    if config.output_path is None:
        sys.stdout.write(format_word(outcome.word))
    else:
        write_word(outcome.word, config.output_path)
        write_json(outcome.report, str(_sibling(config.output_path, ".report.json")))
        if outcome.circuit is not None:
            write_circuit(outcome.circuit, _sibling(config.output_path, ".circuit"))
    logger.info(
        "synth %s: n=%d k=%d, %d generators, %d IH, verified",
        config.algorithm, u.n, u.k, outcome.report.word_length, outcome.report.ih_count,
    )
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    if config.input_path is None or config.word_path is None:
        raise ParseError("verify needs --in and --word")
    u = read_matrix(config.input_path)
    require_orthogonal(u)
    w = read_word(config.word_path)
    if w.n != u.n:
        logger.warning("word dimension %d does not match matrix dimension %d", w.n, u.n)
        return EXIT_MISMATCH
    if evaluate_word(w) != u:
        logger.warning("word does not evaluate to the matrix")
        return EXIT_MISMATCH
    logger.info("word of %d generators evaluates exactly to the %dx%d matrix", len(w), u.n, u.n)
    return EXIT_OK


def cmd_random(config: RunConfig) -> int:
    n = config.n or 8
    ring = Ring(config.ring)
    length = get_config().random_word_length
    for i in range(config.count):
        seed = config.seed + i
        if config.k_values:
            _, u = random_with_lde(n, config.k_values[0], ring, seed)
        else:
            _, u = random_element(n, length, ring, seed)
        path = config.output_path
        if path is not None and config.count > 1:
            path = path.with_name(f"{path.stem}_{i}{path.suffix}")
        write_matrix(u, path)
    return EXIT_OK


def cmd_pattern(config: RunConfig) -> int:
    if config.input_path is None:
        raise ParseError("pattern needs --in")
    u = read_matrix(config.input_path)
    require_orthogonal(u)
    report = PatternReport.from_pattern_id(classify_pattern(binary_pattern(u)))
    if config.output_path is None:
        print(to_json(report))
    else:
        write_json(report, str(config.output_path))
    return EXIT_OK


def cmd_bench(config: RunConfig, algorithms: List[str], n_values: List[int]) -> int:
    rows = [r.to_dict() for r in run_bench(
        algorithms, n_values, config.k_values, config.count, config.seed, Ring(config.ring)
    )]
    if config.output_path is None:
        sys.stdout.write(to_csv(rows))
    else:
        write_csv(rows, str(config.output_path))
    return EXIT_OK


def cmd_relations_check(dimensions: List[int]) -> int:
    failures = 0
    for n in dimensions:
        results = check_relations(n)
        for rule, ok in results:
            print(f"n={n} {'ok  ' if ok else 'FAIL'} {rule}")
        failures += sum(1 for _, ok in results if not ok)
        logger.info("n=%d: %d relation instances checked", n, len(results))
    return EXIT_OK if failures == 0 else EXIT_INTERNAL


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdsynth", description="Exact synthesis over the Toffoli-Hadamard gate set")
    parser.add_argument("--log-file", default=None, help="Also write logs to this file")
    parser.add_argument("--log-level", default="INFO", help="Logging level (default: INFO)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="Factor a matrix into a generator word")
    p.add_argument("--algo", choices=ALGORITHMS, default="local")
    p.add_argument("--ring", choices=[r.value for r in Ring], default="scaled")
    p.add_argument("--in", dest="input", required=True, help="Matrix JSON file")
    p.add_argument("--out", default=None, help="Word file; report and circuit go next to it")

    p = sub.add_parser("verify", help="Check a word against a matrix exactly")
    p.add_argument("--in", dest="input", required=True, help="Matrix JSON file")
    p.add_argument("--word", required=True, help="Word file")

    p = sub.add_parser("random", help="Write seeded random group elements")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--k", type=int, default=None, help="Exact sqrt(2)-exponent to sample")
    p.add_argument("--ring", choices=[r.value for r in Ring], default="scaled")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("pattern", help="Classify the binary pattern of a matrix")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("bench", help="Word-length sweep as CSV")
    p.add_argument("--algo", nargs="+", choices=ALGORITHMS, default=list(ALGORITHMS))
    p.add_argument("--ring", choices=[r.value for r in Ring], default="scaled")
    p.add_argument("--n", nargs="+", type=int, default=[8])
    p.add_argument("--k", nargs="*", type=int, default=[])
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("relations-check", help="Verify the I⊗H rewrite relations exactly")
    p.add_argument("--n", nargs="+", type=int, default=[8, 4])
    return parser


def _run(args: argparse.Namespace) -> int:
    settings = get_config()
    if args.command == "relations-check":
        return cmd_relations_check(args.n)

    seed = getattr(args, "seed", None)
    k = getattr(args, "k", None)
    config = RunConfig(
        command=args.command,
        algorithm=getattr(args, "algo", "local") if args.command == "synth" else "local",
        ring=getattr(args, "ring", "scaled"),
        input_path=getattr(args, "input", None),
        output_path=getattr(args, "out", None),
        word_path=getattr(args, "word", None),
        seed=settings.default_seed if seed is None else seed,
        count=getattr(args, "count", None) or (settings.bench_count if args.command == "bench" else 1),
        k_values=[] if k is None else (k if isinstance(k, list) else [k]),
        n=args.n if args.command == "random" else None,
    )
    if args.command == "synth":
        return cmd_synth(config)
    if args.command == "verify":
        return cmd_verify(config)
    if args.command == "random":
        return cmd_random(config)
    if args.command == "pattern":
        return cmd_pattern(config)
    return cmd_bench(config, args.algo, args.n)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_file, args.log_level)
    load_config_from_env()
    try:
        return _run(args)
    except ValidationError as exc:
        logger.error("invalid input: %s", exc)
        return EXIT_INVALID
    except _INVALID as exc:
        logger.error("invalid input: %s", exc)
        return EXIT_INVALID
    except UnsupportedDimensionError as exc:
        logger.error("unsupported: %s", exc)
        return EXIT_UNSUPPORTED
    except _INTERNAL as exc:
        logger.error("internal consistency failure: %s", exc)
        return EXIT_INTERNAL
    except SynthesisError as exc:
        logger.error("%s", exc)
        return EXIT_INTERNAL
    except OSError as exc:
        logger.error("I/O error: %s", exc)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
