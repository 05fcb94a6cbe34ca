"""
Gate-count benchmark.

For every (algorithm, n, k) cell, ``count`` seeded random matrices with
sqrt(2)-exponent exactly k are synthesized and verified; the cell records
mean and max word length and the wall time. Every column except
``runtime_s`` is a deterministic function of the seed.
"""

from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import dimension_config, get_config
from ..generators.gates import Ring
from ..generators.sampling import random_with_lde
from ..synthesis.runner import synthesize
from .parallel import map_ordered

logger = logging.getLogger(__name__)


@dataclass
class BenchRow:
    algorithm: str
    n: int
    k: int
    count: int
    mean_length: float
    max_length: int
    runtime_s: float

    def to_dict(self) -> Dict:
        return asdict(self)


def instance_seed(seed: int, n: int, k: int, i: int) -> int:
    return ((seed * 1_000_003 + n) * 1_009 + k) * 10_007 + i


def _supported(algorithm: str, n: int, k: int, ring: Ring) -> bool:
    if algorithm == "global" and not dimension_config(n).global_supported:
        return False
    bound = dimension_config(n).max_lde
    if bound is not None and k > bound:
        return False
    if k % 2 and (n % 2 or ring is Ring.INTEGRAL):
        return False
    return True


def bench_cell(
    algorithm: str,
    n: int,
    k: int,
    count: int,
    seed: int = 0,
    ring: Ring = Ring.SCALED,
    threads: Optional[int] = None,
) -> BenchRow:
    """Synthesize ``count`` instances at (n, k) and summarize the word lengths."""
    ring = Ring(ring)
    start = time.perf_counter()

    def one(i: int) -> int:
        _, u = random_with_lde(n, k, ring, instance_seed(seed, n, k, i))
        return len(synthesize(u, algorithm, ring).word)

    lengths = np.array(map_ordered(one, range(count), threads), dtype=float)
    elapsed = time.perf_counter() - start
    return BenchRow(
        algorithm=algorithm,
        n=n,
        k=k,
        count=count,
        mean_length=float(lengths.mean()) if count else 0.0,
        max_length=int(lengths.max()) if count else 0,
        runtime_s=round(elapsed, 4),
    )


def run_bench(
    algorithms: Sequence[str],
    n_values: Iterable[int],
    k_values: Iterable[int],
    count: Optional[int] = None,
    seed: int = 0,
    ring: Ring = Ring.SCALED,
    threads: Optional[int] = None,
) -> List[BenchRow]:
    """Sweep every supported (algorithm, n, k) cell; unsupported cells are skipped."""
    ring = Ring(ring)
    if count is None:
        count = get_config().bench_count
    n_values = list(n_values)
    k_values = list(k_values)
    rows = []
    for algorithm in algorithms:
        for n in n_values:
            for k in k_values:
                if not _supported(algorithm, n, k, ring):
                    logger.info("skipping %s at n=%d k=%d", algorithm, n, k)
                    continue
                row = bench_cell(algorithm, n, k, count, seed, ring, threads)
                logger.info(
                    "%s n=%d k=%d: mean %.1f max %d (%.2fs)",
                    algorithm, n, k, row.mean_length, row.max_length, row.runtime_s,
                )
                rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# Trend statistics
# ---------------------------------------------------------------------------

def fit_linear(xs: Sequence[float], ys: Sequence[float]) -> Tuple[float, float]:
    """Least-squares (slope, intercept) of ys against xs."""
    slope, intercept = np.polyfit(np.asarray(xs, dtype=float), np.asarray(ys, dtype=float), 1)
    return float(slope), float(intercept)


def fit_quadratic_scale(ns: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares c in ys ≈ c·n²."""
    sq = np.asarray(ns, dtype=float) ** 2
    y = np.asarray(ys, dtype=float)
    return float(sq.dot(y) / sq.dot(sq))


def doubling_ratios(rows: Sequence[BenchRow]) -> Dict[Tuple[str, int, int], float]:
    """mean_length(2k) / mean_length(k) for every cell whose doubled k was also run."""
    by_cell = {(r.algorithm, r.n, r.k): r.mean_length for r in rows}
    out = {}
    for (algorithm, n, k), mean in by_cell.items():
        doubled = by_cell.get((algorithm, n, 2 * k))
        if doubled is not None and mean > 0:
            out[(algorithm, n, k)] = doubled / mean
    return out


def deterministic_columns(rows: Sequence[BenchRow]) -> List[Tuple]:
    """Rows without the wall-time column, for reproducibility checks."""
    return [(r.algorithm, r.n, r.k, r.count, r.mean_length, r.max_length) for r in rows]
