"""Configuration for tdsynth."""

import os
from dataclasses import dataclass
from typing import Dict, Optional


@dataclass
class DimensionConfig:
    """Per-dimension facts used by the synthesis front ends."""
    n: int
    global_supported: bool = False     # global synthesis is defined only for 2, 4, 8
    max_lde: Optional[int] = None       # proven bound on lde_sqrt2 (finite groups only)

    @property
    def qubits(self) -> Optional[int]:
        """Number of qubits when n is a power of two, else None."""
        if self.n >= 1 and self.n & (self.n - 1) == 0:
            return self.n.bit_length() - 1
        return None


DIMENSIONS: Dict[int, DimensionConfig] = {
    2: DimensionConfig(n=2, global_supported=True, max_lde=1),
    4: DimensionConfig(n=4, global_supported=True, max_lde=2),
    8: DimensionConfig(n=8, global_supported=True),
}


def dimension_config(n: int) -> DimensionConfig:
    return DIMENSIONS.get(n, DimensionConfig(n=n))


@dataclass
class Config:
    threads: int = 1                  # cap on batch parallelism (TDSYNTH_THREADS)
    random_word_length: int = 40      # default word length for `random` without --k
    default_seed: int = 0
    ih_probability: float = 0.25      # chance of drawing I⊗H in the scaled ring
    lde_walk_factor: int = 40         # walk steps allowed per unit of requested lde
    lde_walk_restarts: int = 50
    global_guard_slack: int = 16      # iteration guard is 4*k_initial + slack
    bench_count: int = 20


_config = Config()


def get_config() -> Config:
    return _config


def load_config_from_env() -> Config:
    """Override defaults from environment variables."""
    config = Config()
    if v := os.getenv("TDSYNTH_THREADS"):
        config.threads = max(1, int(v))
    if v := os.getenv("TDSYNTH_WORD_LENGTH"):
        config.random_word_length = int(v)
    if v := os.getenv("TDSYNTH_SEED"):
        config.default_seed = int(v)
    global _config
    _config = config
    return config
