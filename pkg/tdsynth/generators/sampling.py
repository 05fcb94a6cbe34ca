"""Seeded random workloads: generator words and the matrices they evaluate to."""

from __future__ import annotations

import logging
import random
from typing import List, Optional, Tuple

from ..config import dimension_config, get_config
from ..errors import ParityError, UnsupportedDimensionError
from ..exact.matrix import ScaledDyadicMatrix, identity
from .gates import Generator, GeneratorKind, GeneratorWord, Ring, apply_left

logger = logging.getLogger(__name__)


def _integral_kinds(n: int) -> List[GeneratorKind]:
    kinds = [GeneratorKind.NEG_ONE]
    if n >= 2:
        kinds.append(GeneratorKind.TWO_LEVEL_X)
    if n >= 4:
        kinds.append(GeneratorKind.FOUR_LEVEL_K)
    return kinds


def draw_generator(
    rng: random.Random, n: int, ring: Ring, ih_probability: Optional[float] = None
) -> Generator:
    """One generator: IH with fixed probability (scaled ring, even n), else a uniform kind."""
    if ih_probability is None:
        ih_probability = get_config().ih_probability
    if ring is Ring.SCALED and n % 2 == 0 and rng.random() < ih_probability:
        return Generator.ih()
    kind = rng.choice(_integral_kinds(n))
    if kind is GeneratorKind.NEG_ONE:
        return Generator(kind, (rng.randrange(n),))
    arity = 2 if kind is GeneratorKind.TWO_LEVEL_X else 4
    return Generator(kind, tuple(sorted(rng.sample(range(n), arity))))


def random_element(
    n: int,
    word_length: int,
    ring: Ring = Ring.SCALED,
    seed: int = 0,
) -> Tuple[GeneratorWord, ScaledDyadicMatrix]:
    """A random word of the given length and its exact evaluation.

    At odd n the two rings coincide and no IH is ever drawn.
    """
    if n < 2:
        raise UnsupportedDimensionError("random_element needs n >= 2", n=n)
    rng = random.Random(seed)
    items = [draw_generator(rng, n, Ring(ring)) for _ in range(word_length)]
    u = identity(n)
    for g in items:
        u = apply_left(g, u)
    return GeneratorWord(n, tuple(items)), u


def random_with_lde(
    n: int,
    k: int,
    ring: Ring = Ring.SCALED,
    seed: int = 0,
) -> Tuple[GeneratorWord, ScaledDyadicMatrix]:
    """A random element whose least scaled denominator exponent is exactly k.

    Walks from the identity, rejecting moves that overshoot k, until the
    exponent lands on k; restarts with a derived seed when the walk stalls.
    """
    ring = Ring(ring)
    if n < 2:
        raise UnsupportedDimensionError("random_with_lde needs n >= 2", n=n)
    if k % 2 and (ring is Ring.INTEGRAL or n % 2):
        raise ParityError(f"no element of the {ring.value} group at n={n} has odd exponent {k}")
    bound = dimension_config(n).max_lde
    if (bound is not None and k > bound) or (n < 4 and k > 1) or (n < 4 and n % 2 and k):
        raise UnsupportedDimensionError(f"no orthogonal {n}x{n} element has lde {k}", n=n)

    config = get_config()
    steps = config.lde_walk_factor * (k + 1)
    for attempt in range(config.lde_walk_restarts):
        rng = random.Random(seed * 7919 + attempt)
        u = identity(n)
        items: List[Generator] = []
        for _ in range(steps):
            if u.k == k:
                break
            g = draw_generator(rng, n, ring)
            nxt = apply_left(g, u)
            if nxt.k > k:
                continue
            items.append(g)
            u = nxt
        if u.k == k:
            return GeneratorWord(n, tuple(items)), u
        logger.debug("lde walk stalled at %d (target %d), attempt %d", u.k, k, attempt)
    raise UnsupportedDimensionError(f"could not reach lde {k} at n={n}", n=n)
