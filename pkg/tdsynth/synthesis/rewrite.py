"""
Elimination of I⊗H pairs.

Conjugating by I⊗H maps the integral generators on adjacent levels to
short integral words (IH·g·IH = R(g)):

    IH M[a] IH       = M[a] X[a,a+1] M[a]        a even
    IH M[a] IH       = X[a-1,a]                  a odd
    IH X[a,a+1] IH   = M[a+1]                    a even
    IH X[a,a+1] IH   = K[a-1,a,a+1,a+2] X[a,a+1] a odd

together with IH IH = ε. A segment [IH, w1, ..., wm, IH] in application
order therefore equals R(w1) ... R(wm) once every wide X[a,b] has been
expanded into adjacent transpositions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from ..errors import RewriteError
from ..generators.gates import Generator, GeneratorKind, GeneratorWord, evaluate_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RewriteRule:
    """``lhs`` and ``rhs`` are words in application order that evaluate to the same matrix."""

    name: str
    lhs: Tuple[Generator, ...]
    rhs: Tuple[Generator, ...]

    def holds(self, n: int) -> bool:
        return evaluate_word(GeneratorWord(n, self.lhs)) == evaluate_word(GeneratorWord(n, self.rhs))

    def __str__(self) -> str:
        lhs = " ".join(str(g) for g in self.lhs) or "ε"
        rhs = " ".join(str(g) for g in self.rhs) or "ε"
        return f"{self.name}: {lhs} = {rhs}"


def _conjugate_neg_one(a: int) -> List[Generator]:
    if a % 2 == 0:
        return [Generator.neg_one(a), Generator.x(a, a + 1), Generator.neg_one(a)]
    return [Generator.x(a - 1, a)]


def _conjugate_adjacent_x(a: int) -> List[Generator]:
    if a % 2 == 0:
        return [Generator.neg_one(a + 1)]
    return [Generator.x(a, a + 1), Generator.k(a - 1, a, a + 1, a + 2)]


def rewrite_rules(n: int) -> List[RewriteRule]:
    """Every instance of the five relations at even dimension n."""
    if n % 2 or n < 2:
        logger.error("rewrite rules requested at n=%d", n)
        raise RewriteError(f"rewrite rules need an even dimension, got n={n}")
    ih = Generator.ih()
    rules = [RewriteRule("ih-cancel", (ih, ih), ())]
    for a in range(n):
        g = Generator.neg_one(a)
        kind = "ih-neg-even" if a % 2 == 0 else "ih-neg-odd"
        rules.append(RewriteRule(f"{kind}[{a}]", (g, ih), (ih, *_conjugate_neg_one(a))))
    for a in range(n - 1):
        g = Generator.x(a, a + 1)
        kind = "ih-swap-even" if a % 2 == 0 else "ih-swap-odd"
        rules.append(RewriteRule(f"{kind}[{a}]", (g, ih), (ih, *_conjugate_adjacent_x(a))))
    return rules


def check_relations(n: int) -> List[Tuple[RewriteRule, bool]]:
    """Evaluate every rule instance at dimension n exactly."""
    results = [(rule, rule.holds(n)) for rule in rewrite_rules(n)]
    for rule, ok in results:
        if not ok:
            logger.error("relation does not hold at n=%d: %s", n, rule)
    return results


def adjacent_transpositions(a: int, b: int) -> List[Generator]:
    """X[a,b] as the palindrome X[b-1,b] ... X[a,a+1] ... X[b-1,b]."""
    down = [Generator.x(c, c + 1) for c in range(b - 1, a - 1, -1)]
    up = [Generator.x(c, c + 1) for c in range(a + 1, b)]
    return down + up


def _conjugated(g: Generator) -> Iterator[Generator]:
    if g.kind is GeneratorKind.NEG_ONE:
        yield from _conjugate_neg_one(g.levels[0])
    elif g.kind is GeneratorKind.TWO_LEVEL_X:
        for t in adjacent_transpositions(*g.levels):
            yield from _conjugate_adjacent_x(t.levels[0])
    else:
        logger.error("%s inside an I⊗H pair; only M and X can be conjugated", g)
        raise RewriteError(f"{g} cannot be moved through I⊗H")


def eliminate_ih_pairs(w: GeneratorWord) -> GeneratorWord:
    """An IH-free word with the same value.

    IH items are paired first-with-second, third-with-fourth, and so on;
    only M and X may sit inside a pair.
    """
    ih_total = w.count(GeneratorKind.IH)
    if ih_total % 2:
        logger.error("word of length %d has %d IH, cannot pair them", len(w), ih_total)
        raise RewriteError(f"word contains an odd number ({ih_total}) of IH")

    out: List[Generator] = []
    inside = False
    for g in w.items:
        if g.kind is GeneratorKind.IH:
            inside = not inside
            continue
        if inside:
            out.extend(_conjugated(g))
        else:
            out.append(g)

    result = GeneratorWord(w.n, tuple(out))
    logger.debug("eliminated %d IH: %d -> %d generators", ih_total, len(w), len(result))
    return result


def rewrite_blowup(before: GeneratorWord, after: GeneratorWord) -> float:
    """Length ratio after/before; 1.0 for an empty input."""
    if len(before) == 0:
        return 1.0
    return len(after) / len(before)
