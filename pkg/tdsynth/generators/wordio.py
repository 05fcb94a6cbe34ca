"""
Word text format.

    dim 8
    M[3]
    X[0,3]
    K[0,1,2,3]
    IH

One generator per line in application order. Blank lines and lines
starting with '#' are ignored.
"""

import re
from pathlib import Path
from typing import Union

from ..errors import InvalidGeneratorError, ParseError
from .gates import Generator, GeneratorKind, GeneratorWord

_ITEM = re.compile(r"^(M|X|K)\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]$")
_HEADER = re.compile(r"^dim\s+(\d+)$")


def parse_generator(token: str, line: int = None) -> Generator:
    token = token.strip()
    if token == "IH":
        return Generator.ih()
    m = _ITEM.match(token)
    if not m:
        raise ParseError(f"unrecognised generator {token!r}", line)
    levels = tuple(int(x) for x in m.group(2).split(","))
    try:
        return Generator(GeneratorKind(m.group(1)), levels)
    except InvalidGeneratorError as exc:
        raise ParseError(str(exc), line) from exc


def parse_word(text: str) -> GeneratorWord:
    n = None
    items = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError("expected header 'dim <n>'", lineno)
            n = int(m.group(1))
            if n < 1:
                raise ParseError("dimension must be positive", lineno)
            continue
        g = parse_generator(line, lineno)
        try:
            g.validate(n)
        except InvalidGeneratorError as exc:
            raise ParseError(str(exc), lineno) from exc
        items.append(g)
    if n is None:
        raise ParseError("missing header 'dim <n>'")
    return GeneratorWord(n, tuple(items))


def format_word(w: GeneratorWord) -> str:
    lines = [f"dim {w.n}"] + [str(g) for g in w.items]
    return "\n".join(lines) + "\n"


def read_word(path: Union[str, Path]) -> GeneratorWord:
    with open(path) as fh:
        return parse_word(fh.read())


def write_word(w: GeneratorWord, path: Union[str, Path]) -> None:
    with open(path, "w") as fh:
        fh.write(format_word(w))
