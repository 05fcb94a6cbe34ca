"""
Canonical binary patterns.

Every element of L_8 with sqrt(2)-exponent at least 2 has, up to row
permutation, column permutation and transpose, one of the fourteen
patterns A..N below. Elements of L_4 with exponent at least 1 have one of
B0, B1, B2 up to row and column permutation.
"""

from typing import Dict, Tuple

from ..exact.bits import BinaryPattern

_DIM8 = {
    "A": (
        "11111111",
        "11111111",
        "11111111",
        "11111111",
        "11111111",
        "11111111",
        "11111111",
        "11111111",
    ),
    "B": (
        "11111111",
        "11111111",
        "11111111",
        "11111111",
        "11110000",
        "11110000",
        "11110000",
        "11110000",
    ),
    "C": (
        "11111111",
        "11111111",
        "11110000",
        "11110000",
        "11001100",
        "11001100",
        "11000011",
        "11000011",
    ),
    "D": (
        "11110000",
        "11110000",
        "11110000",
        "11110000",
        "11001100",
        "11001100",
        "11001100",
        "11001100",
    ),
    "E": (
        "11111111",
        "11111111",
        "11110000",
        "11110000",
        "00001111",
        "00001111",
        "00000000",
        "00000000",
    ),
    "F": (
        "11110000",
        "11110000",
        "11001100",
        "11001100",
        "10101010",
        "10101010",
        "10010110",
        "10010110",
    ),
    "G": (
        "11110000",
        "11110000",
        "11001100",
        "11001100",
        "00111100",
        "00111100",
        "00000000",
        "00000000",
    ),
    "H": (
        "11110000",
        "11110000",
        "11001100",
        "11001100",
        "00110011",
        "00110011",
        "00001111",
        "00001111",
    ),
    "I": (
        "11110000",
        "11110000",
        "11110000",
        "11110000",
        "00001111",
        "00001111",
        "00001111",
        "00001111",
    ),
    "J": (
        "11110000",
        "11110000",
        "11110000",
        "11110000",
        "00000000",
        "00000000",
        "00000000",
        "00000000",
    ),
    "K": (
        "11111111",
        "11111111",
        "11111111",
        "11111111",
        "00000000",
        "00000000",
        "00000000",
        "00000000",
    ),
    "L": (
        "11111111",
        "11110000",
        "11001100",
        "11000011",
        "10101010",
        "10100101",
        "10011001",
        "10010110",
    ),
    "M": (
        "11110000",
        "11001100",
        "10101010",
        "10010110",
        "01101001",
        "01010101",
        "00110011",
        "00001111",
    ),
    "N": (
        "11110000",
        "11001100",
        "10101010",
        "10010110",
        "01100110",
        "01011010",
        "00111100",
        "00000000",
    ),
}

_DIM4 = {
    "B0": ("1100", "1100", "0000", "0000"),
    "B1": ("1100", "1100", "0011", "0011"),
    "B2": ("1111", "1111", "1111", "1111"),
}

PATTERNS_8: Dict[str, BinaryPattern] = {
    label: BinaryPattern.from_strings(rows) for label, rows in _DIM8.items()
}
PATTERNS_4: Dict[str, BinaryPattern] = {
    label: BinaryPattern.from_strings(rows) for label, rows in _DIM4.items()
}

# neither row- nor column-paired; the global algorithm conjugates these by I⊗H
NON_PAIRED_LABELS: Tuple[str, ...] = ("L", "M", "N")


def tables_for(n: int) -> Dict[str, BinaryPattern]:
    if n == 8:
        return PATTERNS_8
    if n == 4:
        return PATTERNS_4
    raise ValueError(f"no pattern tables for n={n}")
