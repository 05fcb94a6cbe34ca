from .classify import (
    PatternId,
    Permutation,
    classify_pattern,
    find_row_pairing,
    is_column_paired,
    is_row_paired,
)
from .tables import NON_PAIRED_LABELS, PATTERNS_4, PATTERNS_8, tables_for

__all__ = [
    "PatternId", "Permutation", "classify_pattern", "find_row_pairing",
    "is_column_paired", "is_row_paired",
    "NON_PAIRED_LABELS", "PATTERNS_4", "PATTERNS_8", "tables_for",
]
