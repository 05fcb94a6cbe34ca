from .gates import (
    Generator,
    GeneratorKind,
    GeneratorWord,
    Ring,
    apply_left,
    apply_left_vector,
    apply_right,
    apply_word,
    apply_word_vector,
    evaluate_word,
    generator_matrix,
    permutation_word,
    word_inverse,
)
from .sampling import random_element, random_with_lde
from .wordio import format_word, parse_generator, parse_word, read_word, write_word

__all__ = [
    "Generator", "GeneratorKind", "GeneratorWord", "Ring",
    "apply_left", "apply_left_vector", "apply_right", "apply_word", "apply_word_vector",
    "evaluate_word", "generator_matrix", "permutation_word", "word_inverse",
    "random_element", "random_with_lde",
    "format_word", "parse_generator", "parse_word", "read_word", "write_word",
]
