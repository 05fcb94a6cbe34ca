from .bits import BinaryPattern
from .matrix import (
    DyadicVector,
    ScaledDyadicMatrix,
    base2_lde,
    basis_vector,
    binary_pattern,
    block,
    dot,
    identity,
    is_orthogonal,
    is_zero,
    lde_sqrt2,
    multiply,
    multiply_vector,
    normalize,
    normalize_vector,
    outer_projector_sum,
    reflection_matrix,
    require_orthogonal,
    transpose,
    vector_base2_lde,
)

__all__ = [
    "BinaryPattern", "DyadicVector", "ScaledDyadicMatrix",
    "base2_lde", "basis_vector", "binary_pattern", "block", "dot",
    "identity", "is_orthogonal", "is_zero", "lde_sqrt2", "multiply", "multiply_vector",
    "normalize", "normalize_vector", "outer_projector_sum",
    "reflection_matrix", "require_orthogonal", "transpose", "vector_base2_lde",
]
