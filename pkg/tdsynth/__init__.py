"""tdsynth — exact synthesis of Toffoli-Hadamard circuits."""

from .config import Config, get_config
from .errors import (
    NotOrthogonalError,
    ParityError,
    ParseError,
    ReductionError,
    SynthesisError,
    UnsupportedDimensionError,
    VerificationError,
)
from .exact.matrix import DyadicVector, ScaledDyadicMatrix
from .generators.gates import Generator, GeneratorWord, Ring

__all__ = [
    "Config", "get_config",
    "NotOrthogonalError", "ParityError", "ParseError", "ReductionError",
    "SynthesisError", "UnsupportedDimensionError", "VerificationError",
    "DyadicVector", "ScaledDyadicMatrix", "Generator", "GeneratorWord", "Ring",
]
