"""Pydantic models for the JSON files tdsynth reads and writes."""

from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ..config import dimension_config
from ..errors import UnsupportedDimensionError
from ..exact.matrix import ScaledDyadicMatrix, normalize

_ALGORITHMS = ("local", "householder", "global")
_RINGS = ("integral", "scaled")
_STEP_KINDS = ("row-paired", "column-paired", "conjugate", "base")


class MatrixFile(BaseModel):
    """``{"n": 4, "k": 2, "entries": [[...], ...]}`` meaning entries / sqrt(2)^k."""

    n: int = Field(gt=0)
    k: int = Field(ge=0)
    entries: List[List[int]]

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixFile":
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError(f"entries must be a {self.n}x{self.n} integer matrix")
        return self

    def to_matrix(self) -> ScaledDyadicMatrix:
        return normalize(self.entries, self.k)

    @classmethod
    def from_matrix(cls, u: ScaledDyadicMatrix) -> "MatrixFile":
        return cls(n=u.n, k=u.k, entries=[list(r) for r in u.entries])


class PatternReport(BaseModel):
    label: str
    transposed: bool = False
    row_perm: List[int]
    col_perm: List[int]

    @model_validator(mode="after")
    def check_permutations(self) -> "PatternReport":
        for name, perm in (("row_perm", self.row_perm), ("col_perm", self.col_perm)):
            if sorted(perm) != list(range(len(perm))):
                raise ValueError(f"{name} is not a permutation")
        if len(self.row_perm) != len(self.col_perm):
            raise ValueError("row_perm and col_perm differ in length")
        return self

    @classmethod
    def from_pattern_id(cls, pid) -> "PatternReport":
        return cls(
            label=pid.label,
            transposed=pid.transposed,
            row_perm=list(pid.row_perm.image),
            col_perm=list(pid.col_perm.image),
        )


class StepRecord(BaseModel):
    kind: str
    lde_before: int = Field(ge=0)
    lde_after: int = Field(ge=0)

    @field_validator("kind")
    @classmethod
    def validate_kind(cls, v: str) -> str:
        if v not in _STEP_KINDS:
            raise ValueError(f"kind must be one of {', '.join(_STEP_KINDS)}")
        return v

    @property
    def progressed(self) -> bool:
        """Paired steps must lower the exponent; conjugation must not raise it."""
        if self.kind in ("row-paired", "column-paired"):
            return self.lde_after < self.lde_before
        return self.lde_after <= self.lde_before


class WrapperSpec(BaseModel):
    """Ancilla gates around the reflection word: C = (H⊗I)·D·(HX⊗I), ancilla most significant."""

    pre: List[str] = ["X@anc", "H@anc"]      # application order
    post: List[str] = ["H@anc"]
    ancilla: str = "msb"
    available: bool = True                  # no circuit assembly for the integral ring

    @field_validator("ancilla")
    @classmethod
    def validate_ancilla(cls, v: str) -> str:
        if v != "msb":
            raise ValueError("only the most-significant ancilla layout is supported")
        return v


class SynthesisReport(BaseModel):
    algorithm: str
    ring: str = "scaled"
    n: int = Field(gt=0)
    k_initial: int = Field(ge=0)
    word_length: int = Field(ge=0)
    ih_count: int = Field(ge=0)
    steps: List[StepRecord] = []
    verified: bool = False
    rewrite_blowup: Optional[float] = None
    wrapper: Optional[WrapperSpec] = None

    @field_validator("algorithm")
    @classmethod
    def validate_algorithm(cls, v: str) -> str:
        if v not in _ALGORITHMS:
            raise ValueError(f"algorithm must be one of {', '.join(_ALGORITHMS)}")
        return v

    @field_validator("ring")
    @classmethod
    def validate_ring(cls, v: str) -> str:
        if v not in _RINGS:
            raise ValueError(f"ring must be one of {', '.join(_RINGS)}")
        return v


class RunConfig(BaseModel):
    command: str
    algorithm: str = "local"
    ring: str = "scaled"
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    word_path: Optional[Path] = None
    seed: int = 0
    count: int = Field(default=1, ge=0)
    k_values: List[int] = []
    n: Optional[int] = Field(default=None, gt=0)

    @field_validator("algorithm")
    @classmethod
    def validate_algorithm(cls, v: str) -> str:
        if v not in _ALGORITHMS:
            raise ValueError(f"algorithm must be one of {', '.join(_ALGORITHMS)}")
        return v

    @field_validator("ring")
    @classmethod
    def validate_ring(cls, v: str) -> str:
        if v not in _RINGS:
            raise ValueError(f"ring must be one of {', '.join(_RINGS)}")
        return v

    @field_validator("k_values")
    @classmethod
    def validate_k_values(cls, v: List[int]) -> List[int]:
        if any(k < 0 for k in v):
            raise ValueError("exponents must be non-negative")
        return v

    @field_validator("input_path", "word_path")
    @classmethod
    def validate_exists(cls, v: Optional[Path]) -> Optional[Path]:
        if v is not None and not v.exists():
            raise ValueError(f"no such file: {v}")
        return v

    @model_validator(mode="after")
    def check_output_dir(self) -> "RunConfig":
        if self.output_path is not None:
            parent = self.output_path.parent
            if not parent.exists():
                raise ValueError(f"output directory does not exist: {parent}")
        return self

    def check_dimension(self, n: int) -> None:
        """Global synthesis is only defined at n = 2, 4, 8."""
        if self.algorithm == "global" and not dimension_config(n).global_supported:
            raise UnsupportedDimensionError(
                f"global synthesis is restricted to n in {{2, 4, 8}}, got n={n}", n=n
            )
