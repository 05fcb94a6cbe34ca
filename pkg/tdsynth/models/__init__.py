from .entities import (
    MatrixFile,
    PatternReport,
    RunConfig,
    StepRecord,
    SynthesisReport,
    WrapperSpec,
)

__all__ = [
    "MatrixFile", "PatternReport", "RunConfig", "StepRecord",
    "SynthesisReport", "WrapperSpec",
]
