from .base import (
    ClassifyOutput,
    EmbedOutput,
    FillMaskOutput,
    GenerateOutput,
    InferenceBackend,
    MaskCandidate,
    TagOutput,
)
from .stub import StubBackend, fnv1a64, load_stub_vocab

__all__ = [
    "ClassifyOutput",
    "EmbedOutput",
    "FillMaskOutput",
    "GenerateOutput",
    "InferenceBackend",
    "MaskCandidate",
    "TagOutput",
    "StubBackend",
    "fnv1a64",
    "load_stub_vocab",
]
