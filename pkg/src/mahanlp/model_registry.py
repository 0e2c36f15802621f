"""Model catalog and backend loading (the advanced, model-selecting tier).

Each feature maps to one default hub model plus the offline ``stub`` model.
Unknown model names resolve to a pass-through hub descriptor whose existence
is only checked at load time, mirroring hub semantics.
"""

from dataclasses import dataclass

from .errors import CatalogError, InputError
from .backends import InferenceBackend, StubBackend

__all__ = [
    "FEATURES",
    "STUB_MODEL_ID",
    "ModelDescriptor",
    "BackendConfig",
    "list_models",
    "resolve",
    "load_backend",
]

FEATURES = ("sentiment", "hate", "tagger", "autocomplete", "mask_fill", "similarity")

STUB_MODEL_ID = "stub"

DEFAULT_MASK_TOKEN = "[MASK]"


@dataclass(frozen=True)
class ModelDescriptor:
    """Binds a feature to a model identifier and backend kind."""

    feature: str
    model_id: str
    revision: str = "main"
    backend_kind: str = "hub"  # "hub" | "stub"
    is_default: bool = False
    mask_token: str = DEFAULT_MASK_TOKEN

    def __post_init__(self):
        if not self.model_id:
            raise InputError("model_id must be non-empty")


@dataclass(frozen=True)
class BackendConfig:
    """Runtime knobs shared by every backend kind."""

    gpu_enabled: bool = False
    max_input_tokens: int = 512

    def __post_init__(self):
        if self.max_input_tokens < 1:
            raise InputError(
                f"max_input_tokens must be >= 1, got {self.max_input_tokens}")


_DEFAULT_MODEL_IDS = {
    "sentiment": "l3cube-pune/MarathiSentiment",
    "hate": "l3cube-pune/mahahate-bert",
    "tagger": "l3cube-pune/marathi-ner",
    "autocomplete": "l3cube-pune/marathi-gpt",
    "mask_fill": "l3cube-pune/marathi-bert-v2",
    "similarity": "l3cube-pune/marathi-sentence-similarity-sbert",
}


def _build_catalog() -> tuple[ModelDescriptor, ...]:
    entries = []
    for feature in FEATURES:
        entries.append(ModelDescriptor(
            feature=feature,
            model_id=_DEFAULT_MODEL_IDS[feature],
            backend_kind="hub",
            is_default=True,
        ))
        entries.append(ModelDescriptor(
            feature=feature,
            model_id=STUB_MODEL_ID,
            revision="builtin",
            backend_kind="stub",
        ))
    return tuple(entries)


CATALOG: tuple[ModelDescriptor, ...] = _build_catalog()


def _check_feature(feature: str) -> None:
    if feature not in FEATURES:
        raise CatalogError(
            f"unknown feature {feature!r}; valid features: {', '.join(FEATURES)}")


def list_models(feature: str) -> list[ModelDescriptor]:
    """All registered models for ``feature``; exactly one is the default."""
    _check_feature(feature)
    return [d for d in CATALOG if d.feature == feature]


def resolve(feature: str, model_name: str | None = None) -> ModelDescriptor:
    """Pick the descriptor for ``model_name``, or the feature default.

    Names absent from the catalog return a pass-through hub descriptor;
    whether such a model exists is decided when it is loaded.
    """
    _check_feature(feature)
    if model_name is None:
        return next(d for d in CATALOG if d.feature == feature and d.is_default)
    for d in CATALOG:
        if d.feature == feature and d.model_id == model_name:
            return d
    return ModelDescriptor(feature=feature, model_id=model_name, backend_kind="hub")


def load_backend(descriptor: ModelDescriptor,
                 config: BackendConfig | None = None) -> InferenceBackend:
    """Instantiate the backend a descriptor names.

    The stub kind ignores the GPU flag; the hub kind downloads the model (if
    needed) and raises :class:`CapabilityError` when a GPU is requested but
    absent rather than silently falling back to CPU.
    """
    if config is None:
        config = BackendConfig()
    if descriptor.backend_kind == "stub":
        return StubBackend(config)
    if descriptor.backend_kind == "hub":
        from .backends.hub import HubBackend  # keeps torch/transformers optional

        return HubBackend(descriptor, config)
    raise CatalogError(
        f"unknown backend kind {descriptor.backend_kind!r}; expected 'stub' or 'hub'")
