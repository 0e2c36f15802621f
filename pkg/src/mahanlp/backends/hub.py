"""Model-hub backend: wraps transformers pipelines behind the backend contract.

Artifacts are fetched by model id and revision into
``<MAHANLP_HOME>/models/<id>/<revision>/``; concurrent downloads of the same
model serialize on a per-model file lock. Requires the ``hub`` extra
(torch + transformers); imports stay inside this module so the rest of the
toolkit works without them.
"""

import re
from typing import Sequence

from ..config import models_dir
from ..errors import CapabilityError, InputError, ModelLoadError
from .base import (
    ClassifyOutput,
    EmbedOutput,
    FillMaskOutput,
    GenerateOutput,
    MaskCandidate,
    TagOutput,
)

_GENERIC_LABEL = re.compile(r"^LABEL[_-](\d+)$", re.IGNORECASE)

_PIPELINE_TASKS = {
    "sentiment": "text-classification",
    "hate": "text-classification",
    "tagger": "token-classification",
    "autocomplete": "text-generation",
    "mask_fill": "fill-mask",
    # similarity uses a raw encoder with mean pooling, not a pipeline
}


def _match_label(raw: str, labels: Sequence[str]) -> int:
    """Map a model-reported label string onto the caller's label list."""
    folded = raw.strip().casefold()
    for i, label in enumerate(labels):
        if folded == label.casefold():
            return i
    m = _GENERIC_LABEL.match(raw.strip())
    if m and int(m.group(1)) < len(labels):
        return int(m.group(1))
    raise ModelLoadError(
        f"model label {raw!r} does not map onto expected labels {list(labels)}")


class HubBackend:
    """Transformer-model backend for one descriptor's feature."""

    thread_safe = False

    def __init__(self, descriptor, config):
        self.descriptor = descriptor
        self.config = config
        self._torch = self._import_torch()
        if config.gpu_enabled and not self._torch.cuda.is_available():
            raise CapabilityError(
                "gpu_enabled=True but no CUDA device is available; "
                "pass gpu_enabled=False to run on CPU")
        self._device = "cuda" if config.gpu_enabled else "cpu"
        self._cache_dir = (models_dir() / descriptor.model_id / descriptor.revision)
        self._load()

    @staticmethod
    def _import_torch():
        try:
            import torch
        except ImportError as exc:
            raise ModelLoadError(
                "hub backends need the 'hub' extra: pip install mahanlp[hub]"
            ) from exc
        return torch

    def _load(self) -> None:
        from filelock import FileLock

        desc = self.descriptor
        self._cache_dir.parent.mkdir(parents=True, exist_ok=True)
        lock = FileLock(str(self._cache_dir) + ".lock")
        try:
            with lock:
                self._load_unlocked()
        except ModelLoadError:
            raise
        except Exception as exc:
            raise ModelLoadError(
                f"could not load model {desc.model_id!r} "
                f"(revision {desc.revision!r}): {exc}",
                model_id=desc.model_id,
            ) from exc

    def _load_unlocked(self) -> None:
        desc = self.descriptor
        kwargs = dict(
            model=desc.model_id,
            revision=desc.revision,
            model_kwargs={"cache_dir": str(self._cache_dir)},
            device=self._device,
        )
        if desc.feature == "similarity":
            from transformers import AutoModel, AutoTokenizer

            self._tokenizer = AutoTokenizer.from_pretrained(
                desc.model_id, revision=desc.revision, cache_dir=str(self._cache_dir))
            self._model = AutoModel.from_pretrained(
                desc.model_id, revision=desc.revision, cache_dir=str(self._cache_dir))
            self._model.to(self._device)
            self._model.eval()
            self._pipeline = None
        else:
            from transformers import pipeline

            self._pipeline = pipeline(_PIPELINE_TASKS[desc.feature], **kwargs)

    def classify(self, text: str, labels: Sequence[str]) -> ClassifyOutput:
        truncated = len(text.split()) > self.config.max_input_tokens
        result = self._pipeline(text, truncation=True)[0]
        return ClassifyOutput(
            _match_label(result["label"], labels),
            float(result["score"]),
            truncated,
        )

    def tag(self, tokens: Sequence[str], tagset: Sequence[str]) -> TagOutput:
        truncated = len(tokens) > self.config.max_input_tokens
        kept = list(tokens[: self.config.max_input_tokens])
        text = " ".join(kept)
        raw = self._pipeline(text)
        # Char-offset aligned assignment: each of our tokens takes the tag of
        # the model span covering its start; uncovered tokens are "O".
        default = tagset.index("O") if "O" in tagset else 0
        entries = []
        pos = 0
        for tok in kept:
            start = text.index(tok, pos)
            pos = start + len(tok)
            index, score = default, 1.0
            for ent in raw:
                if ent["start"] <= start < ent["end"]:
                    name = re.sub(r"^[BIES]-", "", ent["entity"]).upper()
                    if name in tagset:
                        index = tagset.index(name)
                        score = float(ent["score"])
                    break
            entries.append((index, score))
        return TagOutput(tuple(entries), truncated)

    def generate(self, text: str, n: int) -> GenerateOutput:
        if n < 0:
            raise InputError(f"word count must be non-negative, got {n}")
        truncated = len(text.split()) > self.config.max_input_tokens
        out = self._pipeline(
            text,
            max_new_tokens=max(16, 4 * n),
            num_return_sequences=1,
            do_sample=False,
        )[0]["generated_text"]
        continuation = out[len(text):] if out.startswith(text) else out
        words = continuation.split()
        if len(words) < n:
            raise ModelLoadError(
                f"model {self.descriptor.model_id!r} generated only "
                f"{len(words)} of {n} requested words")
        return GenerateOutput(tuple(words[:n]), truncated)

    def fill_mask(self, text: str, k: int) -> FillMaskOutput:
        if k < 1:
            raise InputError(f"k must be >= 1, got {k}")
        truncated = len(text.split()) > self.config.max_input_tokens
        model_mask = self._pipeline.tokenizer.mask_token
        prepared = text.replace(self.descriptor.mask_token, model_mask, 1)
        raw = self._pipeline(prepared, top_k=k)
        cands = [MaskCandidate(r["token_str"].strip(), float(r["score"])) for r in raw]
        cands.sort(key=lambda c: (-c.score, c.token))
        return FillMaskOutput(tuple(cands), truncated)

    def embed(self, text: str) -> EmbedOutput:
        torch = self._torch
        truncated = len(text.split()) > self.config.max_input_tokens
        enc = self._tokenizer(text, return_tensors="pt", truncation=True)
        enc = {k: v.to(self._device) for k, v in enc.items()}
        with torch.no_grad():
            hidden = self._model(**enc).last_hidden_state[0]
        mask = enc["attention_mask"][0].unsqueeze(-1)
        pooled = (hidden * mask).sum(dim=0) / mask.sum()
        return EmbedOutput(tuple(float(x) for x in pooled.cpu().tolist()), truncated)
