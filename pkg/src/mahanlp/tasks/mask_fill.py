"""Masked-word prediction."""

from functools import lru_cache

from ..errors import InputError
from ._facade import TaskFacade
from .types import MaskFillResult


class MaskFill(TaskFacade):
    feature = "mask_fill"

    def predict_mask(self, text: str, k: int = 5) -> list[MaskFillResult]:
        """Top ``k`` fillers for the mask placeholder, best first.

        ``text`` must contain the placeholder (``[MASK]`` unless the model
        descriptor says otherwise) exactly once.
        """
        self._require_text(text)
        if k < 1:
            raise InputError(f"k must be >= 1, got {k}")
        mask = self.descriptor.mask_token
        count = text.count(mask)
        if count != 1:
            raise InputError(
                f"text must contain exactly one {mask} placeholder, found {count}")
        out = self.backend.fill_mask(text, k)
        return [MaskFillResult(c.token, text.replace(mask, c.token), c.score)
                for c in out.candidates]


@lru_cache(maxsize=8)
def _filler(model_name: str | None, gpu_enabled: bool) -> MaskFill:
    return MaskFill(model_name=model_name, gpu_enabled=gpu_enabled)


def predict_mask(text: str, k: int = 5, model_name: str | None = None,
                 gpu_enabled: bool = False) -> list[MaskFillResult]:
    return _filler(model_name, gpu_enabled).predict_mask(text, k)
