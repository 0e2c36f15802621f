"""Shared plumbing for the task facades.

A facade resolves its model at construction and loads the backend on first
use, so cheap input validation errors never trigger a model download. Passing
``model_name`` selects a model the way the registry does; everything else is
defaulted away.
"""

import threading

from ..errors import InputError
from ..model_registry import BackendConfig, load_backend, resolve


class TaskFacade:
    """Base for the per-feature task classes."""

    feature: str = ""

    def __init__(self, model_name: str | None = None, gpu_enabled: bool = False,
                 config: BackendConfig | None = None, backend=None):
        if config is None:
            config = BackendConfig(gpu_enabled=gpu_enabled)
        self.descriptor = resolve(self.feature, model_name)
        self.config = config
        self._backend = backend
        self._load_lock = threading.Lock()

    @property
    def backend(self):
        if self._backend is None:
            with self._load_lock:
                if self._backend is None:
                    self._backend = load_backend(self.descriptor, self.config)
        return self._backend

    @staticmethod
    def _require_text(text: str, what: str = "text") -> None:
        if not isinstance(text, str) or not text.strip():
            raise InputError(f"{what} must be a non-empty string")
