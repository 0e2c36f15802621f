"""Filesystem locations for caches and downloaded artifacts.

The root is taken from the MAHANLP_HOME environment variable when set, else
from the per-user data directory (XDG_DATA_HOME or ~/.local/share).
"""

import os
from pathlib import Path

ENV_HOME = "MAHANLP_HOME"


def data_home() -> Path:
    """Root directory for everything the toolkit writes to disk."""
    env = os.environ.get(ENV_HOME)
    if env:
        return Path(env).expanduser()
    xdg = os.environ.get("XDG_DATA_HOME")
    base = Path(xdg).expanduser() if xdg else Path.home() / ".local" / "share"
    return base / "mahanlp"


def datasets_dir() -> Path:
    return data_home() / "datasets"


def models_dir() -> Path:
    return data_home() / "models"
