"""Locate bundled data files, honoring the SGQ_DATA_DIR override."""

from __future__ import annotations

import os
from pathlib import Path

from .errors import DataFileError

_BUNDLED = Path(__file__).resolve().parent / "data"


def data_dir() -> Path:
    override = os.environ.get("SGQ_DATA_DIR")
    if override:
        return Path(override)
    return _BUNDLED


def data_file(name: str) -> Path:
    """Path to a named data file; SGQ_DATA_DIR wins, bundled data is the fallback."""
    override = os.environ.get("SGQ_DATA_DIR")
    if override:
        cand = Path(override) / name
        if cand.is_file():
            return cand
    cand = _BUNDLED / name
    if cand.is_file():
        return cand
    tried = [str(Path(override) / name), str(cand)] if override else [str(cand)]
    raise DataFileError(f"data file {name!r} not found (tried {', '.join(tried)})")
