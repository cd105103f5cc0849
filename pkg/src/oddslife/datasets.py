"""Bundled lifetime datasets and CSV ingestion.

Three classical complete samples ship with the package as one-value-per-line
CSV files.  A checksum manifest guards the transcriptions: loading verifies
the file digest before parsing.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources

import numpy as np

__all__ = ["Dataset", "DATASET_NAMES", "load_dataset", "read_values"]


@dataclass(frozen=True)
class Dataset:
    name: str
    values: np.ndarray
    source: str

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.size == 0:
            raise ValueError("dataset must be nonempty")
        if not np.all(np.isfinite(arr)) or not np.all(arr > 0.0):
            raise ValueError("dataset values must be finite and > 0")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return int(self.values.size)


_SOURCES = {
    "carbon_fibers_20mm": "tensile strength (GPa) of 69 carbon fibers at 20 mm gauge length",
    "air_conditioning": "failure interval counts for aircraft air conditioning systems",
    "component_failures": "failure times in weeks of 50 components",
}

DATASET_NAMES = tuple(_SOURCES)


def _data_dir():
    return resources.files("oddslife") / "data"


def _checksums() -> dict[str, str]:
    out = {}
    text = (_data_dir() / "SHA256SUMS").read_text()
    for line in text.splitlines():
        if not line.strip():
            continue
        digest, fname = line.split()
        out[fname] = digest
    return out


def load_dataset(name: str) -> Dataset:
    if name not in _SOURCES:
        known = ", ".join(DATASET_NAMES)
        raise ValueError(f"unknown dataset {name!r}; known: {known}")
    fname = f"{name}.csv"
    raw = (_data_dir() / fname).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    expected = _checksums()[fname]
    if digest != expected:
        raise RuntimeError(
            f"bundled dataset {fname} fails its checksum: got {digest}, expected {expected}"
        )
    values = _parse_csv_bytes(raw, fname)
    return Dataset(name=name, values=values, source=_SOURCES[name])


def read_values(path: str) -> np.ndarray:
    """Parse a one-value-per-line CSV of positive reals."""
    with open(path, "rb") as fh:
        return _parse_csv_bytes(fh.read(), path)


def _parse_csv_bytes(raw: bytes, label: str) -> np.ndarray:
    values = []
    for lineno, line in enumerate(raw.decode("utf-8").splitlines(), start=1):
        text = line.strip()
        if not text:
            continue
        try:
            values.append(float(text))
        except ValueError:
            raise ValueError(f"{label}: line {lineno} is not a number: {text!r}") from None
    if not values:
        raise ValueError(f"{label}: no values found")
    arr = np.array(values)
    if not np.all(np.isfinite(arr)) or not np.all(arr > 0.0):
        raise ValueError(f"{label}: values must be finite and > 0")
    return arr
