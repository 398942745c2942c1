"""JSON encoding of complex scalars, vectors and matrices.

Complex data is serialized as separate real/imaginary arrays of IEEE-754
doubles (``{"re": ..., "im": ...}``), never as strings.  Parsing a dump
reproduces the original values exactly.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import SchemaError


def encode_complex(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def decode_complex(obj: Any) -> complex:
    if not isinstance(obj, dict) or "re" not in obj:
        raise SchemaError("complex scalar must be an object with 're' (and optional 'im')")
    return complex(float(obj["re"]), float(obj.get("im", 0.0)))


def encode_matrix(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    return {"re": m.real.tolist(), "im": m.imag.tolist()}


def decode_matrix(obj: Any, shape: tuple[int, int] | None = None) -> np.ndarray:
    if not isinstance(obj, dict) or "re" not in obj:
        raise SchemaError("matrix must be an object with 're' (and optional 'im') entries")
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"matrix entries must be numbers: {exc}") from exc
    if re.ndim != 2 or re.shape != im.shape:
        raise SchemaError("matrix 're'/'im' must be equal-shape 2-d arrays")
    m = re + 1j * im
    if shape is not None and m.shape != shape:
        raise SchemaError(f"expected matrix of shape {shape}, got {m.shape}")
    return m


def encode_vector(v: np.ndarray) -> dict:
    v = np.asarray(v, dtype=complex)
    return {"re": v.real.tolist(), "im": v.imag.tolist()}


def decode_vector(obj: Any, length: int | None = None) -> np.ndarray:
    if not isinstance(obj, dict) or "re" not in obj:
        raise SchemaError("vector must be an object with 're' (and optional 'im') entries")
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
    if re.ndim != 1 or re.shape != im.shape:
        raise SchemaError("vector 're'/'im' must be equal-length 1-d arrays")
    v = re + 1j * im
    if length is not None and v.shape != (length,):
        raise SchemaError(f"expected vector of length {length}, got {v.shape[0]}")
    return v


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON in {path}: {exc}") from exc


def dumps_report(report: dict) -> str:
    """Canonical report encoding: sorted keys, stable float repr."""
    return json.dumps(report, sort_keys=True, indent=2, allow_nan=True)
