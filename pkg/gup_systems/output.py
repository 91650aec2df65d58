"""
CSV and JSON rendering of result tables.

Floats are written in their shortest round-trip form: positional for
1e-3 <= |v| < 1e6 (and zero), scientific otherwise. Nothing time- or
host-dependent goes into the output.
"""
import io
import json
import math
from typing import Any, Dict, Iterable, List, Optional

import numpy as np
import pandas as pd

FORMATS = ("csv", "json")
ENVELOPE_KEYS = ("command", "params", "rows", "checks")


def format_number(value: float) -> str:
    """Shortest decimal string that parses back to the same double."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if value == 0.0 or 1e-3 <= abs(value) < 1e6:
        return np.format_float_positional(value, unique=True, trim="0")
    return np.format_float_scientific(value, unique=True, trim="0")


def _plain(value: Any) -> Any:
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def flatten_row(row: Dict[str, Any]) -> Dict[str, Any]:
    """Split complex values into <name>_re and <name>_im; unwrap numpy scalars."""
    flat: Dict[str, Any] = {}
    for key, value in row.items():
        if isinstance(value, (complex, np.complexfloating)):
            flat[f"{key}_re"] = float(value.real)
            flat[f"{key}_im"] = float(value.imag)
        else:
            flat[key] = _plain(value)
    return flat


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def to_csv(rows: Iterable[Dict[str, Any]]) -> str:
    flat = [flatten_row(r) for r in rows]
    if not flat:
        return ""
    frame = pd.DataFrame([{k: _cell(v) for k, v in r.items()} for r in flat], dtype=str)
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def read_csv(source) -> pd.DataFrame:
    """Parse a table written by to_csv without losing float bits."""
    return pd.read_csv(source, float_precision="round_trip")


def envelope(
    command: str,
    params: Dict[str, Any],
    rows: Iterable[Dict[str, Any]],
    checks: Optional[List[Dict[str, Any]]] = None,
) -> Dict[str, Any]:
    return {
        "command": command,
        "params": {k: _plain(v) for k, v in params.items()},
        "rows": [flatten_row(r) for r in rows],
        "checks": [flatten_row(c) for c in (checks or [])],
    }


def _json_safe(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def to_json(document: Dict[str, Any]) -> str:
    """Strict JSON; NaN and infinities become null."""
    return json.dumps(_json_safe(document), indent=2, allow_nan=False) + "\n"


def render(
    fmt: str,
    command: str,
    params: Dict[str, Any],
    rows: List[Dict[str, Any]],
    checks: Optional[List[Dict[str, Any]]] = None,
) -> str:
    """
    Text for ``fmt`` ("csv" or "json").

    CSV carries only the rows (the check list for verify); JSON carries the
    full envelope.
    """
    if fmt == "csv":
        return to_csv(rows if rows else (checks or []))
    if fmt == "json":
        return to_json(envelope(command, params, rows, checks))
    raise ValueError(f"Unknown output format: {fmt}")
