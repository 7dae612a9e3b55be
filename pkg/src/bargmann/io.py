"""File formats: state tuples and candidates as JSON, curves and scatters as CSV."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ParseError
from .states import as_state_tuple


def _num17(x: float) -> str:
    return format(float(x), ".17g")


def fmt12(x: float, scale: float = 1.0) -> str:
    """12 significant digits; values below the printed precision of ``scale`` print as 0."""
    x = float(x)
    if abs(x) < 1e-12 * max(1.0, abs(scale)):
        x = 0.0
    return format(x, ".12g")


def dumps_states(states) -> str:
    t = as_state_tuple(states)
    rows = []
    for psi in t:
        amps = ", ".join(f"[{_num17(a.real)}, {_num17(a.imag)}]" for a in psi)
        rows.append(f"    [{amps}]")
    return '{\n  "dim": %d,\n  "states": [\n%s\n  ]\n}\n' % (t.shape[1], ",\n".join(rows))


def loads_states(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
        dim = int(doc["dim"])
        raw = doc["states"]
        states = [np.array([complex(float(re), float(im)) for re, im in psi]) for psi in raw]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed state file: {exc}") from exc
    if not states or any(s.shape != (dim,) for s in states):
        raise ParseError(f"every state must have {dim} amplitudes")
    try:
        return as_state_tuple(states)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def read_states(path) -> np.ndarray:
    return loads_states(Path(path).read_text())


def write_states(path, states) -> None:
    Path(path).write_text(dumps_states(states))


def dumps_candidate(overlaps, phases=()) -> str:
    return json.dumps({"overlaps": [float(v) for v in overlaps], "phases": [float(p) for p in phases]})


def loads_candidate(text: str) -> tuple[list[float], list[float]]:
    try:
        doc = json.loads(text)
        return [float(v) for v in doc["overlaps"]], [float(p) for p in doc.get("phases", [])]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed candidate file: {exc}") from exc


def metadata_lines(meta: dict) -> list[str]:
    return [f"# {k}={v}" for k, v in meta.items()]


def write_csv(fh, header: list[str], rows, meta: dict) -> None:
    for line in metadata_lines(meta):
        fh.write(line + "\n")
    fh.write(",".join(header) + "\n")
    for row in rows:
        fh.write(",".join(row) + "\n")


def read_csv_rows(path) -> list[list[float]]:
    rows = []
    lines = [ln for ln in Path(path).read_text().splitlines() if ln and not ln.startswith("#")]
    for ln in lines[1:]:
        rows.append([float(x) for x in ln.split(",")])
    return rows
