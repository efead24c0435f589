"""JSON graph spec files, weight presets and report serialization.

A spec file looks like::

    {
      "mode": "general",            # or "symmetric"
      "vertices": 3,
      "arcs": [{"tail": 0, "head": 1}, ...],    # general mode
      "edges": [{"u": 0, "v": 1}, ...],         # symmetric mode
      "involution": [1, 0, ...],                # optional, pairs arcs by id
      "labels": ["a11", ...],                   # optional arc names
      "preset": "classic",                      # optional
      "weights": [{"tau1": "1/2", "tau2": "3", "upsilon1": "1-2i", "upsilon2": "0"}, ...]
    }

Exact values are strings (``"p/q"`` or ``"p/q+r/si"``), never floats.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .algebra import Matrix, Polynomial, RationalFunction, Scalar, TruncatedSeries, parse_scalar
from .digraph import Digraph, DigraphError, symmetric_digraph
from .zeta import WeightAssignment

__all__ = [
    "SpecError",
    "GraphSpec",
    "PRESETS",
    "load_spec",
    "parse_spec",
    "spec_from_dict",
    "dump_spec",
    "random_weights",
    "scalar_str",
    "poly_coeffs",
    "series_coeffs",
    "rational_str",
    "matrix_strs",
]

WEIGHT_FIELDS = ("tau1", "tau2", "upsilon1", "upsilon2")
PRESETS = ("classic", "generalized-weighted")


class SpecError(ValueError):
    """Invalid graph spec input.  ``kind`` is one of parse, weight, range."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


@dataclass
class GraphSpec:
    digraph: Digraph
    weights: WeightAssignment | None
    labels: tuple[str, ...]
    fault: dict | None = None


def _int(obj, key, where):
    try:
        v = obj[key]
    except (KeyError, TypeError):
        raise SpecError("parse", f"{where}: missing field {key!r}") from None
    if not isinstance(v, int) or isinstance(v, bool):
        raise SpecError("parse", f"{where}.{key}: expected an integer, got {v!r}")
    return v


def _scalar(text, where) -> Scalar:
    if not isinstance(text, str):
        raise SpecError("parse", f"{where}: exact values must be strings, got {text!r}")
    try:
        return parse_scalar(text)
    except ValueError as e:
        raise SpecError("parse", f"{where}: {e}") from None


def _build_digraph(data: dict, mode_override: str | None) -> Digraph:
    mode = mode_override or data.get("mode", "general")
    if mode not in ("general", "symmetric"):
        raise SpecError("parse", f"mode: expected 'general' or 'symmetric', got {mode!r}")
    n = _int(data, "vertices", "spec")
    if n < 0:
        raise SpecError("range", "vertices: must be non-negative")
    try:
        if "edges" in data:
            edges = [(_int(e, "u", f"edges[{i}]"), _int(e, "v", f"edges[{i}]")) for i, e in enumerate(data["edges"])]
            for i, (u, v) in enumerate(edges):
                if not (0 <= u < n and 0 <= v < n):
                    raise SpecError("range", f"edges[{i}]: endpoint out of range for {n} vertices")
            dg = symmetric_digraph(edges, n)
            return dg if mode == "symmetric" else dg.as_general()
        arcs = data.get("arcs")
        if arcs is None:
            raise SpecError("parse", "spec needs 'arcs' or 'edges'")
        pairs = [(_int(a, "tail", f"arcs[{i}]"), _int(a, "head", f"arcs[{i}]")) for i, a in enumerate(arcs)]
        for i, (u, v) in enumerate(pairs):
            if not (0 <= u < n and 0 <= v < n):
                raise SpecError("range", f"arcs[{i}]: endpoint out of range for {n} vertices")
        if mode == "general":
            return Digraph.from_pairs(n, pairs)
        inv = data.get("involution")
        if inv is None:
            raise SpecError("parse", "symmetric mode with 'arcs' needs an 'involution' (it is never inferred)")
        return Digraph.from_pairs(n, pairs, tuple(inv))
    except DigraphError as e:
        raise SpecError("range", str(e)) from None


def _build_weights(data: dict, m: int, preset: str | None) -> WeightAssignment | None:
    raw = data.get("weights")
    if preset is not None and preset not in PRESETS:
        raise SpecError("parse", f"unknown preset {preset!r}; expected one of {PRESETS}")
    if preset == "classic":
        return WeightAssignment.ones(m)
    if raw is None:
        if preset == "generalized-weighted":
            raise SpecError("weight", "preset 'generalized-weighted' needs explicit tau2 and upsilon2")
        return None
    if not isinstance(raw, list) or len(raw) != m:
        raise SpecError("weight", f"weights: expected a list of {m} per-arc entries")
    need = ("tau2", "upsilon2") if preset == "generalized-weighted" else WEIGHT_FIELDS
    maps = {f: [] for f in WEIGHT_FIELDS}
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise SpecError("parse", f"weights[{i}]: expected an object")
        for f in WEIGHT_FIELDS:
            if f in need:
                if f not in entry:
                    raise SpecError("weight", f"weights[{i}]: missing {f}")
                maps[f].append(_scalar(entry[f], f"weights[{i}].{f}"))
            else:
                maps[f].append(Scalar.one())
    return WeightAssignment(**maps)


def spec_from_dict(data: dict, preset: str | None = None, mode_override: str | None = None) -> GraphSpec:
    if not isinstance(data, dict):
        raise SpecError("parse", "spec root must be a JSON object")
    dg = _build_digraph(data, mode_override)
    labels = data.get("labels") or [f"a{i}" for i in range(dg.arc_count)]
    if len(labels) != dg.arc_count:
        raise SpecError("parse", "labels: one label per arc required")
    w = _build_weights(data, dg.arc_count, preset or data.get("preset"))
    fault = data.get("fault_injection")
    if fault is not None:
        if not (isinstance(fault, dict) and fault.get("field") in WEIGHT_FIELDS):
            raise SpecError("parse", "fault_injection: needs arc, field and value")
        a = _int(fault, "arc", "fault_injection")
        if not 0 <= a < dg.arc_count:
            raise SpecError("range", "fault_injection.arc out of range")
        fault = {"arc": a, "field": fault["field"], "value": _scalar(fault.get("value"), "fault_injection.value")}
    return GraphSpec(dg, w, tuple(labels), fault)


def load_spec(path, preset: str | None = None, mode_override: str | None = None) -> GraphSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SpecError("parse", f"cannot read {path}: {e.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError("parse", f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None
    return spec_from_dict(data, preset, mode_override)


def parse_spec(path, preset: str | None = None, mode_override: str | None = None):
    """Load a spec file and return ``(digraph, weights)``; weights must be present."""
    spec = load_spec(path, preset, mode_override)
    if spec.weights is None:
        raise SpecError("weight", "no weights given and no preset selected")
    return spec.digraph, spec.weights


def dump_spec(dg: Digraph, w: WeightAssignment | None = None, labels=None) -> dict:
    """Serialize to the graph-file schema; symmetric digraphs keep their explicit involution."""
    out = {
        "mode": dg.mode,
        "vertices": dg.vertex_count,
        "arcs": [{"tail": a.tail, "head": a.head} for a in dg.arcs],
    }
    if dg.is_symmetric:
        out["involution"] = list(dg.involution)
    if labels is not None:
        out["labels"] = list(labels)
    if w is not None:
        out["weights"] = [
            {f: scalar_str(getattr(w, f)[i]) for f in WEIGHT_FIELDS} for i in range(len(w))
        ]
    return out


def random_weights(m: int, seed: int, complex_weights: bool = False) -> WeightAssignment:
    return WeightAssignment.random(m, random.Random(seed), complex_weights)


def apply_fault(w: WeightAssignment, fault: dict) -> WeightAssignment:
    vals = list(getattr(w, fault["field"]))
    vals[fault["arc"]] = fault["value"]
    return w.replace(**{fault["field"]: tuple(vals)})


# report helpers -------------------------------------------------------------


def scalar_str(x: Scalar) -> str:
    return str(x)


def poly_coeffs(p: Polynomial) -> list[str]:
    return [str(c) for c in p.coeffs] or ["0"]


def series_coeffs(s: TruncatedSeries) -> list[str]:
    return [str(c) for c in s.coeffs]


def rational_str(r: RationalFunction) -> str:
    return str(r)


def matrix_strs(M: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in M.entries]
