"""Complex files (JSON) and DOT export.

File format: {"vertices": n, "edges": [[u,v],...], "labels": {...}}.
Label keys are vertex indices; the reserved "generator" key inside the
label block records the spec string of a generated complex.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .core import MedianComplex, validate
from .errors import StructuralError, ValidationError

# qualitative palette, cycled over wall classes
PALETTE = (
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02",
    "#a6761d", "#666666", "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6",
)


def _label_to_json(label):
    return list(label) if isinstance(label, tuple) else label


def _label_from_json(label):
    return tuple(label) if isinstance(label, list) else label


def complex_to_json(cx: MedianComplex) -> str:
    obj = {"vertices": cx.vertex_count, "edges": [list(e) for e in cx.edges]}
    labels = {}
    if cx.labels:
        for v in sorted(cx.labels):
            labels[str(v)] = _label_to_json(cx.labels[v])
    if cx.generator is not None:
        labels["generator"] = cx.generator
    if labels:
        obj["labels"] = labels
    return json.dumps(obj, indent=2) + "\n"


def complex_from_json(text: str, *, run_validate: bool = True) -> MedianComplex:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise StructuralError('complex file needs "vertices" and "edges"')
    raw_labels = obj.get("labels") or {}
    if not isinstance(raw_labels, dict):
        raise StructuralError('"labels" must be a map')
    generator = raw_labels.get("generator")
    labels = {}
    for key, value in raw_labels.items():
        if key == "generator":
            continue
        try:
            v = int(key)
        except ValueError as exc:
            raise StructuralError(f"label key {key!r} is not a vertex index") from exc
        labels[v] = _label_from_json(value)
    cx = MedianComplex(obj["vertices"], [tuple(e) for e in obj["edges"]],
                       labels=labels or None, generator=generator)
    if run_validate:
        report = validate(cx)
        if not report.passed:
            raise ValidationError(report)
    return cx


def save_complex(cx: MedianComplex, path: Union[str, Path]) -> None:
    Path(path).write_text(complex_to_json(cx))


def load_complex(path: Union[str, Path], *, run_validate: bool = True) -> MedianComplex:
    return complex_from_json(Path(path).read_text(), run_validate=run_validate)


def to_dot(cx: MedianComplex, name: str = "mediancomplex") -> str:
    """DOT export: vertices labeled by coordinates (or index), edges colored
    by wall class."""
    edge_class = {}
    for h in cx.classes:
        for e in h.dual_edges:
            edge_class[e] = h.class_id
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(cx.vertex_count):
        label = str(cx.labels[v]) if cx.labels and v in cx.labels else str(v)
        lines.append(f'  v{v} [label="{label}"];')
    for u, v in cx.edges:
        color = PALETTE[edge_class[(u, v)] % len(PALETTE)]
        lines.append(f'  v{u} -- v{v} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
