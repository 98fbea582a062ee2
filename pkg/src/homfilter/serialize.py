"""JSON and DOT serialization for colored graphs and quantum graphs.

Graph JSON::

    {"colors": [0, 1], "vertices": [{"id": 0, "color": 0}, ...], "edges": [[0, 1], ...]}

Vertices may carry an optional ``"label"``. Quantum graphs store coefficients
as ``"num/den"`` strings next to a list of graph objects, optionally with a
``"provenance"`` header.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .graph import ColoredGraph
from .quantum import QuantumGraph


def _label_to_json(x: Any) -> Any:
    if isinstance(x, tuple):
        return [_label_to_json(y) for y in x]
    return x


def _label_from_json(x: Any) -> Any:
    if isinstance(x, list):
        return tuple(_label_from_json(y) for y in x)
    return x


def graph_to_dict(G: ColoredGraph, with_labels: bool = True) -> dict:
    vertices = []
    for v, c in enumerate(G.vertex_colors):
        entry: dict[str, Any] = {"id": v, "color": c}
        if with_labels and G.labels is not None:
            entry["label"] = _label_to_json(G.labels[v])
        vertices.append(entry)
    return {
        "colors": list(G.color_set),
        "vertices": vertices,
        "edges": [list(e) for e in G.edge_list],
    }


def graph_from_dict(d: dict) -> ColoredGraph:
    try:
        verts = sorted(d["vertices"], key=lambda x: x["id"])
        ids = [x["id"] for x in verts]
        if ids != list(range(len(ids))):
            raise ValueError("vertex ids must be 0..n-1")
        colors = tuple(int(x["color"]) for x in verts)
        labels = None
        if verts and all("label" in x for x in verts):
            labels = tuple(_label_from_json(x["label"]) for x in verts)
        color_set = tuple(d.get("colors", sorted(set(colors))))
        edges = [tuple(e) for e in d.get("edges", [])]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    if any(len(e) != 2 for e in edges):
        raise ValueError("edges must be pairs")
    return ColoredGraph.from_edges(len(verts), edges, colors=colors, color_set=color_set, labels=labels)


def quantum_to_dict(Q: QuantumGraph, provenance: dict | None = None) -> dict:
    out: dict[str, Any] = {}
    if provenance:
        out["provenance"] = provenance
    out["coefficients"] = [fraction_str(c) for c in Q.coefficients]
    out["constituents"] = [graph_to_dict(g) for g in Q.constituents]
    return out


def quantum_from_dict(d: dict) -> QuantumGraph:
    coefs = [Fraction(c) for c in d["coefficients"]]
    graphs = [graph_from_dict(g) for g in d["constituents"]]
    if len(coefs) != len(graphs):
        raise ValueError("coefficient and constituent counts differ")
    return QuantumGraph(tuple(zip(graphs, coefs)))


def fraction_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def load_json(path: str | Path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def load_graph(path: str | Path) -> ColoredGraph:
    return graph_from_dict(load_json(path))


def load_quantum(path: str | Path) -> QuantumGraph:
    return quantum_from_dict(load_json(path))


def save_graph(G: ColoredGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(graph_to_dict(G)) + "\n")


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------

_PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
]


def _dot_label(G: ColoredGraph, v: int) -> str:
    if G.labels is None:
        return str(v)
    lab = G.labels[v]
    text = "".join(map(str, lab)) if isinstance(lab, tuple) else str(lab)
    return text.replace('"', "'")


def graph_to_dot(G: ColoredGraph, name: str = "G", clusters: bool = True) -> str:
    """DOT source with one cluster per color class."""
    lines = [f"graph {name} {{", "  node [style=filled, fontsize=10];"]
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(G.vertex_colors):
        by_color.setdefault(c, []).append(v)
    for c in sorted(by_color):
        fill = _PALETTE[c % len(_PALETTE)]
        indent = "  "
        if clusters:
            lines.append(f"  subgraph cluster_{c} {{")
            lines.append(f'    label="color {c}";')
            indent = "    "
        for v in by_color[c]:
            lines.append(f'{indent}{v} [label="{_dot_label(G, v)}", fillcolor="{fill}", color="{c}"];')
        if clusters:
            lines.append("  }")
    for u, v in G.edge_list:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quantum_to_dot(Q: QuantumGraph) -> str:
    """Each constituent as its own ``graph`` block, titled by its coefficient."""
    blocks = []
    for i, (g, c) in enumerate(Q.terms):
        src = graph_to_dot(g, name=f"constituent_{i}")
        src = src.replace("{\n", f'{{\n  label="{fraction_str(c)}";\n', 1)
        blocks.append(src)
    return "".join(blocks)
