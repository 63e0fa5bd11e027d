"""Labeled defining graphs of even Artin groups.

An even Artin group is presented by a finite simple graph: one generator per
vertex, and for each edge {u, v} with even label 2*l the relation
(uv)^l = (vu)^l.  A missing edge means no relation (label "infinity").

The vertex order fixed at construction is global and never changes: it
orients every simplex, boundary matrix and twisted differential built
downstream, so all outputs are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


class GraphFormatError(ValueError):
    """Raised when a graph input document cannot be parsed."""


class EvenGraph:
    """Finite simple graph with integer edge labels.

    Structural well-formedness (no loops, no duplicate edges, labels are
    integers >= 1) is enforced at construction.  Evenness of labels is a
    *semantic* requirement checked by :func:`validate_even`, so that invalid
    inputs can be reported as findings rather than exceptions.

    Instances are immutable by convention: all state is built here and never
    mutated afterwards, so values can be shared freely across threads.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str, int]] = ()):
        self.vertices: tuple[str, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        labels: dict[tuple[str, str], int] = {}
        for u, v, label in edges:
            if u not in self._index or v not in self._index:
                raise ValueError(f"edge {u!r}-{v!r} mentions an unknown vertex")
            if u == v:
                raise ValueError(f"loop at vertex {u!r}")
            if not isinstance(label, int) or label < 1:
                raise ValueError(f"edge {u!r}-{v!r}: label must be an integer >= 1")
            key = self.edge_key(u, v)
            if key in labels:
                raise ValueError(f"duplicate edge {u!r}-{v!r}")
            labels[key] = label
        self._labels = labels
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for (u, v) in labels:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: tuple(sorted(ws, key=self._index.__getitem__)) for v, ws in adj.items()}

    # -- basic queries ----------------------------------------------------

    def index(self, v: str) -> int:
        return self._index[v]

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def edge_key(self, u: str, v: str) -> tuple[str, str]:
        """Canonical (u, v) ordering of an unordered pair, by vertex order."""
        if self._index[u] <= self._index[v]:
            return (u, v)
        return (v, u)

    def has_edge(self, u: str, v: str) -> bool:
        if u not in self._index or v not in self._index or u == v:
            return False
        return self.edge_key(u, v) in self._labels

    def label(self, u: str, v: str) -> int:
        return self._labels[self.edge_key(u, v)]

    def half_label(self, u: str, v: str) -> int:
        """Half of an even edge label (the exponent in the Artin relation)."""
        label = self.label(u, v)
        if label % 2:
            raise ValueError(f"edge {u!r}-{v!r} has odd label {label}")
        return label // 2

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self._adj[v]

    def edges(self) -> tuple[tuple[str, str], ...]:
        """All edges as canonical pairs, sorted by vertex order."""
        return tuple(sorted(self._labels, key=lambda e: (self._index[e[0]], self._index[e[1]])))

    def edge_items(self) -> tuple[tuple[tuple[str, str], int], ...]:
        return tuple((e, self._labels[e]) for e in self.edges())

    def num_edges(self) -> int:
        return len(self._labels)

    def is_clique(self, vs: Iterable[str]) -> bool:
        vs = list(vs)
        for v in vs:
            if v not in self._index:
                return False
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def sort_vertices(self, vs: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(vs, key=self._index.__getitem__))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EvenGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(sorted(self._labels.items()))))

    def __repr__(self) -> str:
        es = ", ".join(f"{u}-{v}:{l}" for (u, v), l in self.edge_items())
        return f"EvenGraph([{', '.join(self.vertices)}]; {es})"


@dataclass(frozen=True)
class Finding:
    """One human-readable validation finding with the offending items."""

    message: str
    vertices: tuple[str, ...] = ()
    edges: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Finding, ...]


def _report(violations: list[Finding]) -> ValidationReport:
    return ValidationReport(ok=not violations, violations=tuple(violations))


def validate_even(g: EvenGraph) -> ValidationReport:
    """Check that every edge label is even and at least 2."""
    violations = []
    for (u, v), label in g.edge_items():
        if label % 2:
            violations.append(Finding(f"odd label {label} on edge {u}-{v}", edges=((u, v),)))
        elif label < 2:
            violations.append(Finding(f"label {label} < 2 on edge {u}-{v}", edges=((u, v),)))
    return _report(violations)


def validate_fc(g: EvenGraph) -> ValidationReport:
    """Check the FC condition: no triangle carries two labels bigger than 2.

    Every clique then generates a direct product of dihedral Artin groups
    (one per label > 2 edge, which necessarily form a matching inside the
    clique) and infinite cyclic factors, hence a finite-type subgroup.
    The check is local to triangles, which suffices: a clique violates the
    matching property iff two of its label > 2 edges share a triangle.
    """
    violations = []
    n = len(g.vertices)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                u, v, w = g.vertices[i], g.vertices[j], g.vertices[k]
                if not (g.has_edge(u, v) and g.has_edge(u, w) and g.has_edge(v, w)):
                    continue
                big = [e for e in ((u, v), (u, w), (v, w)) if g.label(*e) > 2]
                if len(big) >= 2:
                    violations.append(Finding(
                        f"triangle {u},{v},{w} carries {len(big)} labels > 2",
                        vertices=(u, v, w),
                        edges=tuple(big),
                    ))
    return _report(violations)


def induced_subgraph(g: EvenGraph, keep_vertices: Iterable[str],
                     drop_edges: Iterable[tuple[str, str]] = ()) -> EvenGraph:
    """Induced subgraph on ``keep_vertices`` minus the open ``drop_edges``.

    Dropping an edge keeps both endpoints; the inherited vertex order is the
    ambient one restricted to the kept vertices.
    """
    keep = set(keep_vertices)
    for v in keep:
        if not g.has_vertex(v):
            raise ValueError(f"unknown vertex {v!r}")
    dropped = set()
    for (u, v) in drop_edges:
        if not g.has_edge(u, v):
            raise ValueError(f"unknown edge {u!r}-{v!r}")
        dropped.add(g.edge_key(u, v))
    vs = [v for v in g.vertices if v in keep]
    es = [(u, v, label) for (u, v), label in g.edge_items()
          if u in keep and v in keep and (u, v) not in dropped]
    return EvenGraph(vs, es)


def is_subgraph(g1: EvenGraph, g2: EvenGraph) -> bool:
    """True when g1 is contained in g2 vertex- and edge-wise with equal labels."""
    for v in g1.vertices:
        if not g2.has_vertex(v):
            return False
    for (u, v), label in g1.edge_items():
        if not g2.has_edge(u, v) or g2.label(u, v) != label:
            return False
    return True


def is_connected(g: EvenGraph) -> bool:
    """Graph connectivity; the empty graph counts as disconnected."""
    if not g.vertices:
        return False
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def describe_graph(g: EvenGraph) -> str:
    """One-line deterministic rendering used in reports and witnesses."""
    if not g.vertices:
        return "empty graph"
    vs = ",".join(g.vertices)
    if not g.num_edges():
        return f"vertices {vs}; no edges"
    es = " ".join(f"{u}-{v}:{l}" for (u, v), l in g.edge_items())
    return f"vertices {vs}; edges {es}"


def graph_from_dict(doc: Mapping) -> EvenGraph:
    """Parse the JSON graph document ``{"vertices": [...], "edges": [...]}``.

    Unlike the permissive constructor, parsing rejects odd or sub-2 labels
    outright: input files must already describe an even graph.
    """
    if not isinstance(doc, Mapping):
        raise GraphFormatError("graph document must be an object")
    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphFormatError('"vertices" must be a list of strings')
    edges = []
    for entry in doc.get("edges", []):
        if not isinstance(entry, Mapping) or not {"u", "v", "label"} <= set(entry):
            raise GraphFormatError('each edge needs fields "u", "v", "label"')
        u, v, label = entry["u"], entry["v"], entry["label"]
        if not isinstance(label, int) or label < 2 or label % 2:
            raise GraphFormatError(f"edge {u}-{v}: label must be an even integer >= 2, got {label!r}")
        edges.append((u, v, label))
    try:
        return EvenGraph(vertices, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def graph_to_dict(g: EvenGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"u": u, "v": v, "label": label} for (u, v), label in g.edge_items()],
    }
