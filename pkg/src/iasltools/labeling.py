"""Set-labelings of graphs and their classification.

A labeling assigns a non-empty integer set to every vertex; each edge
uv inherits the sum set f(u)+f(v).  classify() reports the injectivity
verdicts for the vertex map and the induced edge map independently,
uniformity data, and the weak/strong edge conditions, with a witness
for every false verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, parse_graph6, write_graph6
from .intset import IntegerSet, difference_set, sumset

__all__ = [
    "SetLabeling", "LabelingError", "EdgeRecord", "Violation",
    "ClassificationReport", "classify", "induced_edge_label",
    "weak_structure_check", "strong_structure_check", "ground_set",
    "labeling_to_json", "labeling_from_json",
]


class LabelingError(ValueError):
    """Labeling does not fit its graph or the requested edge."""


@dataclass(frozen=True, init=False)
class SetLabeling:
    """A graph together with one IntegerSet per vertex.

    Injectivity is not required here; it is a verdict, not a precondition.
    """

    graph: Graph
    labels: tuple[IntegerSet, ...]

    def __init__(self, graph: Graph, labels):
        labels = tuple(labels)
        if len(labels) != graph.vertex_count:
            raise LabelingError(
                f"{len(labels)} labels for {graph.vertex_count} vertices"
            )
        if not all(isinstance(l, IntegerSet) for l in labels):
            raise LabelingError("labels must be IntegerSet values")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "labels", labels)

    def label(self, v: int) -> IntegerSet:
        return self.labels[v]


def induced_edge_label(f: SetLabeling, u: int, v: int) -> IntegerSet:
    """Sum set carried by the edge uv."""
    if not f.graph.has_edge(u, v):
        raise LabelingError(f"({u},{v}) is not an edge")
    return sumset(f.labels[u], f.labels[v])


def ground_set(f: SetLabeling) -> tuple[int, ...]:
    """Union of all vertex labels, ascending."""
    out: set[int] = set()
    for lab in f.labels:
        out.update(lab.elements)
    return tuple(sorted(out))


@dataclass(frozen=True)
class EdgeRecord:
    u: int
    v: int
    label: IntegerSet
    size: int
    neglecting_number: int
    weak: bool
    strong: bool


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple
    note: str = ""


@dataclass(frozen=True)
class ClassificationReport:
    is_iasl: bool                      # vertex map injective
    is_iasi: bool                      # induced edge map injective
    is_weak: bool
    is_strong: bool
    edge_uniform_k: int | None
    vertex_uniform_l: int | None
    completely_uniform: tuple[int, int] | None
    vacuous_edges: bool
    per_edge: tuple[EdgeRecord, ...]
    violations: tuple[Violation, ...] = field(compare=False)

    def to_json(self) -> dict:
        return {
            "is_iasl": self.is_iasl,
            "is_iasi": self.is_iasi,
            "is_weak": self.is_weak,
            "is_strong": self.is_strong,
            "edge_uniform_k": self.edge_uniform_k,
            "vertex_uniform_l": self.vertex_uniform_l,
            "completely_uniform": list(self.completely_uniform)
            if self.completely_uniform else None,
            "vacuous_edges": self.vacuous_edges,
            "per_edge": [
                {
                    "u": r.u, "v": r.v, "label": r.label.to_list(),
                    "size": r.size, "neglecting_number": r.neglecting_number,
                    "weak": r.weak, "strong": r.strong,
                }
                for r in self.per_edge
            ],
            "violations": [
                {"kind": w.kind, "where": list(w.where), "note": w.note}
                for w in self.violations
            ],
        }


def classify(f: SetLabeling) -> ClassificationReport:
    """Full report over a labeling; every false verdict carries a witness.

    The two injectivity verdicts are independent: a labeling can have an
    injective edge map over duplicated vertex labels and vice versa.
    """
    g = f.graph
    violations: list[Violation] = []

    seen: dict[IntegerSet, int] = {}
    iasl = True
    for v in g.vertices():
        lab = f.labels[v]
        if lab in seen:
            iasl = False
            violations.append(
                Violation("vertex-label-duplicate", (seen[lab], v), f"both get {lab}")
            )
        else:
            seen[lab] = v

    records: list[EdgeRecord] = []
    edge_seen: dict[IntegerSet, tuple[int, int]] = {}
    iasi = True
    weak = True
    strong = True
    for u, v in g.edges:
        a, b = f.labels[u], f.labels[v]
        lab = sumset(a, b)
        size = len(lab)
        e_weak = size == max(len(a), len(b))
        e_strong = size == len(a) * len(b)
        records.append(
            EdgeRecord(u, v, lab, size, len(a) * len(b) - size, e_weak, e_strong)
        )
        if lab in edge_seen:
            if iasi:
                iasi = False
                violations.append(
                    Violation("edge-label-duplicate", (edge_seen[lab], (u, v)),
                              f"both get {lab}")
                )
        else:
            edge_seen[lab] = (u, v)
        if not e_weak and weak:
            weak = False
            violations.append(
                Violation("weak-failure", ((u, v),),
                          f"size {size} != max({len(a)},{len(b)})")
            )
        if not e_strong and strong:
            strong = False
            violations.append(
                Violation("strong-failure", ((u, v),),
                          f"size {size} != {len(a)}*{len(b)}")
            )

    vacuous = not g.edges
    sizes = {r.size for r in records}
    edge_k = sizes.pop() if len(sizes) == 1 else None
    vsizes = {len(l) for l in f.labels}
    vertex_l = vsizes.pop() if len(vsizes) == 1 else None
    completely = None
    if edge_k is not None and vertex_l is not None:
        completely = (edge_k, vertex_l)
    return ClassificationReport(
        is_iasl=iasl,
        is_iasi=iasi,
        is_weak=weak,
        is_strong=strong,
        edge_uniform_k=edge_k,
        vertex_uniform_l=vertex_l,
        completely_uniform=completely,
        vacuous_edges=vacuous,
        per_edge=tuple(records),
        violations=tuple(violations),
    )


def weak_structure_check(f: SetLabeling) -> tuple[bool, tuple[int, int] | None]:
    """Every edge has a singleton endpoint; witness is the first bad edge."""
    for u, v in f.graph.edges:
        if min(len(f.labels[u]), len(f.labels[v])) != 1:
            return False, (u, v)
    return True, None


def strong_structure_check(
    f: SetLabeling,
) -> tuple[bool, tuple[tuple[int, int], tuple[int, ...]] | None]:
    """Adjacent difference sets are disjoint; witness carries the overlap."""
    diffs = [difference_set(l) for l in f.labels]
    for u, v in f.graph.edges:
        shared = diffs[u] & diffs[v]
        if shared:
            return False, ((u, v), tuple(sorted(shared)))
    return True, None


# ---------------------------------------------------------------------------
# serialization

def labeling_to_json(f: SetLabeling) -> dict:
    return {
        "graph6": write_graph6(f.graph),
        "labels": [l.to_list() for l in f.labels],
    }


def labeling_from_json(obj) -> SetLabeling:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "graph6" not in obj or "labels" not in obj:
        raise LabelingError('labeling JSON needs "graph6" and "labels" keys')
    g = parse_graph6(obj["graph6"])
    labels = [IntegerSet(l) for l in obj["labels"]]
    return SetLabeling(g, labels)
