"""Deterministic labeling constructors with verify-then-repair.

Direct constructions (powers of two, bipartite splits, shifted
arithmetic progressions) are proven injective and never need repair.
Labelings induced through graph operations follow the operand formulas
first; if vertex labels collide, the colliding vertices are rescaled
deterministically and every replacement is logged.  An outcome always
carries an injective vertex labeling; the classification of the raw
formula output is kept alongside as evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph, GraphError, contract_edge, corona, induced_subgraph, is_bipartite,
    join, line_graph, pair_id, product, rooted_product, subdivide_edge,
    total_graph, union,
)
from .intset import (
    DEFAULT_ELEMENT_BOUND, IntegerSet, integral_multiple, sumset,
)
from .labeling import (
    ClassificationReport, LabelingError, SetLabeling, classify,
)

__all__ = [
    "ConstructionOutcome", "NoConstruction", "RepairEntry", "ConstructionError",
    "canonical_iasi", "two_uniform_iasi", "weakly_uniform_iasi",
    "strongly_uniform_iasi", "induced_labeling", "corona_labeling",
    "rooted_labeling", "subdivision_labeling", "contraction_labeling",
    "minor_labeling", "line_graph_labeling", "total_graph_labeling",
    "homeomorphic_transfer",
]


class ConstructionError(ValueError):
    """Operands violate a construction precondition."""


@dataclass(frozen=True)
class RepairEntry:
    vertex: int
    original: IntegerSet
    replacement: IntegerSet
    reason: str


@dataclass(frozen=True)
class ConstructionOutcome:
    """labeling is always vertex-injective; formula_report classifies the
    raw construction before any repair (equal to report when untouched)."""

    labeling: SetLabeling
    repaired: bool
    repair_log: tuple[RepairEntry, ...]
    report: ClassificationReport
    formula_report: ClassificationReport
    note: str = ""

    def to_json(self) -> dict:
        from .labeling import labeling_to_json
        return {
            "constructed": True,
            "labeling": labeling_to_json(self.labeling),
            "repaired": self.repaired,
            "repairs": [
                {
                    "vertex": r.vertex,
                    "original": r.original.to_list(),
                    "replacement": r.replacement.to_list(),
                    "reason": r.reason,
                }
                for r in self.repair_log
            ],
            "report": self.report.to_json(),
            "formula_report": self.formula_report.to_json(),
            "note": self.note,
        }


@dataclass(frozen=True)
class NoConstruction:
    """Explicit refusal with the certificate that justifies it."""

    reason: str
    odd_cycle: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        return {
            "constructed": False,
            "reason": self.reason,
            "odd_cycle": list(self.odd_cycle) if self.odd_cycle else None,
        }


def _repair(labels: list[IntegerSet], bound: int) -> tuple[list[IntegerSet], list[RepairEntry]]:
    """Translate each later duplicate by vertex_id * P.

    P is the smallest power of two past every element in use, so each
    repaired vertex lands in its own disjoint range and one pass is
    enough.  Lowest colliding vertex keeps its label.
    """
    max_el = max(l.max_element for l in labels)
    scale = 1 << max_el.bit_length()
    first_seen: dict[IntegerSet, int] = {}
    out = list(labels)
    log: list[RepairEntry] = []
    for v, lab in enumerate(labels):
        if lab not in first_seen:
            first_seen[lab] = v
            continue
        new = IntegerSet((v * scale + x for x in lab.elements), bound=bound)
        log.append(
            RepairEntry(v, lab, new,
                        f"duplicate of vertex {first_seen[lab]}, rescaled by {v}*{scale}")
        )
        out[v] = new
    return out, log


def _finalize(graph: Graph, labels, bound: int, note: str = "") -> ConstructionOutcome:
    raw = SetLabeling(graph, labels)
    formula_report = classify(raw)
    if formula_report.is_iasl:
        return ConstructionOutcome(raw, False, (), formula_report, formula_report, note)
    fixed, log = _repair(list(raw.labels), bound)
    done = SetLabeling(graph, fixed)
    report = classify(done)
    if not report.is_iasl:
        raise AssertionError("repair failed to restore injectivity")
    return ConstructionOutcome(done, True, tuple(log), report, formula_report, note)


# ---------------------------------------------------------------------------
# direct constructions

def canonical_iasi(g: Graph, bound: int = DEFAULT_ELEMENT_BOUND) -> ConstructionOutcome:
    """Vertex i gets {2^i}; binary uniqueness makes both maps injective."""
    labels = [IntegerSet((1 << i,), bound=bound) for i in g.vertices()]
    out = _finalize(g, labels, bound, note="singleton powers of two")
    if out.repaired or not out.report.is_iasi:
        raise AssertionError("canonical construction must verify without repair")
    return out


def two_uniform_iasi(
    g: Graph, bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome | NoConstruction:
    """Singletons {2^i} on one side, {0, 2^i} on the other.

    Every edge label is {2^u, 2^u + 2^v}, so edges decode uniquely and
    all have size 2.  Refuses non-bipartite graphs with an odd cycle.
    """
    side = is_bipartite(g)
    if not side.bipartite:
        return NoConstruction("graph is not bipartite", side.odd_cycle)
    labels = []
    for v in g.vertices():
        if side.coloring[v] == 0:
            labels.append(IntegerSet((1 << v,), bound=bound))
        else:
            labels.append(IntegerSet((0, 1 << v), bound=bound))
    out = _finalize(g, labels, bound, note="bipartite singleton / {0, power} split")
    ok = out.report.is_iasi and (
        out.report.edge_uniform_k == 2 or out.report.vacuous_edges
    )
    if out.repaired or not ok:
        raise AssertionError("2-uniform construction must verify without repair")
    return out


def weakly_uniform_iasi(
    g: Graph, k: int, bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome | NoConstruction:
    """k-uniform with a singleton endpoint on every edge; needs k >= 2.

    One side gets singletons {i}, the other k-blocks starting at
    multiples of a stride wide enough that every edge label's start
    decodes the edge.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    side = is_bipartite(g)
    if not side.bipartite:
        return NoConstruction("graph is not bipartite", side.odd_cycle)
    part0 = [v for v in g.vertices() if side.coloring[v] == 0]
    part1 = [v for v in g.vertices() if side.coloring[v] == 1]
    stride = max(len(part0), k + 1)
    labels: list[IntegerSet | None] = [None] * g.vertex_count
    for i, v in enumerate(part0):
        labels[v] = IntegerSet((i,), bound=bound)
    for j, v in enumerate(part1):
        labels[v] = IntegerSet(range(j * stride, j * stride + k), bound=bound)
    out = _finalize(g, labels, bound, note=f"singleton / {k}-block split, stride {stride}")
    ok = (
        out.report.is_iasi
        and out.report.is_weak
        and (out.report.edge_uniform_k == k or out.report.vacuous_edges)
    )
    if out.repaired or not ok:
        raise AssertionError("weakly uniform construction must verify without repair")
    return out


def _primes_above(floor: int, count: int) -> list[int]:
    out = []
    x = max(floor, 1) + 1
    while len(out) < count:
        if all(x % p for p in range(2, int(x ** 0.5) + 1)):
            out.append(x)
        x += 1
    return out


def _shifted_progressions(
    vertices, lengths: dict[int, int], bound: int
) -> tuple[list[IntegerSet], str]:
    """Label v with M*2^v + {0, d_v, 2*d_v, ...} (own prime difference d_v).

    Difference sets are {d_v, 2*d_v, ...}; distinct primes above every
    length keep them pairwise disjoint, so adjacent products are full.
    The offsets put each edge label in its own range of width < M, so
    the smallest element decodes the edge.
    """
    n = len(lengths)
    if not n:
        return [], "no vertices"
    max_len = max(lengths.values())
    primes = dict(zip(vertices, _primes_above(max_len, n)))
    extent = 2 * (max_len - 1) * max(primes.values()) if max_len > 1 else 0
    scale = 1 << extent.bit_length() if extent else 1
    labels = []
    for v in vertices:
        base = scale * (1 << v)
        labels.append(
            IntegerSet((base + t * primes[v] for t in range(lengths[v])), bound=bound)
        )
    return labels, f"offset scale {scale}, prime differences"


def strongly_uniform_iasi(
    g: Graph, k: int, bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome | NoConstruction:
    """Every edge label has size |f(u)|*|f(v)| = k.

    Perfect square k = l*l: every vertex gets an l-term progression with
    its own prime difference (works on any graph).  Otherwise the graph
    must be bipartite: singletons on one side, k-term progressions on
    the other.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    root = round(k ** 0.5)
    if root * root == k:
        lengths = {v: root for v in g.vertices()}
        labels, how = _shifted_progressions(list(g.vertices()), lengths, bound)
        note = f"completely uniform branch: all labels size {root}, {how}"
    else:
        side = is_bipartite(g)
        if not side.bipartite:
            return NoConstruction(
                f"k={k} is not a perfect square and the graph is not bipartite",
                side.odd_cycle,
            )
        lengths = {
            v: 1 if side.coloring[v] == 0 else k for v in g.vertices()
        }
        labels, how = _shifted_progressions(list(g.vertices()), lengths, bound)
        note = f"bipartite branch: sizes 1 x {k}, {how}"
    out = _finalize(g, labels, bound, note=note)
    ok = (
        out.report.is_iasi
        and out.report.is_strong
        and (out.report.edge_uniform_k == k or out.report.vacuous_edges)
    )
    if out.repaired or not ok:
        raise AssertionError("strongly uniform construction must verify without repair")
    return out


# ---------------------------------------------------------------------------
# labelings induced through graph operations

def _require(f: SetLabeling | None, which: str) -> SetLabeling:
    if f is None:
        raise ConstructionError(f"{which} operand labeling is required")
    return f


def induced_labeling(
    kind: str,
    f1: SetLabeling,
    f2: SetLabeling | None = None,
    shared: dict[int, int] | None = None,
    bound: int = DEFAULT_ELEMENT_BOUND,
) -> ConstructionOutcome:
    """Operand labels pushed through union, join, complement, or a product.

    Union keeps operand labels (shared vertices must agree); join adds
    nothing beyond the disjoint layout; complement reuses the labels on
    the complemented graph; products label (u, v) with f1(u) + f2(v).
    """
    if kind == "complement":
        if f2 is not None:
            raise ConstructionError("complement takes a single labeling")
        from .graph import complement as _complement
        return _finalize(_complement(f1.graph), list(f1.labels), bound,
                         note="labels kept on complement")
    f2 = _require(f2, "second")
    if kind == "union":
        res = union(f1.graph, f2.graph, shared)
        for j, i in (shared or {}).items():
            if f2.labels[j] != f1.labels[i]:
                raise ConstructionError(
                    f"shared vertex {j}->{i} labeled {f2.labels[j]} vs {f1.labels[i]}"
                )
        labels: list[IntegerSet | None] = [None] * res.graph.vertex_count
        for i, t in enumerate(res.map_first):
            labels[t] = f1.labels[i]
        for j, t in enumerate(res.map_second):
            labels[t] = f2.labels[j]
        return _finalize(res.graph, labels, bound, note="union of operand labels")
    if kind == "join":
        graph = join(f1.graph, f2.graph)
        return _finalize(graph, list(f1.labels) + list(f2.labels), bound,
                         note="operand labels side by side")
    if kind in ("cartesian", "direct", "strong", "lexicographic"):
        graph = product(kind, f1.graph, f2.graph)
        n2 = f2.graph.vertex_count
        labels = [None] * graph.vertex_count
        for i in f1.graph.vertices():
            for j in f2.graph.vertices():
                labels[pair_id(i, j, n2)] = sumset(f1.labels[i], f2.labels[j], bound=bound)
        return _finalize(graph, labels, bound, note=f"{kind} product sums")
    raise ConstructionError(f"unknown operation {kind!r}")


def corona_labeling(
    f1: SetLabeling, f2: SetLabeling, bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome:
    """Copy i of the second operand is labeled i.f2 (1-based multiplier)."""
    graph = corona(f1.graph, f2.graph)
    n1, n2 = f1.graph.vertex_count, f2.graph.vertex_count
    labels = list(f1.labels) + [None] * (n1 * n2)
    for i in range(n1):
        for j in range(n2):
            labels[n1 + i * n2 + j] = integral_multiple(i + 1, f2.labels[j], bound=bound)
    return _finalize(graph, labels, bound, note="copy multiples 1..n")


def rooted_labeling(
    f1: SetLabeling, f2: SetLabeling, root: int, bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome:
    """Roots keep f1; copy i gets a distinct multiple of f2.

    Multipliers are tried in order 1, 2, 3, ... and any that collides
    with labels already placed is skipped, keeping the multiples
    literally distinct.  If skipping cannot work (say f2 labels {0}),
    the standard repair pass still restores injectivity at the end.
    """
    graph = rooted_product(f1.graph, f2.graph, root)
    n1, n2 = f1.graph.vertex_count, f2.graph.vertex_count
    others = [j for j in range(n2) if j != root]
    labels: list[IntegerSet | None] = list(f1.labels) + [None] * (n1 * (n2 - 1))
    taken = set(f1.labels)
    multiplier = 0
    for i in range(n1):
        chosen = None
        for _ in range(16 + 4 * n1):
            multiplier += 1
            try:
                cand = [integral_multiple(multiplier, f2.labels[j], bound=bound)
                        for j in others]
            except ValueError:
                break
            if len(set(cand)) == len(cand) and not taken.intersection(cand):
                chosen = cand
                break
        if chosen is None:
            # give up on skipping; the repair pass will fix duplicates
            chosen = [integral_multiple(max(multiplier, 1), f2.labels[j], bound=bound)
                      for j in others]
        taken.update(chosen)
        for r, j in enumerate(others):
            labels[n1 + i * (n2 - 1) + r] = chosen[r]
    return _finalize(graph, labels, bound, note="distinct copy multiples")


def subdivision_labeling(
    f: SetLabeling, edge: tuple[int, int], bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome:
    """The new degree-2 vertex takes the edge's sum set."""
    u, v = min(edge), max(edge)
    graph = subdivide_edge(f.graph, (u, v))
    labels = list(f.labels) + [sumset(f.labels[u], f.labels[v], bound=bound)]
    return _finalize(graph, labels, bound, note=f"new vertex gets label of edge ({u},{v})")


def contraction_labeling(
    f: SetLabeling, edge: tuple[int, int], bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome:
    """The merged vertex takes f(u) + f(v); everything else is carried over."""
    u, v = min(edge), max(edge)
    res = contract_edge(f.graph, (u, v))
    labels: list[IntegerSet | None] = [None] * res.graph.vertex_count
    for old in f.graph.vertices():
        labels[res.vertex_map[old]] = f.labels[old]
    labels[res.vertex_map[u]] = sumset(f.labels[u], f.labels[v], bound=bound)
    return _finalize(res.graph, labels, bound, note=f"merged vertex gets sum of ({u},{v})")


def minor_labeling(
    f: SetLabeling, script, bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome:
    """Apply a deletion/contraction script; labels restrict or merge.

    Steps are ("delete-vertex", v), ("delete-edge", (u, v)), or
    ("contract", (u, v)), each referring to the ids current at that
    point (deletions and contractions shift later ids down).
    """
    graph = f.graph
    labels = list(f.labels)
    for step, arg in script:
        if step == "delete-vertex":
            keep = [x for x in graph.vertices() if x != arg]
            res = induced_subgraph(graph, keep)
            labels = [labels[old] for old in res.kept]
            graph = res.graph
        elif step == "delete-edge":
            u, v = min(arg), max(arg)
            if (u, v) not in set(graph.edges):
                raise GraphError(f"edge ({u},{v}) not in graph")
            graph = Graph(graph.vertex_count,
                          tuple(e for e in graph.edges if e != (u, v)),
                          names=graph.names)
        elif step == "contract":
            u, v = min(arg), max(arg)
            res = contract_edge(graph, (u, v))
            new_labels: list[IntegerSet | None] = [None] * res.graph.vertex_count
            for old in graph.vertices():
                new_labels[res.vertex_map[old]] = labels[old]
            new_labels[res.vertex_map[u]] = sumset(labels[u], labels[v], bound=bound)
            labels = new_labels
            graph = res.graph
        else:
            raise ConstructionError(f"unknown minor step {step!r}")
    return _finalize(graph, labels, bound,
                     note="minor script applied (contractions merge by sum)")


def line_graph_labeling(
    f: SetLabeling, bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome:
    """Each line-graph vertex takes the label of the edge it stands for."""
    res = line_graph(f.graph)
    labels = [sumset(f.labels[u], f.labels[v], bound=bound) for u, v in res.vertex_edges]
    return _finalize(res.graph, labels, bound, note="edge labels as vertex labels")


def total_graph_labeling(
    f: SetLabeling, bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionOutcome:
    """Vertex part keeps f; edge part takes the edge labels."""
    res = total_graph(f.graph)
    labels = list(f.labels)
    labels += [sumset(f.labels[u], f.labels[v], bound=bound) for u, v in res.vertex_edges]
    return _finalize(res.graph, labels, bound, note="vertex labels plus edge labels")


def homeomorphic_transfer(
    f: SetLabeling,
    g_script,
    h: Graph,
    h_script,
    correspondence,
    bound: int = DEFAULT_ELEMENT_BOUND,
) -> ConstructionOutcome:
    """Carry a labeling across an isomorphism of subdivisions.

    g_script and h_script each list edges to subdivide in sequence
    (ids current at each step; the new vertex is appended).  The
    correspondence maps subdivided-f.graph vertices to subdivided-h
    vertices and must be an isomorphism.  Labels ride through it, then
    the h-side subdivisions are undone in reverse: each added degree-2
    vertex is removed, its label dropped, and the through edge restored.
    """
    work = f
    for edge in g_script:
        work = subdivision_labeling(work, edge, bound=bound).labeling
    h_expanded = h
    for edge in h_script:
        h_expanded = subdivide_edge(h_expanded, edge)

    corr = tuple(correspondence)
    n = work.graph.vertex_count
    if h_expanded.vertex_count != n or len(corr) != n or sorted(corr) != list(range(n)):
        raise ConstructionError("correspondence is not a bijection of the subdivisions")
    mapped = {(min(corr[u], corr[v]), max(corr[u], corr[v])) for u, v in work.graph.edges}
    if mapped != set(h_expanded.edges):
        raise ConstructionError("correspondence does not preserve adjacency")

    labels: list[IntegerSet | None] = [None] * n
    for v in range(n):
        labels[corr[v]] = work.labels[v]
    graph = h_expanded
    for _ in reversed(list(h_script)):
        w = graph.vertex_count - 1
        neigh = sorted(graph.adjacency[w])
        if len(neigh) != 2:
            raise ConstructionError(f"vertex {w} is not a subdivision vertex")
        a, b = neigh
        if graph.has_edge(a, b):
            raise ConstructionError(f"cannot reduce {w}: ({a},{b}) already present")
        edges = [e for e in graph.edges if w not in e] + [(a, b)]
        graph = Graph(w, edges)
        labels.pop()
    if graph != h:
        raise ConstructionError("undoing the subdivisions did not recover the target")
    return _finalize(h, labels, bound, note="transferred across subdivision isomorphism")
