"""Finite simple graphs and the operations labelings get pushed through.

Vertices are 0..n-1; edges are kept as a sorted tuple of (min, max)
pairs so iteration order is canonical everywhere.  Optional vertex
names record provenance through operations (product pairs, copy
indices, edge vertices) and are excluded from equality.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterator

from .graph6 import Graph6Error, decode_graph6, encode_graph6

__all__ = [
    "Graph", "GraphError", "DuplicateEdgeWarning", "Graph6Error",
    "build", "parse_graph6", "write_graph6",
    "complete_graph", "path_graph", "cycle_graph", "star_graph", "empty_graph",
    "is_bipartite", "BipartitenessResult",
    "complement", "union", "UnionResult", "join",
    "product", "PRODUCT_KINDS", "pair_id", "id_pair",
    "corona", "rooted_product",
    "line_graph", "LineGraphResult", "total_graph", "TotalGraphResult",
    "subdivide_edge", "contract_edge", "ContractionResult",
    "induced_subgraph", "SubgraphResult",
    "enumerate_graphs", "MAX_ENUMERATION_VERTICES", "to_dot",
]


class GraphError(ValueError):
    """Structurally invalid graph input."""


class DuplicateEdgeWarning(UserWarning):
    """Duplicate edges in input were collapsed."""


MAX_ENUMERATION_VERTICES = 6


@dataclass(frozen=True, init=False)
class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __init__(self, vertex_count: int, edges=(), names=None):
        if vertex_count < 0:
            raise GraphError(f"negative vertex count {vertex_count}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u},{v}) out of range for n={vertex_count}")
            canon.add((min(u, v), max(u, v)))
        if names is not None:
            names = tuple(names)
            if len(names) != vertex_count:
                raise GraphError("names length must equal vertex count")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "names", names)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neigh: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neigh[u].add(v)
            neigh[v].add(u)
        return tuple(frozenset(s) for s in neigh)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def name_of(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices() if not self.adjacency[v])

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            for w in self.adjacency[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count


def build(vertex_count: int, edges) -> Graph:
    """Validate user input and return a canonical Graph.

    Duplicate edges (either orientation) are collapsed with a warning.
    """
    seen = set()
    dupes = []
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            dupes.append(key)
        seen.add(key)
    if dupes:
        warnings.warn(
            f"collapsed duplicate edges: {sorted(set(dupes))}", DuplicateEdgeWarning,
            stacklevel=2,
        )
    return Graph(vertex_count, tuple(seen))


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string."""
    n, edges = decode_graph6(text)
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph canonically; parse_graph6(write_graph6(g)) == g."""
    return encode_graph6(g.vertex_count, g.edges)


# ---------------------------------------------------------------------------
# named graphs

def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


# ---------------------------------------------------------------------------
# bipartiteness

@dataclass(frozen=True)
class BipartitenessResult:
    bipartite: bool
    coloring: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None


def is_bipartite(g: Graph) -> BipartitenessResult:
    """2-color by BFS; on failure return an odd cycle as certificate.

    The cycle is a vertex sequence whose consecutive pairs, and the
    closing pair, are all edges; its length is odd.
    """
    color: list[int | None] = [None] * g.vertex_count
    parent: list[int] = [-1] * g.vertex_count
    for root in g.vertices():
        if color[root] is not None:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adjacency[v]):
                if color[w] is None:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartitenessResult(False, None, _odd_cycle(parent, v, w))
    return BipartitenessResult(True, tuple(color), None)


def _odd_cycle(parent: list[int], v: int, w: int) -> tuple[int, ...]:
    # walk both BFS paths up to the lowest common ancestor
    up_v = [v]
    while parent[up_v[-1]] != -1:
        up_v.append(parent[up_v[-1]])
    on_v_path = {x: i for i, x in enumerate(up_v)}
    up_w = [w]
    while up_w[-1] not in on_v_path:
        up_w.append(parent[up_w[-1]])
    lca_idx = on_v_path[up_w[-1]]
    cycle = list(reversed(up_v[: lca_idx + 1])) + up_w[:-1]
    return tuple(cycle)


# ---------------------------------------------------------------------------
# unary and binary operations

def complement(g: Graph) -> Graph:
    edges = tuple(p for p in combinations(range(g.vertex_count), 2) if p not in set(g.edges))
    return Graph(g.vertex_count, edges, names=g.names)


@dataclass(frozen=True)
class UnionResult:
    graph: Graph
    map_first: tuple[int, ...]
    map_second: tuple[int, ...]


def union(g1: Graph, g2: Graph, shared: dict[int, int] | None = None) -> UnionResult:
    """Union with an optional injective correspondence g2-vertex -> g1-vertex.

    First-operand vertices keep their ids; unshared second-operand
    vertices are appended in ascending order.
    """
    shared = dict(shared or {})
    for j, i in shared.items():
        if not (0 <= j < g2.vertex_count and 0 <= i < g1.vertex_count):
            raise GraphError(f"correspondence {j}->{i} out of range")
    if len(set(shared.values())) != len(shared):
        raise GraphError("correspondence must be injective")
    map1 = tuple(range(g1.vertex_count))
    map2 = []
    fresh = g1.vertex_count
    for j in range(g2.vertex_count):
        if j in shared:
            map2.append(shared[j])
        else:
            map2.append(fresh)
            fresh += 1
    edges = list(g1.edges) + [(map2[u], map2[v]) for u, v in g2.edges]
    names = None
    if g1.names or g2.names:
        names = [g1.name_of(i) for i in range(g1.vertex_count)]
        names += [g2.name_of(j) for j in range(g2.vertex_count) if j not in shared]
    return UnionResult(Graph(fresh, edges, names=names), map1, tuple(map2))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; second operand shifted by n1."""
    n1 = g1.vertex_count
    edges = list(g1.edges)
    edges += [(u + n1, v + n1) for u, v in g2.edges]
    edges += [(i, j + n1) for i in range(n1) for j in range(g2.vertex_count)]
    names = None
    if g1.names or g2.names:
        names = [g1.name_of(i) for i in range(n1)]
        names += [g2.name_of(j) for j in range(g2.vertex_count)]
    return Graph(n1 + g2.vertex_count, edges, names=names)


PRODUCT_KINDS = ("cartesian", "direct", "strong", "lexicographic")


def pair_id(i: int, j: int, n2: int) -> int:
    """Row-major id of product vertex (i, j)."""
    return i * n2 + j


def id_pair(t: int, n2: int) -> tuple[int, int]:
    return divmod(t, n2)


def product(kind: str, g1: Graph, g2: Graph) -> Graph:
    """Cartesian, direct (tensor), strong, or lexicographic product.

    Lexicographic uses the standard rule: (a,b)~(c,d) iff a~c, or a=c
    and b~d.  Vertex (i, j) gets id i*n2 + j.
    """
    if kind not in PRODUCT_KINDS:
        raise GraphError(f"unknown product kind {kind!r}")
    if g1.vertex_count == 0 or g2.vertex_count == 0:
        raise GraphError("product operands must be non-empty")
    n2 = g2.vertex_count
    edges = []
    for a in g1.vertices():
        for b in g2.vertices():
            for c in g1.vertices():
                for d in g2.vertices():
                    s, t = pair_id(a, b, n2), pair_id(c, d, n2)
                    if s >= t:
                        continue
                    adj1 = g1.has_edge(a, c)
                    adj2 = g2.has_edge(b, d)
                    if kind == "cartesian":
                        hit = (a == c and adj2) or (adj1 and b == d)
                    elif kind == "direct":
                        hit = adj1 and adj2
                    elif kind == "strong":
                        hit = (a == c and adj2) or (adj1 and b == d) or (adj1 and adj2)
                    else:
                        hit = adj1 or (a == c and adj2)
                    if hit:
                        edges.append((s, t))
    names = tuple(
        f"({g1.name_of(i)},{g2.name_of(j)})"
        for i in g1.vertices() for j in g2.vertices()
    )
    return Graph(g1.vertex_count * n2, edges, names=names)


def corona(g1: Graph, g2: Graph) -> Graph:
    """One copy of g2 per vertex of g1, that vertex joined to its copy.

    Copy i (1-based, matching the labeling multiplier) of vertex j gets
    id n1 + (i-1)*n2 + j.
    """
    if g1.vertex_count == 0:
        raise GraphError("corona first operand must be non-empty")
    n1, n2 = g1.vertex_count, g2.vertex_count
    edges = list(g1.edges)
    names = [g1.name_of(i) for i in range(n1)]
    for i in range(n1):
        base = n1 + i * n2
        edges += [(base + u, base + v) for u, v in g2.edges]
        edges += [(i, base + j) for j in range(n2)]
        names += [f"{i + 1}:{g2.name_of(j)}" for j in range(n2)]
    return Graph(n1 + n1 * n2, edges, names=names)


def rooted_product(g1: Graph, g2: Graph, root: int) -> Graph:
    """Attach copy i of g2 to vertex i of g1 by identifying the root.

    Vertex i of g1 doubles as the root of copy i; non-root vertex j of
    copy i gets id n1 + i*(n2-1) + rank(j) with ranks over the sorted
    non-root vertices of g2.
    """
    if not (0 <= root < g2.vertex_count):
        raise GraphError(f"root {root} out of range")
    n1, n2 = g1.vertex_count, g2.vertex_count
    others = [j for j in range(n2) if j != root]
    rank = {j: r for r, j in enumerate(others)}
    edges = list(g1.edges)
    names = [g1.name_of(i) for i in range(n1)]
    for i in range(n1):
        def local(j: int, i=i) -> int:
            return i if j == root else n1 + i * (n2 - 1) + rank[j]
        edges += [(local(u), local(v)) for u, v in g2.edges]
    for i in range(n1):
        names += [f"{i}/{g2.name_of(j)}" for j in others]
    return Graph(n1 + n1 * (n2 - 1), edges, names=names)


@dataclass(frozen=True)
class LineGraphResult:
    graph: Graph
    vertex_edges: tuple[tuple[int, int], ...]   # line-graph vertex k <-> this edge


def line_graph(g: Graph) -> LineGraphResult:
    """Vertices are edges of g; adjacency is sharing an endpoint."""
    base = g.edges
    edges = []
    for k, (u, v) in enumerate(base):
        for l in range(k + 1, len(base)):
            x, y = base[l]
            if u in (x, y) or v in (x, y):
                edges.append((k, l))
    names = tuple(f"{u}-{v}" for u, v in base)
    return LineGraphResult(Graph(len(base), edges, names=names), base)


@dataclass(frozen=True)
class TotalGraphResult:
    graph: Graph
    vertex_part: tuple[int, ...]               # ids carrying original vertices
    edge_part: tuple[int, ...]                 # ids carrying original edges
    vertex_edges: tuple[tuple[int, int], ...]  # edge behind each edge-part id


def total_graph(g: Graph) -> TotalGraphResult:
    """Vertices are V(g) + E(g); adjacency, edge adjacency, incidence."""
    n = g.vertex_count
    base = g.edges
    edges = list(g.edges)
    for k, (u, v) in enumerate(base):
        for l in range(k + 1, len(base)):
            x, y = base[l]
            if u in (x, y) or v in (x, y):
                edges.append((n + k, n + l))
    for k, (u, v) in enumerate(base):
        edges.append((u, n + k))
        edges.append((v, n + k))
    names = tuple(g.name_of(i) for i in range(n)) + tuple(f"{u}-{v}" for u, v in base)
    return TotalGraphResult(
        Graph(n + len(base), edges, names=names),
        tuple(range(n)),
        tuple(range(n, n + len(base))),
        base,
    )


def subdivide_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    """Replace edge uv by a path u-w-v; w is the new last vertex."""
    u, v = min(edge), max(edge)
    if (u, v) not in set(g.edges):
        raise GraphError(f"edge ({u},{v}) not in graph")
    w = g.vertex_count
    edges = [e for e in g.edges if e != (u, v)] + [(u, w), (v, w)]
    names = None
    if g.names:
        names = list(g.names) + [f"{u}-{v}"]
    return Graph(w + 1, edges, names=names)


@dataclass(frozen=True)
class ContractionResult:
    graph: Graph
    vertex_map: tuple[int, ...]   # old id -> new id; both endpoints map together


def contract_edge(g: Graph, edge: tuple[int, int]) -> ContractionResult:
    """Merge the endpoints of an edge; simple quotient, no loops or multiedges."""
    u, v = min(edge), max(edge)
    if (u, v) not in set(g.edges):
        raise GraphError(f"edge ({u},{v}) not in graph")
    vmap = []
    for x in g.vertices():
        if x == v:
            vmap.append(u)
        elif x > v:
            vmap.append(x - 1)
        else:
            vmap.append(x)
    edges = {
        (min(vmap[x], vmap[y]), max(vmap[x], vmap[y]))
        for x, y in g.edges
        if (x, y) != (u, v)
    }
    edges = {e for e in edges if e[0] != e[1]}
    return ContractionResult(Graph(g.vertex_count - 1, edges), tuple(vmap))


@dataclass(frozen=True)
class SubgraphResult:
    graph: Graph
    kept: tuple[int, ...]   # new id k <-> old id kept[k]


def induced_subgraph(g: Graph, vertices) -> SubgraphResult:
    """Subgraph induced by a vertex subset, relabeled to 0..k-1."""
    kept = tuple(sorted(set(vertices)))
    for v in kept:
        if not (0 <= v < g.vertex_count):
            raise GraphError(f"vertex {v} out of range")
    back = {old: new for new, old in enumerate(kept)}
    edges = [(back[u], back[v]) for u, v in g.edges if u in back and v in back]
    names = tuple(g.name_of(v) for v in kept) if g.names else None
    return SubgraphResult(Graph(len(kept), edges, names=names), kept)


# ---------------------------------------------------------------------------
# enumeration and export

def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    skip_isolated: bool = False,
    max_n: int = MAX_ENUMERATION_VERTICES,
) -> Iterator[Graph]:
    """All labeled graphs on n vertices, ascending by edge bitmask.

    Bit k of the mask is the k-th pair in lexicographic order.  The cap
    guards against runaway enumeration; larger corpora should come from
    a graph6 file instead.
    """
    if n > max_n:
        raise GraphError(f"n={n} exceeds enumeration cap {max_n}")
    slots = list(combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        g = Graph(n, tuple(slots[k] for k in range(len(slots)) if mask >> k & 1))
        if connected_only and not g.is_connected():
            continue
        if skip_isolated and g.isolated_vertices():
            continue
        yield g


def to_dot(g: Graph, labels=None) -> str:
    """DOT text listing every vertex (isolated ones included) and edge."""
    lines = ["graph G {"]
    for v in g.vertices():
        text = g.name_of(v)
        if labels is not None:
            text = f"{text} {labels[v]}"
        lines.append(f'  {v} [label="{text}"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
