"""Exhaustive checks of the claims this package is built around.

Every registered check verifies one claim over an explicit finite
domain and reports pass, counterexample, or inconclusive.  Verdicts are
scoped to the domain in the description; a pass never claims more.
Equivalences are checked in both directions: the constructive side
builds and verifies a witness, the nonexistence side exhausts a bounded
label space.  Counterexample records are self-contained, so they can be
re-verified with the arithmetic and classification primitives alone.

The identity checks accept an injectable sum-set function so tests can
corrupt the arithmetic and watch the check catch it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product as iproduct

from .construct import (
    NoConstruction, canonical_iasi, line_graph_labeling, strongly_uniform_iasi,
    total_graph_labeling, two_uniform_iasi, weakly_uniform_iasi,
)
from .graph import (
    Graph, complete_graph, cycle_graph, enumerate_graphs, induced_subgraph,
    is_bipartite, path_graph, star_graph, write_graph6,
)
from .intset import IntegerSet, compatibility_table, difference_set, sumset
from .labeling import (
    SetLabeling, classify, labeling_to_json, strong_structure_check,
    weak_structure_check,
)
from .search import SearchConfig, check_binomial_bound, find_k_uniform, min_ground_set_size

__all__ = ["Corpus", "TheoremCheck", "CHECK_IDS", "run_check", "run_suite"]


@dataclass(frozen=True)
class Corpus:
    """Domain overrides; fields left None fall back to per-check defaults."""

    graphs: tuple[Graph, ...] | None = None
    max_vertices: int | None = None
    max_element: int | None = None
    max_label_size: int | None = None
    ks: tuple[int, ...] | None = None


@dataclass
class TheoremCheck:
    check_id: str
    corpus: str
    config: SearchConfig
    verdict: str                 # pass | counterexample | inconclusive
    reason: str = ""
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "check": self.check_id,
            "corpus": self.corpus,
            "config": self.config.to_json(),
            "verdict": self.verdict,
            "reason": self.reason,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }


def _graph_corpus(corpus: Corpus | None, default_max_n: int, connected: bool):
    if corpus and corpus.graphs is not None:
        return list(corpus.graphs), f"{len(corpus.graphs)} supplied graphs"
    max_n = corpus.max_vertices if corpus and corpus.max_vertices else default_max_n
    out = []
    for n in range(max_n + 1):
        out.extend(enumerate_graphs(n, connected_only=connected, max_n=max(max_n, 6)))
    kind = "connected labeled graphs" if connected else "labeled graphs"
    return out, f"all {kind} on up to {max_n} vertices"


def _subsets(max_element: int) -> list[tuple[int, ...]]:
    return [
        tuple(e for e in range(max_element + 1) if mask >> e & 1)
        for mask in range(1, 1 << (max_element + 1))
    ]


def _sums_of(a, b, sumset_fn):
    if sumset_fn is None:
        return frozenset(x + y for x in a for y in b)
    return frozenset(sumset_fn(IntegerSet(a), IntegerSet(b)).elements)


def _fail(check: TheoremCheck, record: dict, cap: int = 5) -> None:
    check.verdict = "counterexample"
    if len(check.counterexamples) < cap:
        check.counterexamples.append(record)


def _empty(check: TheoremCheck) -> TheoremCheck:
    check.verdict = "inconclusive"
    check.reason = "empty domain"
    return check


# ---------------------------------------------------------------------------
# existence and heredity

def _check_iasl_existence(corpus, config, sumset_fn):
    graphs, desc = _graph_corpus(corpus, 4, connected=False)
    check = TheoremCheck("iasl-existence", desc, config, "pass")
    if not graphs:
        return _empty(check)
    plain = 0
    for g in graphs:
        out = canonical_iasi(g)
        if out.repaired or not out.report.is_iasl:
            _fail(check, {"graph6": write_graph6(g), "repaired": out.repaired})
        if not g.isolated_vertices():
            plain += 1
    check.details = {"graphs": len(graphs), "without_isolated_vertices": plain}
    return check


def _check_iasi_existence(corpus, config, sumset_fn):
    graphs, desc = _graph_corpus(corpus, 4, connected=False)
    check = TheoremCheck("iasi-existence", desc, config, "pass")
    if not graphs:
        return _empty(check)
    for g in graphs:
        out = canonical_iasi(g)
        if out.repaired or not (out.report.is_iasl and out.report.is_iasi):
            _fail(check, {"graph6": write_graph6(g), "repaired": out.repaired})
    check.details = {"graphs": len(graphs)}
    return check


def _sample_labelings(g: Graph):
    """A small deterministic family of set-indexers to restrict."""
    outs = [canonical_iasi(g).labeling]
    two = two_uniform_iasi(g)
    if not isinstance(two, NoConstruction):
        outs.append(two.labeling)
    outs.append(strongly_uniform_iasi(g, 4).labeling)
    return outs


def _check_heredity(corpus, config, sumset_fn):
    graphs, desc = _graph_corpus(corpus, 4, connected=False)
    check = TheoremCheck(
        "subgraph-heredity", f"{desc}, several set-indexers each, all vertex subsets",
        config, "pass",
    )
    if not graphs:
        return _empty(check)
    cases = 0
    for g in graphs:
        for f in _sample_labelings(g):
            base = classify(f)
            if not (base.is_iasl and base.is_iasi):
                continue
            for mask in range(1, 1 << g.vertex_count):
                keep = [v for v in g.vertices() if mask >> v & 1]
                sub = induced_subgraph(g, keep)
                rep = classify(SetLabeling(sub.graph, [f.labels[v] for v in sub.kept]))
                cases += 1
                if not (rep.is_iasl and rep.is_iasi):
                    _fail(check, {
                        "graph6": write_graph6(g),
                        "labeling": labeling_to_json(f),
                        "subset": keep,
                    })
    check.details = {"restrictions_checked": cases}
    return check


def _check_ground_set_lower_bound(corpus, config, sumset_fn):
    graphs, desc = _graph_corpus(corpus, 4, connected=True)
    check = TheoremCheck("ground-set-lower-bound", desc, config, "pass")
    if not graphs:
        return _empty(check)
    for g in graphs:
        size, cert = min_ground_set_size(g, config)
        if cert.kind == "budget_exceeded":
            check.verdict = "inconclusive"
            check.reason = "budget"
            return check
        lower = g.vertex_count.bit_length()
        if size is None or size < lower:
            _fail(check, {
                "graph6": write_graph6(g), "size": size, "lower_bound": lower,
                "certificate": cert.to_json(),
            })
    check.details = {"graphs": len(graphs)}
    return check


def _check_binomial(corpus, config, sumset_fn):
    graphs, desc = _graph_corpus(corpus, 4, connected=True)
    check = TheoremCheck(
        "uniform-ground-set-binomial",
        f"{desc}, uniform set-indexers from the direct constructions",
        config, "pass",
    )
    if not graphs:
        return _empty(check)
    cases = 0
    for g in graphs:
        if not g.vertex_count:
            continue
        for f in (canonical_iasi(g).labeling, strongly_uniform_iasi(g, 4).labeling):
            res = check_binomial_bound(g, f)
            cases += 1
            if not res.holds:
                _fail(check, {
                    "graph6": write_graph6(g),
                    "labeling": labeling_to_json(f),
                    "result": res.to_json(),
                })
    check.details = {"witnesses_checked": cases}
    return check


# ---------------------------------------------------------------------------
# sum-set laws

def _check_edge_size_bounds(corpus, config, sumset_fn):
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 8
    subsets = _subsets(max_el)
    check = TheoremCheck(
        "edge-size-bounds",
        f"all ordered pairs of non-empty subsets of {{0..{max_el}}}",
        config, "pass",
    )
    for a in subsets:
        for b in subsets:
            size = len(_sums_of(a, b, sumset_fn))
            if not (max(len(a), len(b)) <= size <= len(a) * len(b)):
                _fail(check, {"first": list(a), "second": list(b), "size": size})
    check.details = {"pairs": len(subsets) ** 2}
    return check


def _check_size_product_minus_neglect(corpus, config, sumset_fn):
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 8
    subsets = _subsets(max_el)
    check = TheoremCheck(
        "edge-size-product-minus-neglect",
        f"all ordered pairs of non-empty subsets of {{0..{max_el}}}, "
        "neglecting number from the class partition",
        config, "pass",
    )
    top = 2 * max_el + 1
    for a in subsets:
        for b in subsets:
            counts = [0] * top
            for x in a:
                for y in b:
                    counts[x + y] += 1
            classes = sum(1 for c in counts if c)
            r = len(a) * len(b) - classes
            size = len(_sums_of(a, b, sumset_fn))
            if size != len(a) * len(b) - r:
                _fail(check, {
                    "first": list(a), "second": list(b),
                    "size": size, "neglecting_number": r,
                })
    check.details = {"pairs": len(subsets) ** 2}
    return check


def _check_saturated_class(corpus, config, sumset_fn):
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 5
    subsets = _subsets(max_el)
    check = TheoremCheck(
        "saturated-class-size",
        f"compatibility tables for all pairs of non-empty subsets of {{0..{max_el}}}",
        config, "pass",
    )
    for a in subsets:
        for b in subsets:
            sa, sb = IntegerSet(a), IntegerSet(b)
            table = compatibility_table(sa, sb)
            floor = min(len(a), len(b))
            total = sum(len(pairs) for _, pairs in table.classes)
            ok = (
                table.max_class_size <= floor
                and total == len(a) * len(b)
                and table.index == len(sumset(sa, sb))
                and all(
                    (len(pairs) == floor) == (s in table.saturated_sums)
                    for s, pairs in table.classes
                )
            )
            if not ok:
                _fail(check, {"first": list(a), "second": list(b),
                              "index": table.index, "max_class": table.max_class_size})
    check.details = {"pairs": len(subsets) ** 2}
    return check


def _check_max_sumset_iff_disjoint(corpus, config, sumset_fn):
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 8
    subsets = _subsets(max_el)
    diffs = [difference_set(IntegerSet(s)) for s in subsets]
    check = TheoremCheck(
        "max-sumset-iff-disjoint-differences",
        f"all ordered pairs of non-empty subsets of {{0..{max_el}}}",
        config, "pass",
    )
    for i, a in enumerate(subsets):
        for j, b in enumerate(subsets):
            full = len(_sums_of(a, b, sumset_fn)) == len(a) * len(b)
            disjoint = not (diffs[i] & diffs[j])
            if full != disjoint:
                _fail(check, {
                    "first": list(a), "second": list(b),
                    "full_product": full, "disjoint_differences": disjoint,
                })
    check.details = {"pairs": len(subsets) ** 2}
    return check


def _check_edge_size_is_class_count(corpus, config, sumset_fn):
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 5
    subsets = _subsets(max_el)
    check = TheoremCheck(
        "edge-size-equals-class-count",
        f"all pairs of non-empty subsets of {{0..{max_el}}}",
        config, "pass",
    )
    for a in subsets:
        for b in subsets:
            sa, sb = IntegerSet(a), IntegerSet(b)
            if len(sumset(sa, sb)) != compatibility_table(sa, sb).index:
                _fail(check, {"first": list(a), "second": list(b)})
    # the additive variant |A|+|B| is not an identity; record why it is rejected
    a, b = IntegerSet((0, 1)), IntegerSet((0, 1))
    check.details = {
        "pairs": len(subsets) ** 2,
        "additive_variant_rejected": {
            "first": [0, 1], "second": [0, 1],
            "size": len(sumset(a, b)),
            "cardinality_sum": len(a) + len(b),
        },
    }
    return check


# ---------------------------------------------------------------------------
# edge-size relations on shared vertices

def _ratio_condition(m, ni, nj, ri, rj):
    if ni == nj:
        return ri == rj
    return m * (ni - nj) == ri - rj


def _check_adjacent_edge_ratio(corpus, config, sumset_fn):
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 4
    max_size = corpus.max_label_size if corpus and corpus.max_label_size else 3
    labels = [s for s in _subsets(max_el) if len(s) <= max_size]
    check = TheoremCheck(
        "adjacent-edge-ratio",
        f"two edges at a shared vertex, labels over subsets of {{0..{max_el}}} "
        f"of size <= {max_size}",
        config, "pass",
    )
    degenerate = 0
    for mid in labels:
        m = len(mid)
        for a in labels:
            sa = len(_sums_of(mid, a, None))
            ra = m * len(a) - sa
            for b in labels:
                sb = len(_sums_of(mid, b, None))
                rb = m * len(b) - sb
                if len(a) == len(b):
                    degenerate += 1
                equal = sa == sb
                if equal != _ratio_condition(m, len(a), len(b), ra, rb):
                    _fail(check, {
                        "shared": list(mid), "first": list(a), "second": list(b),
                        "sizes": [sa, sb], "neglects": [ra, rb],
                    })
    check.details = {
        "triples": len(labels) ** 3,
        "equal-cardinality pairs routed to the equal-neglect variant": degenerate,
    }
    return check


_RATIO_GRAPHS = None


def _ratio_graphs():
    global _RATIO_GRAPHS
    if _RATIO_GRAPHS is None:
        _RATIO_GRAPHS = (
            path_graph(3), path_graph(4), star_graph(3), complete_graph(3),
            cycle_graph(4),
        )
    return _RATIO_GRAPHS


def _adjacent_edge_pairs(g: Graph):
    """(shared vertex, other endpoint, other endpoint) per adjacent pair."""
    out = []
    edges = g.edges
    for i, (u, v) in enumerate(edges):
        for x, y in edges[i + 1:]:
            shared = {u, v} & {x, y}
            if shared:
                s = shared.pop()
                a = u if v == s else v
                b = x if y == s else y
                out.append((s, a, b))
    return out


def _check_uniform_ratio_condition(corpus, config, sumset_fn):
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 4
    max_size = corpus.max_label_size if corpus and corpus.max_label_size else 2
    labels = [s for s in _subsets(max_el) if len(s) <= max_size]
    graphs = list(corpus.graphs) if corpus and corpus.graphs is not None else list(_ratio_graphs())
    check = TheoremCheck(
        "uniform-iasl-ratio-condition",
        f"connected test graphs, all labelings over subsets of {{0..{max_el}}} "
        f"of size <= {max_size}",
        config, "pass",
    )
    if not graphs:
        return _empty(check)
    nlab = len(labels)
    sizes = [[len(_sums_of(a, b, None)) for b in labels] for a in labels]
    cases = 0
    for g in graphs:
        pairs = _adjacent_edge_pairs(g)
        edges = g.edges
        for combo in iproduct(range(nlab), repeat=g.vertex_count):
            cases += 1
            esizes = [sizes[combo[u]][combo[v]] for u, v in edges]
            uniform = len(set(esizes)) <= 1
            holds = True
            for s, a, b in pairs:
                m = len(labels[combo[s]])
                na, nb = len(labels[combo[a]]), len(labels[combo[b]])
                sa, sb = sizes[combo[s]][combo[a]], sizes[combo[s]][combo[b]]
                if not _ratio_condition(m, na, nb, m * na - sa, m * nb - sb):
                    holds = False
                    break
            if uniform != holds:
                _fail(check, {
                    "graph6": write_graph6(g),
                    "labels": [list(labels[i]) for i in combo],
                    "uniform": uniform, "condition": holds,
                })
    check.details = {"labelings": cases}
    return check


def _check_uniform_equal_neglect(corpus, config, sumset_fn):
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 4
    graphs = list(corpus.graphs) if corpus and corpus.graphs is not None else list(_ratio_graphs())
    check = TheoremCheck(
        "uniform-vertices-equal-neglect",
        f"connected test graphs, equal-size labelings over subsets of {{0..{max_el}}}",
        config, "pass",
    )
    if not graphs:
        return _empty(check)
    cases = 0
    for l in (1, 2):
        labels = [s for s in _subsets(max_el) if len(s) == l]
        nlab = len(labels)
        sizes = [[len(_sums_of(a, b, None)) for b in labels] for a in labels]
        for g in graphs:
            edges = g.edges
            for combo in iproduct(range(nlab), repeat=g.vertex_count):
                cases += 1
                esizes = [sizes[combo[u]][combo[v]] for u, v in edges]
                neglects = [l * l - s for s in esizes]
                uniform = len(set(esizes)) <= 1
                same_neglect = len(set(neglects)) <= 1
                if uniform != same_neglect:
                    _fail(check, {
                        "graph6": write_graph6(g),
                        "labels": [list(labels[i]) for i in combo],
                    })
    check.details = {"labelings": cases}
    return check


# ---------------------------------------------------------------------------
# weak / strong structure

def _weak_strong_engine(check, corpus, lhs_table, rhs_table, lhs_fn, rhs_fn):
    """Exhaustive per-labeling comparison, classify cross-checked on a stride."""
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 4
    max_size = corpus.max_label_size if corpus and corpus.max_label_size else 2
    labels = [s for s in _subsets(max_el) if len(s) <= max_size]
    if corpus and corpus.graphs is not None:
        graphs = list(corpus.graphs)
        check.corpus = f"{len(graphs)} supplied graphs, "
    else:
        graphs = [
            g for n in range(5) for g in enumerate_graphs(n) if g.edge_count <= 4
        ]
        check.corpus = "graphs with <= 4 vertices and <= 4 edges, "
    check.corpus += (
        f"all labelings over subsets of {{0..{max_el}}} of size <= {max_size}"
    )
    if not graphs:
        return _empty(check)
    nlab = len(labels)
    lhs = [[lhs_table(a, b) for b in labels] for a in labels]
    rhs = [[rhs_table(a, b) for b in labels] for a in labels]
    isets = [IntegerSet(s) for s in labels]
    cases = 0
    cross = 0
    for g in graphs:
        edges = g.edges
        for combo in iproduct(range(nlab), repeat=g.vertex_count):
            cases += 1
            left = all(lhs[combo[u]][combo[v]] for u, v in edges)
            right = all(rhs[combo[u]][combo[v]] for u, v in edges)
            if left != right:
                _fail(check, {
                    "graph6": write_graph6(g),
                    "labels": [list(labels[i]) for i in combo],
                    "classify_side": left, "structure_side": right,
                })
            if cases % 199 == 0:
                f = SetLabeling(g, [isets[i] for i in combo])
                if lhs_fn(f) != left or rhs_fn(f)[0] != right:
                    _fail(check, {
                        "graph6": write_graph6(g),
                        "labels": [list(labels[i]) for i in combo],
                        "note": "table path disagrees with classify path",
                    })
                cross += 1
    check.details = {"labelings": cases, "classify_crosschecks": cross}
    return check


def _check_weak_iff_singleton(corpus, config, sumset_fn):
    check = TheoremCheck("weak-iff-singleton-endpoints", "", config, "pass")
    return _weak_strong_engine(
        check, corpus or Corpus(),
        lambda a, b: len(_sums_of(a, b, None)) == max(len(a), len(b)),
        lambda a, b: min(len(a), len(b)) == 1,
        lambda f: classify(f).is_weak,
        weak_structure_check,
    )


def _check_strong_iff_disjoint(corpus, config, sumset_fn):
    check = TheoremCheck("strong-iff-disjoint-differences", "", config, "pass")

    def disj(a, b):
        da = frozenset(x - y for x in a for y in a if x > y)
        db = frozenset(x - y for x in b for y in b if x > y)
        return not (da & db)

    return _weak_strong_engine(
        check, corpus or Corpus(),
        lambda a, b: len(_sums_of(a, b, None)) == len(a) * len(b),
        disj,
        lambda f: classify(f).is_strong,
        strong_structure_check,
    )


def _check_max_identity_iff_singleton(corpus, config, sumset_fn):
    max_el = corpus.max_element if corpus and corpus.max_element is not None else 6
    subsets = _subsets(max_el)
    check = TheoremCheck(
        "max-identity-iff-singleton-endpoint",
        f"all pairs of non-empty subsets of {{0..{max_el}}}",
        config, "pass",
    )
    for a in subsets:
        for b in subsets:
            hits_max = len(_sums_of(a, b, sumset_fn)) == max(len(a), len(b))
            singleton = min(len(a), len(b)) == 1
            if hits_max != singleton:
                _fail(check, {"first": list(a), "second": list(b)})
    check.details = {"pairs": len(subsets) ** 2}
    return check


# ---------------------------------------------------------------------------
# uniform existence equivalences

def _search_config(config):
    if config is not None:
        return config
    return SearchConfig(element_bound=6, size_bound=3)


def _check_two_uniform_iff_bipartite(corpus, config, sumset_fn):
    cfg = _search_config(config)
    graphs, desc = _graph_corpus(corpus, 4, connected=True)
    check = TheoremCheck(
        "two-uniform-iff-bipartite",
        f"{desc}; nonexistence bounded by the search config", cfg, "pass",
    )
    if not graphs:
        return _empty(check)
    built = searched = 0
    for g in graphs:
        if is_bipartite(g).bipartite:
            out = two_uniform_iasi(g)
            built += 1
            ok = (
                not isinstance(out, NoConstruction)
                and out.report.is_iasi
                and (out.report.edge_uniform_k == 2 or out.report.vacuous_edges)
            )
            if not ok:
                _fail(check, {"graph6": write_graph6(g), "direction": "construct"})
        else:
            cert = find_k_uniform(g, 2, cfg)
            searched += 1
            if cert.kind == "budget_exceeded":
                check.verdict = "inconclusive"
                check.reason = "budget"
                return check
            if cert.kind != "exhausted":
                _fail(check, {
                    "graph6": write_graph6(g), "direction": "search",
                    "witness": labeling_to_json(cert.witness),
                })
    check.details = {"constructed": built, "exhausted": searched}
    return check


def _check_weakly_uniform_iff_bipartite(corpus, config, sumset_fn):
    cfg = _search_config(config)
    graphs, desc = _graph_corpus(corpus, 4, connected=True)
    ks = corpus.ks if corpus and corpus.ks else (2, 3)
    check = TheoremCheck(
        "weakly-uniform-iff-bipartite",
        f"{desc}, k in {sorted(ks)}; nonexistence bounded by the search config",
        cfg, "pass",
    )
    if not graphs:
        return _empty(check)
    for g in graphs:
        for k in ks:
            if is_bipartite(g).bipartite:
                out = weakly_uniform_iasi(g, k)
                ok = (
                    not isinstance(out, NoConstruction)
                    and out.report.is_iasi and out.report.is_weak
                    and (out.report.edge_uniform_k == k or out.report.vacuous_edges)
                )
                if not ok:
                    _fail(check, {"graph6": write_graph6(g), "k": k,
                                  "direction": "construct"})
            else:
                cert = find_k_uniform(g, k, cfg, mode="weak")
                if cert.kind == "budget_exceeded":
                    check.verdict = "inconclusive"
                    check.reason = "budget"
                    return check
                if cert.kind != "exhausted":
                    _fail(check, {
                        "graph6": write_graph6(g), "k": k, "direction": "search",
                        "witness": labeling_to_json(cert.witness),
                    })
    check.details = {
        "graphs": len(graphs),
        "note": "k=1 excluded: all-singleton labelings are weakly 1-uniform "
                "on any graph, so the bipartite equivalence starts at k=2",
    }
    return check


def _check_strongly_uniform(corpus, config, sumset_fn):
    cfg = _search_config(config)
    graphs, desc = _graph_corpus(corpus, 4, connected=True)
    ks = corpus.ks if corpus and corpus.ks else (1, 2, 3, 4)
    check = TheoremCheck(
        "strongly-uniform-iff-bipartite-or-square",
        f"{desc}, k in {sorted(ks)}; nonexistence bounded by the search config",
        cfg, "pass",
    )
    if not graphs:
        return _empty(check)
    branches = {"completely-uniform": 0, "bipartite": 0, "none": 0}
    for g in graphs:
        for k in ks:
            square = round(k ** 0.5) ** 2 == k
            bip = is_bipartite(g).bipartite
            out = strongly_uniform_iasi(g, k)
            if square or bip:
                ok = (
                    not isinstance(out, NoConstruction)
                    and out.report.is_iasi and out.report.is_strong
                    and (out.report.edge_uniform_k == k or out.report.vacuous_edges)
                )
                if square and ok and g.edge_count:
                    ok = out.report.completely_uniform == (k, round(k ** 0.5))
                if not ok:
                    _fail(check, {"graph6": write_graph6(g), "k": k,
                                  "direction": "construct"})
                else:
                    branches["completely-uniform" if square else "bipartite"] += 1
            else:
                if not isinstance(out, NoConstruction):
                    _fail(check, {"graph6": write_graph6(g), "k": k,
                                  "direction": "construct",
                                  "note": "construction should have refused"})
                cert = find_k_uniform(g, k, cfg, mode="strong")
                if cert.kind == "budget_exceeded":
                    check.verdict = "inconclusive"
                    check.reason = "budget"
                    return check
                if cert.kind != "exhausted":
                    _fail(check, {
                        "graph6": write_graph6(g), "k": k, "direction": "search",
                        "witness": labeling_to_json(cert.witness),
                    })
                else:
                    branches["none"] += 1
    check.details = {"branches": branches}
    return check


# ---------------------------------------------------------------------------
# induced labeling formulas on derived graphs

def _raw_labels(out) -> list[list[int]]:
    """Undo logged repairs to recover the labels the formula produced."""
    labels = [l.to_list() for l in out.labeling.labels]
    for entry in out.repair_log:
        labels[entry.vertex] = entry.original.to_list()
    return labels


def _check_line_graph_formula(corpus, config, sumset_fn):
    graphs, desc = _graph_corpus(corpus, 4, connected=False)
    check = TheoremCheck(
        "line-graph-formula-iasi",
        f"{desc}, singleton powers-of-two labelings; "
        "wider corpora are known to break the transfer formula",
        config, "pass",
    )
    if not graphs:
        return _empty(check)
    for g in graphs:
        f = canonical_iasi(g).labeling
        out = line_graph_labeling(f)
        rep = out.formula_report
        if not (rep.is_iasl and rep.is_iasi):
            _fail(check, {
                "graph6": write_graph6(g),
                "labeling": labeling_to_json(f),
                "line_graph6": write_graph6(out.labeling.graph),
                "formula_labels": _raw_labels(out),
                "formula_violations": [
                    {"kind": v.kind, "where": repr(v.where)} for v in rep.violations
                ],
            })
    check.details = {"graphs": len(graphs)}
    return check


def _check_total_graph_formula(corpus, config, sumset_fn):
    if corpus and corpus.graphs is not None:
        graphs = list(corpus.graphs)
        desc = f"{len(graphs)} supplied graphs, singleton powers-of-two labelings"
    else:
        graphs = [path_graph(n) for n in range(1, 6)]
        desc = (
            "path graphs on 1..5 vertices, singleton powers-of-two labelings "
            "(the transfer formula is injective there; triangles, 4-cycles and "
            "stars are recorded counterexamples)"
        )
    check = TheoremCheck("total-graph-formula-iasi", desc, config, "pass")
    if not graphs:
        return _empty(check)
    for g in graphs:
        f = canonical_iasi(g).labeling
        out = total_graph_labeling(f)
        rep = out.formula_report
        if not (rep.is_iasl and rep.is_iasi):
            _fail(check, {
                "graph6": write_graph6(g),
                "labeling": labeling_to_json(f),
                "total_graph6": write_graph6(out.labeling.graph),
                "formula_labels": _raw_labels(out),
                "formula_violations": [
                    {"kind": v.kind, "where": repr(v.where)} for v in rep.violations
                ],
            })
    check.details = {"graphs": len(graphs)}
    return check


# ---------------------------------------------------------------------------
# registry

_REGISTRY = {
    "iasl-existence": _check_iasl_existence,
    "iasi-existence": _check_iasi_existence,
    "subgraph-heredity": _check_heredity,
    "ground-set-lower-bound": _check_ground_set_lower_bound,
    "uniform-ground-set-binomial": _check_binomial,
    "edge-size-bounds": _check_edge_size_bounds,
    "edge-size-product-minus-neglect": _check_size_product_minus_neglect,
    "saturated-class-size": _check_saturated_class,
    "adjacent-edge-ratio": _check_adjacent_edge_ratio,
    "uniform-iasl-ratio-condition": _check_uniform_ratio_condition,
    "uniform-vertices-equal-neglect": _check_uniform_equal_neglect,
    "two-uniform-iff-bipartite": _check_two_uniform_iff_bipartite,
    "max-identity-iff-singleton-endpoint": _check_max_identity_iff_singleton,
    "weak-iff-singleton-endpoints": _check_weak_iff_singleton,
    "weakly-uniform-iff-bipartite": _check_weakly_uniform_iff_bipartite,
    "max-sumset-iff-disjoint-differences": _check_max_sumset_iff_disjoint,
    "strong-iff-disjoint-differences": _check_strong_iff_disjoint,
    "strongly-uniform-iff-bipartite-or-square": _check_strongly_uniform,
    "line-graph-formula-iasi": _check_line_graph_formula,
    "total-graph-formula-iasi": _check_total_graph_formula,
    "edge-size-equals-class-count": _check_edge_size_is_class_count,
}

CHECK_IDS = tuple(_REGISTRY)


def run_check(
    check_id: str,
    corpus: Corpus | None = None,
    config: SearchConfig | None = None,
    sumset_fn=None,
) -> TheoremCheck:
    """Run one registered check; unknown ids raise KeyError."""
    if check_id not in _REGISTRY:
        raise KeyError(f"unknown check {check_id!r}; known: {', '.join(CHECK_IDS)}")
    cfg = config if config is not None else SearchConfig()
    return _REGISTRY[check_id](corpus, cfg, sumset_fn)


@dataclass
class SuiteResult:
    checks: list[TheoremCheck]

    @property
    def verdict(self) -> str:
        if any(c.verdict == "counterexample" for c in self.checks):
            return "counterexample"
        if any(c.verdict == "inconclusive" for c in self.checks):
            return "inconclusive"
        return "pass"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "checks": [c.to_json() for c in self.checks],
        }


def run_suite(
    corpus: Corpus | None = None,
    config: SearchConfig | None = None,
    parallel: bool = False,
) -> SuiteResult:
    """Run every registered check; results in registry order."""
    if parallel:
        with ThreadPoolExecutor(max_workers=4) as pool:
            checks = list(pool.map(lambda i: run_check(i, corpus, config), CHECK_IDS))
    else:
        checks = [run_check(i, corpus, config) for i in CHECK_IDS]
    return SuiteResult(checks)
