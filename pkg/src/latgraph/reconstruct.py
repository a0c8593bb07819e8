"""Element-free reconstructions between power-type graphs and the cyclic
subgroup lattice.

One direction starts from an unlabeled enhanced power graph and recovers the
order-labelled lattice from its maximal cliques: every maximal clique is a
maximal cyclic subgroup, each clique of size n contributes one candidate
subgroup per divisor of n, candidates are identified across cliques through
the sizes of pairwise clique intersections, and covers are the prime-quotient
divisor pairs read off inside each clique.

The other direction starts from the lattice alone.  Each node of order d
introduces exactly phi(d) fresh vertices (the generators of that subgroup);
gluing cliques over the down-set of each node yields the enhanced power
graph, while restricting edges to comparable nodes yields the power graph,
orienting them downward yields the directed power graph, and the leftover
incomparable pairs yield the difference graph.  Vertices carry canonical
(node, generator-index) labels throughout.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .group_core import FiniteGroup, generated_subgroup
from .lattice import (
    CyclicLattice,
    LatticeWithSubgroups,
    divisor_cover_pairs,
    divisors,
    levelize,
    reachability,
    require_valid,
    totient,
    validate_lattice,
)
from .power_graphs import Digraph, SimpleGraph, maximal_cliques


class NotAnEnhancedPowerGraph(ValueError):
    """The input graph cannot be the enhanced power graph of any finite group."""


@dataclass(frozen=True, order=True)
class CanonicalLabel:
    """Vertex label: the lattice node of its subgroup plus a generator index."""

    node: int
    index: int  # 1-based, in [1, phi(order of node)]


@dataclass(frozen=True)
class LabeledGraph:
    graph: SimpleGraph
    labels: tuple[CanonicalLabel, ...]


@dataclass(frozen=True)
class LabeledDigraph:
    digraph: Digraph
    labels: tuple[CanonicalLabel, ...]


def label_strings(labels: tuple[CanonicalLabel, ...]) -> list[str]:
    """Serialized vertex names, one per vertex: ``n<node>:g<index>``."""
    return [f"n{lbl.node}:g{lbl.index}" for lbl in labels]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:  # path compression
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


# ---------------------------------------------------------------------------
# graph -> lattice


def lattice_from_epow(g: SimpleGraph) -> CyclicLattice:
    """Recover the order-labelled cyclic subgroup lattice from an unlabeled
    enhanced power graph.

    The input is promised to be the enhanced power graph of some finite
    group.  The promise is checked as far as the arithmetic allows, and a
    :class:`NotAnEnhancedPowerGraph` with a diagnosis is raised when any
    check fails; the checks are necessary conditions, not a complete
    recognition procedure.
    """
    if g.vertex_count == 0:
        raise NotAnEnhancedPowerGraph("a group is never empty, the graph is")
    cliques = maximal_cliques(g)
    sizes = [len(c) for c in cliques]

    node_ids: dict[tuple[int, int], int] = {}
    for ci, size in enumerate(sizes):
        for d in divisors(size):
            node_ids[(ci, d)] = len(node_ids)
    uf = _UnionFind(len(node_ids))

    csets = [set(c) for c in cliques]
    for i in range(len(cliques)):
        for j in range(i + 1, len(cliques)):
            r = len(csets[i] & csets[j])
            if r == 0:
                raise NotAnEnhancedPowerGraph(
                    f"maximal cliques {i} and {j} are disjoint, but every "
                    "enhanced power graph has a universal identity vertex"
                )
            if sizes[i] % r or sizes[j] % r:
                raise NotAnEnhancedPowerGraph(
                    f"maximal cliques {i} and {j} intersect in {r} vertices, "
                    f"which does not divide both clique sizes {sizes[i]} and {sizes[j]}"
                )
            for d in divisors(r):
                uf.union(node_ids[(i, d)], node_ids[(j, d)])

    classes: dict[int, list[tuple[int, int]]] = {}
    for key, idx in node_ids.items():
        classes.setdefault(uf.find(idx), []).append(key)
    class_order: dict[int, int] = {}
    for root, members in classes.items():
        ds = {d for (_, d) in members}
        if len(ds) != 1:
            raise NotAnEnhancedPowerGraph(
                f"identification merged subgroup orders {sorted(ds)}"
            )
        class_order[root] = next(iter(ds))

    ordered = sorted(classes, key=lambda r: (class_order[r], sorted(classes[r])))
    node_of_root = {root: v for v, root in enumerate(ordered)}
    orders = tuple(class_order[root] for root in ordered)

    def node_of(ci: int, d: int) -> int:
        return node_of_root[uf.find(node_ids[(ci, d)])]

    covers = set()
    for ci, size in enumerate(sizes):
        for d, dd in divisor_cover_pairs(size):
            covers.add((node_of(ci, d), node_of(ci, dd)))

    total = sum(totient(d) for d in orders)
    if total != g.vertex_count:
        raise NotAnEnhancedPowerGraph(
            f"generator counting failed: the classes account for {total} "
            f"vertices but the graph has {g.vertex_count}"
        )
    for d in sorted(set(orders)):
        if g.vertex_count % d:
            raise NotAnEnhancedPowerGraph(
                f"subgroup order {d} does not divide the group order {g.vertex_count}"
            )

    bottom = orders.index(1)
    lat = CyclicLattice(orders=orders, covers=frozenset(covers), bottom=bottom)
    report = validate_lattice(lat)
    if not report.ok:
        raise NotAnEnhancedPowerGraph(
            "reconstructed covers do not form a cyclic subgroup lattice: "
            + "; ".join(report.violations)
        )
    return lat


# ---------------------------------------------------------------------------
# lattice -> graphs


def new_vertices(L: CyclicLattice, v: int) -> list[CanonicalLabel]:
    """The phi(order(v)) fresh vertices node v introduces: its generators."""
    return [CanonicalLabel(node=v, index=i) for i in range(1, totient(L.orders[v]) + 1)]


def _vertex_layout(L: CyclicLattice):
    """Assign vertex ids stage by stage; returns (labels, vertices-per-node)."""
    labels: list[CanonicalLabel] = []
    verts: list[list[int]] = [[] for _ in L.nodes()]
    for stage in levelize(L):
        for v in sorted(stage):
            for lbl in new_vertices(L, v):
                verts[v].append(len(labels))
                labels.append(lbl)
    return tuple(labels), verts


def _epow_adjacency(L: CyclicLattice, verts, reach) -> np.ndarray:
    n = sum(len(vs) for vs in verts)
    adj = np.zeros((n, n), dtype=bool)
    for v in L.nodes():
        block = [x for u in sorted(reach[v]) for x in verts[u]]
        adj[np.ix_(block, block)] = True
    np.fill_diagonal(adj, False)
    return adj


def _pow_adjacency(L: CyclicLattice, verts, reach) -> np.ndarray:
    n = sum(len(vs) for vs in verts)
    adj = np.zeros((n, n), dtype=bool)
    for v in L.nodes():
        new = verts[v]
        adj[np.ix_(new, new)] = True  # generators of one subgroup: all adjacent
        for u in reach[v]:
            if u == v:
                continue
            adj[np.ix_(new, verts[u])] = True  # new generators to every lower vertex
            adj[np.ix_(verts[u], new)] = True
    np.fill_diagonal(adj, False)
    return adj


def epow_from_lattice(L: CyclicLattice) -> LabeledGraph:
    """Rebuild the labelled enhanced power graph by clique gluing.

    Nodes are processed upward stage by stage; each node contributes the
    clique on the union of the fresh vertices of its down-set, glued over
    the already-placed lower subgroups.
    """
    require_valid(L)
    labels, verts = _vertex_layout(L)
    adj = _epow_adjacency(L, verts, reachability(L))
    return LabeledGraph(graph=SimpleGraph.from_adjacency(adj), labels=labels)


def pow_from_lattice(L: CyclicLattice) -> LabeledGraph:
    """Rebuild the labelled power graph: edges only between comparable nodes."""
    require_valid(L)
    labels, verts = _vertex_layout(L)
    adj = _pow_adjacency(L, verts, reachability(L))
    return LabeledGraph(graph=SimpleGraph.from_adjacency(adj), labels=labels)


def dirpow_from_lattice(L: CyclicLattice) -> LabeledDigraph:
    """Rebuild the labelled directed power graph: downward orientation.

    Within one node's fresh vertices both arc directions are present; across
    comparable nodes arcs point from the higher subgroup's generators to
    every vertex strictly below.  Incomparable nodes get no arcs.
    """
    require_valid(L)
    labels, verts = _vertex_layout(L)
    reach = reachability(L)
    n = len(labels)
    arcs = np.zeros((n, n), dtype=bool)
    for v in L.nodes():
        new = verts[v]
        arcs[np.ix_(new, new)] = True
        for u in reach[v]:
            if u != v:
                arcs[np.ix_(new, verts[u])] = True
    np.fill_diagonal(arcs, False)
    digraph = Digraph(
        out_neighbors=tuple(tuple(np.flatnonzero(row).tolist()) for row in arcs)
    )
    return LabeledDigraph(digraph=digraph, labels=labels)


def _compact(adj: np.ndarray, labels) -> LabeledGraph:
    keep = np.flatnonzero(adj.any(axis=0))
    compact = adj[np.ix_(keep, keep)]
    return LabeledGraph(
        graph=SimpleGraph.from_adjacency(compact),
        labels=tuple(labels[int(k)] for k in keep),
    )


def diff_from_lattice(L: CyclicLattice) -> LabeledGraph:
    """Difference graph from the lattice: enhanced edges minus power edges,
    isolated vertices removed (labels keep their identity)."""
    require_valid(L)
    labels, verts = _vertex_layout(L)
    reach = reachability(L)
    adj = _epow_adjacency(L, verts, reach) & ~_pow_adjacency(L, verts, reach)
    return _compact(adj, labels)


def diff_incomparability(L: CyclicLattice) -> LabeledGraph:
    """Difference graph characterised directly: two vertices are adjacent
    when their nodes share an upper bound but neither lies below the other."""
    require_valid(L)
    labels, verts = _vertex_layout(L)
    reach = reachability(L)
    n = len(labels)
    joint = [[False] * L.node_count for _ in L.nodes()]
    for w in L.nodes():
        below = sorted(reach[w])
        for u in below:
            for v in below:
                joint[u][v] = True
    adj = np.zeros((n, n), dtype=bool)
    for u in L.nodes():
        for v in L.nodes():
            if joint[u][v] and u not in reach[v] and v not in reach[u]:
                adj[np.ix_(verts[u], verts[v])] = True
    return _compact(adj, labels)


# ---------------------------------------------------------------------------
# oracle-side labelling and label-respecting comparison


def oracle_labeling(
    G: FiniteGroup, LS: LatticeWithSubgroups
) -> tuple[CanonicalLabel, ...]:
    """Label each group element with its subgroup's node and its 1-based rank
    among that subgroup's generators (sorted by element id)."""
    node_of_members = {sub.members: v for v, sub in enumerate(LS.subgroup_of)}
    labels = []
    for x in G.elements():
        sub = generated_subgroup(G, x)
        node = node_of_members[sub.members]
        labels.append(CanonicalLabel(node=node, index=sub.generators.index(x) + 1))
    return tuple(labels)


def _node_view(labels, pairs, directed: bool):
    """Collapse a labelled (di)graph to node level, checking that adjacency
    is index-uniform: every present node pair must carry its full edge block.
    Returns None when uniformity fails."""
    counts = Counter(lbl.node for lbl in labels)
    block: Counter = Counter()
    for x, y in pairs:
        nx, ny = labels[x].node, labels[y].node
        key = (nx, ny) if directed else (min(nx, ny), max(nx, ny))
        block[key] += 1
    for (nx, ny), cnt in block.items():
        if nx != ny:
            full = counts[nx] * counts[ny]
        elif directed:
            full = counts[nx] * (counts[nx] - 1)
        else:
            full = counts[nx] * (counts[nx] - 1) // 2
        if cnt != full:
            return None
    return counts, set(block)


def graphs_match_up_to_generator_indices(a: LabeledGraph, b: LabeledGraph) -> bool:
    """Equality under some bijection that fixes nodes and permutes generator
    indices within each node.

    Generators of one cyclic subgroup are closed twins in every power-type
    graph, so adjacency can only depend on the node pair; the comparison
    verifies that uniformity on both sides and then compares node-level data.
    """
    va = _node_view(a.labels, a.graph.edges(), directed=False)
    vb = _node_view(b.labels, b.graph.edges(), directed=False)
    return va is not None and vb is not None and va == vb


def digraphs_match_up_to_generator_indices(a: LabeledDigraph, b: LabeledDigraph) -> bool:
    va = _node_view(a.labels, a.digraph.arcs(), directed=True)
    vb = _node_view(b.labels, b.digraph.arcs(), directed=True)
    return va is not None and vb is not None and va == vb
