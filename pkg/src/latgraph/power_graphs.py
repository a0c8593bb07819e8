"""The four power-type graphs of a finite group, computed directly.

These are the ground-truth constructions everything else is checked against:

* power graph: x ~ y when one is a power of the other
* directed power graph: arc x -> y when y is a power of x
* enhanced power graph: x ~ y when both lie in a common cyclic subgroup
* difference graph: enhanced edges minus power edges, isolated vertices dropped

Plus maximal-clique enumeration (Bron-Kerbosch with pivoting), which is the
engine of the lattice reconstruction: the maximal cliques of the enhanced
power graph are exactly the maximal cyclic subgroups.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .group_core import FiniteGroup, cyclic_subgroups, generated_subgroup


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 0..n-1; per-vertex sorted neighbor tuples."""

    neighbors: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.neighbors)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.neighbors) for v in nb if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(nb) for nb in self.neighbors))

    @staticmethod
    def from_edges(n: int, edges) -> "SimpleGraph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return SimpleGraph(neighbors=tuple(tuple(sorted(s)) for s in nbrs))

    @staticmethod
    def from_adjacency(adj: np.ndarray) -> "SimpleGraph":
        return SimpleGraph(
            neighbors=tuple(tuple(np.flatnonzero(row).tolist()) for row in adj)
        )


@dataclass(frozen=True)
class Digraph:
    """Directed graph; ``out_neighbors[x]`` are the sorted arc targets of x."""

    out_neighbors: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.out_neighbors)

    @property
    def arc_count(self) -> int:
        return sum(len(nb) for nb in self.out_neighbors)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.out_neighbors) for v in nb]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_neighbors[u]

    def in_degrees(self) -> tuple[int, ...]:
        counts = [0] * self.vertex_count
        for _, v in self.arcs():
            counts[v] += 1
        return tuple(counts)

    def underlying_undirected(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.vertex_count, self.arcs())

    @staticmethod
    def from_arcs(n: int, arcs) -> "Digraph":
        outs: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-arc on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range")
            outs[u].add(v)
        return Digraph(out_neighbors=tuple(tuple(sorted(s)) for s in outs))


@dataclass(frozen=True)
class DifferenceGraph:
    """Difference graph on compacted ids; ``retained[i]`` is the original id."""

    graph: SimpleGraph
    retained: tuple[int, ...]


def _membership_matrix(G: FiniteGroup) -> np.ndarray:
    """M[x, y] is True when y lies in <x>."""
    n = G.order
    M = np.zeros((n, n), dtype=bool)
    for x in G.elements():
        M[x, list(generated_subgroup(G, x).members)] = True
    return M


def epow_oracle(G: FiniteGroup) -> SimpleGraph:
    """Enhanced power graph: mark all pairs inside each cyclic subgroup."""
    n = G.order
    adj = np.zeros((n, n), dtype=bool)
    for sub in cyclic_subgroups(G):
        m = list(sub.members)
        adj[np.ix_(m, m)] = True
    np.fill_diagonal(adj, False)
    return SimpleGraph.from_adjacency(adj)


def pow_oracle(G: FiniteGroup) -> SimpleGraph:
    """Power graph: x ~ y when x is in <y> or y is in <x>."""
    M = _membership_matrix(G)
    adj = M | M.T
    np.fill_diagonal(adj, False)
    return SimpleGraph.from_adjacency(adj)


def dirpow_oracle(G: FiniteGroup) -> Digraph:
    """Directed power graph: arc x -> y when y is in <x>, x != y."""
    M = _membership_matrix(G)
    np.fill_diagonal(M, False)
    return Digraph(
        out_neighbors=tuple(tuple(np.flatnonzero(row).tolist()) for row in M)
    )


def diff_oracle(G: FiniteGroup) -> DifferenceGraph:
    """Difference graph: enhanced minus power edges, isolated vertices removed."""
    n = G.order
    ep = np.zeros((n, n), dtype=bool)
    for sub in cyclic_subgroups(G):
        m = list(sub.members)
        ep[np.ix_(m, m)] = True
    np.fill_diagonal(ep, False)
    M = _membership_matrix(G)
    diff = ep & ~(M | M.T)
    keep = np.flatnonzero(diff.any(axis=0))
    compact = diff[np.ix_(keep, keep)]
    return DifferenceGraph(
        graph=SimpleGraph.from_adjacency(compact),
        retained=tuple(int(v) for v in keep),
    )


def maximal_cliques(g: SimpleGraph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, largest first then lexicographic."""
    if g.vertex_count == 0:
        return []
    adj = [set(nb) for nb in g.neighbors]
    out: list[tuple[int, ...]] = []

    def expand(clique: set[int], cand: set[int], excl: set[int]) -> None:
        if not cand and not excl:
            out.append(tuple(sorted(clique)))
            return
        pivot = max(cand | excl, key=lambda u: len(cand & adj[u]))
        for v in sorted(cand - adj[pivot]):
            expand(clique | {v}, cand & adj[v], excl & adj[v])
            cand.remove(v)
            excl.add(v)

    expand(set(), set(range(g.vertex_count)), set())
    return sorted(out, key=lambda c: (-len(c), c))


# ---------------------------------------------------------------------------
# serialization


def graph_to_json(g: SimpleGraph | Digraph, labels: list[str] | None = None) -> str:
    """Canonical JSON: {"kind", "vertices", "edges"}; vertices is a count or labels."""
    if isinstance(g, SimpleGraph):
        kind, pairs = "simple", g.edges()
    else:
        kind, pairs = "directed", g.arcs()
    vertices: int | list[str] = g.vertex_count if labels is None else list(labels)
    payload = {"kind": kind, "vertices": vertices, "edges": sorted(map(list, pairs))}
    return json.dumps(payload)


def graph_from_json(text: str) -> SimpleGraph | Digraph:
    """Inverse of :func:`graph_to_json` (labels are dropped; ids are positional)."""
    payload = json.loads(text)
    kind = payload.get("kind")
    vertices = payload["vertices"]
    n = vertices if isinstance(vertices, int) else len(vertices)
    edges = [(int(u), int(v)) for u, v in payload["edges"]]
    if kind == "simple":
        return SimpleGraph.from_edges(n, edges)
    if kind == "directed":
        return Digraph.from_arcs(n, edges)
    raise ValueError(f"unknown graph kind {kind!r}")


def graph_to_dot(g: SimpleGraph | Digraph, labels: list[str] | None = None) -> str:
    """DOT text with vertices and edges in canonical order."""
    directed = isinstance(g, Digraph)
    lines = ["digraph {" if directed else "graph {"]
    for v in range(g.vertex_count):
        if labels is not None:
            text = str(labels[v]).replace('"', '\\"')
            lines.append(f'  {v} [label="{text}"];')
        else:
            lines.append(f"  {v};")
    conn = "->" if directed else "--"
    pairs = g.arcs() if directed else g.edges()
    for u, v in sorted(pairs):
        lines.append(f"  {u} {conn} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
