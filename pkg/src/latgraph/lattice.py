"""Order-labelled Hasse diagrams of cyclic subgroup lattices.

A :class:`CyclicLattice` stores one node per cyclic subgroup, labelled with
the subgroup's order, plus the cover relation (immediate inclusions).  The
order labels are not decoration: two groups can have isomorphic bare posets
of cyclic subgroups and still have different enhanced power graphs (the
divisor posets of 12 and 18 are both 2x3 grids), so every algorithm downstream
works with the labelled object.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .group_core import CyclicSubgroup, FiniteGroup, cyclic_subgroups


class InvalidLattice(ValueError):
    """Raised when an operation requires a valid lattice and the check fails."""


def totient(d: int) -> int:
    """Euler's phi: count of integers in [1, d] coprime to d."""
    if d <= 0:
        raise ValueError(f"totient requires a positive integer, got {d}")
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n."""
    if n <= 0:
        raise ValueError(f"divisors requires a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def divisor_cover_pairs(n: int) -> set[tuple[int, int]]:
    """Cover pairs (d, d') of the divisor poset of n: d | d' with d'/d prime."""
    divs = divisors(n)
    return {
        (d, e)
        for d in divs
        for e in divs
        if e % d == 0 and _is_prime(e // d)
    }


@dataclass(frozen=True)
class CyclicLattice:
    """Hasse diagram with integer node ids; ``orders[v]`` is node v's label."""

    orders: tuple[int, ...]
    covers: frozenset[tuple[int, int]]  # (lower, upper)
    bottom: int

    @property
    def node_count(self) -> int:
        return len(self.orders)

    def nodes(self) -> range:
        return range(self.node_count)


@dataclass(frozen=True)
class LatticeWithSubgroups:
    """A lattice together with the concrete subgroup behind each node."""

    lattice: CyclicLattice
    subgroup_of: tuple[CyclicSubgroup, ...]


def build_lattice(G: FiniteGroup) -> LatticeWithSubgroups:
    """Cyclic subgroup lattice of G: nodes in (order, members) order.

    A cover is an inclusion of prime index; for cyclic subgroups that is the
    same as "no intermediate cyclic subgroup", because every subgroup between
    two nested cyclic subgroups is itself cyclic of intermediate divisor order.
    """
    subs = cyclic_subgroups(G)
    sets = [set(s.members) for s in subs]
    covers = set()
    for i, lo in enumerate(subs):
        for j, hi in enumerate(subs):
            if (
                hi.order % lo.order == 0
                and _is_prime(hi.order // lo.order)
                and sets[i] < sets[j]
            ):
                covers.add((i, j))
    bottom = next(i for i, s in enumerate(subs) if s.order == 1)
    lattice = CyclicLattice(
        orders=tuple(s.order for s in subs),
        covers=frozenset(covers),
        bottom=bottom,
    )
    return LatticeWithSubgroups(lattice=lattice, subgroup_of=tuple(subs))


def predecessors(L: CyclicLattice, v: int) -> set[int]:
    """Immediate lower covers of v."""
    return {lo for (lo, hi) in L.covers if hi == v}


def successors(L: CyclicLattice, v: int) -> set[int]:
    """Immediate upper covers of v."""
    return {hi for (lo, hi) in L.covers if lo == v}


def down_set(L: CyclicLattice, v: int) -> set[int]:
    """All nodes u with u <= v, including v itself."""
    below = {v}
    stack = [v]
    lowers: dict[int, list[int]] = {u: [] for u in L.nodes()}
    for lo, hi in L.covers:
        lowers[hi].append(lo)
    while stack:
        u = stack.pop()
        for w in lowers[u]:
            if w not in below:
                below.add(w)
                stack.append(w)
    return below


def reachability(L: CyclicLattice) -> list[set[int]]:
    """reach[v] = the down-set of v, for every node at once."""
    return [down_set(L, v) for v in L.nodes()]


@dataclass
class LatticeReport:
    """Outcome of :func:`validate_lattice`; empty violations means valid."""

    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_lattice(L: CyclicLattice) -> LatticeReport:
    """Check every structural invariant; report all violations with witnesses."""
    report = LatticeReport()
    n = L.node_count
    if n == 0:
        report.violations.append("lattice has no nodes")
        return report
    for v, d in enumerate(L.orders):
        if d < 1:
            report.violations.append(f"node {v} has non-positive order {d}")
    for lo, hi in L.covers:
        if not (0 <= lo < n and 0 <= hi < n):
            report.violations.append(f"cover ({lo},{hi}) references unknown nodes")
    if report.violations:
        return report

    bottoms = [v for v in L.nodes() if L.orders[v] == 1]
    if len(bottoms) != 1:
        report.violations.append(f"expected one node of order 1, found {bottoms}")
    if not (0 <= L.bottom < n) or L.orders[L.bottom] != 1:
        report.violations.append(f"bottom {L.bottom} is not the order-1 node")
    minimal = [v for v in L.nodes() if not predecessors(L, v)]
    if bottoms and set(minimal) != set(bottoms):
        report.violations.append(f"minimal nodes {sorted(minimal)} differ from the bottom")

    for lo, hi in sorted(L.covers):
        dlo, dhi = L.orders[lo], L.orders[hi]
        if dhi % dlo != 0 or not _is_prime(dhi // dlo):
            report.violations.append(
                f"cover ({lo},{hi}) has non-prime order quotient {dhi}/{dlo}"
            )

    # acyclicity: repeated cover-stripping must consume every node
    preds = {v: predecessors(L, v) for v in L.nodes()}
    placed: set[int] = set()
    while True:
        ready = {v for v in L.nodes() if v not in placed and preds[v] <= placed}
        if not ready:
            break
        placed |= ready
    if placed != set(L.nodes()):
        report.violations.append(f"cover cycle through nodes {sorted(set(L.nodes()) - placed)}")
        return report

    reach = reachability(L)
    for v in L.nodes():
        dv = L.orders[v]
        below = reach[v]
        order_of = sorted(L.orders[u] for u in below)
        if order_of != divisors(dv):
            report.violations.append(
                f"down-set of node {v} (order {dv}) has orders {order_of}, "
                f"expected the divisors {divisors(dv)}"
            )
            continue
        for u in below:
            for w in below:
                le = u in reach[w]
                should = L.orders[w] % L.orders[u] == 0
                if le != should:
                    report.violations.append(
                        f"down-set of node {v}: nodes {u},{w} do not order like "
                        f"the divisors {L.orders[u]},{L.orders[w]}"
                    )

    # unique greatest lower bound for every pair
    for u in L.nodes():
        for v in range(u + 1, n):
            common = reach[u] & reach[v]
            maximal = [w for w in common if not any(w in reach[x] and x != w for x in common)]
            if len(maximal) != 1:
                report.violations.append(
                    f"nodes {u},{v} have {len(maximal)} maximal common lower bounds"
                )
    return report


def require_valid(L: CyclicLattice) -> None:
    """Raise :class:`InvalidLattice` when validation reports violations."""
    report = validate_lattice(L)
    if not report.ok:
        raise InvalidLattice("; ".join(report.violations))


def levelize(L: CyclicLattice) -> list[set[int]]:
    """Partition nodes into stages: a node enters once all its covers-from are placed.

    Stage 0 holds the bottom; stage t+1 holds the unplaced nodes all of whose
    immediate predecessors sit in stages <= t.
    """
    preds = {v: predecessors(L, v) for v in L.nodes()}
    stages = [{L.bottom}]
    placed = {L.bottom}
    while len(placed) < L.node_count:
        ready = {v for v in L.nodes() if v not in placed and preds[v] <= placed}
        if not ready:
            raise InvalidLattice("cover relation contains a cycle")
        stages.append(ready)
        placed |= ready
    return stages


def lattice_to_json(L: CyclicLattice) -> str:
    """Canonical JSON form (dense ids, sorted covers)."""
    payload = {
        "nodes": [{"id": v, "order": L.orders[v]} for v in L.nodes()],
        "covers": sorted([lo, hi] for (lo, hi) in L.covers),
    }
    return json.dumps(payload)


def lattice_from_json(text: str) -> CyclicLattice:
    """Parse and validate the JSON form produced by :func:`lattice_to_json`."""
    payload = json.loads(text)
    nodes = payload["nodes"]
    ids = [rec["id"] for rec in nodes]
    if sorted(ids) != list(range(len(nodes))):
        raise InvalidLattice("node ids must be dense from 0")
    orders = [0] * len(nodes)
    for rec in nodes:
        orders[rec["id"]] = int(rec["order"])
    covers = frozenset((int(lo), int(hi)) for lo, hi in payload["covers"])
    bottoms = [v for v, d in enumerate(orders) if d == 1]
    if len(bottoms) != 1:
        raise InvalidLattice(f"expected one node of order 1, found {bottoms}")
    lattice = CyclicLattice(orders=tuple(orders), covers=covers, bottom=bottoms[0])
    require_valid(lattice)
    return lattice
