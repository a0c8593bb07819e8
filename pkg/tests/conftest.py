"""Shared fixtures: the verification corpus and per-group cached structures."""

from __future__ import annotations

from dataclasses import dataclass

import pytest

from latgraph.catalog import NamedGroup, build_group, parse_group_expr
from latgraph.group_core import FiniteGroup, generated_subgroup
from latgraph.lattice import LatticeWithSubgroups, build_lattice
from latgraph.power_graphs import (
    DifferenceGraph,
    Digraph,
    SimpleGraph,
    diff_oracle,
    dirpow_oracle,
    epow_oracle,
    pow_oracle,
)
from latgraph.reconstruct import CanonicalLabel, oracle_labeling

# Fixed corpus: a representative sweep of everything the constructors can
# produce at order <= 100, plus S4 and S5.  Kept stable so expected values
# frozen in the acceptance suite stay meaningful.
CORPUS: tuple[str, ...] = (
    # cyclic groups: trivial, primes, prime powers, and composite orders
    "Z(1)", "Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "Z(7)", "Z(8)", "Z(9)",
    "Z(10)", "Z(12)", "Z(15)", "Z(16)", "Z(18)", "Z(20)", "Z(24)", "Z(25)",
    "Z(27)", "Z(30)", "Z(32)", "Z(36)", "Z(48)", "Z(60)", "Z(64)", "Z(100)",
    # abelian products
    "Z(2)xZ(2)", "Z(2)xZ(4)", "Z(2)xZ(6)", "Z(3)xZ(3)", "Z(4)xZ(4)",
    "Z(2)xZ(2)xZ(2)", "Z(2)xZ(2)xZ(3)", "Z(6)xZ(6)", "Z(10)xZ(10)",
    # dihedral, quaternion, semidihedral, modular
    "D(6)", "D(8)", "D(10)", "D(12)", "D(16)", "D(24)",
    "Q(8)", "Q(16)", "Q(32)", "SD(16)", "SD(32)",
    "M(2,4)", "M(2,5)", "M(3,3)",
    # permutation groups
    "S(3)", "S(4)", "S(5)", "A(4)", "A(5)",
    # exponent-p lookalikes and coprime products
    "Heis(3)", "Z(3)xZ(3)xZ(3)", "Heis(3)xZ(2)", "Z(3)xZ(3)xZ(3)xZ(2)",
    "Q(8)xZ(3)", "Q(8)xZ(5)",
    # the full order-16 classification
    "G16(1)", "G16(2)", "G16(3)", "G16(4)", "G16(5)", "G16(6)", "G16(7)",
    "G16(8)", "G16(9)", "G16(10)", "G16(11)", "G16(12)", "G16(13)", "G16(14)",
)


@dataclass
class GroupBundle:
    expr: str
    named: NamedGroup
    lattice: LatticeWithSubgroups
    epow: SimpleGraph
    pow: SimpleGraph
    dirpow: Digraph
    diff: DifferenceGraph
    labeling: tuple[CanonicalLabel, ...]

    @property
    def group(self) -> FiniteGroup:
        return self.named.group


def make_bundle(expr: str) -> GroupBundle:
    named = build_group(parse_group_expr(expr))
    G = named.group
    LS = build_lattice(G)
    return GroupBundle(
        expr=expr,
        named=named,
        lattice=LS,
        epow=epow_oracle(G),
        pow=pow_oracle(G),
        dirpow=dirpow_oracle(G),
        diff=diff_oracle(G),
        labeling=oracle_labeling(G, LS),
    )


@pytest.fixture(scope="session")
def bundles() -> dict[str, GroupBundle]:
    return {expr: make_bundle(expr) for expr in CORPUS}


def group_of(expr: str) -> FiniteGroup:
    return build_group(parse_group_expr(expr)).group


# ---------------------------------------------------------------------------
# naive reference implementations, kept deliberately independent of the
# library's vectorised versions: plain pair loops over membership sets


def naive_member_sets(G: FiniteGroup) -> list[set[int]]:
    return [set(generated_subgroup(G, x).members) for x in G.elements()]


def naive_epow_edges(G: FiniteGroup) -> set[tuple[int, int]]:
    subs = naive_member_sets(G)
    return {
        (x, y)
        for x in G.elements()
        for y in G.elements()
        if x < y and any(x in s and y in s for s in subs)
    }


def naive_pow_edges(G: FiniteGroup) -> set[tuple[int, int]]:
    subs = naive_member_sets(G)
    return {
        (x, y)
        for x in G.elements()
        for y in G.elements()
        if x < y and (y in subs[x] or x in subs[y])
    }


def naive_dirpow_arcs(G: FiniteGroup) -> set[tuple[int, int]]:
    subs = naive_member_sets(G)
    return {
        (x, y)
        for x in G.elements()
        for y in G.elements()
        if x != y and y in subs[x]
    }
