"""Multiplication-table validation, element orders, cyclic subgroups."""

import numpy as np
import pytest

from latgraph.group_core import (
    CyclicSubgroup,
    EmptyTable,
    GroupTableError,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotClosed,
    TooLarge,
    cyclic_subgroups,
    element_order,
    generated_subgroup,
    is_abelian,
    maximal_cyclic_subgroups,
    order_statistics,
    validate_group,
)
from latgraph.catalog import build_group, heisenberg, parse_group_expr, symmetric
from latgraph.lattice import divisors, totient

from conftest import group_of


def z_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


class TestValidateGroup:
    def test_trivial_group(self):
        G = validate_group([[0]])
        assert G.order == 1
        assert G.identity == 0

    def test_z6_addition_table(self):
        G = validate_group(z_table(6))
        assert G.order == 6
        assert G.identity == 0
        assert G.inv(2) == 4

    def test_corrupted_z6_entry_is_caught(self):
        table = z_table(6)
        table[1][1] = 3
        with pytest.raises((NotAssociative, MissingInverse)):
            validate_group(table)

    def test_empty_table_rejected(self):
        with pytest.raises(EmptyTable):
            validate_group([])

    def test_non_square_rejected(self):
        with pytest.raises(GroupTableError):
            validate_group([[0, 1], [1, 0], [0, 1]])

    def test_out_of_range_entry(self):
        table = z_table(4)
        table[2][3] = 7
        with pytest.raises(NotClosed) as info:
            validate_group(table)
        assert (info.value.x, info.value.y, info.value.value) == (2, 3, 7)

    def test_no_identity(self):
        with pytest.raises(NoIdentity):
            validate_group([[0, 0], [0, 0]])

    def test_not_associative_names_witness(self):
        table = [[0, 1, 2], [1, 0, 0], [2, 0, 1]]
        with pytest.raises((NotAssociative, MissingInverse)):
            validate_group(table)

    def test_order_cap(self):
        with pytest.raises(TooLarge):
            validate_group(z_table(9), order_cap=8)

    def test_accepts_every_catalog_group(self, bundles):
        # construction already validates; re-validate the stored tables
        for bundle in bundles.values():
            G = validate_group(np.asarray(bundle.group.table))
            assert G.order == bundle.group.order


class TestElementOrder:
    def test_identity_has_order_one(self):
        G = group_of("D(12)")
        assert element_order(G, G.identity) == 1

    def test_z12_element_5(self):
        G = group_of("Z(12)")
        assert element_order(G, 5) == 12

    @pytest.mark.parametrize("k", range(12))
    def test_zn_formula(self, k):
        # order of k in Z_12 is 12 / gcd(12, k)
        from math import gcd

        G = group_of("Z(12)")
        assert element_order(G, k) == 12 // gcd(12, k)

    def test_c2xc6_has_six_elements_of_order_six(self):
        G = group_of("Z(2)xZ(6)")
        gens = [x for sub in maximal_cyclic_subgroups(G) for x in sub.generators]
        assert len(gens) == 6
        assert all(element_order(G, x) == 6 for x in gens)


class TestGeneratedSubgroup:
    def test_z6_element_2(self):
        sub = generated_subgroup(group_of("Z(6)"), 2)
        assert sub == CyclicSubgroup(order=3, members=(0, 2, 4), generators=(2, 4))

    def test_identity_generates_trivial_subgroup(self):
        G = group_of("Q(8)")
        sub = generated_subgroup(G, G.identity)
        assert sub.members == (G.identity,)
        assert sub.generators == (G.identity,)

    def test_z12_element_5_generates_everything(self):
        sub = generated_subgroup(group_of("Z(12)"), 5)
        assert sub.order == 12
        assert len(sub.generators) == totient(12) == 4

    def test_member_count_equals_element_order(self, bundles):
        for expr in ("Z(24)", "D(16)", "S(4)", "Heis(3)"):
            G = bundles[expr].group
            for x in G.elements():
                assert len(generated_subgroup(G, x).members) == element_order(G, x)


class TestCyclicSubgroups:
    def test_c2xc6_census(self):
        subs = cyclic_subgroups(group_of("Z(2)xZ(6)"))
        by_order = {}
        for s in subs:
            by_order[s.order] = by_order.get(s.order, 0) + 1
        assert by_order == {1: 1, 2: 3, 3: 1, 6: 3}

    def test_zn_subgroups_match_divisors(self):
        subs = cyclic_subgroups(group_of("Z(12)"))
        assert [s.order for s in subs] == divisors(12)

    def test_trivial_group(self):
        assert len(cyclic_subgroups(group_of("Z(1)"))) == 1

    def test_totient_sum_is_group_order(self, bundles):
        for bundle in bundles.values():
            total = sum(totient(s.order) for s in cyclic_subgroups(bundle.group))
            assert total == bundle.group.order

    def test_every_subgroup_below_some_maximal(self):
        G = group_of("S(4)")
        maximal = [set(s.members) for s in maximal_cyclic_subgroups(G)]
        for sub in cyclic_subgroups(G):
            assert any(set(sub.members) <= m for m in maximal)


class TestMaximalCyclicSubgroups:
    def test_c2xc6(self):
        maxes = maximal_cyclic_subgroups(group_of("Z(2)xZ(6)"))
        assert [s.order for s in maxes] == [6, 6, 6]

    def test_cyclic_group_has_one(self):
        maxes = maximal_cyclic_subgroups(group_of("Z(30)"))
        assert len(maxes) == 1
        assert maxes[0].order == 30

    def test_s4_census(self):
        maxes = maximal_cyclic_subgroups(symmetric(4))
        counts = {}
        for s in maxes:
            counts[s.order] = counts.get(s.order, 0) + 1
        assert counts == {4: 3, 3: 4, 2: 6}
        assert len(maxes) == 13


class TestIsAbelian:
    def test_cyclic(self):
        assert is_abelian(group_of("Z(6)"))

    def test_s3(self):
        assert not is_abelian(symmetric(3))

    def test_heisenberg(self):
        assert not is_abelian(heisenberg(3))


class TestOrderStatistics:
    def test_c2xc6(self):
        assert order_statistics(group_of("Z(2)xZ(6)")) == {1: 1, 2: 3, 3: 2, 6: 6}

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_prime_cyclic(self, p):
        assert order_statistics(group_of(f"Z({p})")) == {1: 1, p: p - 1}

    def test_exponent_three_lookalikes(self):
        stats = {1: 1, 3: 26}
        assert order_statistics(group_of("Z(3)xZ(3)xZ(3)")) == stats
        assert order_statistics(heisenberg(3)) == stats

    def test_counts_are_totient_multiples(self, bundles):
        for bundle in bundles.values():
            stats = order_statistics(bundle.group)
            assert sum(stats.values()) == bundle.group.order
            for d, count in stats.items():
                assert count % totient(d) == 0
