"""Finite groups as explicit multiplication tables over integer element ids.

Elements are the integers 0..n-1 and every algebraic question reduces to
lookups in an n x n table (``table[x, y]`` is the product ``x * y``).  At the
sizes this library targets (a few hundred elements) the group axioms are
cheap to verify exhaustively, so :func:`validate_group` is the single gate
through which every table enters the system.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

import numpy as np

DEFAULT_ORDER_CAP = 512


class GroupTableError(ValueError):
    """A table failed validation; subclasses carry the witnessing entries."""


class EmptyTable(GroupTableError):
    pass


class NotClosed(GroupTableError):
    def __init__(self, x: int, y: int, value: int):
        self.x, self.y, self.value = x, y, value
        super().__init__(f"entry ({x},{y}) = {value} is not an element id")


class NoIdentity(GroupTableError):
    def __init__(self):
        super().__init__("no two-sided identity element")


class MissingInverse(GroupTableError):
    def __init__(self, x: int):
        self.x = x
        super().__init__(f"element {x} has no two-sided inverse")


class NotAssociative(GroupTableError):
    def __init__(self, x: int, y: int, z: int):
        self.x, self.y, self.z = x, y, z
        super().__init__(f"({x}*{y})*{z} != {x}*({y}*{z})")


class TooLarge(GroupTableError):
    def __init__(self, size: int, cap: int):
        self.size, self.cap = size, cap
        super().__init__(f"group order {size} exceeds the cap of {cap}")


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A validated finite group.  Immutable; safe to share between threads."""

    table: np.ndarray  # (n, n) int array, read-only
    identity: int
    inverse: np.ndarray  # (n,) int array, read-only

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def elements(self) -> range:
        return range(self.order)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


@dataclass(frozen=True, order=True)
class CyclicSubgroup:
    """A cyclic subgroup: its order, sorted member ids, and generator ids."""

    order: int
    members: tuple[int, ...]
    generators: tuple[int, ...]


def validate_group(table, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Check all four group axioms on a square table and wrap it.

    Raises :class:`EmptyTable`, :class:`NotClosed`, :class:`NoIdentity`,
    :class:`MissingInverse` or :class:`NotAssociative`, naming the entries
    that witness the failure.  Associativity is checked by the full triple
    loop (vectorised per row), which is affordable up to ``order_cap``.
    """
    arr = np.asarray(table)
    if arr.size == 0:
        raise EmptyTable("empty multiplication table")
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise GroupTableError(f"table must be square, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise GroupTableError("table entries must be integers")
    n = arr.shape[0]
    if n > order_cap:
        raise TooLarge(n, order_cap)

    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        x, y = map(int, bad[0])
        raise NotClosed(x, y, int(arr[x, y]))

    arr = arr.astype(np.int64, copy=True)
    ids = np.arange(n)
    identity = None
    for e in range(n):
        if np.array_equal(arr[e], ids) and np.array_equal(arr[:, e], ids):
            identity = e
            break
    if identity is None:
        raise NoIdentity()

    inverse = np.empty(n, dtype=np.int64)
    for x in range(n):
        ys = np.flatnonzero(arr[x] == identity)
        ys = [y for y in ys if arr[y, x] == identity]
        if not ys:
            raise MissingInverse(x)
        inverse[x] = ys[0]

    # (x*y)*z vs x*(y*z), one x at a time to keep memory flat
    for x in range(n):
        left = arr[arr[x], :]
        right = arr[x][arr]
        if not np.array_equal(left, right):
            y, z = map(int, np.argwhere(left != right)[0])
            raise NotAssociative(x, y, z)

    arr.setflags(write=False)
    inverse.setflags(write=False)
    return FiniteGroup(table=arr, identity=identity, inverse=inverse)


def element_order(G: FiniteGroup, x: int) -> int:
    """Smallest k >= 1 with x^k equal to the identity."""
    k, y = 1, x
    while y != G.identity:
        y = int(G.table[y, x])
        k += 1
    return k


def generated_subgroup(G: FiniteGroup, x: int) -> CyclicSubgroup:
    """The cyclic subgroup <x> with its generator set."""
    powers = [G.identity]  # powers[k] = x^k
    y = x
    while y != G.identity:
        powers.append(y)
        y = int(G.table[y, x])
    d = len(powers)
    gens = tuple(sorted(powers[k] for k in range(d) if gcd(k, d) == 1))
    return CyclicSubgroup(order=d, members=tuple(sorted(powers)), generators=gens)


def cyclic_subgroups(G: FiniteGroup) -> list[CyclicSubgroup]:
    """All distinct cyclic subgroups, sorted by (order, member list)."""
    seen: dict[tuple[int, ...], CyclicSubgroup] = {}
    for x in G.elements():
        sub = generated_subgroup(G, x)
        seen.setdefault(sub.members, sub)
    return sorted(seen.values(), key=lambda s: (s.order, s.members))


def maximal_cyclic_subgroups(G: FiniteGroup) -> list[CyclicSubgroup]:
    """The cyclic subgroups not properly contained in any other one."""
    subs = cyclic_subgroups(G)
    sets = [set(s.members) for s in subs]
    out = []
    for i, s in enumerate(subs):
        if not any(j != i and sets[i] < sets[j] for j in range(len(subs))):
            out.append(s)
    return out


def is_abelian(G: FiniteGroup) -> bool:
    return bool(np.array_equal(G.table, G.table.T))


def order_statistics(G: FiniteGroup) -> dict[int, int]:
    """Map each element order d to the number of elements of order d."""
    return dict(sorted(Counter(element_order(G, x) for x in G.elements()).items()))
