"""Constructors for the groups the library works with, plus a small
expression language for naming them on the command line.

Grammar:  Expr := Term ('x' Term)* with 'x' the direct product (left
associative); Term := NAME '(' int (',' int)* ')' | 'cayley:' path |
'G16(' int ')'; NAME in {Z, D, Q, SD, M, S, A, Heis}.  Whitespace is
insignificant except inside a cayley path, which runs to the next
whitespace or the end of the string.

Two-generator presentations (dihedral, quaternion, semidihedral, modular)
are realised as normal-form enumerations b^j a^i with their collected
rewrite rules, not by generic rewriting.  Every constructed table passes
:func:`~latgraph.group_core.validate_group` before it is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .group_core import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    TooLarge,
    validate_group,
)
from .lattice import _is_prime

DEFAULT_CLOSURE_CAP = 5000


class InvalidParameter(ValueError):
    pass


class GroupExprError(ValueError):
    pass


class ExprSyntaxError(GroupExprError):
    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"syntax error at position {position}: expected {expected}")


class UnknownConstructor(GroupExprError):
    def __init__(self, name: str, position: int = 0):
        self.name = name
        self.position = position
        super().__init__(f"unknown constructor {name!r} at position {position}")


class ArityError(GroupExprError):
    def __init__(self, name: str, expected: int, got: int):
        self.name, self.expected, self.got = name, expected, got
        super().__init__(f"{name} takes {expected} argument(s), got {got}")


class CayleyParseError(ValueError):
    def __init__(self, row: int, col: int, message: str):
        self.row, self.col = row, col
        super().__init__(f"row {row}, column {col}: {message}")


# ---------------------------------------------------------------------------
# expression AST


class GroupExpr:
    """Base class for parsed group expressions."""


@dataclass(frozen=True)
class Cyclic(GroupExpr):
    n: int


@dataclass(frozen=True)
class Dihedral(GroupExpr):
    order: int


@dataclass(frozen=True)
class GeneralizedQuaternion(GroupExpr):
    order: int


@dataclass(frozen=True)
class Semidihedral(GroupExpr):
    order: int


@dataclass(frozen=True)
class ModularGroup(GroupExpr):
    p: int
    n: int


@dataclass(frozen=True)
class Heisenberg(GroupExpr):
    p: int


@dataclass(frozen=True)
class Symmetric(GroupExpr):
    n: int


@dataclass(frozen=True)
class Alternating(GroupExpr):
    n: int


@dataclass(frozen=True)
class DirectProduct(GroupExpr):
    left: GroupExpr
    right: GroupExpr


@dataclass(frozen=True)
class FromCayleyFile(GroupExpr):
    path: str


@dataclass(frozen=True)
class FromPermutations(GroupExpr):
    degree: int
    generators: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Order16(GroupExpr):
    index: int  # 1..14


@dataclass(frozen=True)
class PermGenerators:
    degree: int
    generators: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class NamedGroup:
    """A validated group plus display metadata for element labelling."""

    group: FiniteGroup
    name: str
    element_names: tuple[str, ...]


# ---------------------------------------------------------------------------
# parser

_NAME_ARITY = {"Z": 1, "D": 1, "Q": 1, "SD": 1, "M": 2, "S": 1, "A": 1, "Heis": 1, "G16": 1}

_CONSTRUCTORS = {
    "Z": lambda a: Cyclic(a[0]),
    "D": lambda a: Dihedral(a[0]),
    "Q": lambda a: GeneralizedQuaternion(a[0]),
    "SD": lambda a: Semidihedral(a[0]),
    "M": lambda a: ModularGroup(a[0], a[1]),
    "S": lambda a: Symmetric(a[0]),
    "A": lambda a: Alternating(a[0]),
    "Heis": lambda a: Heisenberg(a[0]),
    "G16": lambda a: Order16(a[0]),
}


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ExprSyntaxError(start, "an integer")
        return int(self.text[start : self.pos])

    def take_name(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.pos += 1
        if self.pos == start:
            raise ExprSyntaxError(start, "a term")
        return self.text[start : self.pos], start

    def take_path(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and not self.text[self.pos].isspace():
            self.pos += 1
        if self.pos == start:
            raise ExprSyntaxError(start, "a file path")
        return self.text[start : self.pos]

    def expect(self, char: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            raise ExprSyntaxError(self.pos, f"'{char}'")
        self.pos += 1


def parse_group_expr(text: str) -> GroupExpr:
    """Parse an expression like ``"Z(2)xZ(6)"`` or ``"cayley:groups/z4.csv"``."""
    lex = _Lexer(text)
    expr = _parse_term(lex)
    while True:
        lex.skip_ws()
        if lex.pos < len(lex.text) and lex.text[lex.pos] == "x":
            lex.pos += 1
            expr = DirectProduct(expr, _parse_term(lex))
        else:
            break
    lex.skip_ws()
    if lex.pos != len(lex.text):
        raise ExprSyntaxError(lex.pos, "'x' or end of expression")
    return expr


def _parse_term(lex: _Lexer) -> GroupExpr:
    lex.skip_ws()
    if lex.pos >= len(lex.text) or not lex.text[lex.pos].isalpha():
        raise ExprSyntaxError(lex.pos, "a term")
    if lex.text[lex.pos] == "x":
        # 'x' is reserved for the direct product
        raise ExprSyntaxError(lex.pos, "a term")
    name, start = lex.take_name()
    if name == "cayley" and lex.pos < len(lex.text) and lex.text[lex.pos] == ":":
        lex.pos += 1
        return FromCayleyFile(lex.take_path())
    if name not in _NAME_ARITY:
        raise UnknownConstructor(name, start)
    lex.expect("(")
    args = [lex.take_int()]
    while lex.peek() == ",":
        lex.expect(",")
        args.append(lex.take_int())
    lex.expect(")")
    if len(args) != _NAME_ARITY[name]:
        raise ArityError(name, _NAME_ARITY[name], len(args))
    return _CONSTRUCTORS[name](args)


def format_group_expr(expr: GroupExpr) -> str:
    """Canonical text form; ``parse_group_expr`` round-trips it."""
    if isinstance(expr, Cyclic):
        return f"Z({expr.n})"
    if isinstance(expr, Dihedral):
        return f"D({expr.order})"
    if isinstance(expr, GeneralizedQuaternion):
        return f"Q({expr.order})"
    if isinstance(expr, Semidihedral):
        return f"SD({expr.order})"
    if isinstance(expr, ModularGroup):
        return f"M({expr.p},{expr.n})"
    if isinstance(expr, Heisenberg):
        return f"Heis({expr.p})"
    if isinstance(expr, Symmetric):
        return f"S({expr.n})"
    if isinstance(expr, Alternating):
        return f"A({expr.n})"
    if isinstance(expr, Order16):
        return f"G16({expr.index})"
    if isinstance(expr, FromCayleyFile):
        return f"cayley:{expr.path}"
    if isinstance(expr, FromPermutations):
        return f"perms(degree={expr.degree},count={len(expr.generators)})"
    if isinstance(expr, DirectProduct):
        return f"{format_group_expr(expr.left)}x{format_group_expr(expr.right)}"
    raise TypeError(f"not a group expression: {expr!r}")


# ---------------------------------------------------------------------------
# table builders (internal: return table + element names)


def _cyclic_data(n: int) -> tuple[np.ndarray, list[str]]:
    if n < 1:
        raise InvalidParameter(f"cyclic group order must be >= 1, got {n}")
    ids = np.arange(n)
    table = (ids[:, None] + ids[None, :]) % n
    return table, [str(i) for i in range(n)]


def _two_generator_data(
    m: int, outer: int, mul, names: tuple[str, str]
) -> tuple[np.ndarray, list[str]]:
    """Table over normal forms b^j a^i (i < m, j < outer, id = j*m + i).

    ``mul(j, i, l, k)`` returns the normal form of (b^j a^i)(b^l a^k) as a
    pair (j'', i''); each constructor supplies its collected rewrite rule.
    """
    n = m * outer
    table = np.zeros((n, n), dtype=np.int64)
    a_name, b_name = names
    for j in range(outer):
        for i in range(m):
            for l in range(outer):
                for k in range(m):
                    jj, ii = mul(j, i, l, k)
                    table[j * m + i, l * m + k] = jj * m + ii
    labels = []
    for j in range(outer):
        for i in range(m):
            b_part = "" if j == 0 else (b_name if j == 1 else f"{b_name}{j}")
            a_part = "" if i == 0 else (f"{a_name}{i}" if i > 1 else a_name)
            labels.append((b_part + a_part) or "e")
    return table, labels


def _dihedral_data(order: int) -> tuple[np.ndarray, list[str]]:
    if order < 4 or order % 2:
        raise InvalidParameter(f"dihedral order must be an even integer >= 4, got {order}")
    m = order // 2

    def mul(j, i, l, k):
        return (j + l) % 2, (i * (-1) ** l + k) % m

    return _two_generator_data(m, 2, mul, ("r", "s"))


def _quaternion_data(order: int) -> tuple[np.ndarray, list[str]]:
    if order < 8 or order & (order - 1):
        raise InvalidParameter(
            f"generalized quaternion order must be a power of 2 >= 8, got {order}"
        )
    m = order // 2

    # elements a^i b^j; b^2 = a^(m/2), b a b^-1 = a^-1
    def mul(j, i, l, k):
        ii = (i * (-1) ** l + k) % m
        if j and l:
            ii = (ii + m // 2) % m
        return (j + l) % 2, ii

    return _two_generator_data(m, 2, mul, ("a", "b"))


def _semidihedral_data(order: int) -> tuple[np.ndarray, list[str]]:
    if order < 16 or order & (order - 1):
        raise InvalidParameter(
            f"semidihedral order must be a power of 2 >= 16, got {order}"
        )
    m = order // 2
    t = m // 2 - 1  # conjugation exponent: x a x = a^t

    def mul(j, i, l, k):
        return (j + l) % 2, (i * pow(t, l, m) + k) % m

    return _two_generator_data(m, 2, mul, ("a", "x"))


def _modular_data(p: int, n: int) -> tuple[np.ndarray, list[str]]:
    if not _is_prime(p) or n < 3:
        raise InvalidParameter(f"modular group needs a prime p and n >= 3, got p={p}, n={n}")
    m = p ** (n - 1)
    t = 1 + p ** (n - 2)

    def mul(j, i, l, k):
        return (j + l) % p, (i * pow(t, l, m) + k) % m

    return _two_generator_data(m, p, mul, ("a", "x"))


def _heisenberg_data(p: int) -> tuple[np.ndarray, list[str]]:
    if p == 2 or not _is_prime(p):
        raise InvalidParameter(f"Heisenberg group needs an odd prime, got {p}")
    n = p**3
    table = np.zeros((n, n), dtype=np.int64)
    labels = []

    def pack(a, b, c):
        return (a * p + b) * p + c

    for a1 in range(p):
        for b1 in range(p):
            for c1 in range(p):
                labels.append(f"({a1},{b1},{c1})")
                for a2 in range(p):
                    for b2 in range(p):
                        for c2 in range(p):
                            table[pack(a1, b1, c1), pack(a2, b2, c2)] = pack(
                                (a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p
                            )
    return table, labels


def _perm_cycles(perm: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, i = [start], perm[start]
        while i != start:
            cycle.append(i)
            seen.add(i)
            i = perm[i]
        parts.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(parts) or "e"


def _closure_data(
    degree: int,
    generators: tuple[tuple[int, ...], ...],
    closure_cap: int,
) -> tuple[np.ndarray, list[str]]:
    for g in generators:
        if sorted(g) != list(range(degree)):
            raise InvalidParameter(f"{g} is not a permutation of 0..{degree - 1}")
    identity = tuple(range(degree))
    elems = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        u = queue.popleft()
        for g in generators:
            w = tuple(u[g[i]] for i in range(degree))
            if w not in index:
                if len(elems) >= closure_cap:
                    raise TooLarge(len(elems) + 1, closure_cap)
                index[w] = len(elems)
                elems.append(w)
                queue.append(w)
    n = len(elems)
    table = np.zeros((n, n), dtype=np.int64)
    for xi, x in enumerate(elems):
        for yi, y in enumerate(elems):
            table[xi, yi] = index[tuple(x[y[i]] for i in range(degree))]
    return table, [_perm_cycles(p) for p in elems]


def _product_data(
    tg: np.ndarray, names_g: list[str], th: np.ndarray, names_h: list[str], order_cap: int
) -> tuple[np.ndarray, list[str]]:
    ng, nh = tg.shape[0], th.shape[0]
    if ng * nh > order_cap:
        raise TooLarge(ng * nh, order_cap)
    table = (tg[:, None, :, None] * nh + th[None, :, None, :]).reshape(ng * nh, ng * nh)
    names = [f"({a},{b})" for a in names_g for b in names_h]
    return table, names


_SYM_GENERATORS = {
    1: [],
    2: [(1, 0)],
}
for _n in range(3, 7):
    _SYM_GENERATORS[_n] = [
        tuple([1, 0] + list(range(2, _n))),
        tuple(list(range(1, _n)) + [0]),
    ]

_ALT_GENERATORS = {
    2: [],
    3: [(1, 2, 0)],
}
for _n in range(4, 7):
    _three = tuple([1, 2, 0] + list(range(3, _n)))
    if _n % 2:
        _ALT_GENERATORS[_n] = [_three, tuple(list(range(1, _n)) + [0])]
    else:
        _ALT_GENERATORS[_n] = [_three, tuple([0] + list(range(2, _n)) + [1])]


def _symmetric_data(n: int) -> tuple[np.ndarray, list[str]]:
    if n not in _SYM_GENERATORS:
        raise InvalidParameter(f"symmetric group supported for degree 1..6, got {n}")
    return _closure_data(max(n, 1), tuple(_SYM_GENERATORS[n]), DEFAULT_CLOSURE_CAP)


def _alternating_data(n: int) -> tuple[np.ndarray, list[str]]:
    if n not in _ALT_GENERATORS:
        raise InvalidParameter(f"alternating group supported for degree 2..6, got {n}")
    return _closure_data(max(n, 1), tuple(_ALT_GENERATORS[n]), DEFAULT_CLOSURE_CAP)


def _cayley_csv_data(path: str) -> tuple[np.ndarray, list[str]]:
    text = Path(path).read_text()
    rows = [line for line in text.splitlines() if line.strip()]
    n = len(rows)
    table = np.zeros((n, n), dtype=np.int64)
    for r, line in enumerate(rows):
        cells = line.replace(",", " ").split()
        if len(cells) != n:
            raise CayleyParseError(r, len(cells), f"expected {n} entries, found {len(cells)}")
        for c, cell in enumerate(cells):
            try:
                table[r, c] = int(cell)
            except ValueError:
                raise CayleyParseError(r, c, f"not an integer: {cell!r}") from None
    return table, [str(i) for i in range(n)]


# ---------------------------------------------------------------------------
# embedded order-16 data
#
# The three order-16 groups without presentation constructors ship as
# permutation generators (left-regular action, degree 16).  Correctness is
# established by the test suite: order, abelianness, order statistics and
# pairwise separation through the graph machinery.

ORDER16_PERM_RECORDS = [
    {
        "name": "Z4:Z4",
        "degree": 16,
        "generators": [
            [1, 2, 3, 0, 5, 6, 7, 4, 9, 10, 11, 8, 13, 14, 15, 12],
            [4, 7, 6, 5, 8, 11, 10, 9, 12, 15, 14, 13, 0, 3, 2, 1],
        ],
    },
    {
        "name": "(Z4xZ2):Z2",
        "degree": 16,
        "generators": [
            [1, 2, 3, 0, 5, 6, 7, 4, 9, 10, 11, 8, 13, 14, 15, 12],
            [8, 13, 10, 15, 12, 9, 14, 11, 0, 5, 2, 7, 4, 1, 6, 3],
        ],
    },
    {
        "name": "D8oZ4",
        "degree": 16,
        "generators": [
            [1, 0, 7, 14, 5, 4, 11, 2, 9, 8, 15, 6, 13, 12, 3, 10],
            [3, 6, 13, 0, 7, 10, 1, 4, 11, 14, 5, 8, 15, 2, 9, 12],
            [4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3],
        ],
    },
]


# ---------------------------------------------------------------------------
# public constructors


def _finish(data: tuple[np.ndarray, list[str]], order_cap: int) -> FiniteGroup:
    table, _ = data
    return validate_group(table, order_cap=order_cap)


def cyclic_group(n: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Z_n with table[i][j] = (i + j) mod n."""
    return _finish(_cyclic_data(n), order_cap)


def dihedral(order: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Dihedral group of the given (even, >= 4) order."""
    return _finish(_dihedral_data(order), order_cap)


def generalized_quaternion(order: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Generalized quaternion group; order a power of two, >= 8."""
    return _finish(_quaternion_data(order), order_cap)


def semidihedral(order: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Semidihedral group; order a power of two, >= 16."""
    return _finish(_semidihedral_data(order), order_cap)


def modular_group(p: int, n: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """The order-p^n group <x, a | x^p = a^(p^(n-1)) = 1, x^-1 a x = a^(1+p^(n-2))>."""
    return _finish(_modular_data(p, n), order_cap)


def heisenberg(p: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Unitriangular 3x3 matrices mod an odd prime p: order p^3, exponent p."""
    return _finish(_heisenberg_data(p), order_cap)


def symmetric(n: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Symmetric group on n points (1 <= n <= 6) via generator closure."""
    return _finish(_symmetric_data(n), order_cap)


def alternating(n: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Alternating group on n points (2 <= n <= 6) via generator closure."""
    return _finish(_alternating_data(n), order_cap)


def direct_product(
    G: FiniteGroup, H: FiniteGroup, *, order_cap: int = DEFAULT_ORDER_CAP
) -> FiniteGroup:
    """Direct product; element (g, h) gets id g*|H| + h."""
    ng, nh = G.order, H.order
    data = _product_data(
        np.asarray(G.table), [str(i) for i in range(ng)],
        np.asarray(H.table), [str(i) for i in range(nh)],
        order_cap,
    )
    return _finish(data, order_cap)


def from_permutations(
    gens: PermGenerators,
    *,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """Breadth-first closure of permutation generators, indexed by discovery."""
    return _finish(_closure_data(gens.degree, gens.generators, closure_cap), order_cap)


def from_cayley_csv(path: str, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Load and validate an n x n Cayley table (comma or whitespace separated)."""
    return _finish(_cayley_csv_data(path), order_cap)


def build_group(
    expr: GroupExpr,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
) -> NamedGroup:
    """Build the group an expression describes, with element-name metadata."""
    table, names = _build_data(expr, order_cap, closure_cap)
    group = validate_group(table, order_cap=order_cap)
    return NamedGroup(group=group, name=format_group_expr(expr), element_names=tuple(names))


def _build_data(expr: GroupExpr, order_cap: int, closure_cap: int):
    if isinstance(expr, Cyclic):
        return _cyclic_data(expr.n)
    if isinstance(expr, Dihedral):
        return _dihedral_data(expr.order)
    if isinstance(expr, GeneralizedQuaternion):
        return _quaternion_data(expr.order)
    if isinstance(expr, Semidihedral):
        return _semidihedral_data(expr.order)
    if isinstance(expr, ModularGroup):
        return _modular_data(expr.p, expr.n)
    if isinstance(expr, Heisenberg):
        return _heisenberg_data(expr.p)
    if isinstance(expr, Symmetric):
        return _symmetric_data(expr.n)
    if isinstance(expr, Alternating):
        return _alternating_data(expr.n)
    if isinstance(expr, FromCayleyFile):
        return _cayley_csv_data(expr.path)
    if isinstance(expr, FromPermutations):
        return _closure_data(expr.degree, expr.generators, closure_cap)
    if isinstance(expr, Order16):
        if not 1 <= expr.index <= 14:
            raise InvalidParameter(f"G16 index must be 1..14, got {expr.index}")
        named = order16_catalog()[expr.index - 1]
        return np.asarray(named.group.table), list(named.element_names)
    if isinstance(expr, DirectProduct):
        tl, nl = _build_data(expr.left, order_cap, closure_cap)
        tr, nr = _build_data(expr.right, order_cap, closure_cap)
        return _product_data(tl, nl, tr, nr, order_cap)
    raise TypeError(f"not a group expression: {expr!r}")


def order16_catalog() -> list[NamedGroup]:
    """All 14 groups of order 16: five abelian, nine non-abelian."""
    entries: list[NamedGroup] = []

    def add(name: str, data: tuple[np.ndarray, list[str]]) -> None:
        group = validate_group(data[0], order_cap=16)
        entries.append(NamedGroup(group=group, name=name, element_names=tuple(data[1])))

    def prod(*factors: int) -> tuple[np.ndarray, list[str]]:
        table, names = _cyclic_data(factors[0])
        for f in factors[1:]:
            table, names = _product_data(table, names, *_cyclic_data(f), 16)
        return table, names

    add("Z16", prod(16))
    add("Z8xZ2", prod(8, 2))
    add("Z4xZ4", prod(4, 4))
    add("Z4xZ2xZ2", prod(4, 2, 2))
    add("Z2xZ2xZ2xZ2", prod(2, 2, 2, 2))
    add("D16", _dihedral_data(16))
    add("Q16", _quaternion_data(16))
    add("SD16", _semidihedral_data(16))
    add("M(2,4)", _modular_data(2, 4))
    add("D8xZ2", _product_data(*_dihedral_data(8), *_cyclic_data(2), 16))
    add("Q8xZ2", _product_data(*_quaternion_data(8), *_cyclic_data(2), 16))
    for record in ORDER16_PERM_RECORDS:
        gens = tuple(tuple(g) for g in record["generators"])
        add(record["name"], _closure_data(record["degree"], gens, DEFAULT_CLOSURE_CAP))
    return entries
