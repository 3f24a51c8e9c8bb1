"""Finite groups as explicit multiplication tables, and a small corpus of them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import NonTotalTable, SchemaError
from .graph import Check


@dataclass(frozen=True)
class GroupTable:
    """``table[i][j]`` is the index of ``elements[i] · elements[j]``."""

    elements: tuple
    table: tuple
    identity: str

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise SchemaError("a group has at least one element")
        if len(set(elements)) != len(elements):
            raise SchemaError("repeated group element")
        n = len(elements)
        table = tuple(tuple(row) for row in self.table)
        if len(table) != n or any(len(row) != n for row in table):
            raise NonTotalTable(f"product table must be {n}x{n}")
        for i, row in enumerate(table):
            for j, k in enumerate(row):
                if not (isinstance(k, int) and 0 <= k < n):
                    raise NonTotalTable(f"cell ({elements[i]}, {elements[j]}) is not an element")
        if self.identity not in elements:
            raise SchemaError(f"identity {self.identity!r} is not an element")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_names(cls, elements: Sequence[str], product_rows, identity: str) -> GroupTable:
        """Build from a table of element names, as stored in group files."""
        elements = list(elements)
        idx = {e: i for i, e in enumerate(elements)}
        rows = []
        for i, row in enumerate(product_rows):
            if len(row) != len(elements):
                raise NonTotalTable(f"row {elements[i] if i < len(elements) else i} has {len(row)} cells")
            try:
                rows.append([idx[x] for x in row])
            except KeyError as exc:
                raise NonTotalTable(f"row {elements[i]}: unknown element {exc.args[0]!r}") from None
        return cls(tuple(elements), rows, identity)

    @classmethod
    def from_function(cls, elements: Sequence[str], mul, identity: str) -> GroupTable:
        idx = {e: i for i, e in enumerate(elements)}
        rows = [[idx[mul(x, y)] for y in elements] for x in elements]
        return cls(tuple(elements), rows, identity)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def mul(self, x: str, y: str) -> str:
        return self.elements[self.table[self.index[x]][self.index[y]]]

    def power(self, x: str, n: int) -> str:
        r = self.identity
        for _ in range(n):
            r = self.mul(r, x)
        return r

    @cached_property
    def inverse(self) -> dict[str, str]:
        e = self.index[self.identity]
        inv = {}
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                if self.table[i][j] == e:
                    inv[x] = y
                    break
        return inv

    def element_order(self, x: str) -> int:
        n, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            n += 1
            if n > self.order:
                raise SchemaError(f"{x} has no finite order: table is not a group")
        return n

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def generated(self, subset: Iterable[str]) -> frozenset:
        """Submonoid generated by ``subset``; equals the subgroup in a finite group."""
        gens = list(subset)
        seen = {self.identity}
        todo = [self.identity]
        while todo:
            x = todo.pop()
            for h in gens:
                y = self.mul(x, h)
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(seen)

    def generates(self, subset: Iterable[str]) -> bool:
        return len(self.generated(subset)) == self.order

    def product_rows(self) -> list[list[str]]:
        return [[self.elements[k] for k in row] for row in self.table]


def verify_group(g: GroupTable) -> Check:
    """Associativity, identity and inverses, checked exhaustively."""
    n = g.order
    t = g.table
    e = g.index[g.identity]
    for i in range(n):
        if t[e][i] != i or t[i][e] != i:
            return Check(False, ("identity", g.elements[i]))
    for i in range(n):
        if not any(t[i][j] == e and t[j][i] == e for j in range(n)):
            return Check(False, ("inverse", g.elements[i]))
    for i in range(n):
        ti = t[i]
        for j in range(n):
            ij = ti[j]
            tj = t[j]
            tij = t[ij]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    return Check(False, ("associativity", (g.elements[i], g.elements[j], g.elements[k])))
    return Check(True)


def is_isomorphic(g: GroupTable, h: GroupTable) -> bool:
    """Brute-force group isomorphism for small groups (via generator images)."""
    if g.order != h.order or g.is_abelian() != h.is_abelian():
        return False
    if sorted(g.element_order(x) for x in g.elements) != sorted(h.element_order(x) for x in h.elements):
        return False
    gens = _small_generating_set(g)
    words = _words_for(g, gens)
    cands = [[y for y in h.elements if h.element_order(y) == g.element_order(x)] for x in gens]
    for images in product(*cands):
        img = dict(zip(gens, images))
        phi = {}
        for x, w in words.items():
            y = h.identity
            for c in w:
                y = h.mul(y, img[c])
            phi[x] = y
        if len(set(phi.values())) != g.order:
            continue
        if all(phi[g.mul(x, y)] == h.mul(phi[x], phi[y]) for x in g.elements for y in g.elements):
            return True
    return False


def _small_generating_set(g: GroupTable) -> list[str]:
    gens: list[str] = []
    span = frozenset([g.identity])
    for x in sorted(g.elements, key=lambda x: -g.element_order(x)):
        if x not in span:
            gens.append(x)
            span = g.generated(gens)
        if len(span) == g.order:
            break
    return gens


def _words_for(g: GroupTable, gens: list[str]) -> dict[str, tuple]:
    words = {g.identity: ()}
    todo = [g.identity]
    while todo:
        x = todo.pop(0)
        for h in gens:
            y = g.mul(x, h)
            if y not in words:
                words[y] = words[x] + (h,)
                todo.append(y)
    return words


# -- corpus ---------------------------------------------------------------------------


def cyclic(n: int) -> GroupTable:
    els = [str(i) for i in range(n)]
    return GroupTable.from_function(els, lambda x, y: str((int(x) + int(y)) % n), "0")


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    els = [f"({x},{y})" for x in g.elements for y in h.elements]
    pairs = {f"({x},{y})": (x, y) for x in g.elements for y in h.elements}

    def mul(p, q):
        (x1, y1), (x2, y2) = pairs[p], pairs[q]
        return f"({g.mul(x1, x2)},{h.mul(y1, y2)})"

    return GroupTable.from_function(els, mul, f"({g.identity},{h.identity})")


def permutation_group(generators: Sequence[Sequence[int]]) -> GroupTable:
    """Closure of permutations in one-line notation (0-based); names are 1-based one-line strings."""
    n = len(generators[0])
    ident = tuple(range(n))
    seen = {ident}
    todo = [ident]
    while todo:
        p = todo.pop()
        for g in generators:
            q = tuple(p[g[i]] for i in range(n))
            if q not in seen:
                seen.add(q)
                todo.append(q)
    perms = sorted(seen)

    def name(p):
        return "".join(str(i + 1) for i in p)

    names = {name(p): p for p in perms}

    def mul(x, y):
        # x·y applies y first, then x
        px, py = names[x], names[y]
        return name(tuple(px[py[i]] for i in range(n)))

    return GroupTable.from_function([name(p) for p in perms], mul, name(ident))


def symmetric3() -> GroupTable:
    return permutation_group([(1, 0, 2), (1, 2, 0)])


def dihedral4() -> GroupTable:
    return permutation_group([(1, 2, 3, 0), (3, 2, 1, 0)])


def klein4() -> GroupTable:
    return direct_product(cyclic(2), cyclic(2))


def quaternion() -> GroupTable:
    units = {"1": (1, "1"), "-1": (-1, "1")}
    for u in "ijk":
        units[u] = (1, u)
        units["-" + u] = (-1, u)
    base = {
        ("1", "1"): (1, "1"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    for u in "ijk":
        base[("1", u)] = (1, u)
        base[(u, "1")] = (1, u)

    def mul(x, y):
        sx, ux = units[x]
        sy, uy = units[y]
        s, u = base[(ux, uy)]
        s *= sx * sy
        return u if s == 1 else "-" + u

    return GroupTable.from_function(["1", "-1", "i", "-i", "j", "-j", "k", "-k"], mul, "1")


def corpus() -> dict[str, GroupTable]:
    """Every table of order at most 8 used by the round-trip suites."""
    groups = {f"Z{n}": cyclic(n) for n in range(1, 9)}
    groups["Z2xZ2"] = klein4()
    groups["Z2xZ2xZ2"] = direct_product(klein4(), cyclic(2))
    groups["Z4xZ2"] = direct_product(cyclic(4), cyclic(2))
    groups["S3"] = symmetric3()
    groups["D4"] = dihedral4()
    groups["Q8"] = quaternion()
    return groups
