"""Relator presentations: bounded Thue rewriting, coset enumeration and ``C(L)``.

Relators are positive words and the quotient is taken in the free monoid:
``xuy ⇔ xy`` for every relator ``u``. Coset enumeration therefore works on
the monoid presentation; a letter whose action is not a permutation of the
closed table means condition (ii) fails.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .dfa import Word, show
from .errors import ConditionViolation, InternalError, SchemaError
from .graph import (
    LabeledDigraph,
    is_co_deterministic,
    is_deterministic,
    is_simple,
    is_strongly_connected,
)
from .groups import GroupTable

DEFAULT_MAX_COSETS = 10000
DEFAULT_MAX_LEN = 12
DEFAULT_MAX_STEPS = 10**6


def parse_word(w: str | Sequence[str]) -> Word:
    """A string is read one character per letter; a list is taken token by token."""
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


@dataclass(frozen=True)
class Presentation:
    alphabet: tuple
    relators: tuple

    def __init__(self, alphabet: Iterable[str], relators: Iterable[str | Sequence[str]]):
        alphabet = tuple(sorted(set(alphabet)))
        if not alphabet:
            raise SchemaError("a presentation needs a non-empty alphabet")
        rels = []
        for r in relators:
            w = parse_word(r)
            if not w:
                raise SchemaError("relators must be non-empty words")
            bad = [x for x in w if x not in alphabet]
            if bad:
                raise SchemaError(f"relator {show(w)} uses letters outside the alphabet: {bad}")
            if w not in rels:
                rels.append(w)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "relators", tuple(sorted(rels, key=lambda w: (len(w), w))))

    @property
    def letters(self) -> frozenset:
        """``A_L``: letters occurring in some relator."""
        return frozenset(x for r in self.relators for x in r)


# -- bounded rewriting -------------------------------------------------------------------


@dataclass(frozen=True)
class RewriteStep:
    word: Word  # the word after this step
    op: str  # "delete" or "insert"
    position: int
    relator: Word


@dataclass(frozen=True)
class RewriteTrace:
    start: Word
    steps: tuple

    @property
    def end(self) -> Word:
        return self.steps[-1].word if self.steps else self.start

    def __len__(self):
        return len(self.steps)

    def is_valid(self, p: Presentation) -> bool:
        w = self.start
        for st in self.steps:
            r, i = st.relator, st.position
            if r not in p.relators:
                return False
            if st.op == "delete":
                if w[i:i + len(r)] != r or w[:i] + w[i + len(r):] != st.word:
                    return False
            elif st.op == "insert":
                if w[:i] + r + w[i:] != st.word:
                    return False
            else:
                return False
            w = st.word
        return True


def _neighbours(p: Presentation, w: Word, max_len: int):
    for r in p.relators:
        n = len(r)
        for i in range(len(w) - n + 1):
            if w[i:i + n] == r:
                yield w[:i] + w[i + n:], "delete", i, r
        if len(w) + n <= max_len:
            for i in range(len(w) + 1):
                yield w[:i] + r + w[i:], "insert", i, r


def thue_reachable(
    p: Presentation,
    source,
    target,
    max_len: int = DEFAULT_MAX_LEN,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> RewriteTrace | None:
    """Breadth-first search for a derivation ``source ⇔* target`` through words of length ≤ ``max_len``.

    ``None`` only means nothing was found within the bounds.
    """
    if max_len <= 0 or max_steps <= 0:
        raise ValueError("bounds must be positive")
    src, dst = parse_word(source), parse_word(target)
    if len(src) > max_len or len(dst) > max_len:
        return None
    parent: dict[Word, tuple | None] = {src: None}
    todo = deque([src])
    expanded = 0
    while todo and expanded < max_steps:
        w = todo.popleft()
        if w == dst:
            steps = []
            while parent[w] is not None:
                prev, op, i, r = parent[w]
                steps.append(RewriteStep(w, op, i, r))
                w = prev
            return RewriteTrace(src, tuple(reversed(steps)))
        expanded += 1
        for nxt, op, i, r in _neighbours(p, w, max_len):
            if nxt not in parent:
                parent[nxt] = (w, op, i, r)
                todo.append(nxt)
    return None


def bounded_class(p: Presentation, max_len: int = DEFAULT_MAX_LEN, start="") -> frozenset:
    """Words of length ≤ ``max_len`` reachable from ``start`` without exceeding that length."""
    s = parse_word(start)
    seen = {s}
    todo = deque([s])
    while todo:
        w = todo.popleft()
        for nxt, *_ in _neighbours(p, w, max_len):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)


# -- coset enumeration ---------------------------------------------------------------------


@dataclass(frozen=True)
class CosetTable:
    """Closed enumeration: coset ``i`` is the class of ``words[i]``; ``action[i][j]`` is ``i·alphabet[j]``."""

    alphabet: tuple
    action: tuple
    words: tuple

    closed = True

    @property
    def size(self) -> int:
        return len(self.action)

    def act(self, c: int, word) -> int:
        for x in parse_word(word):
            c = self.action[c][self.alphabet.index(x)]
        return c

    def is_permutation(self, letter: str) -> bool:
        j = self.alphabet.index(letter)
        return len({row[j] for row in self.action}) == self.size

    def name(self, c: int) -> str:
        return "[" + "".join(self.words[c]) + "]"

    def group(self) -> GroupTable:
        """The quotient as a group table; requires every letter to act bijectively."""
        for x in self.alphabet:
            if not self.is_permutation(x):
                raise ConditionViolation("ii", x)
        names = [self.name(c) for c in range(self.size)]
        rows = [[self.act(c, self.words[d]) for d in range(self.size)] for c in range(self.size)]
        return GroupTable(tuple(names), rows, names[0])


@dataclass(frozen=True)
class Overflow:
    cosets: int
    limit: int

    closed = False

    def __bool__(self):
        return False


class _Enumerator:
    """Monoid coset enumeration with union-find coincidences."""

    def __init__(self, p: Presentation, max_cosets: int):
        self.p = p
        self.k = len(p.alphabet)
        self.rels = [tuple(p.alphabet.index(x) for x in r) for r in p.relators]
        self.max_cosets = max_cosets
        self.max_defined = max(20 * max_cosets, 1000)
        self.table: list[list[int | None]] = [[None] * self.k]
        self.parent = [0]
        self.live = 1

    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def new(self) -> int:
        if self.live >= self.max_cosets or len(self.table) >= self.max_defined:
            raise _Full
        self.table.append([None] * self.k)
        self.parent.append(len(self.parent))
        self.live += 1
        return len(self.table) - 1

    def target(self, c: int, j: int, define: bool) -> int | None:
        c = self.find(c)
        t = self.table[c][j]
        if t is None:
            if not define:
                return None
            t = self.new()
            self.table[c][j] = t
        return self.find(t)

    def trace(self, c: int, rel, define: bool) -> int | None:
        for j in rel:
            c = self.target(c, j, define)
            if c is None:
                return None
        return c

    def merge(self, x: int, y: int):
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            keep, drop = min(a, b), max(a, b)
            self.parent[drop] = keep
            self.live -= 1
            for j in range(self.k):
                t = self.table[drop][j]
                if t is None:
                    continue
                u = self.table[keep][j]
                if u is None:
                    self.table[keep][j] = t
                else:
                    queue.append((u, t))

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def run(self) -> bool:
        while True:
            c = 0
            while c < len(self.table):
                if self.alive(c):
                    for rel in self.rels:
                        d = self.trace(c, rel, define=True)
                        self.merge(c, d)
                        if not self.alive(c):
                            break
                    if self.alive(c):
                        for j in range(self.k):
                            self.target(c, j, define=True)
                c += 1
            if self._consistent():
                return True

    def _consistent(self) -> bool:
        for c in range(len(self.table)):
            if not self.alive(c):
                continue
            if any(self.table[c][j] is None for j in range(self.k)):
                return False
            for rel in self.rels:
                if self.trace(c, rel, define=False) != c:
                    return False
        return True

    def compact(self) -> CosetTable:
        start = self.find(0)
        ids = {start: 0}
        words: list[Word] = [()]
        order = [start]
        for c in order:
            for j in range(self.k):
                t = self.find(self.table[c][j])
                if t not in ids:
                    ids[t] = len(order)
                    order.append(t)
                    words.append(words[ids[c]] + (self.p.alphabet[j],))
        action = tuple(
            tuple(ids[self.find(self.table[c][j])] for j in range(self.k)) for c in order
        )
        return CosetTable(self.p.alphabet, action, tuple(words))


class _Full(Exception):
    pass


def todd_coxeter(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable | Overflow:
    """Enumerate the quotient monoid ``A*/⇔*`` of ``p`` or give up past ``max_cosets`` live cosets."""
    if max_cosets <= 0:
        raise ValueError("max_cosets must be positive")
    en = _Enumerator(p, max_cosets)
    try:
        en.run()
    except _Full:
        return Overflow(en.live, max_cosets)
    return en.compact()


def _partial_enumeration(p: Presentation, max_cosets: int) -> tuple[_Enumerator, bool]:
    en = _Enumerator(p, max_cosets)
    try:
        en.run()
        return en, True
    except _Full:
        return en, False


def cayley_of_presentation(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> LabeledDigraph | Overflow:
    """``C(L)`` for a presentation whose quotient is finite.

    Condition (i) fails when no letter occurs in a relator, (ii) when a
    letter does not act bijectively on the closed table, (iii) when two
    letters land in the same class.
    """
    if not p.letters:
        raise ConditionViolation("i", None)
    table = todd_coxeter(p, max_cosets)
    if isinstance(table, Overflow):
        return table
    for x in p.alphabet:
        if not table.is_permutation(x):
            raise ConditionViolation("ii", x)
    seen: dict[int, str] = {}
    for x in p.alphabet:
        c = table.act(0, (x,))
        if c in seen:
            raise ConditionViolation("iii", (seen[c], x))
        seen[c] = x
    g = LabeledDigraph(
        (table.name(c), x, table.name(table.act(c, (x,))))
        for c in range(table.size)
        for x in p.alphabet
    )
    for name, pred in (
        ("deterministic", is_deterministic),
        ("co_deterministic", is_co_deterministic),
        ("simple", is_simple),
        ("strongly_connected", is_strongly_connected),
    ):
        if not pred(g):
            raise InternalError(f"C(L) is not {name}")
    return g


# -- balls ----------------------------------------------------------------------------------


@dataclass(frozen=True)
class Ball:
    """Vertices within ``radius`` of the identity class and the edges between them.

    ``partial`` is set unless the ball is the whole, closed quotient. For an
    overflowing enumeration, classes are those known when the cap was hit:
    far-off identifications may be missing, so a ball near the cap can
    over-count vertices.
    """

    radius: int
    vertices: tuple
    edges: frozenset
    partial: bool
    closed: bool
    distance: dict = field(default_factory=dict)

    def graph(self) -> LabeledDigraph:
        return LabeledDigraph(self.edges)


def cayley_ball(p: Presentation, radius: int, max_cosets: int = DEFAULT_MAX_COSETS) -> Ball:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    en, closed = _partial_enumeration(p, max_cosets)
    start = en.find(0)
    dist = {start: 0}
    words: dict[int, Word] = {start: ()}
    order = [start]
    for c in order:
        if dist[c] == radius:
            continue
        for j, x in enumerate(p.alphabet):
            t = en.table[c][j]
            if t is None:
                continue
            t = en.find(t)
            if t not in dist:
                dist[t] = dist[c] + 1
                words[t] = words[c] + (x,)
                order.append(t)
    name = {c: "[" + "".join(words[c]) + "]" for c in order}
    edges = set()
    for c in order:
        for j, x in enumerate(p.alphabet):
            t = en.table[c][j]
            if t is not None and en.find(t) in name:
                edges.add((name[c], x, name[en.find(t)]))
    whole = closed and len(order) == en.live
    return Ball(
        radius,
        tuple(name[c] for c in order),
        frozenset(edges),
        partial=not whole,
        closed=closed,
        distance={name[c]: dist[c] for c in order},
    )
