"""Complete deterministic automata over a finite alphabet.

Regular languages (residuals, path and cycle languages) are carried as
:class:`Dfa` values. States are dense integers ``0..n-1`` and the transition
function is total.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product as _product
from typing import Iterable, Iterator, Sequence

from .errors import EmptyLanguage, NonTotalTable, SchemaError

Word = tuple[str, ...]


def as_word(w: Sequence[str]) -> Word:
    """Normalise a word; a plain string is read one character per letter."""
    return tuple(w)


def show(w: Sequence[str]) -> str:
    """Render a word for humans: letters run together when all are single characters."""
    if not w:
        return "ε"
    if all(len(a) == 1 for a in w):
        return "".join(w)
    return ".".join(w)


@dataclass(frozen=True)
class Dfa:
    alphabet: tuple
    delta: tuple
    start: int
    accepting: frozenset
    sink: int | None = None

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise SchemaError(f"repeated letter in alphabet {alphabet!r}")
        delta = tuple(tuple(row) for row in self.delta)
        n = len(delta)
        if n == 0:
            raise SchemaError("a DFA needs at least one state")
        for q, row in enumerate(delta):
            if len(row) != len(alphabet):
                raise NonTotalTable(f"state {q} has {len(row)} transitions, expected {len(alphabet)}")
            for t in row:
                if not 0 <= t < n:
                    raise NonTotalTable(f"state {q} has a transition to unknown state {t}")
        if not 0 <= self.start < n:
            raise SchemaError(f"start state {self.start} out of range")
        acc = frozenset(self.accepting)
        if any(not 0 <= q < n for q in acc):
            raise SchemaError("accepting state out of range")
        if self.sink is not None:
            if self.sink in acc or any(t != self.sink for t in delta[self.sink]):
                raise SchemaError(f"sink {self.sink} is not an absorbing rejecting state")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "accepting", acc)

    @property
    def n(self) -> int:
        return len(self.delta)

    @cached_property
    def index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    def step(self, q: int, a: str) -> int | None:
        i = self.index.get(a)
        if i is None:
            return None
        return self.delta[q][i]

    def run(self, word: Sequence[str], q: int | None = None) -> int | None:
        """State reached from ``q`` (default: start) by ``word``; None if a letter is foreign."""
        q = self.start if q is None else q
        for a in word:
            q = self.step(q, a)
            if q is None:
                return None
        return q

    def accepts(self, word: Sequence[str], q: int | None = None) -> bool:
        return self.run(word, q) in self.accepting

    __contains__ = accepts

    # -- structure ---------------------------------------------------------

    def reachable_states(self, q: int | None = None) -> list[int]:
        q = self.start if q is None else q
        seen = {q}
        order = [q]
        for p in order:
            for t in self.delta[p]:
                if t not in seen:
                    seen.add(t)
                    order.append(t)
        return order

    @cached_property
    def live_states(self) -> frozenset:
        """States from which some accepting state is reachable."""
        back: list[set[int]] = [set() for _ in range(self.n)]
        for p, row in enumerate(self.delta):
            for t in row:
                back[t].add(p)
        seen = set(self.accepting)
        todo = deque(seen)
        while todo:
            t = todo.popleft()
            for p in back[t]:
                if p not in seen:
                    seen.add(p)
                    todo.append(p)
        return frozenset(seen)

    def is_empty(self) -> bool:
        return self.start not in self.live_states

    def with_start(self, q: int) -> Dfa:
        return Dfa(self.alphabet, self.delta, q, self.accepting, self.sink)

    def with_accepting(self, acc: Iterable[int]) -> Dfa:
        return Dfa(self.alphabet, self.delta, self.start, frozenset(acc), None).normalized()

    def complement(self) -> Dfa:
        return Dfa(
            self.alphabet, self.delta, self.start, frozenset(range(self.n)) - self.accepting
        ).normalized()

    def normalized(self) -> Dfa:
        """Recompute the designated sink (an absorbing rejecting state), if any."""
        sink = None
        for q, row in enumerate(self.delta):
            if q not in self.accepting and all(t == q for t in row):
                sink = q
                break
        return Dfa(self.alphabet, self.delta, self.start, self.accepting, sink)

    def with_alphabet(self, alphabet: Iterable[str]) -> Dfa:
        """Extend to a larger alphabet; new letters lead to a (possibly new) sink."""
        alphabet = tuple(alphabet)
        missing = set(self.alphabet) - set(alphabet)
        if missing:
            raise SchemaError(f"alphabet {alphabet!r} lacks letters {sorted(missing)!r}")
        if alphabet == self.alphabet:
            return self
        sink = self.sink
        rows = [list(r) for r in self.delta]
        if sink is None and len(alphabet) > len(self.alphabet):
            sink = len(rows)
            rows.append([sink] * len(self.alphabet))
        delta = []
        for row in rows:
            delta.append(tuple(row[self.index[a]] if a in self.index else sink for a in alphabet))
        return Dfa(alphabet, delta, self.start, self.accepting, sink)

    # -- minimisation --------------------------------------------------------

    def minimize(self) -> Dfa:
        """Minimal complete DFA of the language, states numbered in BFS order."""
        reach = self.reachable_states()
        classes = _hopcroft(self, reach)
        block = {q: classes[q] for q in reach}
        # renumber blocks by BFS order from start, letters in alphabet order
        order: dict[int, int] = {}
        todo = deque([self.start])
        order[block[self.start]] = 0
        reps = {block[self.start]: self.start}
        while todo:
            q = todo.popleft()
            for t in self.delta[q]:
                b = block[t]
                if b not in order:
                    order[b] = len(order)
                    reps[b] = t
                    todo.append(t)
        delta = [None] * len(order)
        acc = set()
        for b, i in order.items():
            r = reps[b]
            delta[i] = tuple(order[block[t]] for t in self.delta[r])
            if r in self.accepting:
                acc.add(i)
        return Dfa(self.alphabet, delta, 0, frozenset(acc)).normalized()

    # -- language operations ---------------------------------------------------

    def residual(self, word: Sequence[str]) -> Dfa:
        """DFA of ``u⁻¹L``; a foreign letter gives the empty language."""
        q = self.run(word)
        if q is None:
            return empty_language(self.alphabet)
        return self.with_start(q)

    def shortest_word(self) -> Word | None:
        """Shortest accepted word (first in alphabet order among those), or None."""
        if self.start in self.accepting:
            return ()
        parent: dict[int, tuple[int, str]] = {self.start: (-1, "")}
        todo = deque([self.start])
        while todo:
            q = todo.popleft()
            for a, t in zip(self.alphabet, self.delta[q]):
                if t not in parent:
                    parent[t] = (q, a)
                    if t in self.accepting:
                        return _trace(parent, t)
                    todo.append(t)
        return None

    def words(self, max_len: int) -> Iterator[Word]:
        """Accepted words of length at most ``max_len``, shortlex order."""
        live = self.live_states
        level = [((), self.start)] if self.start in live else []
        for n in range(max_len + 1):
            for w, q in level:
                if q in self.accepting:
                    yield w
            if n == max_len:
                break
            level = [
                (w + (a,), t)
                for w, q in level
                for a, t in zip(self.alphabet, self.delta[q])
                if t in live
            ]

    def count_words(self, max_len: int) -> int:
        return sum(1 for _ in self.words(max_len))

    @cached_property
    def letters(self) -> frozenset:
        """Letters occurring in some accepted word."""
        reach = set(self.reachable_states())
        live = self.live_states
        return frozenset(
            a
            for q in reach & live
            for a, t in zip(self.alphabet, self.delta[q])
            if t in live
        )


def _trace(parent, q) -> Word:
    out = []
    while parent[q][0] != -1:
        q, a = parent[q]
        out.append(a)
    return tuple(reversed(out))


def _hopcroft(dfa: Dfa, states: list[int]) -> dict[int, int]:
    """Nerode classes of the given (closed) state set, by Hopcroft's algorithm."""
    sset = set(states)
    acc = frozenset(q for q in states if q in dfa.accepting)
    rej = frozenset(sset - acc)
    partition = [b for b in (acc, rej) if b]
    inv: dict[tuple[int, int], set[int]] = {}
    for q in states:
        for i, t in enumerate(dfa.delta[q]):
            inv.setdefault((t, i), set()).add(q)
    work = [b for b in partition]
    k = len(dfa.alphabet)
    while work:
        splitter = work.pop()
        for i in range(k):
            pre = set()
            for t in splitter:
                pre |= inv.get((t, i), set())
            if not pre:
                continue
            new_partition = []
            for b in partition:
                inside = b & pre
                if inside and len(inside) < len(b):
                    outside = b - inside
                    inside, outside = frozenset(inside), frozenset(outside)
                    new_partition += [inside, outside]
                    if b in work:
                        work.remove(b)
                        work += [inside, outside]
                    else:
                        work.append(inside if len(inside) <= len(outside) else outside)
                else:
                    new_partition.append(b)
            partition = new_partition
    return {q: i for i, b in enumerate(partition) for q in b}


def empty_language(alphabet: Iterable[str]) -> Dfa:
    alphabet = tuple(alphabet)
    return Dfa(alphabet, [(0,) * len(alphabet)], 0, frozenset(), 0)


def from_words(words: Iterable[Sequence[str]], alphabet: Iterable[str] | None = None) -> Dfa:
    """Minimal DFA of a finite language, built from its trie."""
    words = [as_word(w) for w in words]
    letters = sorted({a for w in words for a in w} | set(alphabet or ()))
    trie: list[dict[str, int]] = [{}]
    acc = set()
    for w in words:
        q = 0
        for a in w:
            if a not in trie[q]:
                trie.append({})
                trie[q][a] = len(trie) - 1
            q = trie[q][a]
        acc.add(q)
    sink = len(trie)
    delta = [tuple(node.get(a, sink) for a in letters) for node in trie]
    delta.append((sink,) * len(letters))
    return Dfa(tuple(letters), delta, 0, frozenset(acc), sink).minimize()


def product(d1: Dfa, d2: Dfa, accept) -> Dfa:
    """Reachable product of two DFAs; ``accept(in1, in2)`` decides acceptance."""
    alphabet = tuple(sorted(set(d1.alphabet) | set(d2.alphabet)))
    d1 = d1.with_alphabet(alphabet)
    d2 = d2.with_alphabet(alphabet)
    ids = {(d1.start, d2.start): 0}
    pairs = [(d1.start, d2.start)]
    delta = []
    for p, q in pairs:
        row = []
        for t in zip(d1.delta[p], d2.delta[q]):
            if t not in ids:
                ids[t] = len(pairs)
                pairs.append(t)
            row.append(ids[t])
        delta.append(tuple(row))
    acc = frozenset(i for i, (p, q) in enumerate(pairs) if accept(p in d1.accepting, q in d2.accepting))
    return Dfa(alphabet, delta, 0, acc).normalized()


def intersection(d1: Dfa, d2: Dfa) -> Dfa:
    return product(d1, d2, lambda x, y: x and y)


def difference(d1: Dfa, d2: Dfa) -> Dfa:
    return product(d1, d2, lambda x, y: x and not y)


def equivalent(d1: Dfa, d2: Dfa) -> tuple[bool, Word | None]:
    """Language equality; on failure also a shortest word in the symmetric difference."""
    w = product(d1, d2, lambda x, y: x != y).shortest_word()
    return (w is None, w)


def included(d1: Dfa, d2: Dfa) -> tuple[bool, Word | None]:
    """``L(d1) ⊆ L(d2)``; on failure a shortest word of ``L(d1) - L(d2)``."""
    w = difference(d1, d2).shortest_word()
    return (w is None, w)


def all_words(alphabet: Sequence[str], max_len: int) -> Iterator[Word]:
    for n in range(max_len + 1):
        yield from _product(alphabet, repeat=n)


def require_nonempty(dfa: Dfa) -> None:
    if dfa.is_empty():
        raise EmptyLanguage("the language is empty")
