"""Language equivalence of terms, with shortest counterexamples.

Two terms denote the same language exactly when, as states of the
syntactic automaton, they accept the same words. The check runs a
Hopcroft-Karp style bisimulation: both sides are determinized on the fly
into sets of terms, a union-find merges set pairs already known to be
language-equal, and the frontier is explored breadth-first so the first
acceptance conflict yields a shortest distinguishing word.

The comparison alphabet is every nonempty subset of the letters occurring
in either term. Derivatives by any other symbol set are empty on both
sides (see :mod:`synka.derivatives`), so no distinguishing word can use
one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .derivatives import derive, nullable
from .language import SyncWord
from .semilattice import nonempty_subsets
from .terms import Term, letters

DEFAULT_PAIR_CAP = 1_000_000


class StateLimitError(RuntimeError):
    """Raised when the explored pair frontier exceeds the configured cap."""


@dataclass(frozen=True)
class EquivResult:
    """Outcome of an equivalence check. ``witness`` is present exactly
    when the terms differ, and is then accepted by exactly one of them."""

    equivalent: bool
    witness: SyncWord | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def member(word: SyncWord, term: Term) -> bool:
    """Word membership by iterated derivatives; no automaton is built."""
    current: frozenset[Term] = frozenset((term,))
    for symbol in word:
        step: set[Term] = set()
        for state in current:
            step |= derive(state, symbol)
        if not step:
            return False
        current = frozenset(step)
    return any(nullable(state) for state in current)


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, item):
        parent = self.parent
        root = item
        while True:
            above = parent.get(root)
            if above is None or above == root:
                break
            root = above
        while True:
            above = parent.get(item)
            if above is None or above == item:
                break
            parent[item] = root
            item = above
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def equiv(e: Term, f: Term, pair_cap: int = DEFAULT_PAIR_CAP) -> EquivResult:
    """Decide whether ``e`` and ``f`` denote the same language.

    Raises :class:`StateLimitError` once more than ``pair_cap`` set pairs
    have been examined.
    """
    alphabet = nonempty_subsets(letters(e) | letters(f))
    uf = _UnionFind()
    accepts_cache: dict[frozenset[Term], bool] = {}
    step_cache: dict[tuple[frozenset[Term], object], frozenset[Term]] = {}

    def accepts_now(subset: frozenset[Term]) -> bool:
        try:
            return accepts_cache[subset]
        except KeyError:
            value = any(nullable(state) for state in subset)
            accepts_cache[subset] = value
            return value

    def step(subset: frozenset[Term], symbol) -> frozenset[Term]:
        key = (subset, symbol)
        try:
            return step_cache[key]
        except KeyError:
            out: set[Term] = set()
            for state in subset:
                out |= derive(state, symbol)
            value = frozenset(out)
            step_cache[key] = value
            return value

    start = (frozenset((e,)), frozenset((f,)))
    queue: deque[tuple[frozenset[Term], frozenset[Term], SyncWord]] = deque([(*start, ())])
    examined = 0
    while queue:
        left, right, word = queue.popleft()
        if uf.find(left) == uf.find(right):
            continue
        if accepts_now(left) != accepts_now(right):
            return EquivResult(False, word)
        uf.union(left, right)
        examined += 1
        if examined > pair_cap:
            raise StateLimitError(
                "equivalence check exceeded %d determinized state pairs" % pair_cap
            )
        for symbol in alphabet:
            queue.append((step(left, symbol), step(right, symbol), word + (symbol,)))
    return EquivResult(True, None)
