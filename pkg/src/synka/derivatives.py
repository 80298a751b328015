"""Partial derivatives and the syntactic automaton.

``nullable`` tells whether a term accepts the empty word, ``derive`` maps
a term and a symbol set to the finite set of continuation terms, and
``reachable_terms`` over-approximates everything reachable by iterated
derivatives. Together they present a term as a state of a nondeterministic
automaton whose symbols are nonempty letter sets.

Derivatives taken by a symbol set that is not contained in the letters of
the term are always empty: the letter rule fires only on exact singletons,
and every product split passes subsets of the symbol down to letter rules.
Automaton alphabets are therefore restricted to subsets of the term's own
letters without losing any transitions.
"""

from __future__ import annotations

import functools
import itertools
import warnings
from dataclasses import dataclass

from .language import SyncWord
from .semilattice import SymSet, canonical_atom, nonempty_subsets
from .terms import Atom, H, One, Plus, Seq, Star, Sync, Term, Zero, letters

# Alphabets beyond this many letters make the subset-indexed transition
# space (and the 3^|A| product splits) impractical on a desk machine.
SUPPORT_WARN_LIMIT = 8


@functools.lru_cache(maxsize=None)
def nullable(term: Term) -> bool:
    """True when the empty word belongs to the language of ``term``."""
    if isinstance(term, (Zero, Atom)):
        return False
    if isinstance(term, One) or isinstance(term, Star):
        return True
    if isinstance(term, Plus):
        return nullable(term.left) or nullable(term.right)
    if isinstance(term, (Seq, Sync)):
        return nullable(term.left) and nullable(term.right)
    if isinstance(term, H):
        return nullable(term.inner)
    raise TypeError("unknown term node %r" % (term,))


def _splits(symbols: SymSet):
    """All ordered pairs of nonempty sets whose union is ``symbols``.

    Each letter goes to the left side, the right side, or both, except for
    the two assignments that leave a side empty.
    """
    elems = symbols.letters
    for assignment in itertools.product((0, 1, 2), repeat=len(elems)):
        left = tuple(ch for ch, a in zip(elems, assignment) if a != 1)
        right = tuple(ch for ch, a in zip(elems, assignment) if a != 0)
        if left and right:
            yield SymSet(left), SymSet(right)


@functools.lru_cache(maxsize=None)
def derive(term: Term, symbols: SymSet) -> frozenset[Term]:
    """Partial derivative: the terms reachable from ``term`` by reading the
    symbol set ``symbols`` in one step."""
    if isinstance(term, (Zero, One, H)):
        return frozenset()
    if isinstance(term, Atom):
        if len(symbols) == 1 and term.letter in symbols:
            return frozenset((One(),))
        return frozenset()
    if isinstance(term, Plus):
        return derive(term.left, symbols) | derive(term.right, symbols)
    if isinstance(term, Seq):
        out = {Seq(t, term.right) for t in derive(term.left, symbols)}
        if nullable(term.left):
            out |= derive(term.right, symbols)
        return frozenset(out)
    if isinstance(term, Star):
        return frozenset(Seq(t, term) for t in derive(term.inner, symbols))
    if isinstance(term, Sync):
        out = set()
        if nullable(term.right):
            out |= derive(term.left, symbols)
        if nullable(term.left):
            out |= derive(term.right, symbols)
        for left_syms, right_syms in _splits(symbols):
            lefts = derive(term.left, left_syms)
            if not lefts:
                continue
            rights = derive(term.right, right_syms)
            for lt in lefts:
                for rt in rights:
                    out.add(Sync(lt, rt))
        return frozenset(out)
    raise TypeError("unknown term node %r" % (term,))


@functools.lru_cache(maxsize=None)
def reachable_terms(term: Term) -> frozenset[Term]:
    """A finite set containing every term reachable from ``term`` by
    iterated derivatives (the term itself may be absent)."""
    if isinstance(term, Zero):
        return frozenset()
    if isinstance(term, One):
        return frozenset((One(),))
    if isinstance(term, Atom):
        return frozenset((One(), term))
    if isinstance(term, H):
        return frozenset((One(),))
    if isinstance(term, Plus):
        return reachable_terms(term.left) | reachable_terms(term.right)
    if isinstance(term, Seq):
        out = {Seq(t, term.right) for t in reachable_terms(term.left)}
        return frozenset(out) | reachable_terms(term.right)
    if isinstance(term, Star):
        out = {Seq(t, term) for t in reachable_terms(term.inner)}
        out.add(One())
        return frozenset(out)
    if isinstance(term, Sync):
        lefts = reachable_terms(term.left)
        rights = reachable_terms(term.right)
        out = {Sync(lt, rt) for lt in lefts for rt in rights}
        return frozenset(out) | lefts | rights
    raise TypeError("unknown term node %r" % (term,))


@dataclass(frozen=True)
class Automaton:
    """The syntactic automaton of a term, restricted to its reachable
    state set. States are terms compared structurally."""

    initial: Term
    states: tuple[Term, ...]
    alphabet: tuple[SymSet, ...]
    accepting: frozenset[Term]
    transitions: dict[tuple[Term, SymSet], frozenset[Term]]

    def step(self, subset: frozenset[Term], symbol: SymSet) -> frozenset[Term]:
        """Determinized transition on a set of states."""
        out: set[Term] = set()
        for state in subset:
            out |= self.transitions.get((state, symbol), frozenset())
        return frozenset(out)


def build_automaton(term: Term) -> Automaton:
    """Build the automaton whose states are ``reachable_terms(term)`` plus
    the term itself, with transitions over the nonempty subsets of the
    term's letters."""
    support = letters(term)
    if len(support) > SUPPORT_WARN_LIMIT:
        warnings.warn(
            "term uses %d letters; the subset alphabet has %d symbols"
            % (len(support), 2 ** len(support) - 1),
            stacklevel=2,
        )
    alphabet = nonempty_subsets(support)
    reach = reachable_terms(term)
    states = tuple(sorted(reach | {term}, key=str))
    transitions: dict[tuple[Term, SymSet], frozenset[Term]] = {}
    for state in states:
        for symbol in alphabet:
            targets = derive(state, symbol)
            if targets:
                if not targets <= reach:
                    raise AssertionError(
                        "derivative escaped the reachable set: %s --%s--> %s"
                        % (state, symbol, sorted(map(str, targets - reach)))
                    )
                transitions[(state, symbol)] = targets
    accepting = frozenset(s for s in states if nullable(s))
    return Automaton(
        initial=term,
        states=states,
        alphabet=alphabet,
        accepting=accepting,
        transitions=transitions,
    )


def accepts(automaton: Automaton, word: SyncWord) -> bool:
    """Standard nondeterministic acceptance; symbols outside the
    automaton's alphabet reject immediately."""
    alphabet = set(automaton.alphabet)
    current = frozenset((automaton.initial,))
    for symbol in word:
        if symbol not in alphabet:
            return False
        current = automaton.step(current, symbol)
        if not current:
            return False
    return any(state in automaton.accepting for state in current)


def unfold(term: Term) -> tuple[bool, list[tuple[SymSet, Term]]]:
    """One-step decomposition: the empty-word bit plus all (symbol,
    continuation) summands, sorted by symbol and then printed term."""
    summands = []
    for symbol in nonempty_subsets(letters(term)):
        for target in derive(term, symbol):
            summands.append((symbol, target))
    summands.sort(key=lambda item: (item[0], str(item[1])))
    return nullable(term), summands


def unfold_as_term(term: Term) -> Term:
    """Reassemble :func:`unfold` output as a term: the empty-word constant
    plus one ``atom ; continuation`` summand per transition."""
    empty_part, summands = unfold(term)
    acc: Term = One() if empty_part else Zero()
    for symbol, target in summands:
        acc = Plus(acc, Seq(canonical_atom(symbol), target))
    return acc


def to_dot(automaton: Automaton) -> str:
    """Render an automaton in Graphviz DOT format. Accepting states are
    double-circled; edges carry symbol-set labels."""

    def quote(text: str) -> str:
        return '"%s"' % text.replace("\\", "\\\\").replace('"', '\\"')

    lines = ["digraph {", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for state in automaton.states:
        shape = "doublecircle" if state in automaton.accepting else "circle"
        lines.append("  %s [shape=%s];" % (quote(str(state)), shape))
    lines.append("  __start -> %s;" % quote(str(automaton.initial)))
    for state in automaton.states:
        for symbol in automaton.alphabet:
            targets = automaton.transitions.get((state, symbol))
            if not targets:
                continue
            for target in sorted(targets, key=str):
                lines.append(
                    "  %s -> %s [label=%s];"
                    % (quote(str(state)), quote(str(target)), quote(str(symbol)))
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
