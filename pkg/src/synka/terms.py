"""Syntax trees for synchronous regular expressions.

Terms are built from the constants ``0`` and ``1``, single-letter atoms,
choice ``+``, sequencing ``;``, synchronous product ``&``, postfix
iteration ``*`` and the empty-word projection ``H(...)``. Nodes are
immutable, hashable and compare structurally; no algebraic law is applied
at construction time, so ``a + b`` and ``b + a`` are different trees.
"""

from __future__ import annotations

import functools
import string

LETTERS = frozenset(string.ascii_lowercase)

# Binding strength for minimal-parenthesis printing; higher binds tighter.
# All binary operators associate to the left.
_PREC_PLUS = 1
_PREC_SYNC = 2
_PREC_SEQ = 3
_PREC_STAR = 4
_PREC_LEAF = 9


class Term:
    """Base class of all term nodes."""

    __slots__ = ("_hash",)

    precedence = _PREC_LEAF

    def _seal(self) -> None:
        # Hashes are cached per node so that equality checks and dict
        # lookups stay cheap on terms that share large subtrees.
        self._hash = hash(self._key())

    def _key(self) -> tuple:
        raise NotImplementedError

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if other.__class__ is not self.__class__ or other._hash != self._hash:
            return False
        return self._key() == other._key()

    def __repr__(self) -> str:
        return "<%s '%s'>" % (type(self).__name__, self)

    def _child(self, child: Term, right_slot: bool = False) -> str:
        """Render a child, parenthesised only where precedence demands."""
        need = child.precedence < self.precedence or (
            right_slot and child.precedence == self.precedence
        )
        return "(%s)" % child if need else str(child)


class Zero(Term):
    """The empty choice; denotes the empty language."""

    __slots__ = ()

    def __init__(self):
        self._seal()

    def _key(self):
        return ("0",)

    def __str__(self):
        return "0"


class One(Term):
    """The empty sequence; denotes the language containing only eps."""

    __slots__ = ()

    def __init__(self):
        self._seal()

    def _key(self):
        return ("1",)

    def __str__(self):
        return "1"


class Atom(Term):
    """A single alphabet letter."""

    __slots__ = ("letter",)

    def __init__(self, letter: str):
        if letter not in LETTERS:
            raise ValueError("letter must be a single character a-z, got %r" % (letter,))
        self.letter = letter
        self._seal()

    def _key(self):
        return ("atom", self.letter)

    def __str__(self):
        return self.letter


class _Binary(Term):
    __slots__ = ("left", "right")

    symbol = "?"

    def __init__(self, left: Term, right: Term):
        if not isinstance(left, Term) or not isinstance(right, Term):
            raise TypeError("operands must be Terms")
        self.left = left
        self.right = right
        self._seal()

    def _key(self):
        return (self.symbol, self.left, self.right)

    def __str__(self):
        return "%s %s %s" % (
            self._child(self.left),
            self.symbol,
            self._child(self.right, right_slot=True),
        )


class Plus(_Binary):
    """Choice between two terms."""

    __slots__ = ()
    symbol = "+"
    precedence = _PREC_PLUS


class Sync(_Binary):
    """Synchronous product: both operands advance in lock-step."""

    __slots__ = ()
    symbol = "&"
    precedence = _PREC_SYNC


class Seq(_Binary):
    """Sequential composition."""

    __slots__ = ()
    symbol = ";"
    precedence = _PREC_SEQ


class Star(Term):
    """Finite iteration (Kleene star), written postfix."""

    __slots__ = ("inner",)
    precedence = _PREC_STAR

    def __init__(self, inner: Term):
        if not isinstance(inner, Term):
            raise TypeError("operand must be a Term")
        self.inner = inner
        self._seal()

    def _key(self):
        return ("*", self.inner)

    def __str__(self):
        return self._child(self.inner) + "*"


class H(Term):
    """Empty-word projection: keeps only eps from the operand's language."""

    __slots__ = ("inner",)

    def __init__(self, inner: Term):
        if not isinstance(inner, Term):
            raise TypeError("operand must be a Term")
        self.inner = inner
        self._seal()

    def _key(self):
        return ("H", self.inner)

    def __str__(self):
        return "H(%s)" % self.inner


@functools.lru_cache(maxsize=None)
def letters(term: Term) -> frozenset[str]:
    """The set of alphabet letters occurring in ``term``."""
    if isinstance(term, Atom):
        return frozenset((term.letter,))
    if isinstance(term, (Zero, One)):
        return frozenset()
    if isinstance(term, (Star, H)):
        return letters(term.inner)
    return letters(term.left) | letters(term.right)


@functools.lru_cache(maxsize=None)
def h_free(term: Term) -> bool:
    """True when ``term`` contains no H node."""
    if isinstance(term, H):
        return False
    if isinstance(term, (Zero, One, Atom)):
        return True
    if isinstance(term, Star):
        return h_free(term.inner)
    return h_free(term.left) and h_free(term.right)


def size(term: Term) -> int:
    """Number of constructor nodes in ``term``."""
    if isinstance(term, (Zero, One, Atom)):
        return 1
    if isinstance(term, (Star, H)):
        return 1 + size(term.inner)
    return 1 + size(term.left) + size(term.right)
