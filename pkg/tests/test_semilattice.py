import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import sl_term_strategy
from synka import (
    Atom,
    SymSet,
    Sync,
    canonical_atom,
    is_sl_term,
    nonempty_subsets,
    normalize_sl,
    parse_symset,
    parse_term,
    sl_equal,
    sl_value,
)


def test_symset_basics():
    s = SymSet("ba")
    assert s.letters == ("a", "b")
    assert str(s) == "{a,b}"
    assert "a" in s and "c" not in s
    assert SymSet("ab") == SymSet("ba")
    assert SymSet("a") < SymSet("ab") < SymSet("b")
    with pytest.raises(ValueError):
        SymSet("")
    with pytest.raises(ValueError):
        SymSet("aB")


def test_parse_symset():
    assert parse_symset("{a,b}") == SymSet("ab")
    assert parse_symset("{c}") == SymSet("c")
    with pytest.raises(ValueError):
        parse_symset("{}")
    with pytest.raises(ValueError):
        parse_symset("a,b")


def test_sl_value_examples():
    assert sl_value(Atom("a")) == SymSet("a")
    assert sl_value(parse_term("(a & a) & (c & b)")) == SymSet("abc")
    assert sl_value(parse_term("b & a")) == SymSet("ab")
    with pytest.raises(ValueError):
        sl_value(parse_term("a ; b"))


def test_canonical_atom_examples():
    # Round-trip through sl_value pins the canonical shapes down.
    assert canonical_atom(SymSet("a")) == Atom("a")
    two = canonical_atom(SymSet("ba"))
    assert two == Sync(Atom("a"), Atom("b"))
    assert sl_value(two) == SymSet("ab")
    three = canonical_atom(SymSet("abc"))
    assert three == Sync(Sync(Atom("a"), Atom("b")), Atom("c"))
    assert sl_value(three) == SymSet("abc")


@given(st.sets(st.sampled_from("abcde"), min_size=1))
def test_canonical_atom_right_inverse(letter_set):
    symbols = SymSet(letter_set)
    assert sl_value(canonical_atom(symbols)) == symbols


def test_canonical_atom_injective():
    seen = {}
    for r in range(1, 5):
        for combo in itertools.combinations("abcd", r):
            atom = canonical_atom(SymSet(combo))
            assert atom not in seen, "collision with %s" % (seen.get(atom),)
            seen[atom] = combo


def test_normalize_examples():
    assert normalize_sl(parse_term("(a & a) & (c & b)")) == parse_term("(a & b) & c")
    assert normalize_sl(Atom("a")) == Atom("a")


@given(sl_term_strategy())
def test_normalize_idempotent(term):
    once = normalize_sl(term)
    assert normalize_sl(once) == once
    assert sl_equal(term, once)


@given(sl_term_strategy(), sl_term_strategy())
def test_sl_equal_matches_sets_and_normal_forms(e, f):
    assert sl_equal(e, f) == (sl_value(e) == sl_value(f))
    if sl_equal(e, f):
        assert normalize_sl(e) == normalize_sl(f)


def test_sl_equal_examples():
    assert sl_equal(parse_term("a & b"), parse_term("b & a"))
    assert sl_equal(parse_term("(a & a) & (c & b)"), parse_term("(a & b) & c"))
    assert not sl_equal(Atom("a"), parse_term("a & b"))


def test_is_sl_term():
    assert is_sl_term(parse_term("a & (b & a)"))
    assert not is_sl_term(parse_term("a ; b"))
    assert not is_sl_term(parse_term("1"))


def test_nonempty_subsets_order():
    subsets = nonempty_subsets("ba")
    assert [str(s) for s in subsets] == ["{a}", "{a,b}", "{b}"]
    assert nonempty_subsets("") == ()
