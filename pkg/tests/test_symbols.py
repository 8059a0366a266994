"""Symbol parsing, normalization, equivalence, and the double cover."""

from fractions import Fraction

import pytest
from hypothesis import given

from seifert import (
    Orientability,
    SeifertPair,
    SeifertSymbol,
    SymbolSyntaxError,
    base_quotient,
    equivalent,
    normalize,
    obstruction_class,
    orientable_double_cover,
    parse_symbol,
    total_sum,
)
from strategies import seifert_symbols


# -- construction and parsing ---------------------------------------------

def test_parse_basic():
    s = parse_symbol("(1,n2|(2,1))")
    assert s.genus == 1
    assert s.orientability is Orientability.N2
    assert s.pairs == (SeifertPair(2, 1),)


def test_parse_empty_pair_list():
    s = parse_symbol("(0,o1|)")
    assert s.genus == 0
    assert s.orientability is Orientability.O1
    assert s.pairs == ()


def test_parse_ignores_whitespace():
    assert parse_symbol(" ( 0 , o1 | ( 3 , -4 ) ) ") == parse_symbol("(0,o1|(3,-4))")


def test_str_round_trip():
    for text in ["(0,o1|)", "(2,n2|)", "(0,o1|(3,1),(1,1))", "(1,n2|(2,1),(5,-3))"]:
        assert str(parse_symbol(text)) == text


def test_parse_rejects_non_coprime_pair():
    with pytest.raises(ValueError, match="coprime"):
        parse_symbol("(0,o1|(2,4))")


def test_parse_rejects_nonpositive_q():
    with pytest.raises(ValueError, match="q must be >= 1"):
        parse_symbol("(0,o1|(0,1))")


def test_parse_rejects_genus_zero_crosscaps():
    with pytest.raises(ValueError, match="genus >= 1"):
        parse_symbol("(0,n2|)")


def test_parse_reports_error_position():
    with pytest.raises(SymbolSyntaxError) as info:
        parse_symbol("(0,o1|(3,1)")
    assert info.value.position == len("(0,o1|(3,1)")
    with pytest.raises(SymbolSyntaxError, match="trailing input"):
        parse_symbol("(0,o1|)x")
    with pytest.raises(SymbolSyntaxError, match="class"):
        parse_symbol("(0,xx|)")


def test_constructor_rejects_bad_data():
    with pytest.raises(ValueError):
        SeifertPair(3, 6)
    with pytest.raises(ValueError):
        SeifertSymbol(-1, Orientability.O1, ())
    with pytest.raises(ValueError):
        SeifertSymbol(0, Orientability.N2, ())


# -- total sum -------------------------------------------------------------

@pytest.mark.parametrize("text, value", [
    ("(0,o1|)", Fraction(0)),
    ("(1,n2|(2,1),(1,3))", Fraction(7, 2)),
    ("(0,o1|(3,1),(3,1))", Fraction(2, 3)),
    ("(0,o1|(2,1),(3,-2),(1,2))", Fraction(11, 6)),
])
def test_total_sum_values(text, value):
    assert total_sum(parse_symbol(text)) == value


# -- normalization ---------------------------------------------------------

def test_normalize_mod_reduction():
    norm = normalize(parse_symbol("(0,o1|(3,4))"))
    assert norm.exceptional == (SeifertPair(3, 1),)
    assert norm.b == 1


def test_normalize_fixed_point():
    norm = normalize(parse_symbol("(1,n2|(2,1))"))
    assert norm.exceptional == (SeifertPair(2, 1),)
    assert norm.b == 0


def test_normalize_negative_p_and_carries():
    norm = normalize(parse_symbol("(0,o1|(2,1),(2,-1),(1,2))"))
    assert norm.exceptional == (SeifertPair(2, 1), SeifertPair(2, 1))
    assert norm.b == 1


def test_normalize_sorts_exceptional_pairs():
    norm = normalize(parse_symbol("(0,o1|(5,2),(3,1),(5,1))"))
    assert norm.exceptional == (
        SeifertPair(3, 1), SeifertPair(5, 1), SeifertPair(5, 2))


def test_expand_appends_trailing_b_pair():
    assert str(normalize(parse_symbol("(0,o1|(3,4))")).expand()) == "(0,o1|(3,1),(1,1))"
    # b = 0 still gets its pair so the serialization is uniform
    assert str(normalize(parse_symbol("(1,n2|(2,1))")).expand()) == "(1,n2|(2,1),(1,0))"


@given(seifert_symbols())
def test_normalize_idempotent(s):
    norm = normalize(s)
    assert normalize(norm.expand()) == norm


@given(seifert_symbols())
def test_normalize_preserves_total_sum(s):
    assert total_sum(normalize(s).expand()) == total_sum(s)


@given(seifert_symbols())
def test_normalized_pairs_in_range(s):
    for pr in normalize(s).exceptional:
        assert pr.q > 1 and 0 < pr.p < pr.q


# -- obstruction class -----------------------------------------------------

@pytest.mark.parametrize("text, b", [
    ("(0,o1|(1,5))", 5),
    ("(0,o1|(1,-7))", -7),
    ("(1,n2|(2,1))", 0),
    ("(0,o1|(3,4),(3,5))", 2),
])
def test_obstruction_values(text, b):
    assert obstruction_class(parse_symbol(text)) == b


# -- equivalence -----------------------------------------------------------

def test_equivalent_golden_cases():
    a = parse_symbol("(0,o1|(3,4))")
    assert equivalent(a, a)
    assert equivalent(a, parse_symbol("(0,o1|(3,1),(1,1))"))
    assert not equivalent(parse_symbol("(0,o1|(3,1))"), parse_symbol("(0,o1|(3,2))"))
    assert not equivalent(parse_symbol("(0,o1|)"), parse_symbol("(1,o1|)"))
    assert not equivalent(parse_symbol("(1,o1|)"), parse_symbol("(1,n2|)"))


@given(seifert_symbols(), seifert_symbols())
def test_equivalent_symmetric(a, b):
    assert equivalent(a, b) == equivalent(b, a)


@given(seifert_symbols())
def test_equivalent_on_rewritings(s):
    # reordering pairs and normalizing both stay in the class, and
    # chaining the two witnesses transitivity on a nontrivial triple
    reordered = SeifertSymbol(s.genus, s.orientability, tuple(reversed(s.pairs)))
    expanded = normalize(s).expand()
    assert equivalent(s, reordered)
    assert equivalent(reordered, expanded)
    assert equivalent(s, expanded)


@given(seifert_symbols(max_pairs=3, max_q=6, max_p=8))
def test_perturbing_one_p_breaks_equivalence(s):
    if not s.pairs:
        return
    q, p = s.pairs[0].q, s.pairs[0].p
    bumped = (SeifertPair(q, p + q),) + s.pairs[1:]
    other = SeifertSymbol(s.genus, s.orientability, bumped)
    assert not equivalent(s, other)


# -- double cover and quotient --------------------------------------------

@pytest.mark.parametrize("below, above", [
    ("(1,n2|(2,1))", "(0,o1|(2,1),(2,1))"),
    ("(2,n2|)", "(1,o1|)"),
    ("(3,n2|(5,2),(1,1))", "(2,o1|(5,2),(5,2),(1,1),(1,1))"),
])
def test_cover_goldens(below, above):
    assert orientable_double_cover(parse_symbol(below)) == parse_symbol(above)


def test_cover_rejects_orientable_base():
    with pytest.raises(ValueError, match="class n2"):
        orientable_double_cover(parse_symbol("(0,o1|)"))


@pytest.mark.parametrize("above, below", [
    ("(0,o1|(2,1),(2,1))", "(1,n2|(2,1))"),
    ("(1,o1|)", "(2,n2|)"),
])
def test_quotient_goldens(above, below):
    assert base_quotient(parse_symbol(above)) == parse_symbol(below)


def test_quotient_none_when_not_doubled():
    assert base_quotient(parse_symbol("(0,o1|(2,1),(3,1))")) is None
    assert base_quotient(parse_symbol("(0,o1|(1,1))")) is None  # odd obstruction


def test_quotient_handles_carried_doubling():
    # not literally doubled, but the normalized data folds in half
    assert base_quotient(parse_symbol("(0,o1|(1,2))")) == parse_symbol("(1,n2|(1,1))")


def test_quotient_rejects_crosscap_base():
    with pytest.raises(ValueError, match="class o1"):
        base_quotient(parse_symbol("(1,n2|)"))


@given(seifert_symbols(classes=(Orientability.N2,)))
def test_cover_doubles_obstruction(m):
    assert obstruction_class(orientable_double_cover(m)) == 2 * obstruction_class(m)


@given(seifert_symbols(classes=(Orientability.N2,)))
def test_quotient_inverts_cover(m):
    back = base_quotient(orientable_double_cover(m))
    assert back is not None
    assert equivalent(back, m)
