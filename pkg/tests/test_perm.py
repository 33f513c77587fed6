import pytest

from extburnside.errors import ParseError
from extburnside.perm import (
    conj,
    cycle_type,
    format_cycles,
    identity,
    is_transposition,
    parse_cycles,
    pinv,
    pmul,
    porder,
)


def test_identity():
    assert identity(4) == (0, 1, 2, 3)
    assert porder(identity(4)) == 1


def test_pmul_applies_right_factor_first():
    # a = (0 1), b = (1 2) as permutations of {0,1,2}
    a = (1, 0, 2)
    b = (0, 2, 1)
    ab = pmul(a, b)
    # (a.b)(x) = a(b(x)): 0 -> 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0
    assert ab == (1, 2, 0)


def test_pinv():
    g = parse_cycles("(1 2 3 4)", 4)
    assert pmul(g, pinv(g)) == identity(4)
    assert pmul(pinv(g), g) == identity(4)


def test_conj_convention():
    # x^g = g^-1 x g, so conjugation is a right action: (x^g)^h = x^(gh)
    x = parse_cycles("(1 2)", 4)
    g = parse_cycles("(1 3)", 4)
    h = parse_cycles("(2 4 3)", 4)
    assert conj(conj(x, g), h) == conj(x, pmul(g, h))
    assert conj(x, g) == pmul(pmul(pinv(g), x), g)


def test_porder_and_cycle_type():
    g = parse_cycles("(1 2)(3 4 5)", 5)
    assert porder(g) == 6
    assert cycle_type(g) == (2, 3)
    assert cycle_type(identity(5)) == (1, 1, 1, 1, 1)


def test_is_transposition():
    assert is_transposition(parse_cycles("(2 5)", 5))
    assert not is_transposition(parse_cycles("(1 2)(3 4)", 5))
    assert not is_transposition(identity(5))


def test_parse_format_round_trip():
    for text in ["(1 2)", "(1 2 3)(4 5)", "(2 4)(3 5)", "()"]:
        g = parse_cycles(text, 5)
        assert parse_cycles(format_cycles(g), 5) == g


def test_format_identity():
    assert format_cycles(identity(3)) == "()"


def test_parse_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_cycles("(1 2", 4)
    with pytest.raises(ParseError):
        parse_cycles("(1 2)(2 3)", 4)  # repeated point
    with pytest.raises(ParseError):
        parse_cycles("(1 9)", 4)  # out of range
