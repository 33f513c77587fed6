import pytest

from extburnside.errors import ParseError
from extburnside.groups import (
    Group,
    centralizer,
    conjugacy_classes,
    conjugate_subgroup,
    group_from_spec,
    normalizer,
)
from extburnside.perm import conj, identity, parse_cycles, pmul


@pytest.mark.parametrize(
    "spec,order,degree",
    [
        ("S4", 24, 4),
        ("S5", 120, 5),
        ("A4", 12, 4),
        ("A5", 60, 5),
        ("C6", 6, 6),
        ("D8", 8, 4),
        ("D12", 12, 6),
        ("perm:4:(1 2),(1 2 3 4)", 24, 4),
        ("perm:5:(1 2 3 4 5)", 5, 5),
    ],
)
def test_spec_grammar(spec, order, degree):
    G = group_from_spec(spec)
    assert G.order == order
    assert G.degree == degree


def test_spec_errors():
    for bad in ["X9", "S", "D7", "perm:4:(1 9)", "perm:zero:(1 2)", ""]:
        with pytest.raises(ParseError):
            group_from_spec(bad)


def test_identity_is_first_element():
    for spec in ["S4", "A5", "D12"]:
        G = group_from_spec(spec)
        assert G.elements[0] == identity(G.degree)


def test_elements_sorted_and_closed():
    G = group_from_spec("S4")
    assert list(G.elements) == sorted(G.elements)
    eset = set(G.elements)
    for a in G.elements[:8]:
        for b in G.elements[:8]:
            assert pmul(a, b) in eset


def test_conjugacy_class_counts():
    assert len(conjugacy_classes(group_from_spec("S4"))) == 5
    assert len(conjugacy_classes(group_from_spec("S5"))) == 7
    assert len(conjugacy_classes(group_from_spec("A5"))) == 5
    assert len(conjugacy_classes(group_from_spec("A4"))) == 4


def test_classes_partition_the_group():
    G = group_from_spec("S4")
    classes = conjugacy_classes(G)
    assert sum(size for _, size in classes) == G.order
    reps = [rep for rep, _ in classes]
    assert len(set(reps)) == len(reps)
    for rep, size in classes:
        orbit = {conj(rep, g) for g in G.elements}
        assert rep == min(orbit) and len(orbit) == size


def test_centralizer_brute_force():
    G = group_from_spec("S4")
    x = parse_cycles("(1 2 3 4)", 4)
    C = centralizer(G, x)
    want = sorted(g for g in G.elements if conj(x, g) == x)
    assert list(C.elements) == want


def test_normalizer_brute_force():
    G = group_from_spec("S4")
    V = Group.generate(4, [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    N = normalizer(G, V)
    vset = V.element_set()
    want = sorted(
        g for g in G.elements if all(conj(x, g) in vset for x in V.elements)
    )
    assert list(N.elements) == want
    assert N.order == 24  # the Klein four-group V2 is normal in S4


def test_conjugate_subgroup():
    G = group_from_spec("S4")
    H = Group.generate(4, [parse_cycles("(1 2)", 4)])
    g = parse_cycles("(1 3 2)", 4)
    Hg = conjugate_subgroup(H, g)
    assert sorted(Hg.elements) == sorted(conj(x, g) for x in H.elements)
