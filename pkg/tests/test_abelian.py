from extburnside.abelian import Abelianization, derived_subgroup, hom_generators
from extburnside.groups import Group, group_from_spec
from extburnside.perm import parse_cycles, pmul


def test_derived_subgroups():
    S4 = group_from_spec("S4")
    A4 = group_from_spec("A4")
    D8 = group_from_spec("D8")
    A5 = group_from_spec("A5")
    assert derived_subgroup(S4).order == 12  # A4
    assert derived_subgroup(A4).order == 4  # the Klein subgroup
    assert derived_subgroup(D8).order == 2  # the center
    assert derived_subgroup(A5).order == 60  # perfect


def test_abelianization_orders():
    for spec, order in [("S4", 2), ("A4", 3), ("D8", 4), ("C6", 6), ("A5", 1)]:
        ab = Abelianization(group_from_spec(spec))
        assert ab.order == order


def test_primary_basis_structure():
    ab = Abelianization(group_from_spec("D8"))
    basis, orders, coords = ab.primary_basis(2)
    assert sorted(orders) == [2, 2]
    assert sorted(ab.elt_order(b) for b in basis) == [2, 2]
    # coords cover the whole 2-part and agree with the basis expansion
    assert len(coords) == 4
    for x, cs in coords.items():
        acc = ab.identity
        for b, c in zip(basis, cs):
            acc = ab.mul(acc, ab.power(b, c))
        assert acc == x

    c12 = Group.generate(12, [tuple((i + 1) % 12 for i in range(12))])
    ab12 = Abelianization(c12)
    basis2, orders2, _ = ab12.primary_basis(2)
    assert orders2 == [4] and [ab12.elt_order(b) for b in basis2] == [4]
    basis3, orders3, _ = ab12.primary_basis(3)
    assert orders3 == [3] and [ab12.elt_order(b) for b in basis3] == [3]


def test_hom_generators_are_homomorphisms():
    for spec, p, q in [("S4", 2, 2), ("A4", 3, 3), ("D8", 2, 2), ("D8", 2, 4)]:
        H = group_from_spec(spec)
        for chi in hom_generators(H, p, q):
            for x in H.elements:
                for y in H.elements:
                    assert (chi[x] + chi[y]) % q == chi[pmul(x, y)] % q


def test_hom_generators_counts():
    # elementary abelian 2-group of rank 3 has three independent characters
    E = Group.generate(
        6,
        [
            parse_cycles("(1 2)", 6),
            parse_cycles("(3 4)", 6),
            parse_cycles("(5 6)", 6),
        ],
    )
    gens = hom_generators(E, 2, 2)
    assert len(gens) == 3
    vals = {tuple(chi[x] for x in E.elements) for chi in gens}
    assert len(vals) == 3


def test_hom_generators_scale_to_larger_modulus():
    # C2 into Z/8: the nontrivial character takes the value 4
    C2 = Group.generate(2, [(1, 0)])
    (chi,) = hom_generators(C2, 2, 8)
    assert sorted(set(chi.values())) == [0, 4]


def test_hom_generators_foreign_prime():
    # no p-part means no characters
    assert hom_generators(group_from_spec("A4"), 2, 2) == []
