import pytest

from extburnside.errors import NotASubgroupError
from extburnside.groups import Group, conjugate_subgroup, group_from_spec
from extburnside.oracles import double_coset_partition, fixed_point_mark
from extburnside.perm import conj, parse_cycles, pinv
from extburnside.subgroups import (
    double_coset_reps,
    generating_set,
    subgroup_classes,
    transporter_coset_reps,
    transporter_set,
)

# (label, order, class size) for every subgroup class of S4, canonical order
S4_CLASSES = [
    ("1", 1, 1),
    ("C2a", 2, 6),
    ("C2b", 2, 3),
    ("C3", 3, 4),
    ("V1", 4, 3),
    ("V2", 4, 1),
    ("C4", 4, 3),
    ("S3", 6, 4),
    ("D8", 8, 3),
    ("A4", 12, 1),
    ("S4", 24, 1),
]

S5_LABELS = [
    "1", "C2a", "C2b", "C3", "V1", "V2", "C4", "C5", "S3", "H6", "C6",
    "D8", "H10", "S3xS2", "A4", "H20", "S4", "A5", "S5",
]


def test_s4_classes_frozen(s4_ring):
    table = s4_ring.table
    got = [
        (table.labels[i], table.reps[i].order, table.class_sizes[i])
        for i in range(len(table))
    ]
    assert got == S4_CLASSES


def test_s5_class_labels_frozen(s5_ring):
    table = s5_ring.table
    assert list(table.labels) == S5_LABELS
    assert len(table) == 19


def test_labels_deterministic():
    a = subgroup_classes(group_from_spec("S4"))
    b = subgroup_classes(group_from_spec("S4"))
    assert a.labels == b.labels
    assert a.reps == b.reps


def test_class_of_conjugates(s4_ring):
    table = s4_ring.table
    G = table.ambient
    for idx in (1, 4, 8):  # a few non-normal classes
        rep = table.reps[idx]
        for g in G.elements[::5]:
            H = conjugate_subgroup(rep, g)
            found, t = table.class_of(H)
            assert found == idx
            assert sorted(conj(x, t) for x in H.elements) == list(rep.elements)


def test_class_of_rejects_non_subgroups(s4_ring):
    stray = Group.generate(4, [parse_cycles("(1 2 3)", 4)])
    # a C3 subgroup is fine; an arbitrary subset of another group is not
    assert s4_ring.table.class_of(stray)[0] == 3
    with pytest.raises(NotASubgroupError):
        s4_ring.table.class_of(Group.generate(5, [parse_cycles("(1 5)", 5)]))


def test_normalizer_orders_s4(s4_ring):
    table = s4_ring.table
    got = {table.labels[i]: table.normalizers[i].order for i in range(len(table))}
    assert got == {
        "1": 24, "C2a": 4, "C2b": 8, "C3": 6, "V1": 8, "V2": 24,
        "C4": 8, "S3": 6, "D8": 8, "A4": 24, "S4": 24,
    }


def test_double_cosets_partition(s4_ring):
    G = s4_ring.group
    table = s4_ring.table
    for hidx, kidx in [(1, 8), (8, 8), (7, 7), (3, 9)]:
        H = table.reps[hidx]
        K = table.reps[kidx]
        reps = double_coset_reps(G, K, H)
        cells = double_coset_partition(G, K, H)
        # every rep lies in exactly one cell, and each cell is hit once
        assert len(reps) == len(cells)
        covered = set()
        for g in reps:
            cell = next(i for i, c in enumerate(cells) if g in c)
            assert cell not in covered
            covered.add(cell)


def test_transporter_matches_brute_force(s4_ring):
    G = s4_ring.group
    table = s4_ring.table
    for hidx in range(len(table)):
        for kidx in range(len(table)):
            H, K = table.reps[hidx], table.reps[kidx]
            kset = K.element_set()
            # H <= K^g means g x g^-1 lies in K for every x in H
            brute = {
                g
                for g in G.elements
                if all(conj(x, pinv(g)) in kset for x in H.generators)
            }
            assert set(transporter_set(G, H, K, table)) == brute


def test_transporter_coset_reps_count_is_fixed_points(s4_ring):
    G = s4_ring.group
    table = s4_ring.table
    for hidx in range(len(table)):
        for kidx in range(len(table)):
            H, K = table.reps[hidx], table.reps[kidx]
            reps = transporter_coset_reps(G, H, K, table)
            assert len(reps) == fixed_point_mark(G, K, H)


def test_generating_set():
    for spec in ["S4", "A5", "D12"]:
        G = group_from_spec(spec)
        gens = generating_set(G)
        assert Group.generate(G.degree, gens).order == G.order
        assert len(gens) <= 3
