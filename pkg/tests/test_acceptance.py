"""Acceptance gate: one test and one printed verdict line per criterion.

Run with `python3 -m pytest tests/test_acceptance.py -s -q` to see the
verdict lines; each test also asserts, so a plain pytest run fails loudly
on any regression.  All comparisons are exact.
"""

import json
import random
import time

import pytest

from extburnside import tableio
from extburnside.abelian import hom_generators
from extburnside.cli import main
from extburnside.cocycles import bockstein, coboundary
from extburnside.groups import centralizer, conjugacy_classes
from extburnside.multiplier import MultiplierPresentation
from extburnside.oracles import fixed_point_mark, twisted_center_dimension

from data_s4 import LABELS as S4_LABELS, M as S4_M, TABLE as S4_TABLE
from data_s5 import LABELS as S5_LABELS, M as S5_M, TABLE as S5_TABLE


def report(num, name, ok, detail):
    line = f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def check_table(doc, labels, marks, m_values):
    assert len(doc["basis"]) == len(labels) and len(doc["homs"]) == len(labels)
    hom_pos = {h["label"]: j for j, h in enumerate(doc["homs"])}
    bad = 0
    for rec, row in zip(doc["basis"], doc["values"]):
        want = marks[rec["label"]]
        for j, hlab in enumerate(labels):
            if row[hom_pos[hlab]] != want[j]:
                bad += 1
        if rec["m"] != m_values[rec["label"]]:
            bad += 1
    return bad


def test_criterion_1_s4_table(capsys):
    t0 = time.perf_counter()
    code, out = run_cli(capsys, "ext-marks", "S4", "--with-m", "--no-cache")
    assert code == 0 and len(out.splitlines()) == 17
    code, out = run_cli(capsys, "ext-marks", "S4", "--with-m", "--format", "json",
                        "--no-cache")
    dt = time.perf_counter() - t0
    assert code == 0
    bad = check_table(json.loads(out), S4_LABELS, S4_TABLE, S4_M)
    report(1, "S4 table", bad == 0 and dt < 10.0,
           f"16x16 marks and 16 m values, {bad} mismatches, {dt:.2f}s")


def test_criterion_2_s5_table(capsys):
    t0 = time.perf_counter()
    code, out = run_cli(capsys, "ext-marks", "S5", "--with-m", "--format", "json",
                        "--no-cache")
    dt = time.perf_counter() - t0
    assert code == 0
    doc = json.loads(out)
    bad = check_table(doc, S5_LABELS, S5_TABLE, S5_M)
    have = {rec["label"] for rec in doc["basis"]}
    primed = sorted(lab for lab in have if lab.endswith("'"))
    named = {"H6", "H10", "H20"} <= have
    report(2, "S5 table", bad == 0 and named and len(primed) == 8 and dt < 600.0,
           f"27x27 marks and 27 m values, {bad} mismatches, "
           f"{len(primed)} primed rows, {dt:.2f}s")


def test_criterion_3_homomorphism_property(s4_ring, s5_ring):
    bad4, total4 = s4_ring.check_homomorphisms()
    bad5, total5 = s5_ring.check_homomorphisms()
    report(3, "homomorphism property", bad4 == 0 and bad5 == 0,
           f"S4 {bad4}/{total4} failures, S5 {bad5}/{total5} failures")


def test_criterion_4_rank_and_determinant(s4_ring, s5_ring):
    r4, r5 = s4_ring.rank_extended(), s5_ring.rank_extended()
    d4, d5 = s4_ring.det_extended(), s5_ring.det_extended()
    ok = r4 == 16 and r5 == 27 and bool(d4) and bool(d5)
    report(4, "rank and determinant", ok,
           f"r(S4)={r4}, r(S5)={r5}, det(S4)={tableio.value_str(d4)}, "
           f"det(S5)={tableio.value_str(d5)}")


def ordinary_block_consistent(ring):
    table = ring.table
    G = table.ambient
    n = len(table)
    tom = ring.table_of_marks()
    bad = 0
    for kidx in range(n):
        for hidx in range(n):
            if tom[kidx][hidx] != fixed_point_mark(G, table.reps[kidx], table.reps[hidx]):
                bad += 1
    plain_basis = {b.class_index: b.index for b in ring.basis if not any(b.coords)}
    plain_homs = {h.class_index: h.index for h in ring.homs if not any(h.exponents)}
    assert len(plain_basis) == n and len(plain_homs) == n
    for kidx in range(n):
        for hidx in range(n):
            v = tableio.encode_value(ring.mark(plain_homs[hidx], plain_basis[kidx]))
            if v != tom[kidx][hidx]:
                bad += 1
    return n, bad


def test_criterion_5_ordinary_marks(s4_ring, s5_ring):
    n4, bad4 = ordinary_block_consistent(s4_ring)
    n5, bad5 = ordinary_block_consistent(s5_ring)
    report(5, "ordinary marks", bad4 == 0 and bad5 == 0,
           f"{n4}x{n4} and {n5}x{n5} blocks equal brute-force fixed point "
           f"counts, {bad4 + bad5} mismatches")


def test_criterion_6_sign_lemma(s4_ring, s5_ring):
    res4 = s4_ring.check_sign_lemma()
    res5 = s5_ring.check_sign_lemma()
    ok = bool(res4) and bool(res5) and all(f for _, _, f in res4 + res5)
    report(6, "sign lemma", ok,
           f"{sum(f for _, _, f in res4)}/{len(res4)} S4 pairs, "
           f"{sum(f for _, _, f in res5)}/{len(res5)} S5 pairs")


def test_criterion_7_bfo(s4_ring):
    hits, pairs = s4_ring.bfo_sets(target=5, cross=3)
    ok = set(hits) == {"S3", "S4", "S4'"} and pairs and all(f for _, _, f in pairs)
    report(7, "BFO application", ok,
           f"m(M*M)=5 set {{{', '.join(hits)}}}, dichotomy holds for "
           f"{len(pairs)} qualifying pairs")


def regular_count_brute(H, c):
    count = 0
    for rep, _size in conjugacy_classes(H):
        cent = centralizer(H, rep)
        if all((c.value(rep, g) - c.value(g, rep)) % c.n == 0 for g in cent.elements):
            count += 1
    return count


def test_criterion_8_cohomology_suite(s4_ring, s5_ring):
    rng = random.Random(2024)
    bock_checked = trials = rep_checked = oracle_checked = 0
    factor_bad = bock_bad = invar_bad = rep_bad = oracle_bad = 0
    for ring in (s4_ring, s5_ring):
        for idx in range(len(ring.table)):
            H = ring.table.reps[idx]
            mult = ring.mults[idx]
            pres = MultiplierPresentation(mult)
            if any(d not in (2,) for d in pres.invariant_factors):
                factor_bad += 1
            # bockstein images die in M(H)
            for part in mult.parts:
                for chi in hom_generators(H, part.p, part.q):
                    bock_checked += 1
                    c = bockstein(H, part.q, chi)
                    if any(pres.reduce(c)):
                        bock_bad += 1
            # reduction is blind to coboundaries
            zero = tuple([0] * len(mult.moduli))
            for _ in range(50):
                trials += 1
                coords = tuple(rng.randrange(d) for d in mult.moduli)
                c = mult.cochain_of(coords)
                alpha = {x: rng.randrange(c.n) for x in H.elements}
                alpha[H.identity] = 0
                shifted = c + coboundary(H, c.n, alpha)
                if mult.reduce_cochain(shifted, validate=False) != coords:
                    invar_bad += 1
            # regular counts per class, not per representative
            for coords in ring.orbits[idx].orbit_reps:
                want = mult.regular_class_count(coords)
                c = mult.cochain_of(coords)
                alpha = {x: rng.randrange(c.n) for x in H.elements}
                alpha[H.identity] = 0
                moved = c + coboundary(H, c.n, alpha)
                rep_checked += 1
                if regular_count_brute(H, c) != want or regular_count_brute(H, moved) != want:
                    rep_bad += 1
                if H.order <= 24:
                    oracle_checked += 1
                    if twisted_center_dimension(H.elements, c.value, c.n) != want:
                        oracle_bad += 1
    ok = not (factor_bad or bock_bad or invar_bad or rep_bad or oracle_bad)
    report(8, "cohomology suite", ok,
           f"{bock_checked} bockstein classes trivial ({bock_bad} bad), "
           f"{trials} coboundary trials ({invar_bad} bad), "
           f"{rep_checked} regular counts representative-independent ({rep_bad} bad), "
           f"all invariant factors of order <= 2 ({factor_bad} bad), "
           f"center oracle on {oracle_checked} classes ({oracle_bad} bad)")


def test_criterion_9_determinism(capsys, tmp_path):
    outs = {}
    for spec in ("S4", "S5"):
        cache = str(tmp_path / f"cache-{spec}")
        runs = [
            ("no-cache", ["--no-cache", "--threads", "1"]),
            ("cold cache", ["--cache", cache, "--threads", "4"]),
            ("warm cache", ["--cache", cache, "--threads", "2"]),
        ]
        texts = []
        for _, extra in runs:
            code, out = run_cli(capsys, "ext-marks", spec, "--format", "json",
                                "--with-m", *extra)
            assert code == 0
            texts.append(out)
        outs[spec] = len({t.encode() for t in texts})
    ok = outs == {"S4": 1, "S5": 1}
    report(9, "determinism", ok,
           f"S4 json identical across 3 runs ({outs['S4']} distinct), "
           f"S5 json identical across 3 runs ({outs['S5']} distinct)")


# The frozen fixtures negate a handful of primed-row cells relative to the
# published reference data (and read the A4 row's m in the larger table as 4,
# its class count).  The companion tests below assert the data as printed and
# are expected to fail: the printed cells are not compatible with the ring
# homomorphism property that criterion 3 checks exhaustively.

S4_PRINTED_FLIPS = [("D8'", "V1'"), ("D8'", "V2'"),
                    ("S4'", "V1'"), ("S4'", "V2'"), ("S4'", "A4'")]
S5_PRINTED_FLIPS = S4_PRINTED_FLIPS + [("S5'", "V1'"), ("S5'", "V2'"),
                                       ("S5'", "A4'"), ("S5'", "S4'"),
                                       ("S5'", "A5'")]


@pytest.mark.xfail(
    reason="published reference data prints these cells with positive sign; "
    "the homomorphism property forces the negated values in data_s4",
    strict=True,
)
def test_printed_s4_cells_as_published(s4_ring):
    hom_of = {h.label: h.index for h in s4_ring.homs}
    pos = {lab: j for j, lab in enumerate(S4_LABELS)}
    ok = True
    for blab, hlab in S4_PRINTED_FLIPS:
        printed = -S4_TABLE[blab][pos[hlab]]
        got = tableio.encode_value(
            s4_ring.mark(hom_of[hlab], s4_ring._by_label[blab].index))
        ok = ok and got == printed
    assert ok


@pytest.mark.xfail(
    reason="published reference data prints these cells with positive sign "
    "and m = 3 for the A4 row; the computed table disagrees",
    strict=True,
)
def test_printed_s5_cells_as_published(s5_ring):
    hom_of = {h.label: h.index for h in s5_ring.homs}
    pos = {lab: j for j, lab in enumerate(S5_LABELS)}
    ok = True
    for blab, hlab in S5_PRINTED_FLIPS:
        printed = -S5_TABLE[blab][pos[hlab]]
        got = tableio.encode_value(
            s5_ring.mark(hom_of[hlab], s5_ring._by_label[blab].index))
        ok = ok and got == printed
    ok = ok and s5_ring.m_of(s5_ring.basis_element("A4")) == 3
    assert ok
