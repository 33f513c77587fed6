"""Command line front end.

Exit codes: 0 on success, 1 on domain errors (bad labels, capacity limits,
failed verification), 2 on usage errors.  All output is deterministic for a
given command line; --threads is accepted for interface stability but work
is always done on one thread so results never depend on scheduling.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import __version__, tableio
from .cache import group_fingerprint, resolve_cache
from .errors import EbrError, ParseError, UnknownLabelError
from .groups import Group, conjugacy_classes, group_from_spec
from .multiplier import MultiplierOrbits, MultiplierPresentation, SubgroupMultiplier
from .perm import format_cycles
from .ring import ExtRing
from .subgroups import (
    _small_generating_set,
    generating_set,
    subgroup_classes,
    transporter_coset_reps,
)

_TERM = re.compile(
    r"\s*(?P<sep>[+-])?\s*(?:(?P<coef>-?\d+)\s*\*\s*)?\[(?P<label>[^\[\]]+)\]"
)


def parse_element(ring: ExtRing, text: str):
    """Parse sums like "2*[S3] + [D8']"; a bare label means one basis class."""
    s = text.strip()
    if not s:
        raise ParseError("empty element expression")
    if "[" not in s:
        return _basis(ring, s)
    coeffs = {}
    pos = 0
    first = True
    while pos < len(s):
        match = _TERM.match(s, pos)
        if match is None:
            raise ParseError(f"bad element expression at {s[pos:]!r}")
        if not first and match.group("sep") is None:
            raise ParseError(f"missing + or - before {s[match.start('label') - 1:]!r}")
        c = int(match.group("coef")) if match.group("coef") else 1
        if match.group("sep") == "-":
            c = -c
        b = _basis(ring, match.group("label").strip())
        idx = next(iter(b.coeffs))
        coeffs[idx] = coeffs.get(idx, 0) + c
        pos = match.end()
        first = False
        if s[pos:].strip() == "":
            break
    return ring.element(coeffs)


def _basis(ring: ExtRing, label: str):
    try:
        return ring.basis_element(label)
    except UnknownLabelError:
        valid = ", ".join(b.label for b in ring.basis)
        raise UnknownLabelError(
            f"unknown label {label!r}; valid labels: {valid}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--cache", metavar="DIR", help="cache directory")
    shared.add_argument(
        "--no-cache", action="store_true", help="disable caching even if EBR_CACHE is set"
    )
    shared.add_argument(
        "--threads", type=int, default=1, metavar="N", help="accepted; work is sequential"
    )

    top = argparse.ArgumentParser(prog="ebr", description=__doc__.splitlines()[0])
    top.add_argument("--version", action="version", version=f"ebr {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", parents=[shared], help="summarize a group spec")
    p.add_argument("spec")

    p = sub.add_parser("subgroups", parents=[shared], help="subgroup classes")
    p.add_argument("spec")

    p = sub.add_parser("multiplier", parents=[shared], help="multiplier shapes")
    p.add_argument("spec")
    p.add_argument("--subgroup", metavar="LABEL", help="restrict to one class")

    p = sub.add_parser("marks", parents=[shared], help="ordinary table of marks")
    p.add_argument("spec")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p = sub.add_parser("ext-marks", parents=[shared], help="extended table of marks")
    p.add_argument("spec")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--with-m", action="store_true", dest="with_m")

    p = sub.add_parser("multiply", parents=[shared], help="product of two elements")
    p.add_argument("spec")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--with-m", action="store_true", dest="with_m")

    p = sub.add_parser("m", parents=[shared], help="simple object count of an element")
    p.add_argument("spec")
    p.add_argument("expr")

    p = sub.add_parser("verify", parents=[shared], help="check ring properties")
    p.add_argument("spec")
    p.add_argument("--all", action="store_true")
    p.add_argument("--hom", action="store_true")
    p.add_argument("--rank", action="store_true")
    p.add_argument("--det", action="store_true")
    p.add_argument("--lemma-sign", action="store_true", dest="lemma_sign")
    p.add_argument("--bfo", action="store_true")
    return top


def _emit(doc: dict, fmt: str, with_m: bool) -> None:
    if fmt == "json":
        sys.stdout.write(tableio.render_json(doc))
    elif fmt == "csv":
        sys.stdout.write(tableio.render_csv(doc, with_m=with_m))
    else:
        sys.stdout.write(tableio.render_text(doc, with_m=with_m))


def _cached_doc(args, G: Group, kind: str, build, validate=None):
    """Fetch a document from the cache or build and store it."""
    if validate is None:
        validate = tableio.validate_document
    cache = resolve_cache(args.cache, args.no_cache)
    if cache is None:
        return build()
    key = group_fingerprint(G)
    payload = cache.read(kind, key)
    if payload is not None:
        try:
            return validate(payload)
        except ParseError as exc:
            print(f"ebr: ignoring corrupt cache payload: {exc}", file=sys.stderr)
    doc = build()
    cache.write(kind, key, doc)
    return doc


def cmd_group(args) -> int:
    G = group_from_spec(args.spec)
    gens = " ".join(format_cycles(g) for g in _small_generating_set(G))
    print(f"spec: {args.spec}")
    print(f"degree: {G.degree}")
    print(f"order: {G.order}")
    print(f"generators: {gens}")
    print(f"conjugacy classes: {len(conjugacy_classes(G))}")
    return 0


def cmd_subgroups(args) -> int:
    G = group_from_spec(args.spec)
    doc = _cached_doc(
        args,
        G,
        "subgroup-table",
        lambda: tableio.subgroups_document(subgroup_classes(G), args.spec),
        validate=tableio.validate_list_document,
    )
    sys.stdout.write(tableio.render_subgroups_text(doc))
    return 0


def cmd_multiplier(args) -> int:
    G = group_from_spec(args.spec)
    table = subgroup_classes(G)

    def shape(i):
        mult = SubgroupMultiplier(table.reps[i])
        orbits = MultiplierOrbits(mult, generating_set(table.normalizers[i]))
        factors = MultiplierPresentation(mult).invariant_factors
        return factors, len(orbits.orbit_reps)

    if args.subgroup is not None:
        # One class: compute it directly instead of building the whole document.
        idx = table.index_of_label(args.subgroup)
        if idx is None:
            valid = ", ".join(table.labels)
            raise UnknownLabelError(
                f"unknown subgroup label {args.subgroup!r}; valid labels: {valid}"
            )
        factors, norbits = shape(idx)
        records = [
            {
                "label": table.labels[idx],
                "invariant_factors": list(factors),
                "orbits": norbits,
            }
        ]
    else:
        doc = _cached_doc(
            args,
            G,
            "multiplier",
            lambda: tableio.multiplier_document(
                table, args.spec, [shape(i) for i in range(len(table))]
            ),
            validate=tableio.validate_list_document,
        )
        records = doc["classes"]
    for rec in records:
        print(
            f"{rec['label']}: {rec['invariant_factors']}"
            f" ({rec['orbits']} orbit{'s' if rec['orbits'] != 1 else ''})"
        )
    return 0


def cmd_marks(args) -> int:
    G = group_from_spec(args.spec)
    table = subgroup_classes(G)
    values = []
    for kidx in range(len(table)):
        row = []
        for hidx in range(len(table)):
            row.append(
                len(transporter_coset_reps(G, table.reps[hidx], table.reps[kidx], table))
            )
        values.append(row)
    doc = tableio.marks_document(table, args.spec, values)
    _emit(doc, args.format, with_m=False)
    return 0


def cmd_ext_marks(args) -> int:
    G = group_from_spec(args.spec)
    doc = _cached_doc(
        args,
        G,
        "ext-table",
        lambda: tableio.ext_document(ExtRing(G), args.spec),
    )
    _emit(doc, args.format, with_m=args.with_m)
    return 0


def cmd_multiply(args) -> int:
    ring = ExtRing(group_from_spec(args.spec))
    prod = parse_element(ring, args.left) * parse_element(ring, args.right)
    print(ring.format_element(prod))
    if args.with_m:
        print(f"m = {ring.m_of(prod)}")
    return 0


def cmd_m(args) -> int:
    ring = ExtRing(group_from_spec(args.spec))
    print(ring.m_of(parse_element(ring, args.expr)))
    return 0


def cmd_verify(args) -> int:
    chosen = [
        name
        for name, on in (
            ("hom", args.hom),
            ("rank", args.rank),
            ("det", args.det),
            ("lemma-sign", args.lemma_sign),
            ("bfo", args.bfo),
        )
        if on
    ]
    if args.all or not chosen:
        chosen = ["hom", "rank", "det", "lemma-sign", "bfo"]
    ring = ExtRing(group_from_spec(args.spec))
    failed = 0
    for name in chosen:
        ok, detail = _run_suite(ring, name)
        print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
        if not ok:
            failed += 1
    return 0 if failed == 0 else 1


def _run_suite(ring: ExtRing, name: str):
    if name == "hom":
        bad, total = ring.check_homomorphisms()
        return bad == 0, f"{total - bad}/{total} product triples multiplicative"
    if name == "rank":
        r = ring.rank_extended()
        return r == len(ring), f"rank {r} of {len(ring)}"
    if name == "det":
        d = ring.det_extended()
        return bool(d), f"det = {tableio.value_str(d)}"
    if name == "lemma-sign":
        results = ring.check_sign_lemma()
        ok = all(flag for _, _, flag in results)
        return ok, f"{sum(1 for r in results if r[2])}/{len(results)} sign pairs hold"
    if name == "bfo":
        target = ring.m_of(ring.one)
        hits, pairs = ring.bfo_sets(target=target, cross=3)
        ok = all(flag for _, _, flag in pairs)
        labels = ", ".join(hits)
        return ok, f"set {{{labels}}}; {len(pairs)} qualifying pairs"
    raise AssertionError(f"unknown suite {name}")


_COMMANDS = {
    "group": cmd_group,
    "subgroups": cmd_subgroups,
    "multiplier": cmd_multiplier,
    "marks": cmd_marks,
    "ext-marks": cmd_ext_marks,
    "multiply": cmd_multiply,
    "m": cmd_m,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "threads", 1) < 1:
        print("ebr: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except EbrError as exc:
        print(f"ebr: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
