"""Table documents and their renderings.

A table document is a plain dict with a fixed shape: schema_version,
group_spec, a list of basis records (rows), a list of hom records (columns)
and a row-major matrix of exact values.  Integer values are stored as JSON
integers; anything else is stored as a string in the format_value encoding.
Rendering to json always uses sorted keys and fixed separators so that equal
documents serialize to identical bytes.
"""

from __future__ import annotations

import csv
import io
import json

from .cyclotomic import CycloValue, cyclo_normalize, format_value, parse_value
from .errors import ParseError
from .groups import conjugacy_classes
from .multiplier import MultiplierPresentation
from .perm import format_cycles
from .subgroups import SubgroupClassTable, _small_generating_set

SCHEMA_VERSION = "1"


def encode_value(v) -> "int | str":
    """Integers stay integers; anything else gets the format_value encoding."""
    if isinstance(v, int):
        return v
    w = cyclo_normalize(v)
    if w.is_integer():
        return w.as_int()
    if w.is_rational():
        return format_value(w, 1)
    return format_value(w, w.e)


def value_str(v) -> str:
    return str(encode_value(v))


def decode_value(v) -> CycloValue:
    if isinstance(v, int):
        return CycloValue.rational(v)
    return parse_value(v)


def _class_records(table: SubgroupClassTable):
    out = []
    for idx in range(len(table)):
        H = table.reps[idx]
        out.append(
            {
                "label": table.labels[idx],
                "generators": [format_cycles(g) for g in _small_generating_set(H)],
                "order": H.order,
            }
        )
    return out


def ext_document(ring, group_spec: str) -> dict:
    """Full extended table of marks for a ring, with m per basis class."""
    classes = _class_records(ring.table)
    factors = [
        list(MultiplierPresentation(mult).invariant_factors) for mult in ring.mults
    ]
    basis = []
    seen = {}
    for b in ring.basis:
        oi = seen.get(b.class_index, 0)
        seen[b.class_index] = oi + 1
        rec = dict(classes[b.class_index])
        rec["label"] = b.label
        rec["multiplier"] = factors[b.class_index]
        rec["orbit"] = oi
        rec["m"] = ring.m_of_basis(b.index)
        basis.append(rec)
    homs = [
        {
            "label": h.label,
            "subgroup": ring.table.labels[h.class_index],
            "exponents": list(h.exponents),
        }
        for h in ring.homs
    ]
    values = [[encode_value(v) for v in row] for row in ring.extended_table()]
    return {
        "schema_version": SCHEMA_VERSION,
        "group_spec": group_spec,
        "basis": basis,
        "homs": homs,
        "values": values,
    }


def marks_document(table: SubgroupClassTable, group_spec: str, values) -> dict:
    """Ordinary table of marks: transporter coset counts per class pair."""
    basis = _class_records(table)
    for idx, rec in enumerate(basis):
        rec["m"] = len(conjugacy_classes(table.reps[idx]))
    homs = [{"label": rec["label"], "subgroup": rec["label"]} for rec in basis]
    return {
        "schema_version": SCHEMA_VERSION,
        "group_spec": group_spec,
        "basis": basis,
        "homs": homs,
        "values": [list(row) for row in values],
    }


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def validate_document(doc) -> dict:
    if not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION:
        raise ParseError("unsupported table document schema")
    for key in ("group_spec", "basis", "homs", "values"):
        if key not in doc:
            raise ParseError(f"table document is missing {key!r}")
    rows = doc["values"]
    if len(rows) != len(doc["basis"]) or any(
        len(row) != len(doc["homs"]) for row in rows
    ):
        raise ParseError("table document matrix shape does not match its headers")
    return doc


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a table document: {exc}") from None
    return validate_document(doc)


def validate_list_document(doc) -> dict:
    """Shape check for the subgroup and multiplier documents."""
    if not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION:
        raise ParseError("unsupported table document schema")
    if not isinstance(doc.get("classes"), list):
        raise ParseError("table document is missing 'classes'")
    return doc


def render_csv(doc: dict, with_m: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["class"] + [h["label"] for h in doc["homs"]]
    if with_m:
        header.append("m")
    writer.writerow(header)
    for rec, row in zip(doc["basis"], doc["values"]):
        out = [rec["label"]] + [str(v) for v in row]
        if with_m:
            out.append(str(rec["m"]))
        writer.writerow(out)
    return buf.getvalue()


def render_text(doc: dict, with_m: bool = False) -> str:
    """Fixed-width table with zeros shown as dots."""
    header = [""] + [h["label"] for h in doc["homs"]]
    if with_m:
        header.append("m")
    lines = [header]
    for rec, row in zip(doc["basis"], doc["values"]):
        cells = [rec["label"]]
        for v in row:
            cells.append("." if v == 0 else str(v))
        if with_m:
            cells.append(str(rec["m"]))
        lines.append(cells)
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    out = []
    for line in lines:
        out.append(
            " ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip()
        )
    return "\n".join(out) + "\n"


def subgroups_document(table: SubgroupClassTable, group_spec: str) -> dict:
    records = _class_records(table)
    for idx, rec in enumerate(records):
        rec["class_size"] = table.class_sizes[idx]
        rec["normalizer_order"] = table.normalizers[idx].order
    return {
        "schema_version": SCHEMA_VERSION,
        "group_spec": group_spec,
        "classes": records,
    }


def render_subgroups_text(doc: dict) -> str:
    header = ["label", "order", "size", "normalizer", "generators"]
    lines = [header]
    for rec in doc["classes"]:
        lines.append(
            [
                rec["label"],
                str(rec["order"]),
                str(rec["class_size"]),
                str(rec["normalizer_order"]),
                " ".join(rec["generators"]),
            ]
        )
    widths = [max(len(line[i]) for line in lines) for i in range(len(header) - 1)]
    out = []
    for line in lines:
        left = " ".join(cell.ljust(w) for cell, w in zip(line[:-1], widths))
        out.append((left + "  " + line[-1]).rstrip())
    return "\n".join(out) + "\n"


def multiplier_document(table: SubgroupClassTable, group_spec: str, shapes) -> dict:
    """Per-class multiplier data; shapes[idx] = (invariant factors, orbit count)."""
    records = _class_records(table)
    for idx, rec in enumerate(records):
        factors, norbits = shapes[idx]
        rec["invariant_factors"] = list(factors)
        rec["orbits"] = norbits
    return {
        "schema_version": SCHEMA_VERSION,
        "group_spec": group_spec,
        "classes": records,
    }
