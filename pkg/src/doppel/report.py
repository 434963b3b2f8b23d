"""Rendering of classification reports as JSON, CSV, markdown or text."""

from __future__ import annotations

import csv
import io
import json

from .catalog import JOIN_ASCII, JOIN_UTF8
from .classify import ClassificationReport, ClassRecord

COLUMNS = ("id", "name", "canon_left", "canon_right", "commutative", "strong", "trivial",
           "aut_label", "aut_order", "dual_id", "swap_id")


def _asciify(text: str, ascii: bool) -> str:
    if not ascii:
        return text
    return text.replace(JOIN_UTF8, JOIN_ASCII).replace("×", "x")


def record_row(r: ClassRecord, ascii: bool = False) -> dict:
    return {
        "id": r.id,
        "name": _asciify(r.name, ascii),
        "canon_left": r.canon.left.encode(),
        "canon_right": r.canon.right.encode(),
        "commutative": r.commutative,
        "strong": r.strong,
        "trivial": r.trivial,
        "aut_label": _asciify(r.aut_label, ascii),
        "aut_order": r.aut_order,
        "dual_id": r.dual_id,
        "swap_id": r.swap_id,
    }


def to_json(report: ClassificationReport, ascii: bool = False) -> str:
    c = report.counts
    doc = {
        "n": report.n,
        "counts": {
            "total": c.total,
            "commutative": c.commutative,
            "strong": c.strong,
            "trivial": c.trivial,
            "dual_pairs": c.dual_pairs,
        },
        "records": [record_row(r, ascii) for r in report.records],
    }
    return json.dumps(doc, indent=2, ensure_ascii=ascii) + "\n"


def to_csv(report: ClassificationReport, ascii: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in report.records:
        row = record_row(r, ascii)
        row.update({k: str(row[k]).lower() for k in ("commutative", "strong", "trivial")})
        writer.writerow(row)
    return buf.getvalue()


def _section(r: ClassRecord) -> int:
    if r.trivial:
        return 0
    if r.commutative:
        return 1
    return 2 if r.strong else 3


_SECTION_TITLES = (
    "Trivial doppelsemigroups",
    "Non-trivial commutative doppelsemigroups",
    "Non-trivial non-commutative strong doppelsemigroups",
    "Non-strong doppelsemigroups",
)


def to_markdown(report: ClassificationReport, ascii: bool = False) -> str:
    c = report.counts
    lines = [
        f"# Doppelsemigroups of order {report.n}",
        "",
        f"{c.total} classes: {c.commutative} commutative, {c.strong} strong, "
        f"{c.trivial} trivial, {c.dual_pairs} dual pairs.",
    ]
    for idx, title in enumerate(_SECTION_TITLES):
        rows = [r for r in report.records if _section(r) == idx]
        if not rows:
            continue
        # within a section, commutative before non-commutative as in the published tables
        rows.sort(key=lambda r: (not r.commutative, r.id))
        lines += ["", f"## {title}", "",
                  "| id | D | Aut(D) | dual | swap |", "|---|---|---|---|---|"]
        for r in rows:
            lines.append(f"| {r.id} | {_asciify(r.name, ascii)} | {_asciify(r.aut_label, ascii)} "
                         f"| {r.dual_id} | {r.swap_id} |")
    return "\n".join(lines) + "\n"


def to_text(report: ClassificationReport, ascii: bool = False) -> str:
    c = report.counts
    lines = [f"n={report.n} total={c.total} commutative={c.commutative} strong={c.strong} "
             f"trivial={c.trivial} dual_pairs={c.dual_pairs}"]
    for r in report.records:
        flags = "".join((
            "c" if r.commutative else "-",
            "s" if r.strong else "-",
            "t" if r.trivial else "-",
        ))
        lines.append(f"{r.id:>3} {flags} {_asciify(r.aut_label, ascii):<6} "
                     f"dual={r.dual_id:<3} swap={r.swap_id:<3} {_asciify(r.name, ascii)}")
    return "\n".join(lines) + "\n"


FORMATS = {"json": to_json, "csv": to_csv, "md": to_markdown, "text": to_text}
