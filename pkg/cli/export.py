from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from qmds.quantum import exceeds_half_q

from .schemas import CertificateDocument, ParamsRow

ROW_FIELDS = ["family", "q", "s", "r", "t", "k", "n", "k_q", "d", "provenance", "verified"]


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def rows_to_json(rows: Sequence[ParamsRow]) -> str:
    payload = [row.model_dump(mode="json") for row in rows]
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def rows_to_csv(rows: Sequence[ParamsRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=ROW_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        data = row.model_dump()
        writer.writerow({key: _cell(data[key]) for key in ROW_FIELDS})
    return buf.getvalue()


def rows_to_human(rows: Sequence[ParamsRow]) -> str:
    lines: List[str] = []
    for row in rows:
        marks = []
        if row.verified:
            marks.append("verified")
        if exceeds_half_q(row.q, row.d):
            marks.append("d > q/2+1")
        suffix = f"  ({', '.join(marks)})" if marks else ""
        lines.append(f"{row.label:<24} {row.provenance}{suffix}")
    return "\n".join(lines) + "\n" if lines else ""


def certificate_to_human(document: CertificateDocument) -> str:
    spec = document.spec
    verdicts = document.verdicts.model_dump()
    checks = ", ".join(f"{name}={_cell(value)}" for name, value in verdicts.items() if value is not None)
    t = f" t={spec.t}" if spec.t is not None else ""
    lines = [
        f"{spec.family} q={spec.q} s={spec.s} r={spec.r}{t} k={spec.k}",
        f"classical [{spec.n}, {spec.k}, {spec.n - spec.k + 1}] over GF({spec.q}^2), solved by {document.routing}",
        f"quantum {document.quantum.label}",
        f"checks: {checks or 'none'}",
    ]
    return "\n".join(lines) + "\n"


def write_output(text: str, path: Optional[str] = None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    out_path = Path(path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(text)
