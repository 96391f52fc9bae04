"""Text formats: code files, characteristic-vector strings, JSON/CSV records.

Code file format:
    line 1:            m=<int> n=<int>
    lines 2 .. n+1:    one generator each, either comma-separated 1-based
                       positions (``1,2,3,4``) or a bitstring of length m
                       prefixed ``b:`` (``b:01101...``).

Characteristic vectors are accepted in shorthand (6 bits for rank 3, 10 for
rank 4, omitted coordinates fixed by convention) or in full coordinate form
prefixed ``full:``.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .charvec import CharVector, GLMatrix, LoopClassId
from .errors import ParseError
from .gf2 import CodeBasis, Codeword
from .search import MinimalReport, ReducedRepresentation

_FULL_LENGTHS = {3: 7, 4: 14}  # n + C(n,2) + C(n,3)


def parse_code_text(text: str) -> CodeBasis:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty code file")
    head = lines[0].split()
    try:
        fields = dict(part.split("=") for part in head)
        m = int(fields["m"])
        n = int(fields["n"])
    except (ValueError, KeyError):
        raise ParseError(f"bad header {lines[0]!r}; expected 'm=<int> n=<int>'") from None
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} generator lines, found {len(lines) - 1}")
    generators = []
    for ln in lines[1:]:
        if ln.startswith("b:"):
            bits = ln[2:]
            if len(bits) != m:
                raise ParseError(f"bitstring length {len(bits)} != m={m}")
            try:
                generators.append(Codeword.from_bitstring(bits))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        else:
            try:
                positions = [int(p) for p in ln.split(",")]
                generators.append(Codeword.from_positions(m, positions))
            except ValueError as exc:
                raise ParseError(f"bad generator line {ln!r}: {exc}") from None
    return CodeBasis(m, tuple(generators))


def load_code(path: str) -> CodeBasis:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_text(fh.read())


def format_code(basis: CodeBasis) -> str:
    lines = [f"m={basis.length} n={basis.rank}"]
    lines.extend(",".join(str(p) for p in g.positions) for g in basis.generators)
    return "\n".join(lines) + "\n"


def parse_lambda(text: str, rank: int | None = None) -> CharVector:
    """Parse shorthand or ``full:``-prefixed characteristic vector strings."""
    text = text.strip()
    try:
        if text.startswith("full:"):
            bits = text[len("full:") :]
            inferred = next((n for n, ln in _FULL_LENGTHS.items() if ln == len(bits)), None)
            if inferred is None:
                raise ValueError(f"full form must have 7 or 14 bits, got {len(bits)}")
            if rank is not None and rank != inferred:
                raise ValueError(f"--rank {rank} does not match a {len(bits)}-bit full form")
            return CharVector.from_bits(inferred, bits)
        inferred = {6: 3, 10: 4}.get(len(text))
        if inferred is None:
            raise ValueError(f"shorthand must have 6 or 10 bits, got {len(text)}")
        if rank is not None and rank != inferred:
            raise ValueError(f"--rank {rank} does not match a {len(text)}-bit shorthand")
        return CharVector.from_shorthand(inferred, text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_lambda(cv: CharVector) -> str:
    """Shorthand when the conventional coordinates allow it, else full form."""
    if cv.is_normalized:
        return cv.shorthand()
    return "full:" + cv.bits()


# ---------------------------------------------------------------------------
# Structured records (shared by the CLI and the JSON schemas in docs/)


def representation_record(loop: LoopClassId | str, rep: ReducedRepresentation) -> dict[str, Any]:
    return {
        "loop": str(loop),
        "degree": rep.degree,
        "type": list(rep.type),
        "sizes": rep.sizes.as_dict(),
        "generators": [list(g.positions) for g in rep.basis.generators],
    }


def minimal_report_record(report: MinimalReport) -> dict[str, Any]:
    return {
        "loop": str(report.loop),
        "degree": report.degree,
        "scope": report.scope,
        "count": len(report.representations),
        "representations": [
            representation_record(report.loop, rep) for rep in report.representations
        ],
    }


def classify_record(
    cv: CharVector, loop: LoopClassId, rep: CharVector, witness: GLMatrix
) -> dict[str, Any]:
    return {
        "loop": str(loop),
        "lambda": format_lambda(cv),
        "representative": format_lambda(rep),
        "witness": list(witness.row_bitstrings()),
    }


def dumps(record: Any) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n"


def csv_text(rows: list[list[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)
    return out.getvalue()
