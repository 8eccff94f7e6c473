"""The line-oriented ``.alg`` text format.

Canonical form::

    pseudoring <name>
    order <n>
    add:
    <n rows of n space-separated integers>
    mul:
    <n rows>
    # provenance: <free text, one line per provenance line>

Lines starting with ``#`` are comments; ``# provenance:`` comments are kept
on the document.  Parsing tolerates extra whitespace and blank lines,
serialization is byte-exact with LF endings.  If the zero of the addition
table is not element 0, the parser swaps it into position 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import FinitePseudoring, check_axioms
from .errors import AlgSyntaxError, AxiomViolation

PROVENANCE_PREFIX = "# provenance:"
_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    provenance: str = ""

    @classmethod
    def from_ring(cls, R: FinitePseudoring, provenance: str = "") -> "AlgebraDocument":
        prov = "\n".join(line.strip() for line in provenance.splitlines())
        return cls(R.name, R.order, R.add, R.mul, prov)

    def to_ring(self, labels=None) -> FinitePseudoring:
        return FinitePseudoring(self.add, self.mul, self.name, labels)


def serialize_algebra(doc: AlgebraDocument) -> str:
    lines = [f"pseudoring {doc.name}", f"order {doc.order}", "add:"]
    lines += [" ".join(map(str, row)) for row in doc.add]
    lines.append("mul:")
    lines += [" ".join(map(str, row)) for row in doc.mul]
    if doc.provenance:
        lines += [f"{PROVENANCE_PREFIX} {p}".rstrip() for p in doc.provenance.split("\n")]
    return "\n".join(lines) + "\n"


def _swap_zero(add, mul):
    n = len(add)
    z = next((z for z in range(n) if all(add[z][x] == x for x in range(n))), None)
    if z in (None, 0):
        return add, mul
    perm = list(range(n))
    perm[0], perm[z] = z, 0

    def relabel(t):
        return [[perm[t[perm[i]][perm[j]]] for j in range(n)] for i in range(n)]

    return relabel(add), relabel(mul)


def parse_algebra(text: str, check: bool = True) -> AlgebraDocument:
    """Parse ``.alg`` text; with ``check`` the axioms must hold."""
    body: list[tuple[int, str]] = []
    provenance: list[str] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if stripped.startswith(PROVENANCE_PREFIX):
                provenance.append(stripped[len(PROVENANCE_PREFIX):].strip())
            continue
        body.append((lineno, raw))

    pos = 0
    last_line = text.count("\n") + 1

    def next_line(expected: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(body):
            raise AlgSyntaxError("unexpected end of input", last_line, 1, expected)
        item = body[pos]
        pos += 1
        return item

    def keyword(expected: str) -> tuple[int, list[re.Match]]:
        lineno, raw = next_line(expected)
        toks = list(_TOKEN.finditer(raw))
        if toks[0].group() != expected:
            raise AlgSyntaxError(f"found {toks[0].group()!r}", lineno, toks[0].start() + 1, repr(expected))
        return lineno, toks

    lineno, toks = keyword("pseudoring")
    if len(toks) < 2:
        raise AlgSyntaxError("missing name", lineno, len(body[pos - 1][1]) + 1, "algebra name")
    name_start = toks[1].start()
    name = body[pos - 1][1][name_start:].strip()

    lineno, toks = keyword("order")
    if len(toks) != 2 or not toks[1].group().isdigit():
        col = toks[1].start() + 1 if len(toks) > 1 else len(body[pos - 1][1]) + 1
        raise AlgSyntaxError("bad order", lineno, col, "one positive integer")
    n = int(toks[1].group())
    if n < 1:
        raise AlgSyntaxError("order must be positive", lineno, toks[1].start() + 1, "positive integer")

    def table(label: str):
        lineno, raw = next_line(f"{label}:")
        if _TOKEN.findall(raw) != [f"{label}:"]:
            col = len(raw) - len(raw.lstrip()) + 1
            raise AlgSyntaxError(f"found {raw.strip()!r}", lineno, col, repr(f"{label}:"))
        rows = []
        for _ in range(n):
            lineno, raw = next_line(f"row of {n} integers")
            cells = list(_TOKEN.finditer(raw))
            row = []
            for k, m in enumerate(cells):
                if k >= n:
                    raise AlgSyntaxError(f"row has {len(cells)} entries", lineno, m.start() + 1, f"{n} entries")
                tok = m.group()
                if not tok.isdigit():
                    raise AlgSyntaxError(f"bad entry {tok!r}", lineno, m.start() + 1, "non-negative integer")
                v = int(tok)
                if v >= n:
                    raise AlgSyntaxError(f"entry {v} out of range", lineno, m.start() + 1, f"integer in [0, {n})")
                row.append(v)
            if len(row) < n:
                raise AlgSyntaxError(f"row has {len(row)} entries", lineno, len(raw.rstrip()) + 1, f"{n} entries")
            rows.append(row)
        return rows

    add = table("add")
    mul = table("mul")
    if pos < len(body):
        lineno, raw = body[pos]
        raise AlgSyntaxError("trailing content", lineno, len(raw) - len(raw.lstrip()) + 1, "end of input")

    add, mul = _swap_zero(add, mul)
    doc = AlgebraDocument(
        name,
        n,
        tuple(tuple(r) for r in add),
        tuple(tuple(r) for r in mul),
        "\n".join(provenance),
    )
    if check:
        report = check_axioms((doc.add, doc.mul))
        if not report.ok:
            raise AxiomViolation(report)
    return doc


def read_algebra(path, check: bool = True) -> AlgebraDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read(), check=check)


def write_algebra(doc: AlgebraDocument, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_algebra(doc))
