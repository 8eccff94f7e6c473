from pathlib import Path

import pytest
from hypothesis import given, settings

from pmlab.core import build_zmod
from pmlab.corpus import corpus
from pmlab.errors import AlgSyntaxError, AxiomViolation
from pmlab.fileformat import AlgebraDocument, parse_algebra, read_algebra, serialize_algebra, write_algebra
from strategies import pseudorings

GOLDEN = Path(__file__).parent / "golden" / "z6.alg"


def _z3_text(mul_rows):
    rows = "\n".join(mul_rows)
    return f"pseudoring T\norder 3\nadd:\n0 1 2\n1 2 0\n2 0 1\nmul:\n{rows}\n"


def test_golden_z6():
    text = GOLDEN.read_text()
    doc = parse_algebra(text)
    assert doc.to_ring() == build_zmod(6)
    assert doc.provenance == "pmlab gen zmod 6"
    assert serialize_algebra(doc) == text
    assert serialize_algebra(AlgebraDocument.from_ring(build_zmod(6), "pmlab gen zmod 6")) == text


def test_whitespace_and_comments_tolerated():
    text = "# header\n\n  pseudoring   Z2 \norder 2\n add:\n0   1\n1 0\n\nmul:\n# rows\n0 0\n 0 1  \n"
    doc = parse_algebra(text)
    assert doc.name == "Z2" and doc.mul == ((0, 0), (0, 1))
    assert doc.provenance == ""


def test_zero_is_moved_to_index_zero():
    # element 1 is the additive zero, element 0 the identity
    text = "pseudoring Z2\norder 2\nadd:\n1 0\n0 1\nmul:\n0 1\n1 1\n"
    doc = parse_algebra(text)
    assert doc.add == ((0, 1), (1, 0))
    assert doc.mul == ((0, 0), (0, 1))


def test_non_associative_mul_names_axiom_5():
    # (1*2)*2 = 0 but 1*(2*2) = 1
    text = _z3_text(["0 0 0", "0 1 0", "0 0 1"])
    with pytest.raises(AxiomViolation) as info:
        parse_algebra(text)
    assert 5 in info.value.report.failed_axioms()
    assert "(5) at" in str(info.value)
    assert info.value.report.witnesses[5]
    assert parse_algebra(text, check=False).order == 3


def test_wrong_arity_row_reports_line():
    text = _z3_text(["0 0 0", "0 1", "0 2 1"])
    with pytest.raises(AlgSyntaxError) as info:
        parse_algebra(text)
    assert info.value.line == 9
    assert "line 9" in str(info.value)


@pytest.mark.parametrize(
    "text, line",
    [
        ("order 2\n", 1),
        ("pseudoring X\norder two\n", 2),
        ("pseudoring X\norder 1\nadd:\n0\nmul:\n1\n", 6),
        ("pseudoring X\norder 1\nadd:\n0\nmul:\nx\n", 6),
        ("pseudoring X\norder 1\nadd:\n0\nmul:\n0\nextra\n", 7),
        ("pseudoring X\norder 1\nadd:\n0\n", 5),
        ("pseudoring X\norder 1\nsum:\n0\nmul:\n0\n", 3),
    ],
)
def test_syntax_errors(text, line):
    with pytest.raises(AlgSyntaxError) as info:
        parse_algebra(text)
    assert info.value.line == line


def test_provenance_lines_round_trip():
    doc = AlgebraDocument.from_ring(build_zmod(2), "first\nsecond")
    text = serialize_algebra(doc)
    assert text.endswith("# provenance: first\n# provenance: second\n")
    assert parse_algebra(text) == doc


def test_corpus_round_trip_is_byte_exact():
    for doc in corpus():
        text = serialize_algebra(doc)
        assert serialize_algebra(parse_algebra(text)) == text


def test_file_helpers(tmp_path):
    doc = AlgebraDocument.from_ring(build_zmod(3), "x")
    path = tmp_path / "z3.alg"
    write_algebra(doc, path)
    assert read_algebra(path) == doc
    assert b"\r" not in path.read_bytes()


@settings(max_examples=60, deadline=None)
@given(pseudorings())
def test_round_trip_random(R):
    doc = AlgebraDocument.from_ring(R, "generated")
    text = serialize_algebra(doc)
    back = parse_algebra(text)
    assert back == doc
    assert serialize_algebra(back) == text
