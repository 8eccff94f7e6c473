import json

from pmlab.core import build_zmod
from pmlab.corpus import corpus, random_documents
from pmlab.fileformat import AlgebraDocument
from pmlab.verify import THEOREMS, theorem_ids, verify_all, verify_ring


def _broken_distributivity():
    doc = AlgebraDocument.from_ring(build_zmod(3))
    mul = [list(r) for r in doc.mul]
    mul[2][2] = 2  # still commutative, but 2*(1+1) != 2*1 + 2*1
    return AlgebraDocument("broken", 3, doc.add, tuple(tuple(r) for r in mul))


def test_corpus_all_pass_with_annotations():
    report = verify_all(corpus())
    assert report.ok, report.failures()
    assert report.counts()["pass"] > 0
    got = {(a.algebra, a.quantity): (a.published, a.computed) for a in report.annotations}
    assert got == {("Z6", "e(1)-e(5)"): (2, 0), ("Z6", "e(3)-e(5)"): (4, 2)}


def test_every_theorem_runs_per_algebra():
    entries = verify_ring(build_zmod(6))
    assert [e.theorem for e in entries][1:] == sorted(THEOREMS)
    assert len(entries) == len(theorem_ids())
    statuses = {e.theorem: e.status for e in entries}
    # Z6 is a pseudomeadow whose maximal ideals are all prime
    assert statuses.pop("decomp.rejects-non-pseudomeadow") == "n/a"
    assert statuses.pop("loc.rejects-non-prime") == "n/a"
    assert set(statuses.values()) == {"pass"}


def test_broken_distributivity_fails_at_axiom_stage():
    report = verify_all([_broken_distributivity()])
    first, rest = report.entries[0], report.entries[1:]
    assert first.theorem == "axioms.pseudoring" and first.status == "fail"
    assert "(7)" in first.witness or "(8)" in first.witness
    assert all(e.status == "skipped" for e in rest)
    assert not report.ok


def test_cap_skips_large_algebras():
    entries = verify_ring(build_zmod(12), cap=8)
    assert entries[0].status == "pass"
    assert all(e.status == "skipped" for e in entries[1:])


def test_json_is_deterministic_and_timing_free():
    a = verify_all(corpus()).to_json()
    b = verify_all(corpus()).to_json()
    assert a == b
    payload = json.loads(a)
    assert "runtime" not in payload["entries"][0]
    assert payload["ok"] is True
    assert "runtime" in json.loads(verify_all([build_zmod(2)]).to_json(timings=True))["entries"][0]


def test_text_report_lists_annotations():
    text = verify_all(corpus()).to_text()
    assert "ANNOTATE Z6" in text
    assert text.rstrip().splitlines()[-1].startswith("summary:")


def test_random_documents_pass():
    docs = random_documents(11, 40)
    report = verify_all(docs)
    assert report.ok, report.failures()
    assert report.to_json() == verify_all(random_documents(11, 40)).to_json()
