"""Acceptance gate.  Each test covers one criterion; a PASS/FAIL line per
criterion is printed in the terminal summary."""

import itertools
import json
import time

import pytest
from click.testing import CliRunner

import oracles
from pmlab import clear_caches
from pmlab.cli import main
from pmlab.core import build_chain_monoid_ring, build_zero_mul, build_zmod, is_pseudodomain
from pmlab.corpus import corpus, corpus_rings, counterexample, even_z8, random_documents
from pmlab.embeddings import subdirect_embed
from pmlab.errors import NotPrime, NotPseudomeadow
from pmlab.fileformat import parse_algebra, serialize_algebra
from pmlab.idempotents import decompose, idempotent_poset
from pmlab.ideals import characterize, enumerate_ideals, is_maximal, is_prime, make_ideal, radicals
from pmlab.quotients import local_global_eq, local_global_zero, localize, quotient, verify_localization_theorem
from pmlab.regularity import vn_profile
from pmlab.verify import verify_all

pytestmark = pytest.mark.acceptance


@pytest.fixture
def criterion(record_property):
    def tag(number: int, summary: str):
        record_property("criterion", str(number))
        record_property("summary", summary)

    return tag


def _pseudomeadows():
    return [R for R in corpus_rings() if vn_profile(R).is_pseudomeadow]


def _sets(ideals):
    return {frozenset(I.members) for I in ideals}


def test_criterion_1_zero_mul_z6(criterion):
    criterion(1, "zero-multiplication Z6: MaxSpec, no primes, J = {0}, N = R, < 0.1 s")
    clear_caches()
    t0 = time.perf_counter()
    R = build_zero_mul(6)
    spec = radicals(R)
    elapsed = time.perf_counter() - t0
    assert _sets(spec.maximals) == {frozenset({0, 2, 4}), frozenset({0, 3})}
    assert not any(is_prime(R, m) for m in spec.maximals)
    assert spec.primes == ()
    assert spec.jacobson_radical.members == [0]
    assert spec.nil_radical.members == list(range(6))
    assert elapsed < 0.1, elapsed


def test_criterion_2_even_z8(criterion):
    criterion(2, "2Z8: {0,4} maximal, not prime; quotient of order 2 with zero products, < 0.1 s")
    clear_caches()
    t0 = time.perf_counter()
    R = even_z8()
    I = make_ideal(R, [R.element("0"), R.element("4")])
    maximal, prime = is_maximal(R, I), is_prime(R, I)
    q = quotient(R, I)
    elapsed = time.perf_counter() - t0
    assert maximal and not prime
    assert q.ring.order == 2
    assert all(v == 0 for row in q.ring.mul for v in row)
    assert elapsed < 0.1, elapsed


def test_criterion_3_decomposition(criterion):
    criterion(3, "Z6 = F2 x F3 via h(x) = (3x, 4x); chain rings k=1..4 give k copies of F2; counterexample rejected, < 1 s")
    clear_caches()
    t0 = time.perf_counter()
    z6 = build_zmod(6)
    dec = decompose(z6)
    assert dec.field_orders() == [2, 3]
    assert all(dec.h(x) == (3 * x % 6, 4 * x % 6) for x in z6.elements)
    assert sorted(dec.product_map()) == list(range(6))
    for k in range(1, 5):
        assert decompose(build_chain_monoid_ring(k)).field_orders() == [2] * k
    cex = counterexample()
    with pytest.raises(NotPseudomeadow) as info:
        decompose(cex)
    assert cex.label(info.value.minimal_sum) == "(0,1,1)"
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, elapsed


def test_criterion_4_characterization(criterion):
    criterion(4, "pseudomeadow iff (reduced and Spec = MaxSpec) on corpus + 200 random algebras, < 30 s")
    clear_caches()
    t0 = time.perf_counter()
    rings = corpus_rings() + [d.to_ring() for d in random_documents(2024, 200)]
    assert len(rings) >= 200 + len(corpus_rings())
    for R in rings:
        c = characterize(R)
        # second opinion on each side from the brute-force oracle
        oracle_pm = all(len(oracles.vn_inverses(R.mul, x)) == 1 for x in R.elements)
        oracle_reduced = oracles.nilpotents(R.mul) == {0}
        assert c.is_pm == oracle_pm, R.name
        assert c.reduced == oracle_reduced, R.name
        assert c.is_pm == (c.reduced and c.spec_eq_max), R.name
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, elapsed


def test_criterion_5_subdirect(criterion):
    criterion(5, "every corpus pseudomeadow embeds subdirectly into its residue fields")
    pms = _pseudomeadows()
    assert pms
    for R in pms:
        emb = subdirect_embed(R)
        assert emb.injective and emb.subdirect, R.name
        for q in emb.factors:
            assert oracles.is_field(q.ring.add, q.ring.mul), R.name


def test_criterion_6_localization(criterion):
    criterion(6, "localization theorem on every (pseudomeadow, maximal) pair; Z6 example; e(5) annotation")
    pairs = 0
    for R in _pseudomeadows():
        for m in radicals(R).maximals:
            v = verify_localization_theorem(R, m)
            assert v.part_a and v.part_b and v.part_c and v.part_d, (R.name, m.members)
            pairs += 1
    assert pairs > 0
    z6 = build_zmod(6)
    v = verify_localization_theorem(z6, [0, 2, 4])
    assert v.order == 2
    assert set(v.preimage_of_identity) == {1, 3, 5}
    assert set(v.denominator_idempotents) == {1, 3}
    assert vn_profile(z6).e_of[5] == 1
    report = verify_all(corpus())
    assert report.ok
    notes = {a.quantity: (a.published, a.computed) for a in report.annotations if a.algebra == "Z6"}
    assert notes["e(1)-e(5)"] == (2, 0)


def test_criterion_7_local_global(criterion):
    criterion(7, "local-global principles on all corpus pseudomeadows; zero-mul Z6 rejected")
    for R in _pseudomeadows():
        ideals = enumerate_ideals(R)
        for I in ideals:
            assert local_global_zero(R, I) == I.is_zero, (R.name, I.members)
        for I, J in itertools.product(ideals, repeat=2):
            assert local_global_eq(R, I, J) == (I == J), (R.name, I.members, J.members)
    zm6 = build_zero_mul(6)
    with pytest.raises(NotPrime):
        localize(zm6, [0, 2, 4])
    with pytest.raises(NotPseudomeadow):
        local_global_zero(zm6, [0, 3])


def test_criterion_8_invariants(criterion):
    criterion(8, "invariant suites exhaustively over the corpus")
    for R in corpus_rings():
        prof = vn_profile(R)
        for x in R.elements:
            found = oracles.vn_inverses(R.mul, x)
            assert len(found) <= 1, (R.name, x)
            assert prof.inverse[x] == (found[0] if found else None), (R.name, x)
            if prof.e_of[x] is not None:
                assert (prof.e_of[x] == 0) == (x == 0), (R.name, x)
        minimal = idempotent_poset(R).minimal
        for e, f in itertools.combinations(minimal, 2):
            assert R.mul[e][f] == 0, (R.name, e, f)
        spec = radicals(R)
        assert set(spec.nil_radical.members) == oracles.nilpotents(R.mul), R.name
        for I in spec.all_ideals:
            assert is_prime(R, I) == is_pseudodomain(quotient(R, I).ring), (R.name, I.members)
            if prof.is_pseudomeadow:
                for x in R.elements:
                    assert (x in I) == (prof.inverse[x] in I), (R.name, I.members, x)


def test_criterion_9_determinism(criterion):
    criterion(9, "verify --corpus --json byte-identical across runs; .alg round-trip byte-exact")
    runner = CliRunner()
    first = runner.invoke(main, ["verify", "--corpus", "--json"])
    second = runner.invoke(main, ["verify", "--corpus", "--json"])
    assert first.exit_code == 0 and second.exit_code == 0
    assert first.stdout_bytes == second.stdout_bytes
    assert json.loads(first.output)["ok"] is True
    for doc in corpus():
        text = serialize_algebra(doc)
        assert serialize_algebra(parse_algebra(text)) == text, doc.name
