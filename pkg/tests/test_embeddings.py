import pytest
from hypothesis import assume, given, settings

import oracles
from pmlab.core import build_product, build_zmod, check_axioms, homomorphism_defect
from pmlab.embeddings import embed_reduced, is_subdirect_product_of_fields, quotient_field_check, subdirect_embed
from pmlab.errors import NotPrime, NotPseudomeadow, NotReduced
from pmlab.regularity import is_pseudomeadow, is_reduced
from strategies import pseudorings


def test_residue_fields(z6, chain2):
    assert quotient_field_check(z6, [0, 2, 4]) is not None
    assert quotient_field_check(z6, [0, 3]) is not None
    for m in oracles.maximals(chain2.add, chain2.mul):
        assert quotient_field_check(chain2, sorted(m)) is not None
    with pytest.raises(NotPrime):
        quotient_field_check(z6, [0])


def test_z6_embeds_onto_product(z6):
    emb = subdirect_embed(z6)
    assert emb.injective and emb.subdirect
    assert sorted(q.ring.order for q in emb.factors) == [2, 3]
    assert sorted(emb.product_map()) == list(range(6))
    assert embed_reduced(z6).map == emb.map


def test_zero_ring_embeds_trivially():
    emb = subdirect_embed(build_zmod(1))
    assert emb.factors == () and emb.injective
    assert not is_subdirect_product_of_fields(build_zmod(1))


def test_embed_reduced_examples():
    F = build_zmod(2)
    emb = embed_reduced(F)
    assert emb.map == ((0,), (1,))
    P = build_product([build_zmod(2), build_zmod(2)])
    assert [q.ring.order for q in embed_reduced(P).factors] == [2, 2]


def test_rejections(z4, cex):
    with pytest.raises(NotReduced):
        embed_reduced(z4)
    with pytest.raises(NotPseudomeadow):
        subdirect_embed(cex)


@settings(max_examples=50, deadline=None)
@given(pseudorings(max_order=20))
def test_subdirect_embedding_random(R):
    assume(is_pseudomeadow(R))
    emb = subdirect_embed(R)
    assert emb.injective and emb.subdirect
    assert homomorphism_defect(R, emb.product_ring(), emb.product_map()) is None
    for q in emb.factors:
        assert oracles.is_field(q.ring.add, q.ring.mul)


@settings(max_examples=50, deadline=None)
@given(pseudorings(max_order=20))
def test_reduced_iff_embeds(R):
    assume(R.order > 1)
    if is_reduced(R):
        emb = embed_reduced(R)
        assert emb.injective
        assert check_axioms(emb.product_ring()).ok
    else:
        with pytest.raises(NotReduced):
            embed_reduced(R)
