import pytest

from pmlab.core import build_zmod, check_axioms
from pmlab.corpus import RECIPES, corpus, corpus_ring, corpus_rings, gen_random, random_documents
from pmlab.fileformat import serialize_algebra


def test_required_members():
    names = {R.name for R in corpus_rings()}
    assert {"Z6", "Z6_zeromul", "2Z8xZ2xZ3", "F2^3", "2Z8", "Z4"} <= names
    assert len(names) == len(corpus_rings())


def test_corpus_passes_axioms():
    for R in corpus_rings():
        assert check_axioms(R).ok, R.name


def test_corpus_documents_have_provenance():
    assert all(doc.provenance for doc in corpus())


def test_lookup():
    assert corpus_ring("Z6") == build_zmod(6)
    with pytest.raises(KeyError):
        corpus_ring("nope")


def test_product_recipe_over_two_and_three():
    doc = gen_random(1, "product", primes=(2, 3))
    n = doc.order
    for p in (2, 3):
        while n % p == 0:
            n //= p
    assert n == 1
    assert "F5" not in doc.provenance


@pytest.mark.parametrize("recipe", RECIPES)
def test_determinism(recipe):
    for seed in range(5):
        a, b = gen_random(seed, recipe), gen_random(seed, recipe)
        assert serialize_algebra(a) == serialize_algebra(b)
        assert check_axioms((a.add, a.mul)).ok


def test_quotient_recipe_on_z12():
    for seed in range(10):
        doc = gen_random(seed, "quotient", base=build_zmod(12))
        assert 12 % doc.order == 0


def test_unknown_recipe():
    with pytest.raises(ValueError):
        gen_random(0, "bogus")


def test_random_documents_cycle():
    docs = random_documents(3, 8)
    assert [d.name.split("-")[1] for d in docs] == list(RECIPES) * 2
    assert [serialize_algebra(d) for d in docs] == [serialize_algebra(d) for d in random_documents(3, 8)]
