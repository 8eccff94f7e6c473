"""Named example algebras and seeded random generators.

Random algebras are built only from constructions that preserve the
axioms (products, quotients, subpseudorings), never by sampling raw tables.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .core import (
    FinitePseudoring,
    build_chain_monoid_ring,
    build_product,
    build_sub,
    build_zero_mul,
    build_zmod,
    field_power,
)
from .errors import CapExceeded
from .fileformat import AlgebraDocument
from .ideals import enumerate_ideals
from .quotients import quotient

RECIPES = ("product", "quotient", "sub", "mixed")


def even_z8() -> FinitePseudoring:
    """``{0, 2, 4, 6}`` inside ``Z_8``: a pseudoring without identity."""
    return build_sub(build_zmod(8), [2], name="2Z8").ring


def counterexample() -> FinitePseudoring:
    """``2Z8 x Z2 x Z3``: finitely many idempotents, no identity."""
    return build_product([even_z8(), build_zmod(2), build_zmod(3)], name="2Z8xZ2xZ3")


@lru_cache(maxsize=1)
def _corpus() -> tuple[tuple[FinitePseudoring, str], ...]:
    items: list[tuple[FinitePseudoring, str]] = []
    for n in (1, 2, 3, 4, 5, 6, 8, 12):
        items.append((build_zmod(n), f"integers modulo {n}"))
    items.append((build_zero_mul(6), "additive group of Z6 with all products zero"))
    items.append((build_zero_mul(2), "additive group of Z2 with all products zero"))
    z8e = even_z8()
    items.append((z8e, "even residues in Z8, a finite stand-in for the even integers"))
    items.append((quotient(z8e, [z8e.element("0"), z8e.element("4")]).ring.renamed("2Z8/4Z8"), "2Z8 modulo its maximal ideal {0,4}"))
    items.append((counterexample(), "2Z8 x Z2 x Z3, finite stand-in for 2Z x Z x Z"))
    for k in (1, 2, 3, 4):
        items.append((build_chain_monoid_ring(k), f"F2 monoid ring over the max-chain with {k} elements"))
    for k in (1, 2, 3):
        items.append((field_power(2, k), f"F2^{k}, truncation of finitely supported F2 sequences"))
    items.append((build_product([build_zmod(2), build_zmod(3)]), "product of fields of orders 2 and 3"))
    items.append((field_power(3, 2), "product of two fields of order 3"))
    items.append((build_product([build_zmod(2), build_zmod(5)]), "product of fields of orders 2 and 5"))
    items.append((build_product([build_zmod(2), build_zmod(3), build_zmod(5)]), "product of fields of orders 2, 3, 5"))
    items.append((build_product([build_zmod(4), build_zmod(2)]), "non-reduced ring Z4 x Z2"))
    items.append((build_product([build_zmod(3), build_zero_mul(2)]), "field times a zero-multiplication group"))
    return tuple(items)


def corpus_rings() -> list[FinitePseudoring]:
    return [R for R, _ in _corpus()]


def corpus() -> list[AlgebraDocument]:
    return [AlgebraDocument.from_ring(R, note) for R, note in _corpus()]


def corpus_ring(name: str) -> FinitePseudoring:
    for R in corpus_rings():
        if R.name == name:
            return R
    raise KeyError(name)


def _small_corpus(limit: int) -> list[FinitePseudoring]:
    return [R for R in corpus_rings() if R.order <= limit]


def gen_random(
    seed: int,
    recipe: str,
    *,
    base: FinitePseudoring | None = None,
    primes=(2, 3, 5),
    max_order: int = 48,
) -> AlgebraDocument:
    """A random algebra determined entirely by ``(seed, recipe)``."""
    if recipe not in RECIPES:
        raise ValueError(f"unknown recipe {recipe!r}; expected one of {RECIPES}")
    rng = random.Random(f"{recipe}/{seed}")

    if recipe == "product":
        factors, order = [], 1
        for _ in range(rng.randint(1, 3)):
            p = rng.choice(primes)
            if order * p > max_order:
                break
            factors.append(p)
            order *= p
        R = build_product([build_zmod(p) for p in factors], name=f"rand{seed}-product")
        note = "product of prime fields " + "x".join(f"F{p}" for p in factors)
    elif recipe == "quotient":
        B = base if base is not None else rng.choice(_small_corpus(max_order))
        ideals = [I for I in enumerate_ideals(B) if I.is_proper] or enumerate_ideals(B)
        I = rng.choice(ideals)
        R = quotient(B, I).ring.renamed(f"rand{seed}-quotient")
        note = f"quotient of {B.name} by {{{','.join(I.labels())}}}"
    elif recipe == "sub":
        B = base if base is not None else rng.choice(_small_corpus(max_order))
        gens = sorted(rng.sample(range(B.order), k=min(B.order, rng.randint(1, 2))))
        R = build_sub(B, gens, name=f"rand{seed}-sub").ring
        note = f"subpseudoring of {B.name} generated by {[B.label(g) for g in gens]}"
    else:
        pool = _small_corpus(8)
        A = rng.choice(pool)
        B = rng.choice([P for P in pool if P.order * A.order <= max_order])
        R = build_product([A, B], name=f"rand{seed}-mixed")
        note = f"product {A.name} x {B.name}"
    if R.order > 256:
        raise CapExceeded(f"random algebra of order {R.order}")
    return AlgebraDocument.from_ring(R, f"random {recipe}, seed {seed}: {note}")


def random_documents(seed: int, count: int) -> list[AlgebraDocument]:
    """``count`` algebras cycling through the recipes, derived from ``seed``."""
    docs = []
    for i in range(count):
        recipe = RECIPES[i % len(RECIPES)]
        doc = gen_random(seed * 100_003 + i, recipe)
        docs.append(doc)
    return docs
