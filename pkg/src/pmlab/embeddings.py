"""Residue fields and embeddings into products of fields."""

from __future__ import annotations

from dataclasses import dataclass

from .core import FieldWitness, FinitePseudoring, build_product, field_witness, homomorphism_defect, product_index
from .errors import InvariantViolation, NotPrime, NotPseudomeadow, NotReduced
from .ideals import Ideal, enumerate_ideals, is_prime, radicals
from .quotients import QuotientRing, _as_ideal, quotient
from .regularity import vn_profile


def quotient_field_check(R: FinitePseudoring, m) -> FieldWitness:
    """Build ``R/m`` for a prime ``m`` and return its field witness.

    Finite pseudodomains are not assumed to be fields; the witness is
    searched for.  For pseudomeadows, the identity must be ``e(x) + m`` for
    every ``x`` outside ``m`` and the inverse of ``x + m`` must be
    ``x^(-1) + m``.
    """
    m = _as_ideal(R, m)
    if not is_prime(R, m):
        raise NotPrime(f"{m!r} is not prime")
    q = quotient(R, m)
    w = field_witness(q.ring)
    if w is None:
        raise InvariantViolation(f"{R.name}: quotient by prime {m.members} is not a field", (m.mask,))
    prof = vn_profile(R)
    for x in R.elements:
        if x in m or prof.inverse[x] is None:
            continue
        if q.projection[prof.e_of[x]] != w.identity:
            raise InvariantViolation(f"{R.name}: e({x}) + m is not the identity of R/m", (x, m.mask))
        if prof.is_pseudomeadow and q.projection[prof.inverse[x]] != w.inverse[q.projection[x]]:
            raise InvariantViolation(f"{R.name}: x^(-1) + m is not the inverse of x + m", (x, m.mask))
    return w


@dataclass(frozen=True)
class Embedding:
    source: FinitePseudoring
    ideals: tuple[Ideal, ...]
    factors: tuple[QuotientRing, ...]
    map: tuple[tuple[int, ...], ...]
    injective: bool
    subdirect: bool

    def product_ring(self) -> FinitePseudoring:
        return build_product([q.ring for q in self.factors], name=f"fields({self.source.name})")

    def product_map(self) -> tuple[int, ...]:
        orders = [q.ring.order for q in self.factors]
        return tuple(product_index(orders, t) for t in self.map)


def _embed(R: FinitePseudoring, ideals) -> Embedding:
    factors = tuple(quotient(R, I) for I in ideals)
    for I in ideals:
        quotient_field_check(R, I)
    image = tuple(tuple(q.projection[x] for q in factors) for x in R.elements)
    injective = len(set(image)) == R.order
    subdirect = all(set(q.projection) == set(q.ring.elements) for q in factors)
    emb = Embedding(R, tuple(ideals), factors, image, injective, subdirect)
    defect = homomorphism_defect(R, emb.product_ring(), emb.product_map())
    if defect is not None:
        raise InvariantViolation(f"{R.name}: embedding is not a homomorphism", defect)
    return emb


def subdirect_embed(M: FinitePseudoring) -> Embedding:
    """``x -> (x + m)`` over all maximal ideals of a pseudomeadow."""
    prof = vn_profile(M)
    if not prof.is_pseudomeadow:
        raise NotPseudomeadow(f"{M.name} is not a pseudomeadow", element=prof.inverse.index(None))
    spec = radicals(M)
    emb = _embed(M, spec.maximals)
    kernel = {x for x in M.elements if all(c == 0 for c in emb.map[x])}
    if kernel != set(spec.jacobson_radical.members) or kernel != {0} or spec.nil_radical.mask != 1:
        raise InvariantViolation(f"{M.name}: kernel of subdirect map is not zero", tuple(sorted(kernel)))
    if not (emb.injective and emb.subdirect):
        raise InvariantViolation(f"{M.name}: not a subdirect embedding")
    return emb


def embed_reduced(R: FinitePseudoring) -> Embedding:
    """``x -> (x + p)`` over all prime ideals of a reduced pseudoring."""
    if vn_profile(R).nilpotents != {0}:
        raise NotReduced(f"{R.name} has nonzero nilpotents")
    spec = radicals(R)
    emb = _embed(R, spec.primes)
    if not emb.injective:
        raise InvariantViolation(f"{R.name}: reduced but map to residue fields not injective")
    return emb


def nilpotents_killed(R: FinitePseudoring) -> bool:
    """For any ring, the map into the product of residue fields at primes kills every nilpotent."""
    spec = radicals(R)
    nil = vn_profile(R).nilpotents
    return all(x in p for p in spec.primes for x in nil)


def is_subdirect_product_of_fields(R: FinitePseudoring) -> bool:
    """Experimental: exhaustive search over ideals with field quotients.

    ``R`` qualifies when it is nonzero and the ideals ``I`` with ``R/I`` a
    field intersect to zero.  Data only, no theory behind it.
    """
    if R.order < 2:
        return False
    mask = R.full_mask
    for I in enumerate_ideals(R):
        if I.is_proper and field_witness(quotient(R, I).ring) is not None:
            mask &= I.mask
    return mask == 1
