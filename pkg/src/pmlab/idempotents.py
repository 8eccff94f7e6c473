"""Idempotent poset, the meadows Re, and decomposition into fields."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    FieldWitness,
    FinitePseudoring,
    build_product,
    field_witness,
    find_identity,
    homomorphism_defect,
    product_index,
    restrict,
)
from .errors import InvariantViolation, NotIdempotent, NotPseudomeadow
from .regularity import vn_profile


@dataclass(frozen=True)
class IdempotentPoset:
    ring: FinitePseudoring
    idempotents: tuple[int, ...]
    leq: tuple[tuple[bool, ...], ...]
    minimal: tuple[int, ...]

    def le(self, e: int, f: int) -> bool:
        return self.ring.mul[e][f] == e


def _check_toolkit(R: FinitePseudoring, E: list[int], minimal: list[int]) -> None:
    Eset = set(E)
    for e, f in itertools.product(E, repeat=2):
        ef = R.mul[e][f]
        if ef not in Eset:
            raise InvariantViolation(f"{R.name}: product of idempotents {e},{f} not idempotent", (e, f))
        if ef == e and R.sub(f, e) not in Eset:
            raise InvariantViolation(f"{R.name}: {f}-{e} not idempotent although {e}<={f}", (e, f))
        if ef == 0 and R.add[e][f] not in Eset:
            raise InvariantViolation(f"{R.name}: sum of orthogonal idempotents {e},{f} not idempotent", (e, f))
    for e, f in itertools.combinations(minimal, 2):
        if R.mul[e][f] != 0:
            raise InvariantViolation(f"{R.name}: minimal idempotents {e},{f} not orthogonal", (e, f))


@lru_cache(maxsize=256)
def idempotent_poset(R: FinitePseudoring) -> IdempotentPoset:
    mul = R.mul
    E = [e for e in R.elements if mul[e][e] == e]
    leq = tuple(tuple(mul[e][f] == e for f in E) for e in E)
    k = len(E)
    for i in range(k):
        if not leq[i][i]:
            raise InvariantViolation(f"{R.name}: order not reflexive at {E[i]}", (E[i],))
        for j in range(k):
            if i != j and leq[i][j] and leq[j][i]:
                raise InvariantViolation(f"{R.name}: order not antisymmetric", (E[i], E[j]))
            if leq[i][j]:
                for l in range(k):
                    if leq[j][l] and not leq[i][l]:
                        raise InvariantViolation(f"{R.name}: order not transitive", (E[i], E[j], E[l]))
    minimal = [
        E[i]
        for i in range(k)
        if E[i] != 0 and not any(E[j] != 0 and j != i and leq[j][i] for j in range(k))
    ]
    _check_toolkit(R, E, minimal)
    return IdempotentPoset(R, tuple(E), leq, tuple(minimal))


@dataclass(frozen=True)
class Component:
    """The subalgebra ``Re`` re-indexed, with ``e`` as its identity."""

    ring: FinitePseudoring
    inclusion: tuple[int, ...]
    idempotent: int
    field: FieldWitness | None

    def index_of(self, x: int) -> int:
        return self.inclusion.index(x)


def submeadow_Re(R: FinitePseudoring, e: int) -> Component:
    if R.mul[e][e] != e:
        raise NotIdempotent(f"{R.label(e)} is not idempotent in {R.name}")
    prof = vn_profile(R)
    if not prof.is_pseudomeadow:
        bad = prof.inverse.index(None)
        raise NotPseudomeadow(f"{R.name} is not a pseudomeadow: {R.label(bad)} has no inverse", element=bad)
    members = {R.mul[x][e] for x in R.elements}
    sub, inclusion = restrict(R, members, f"{R.name}*{R.label(e)}")
    local_e = inclusion.index(e)
    if find_identity(sub) != local_e:
        raise InvariantViolation(f"{R.name}: Re for e={e} does not have identity e", (e,))
    if not vn_profile(sub).is_meadow:
        raise InvariantViolation(f"{R.name}: Re for e={e} is not a meadow", (e,))

    witness = None
    if e in idempotent_poset(R).minimal:
        witness = field_witness(sub)
        if witness is None:
            raise InvariantViolation(f"{R.name}: Re for minimal e={e} is not a field", (e,))
        # inverse of xe is x^(-1) e, independently re-checked against the scan
        for x in R.elements:
            xe = R.mul[x][e]
            if xe == 0:
                continue
            claimed = R.mul[prof.inverse[x]][e]
            if R.mul[xe][claimed] != e or inclusion[witness.inverse[inclusion.index(xe)]] != claimed:
                raise InvariantViolation(f"{R.name}: (xe)^-1 != x^(-1)e for x={x}, e={e}", (x, e))
    return Component(sub, inclusion, e, witness)


@dataclass(frozen=True)
class Decomposition:
    ring: FinitePseudoring
    minimal: tuple[int, ...]
    identity: int
    components: tuple[Component, ...]
    forward: tuple[tuple[int, ...], ...]

    def h(self, x: int) -> tuple[int, ...]:
        """``(x e_1, ..., x e_n)`` as elements of the ambient ring."""
        return self.forward[x]

    def recompose(self, parts) -> int:
        return self.ring.sum(parts)

    def product_ring(self) -> FinitePseudoring:
        return build_product([c.ring for c in self.components], name=f"prod({self.ring.name})")

    def product_map(self) -> tuple[int, ...]:
        """``h`` as an index map into :meth:`product_ring`."""
        orders = [c.ring.order for c in self.components]
        return tuple(
            product_index(orders, [c.index_of(p) for c, p in zip(self.components, self.forward[x])])
            for x in self.ring.elements
        )

    def field_orders(self) -> list[int]:
        return [c.ring.order for c in self.components]


def minimal_idempotent_sum(R: FinitePseudoring) -> int:
    return R.sum(idempotent_poset(R).minimal)


def decompose(M: FinitePseudoring) -> Decomposition:
    """Split a finite pseudomeadow as ``M e_1 x ... x M e_n``.

    Every claim is checked on the instance: the minimal idempotents sum to
    the identity, ``h(x) = (x e_i)`` is a bijective homomorphism and the
    components are fields.
    """
    poset = idempotent_poset(M)
    minimal = poset.minimal
    total = M.sum(minimal)
    prof = vn_profile(M)
    if not prof.is_pseudomeadow:
        bad = prof.inverse.index(None)
        raise NotPseudomeadow(
            f"{M.name} is not a pseudomeadow: {M.label(bad)} has no inverse; "
            f"sum of minimal idempotents is {M.label(total)}",
            element=bad,
            minimal_sum=total,
        )
    if any(M.mul[total][x] != x for x in M.elements):
        raise InvariantViolation(f"{M.name}: sum of minimal idempotents is not an identity", (total,))
    found = find_identity(M)
    if found != total:
        raise InvariantViolation(f"{M.name}: identity {found} differs from minimal sum {total}", (found, total))

    components = tuple(submeadow_Re(M, e) for e in minimal)
    forward = tuple(tuple(M.mul[x][e] for e in minimal) for x in M.elements)
    dec = Decomposition(M, minimal, total, components, forward)

    images = set(forward)
    expected = 1
    for c in components:
        expected *= c.ring.order
    if len(images) != M.order or expected != M.order:
        raise InvariantViolation(f"{M.name}: h is not a bijection", (len(images), expected))
    for x in M.elements:
        if dec.recompose(forward[x]) != x:
            raise InvariantViolation(f"{M.name}: recompose(h(x)) != x", (x,))
    for parts in itertools.product(*(c.inclusion for c in components)):
        if forward[dec.recompose(parts)] != parts:
            raise InvariantViolation(f"{M.name}: h(recompose(t)) != t", parts)
    defect = homomorphism_defect(M, dec.product_ring(), dec.product_map())
    if defect is not None:
        raise InvariantViolation(f"{M.name}: h is not a homomorphism", defect)
    return dec


def idempotent_as_sum(M: FinitePseudoring, e: int) -> tuple[int, ...]:
    """The minimal idempotents summing to ``e``: those ``e_i`` with ``e e_i = e_i``."""
    if M.mul[e][e] != e:
        raise NotIdempotent(f"{M.label(e)} is not idempotent in {M.name}")
    if not vn_profile(M).is_pseudomeadow:
        raise NotPseudomeadow(f"{M.name} is not a pseudomeadow")
    parts = tuple(f for f in idempotent_poset(M).minimal if M.mul[e][f] == f)
    if M.sum(parts) != e:
        raise InvariantViolation(f"{M.name}: {e} is not the sum of its minimal parts {parts}", (e, parts))
    return parts


def check_poset_transport(dec: Decomposition) -> None:
    """Transport E(M) through h and compare with the poset of the product."""
    M = dec.ring
    P = dec.product_ring()
    phi = dec.product_map()
    src, dst = idempotent_poset(M), idempotent_poset(P)
    if sorted(phi[e] for e in src.idempotents) != list(dst.idempotents):
        raise InvariantViolation(f"{M.name}: h does not map E(M) onto E(product)")
    if sorted(phi[e] for e in src.minimal) != sorted(dst.minimal):
        raise InvariantViolation(f"{M.name}: h does not preserve minimality")
    for e, f in itertools.product(src.idempotents, repeat=2):
        if src.le(e, f) != dst.le(phi[e], phi[f]):
            raise InvariantViolation(f"{M.name}: h does not preserve the order", (e, f))


def check_identity_sum_bound(M: FinitePseudoring) -> None:
    """When the identity is a sum of distinct minimal idempotents, those are all of them."""
    poset = idempotent_poset(M)
    one = find_identity(M)
    if one is None:
        return
    minimal = poset.minimal
    for r in range(len(minimal) + 1):
        for subset in itertools.combinations(minimal, r):
            if M.sum(subset) == one:
                if set(subset) != set(minimal):
                    raise InvariantViolation(f"{M.name}: identity is a sum of a proper subset", subset)
                if len(poset.idempotents) > 2 ** len(minimal):
                    raise InvariantViolation(f"{M.name}: more than 2^n idempotents", (len(poset.idempotents),))
                return
