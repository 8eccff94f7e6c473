"""Quotient pseudorings and localizations at prime ideals.

Fractions are materialized: the localization at a prime ``p`` is built on
the finite set of pairs ``(a, s)`` with ``s`` outside ``p``, grouped into
equivalence classes.  The class representative is the lexicographically
least pair, and classes are indexed in order of their representatives, so
the class of ``(0, s_min)`` is always element 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core import FinitePseudoring, field_witness, homomorphism_defect, mask_of
from .errors import InvariantViolation, NotAnIdeal, NotMaximal, NotPrime, NotPseudomeadow
from .ideals import Ideal, enumerate_ideals, ideal_sum, is_ideal, is_maximal, is_prime, radicals
from .regularity import vn_profile


def _as_ideal(R: FinitePseudoring, I) -> Ideal:
    if isinstance(I, Ideal):
        if I.ring != R:
            raise NotAnIdeal(f"ideal belongs to {I.ring.name}, not {R.name}")
        return I
    members = set(I)
    if not members <= set(R.elements) or not is_ideal(R, members):
        raise NotAnIdeal(f"{sorted(members)} is not an ideal of {R.name}")
    return Ideal(R, mask_of(members))


def _set_label(R: FinitePseudoring, I: Ideal) -> str:
    return "{" + ",".join(I.labels()) + "}"


@dataclass(frozen=True)
class QuotientRing:
    ambient: FinitePseudoring
    ideal: Ideal
    cosets: tuple[tuple[int, ...], ...]
    ring: FinitePseudoring
    projection: tuple[int, ...]

    def rep(self, i: int) -> int:
        return self.cosets[i][0]

    def image(self, J) -> Ideal:
        """The ideal ``(J + I)/I`` of the quotient."""
        J = _as_ideal(self.ambient, J)
        return Ideal(self.ring, mask_of(self.projection[x] for x in J.members))


@lru_cache(maxsize=1024)
def _quotient(R: FinitePseudoring, I: Ideal) -> QuotientRing:
    members = I.members
    coset_of = {}
    cosets = []
    for x in R.elements:
        if x in coset_of:
            continue
        coset = tuple(sorted({R.add[x][i] for i in members}))
        cosets.append(coset)
        for y in coset:
            coset_of[y] = coset
    cosets.sort()
    index = {c: k for k, c in enumerate(cosets)}
    projection = tuple(index[coset_of[x]] for x in R.elements)
    add = [[projection[R.add[a[0]][b[0]]] for b in cosets] for a in cosets]
    mul = [[projection[R.mul[a[0]][b[0]]] for b in cosets] for a in cosets]
    labels = tuple(f"[{R.label(c[0])}]" for c in cosets)
    Q = FinitePseudoring(add, mul, f"{R.name}/{_set_label(R, I)}", labels)
    q = QuotientRing(R, I, tuple(cosets), Q, projection)

    defect = homomorphism_defect(R, Q, projection)
    if defect is not None:
        raise InvariantViolation(f"{R.name}: projection onto quotient not a homomorphism", defect)
    if sorted(set(projection)) != list(Q.elements):
        raise InvariantViolation(f"{R.name}: projection not surjective")
    if {x for x in R.elements if projection[x] == 0} != set(members):
        raise InvariantViolation(f"{R.name}: projection kernel differs from ideal")
    return q


def quotient(R: FinitePseudoring, I) -> QuotientRing:
    return _quotient(R, _as_ideal(R, I))


@dataclass(frozen=True)
class LocalizedRing:
    ambient: FinitePseudoring
    prime: Ideal
    denominators: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    pair_class: tuple[int, ...]
    classes: tuple[tuple[tuple[int, int], ...], ...]
    ring: FinitePseudoring
    canonical: tuple[int, ...]
    identity: int
    relation: np.ndarray = field(compare=False, repr=False)

    def class_of(self, a: int, s: int) -> int:
        return self.pair_class[a * len(self.denominators) + self.denominators.index(s)]

    def rep(self, c: int) -> tuple[int, int]:
        return self.classes[c][0]

    @property
    def order(self) -> int:
        return self.ring.order

    def __hash__(self):
        return hash((self.ambient, self.prime))


def _sub_table(R: FinitePseudoring) -> np.ndarray:
    A = np.asarray(R.add, dtype=np.intp)
    neg = np.asarray(R.neg, dtype=np.intp)
    return A[:, neg]


@lru_cache(maxsize=1024)
def _localize(R: FinitePseudoring, p: Ideal) -> LocalizedRing:
    S = tuple(x for x in R.elements if x not in p)
    for s, t in itertools.product(S, repeat=2):
        if R.mul[s][t] in p:
            raise InvariantViolation(f"{R.name}: complement of prime not multiplicatively closed", (s, t))
    k = len(S)
    pairs = tuple((a, s) for a in R.elements for s in S)

    M = np.asarray(R.mul, dtype=np.intp)
    SUB = _sub_table(R)
    # z is killed by some denominator
    killed = (M[:, list(S)] == 0).any(axis=1)
    A = np.array([a for a, _ in pairs], dtype=np.intp)
    D = np.array([s for _, s in pairs], dtype=np.intp)
    rel = killed[SUB[M[A[:, None], D[None, :]], M[A[None, :], D[:, None]]]]

    first = rel.argmax(axis=1)
    reps = sorted(set(int(v) for v in first))
    cls_of_rep = {r: c for c, r in enumerate(reps)}
    pair_class = tuple(cls_of_rep[int(v)] for v in first)
    classes = [[] for _ in reps]
    for i, c in enumerate(pair_class):
        classes[c].append(pairs[i])

    def cls(a: int, s: int) -> int:
        return pair_class[a * k + S.index(s)]

    rep_pairs = [pairs[r] for r in reps]
    add = [[cls(R.add[R.mul[a][t]][R.mul[b][s]], R.mul[s][t]) for b, t in rep_pairs] for a, s in rep_pairs]
    mul = [[cls(R.mul[a][b], R.mul[s][t]) for b, t in rep_pairs] for a, s in rep_pairs]
    labels = tuple(f"{R.label(a)}/{R.label(s)}" for a, s in rep_pairs)
    L = FinitePseudoring(add, mul, f"{R.name}_{_set_label(R, p)}", labels)

    identity = cls(S[0], S[0])
    if any(cls(s, s) != identity for s in S):
        raise InvariantViolation(f"{R.name}: s/s classes differ")
    canonical = tuple(cls(R.mul[x][S[0]], S[0]) for x in R.elements)
    for s in S:
        if any(cls(R.mul[x][s], s) != canonical[x] for x in R.elements):
            raise InvariantViolation(f"{R.name}: canonical map depends on s", (s,))

    return LocalizedRing(
        R, p, S, pairs, pair_class, tuple(tuple(c) for c in classes), L, canonical, identity, rel
    )


def localize(R: FinitePseudoring, p) -> LocalizedRing:
    """``R_p``: fractions ``a/s`` with ``s`` outside the prime ideal ``p``."""
    p = _as_ideal(R, p)
    if not is_prime(R, p):
        raise NotPrime(f"{_set_label(R, p)} is not a prime ideal of {R.name}")
    L = _localize(R, p)
    if L.ring.order > len(R.elements) * len(L.denominators):
        raise InvariantViolation(f"{R.name}: more fraction classes than pairs")
    return L


def localize_ideal(R: FinitePseudoring, I, p) -> Ideal:
    """``I_p``: the classes containing some ``a/s`` with ``a`` in ``I``."""
    I = _as_ideal(R, I)
    L = localize(R, p)
    mask = 0
    for a in I.members:
        for s in L.denominators:
            mask |= 1 << L.class_of(a, s)
    if not is_ideal(L.ring, members_of_mask(mask)):
        raise InvariantViolation(f"{R.name}: localized ideal is not an ideal", (I.mask,))
    return Ideal(L.ring, mask)


def members_of_mask(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


# -- exhaustive checks on a localization ---------------------------------------


def check_fraction_equivalence(L: LocalizedRing) -> None:
    rel = L.relation
    if not rel.diagonal().all():
        i = int(np.flatnonzero(~rel.diagonal())[0])
        raise InvariantViolation("fraction relation not reflexive", L.pairs[i])
    asym = np.argwhere(rel != rel.T)
    if len(asym):
        i, j = asym[0]
        raise InvariantViolation("fraction relation not symmetric", (L.pairs[i], L.pairs[j]))
    R = rel.astype(np.float32)
    trans = np.argwhere(((R @ R) > 0) & ~rel)
    if len(trans):
        i, j = trans[0]
        raise InvariantViolation("fraction relation not transitive", (L.pairs[i], L.pairs[j]))


def check_operations_well_defined(L: LocalizedRing) -> None:
    """Sum and product of every pair of fractions land in the tabled class."""
    R = L.ambient
    k = len(L.denominators)
    A = np.asarray(R.add, dtype=np.intp)
    M = np.asarray(R.mul, dtype=np.intp)
    S = np.asarray(L.denominators, dtype=np.intp)
    spos = np.full(R.order, -1, dtype=np.intp)
    spos[S] = np.arange(k)
    pc = np.asarray(L.pair_class, dtype=np.intp)
    a = np.array([x for x, _ in L.pairs], dtype=np.intp)
    s = np.array([y for _, y in L.pairs], dtype=np.intp)
    cls = pc
    den = M[s[:, None], s[None, :]]
    num_add = A[M[a[:, None], s[None, :]], M[a[None, :], s[:, None]]]
    num_mul = M[a[:, None], a[None, :]]
    got_add = pc[num_add * k + spos[den]]
    got_mul = pc[num_mul * k + spos[den]]
    TA = np.asarray(L.ring.add, dtype=np.intp)
    TM = np.asarray(L.ring.mul, dtype=np.intp)
    for got, table, op in ((got_add, TA, "+"), (got_mul, TM, "*")):
        bad = np.argwhere(got != table[cls[:, None], cls[None, :]])
        if len(bad):
            i, j = bad[0]
            raise InvariantViolation(f"fraction {op} depends on representatives", (L.pairs[i], L.pairs[j]))


def check_canonical_homomorphism(L: LocalizedRing) -> None:
    defect = homomorphism_defect(L.ambient, L.ring, L.canonical)
    if defect is not None:
        raise InvariantViolation("canonical map into localization not a homomorphism", defect)


def check_prime_correspondence(R: FinitePseudoring, p) -> None:
    """Primes of ``R_p`` are exactly the ``q_p`` for primes ``q`` inside ``p``, without collisions."""
    L = localize(R, p)
    inside = [q for q in radicals(R).primes if q <= L.prime]
    localized = [localize_ideal(R, q, L.prime).mask for q in inside]
    if len(set(localized)) != len(localized):
        raise InvariantViolation(f"{R.name}: distinct primes collapse in localization")
    loc_primes = {I.mask for I in enumerate_ideals(L.ring) if is_prime(L.ring, I)}
    if loc_primes != set(localized):
        raise InvariantViolation(
            f"{R.name}: primes of localization {sorted(loc_primes)} != {sorted(localized)}"
        )


def check_ideal_additivity(R: FinitePseudoring, I, J, p) -> None:
    I, J = _as_ideal(R, I), _as_ideal(R, J)
    lhs = localize_ideal(R, ideal_sum(I, J), p)
    rhs = ideal_sum(localize_ideal(R, I, p), localize_ideal(R, J, p))
    if lhs.mask != rhs.mask:
        raise InvariantViolation(f"{R.name}: (I+J)_p != I_p + J_p", (I.mask, J.mask))


@dataclass(frozen=True)
class TransportIso:
    """The canonical isomorphism ``(R/I)_{p/I} -> R_p / I_p``."""

    quotient: QuotientRing
    source: LocalizedRing
    local_ideal: Ideal
    target: QuotientRing
    map: tuple[int, ...]

    def push(self, ideal: Ideal) -> set[int]:
        return {self.map[c] for c in ideal.members}


def transport_isomorphism(R: FinitePseudoring, I, p) -> TransportIso:
    I = _as_ideal(R, I)
    p = _as_ideal(R, p)
    if not I <= p:
        raise ValueError("the ideal must lie inside the prime")
    q = quotient(R, I)
    pbar = q.image(p)
    src = localize(q.ring, pbar)
    L = localize(R, p)
    Ip = localize_ideal(R, I, p)
    tgt = quotient(L.ring, Ip)
    image = [None] * src.ring.order
    for rb, sb in src.pairs:
        c = src.class_of(rb, sb)
        for r in q.cosets[rb]:
            for s in q.cosets[sb]:
                v = tgt.projection[L.class_of(r, s)]
                if image[c] is None:
                    image[c] = v
                elif image[c] != v:
                    raise InvariantViolation(f"{R.name}: transport map not well defined", (rb, sb, r, s))
    iso = tuple(image)
    if sorted(iso) != list(tgt.ring.elements):
        raise InvariantViolation(f"{R.name}: transport map not bijective")
    defect = homomorphism_defect(src.ring, tgt.ring, iso)
    if defect is not None:
        raise InvariantViolation(f"{R.name}: transport map not a homomorphism", defect)
    return TransportIso(q, src, Ip, tgt, iso)


# -- the theorem on localizations of pseudomeadows -----------------------------


@dataclass(frozen=True)
class LocalizationVerdict:
    order: int
    is_field: bool
    m_m_is_zero: bool
    f_surjective: bool
    kernel: frozenset[int]
    kernel_is_m: bool
    quotient_iso_ok: bool
    preimage_of_identity: frozenset[int]
    preimage_ok: bool
    denominator_idempotents: frozenset[int]
    e_difference_ok: bool

    @property
    def part_a(self) -> bool:
        return self.is_field and self.m_m_is_zero

    @property
    def part_b(self) -> bool:
        return self.f_surjective and self.kernel_is_m and self.quotient_iso_ok

    @property
    def part_c(self) -> bool:
        return self.preimage_ok

    @property
    def part_d(self) -> bool:
        return self.e_difference_ok

    @property
    def all_ok(self) -> bool:
        return self.part_a and self.part_b and self.part_c and self.part_d


def _require_pseudomeadow(M: FinitePseudoring) -> None:
    prof = vn_profile(M)
    if not prof.is_pseudomeadow:
        bad = prof.inverse.index(None)
        raise NotPseudomeadow(f"{M.name} is not a pseudomeadow: {M.label(bad)} has no inverse", element=bad)


def verify_localization_theorem(M: FinitePseudoring, m) -> LocalizationVerdict:
    _require_pseudomeadow(M)
    m = _as_ideal(M, m)
    if not is_maximal(M, m):
        raise NotMaximal(f"{_set_label(M, m)} is not a maximal ideal of {M.name}")
    prof = vn_profile(M)
    L = localize(M, m)
    f = L.canonical
    S = L.denominators

    is_field = field_witness(L.ring) is not None
    m_m_is_zero = localize_ideal(M, m, m).is_zero

    surjective = set(f) == set(L.ring.elements)
    for c in L.ring.elements:
        for x, s in L.classes[c]:
            if f[M.mul[x][prof.inverse[s]]] != c:
                surjective = False

    kernel = frozenset(x for x in M.elements if f[x] == 0)
    kernel_is_m = kernel == frozenset(m.members)

    q = quotient(M, m)
    induced = []
    iso_ok = True
    for coset in q.cosets:
        vals = {f[x] for x in coset}
        if len(vals) != 1:
            iso_ok = False
        induced.append(min(vals))
    iso_ok = (
        iso_ok
        and sorted(induced) == list(L.ring.elements)
        and homomorphism_defect(q.ring, L.ring, induced) is None
    )

    preimage = frozenset(x for x in M.elements if f[x] == L.identity)
    preimage_ok = all(
        preimage == frozenset(M.add[prof.e_of[s]][y] for y in m.members) for s in S
    )
    e_vals = frozenset(prof.e_of[s] for s in S)
    e_diff_ok = all(M.sub(e1, e2) in m for e1 in e_vals for e2 in e_vals)

    return LocalizationVerdict(
        L.ring.order, is_field, m_m_is_zero, surjective, kernel, kernel_is_m, iso_ok,
        preimage, preimage_ok, e_vals, e_diff_ok,
    )


def local_global_zero(M: FinitePseudoring, I) -> bool:
    """Whether ``I_m = 0`` at every maximal ``m``; if so, ``I`` must be zero."""
    _require_pseudomeadow(M)
    I = _as_ideal(M, I)
    holds = all(localize_ideal(M, I, m).is_zero for m in radicals(M).maximals)
    if holds and not I.is_zero:
        raise InvariantViolation(f"{M.name}: I localizes to zero everywhere but is nonzero", (I.mask,))
    return holds


def local_global_eq(M: FinitePseudoring, I, J) -> bool:
    """Whether ``I_m = J_m`` at every maximal ``m``; if so, ``I = J``.

    Also checks, at each maximal ``m`` containing ``I``, that the transport
    isomorphism carries ``((I+J)/I)_{m/I}`` onto ``(I+J)_m / I_m``.
    """
    _require_pseudomeadow(M)
    I, J = _as_ideal(M, I), _as_ideal(M, J)
    maximals = radicals(M).maximals
    holds = all(localize_ideal(M, I, m).mask == localize_ideal(M, J, m).mask for m in maximals)
    if holds and I.mask != J.mask:
        raise InvariantViolation(f"{M.name}: I_m = J_m everywhere but I != J", (I.mask, J.mask))

    IJ = ideal_sum(I, J)
    for m in maximals:
        if not I <= m:
            continue
        T = transport_isomorphism(M, I, m)
        pbar = T.quotient.image(m)
        lhs = T.push(localize_ideal(T.quotient.ring, T.quotient.image(IJ), pbar))
        rhs = {T.target.projection[c] for c in localize_ideal(M, IJ, m).members}
        if lhs != rhs:
            raise InvariantViolation(f"{M.name}: transport of (I+J)/I fails", (I.mask, J.mask, m.mask))
    return holds
