"""Runs every property check against a set of algebras and collects a report.

Each theorem id maps to one check function.  A check either returns
normally (pass), returns a string starting with ``"n/a"`` when its
hypotheses do not apply, or raises :class:`InvariantViolation` carrying a
witness (fail).
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Callable

from .config import enumeration_cap
from .core import FinitePseudoring, check_axioms, field_witness, find_identity, is_pseudodomain
from .embeddings import embed_reduced, nilpotents_killed, quotient_field_check, subdirect_embed
from .errors import InvariantViolation, NotPrime, NotPseudomeadow, PmlabError
from .fileformat import AlgebraDocument
from .idempotents import (
    check_identity_sum_bound,
    check_poset_transport,
    decompose,
    idempotent_as_sum,
    idempotent_poset,
    submeadow_Re,
)
from .ideals import characterize, enumerate_ideals, is_prime, radicals
from .quotients import (
    check_canonical_homomorphism,
    check_fraction_equivalence,
    check_ideal_additivity,
    check_operations_well_defined,
    check_prime_correspondence,
    local_global_eq,
    local_global_zero,
    localize,
    quotient,
    transport_isomorphism,
    verify_localization_theorem,
)
from .regularity import vn_inverse, vn_profile

Check = Callable[[FinitePseudoring], "str | None"]


def _fail(msg: str, witness=None):
    raise InvariantViolation(msg, witness)


def _pm(R: FinitePseudoring) -> bool:
    return vn_profile(R).is_pseudomeadow


# -- von Neumann inverses ------------------------------------------------------


def t_vn_criterion(R):
    # vn_inverse cross-checks the Rx^2 criterion and the r^2 x formula
    for x in R.elements:
        vn_inverse(R, x)


def t_vn_uniqueness(R):
    for x in R.elements:
        xx = R.mul[x][x]
        sols = [y for y in R.elements if R.mul[xx][y] == x and R.mul[R.mul[x][y]][y] == y]
        if len(sols) > 1:
            _fail(f"element {x} has several inverses", (x, *sols))


def t_vn_not_nilpotent(R):
    prof = vn_profile(R)
    for x in prof.invertible():
        if x != 0 and x in prof.nilpotents:
            _fail(f"invertible {x} is nilpotent", (x,))


def t_vn_idempotent_self_inverse(R):
    prof = vn_profile(R)
    for e in idempotent_poset(R).idempotents:
        if prof.inverse[e] != e:
            _fail(f"idempotent {e} has inverse {prof.inverse[e]}", (e,))


def t_vn_e_of(R):
    prof = vn_profile(R)
    for x in prof.invertible():
        e = prof.e_of[x]
        if R.mul[e][e] != e or (e == 0) != (x == 0):
            _fail(f"e({x}) = {e}", (x, e))


def t_vn_ideal_membership(R):
    prof = vn_profile(R)
    for I in enumerate_ideals(R):
        for x in prof.invertible():
            if (x in I) != (prof.inverse[x] in I):
                _fail(f"x={x} and its inverse differ in membership", (x, tuple(I.members)))


# -- idempotents and decomposition ---------------------------------------------


def t_idem_poset(R):
    idempotent_poset(R)


def t_idem_orthogonal(R):
    minimal = idempotent_poset(R).minimal
    for e, f in itertools.combinations(minimal, 2):
        if R.mul[e][f] != 0:
            _fail("minimal idempotents not orthogonal", (e, f))


def t_idem_submeadows(R):
    if not _pm(R):
        return "n/a: not a pseudomeadow"
    minimal = set(idempotent_poset(R).minimal)
    for e in idempotent_poset(R).idempotents:
        comp = submeadow_Re(R, e)
        if e in minimal and comp.field is None:
            _fail(f"Re not a field for minimal e={e}", (e,))


def t_decomp_theorem(R):
    if not _pm(R):
        return "n/a: not a pseudomeadow"
    dec = decompose(R)
    for c in dec.components:
        if c.field is None:
            _fail("component is not a field", (c.idempotent,))


def t_decomp_idempotent_sums(R):
    if not _pm(R):
        return "n/a: not a pseudomeadow"
    poset = idempotent_poset(R)
    seen = set()
    for e in poset.idempotents:
        parts = idempotent_as_sum(R, e)
        if parts in seen:
            _fail("two idempotents with the same minimal parts", parts)
        seen.add(parts)
    if len(poset.idempotents) != 2 ** len(poset.minimal):
        _fail("idempotent count is not 2^n", (len(poset.idempotents), len(poset.minimal)))


def t_decomp_poset_transport(R):
    if not _pm(R):
        return "n/a: not a pseudomeadow"
    check_poset_transport(decompose(R))


def t_decomp_identity_sum(R):
    if find_identity(R) is None:
        return "n/a: no identity"
    check_identity_sum_bound(R)


def t_decomp_rejects(R):
    if _pm(R):
        return "n/a: pseudomeadow"
    try:
        decompose(R)
    except NotPseudomeadow:
        return None
    _fail("decompose accepted a non-pseudomeadow")


# -- ideals --------------------------------------------------------------------


def t_ideal_prime_iff_pseudodomain(R):
    for I in enumerate_ideals(R):
        if is_prime(R, I) != is_pseudodomain(quotient(R, I).ring):
            _fail("primality disagrees with pseudodomain quotient", tuple(I.members))


def t_ideal_nil_radical(R):
    # radicals() compares the intersection of primes with the nilpotent set
    radicals(R)


def t_ideal_maximal_prime_field(R):
    for m in radicals(R).maximals:
        if is_prime(R, m):
            quotient_field_check(R, m)


def t_ideal_quotient_identity(R):
    prof = vn_profile(R)
    for p in radicals(R).primes:
        outside = [x for x in prof.invertible() if x not in p]
        if not outside:
            continue
        Q = quotient(R, p)
        e = Q.projection[prof.e_of[outside[0]]]
        if find_identity(Q.ring) != e:
            _fail("e(x) + p is not the identity of R/p", (outside[0], tuple(p.members)))


def t_ideal_e_difference(R):
    prof = vn_profile(R)
    for p in radicals(R).primes:
        outside = [x for x in prof.invertible() if x not in p]
        for x, y in itertools.product(outside, repeat=2):
            if R.sub(prof.e_of[x], prof.e_of[y]) not in p:
                _fail("e(x) - e(y) outside prime", (x, y, tuple(p.members)))


def t_ideal_jacobson(R):
    prof = vn_profile(R)
    J = radicals(R).jacobson_radical
    for x in prof.invertible():
        if x != 0 and x in J:
            _fail("invertible element inside Jacobson radical", (x,))


def t_ideal_pseudodomain_field(R):
    """Every pseudomeadow pseudodomain is a field; applied to R and each R/p."""
    candidates = [R] + [quotient(R, p).ring for p in radicals(R).primes]
    checked = 0
    for S in candidates:
        prof = vn_profile(S)
        if not (prof.is_pseudomeadow and is_pseudodomain(S)):
            continue
        checked += 1
        w = field_witness(S)
        if w is None:
            _fail(f"{S.name} is a pseudomeadow pseudodomain but not a field")
        for x in range(1, S.order):
            if prof.e_of[x] != w.identity or prof.inverse[x] != w.inverse[x]:
                _fail(f"{S.name}: e(x) or x^(-1) disagrees with field structure", (x,))
    if not checked:
        return "n/a: no pseudomeadow pseudodomain among R and R/p"


def t_ideal_characterization(R):
    characterize(R)


def t_ideal_reduced_embedding(R):
    if vn_profile(R).is_reduced:
        emb = embed_reduced(R)
        if not emb.injective:
            _fail("reduced but not embedded")
    else:
        if not nilpotents_killed(R):
            _fail("a nilpotent survives in a residue field")


def t_ideal_subdirect(R):
    if not _pm(R):
        return "n/a: not a pseudomeadow"
    emb = subdirect_embed(R)
    if not (emb.injective and emb.subdirect):
        _fail("not a subdirect embedding")


# -- localization --------------------------------------------------------------


def t_loc_equivalence(R):
    primes = radicals(R).primes
    if not primes:
        return "n/a: no prime ideals"
    for p in primes:
        L = localize(R, p)
        check_fraction_equivalence(L)
        check_operations_well_defined(L)
        check_canonical_homomorphism(L)
        if find_identity(L.ring) != L.identity:
            _fail("s/s is not the identity", tuple(p.members))


def t_loc_prime_correspondence(R):
    primes = radicals(R).primes
    if not primes:
        return "n/a: no prime ideals"
    for p in primes:
        check_prime_correspondence(R, p)


def t_loc_ideal_additivity(R):
    primes = radicals(R).primes
    if not primes:
        return "n/a: no prime ideals"
    ideals = enumerate_ideals(R)
    for p in primes:
        for I, J in itertools.combinations_with_replacement(ideals, 2):
            check_ideal_additivity(R, I, J, p)


def t_loc_transport(R):
    primes = radicals(R).primes
    if not primes:
        return "n/a: no prime ideals"
    for p in primes:
        for I in enumerate_ideals(R):
            if I <= p:
                transport_isomorphism(R, I, p)


def t_loc_theorem(R):
    if not _pm(R):
        return "n/a: not a pseudomeadow"
    for m in radicals(R).maximals:
        v = verify_localization_theorem(R, m)
        if not v.all_ok:
            _fail("localization verdict not all true", (tuple(m.members), v))


def t_loc_local_global_zero(R):
    if not _pm(R):
        return "n/a: not a pseudomeadow"
    for I in enumerate_ideals(R):
        if local_global_zero(R, I) != I.is_zero:
            _fail("local-global zero principle fails", tuple(I.members))


def t_loc_local_global_eq(R):
    if not _pm(R):
        return "n/a: not a pseudomeadow"
    ideals = enumerate_ideals(R)
    for I, J in itertools.product(ideals, repeat=2):
        if local_global_eq(R, I, J) != (I.mask == J.mask):
            _fail("local-global equality principle fails", (tuple(I.members), tuple(J.members)))


def t_loc_rejects_nonprime(R):
    spec = radicals(R)
    bad = [m for m in spec.maximals if m not in spec.primes]
    if not bad:
        return "n/a: every maximal ideal is prime"
    for m in bad:
        try:
            localize(R, m)
        except NotPrime:
            continue
        _fail("localized at a non-prime maximal ideal", tuple(m.members))


THEOREMS: dict[str, tuple[str, Check]] = {
    "decomp.identity-sum": ("identity as a sum of minimal idempotents uses all of them", t_decomp_identity_sum),
    "decomp.idempotent-sums": ("each idempotent is a sum of distinct minimal idempotents", t_decomp_idempotent_sums),
    "decomp.poset-transport": ("isomorphisms preserve the idempotent poset", t_decomp_poset_transport),
    "decomp.rejects-non-pseudomeadow": ("non-pseudomeadows are not decomposed", t_decomp_rejects),
    "decomp.theorem": ("finite pseudomeadow is a product of fields Me_i", t_decomp_theorem),
    "idem.orthogonal": ("minimal idempotents are orthogonal", t_idem_orthogonal),
    "idem.poset": ("idempotent order and closure facts", t_idem_poset),
    "idem.submeadows": ("Re is a meadow, and a field for minimal e", t_idem_submeadows),
    "ideal.characterization": ("pseudomeadow iff reduced and Spec = MaxSpec", t_ideal_characterization),
    "ideal.e-difference": ("e(x) - e(y) lies in every prime avoiding x, y", t_ideal_e_difference),
    "ideal.jacobson": ("nonzero invertible elements avoid the Jacobson radical", t_ideal_jacobson),
    "ideal.maximal-prime-field": ("maximal and prime gives a field quotient", t_ideal_maximal_prime_field),
    "ideal.nil-radical": ("nil radical equals the nilpotent set", t_ideal_nil_radical),
    "ideal.prime-iff-pseudodomain": ("prime iff quotient is a pseudodomain", t_ideal_prime_iff_pseudodomain),
    "ideal.pseudodomain-field": ("pseudomeadow pseudodomains are fields", t_ideal_pseudodomain_field),
    "ideal.quotient-identity": ("e(x) + p is the identity of R/p", t_ideal_quotient_identity),
    "ideal.reduced-embedding": ("reduced iff embeds in a product of fields", t_ideal_reduced_embedding),
    "ideal.subdirect": ("pseudomeadow is a subdirect product of fields", t_ideal_subdirect),
    "loc.equivalence": ("fraction relation is an equivalence, operations well defined", t_loc_equivalence),
    "loc.ideal-additivity": ("(I+J)_p = I_p + J_p", t_loc_ideal_additivity),
    "loc.local-global-eq": ("I_m = J_m everywhere forces I = J", t_loc_local_global_eq),
    "loc.local-global-zero": ("I_m = 0 everywhere forces I = 0", t_loc_local_global_zero),
    "loc.prime-correspondence": ("primes of R_p are the q_p with q inside p", t_loc_prime_correspondence),
    "loc.rejects-non-prime": ("localization refuses non-prime ideals", t_loc_rejects_nonprime),
    "loc.theorem": ("R_m is a field isomorphic to R/m", t_loc_theorem),
    "loc.transport": ("(R/I)_(p/I) is isomorphic to R_p / I_p", t_loc_transport),
    "vn.criterion": ("inverse exists iff x in Rx^2, and equals r^2 x", t_vn_criterion),
    "vn.e-of": ("e(x) is idempotent and zero only at zero", t_vn_e_of),
    "vn.ideal-membership": ("x in I iff x^(-1) in I", t_vn_ideal_membership),
    "vn.idempotent-self-inverse": ("idempotents are their own inverses", t_vn_idempotent_self_inverse),
    "vn.not-nilpotent": ("nonzero invertible elements are not nilpotent", t_vn_not_nilpotent),
    "vn.uniqueness": ("von Neumann inverses are unique", t_vn_uniqueness),
}

AXIOM_THEOREM = "axioms.pseudoring"

# Published numeric claims about e(s) in Z6 at the maximal ideal {0,2,4}.
# Entries are (quantity, first element, second element, published value).
PUBLISHED_Z6_DIFFERENCES = (
    ("e(1)-e(3)", 1, 3, 4),
    ("e(1)-e(5)", 1, 5, 2),
    ("e(3)-e(5)", 3, 5, 4),
)


@dataclass
class Entry:
    algebra: str
    theorem: str
    status: str
    witness: str = ""
    runtime: float = 0.0

    def as_dict(self, timings: bool) -> dict:
        out = {"algebra": self.algebra, "theorem": self.theorem, "status": self.status, "witness": self.witness}
        if timings:
            out["runtime"] = round(self.runtime, 6)
        return out


@dataclass
class Annotation:
    algebra: str
    quantity: str
    published: int
    computed: int
    note: str

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "quantity": self.quantity,
            "published": self.published,
            "computed": self.computed,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    entries: list[Entry] = field(default_factory=list)
    annotations: list[Annotation] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "n/a": 0, "skipped": 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return not any(e.status == "fail" for e in self.entries)

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status == "fail"]

    def to_json(self, timings: bool = False) -> str:
        payload = {
            "entries": [e.as_dict(timings) for e in self.entries],
            "annotations": [a.as_dict() for a in self.annotations],
            "summary": self.counts(),
            "ok": self.ok,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_text(self, timings: bool = False) -> str:
        lines = []
        for e in self.entries:
            line = f"{e.status.upper():7} {e.algebra:24} {e.theorem}"
            if e.witness:
                line += f"  [{e.witness}]"
            if timings:
                line += f"  ({e.runtime * 1000:.1f} ms)"
            lines.append(line)
        for a in self.annotations:
            lines.append(
                f"ANNOTATE {a.algebra:23} {a.quantity}: published {a.published}, computed {a.computed} ({a.note})"
            )
        c = self.counts()
        lines.append(
            f"summary: {c['pass']} pass, {c['fail']} fail, {c['n/a']} n/a, {c['skipped']} skipped, "
            f"{len(self.annotations)} annotations"
        )
        return "\n".join(lines) + "\n"


def _annotations(R: FinitePseudoring) -> list[Annotation]:
    if R.name != "Z6" or R.order != 6:
        return []
    prof = vn_profile(R)
    out = []
    for quantity, s1, s2, published in PUBLISHED_Z6_DIFFERENCES:
        computed = R.sub(prof.e_of[s1], prof.e_of[s2])
        if computed != published:
            out.append(
                Annotation(
                    "Z6",
                    quantity,
                    published,
                    computed,
                    f"computed e({s1})={prof.e_of[s1]}, e({s2})={prof.e_of[s2]}; both values lie in {{0,2,4}}",
                )
            )
    return out


def verify_ring(R: FinitePseudoring, cap: int | None = None) -> list[Entry]:
    cap = enumeration_cap() if cap is None else cap
    t0 = time.perf_counter()
    report = check_axioms(R)
    entries = [Entry(R.name, AXIOM_THEOREM, "pass" if report.ok else "fail")]
    if not report.ok:
        entries[0].witness = "; ".join(f"({a}) {report.witnesses[a]}" for a in report.failed_axioms())
    entries[0].runtime = time.perf_counter() - t0
    for tid in sorted(THEOREMS):
        if not report.ok:
            entries.append(Entry(R.name, tid, "skipped", "axioms failed"))
            continue
        if R.order > cap:
            entries.append(Entry(R.name, tid, "skipped", f"order {R.order} exceeds enumeration cap {cap}"))
            continue
        _, fn = THEOREMS[tid]
        t0 = time.perf_counter()
        try:
            result = fn(R)
            entry = Entry(R.name, tid, "n/a", result) if result else Entry(R.name, tid, "pass")
        except InvariantViolation as exc:
            entry = Entry(R.name, tid, "fail", f"{exc}; witness={exc.witness!r}")
        except PmlabError as exc:
            entry = Entry(R.name, tid, "fail", f"{type(exc).__name__}: {exc}")
        entry.runtime = time.perf_counter() - t0
        entries.append(entry)
    return entries


def verify_all(docs, cap: int | None = None) -> VerificationReport:
    """Verify every document; the report is ordered by algebra name, then theorem id."""
    rings = []
    for doc in docs:
        R = doc.to_ring() if isinstance(doc, AlgebraDocument) else doc
        rings.append(R)
    rings.sort(key=lambda R: R.name)
    report = VerificationReport()
    for R in rings:
        report.entries.extend(verify_ring(R, cap))
        if check_axioms(R).ok:
            report.annotations.extend(_annotations(R))
    return report


def theorem_ids() -> list[str]:
    return [AXIOM_THEOREM, *sorted(THEOREMS)]
