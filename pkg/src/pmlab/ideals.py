"""Ideals of finite pseudorings: enumeration, primes, maximals, radicals.

Ideals are bit masks over element indices.  Enumeration is a breadth-first
closure: starting from ``{0}``, every known ideal ``I`` is extended by each
outside element ``x`` to ``I + (x)``, where ``(x)`` is the additive subgroup
generated by ``x`` and ``R x``, and the results are deduplicated by mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import enumeration_cap
from .core import FinitePseudoring, mask_of, members_of
from .errors import CapExceeded, InvariantViolation, NotAnIdeal
from .regularity import nilpotents, vn_profile


@dataclass(frozen=True, order=False)
class Ideal:
    ring: FinitePseudoring
    mask: int

    @property
    def members(self) -> list[int]:
        return members_of(self.mask)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __le__(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.mask != other.mask

    @property
    def is_proper(self) -> bool:
        return self.mask != self.ring.full_mask

    @property
    def is_zero(self) -> bool:
        return self.mask == 1

    def sort_key(self) -> tuple[int, int]:
        return (self.size, self.mask)

    def labels(self) -> list[str]:
        return [self.ring.label(x) for x in self.members]

    def __repr__(self) -> str:
        return f"Ideal({self.ring.name}, {{{', '.join(self.labels())}}})"


def _extend_cyclic(R: FinitePseudoring, H: set[int], g: int) -> set[int]:
    """``H + <g>`` for an additive subgroup ``H``."""
    if g in H:
        return H
    out = set(H)
    t = g
    while t not in H:
        out.update(R.add[h][t] for h in H)
        t = R.add[t][g]
    return out


def _span(R: FinitePseudoring, H: set[int], gens) -> set[int]:
    for g in gens:
        if g not in H:
            H = _extend_cyclic(R, H, g)
    return H


def _principal(R: FinitePseudoring, x: int) -> set[int]:
    return _span(R, {0}, [x, *(R.mul[r][x] for r in R.elements)])


def is_ideal(R: FinitePseudoring, members) -> bool:
    S = set(members)
    if 0 not in S:
        return False
    for x in S:
        if R.neg[x] not in S:
            return False
        if any(R.add[x][y] not in S for y in S):
            return False
        if any(R.mul[x][r] not in S for r in R.elements):
            return False
    return True


def make_ideal(R: FinitePseudoring, members) -> Ideal:
    members = set(members)
    if not members <= set(R.elements) or not is_ideal(R, members):
        raise NotAnIdeal(f"{sorted(members)} is not an ideal of {R.name}")
    return Ideal(R, mask_of(members))


def ideal_closure(R: FinitePseudoring, generators) -> Ideal:
    """The smallest ideal containing ``generators``."""
    H: set[int] = {0}
    for g in generators:
        if g not in H:
            H = _span(R, H, _principal(R, g))
    return Ideal(R, mask_of(H))


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    R = I.ring
    return Ideal(R, mask_of(_span(R, set(I.members), J.members)))


def ideal_meet(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, I.mask & J.mask)


def zero_ideal(R: FinitePseudoring) -> Ideal:
    return Ideal(R, 1)


def unit_ideal(R: FinitePseudoring) -> Ideal:
    return Ideal(R, R.full_mask)


@lru_cache(maxsize=256)
def _enumerate(R: FinitePseudoring) -> tuple[Ideal, ...]:
    principal = [_principal(R, x) for x in R.elements]
    seen = {1: {0}}
    frontier = [1]
    while frontier:
        nxt = []
        for mask in frontier:
            H = seen[mask]
            for x in R.elements:
                if mask >> x & 1:
                    continue
                J = _span(R, H, principal[x])
                jm = mask_of(J)
                if jm not in seen:
                    seen[jm] = J
                    nxt.append(jm)
        frontier = nxt
    ideals = [Ideal(R, m) for m in seen]
    ideals.sort(key=Ideal.sort_key)
    return tuple(ideals)


def enumerate_ideals(R: FinitePseudoring, cap: int | None = None) -> list[Ideal]:
    """All ideals of ``R``, sorted by (size, mask)."""
    cap = enumeration_cap() if cap is None else cap
    if R.order > cap:
        raise CapExceeded(f"{R.name} has order {R.order} > enumeration cap {cap}")
    return list(_enumerate(R))


def is_prime(R: FinitePseudoring, I: Ideal) -> bool:
    if not I.is_proper:
        return False
    outside = [x for x in R.elements if x not in I]
    return all(R.mul[x][y] not in I for x in outside for y in outside)


def is_maximal(R: FinitePseudoring, I: Ideal) -> bool:
    if not I.is_proper:
        return False
    return not any(I < J and J.is_proper for J in enumerate_ideals(R))


@dataclass(frozen=True)
class SpectrumReport:
    ring: FinitePseudoring
    all_ideals: tuple[Ideal, ...]
    primes: tuple[Ideal, ...]
    maximals: tuple[Ideal, ...]
    nil_radical: Ideal
    jacobson_radical: Ideal

    @property
    def spec_equals_maxspec(self) -> bool:
        return set(self.primes) == set(self.maximals)


def _intersection(R: FinitePseudoring, ideals) -> Ideal:
    mask = R.full_mask
    for I in ideals:
        mask &= I.mask
    return Ideal(R, mask)


@lru_cache(maxsize=256)
def _radicals(R: FinitePseudoring) -> SpectrumReport:
    ideals = tuple(enumerate_ideals(R))
    primes = tuple(I for I in ideals if is_prime(R, I))
    maximals = tuple(I for I in ideals if is_maximal(R, I))
    report = SpectrumReport(
        R, ideals, primes, maximals, _intersection(R, primes), _intersection(R, maximals)
    )
    nil = nilpotents(R)
    if set(report.nil_radical.members) != nil:
        raise InvariantViolation(
            f"{R.name}: nil radical {report.nil_radical.members} != nilpotents {sorted(nil)}",
            witness=(tuple(report.nil_radical.members), tuple(sorted(nil))),
        )
    return report


def radicals(R: FinitePseudoring, cap: int | None = None) -> SpectrumReport:
    enumerate_ideals(R, cap)
    return _radicals(R)


def spectrum(R: FinitePseudoring) -> SpectrumReport:
    return radicals(R)


@dataclass(frozen=True)
class Characterization:
    is_pm: bool
    reduced: bool
    spec_eq_max: bool

    @property
    def consistent(self) -> bool:
        return self.is_pm == (self.reduced and self.spec_eq_max)


def characterize(R: FinitePseudoring, cap: int | None = None) -> Characterization:
    """Pseudomeadow flag against (reduced, Spec = MaxSpec), computed separately.

    ``is_pm`` comes from the von Neumann inverse scan, ``reduced`` from power
    sequences and ``spec_eq_max`` from ideal enumeration.
    """
    enumerate_ideals(R, cap)
    out = Characterization(
        vn_profile(R).is_pseudomeadow,
        nilpotents(R) == {0},
        _radicals(R).spec_equals_maxspec,
    )
    if not out.consistent:
        raise InvariantViolation(f"{R.name}: characterization fails: {out}", witness=out)
    return out
