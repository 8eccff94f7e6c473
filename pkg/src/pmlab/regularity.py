"""Von Neumann inverses, the idempotents e(x), pseudomeadows, nilpotents."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import FinitePseudoring, find_identity
from .errors import InvariantViolation, UniquenessViolation


def vn_inverse(R: FinitePseudoring, x: int) -> int | None:
    """The unique ``y`` with ``x*x*y = x`` and ``x*y*y = y``, or None.

    Candidates are scanned in ascending order and every one is tested, so a
    second solution raises :class:`UniquenessViolation`.  Independently,
    every ``r`` with ``x = r*x^2`` must produce the same element as ``r^2*x``.
    """
    mul = R.mul
    xx = mul[x][x]
    found = [y for y in R.elements if mul[xx][y] == x and mul[mul[x][y]][y] == y]
    if len(found) > 1:
        raise UniquenessViolation(f"{R.name}: element {x} has inverses {found}")
    inv = found[0] if found else None

    for r in R.elements:
        if mul[r][xx] != x:
            continue
        via_r = mul[mul[r][r]][x]
        if via_r != inv:
            raise InvariantViolation(
                f"{R.name}: x={x} lies in Rx^2 via r={r} but r^2x={via_r} is not its inverse",
                witness=(x, r),
            )
        break
    else:
        if inv is not None:
            raise InvariantViolation(
                f"{R.name}: x={x} has inverse {inv} but is not in Rx^2", witness=(x, inv)
            )
    return inv


def e_of(R: FinitePseudoring, x: int) -> int | None:
    inv = vn_inverse(R, x)
    if inv is None:
        return None
    e = R.mul[x][inv]
    if R.mul[e][e] != e:
        raise InvariantViolation(f"{R.name}: e({x})={e} is not idempotent", witness=(x, e))
    if (e == 0) != (x == 0):
        raise InvariantViolation(f"{R.name}: e({x})={e} breaks e(x)=0 iff x=0", witness=(x, e))
    return e


def nilpotents(R: FinitePseudoring) -> frozenset[int]:
    """Elements with ``x^k = 0`` for some ``1 <= k <= order(R)``."""
    out = set()
    for x in R.elements:
        p = x
        for _ in range(R.order):
            if p == 0:
                out.add(x)
                break
            p = R.mul[p][x]
    return frozenset(out)


def is_reduced(R: FinitePseudoring) -> bool:
    return nilpotents(R) == {0}


@dataclass(frozen=True)
class VnProfile:
    ring: FinitePseudoring
    inverse: tuple[int | None, ...]
    e_of: tuple[int | None, ...]
    identity: int | None
    nilpotents: frozenset[int]

    @property
    def is_pseudomeadow(self) -> bool:
        return all(v is not None for v in self.inverse)

    @property
    def is_meadow(self) -> bool:
        return self.is_pseudomeadow and self.identity is not None

    @property
    def is_reduced(self) -> bool:
        return self.nilpotents == {0}

    def invertible(self) -> list[int]:
        return [x for x, v in enumerate(self.inverse) if v is not None]


@lru_cache(maxsize=512)
def vn_profile(R: FinitePseudoring) -> VnProfile:
    inverse = tuple(vn_inverse(R, x) for x in R.elements)
    e = tuple(e_of(R, x) if inverse[x] is not None else None for x in R.elements)
    return VnProfile(R, inverse, e, find_identity(R), nilpotents(R))


def is_pseudomeadow(R: FinitePseudoring) -> bool:
    return vn_profile(R).is_pseudomeadow


def is_meadow(R: FinitePseudoring) -> bool:
    return vn_profile(R).is_meadow
