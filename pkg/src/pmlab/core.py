"""Finite commutative pseudorings as Cayley tables.

Elements are the indices ``0..n-1`` and index 0 is always the zero element.
Products of algebras encode their elements row-major over the factor
indices, first factor most significant, so serialized products are
reproducible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .config import construction_cap
from .errors import InvalidOrder, InvariantViolation, MalformedTables, OrderOverflow

Table = tuple[tuple[int, ...], ...]

AXIOM_NAMES = {
    1: "additive associativity",
    2: "additive commutativity",
    3: "additive zero",
    4: "additive inverse",
    5: "multiplicative associativity",
    6: "multiplicative commutativity",
    7: "left distributivity",
    8: "right distributivity",
}


def _freeze(table) -> Table:
    return tuple(tuple(int(v) for v in row) for row in table)


def _validate_shape(add, mul) -> int:
    n = len(add)
    if n == 0:
        raise MalformedTables("tables must have at least one row")
    for label, table in (("add", add), ("mul", mul)):
        if len(table) != n:
            raise MalformedTables(f"{label} table has {len(table)} rows, expected {n}")
        for i, row in enumerate(table):
            if len(row) != n:
                raise MalformedTables(f"{label} row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise MalformedTables(f"{label}[{i}][{j}] = {v} outside [0, {n})")
    return n


@dataclass(frozen=True, eq=True)
class FinitePseudoring:
    """An order-``n`` algebra given by its addition and multiplication tables.

    The constructor only validates the table shapes; use :func:`check_axioms`
    to validate the pseudoring axioms.  ``labels`` are display names for the
    elements and do not take part in equality.
    """

    add: Table
    mul: Table
    name: str = "R"
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    neg: tuple[int | None, ...] = field(init=False, compare=False, repr=False)
    _hash: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        add, mul = _freeze(self.add), _freeze(self.mul)
        n = _validate_shape(add, mul)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        elif len(self.labels) != n:
            raise MalformedTables(f"{len(self.labels)} labels for {n} elements")
        neg = []
        for x in range(n):
            row = add[x]
            neg.append(next((y for y in range(n) if row[y] == 0), None))
        object.__setattr__(self, "neg", tuple(neg))
        object.__setattr__(self, "_hash", hash((add, mul, self.name)))

    def __hash__(self):
        return self._hash

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(len(self.add))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def a(self, x: int, y: int) -> int:
        return self.add[x][y]

    def m(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]

    def power(self, x: int, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at 1")
        p = x
        for _ in range(k - 1):
            p = self.mul[p][x]
        return p

    def label(self, x: int) -> str:
        return self.labels[x]

    def element(self, label: str) -> int:
        """Index of the element displayed as ``label``."""
        return self.labels.index(label)

    def sum(self, xs) -> int:
        total = 0
        for x in xs:
            total = self.add[total][x]
        return total

    def renamed(self, name: str) -> "FinitePseudoring":
        return FinitePseudoring(self.add, self.mul, name, self.labels)


@dataclass(frozen=True)
class AxiomReport:
    passed: dict[int, bool]
    witnesses: dict[int, tuple[int, ...]]
    identity: int | None

    @property
    def ok(self) -> bool:
        return all(self.passed.values())

    def failed_axioms(self) -> list[int]:
        return [a for a in sorted(self.passed) if not self.passed[a]]

    def lines(self) -> list[str]:
        out = []
        for a in sorted(self.passed):
            status = "pass" if self.passed[a] else f"FAIL witness={self.witnesses[a]}"
            out.append(f"axiom ({a}) {AXIOM_NAMES[a]}: {status}")
        ident = "none" if self.identity is None else str(self.identity)
        out.append(f"identity (10): {ident}")
        return out


def _first(bad: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def check_axioms(R: FinitePseudoring | tuple[Sequence[Sequence[int]], Sequence[Sequence[int]]]) -> AxiomReport:
    """Brute-force check of axioms (1)-(8), plus identity detection.

    Accepts either a :class:`FinitePseudoring` or a raw ``(add, mul)`` pair.
    Witnesses are the lexicographically first failing index tuple.
    """
    if isinstance(R, FinitePseudoring):
        add, mul = R.add, R.mul
    else:
        add, mul = R
        _validate_shape(add, mul)
    A = np.asarray(add, dtype=np.intp)
    M = np.asarray(mul, dtype=np.intp)
    n = A.shape[0]
    ix = np.arange(n)
    X = ix[:, None, None]

    bad = {
        1: A[A] != A[X, A[None, :, :]],
        2: A != A.T,
        3: A[:, 0] != ix,
        4: ~(A == 0).any(axis=1),
        5: M[M] != M[X, M[None, :, :]],
        6: M != M.T,
        7: M[X, A[None, :, :]] != A[M[:, :, None], M[:, None, :]],
        8: M[A[:, :, None], ix[None, None, :]] != A[M[:, None, :], M[None, :, :]],
    }
    passed, witnesses = {}, {}
    for axiom, mask in bad.items():
        w = _first(mask)
        passed[axiom] = w is None
        if w is not None:
            witnesses[axiom] = w
    units = np.flatnonzero((M == ix[None, :]).all(axis=1))
    identity = int(units[0]) if len(units) else None
    return AxiomReport(passed, witnesses, identity)


def find_identity(R: FinitePseudoring) -> int | None:
    found = [e for e in R.elements if all(R.mul[e][x] == x for x in R.elements)]
    if len(found) > 1:
        raise InvariantViolation("identity element is not unique", witness=tuple(found))
    return found[0] if found else None


def _check_order(n: int, cap: int | None = None) -> None:
    cap = construction_cap() if cap is None else cap
    if n > cap:
        raise OrderOverflow(f"order {n} exceeds construction cap {cap}")


def build_zmod(n: int) -> FinitePseudoring:
    if n < 1:
        raise InvalidOrder(f"order must be positive, got {n}")
    _check_order(n)
    add = [[(x + y) % n for y in range(n)] for x in range(n)]
    mul = [[(x * y) % n for y in range(n)] for x in range(n)]
    return FinitePseudoring(add, mul, f"Z{n}")


def build_zero_mul(n: int) -> FinitePseudoring:
    """The additive group of Z_n with every product equal to 0."""
    if n < 1:
        raise InvalidOrder(f"order must be positive, got {n}")
    _check_order(n)
    add = [[(x + y) % n for y in range(n)] for x in range(n)]
    mul = [[0] * n for _ in range(n)]
    return FinitePseudoring(add, mul, f"Z{n}_zeromul")


def product_index(orders: Sequence[int], coords: Sequence[int]) -> int:
    idx = 0
    for n, c in zip(orders, coords):
        idx = idx * n + c
    return idx


def product_coords(orders: Sequence[int], idx: int) -> tuple[int, ...]:
    out = []
    for n in reversed(orders):
        idx, c = divmod(idx, n)
        out.append(c)
    return tuple(reversed(out))


def build_product(Rs: Sequence[FinitePseudoring], cap: int | None = None, name: str | None = None) -> FinitePseudoring:
    Rs = list(Rs)
    if not Rs:
        return FinitePseudoring([[0]], [[0]], name or "0")
    orders = [R.order for R in Rs]
    total = math.prod(orders)
    _check_order(total, cap)
    coords = [product_coords(orders, i) for i in range(total)]
    add = [[0] * total for _ in range(total)]
    mul = [[0] * total for _ in range(total)]
    for i, ci in enumerate(coords):
        arow, mrow = add[i], mul[i]
        for j, cj in enumerate(coords):
            arow[j] = product_index(orders, [R.add[a][b] for R, a, b in zip(Rs, ci, cj)])
            mrow[j] = product_index(orders, [R.mul[a][b] for R, a, b in zip(Rs, ci, cj)])
    labels = tuple("(" + ",".join(R.label(c) for R, c in zip(Rs, cs)) + ")" for cs in coords)
    return FinitePseudoring(add, mul, name or "x".join(R.name for R in Rs), labels)


def projection(Rs: Sequence[FinitePseudoring], i: int) -> tuple[int, ...]:
    """Projection of ``build_product(Rs)`` onto factor ``i``, as an index map."""
    orders = [R.order for R in Rs]
    return tuple(product_coords(orders, x)[i] for x in range(math.prod(orders)))


class Subring(NamedTuple):
    ring: FinitePseudoring
    inclusion: tuple[int, ...]


def closure(R: FinitePseudoring, generators) -> set[int]:
    """Smallest subset containing 0 and ``generators`` closed under +, - and *."""
    members = {0, *generators}
    frontier = list(members)
    while frontier:
        new = set()
        for x in frontier:
            cands = [R.neg[x]]
            for y in members:
                cands.append(R.add[x][y])
                cands.append(R.mul[x][y])
            new.update(c for c in cands if c not in members)
        members |= new
        frontier = list(new)
    return members


def restrict(R: FinitePseudoring, members, name: str) -> Subring:
    """Re-index a subset closed under the operations as its own algebra."""
    inclusion = tuple(sorted(members))
    pos = {x: i for i, x in enumerate(inclusion)}
    add = [[pos[R.add[x][y]] for y in inclusion] for x in inclusion]
    mul = [[pos[R.mul[x][y]] for y in inclusion] for x in inclusion]
    labels = tuple(R.label(x) for x in inclusion)
    return Subring(FinitePseudoring(add, mul, name, labels), inclusion)


def build_sub(R: FinitePseudoring, generators, name: str | None = None) -> Subring:
    gens = sorted(set(generators))
    for g in gens:
        if not 0 <= g < R.order:
            raise MalformedTables(f"generator {g} is not an element of {R.name}")
    if name is None:
        name = f"{R.name}<{','.join(R.label(g) for g in gens)}>"
    return restrict(R, closure(R, gens), name)


def _chain_label(mask: int, k: int) -> str:
    if mask == 0:
        return "0"
    return "+".join(f"X{a}" for a in range(k) if mask >> a & 1)


def build_chain_monoid_ring(k: int) -> FinitePseudoring:
    """F_2 monoid ring over the chain ``0 < 1 < ... < k-1`` under max.

    Element ``S`` is a bit mask of exponents; addition is symmetric
    difference and ``X^a * X^b = X^max(a, b)`` extended bilinearly.
    """
    if k < 1:
        raise InvalidOrder(f"chain length must be positive, got {k}")
    n = 1 << k
    _check_order(n)
    add = [[x ^ y for y in range(n)] for x in range(n)]
    mul = [[0] * n for _ in range(n)]
    for x in range(n):
        xs = [a for a in range(k) if x >> a & 1]
        for y in range(n):
            r = 0
            for a in xs:
                for b in range(k):
                    if y >> b & 1:
                        r ^= 1 << max(a, b)
            mul[x][y] = r
    labels = tuple(_chain_label(x, k) for x in range(n))
    return FinitePseudoring(add, mul, f"chain{k}", labels)


def field_power(p: int, k: int) -> FinitePseudoring:
    """``Z_p`` to the ``k``-th power (``F_p^k`` when ``p`` is prime)."""
    return build_product([build_zmod(p)] * k, name=f"F{p}^{k}")


def homomorphism_defect(
    R: FinitePseudoring,
    S: FinitePseudoring,
    f: Callable[[int], int] | Sequence[int],
) -> tuple[str, int, int] | None:
    """First ``(op, x, y)`` where ``f`` fails to preserve + or *, else None."""
    fm = f if callable(f) else f.__getitem__
    image = [fm(x) for x in R.elements]
    for x, y in itertools.product(R.elements, repeat=2):
        if image[R.add[x][y]] != S.add[image[x]][image[y]]:
            return ("+", x, y)
        if image[R.mul[x][y]] != S.mul[image[x]][image[y]]:
            return ("*", x, y)
    return None


@dataclass(frozen=True)
class FieldWitness:
    identity: int
    inverse: tuple[int | None, ...]


def field_witness(R: FinitePseudoring) -> FieldWitness | None:
    """Identity plus a multiplicative inverse table, if ``R`` is a field."""
    if R.order < 2:
        return None
    e = find_identity(R)
    if e is None:
        return None
    inverse: list[int | None] = [None]
    for x in range(1, R.order):
        y = next((y for y in R.elements if R.mul[x][y] == e), None)
        if y is None:
            return None
        inverse.append(y)
    return FieldWitness(e, tuple(inverse))


def is_pseudodomain(R: FinitePseudoring) -> bool:
    if R.order < 2:
        return False
    return all(R.mul[x][y] != 0 for x in range(1, R.order) for y in range(1, R.order))


def mask_of(xs) -> int:
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def members_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out
