"""Brute-force oracles that share no code path with the library.

They work straight from the definitions, over Python sets, and are only
meant for small orders.
"""

from __future__ import annotations

import itertools


def all_subsets(n):
    for mask in range(1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def is_ideal(add, mul, S):
    n = len(add)
    if 0 not in S:
        return False
    for x in S:
        if not any(add[x][y] == 0 and y in S for y in range(n)):
            return False
        for y in S:
            if add[x][y] not in S:
                return False
        for r in range(n):
            if mul[x][r] not in S:
                return False
    return True


def ideals(add, mul):
    return [S for S in all_subsets(len(add)) if is_ideal(add, mul, S)]


def is_prime(add, mul, P):
    n = len(add)
    if len(P) == n:
        return False
    return all(mul[x][y] not in P or x in P or y in P for x in range(n) for y in range(n))


def maximals(add, mul):
    n = len(add)
    ids = ideals(add, mul)
    proper = [I for I in ids if len(I) < n]
    return [I for I in proper if not any(I < J for J in proper)]


def vn_inverses(mul, x):
    n = len(mul)
    return [y for y in range(n) if mul[mul[x][x]][y] == x and mul[mul[x][y]][y] == y]


def nilpotents(mul):
    n = len(mul)
    out = set()
    for x in range(n):
        p = x
        seen = []
        while p not in seen:
            seen.append(p)
            p = mul[p][x]
        if 0 in seen:
            out.add(x)
    return out


def neg(add, x):
    return next(y for y in range(len(add)) if add[x][y] == 0)


def localization_class_count(add, mul, P):
    """Number of fraction classes, via union-find over the raw relation."""
    n = len(add)
    S = [s for s in range(n) if s not in P]
    pairs = [(a, s) for a in range(n) for s in S]
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(pairs)), 2):
        (a, s), (b, t) = pairs[i], pairs[j]
        diff = add[mul[a][t]][neg(add, mul[b][s])]
        if any(mul[diff][u] == 0 for u in S):
            parent[find(i)] = find(j)
    return len({find(i) for i in range(len(pairs))})


def has_identity(mul):
    n = len(mul)
    return [e for e in range(n) if all(mul[e][x] == x for x in range(n))]


def is_field(add, mul):
    n = len(add)
    ids = has_identity(mul)
    if n < 2 or not ids:
        return False
    e = ids[0]
    return all(any(mul[x][y] == e for y in range(n)) for x in range(1, n))
