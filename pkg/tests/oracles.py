"""Brute-force reference computations and hypothesis strategies.

Everything here works on plain image tuples (0-based) and never calls the
group algorithms under test."""
from __future__ import annotations

from itertools import permutations as _perms

from hypothesis import strategies as st

from inertia_cert.perm import Permutation


def tup(g: Permutation) -> tuple[int, ...]:
    return tuple(x - 1 for x in g.images)


def mul(a: tuple, b: tuple) -> tuple:
    # apply a, then b
    return tuple(b[a[i]] for i in range(len(a)))


def inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def closure(gens, degree: int) -> set[tuple]:
    ident = tuple(range(degree))
    gs = [tup(g) if isinstance(g, Permutation) else g for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gs:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def sym_tuples(n: int) -> list[tuple]:
    return list(_perms(range(n)))


def sign(a: tuple) -> int:
    s, seen = 1, set()
    for i in range(len(a)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = a[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def order_of(a: tuple) -> int:
    ident, x, k = tuple(range(len(a))), a, 1
    while x != ident:
        x, k = mul(x, a), k + 1
    return k


def normal_closure(ambient: set[tuple], S) -> set[tuple]:
    gens = set()
    for s in S:
        s = tup(s) if isinstance(s, Permutation) else s
        for h in ambient:
            gens.add(mul(mul(inv(h), s), h))
    n = len(next(iter(ambient)))
    return closure(list(gens), n)


def normalizer(ambient: set[tuple], sub: set[tuple]) -> set[tuple]:
    return {h for h in ambient if {mul(mul(inv(h), x), h) for x in sub} == sub}


def subgroups(elements: set[tuple]) -> set[frozenset]:
    """All subgroups of a small group, by closing up from cyclic subgroups."""
    n = len(next(iter(elements)))
    cyclic = {frozenset(closure([g], n)) for g in elements}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        nxt = set()
        for H in frontier:
            for C in cyclic:
                if C <= H:
                    continue
                K = frozenset(closure(list(H | C), n))
                if K not in found:
                    found.add(K)
                    nxt.add(K)
        frontier = nxt
    return found


def as_perm(a: tuple) -> Permutation:
    return Permutation([x + 1 for x in a])


@st.composite
def permutations(draw, degree: int | None = None, min_degree: int = 1, max_degree: int = 8):
    n = degree if degree is not None else draw(st.integers(min_degree, max_degree))
    return Permutation(draw(st.permutations(list(range(1, n + 1)))))


@st.composite
def generator_lists(draw, min_degree: int = 2, max_degree: int = 6, max_gens: int = 3):
    n = draw(st.integers(min_degree, max_degree))
    k = draw(st.integers(1, max_gens))
    return n, [draw(permutations(n)) for _ in range(k)]
