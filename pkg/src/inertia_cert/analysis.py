"""Structural queries on permutation groups: closures, Sylow subgroups,
the quasi-p core, block systems and alternating/symmetric recognition."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ClosureNotFull, NotMember, NotPGroup, PreconditionError
from .perm import (
    PermGroup,
    Permutation,
    align_conjugator,
    conjugate,
    is_p_power,
    lex_key,
    p_part,
)

BRUTE_FORCE_BOUND = 10**5
BACKTRACK_BOUND = 10**7


def p_part_of_int(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_p_group(G: PermGroup, p: int) -> bool:
    return is_p_power(G.order(), p)


def normal_closure(G: PermGroup, S: Iterable[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing S."""
    S = list(S)
    for s in S:
        if not G.contains(s):
            raise NotMember(f"{s} is not an element of the group")
    N = PermGroup([s for s in S if not s.is_identity()], G.degree)
    pending = list(N.generators)
    k = 0
    while k < len(pending):
        n = pending[k]
        k += 1
        for g in G.generators:
            c = conjugate(n, g)
            if not N.contains(c):
                N = N.extended([c])
                pending.append(c)
    return N


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    return all(N.contains(conjugate(n, g)) for n in N.generators for g in G.generators)


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)


def is_perfect(G: PermGroup) -> bool:
    return derived_subgroup(G).order() == G.order()


def _find_outside(G: PermGroup, N: PermGroup, p: int, rng: random.Random,
                  tries: int = 2000) -> Permutation | None:
    """A p-element of G outside N, by p-parts of random elements, then by
    enumeration for small groups."""
    for _ in range(tries):
        x = p_part(G.random_element(rng), p)
        if not N.contains(x):
            return x
    if G.order() <= 10**6:
        for g in G.elements():
            x = p_part(g, p)
            if not N.contains(x):
                return x
    return None


def quasi_p_core(G: PermGroup, p: int, seed: int = 0) -> PermGroup:
    """p(G): the subgroup generated by all Sylow p-subgroups (all p-elements)."""
    rng = random.Random(seed)
    core = normal_closure(G, [p_part(g, p) for g in G.generators])
    while (G.order() // core.order()) % p == 0:
        x = _find_outside(G, core, p, rng)
        if x is None:
            raise RuntimeError("no p-element outside the core found")
        core = normal_closure(G, list(core.generators) + [x])
    return core


def is_quasi_p(G: PermGroup, p: int, seed: int = 0) -> bool:
    return quasi_p_core(G, p, seed).order() == G.order()


def _orbit_index(P: PermGroup) -> tuple[list[int], list[int]]:
    ids = [0] * P.degree
    sizes = []
    for k, orb in enumerate(P.orbits()):
        for x in orb:
            ids[x - 1] = k
        sizes.append(len(orb))
    return ids, sizes


def _cyclic_generator(P: PermGroup) -> Permutation | None:
    for g in P.generators:
        if g.order() == P.order():
            return g
    if P.order() <= 10**4:
        for g in P.elements():
            if g.order() == P.order():
                return g
    return None


def symmetric_normalizer_of_cyclic(x: Permutation) -> PermGroup:
    """N_{S_n}(<x>): the centralizer of x extended by one conjugator x -> x^k
    for every unit k modulo the order of x."""
    n = x.degree
    cyc = x.cycles()
    gens = [Permutation.from_cycles([c], n) for c in cyc]
    by_len: dict[int, list] = {}
    for c in cyc:
        by_len.setdefault(len(c), []).append(c)
    for group in by_len.values():
        for a, b in zip(group, group[1:]):
            gens.append(Permutation.from_cycles(list(zip(a, b)), n))
    fixed = [i for i in range(1, n + 1) if x(i) == i]
    if len(fixed) >= 2:
        gens.append(Permutation.from_cycles([fixed[:2]], n))
        gens.append(Permutation.from_cycles([fixed], n))
    o = x.order()
    for k in range(2, o):
        if math.gcd(k, o) == 1:
            gens.append(align_conjugator(x, x ** k))
    return PermGroup(gens, n)


def normalizer(G: PermGroup, P: PermGroup) -> PermGroup:
    """N_G(P). Cyclic P: filter N_{S_n}(P) through G. Otherwise brute force for
    small G, else backtracking over the chain of G, pruned by the requirement
    that normalizing elements permute the orbits of P."""
    if P.is_trivial():
        return G
    x = _cyclic_generator(P)
    if x is not None:
        NS = symmetric_normalizer_of_cyclic(x)
        if NS.order() <= BRUTE_FORCE_BOUND:
            return PermGroup([g for g in NS.elements() if G.contains(g)], G.degree)
    if G.order() > BACKTRACK_BOUND:
        raise PreconditionError(f"normalizer search limited to order <= {BACKTRACK_BOUND}",
                                "group too large")
    pgens = P.generators

    def normalizes(g: Permutation) -> bool:
        return all(P.contains(conjugate(x, g)) for x in pgens)

    if G.order() <= BRUTE_FORCE_BOUND:
        found = [g for g in G.elements() if normalizes(g)]
        return PermGroup(found, G.degree)

    chain = G._chain
    ids, sizes = _orbit_index(P)
    levels = [(chain.base[i], [t[x][0] for x in sorted(t)])
              for i, t in enumerate(chain.trans) if len(t) > 1]
    N = PermGroup(list(pgens), G.degree)

    def rec(i: int, acc: tuple, imgs: list[tuple[int, int]]) -> None:
        nonlocal N
        if i == len(levels):
            g = Permutation._raw(acc)
            if not N.contains(g) and normalizes(g):
                N = N.extended([g])
            return
        b, reps = levels[i]
        for rep in reps:
            nxt = tuple([acc[x] for x in rep])
            y = nxt[b]
            if sizes[ids[b]] != sizes[ids[y]]:
                continue
            if any((ids[b] == ids[bj]) != (ids[y] == ids[yj]) for bj, yj in imgs):
                continue
            rec(i + 1, nxt, imgs + [(b, y)])

    rec(0, chain.ident, [])
    return N


def sylow_p(G: PermGroup, p: int, seed: int = 0) -> PermGroup:
    """A Sylow p-subgroup, grown one p-element of N_G(P) \\ P at a time."""
    rng = random.Random(seed)
    target = p_part_of_int(G.order(), p)
    P = PermGroup.trivial(G.degree)
    while P.order() < target:
        N = normalizer(G, P)
        x = _find_outside(N, P, p, rng)
        if x is None:
            raise RuntimeError("Sylow growth stalled")
        P = P.extended([x])
    return P


def is_sylow(G: PermGroup, P: PermGroup, p: int) -> bool:
    return (P.is_subgroup_of(G) and is_p_group(P, p)
            and P.order() == p_part_of_int(G.order(), p))


@dataclass(frozen=True)
class BlockSystem:
    blocks: tuple[frozenset[int], ...]
    block_size: int

    def is_trivial(self) -> bool:
        return len(self.blocks) == 1 or self.block_size == 1


def minimal_blocks(G: PermGroup, pair: Sequence[int]) -> BlockSystem:
    """Finest G-invariant partition with a and b in the same cell
    (union-find refinement over generator images)."""
    a, b = pair
    if a == b:
        raise PreconditionError("seed points must differ", "degenerate seed")
    n = G.degree
    for x in (a, b):
        if not 1 <= x <= n:
            raise PreconditionError(f"point {x} out of range", "point range")
    if not G.is_transitive():
        raise PreconditionError("block systems need a transitive group", "transitive")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(a - 1, b - 1)]
    parent[find(b - 1)] = find(a - 1)
    gens = [g._img for g in G.generators]
    while queue:
        x, y = queue.pop()
        for g in gens:
            u, v = find(g[x]), find(g[y])
            if u != v:
                if v < u:
                    u, v = v, u
                parent[v] = u
                queue.append((u, v))
    cells: dict[int, set[int]] = {}
    for x in range(n):
        cells.setdefault(find(x), set()).add(x + 1)
    blocks = tuple(sorted((frozenset(c) for c in cells.values()), key=min))
    return BlockSystem(blocks, len(blocks[0]))


def is_block_system(G: PermGroup, blocks: Iterable[Iterable[int]]) -> bool:
    cells = [frozenset(c) for c in blocks]
    cellset = set(cells)
    return all(frozenset(g(x) for x in c) in cellset for c in cells for g in G.generators)


@dataclass(frozen=True)
class Primitivity:
    primitive: bool
    reason: str
    blocks: BlockSystem | None = None


def primitivity(G: PermGroup) -> Primitivity:
    if not G.is_transitive():
        return Primitivity(False, "intransitive")
    for b in range(2, G.degree + 1):
        bs = minimal_blocks(G, (1, b))
        if len(bs.blocks) > 1:
            return Primitivity(False, "imprimitive", bs)
    return Primitivity(True, "primitive")


def is_primitive(G: PermGroup) -> bool:
    return primitivity(G).primitive


def recognize_alt_or_sym(G: PermGroup) -> str:
    d = G.degree
    if G.order() == math.factorial(d):
        return f"Sym({d})"
    if 2 * G.order() == math.factorial(d) and all(g.sign() == 1 for g in G.generators):
        return f"Alt({d})"
    return "Other"


def _all_cycles(d: int, length: int) -> Iterable[Permutation]:
    for pts in combinations(range(1, d + 1), length):
        if length == 3:
            yield Permutation.from_cycles([pts], d)
            yield Permutation.from_cycles([(pts[0], pts[2], pts[1])], d)
        else:
            yield Permutation.from_cycles([pts], d)


@dataclass(frozen=True)
class JordanReport:
    transitive: bool
    primitive: bool
    has_3cycle: bool
    has_transposition: bool
    conclusion: str
    recognized: str


def jordan_check(G: PermGroup) -> JordanReport:
    d = G.degree
    prim = primitivity(G)
    has3 = any(G.contains(c) for c in _all_cycles(d, 3)) if d >= 3 else False
    has2 = any(G.contains(c) for c in _all_cycles(d, 2)) if d >= 2 else False
    if prim.primitive and has2:
        conclusion = "equals Sym"
    elif prim.primitive and has3:
        odd = any(g.sign() == -1 for g in G.generators)
        conclusion = "equals Sym" if odd else "contains Alt"
    else:
        conclusion = "inconclusive"
    return JordanReport(prim.reason != "intransitive", prim.primitive, has3, has2,
                        conclusion, recognize_alt_or_sym(G))


@dataclass(frozen=True)
class WildWitness:
    tau: Permutation
    flavor: str  # "Sym" | "Alt" | "S4-special"
    closure_check: bool


def wild_witness(P: PermGroup, ambient: str) -> WildWitness:
    """Pick the witness element of a 2-subgroup P with full normal closure:
    odd for Sym(d), even of order 2 for Alt(d), a transposition or 4-cycle
    in S4. Ties go to the smallest element order, then the least
    canonical cycle form."""
    d = P.degree
    if ambient not in ("Sym", "Alt"):
        raise ValueError("ambient must be 'Sym' or 'Alt'")
    A = PermGroup.symmetric(d) if ambient == "Sym" else PermGroup.alternating(d)
    if not is_p_group(P, 2):
        raise NotPGroup(f"order {P.order()} is not a power of 2")
    if not P.is_subgroup_of(A):
        raise NotMember(f"P is not contained in {ambient}({d})")
    if normal_closure(A, P.generators).order() != A.order():
        raise ClosureNotFull(f"normal closure of P in {ambient}({d}) is proper")

    def full(t: Permutation) -> bool:
        return normal_closure(A, [t]).order() == A.order()

    flavor = "S4-special" if (ambient == "Sym" and d == 4) else ambient
    for t in sorted(P.elements(), key=lambda x: (x.order(), lex_key(x))):
        if flavor == "Alt":
            ok = t.sign() == 1 and t.order() == 2
        elif flavor == "S4-special":
            ok = t.cycle_type() in ((2,), (4,))
        else:
            ok = t.sign() == -1
        if ok and full(t):
            return WildWitness(t, flavor, True)
    raise ClosureNotFull("no witness element with full normal closure")
