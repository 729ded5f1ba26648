"""Direct products on disjoint supports, projections, Goursat data, cyclic
quotients and fiber products.

Factors occupy consecutive blocks of points in the order listed; factor
indices are 1-based like points.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .analysis import derived_subgroup, normal_closure
from .errors import PreconditionError
from .perm import PermGroup, Permutation


@dataclass(frozen=True)
class ProductStructure:
    factor_degrees: tuple[int, ...]
    offsets: tuple[int, ...]
    factors: tuple[PermGroup, ...]

    @property
    def degree(self) -> int:
        return sum(self.factor_degrees)

    def block(self, i: int) -> range:
        self._check_index(i)
        off = self.offsets[i - 1]
        return range(off + 1, off + self.factor_degrees[i - 1] + 1)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= len(self.factors):
            raise IndexError(f"factor index {i} outside 1..{len(self.factors)}")

    def component(self, g: Permutation, i: int) -> Permutation:
        self._check_index(i)
        return g.restrict(self.offsets[i - 1], self.factor_degrees[i - 1])


def direct_product(factors: Sequence[PermGroup]) -> tuple[PermGroup, ProductStructure]:
    degrees = tuple(f.degree for f in factors)
    offsets = tuple(itertools.accumulate((0,) + degrees[:-1]))
    total = sum(degrees)
    gens = [g.embed(off, total) for f, off in zip(factors, offsets) for g in f.generators]
    ps = ProductStructure(degrees, offsets, tuple(factors))
    return PermGroup(gens, total), ps


def embed_factor(ps: ProductStructure, i: int, g: Permutation) -> Permutation:
    ps._check_index(i)
    if g.degree != ps.factor_degrees[i - 1]:
        raise PreconditionError("element degree does not match the factor", "degree")
    return g.embed(ps.offsets[i - 1], ps.degree)


def support_pattern(ps: ProductStructure, g: Permutation) -> frozenset[int]:
    """Factors (1-based) on which g acts non-trivially."""
    return frozenset(i for i in range(1, len(ps.factors) + 1)
                     if not ps.component(g, i).is_identity())


def _check_blocks(ps: ProductStructure, H: PermGroup) -> None:
    if H.degree != ps.degree:
        raise PreconditionError("group degree differs from the product degree", "degree")
    for g in H.generators:
        for i in range(1, len(ps.factors) + 1):
            blk = ps.block(i)
            if any(g(x) not in blk for x in blk):
                raise PreconditionError(f"{g} moves points across factor blocks",
                                        "not a subgroup of the product")


def projection(ps: ProductStructure, H: PermGroup, i: int) -> PermGroup:
    _check_blocks(ps, H)
    return PermGroup([ps.component(g, i) for g in H.generators], ps.factor_degrees[i - 1])


def factor_kernel(ps: ProductStructure, H: PermGroup, i: int) -> PermGroup:
    """H intersected with factor i (identity on all other blocks), re-indexed."""
    _check_blocks(ps, H)
    others = [x for j in range(1, len(ps.factors) + 1) if j != i for x in ps.block(j)]
    K = H.pointwise_stabilizer(others)
    return PermGroup([ps.component(g, i) for g in K.generators], ps.factor_degrees[i - 1])


@dataclass(frozen=True)
class GoursatData:
    proj1: PermGroup
    proj2: PermGroup
    ker1: PermGroup
    ker2: PermGroup
    quotient_order: int


def goursat(ps: ProductStructure, P: PermGroup) -> GoursatData:
    if len(ps.factors) != 2:
        raise PreconditionError("Goursat data needs exactly two factors", "two factors")
    p1, p2 = projection(ps, P, 1), projection(ps, P, 2)
    k1, k2 = factor_kernel(ps, P, 1), factor_kernel(ps, P, 2)
    q = p1.order() // k1.order()
    if p2.order() // k2.order() != q or P.order() * q != p1.order() * p2.order():
        raise AssertionError("Goursat invariants violated")
    return GoursatData(p1, p2, k1, k2, q)


def goursat_reconstruct(ps: ProductStructure, P: PermGroup, data: GoursatData,
                        bound: int = 10**4) -> set[Permutation]:
    """The fiber product proj1 x_Q proj2 as an explicit element set.

    The isomorphism proj1/ker1 -> proj2/ker2 is read off the element pairs of
    P; raises if that correspondence is not single-valued."""
    if P.order() > bound:
        raise PreconditionError(f"reconstruction limited to order <= {bound}", "bound")
    k1 = set(data.ker1.elements())
    k2 = set(data.ker2.elements())

    def coset(a, K):
        return frozenset(a * k for k in K)

    theta: dict[frozenset, frozenset] = {}
    for g in P.elements():
        a, b = ps.component(g, 1), ps.component(g, 2)
        ca, cb = coset(a, k1), coset(b, k2)
        if theta.setdefault(ca, cb) != cb:
            raise AssertionError("coset correspondence is not a function")
    out = set()
    d1 = ps.factor_degrees[0]
    for a in data.proj1.elements():
        cb = theta.get(coset(a, k1))
        if cb is None:
            continue
        for b in cb:
            out.add(Permutation._raw(a._img + tuple(x + d1 for x in b._img)))
    return out


def _exponent_mod(H: PermGroup, N: PermGroup, q: int, ell: int) -> int:
    """Exponent of the abelian quotient H/N, which divides q = ell^a."""
    e = 1
    for g in H.generators:
        k = 1
        while not N.contains(g ** k):
            k *= ell
        e = max(e, k)
    return e


def _prime_powers(m: int) -> list[tuple[int, int]]:
    out, n, ell = [], m, 2
    while ell * ell <= n:
        if n % ell == 0:
            q = 1
            while n % ell == 0:
                n //= ell
                q *= ell
            out.append((ell, q))
        ell += 1
    if n > 1:
        out.append((n, n))
    return out


def max_cyclic_common_quotient(H: PermGroup, m: int) -> int:
    """Largest t | m such that H maps onto Z/t."""
    if m < 1:
        raise PreconditionError("m must be positive", "m >= 1")
    Hp = derived_subgroup(H)
    t = 1
    for ell, q in _prime_powers(m):
        N = normal_closure(H, list(Hp.generators) + [g ** q for g in H.generators])
        t *= _exponent_mod(H, N, q, ell)
    return t


def abelianization_order(H: PermGroup) -> int:
    return H.order() // derived_subgroup(H).order()


def _graph_group(H: PermGroup, phi: Sequence[int], t: int) -> PermGroup:
    d = H.degree
    zeta = Permutation.from_cycles([range(d + 1, d + t + 1)], d + t) if t > 1 else None
    gens = []
    for g, v in zip(H.generators, phi):
        x = g.embed(0, d + t)
        if zeta is not None:
            x = x * zeta ** (v % t)
        gens.append(x)
    return PermGroup(gens, d + t)


def is_cyclic_hom(H: PermGroup, phi: Sequence[int], t: int) -> bool:
    """Do the generator images phi define a homomorphism H -> Z/t?

    True iff the graph subgroup of H x Z/t meets 1 x Z/t trivially."""
    if len(phi) != len(H.generators):
        return False
    return _graph_group(H, phi, t).order() == H.order()


def is_cyclic_epi(H: PermGroup, phi: Sequence[int], t: int) -> bool:
    return is_cyclic_hom(H, phi, t) and math.gcd(t, *phi) == 1


def evaluate_cyclic_hom(H: PermGroup, phi: Sequence[int], t: int, h: Permutation) -> int:
    if t == 1:
        return 0
    F = _graph_group(H, phi, t)
    d = H.degree
    zeta = Permutation.from_cycles([range(d + 1, d + t + 1)], d + t)
    x = h.embed(0, d + t)
    for z in range(t):
        if F.contains(x * zeta ** z):
            return z
    raise PreconditionError(f"{h} is not in the group", "membership")


def find_cyclic_epi(H: PermGroup, t: int, c: Permutation | None = None) -> list[int] | None:
    """Generator images of some surjection H -> Z/t, with c mapped to 1 when
    given. Candidates are scanned in lexicographic order."""
    k = len(H.generators)
    for phi in itertools.product(range(t), repeat=k):
        if not is_cyclic_epi(H, phi, t):
            continue
        if c is not None and evaluate_cyclic_hom(H, phi, t, c) != 1 % t:
            continue
        return list(phi)
    return None


def fiber_product(H: PermGroup, m: int, t: int, phi: Sequence[int]) -> PermGroup:
    """{(h, z) in H x Z/m : phi(h) = z mod t}, with Z/m acting as an m-cycle
    on the points after H's."""
    if m < 1 or t < 1 or m % t:
        raise PreconditionError("need t | m", "t | m")
    phi = [v % t for v in phi]
    if not is_cyclic_hom(H, phi, t):
        raise PreconditionError("phi is not a homomorphism", "homomorphism")
    if math.gcd(t, *phi) != 1:
        raise PreconditionError("phi is not surjective", "surjective")
    d = H.degree
    n = d + m
    zeta = Permutation.from_cycles([range(d + 1, n + 1)], n) if m > 1 else Permutation.identity(n)
    gens = [g.embed(0, n) * zeta ** v for g, v in zip(H.generators, phi)]
    if t < m:
        gens.append(zeta ** t)
    F = PermGroup(gens, n)
    assert F.order() * t == H.order() * m
    return F
