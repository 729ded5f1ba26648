"""Shape of inertia groups: a normal p-group extended by a cyclic group of
order prime to p."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .analysis import is_normal, is_p_group, sylow_p
from .perm import PermGroup, Permutation, lex_key


@dataclass(frozen=True)
class InertiaDecomposition:
    P: PermGroup
    m: int
    c: Permutation
    p: int

    @property
    def group(self) -> PermGroup:
        return PermGroup(list(self.P.generators) + [self.c], self.P.degree)


def decompose_inertia(I: PermGroup, p: int, seed: int = 0) -> InertiaDecomposition | None:
    """Split I as P x| <c>, or return None when I has no such shape.

    c is the least complement generator in (order, cycle form) order."""
    P = sylow_p(I, p, seed)
    if not is_normal(I, P):
        return None
    m = I.order() // P.order()
    if math.gcd(m, p) != 1:
        return None
    if m == 1:
        return InertiaDecomposition(P, 1, Permutation.identity(I.degree), p)
    # an element of order m meets P trivially, so it generates a complement;
    # one exists exactly when I/P is cyclic
    cands = [g for g in I.elements() if g.order() == m]
    if not cands:
        return None
    c = min(cands, key=lex_key)
    return InertiaDecomposition(P, m, c, p)


def is_purely_wild(I: PermGroup, p: int) -> bool:
    return is_p_group(I, p)


def is_potential_inertia(I: PermGroup, p: int) -> bool:
    return decompose_inertia(I, p) is not None
