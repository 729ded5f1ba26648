"""Permutations and permutation groups.

Points are 1-based at every public boundary and 0-based internally. Products
compose left to right: ``(a * b)(x) == b(a(x))``. Groups carry a complete
stabilizer chain built deterministically by Schreier-Sims over an explicit
full base, so order and membership queries are exact.
"""
from __future__ import annotations

import math
import random
import re
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import CycleSyntaxError, DegreeMismatch, EnumerationTooLarge

DEFAULT_ENUMERATION_BOUND = 10**6
MAX_DEGREE = 64


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple([b[x] for x in a])


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


class Permutation:
    """Bijection of {1..degree}, immutable and hashable."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        img = tuple(int(x) - 1 for x in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(img)}: {list(images)}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple) -> Permutation:
        self = object.__new__(cls)
        self._img = img
        self._hash = hash(img)
        return self

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from an iterable of cycles (1-based), composed left to right."""
        result = tuple(range(degree))
        for cyc in cycles:
            result = _mul(result, _cycle_tuple(cyc, degree))
        return cls._raw(result)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")
        return Permutation._raw(_mul(self._img, other._img))

    def __pow__(self, k: int) -> Permutation:
        base = self._img if k >= 0 else _inv(self._img)
        k = abs(k)
        result = tuple(range(self.degree))
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation._raw(result)

    def inverse(self) -> Permutation:
        return Permutation._raw(_inv(self._img))

    def __invert__(self) -> Permutation:
        return self.inverse()

    def conjugate(self, h: Permutation) -> Permutation:
        """Return h^-1 * self * h."""
        return conjugate(self, h)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        return self._img < other._img

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, x in enumerate(self._img) if i != x)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint non-trivial cycles, each starting at its smallest point,
        sorted by smallest point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self._img[i] == i:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return element_order(self)

    def sign(self) -> int:
        return sign(self)

    def cycle_type(self) -> tuple[int, ...]:
        return cycle_type(self)

    def restrict(self, offset: int, size: int) -> Permutation:
        """Restriction to the block offset+1..offset+size, re-indexed to 1..size.

        The block must be invariant."""
        img = []
        for x in self._img[offset:offset + size]:
            if not offset <= x < offset + size:
                raise ValueError("block is not invariant under this permutation")
            img.append(x - offset)
        return Permutation._raw(tuple(img))

    def embed(self, offset: int, degree: int) -> Permutation:
        """Shift onto points offset+1.. inside a permutation of the given degree."""
        if offset + self.degree > degree:
            raise ValueError("embedding does not fit")
        img = list(range(degree))
        for i, x in enumerate(self._img):
            img[offset + i] = offset + x
        return Permutation._raw(tuple(img))

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"


def _cycle_tuple(cycle: Sequence[int], degree: int) -> tuple:
    img = list(range(degree))
    if len(set(cycle)) != len(cycle):
        raise CycleSyntaxError(f"repeated point in cycle {tuple(cycle)}")
    for pt in cycle:
        if not 1 <= pt <= degree:
            raise CycleSyntaxError(f"point {pt} out of range 1..{degree}")
    n = len(cycle)
    for i, pt in enumerate(cycle):
        img[pt - 1] = cycle[(i + 1) % n] - 1
    return tuple(img)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse a product of cycles such as ``"(1 2 3)(4,5)"``.

    Points may be separated by spaces and/or commas. Non-disjoint cycles
    compose left to right, so ``"(1 2)(2 3)"`` equals ``"(1 3 2)"``.
    """
    if degree < 1 or degree > MAX_DEGREE:
        raise CycleSyntaxError(f"degree {degree} outside 1..{MAX_DEGREE}")
    stripped = text.strip()
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise CycleSyntaxError(f"malformed cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1).strip()
        if not body:
            continue
        tokens = [t for t in re.split(r"[\s,]+", body) if t]
        if not all(t.isdigit() for t in tokens) or re.search(r",\s*,", body):
            raise CycleSyntaxError(f"malformed cycle {m.group(0)!r}")
        cycles.append([int(t) for t in tokens])
    if stripped[pos:].strip():
        raise CycleSyntaxError(f"malformed cycle notation: {text!r}")
    return Permutation.from_cycles(cycles, degree)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: apply a, then b."""
    return a * b


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """h^-1 g h; maps h(x) to h(g(x))."""
    if g.degree != h.degree:
        raise DegreeMismatch(f"degrees {g.degree} and {h.degree} differ")
    img = [0] * g.degree
    gi, hi = g._img, h._img
    for x in range(g.degree):
        img[hi[x]] = hi[gi[x]]
    return Permutation._raw(tuple(img))


def cycle_type(g: Permutation) -> tuple[int, ...]:
    """Non-trivial cycle lengths, sorted descending."""
    return tuple(sorted((len(c) for c in g.cycles()), reverse=True))


def element_order(g: Permutation) -> int:
    return reduce(math.lcm, cycle_type(g), 1)


def sign(g: Permutation) -> int:
    even_cycles = sum(1 for n in cycle_type(g) if n % 2 == 0)
    return -1 if even_cycles % 2 else 1


def p_part(g: Permutation, p: int) -> Permutation:
    """The p-part of g: the unique power g^e with p-power order such that
    g / g^e has order prime to p."""
    n = element_order(g)
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    if q == 1:
        return Permutation.identity(g.degree)
    # e = 1 mod q, e = 0 mod n
    e = n * pow(n, -1, q) % (n * q)
    return g ** e


def lex_key(g: Permutation) -> tuple:
    """Tie-break order for witnesses: lexicographic on the canonical
    disjoint-cycle form, so (1 3) precedes (2 4) and the identity comes first."""
    return tuple(g.cycles())


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


class _Chain:
    """Stabilizer chain over an explicit full base.

    Level i holds a transversal of the stabilizer of base[:i] acting on
    base[i]: a dict from orbit point to (rep, rep^-1), where rep maps base[i]
    to that point. Reps are never replaced once set, so a sift that once
    succeeded keeps succeeding as the chain grows.
    """

    __slots__ = ("n", "base", "level_gens", "trans", "done", "ident")

    def __init__(self, n: int, base: Sequence[int]):
        self.n = n
        self.base = list(base)
        self.ident = tuple(range(n))
        self.level_gens: list[list[tuple]] = [[] for _ in self.base]
        self.trans = [{b: (self.ident, self.ident)} for b in self.base]
        self.done: list[set] = [set() for _ in self.base]

    def copy(self) -> _Chain:
        new = object.__new__(_Chain)
        new.n = self.n
        new.base = list(self.base)
        new.ident = self.ident
        new.level_gens = [list(g) for g in self.level_gens]
        new.trans = [dict(t) for t in self.trans]
        new.done = [set(d) for d in self.done]
        return new

    def strip(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for j in range(start, len(self.base)):
            x = g[self.base[j]]
            t = self.trans[j].get(x)
            if t is None:
                return g, j
            if x != self.base[j]:
                g = _mul(g, t[1])
        return g, len(self.base)

    def _extend_orbit(self, i: int) -> None:
        trans = self.trans[i]
        gens = self.level_gens[i]
        queue = list(trans)
        k = 0
        while k < len(queue):
            x = queue[k]
            k += 1
            u = trans[x][0]
            for s in gens:
                y = s[x]
                if y not in trans:
                    rep = _mul(u, s)
                    trans[y] = (rep, _inv(rep))
                    queue.append(y)

    def _insert(self, res: tuple, first: int, last: int) -> None:
        for lvl in range(first, last + 1):
            self.level_gens[lvl].append(res)
            self._extend_orbit(lvl)

    def add(self, g: tuple) -> bool:
        res, j = self.strip(g, 0)
        if j == len(self.base):
            return False
        self._insert(res, 0, j)
        self._complete(j)
        return True

    def _complete(self, i: int) -> None:
        nb = len(self.base)
        while i >= 0:
            changed = False
            trans = self.trans[i]
            gens = self.level_gens[i]
            done = self.done[i]
            for x in list(trans):
                u = trans[x][0]
                for si in range(len(gens)):
                    key = (x, si)
                    if key in done:
                        continue
                    done.add(key)
                    s = gens[si]
                    y = s[x]
                    h = _mul(_mul(u, s), trans[y][1])
                    if h == self.ident:
                        continue
                    res, j = self.strip(h, i + 1)
                    if j < nb:
                        self._insert(res, i + 1, j)
                        i = j
                        changed = True
                        break
                if changed:
                    break
            if not changed:
                i -= 1

    def order(self) -> int:
        return math.prod(len(t) for t in self.trans)

    def level_generators(self, level: int) -> list[tuple]:
        """Strong generators of the stabilizer of base[:level]."""
        seen = []
        for lvl in range(level, len(self.base)):
            for g in self.level_gens[lvl]:
                if g not in seen:
                    seen.append(g)
        return seen


class PermGroup:
    """Finite permutation group on {1..degree} given by generators.

    Immutable; the stabilizer chain is completed at construction time.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None,
                 base: Sequence[int] | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generating set")
            degree = gens[0].degree
        if degree < 1 or degree > MAX_DEGREE:
            raise ValueError(f"degree {degree} outside 1..{MAX_DEGREE}")
        for g in gens:
            if not isinstance(g, Permutation):
                raise TypeError(f"expected Permutation, got {type(g).__name__}")
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a group of degree {degree}")
        self._degree = degree
        self._gens = tuple(gens)
        if base is None:
            base_pts = list(range(degree))
        else:
            first = [b - 1 for b in base]
            base_pts = first + [x for x in range(degree) if x not in set(first)]
        self._chain = _Chain(degree, base_pts)
        for g in self._gens:
            if not g.is_identity():
                self._chain.add(g._img)
        self._order = self._chain.order()

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls([], degree)

    @classmethod
    def symmetric(cls, degree: int) -> PermGroup:
        if degree == 1:
            return cls.trivial(1)
        return cls([Permutation.from_cycles([[1, 2]], degree),
                    Permutation.from_cycles([range(1, degree + 1)], degree)], degree)

    @classmethod
    def alternating(cls, degree: int) -> PermGroup:
        if degree < 3:
            return cls.trivial(degree)
        long = range(1, degree + 1) if degree % 2 else range(2, degree + 1)
        return cls([Permutation.from_cycles([[1, 2, 3]], degree),
                    Permutation.from_cycles([long], degree)], degree)

    @classmethod
    def cyclic(cls, n: int) -> PermGroup:
        return cls([Permutation.from_cycles([range(1, n + 1)], n)], n)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._gens

    def order(self) -> int:
        return self._order

    def __len__(self) -> int:
        return self._order

    def contains(self, g: Permutation) -> bool:
        if g.degree != self._degree:
            raise DegreeMismatch(f"element of degree {g.degree}, group of degree {self._degree}")
        res, j = self._chain.strip(g._img, 0)
        return j == len(self._chain.base) and res == self._chain.ident

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self._degree == other._degree and all(other.contains(g) for g in self._gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (self._degree == other._degree and self._order == other._order
                and self.is_subgroup_of(other))

    def __hash__(self) -> int:
        return hash((self._degree, self._order))

    def __le__(self, other: PermGroup) -> bool:
        return self.is_subgroup_of(other)

    def is_trivial(self) -> bool:
        return self._order == 1

    def is_abelian(self) -> bool:
        gs = self._gens
        return all(a * b == b * a for i, a in enumerate(gs) for b in gs[i + 1:])

    def extended(self, extra: Iterable[Permutation]) -> PermGroup:
        """The group generated by self and ``extra``, reusing this chain."""
        extra = [g for g in extra if not g.is_identity()]
        new = object.__new__(PermGroup)
        new._degree = self._degree
        new._gens = self._gens + tuple(extra)
        new._chain = self._chain.copy()
        for g in extra:
            if g.degree != self._degree:
                raise DegreeMismatch("generator degree mismatch")
            new._chain.add(g._img)
        new._order = new._chain.order()
        return new

    def strong_generators(self) -> list[Permutation]:
        return [Permutation._raw(g) for g in self._chain.level_generators(0)]

    def random_element(self, seed: int | random.Random | None = 0) -> Permutation:
        """Uniform random element: one random coset rep per chain level."""
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        g = self._chain.ident
        for t in reversed(self._chain.trans):
            reps = sorted(t)
            g = _mul(g, t[reps[rng.randrange(len(reps))]][0])
        return Permutation._raw(g)

    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[Permutation]:
        if self._order > bound:
            raise EnumerationTooLarge(f"group order {self._order} exceeds bound {bound}")
        levels = [[t[x][0] for x in sorted(t)] for t in self._chain.trans if len(t) > 1]

        def rec(k: int, acc: tuple) -> Iterator[tuple]:
            if k < 0:
                yield acc
                return
            for rep in levels[k]:
                yield from rec(k - 1, _mul(acc, rep))

        for img in rec(len(levels) - 1, self._chain.ident):
            yield Permutation._raw(img)

    def orbit(self, point: int) -> frozenset[int]:
        if not 1 <= point <= self._degree:
            raise ValueError(f"point {point} out of range 1..{self._degree}")
        seen = {point - 1}
        stack = [point - 1]
        while stack:
            x = stack.pop()
            for g in self._gens:
                y = g._img[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return frozenset(x + 1 for x in seen)

    def orbits(self) -> list[frozenset[int]]:
        out, seen = [], set()
        for pt in range(1, self._degree + 1):
            if pt not in seen:
                o = self.orbit(pt)
                seen |= o
                out.append(o)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self._degree

    def pointwise_stabilizer(self, points: Iterable[int]) -> PermGroup:
        pts = sorted(set(points))
        g = PermGroup(self.strong_generators(), self._degree, base=pts)
        lvl_gens = g._chain.level_generators(len(pts))
        return PermGroup([Permutation._raw(x) for x in lvl_gens], self._degree)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self._gens)
        return f"PermGroup(degree={self._degree}, order={self._order}, gens=[{gens}])"


def group_from_generators(gens: Sequence[Permutation], degree: int | None = None) -> PermGroup:
    return PermGroup(gens, degree)


def order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, g: Permutation) -> bool:
    return G.contains(g)


def elements(G: PermGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[Permutation]:
    return G.elements(bound)


def random_element(G: PermGroup, seed: int = 0) -> Permutation:
    return G.random_element(seed)


def orbit(G: PermGroup, point: int) -> frozenset[int]:
    return G.orbit(point)


def is_transitive(G: PermGroup) -> bool:
    return G.is_transitive()


def closure_elements(gens: Sequence[Permutation], degree: int) -> set[Permutation]:
    """Breadth-first product closure; brute-force oracle for small groups."""
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# point-set helpers: a block is any sorted tuple of 1-based points


def restrict_to_points(g: Permutation, points: Sequence[int]) -> Permutation:
    """g on the invariant set `points`, identity elsewhere (same degree)."""
    img = list(range(g.degree))
    for x in points:
        y = g._img[x - 1]
        if y + 1 not in points:
            raise ValueError("point set is not invariant under this permutation")
        img[x - 1] = y
    return Permutation._raw(tuple(img))


def relabel(g: Permutation, points: Sequence[int]) -> Permutation:
    """g on the invariant set `points`, renumbered 1..len(points) in order."""
    index = {x: i for i, x in enumerate(points)}
    try:
        return Permutation._raw(tuple(index[g._img[x - 1] + 1] for x in points))
    except KeyError:
        raise ValueError("point set is not invariant under this permutation") from None


def relabel_into(g: Permutation, points: Sequence[int], degree: int) -> Permutation:
    """Inverse of relabel: move 1..len(points) onto `points` inside `degree`."""
    if len(points) != g.degree:
        raise DegreeMismatch("point list length differs from the permutation degree")
    img = list(range(degree))
    for i, x in enumerate(points):
        img[x - 1] = points[g._img[i]] - 1
    return Permutation._raw(tuple(img))


def align_conjugator(x: Permutation, y: Permutation, even: bool = False) -> Permutation | None:
    """Some g with conjugate(x, g) == y, matching cycles in canonical order.

    With even=True the result is an even permutation, corrected by a
    permutation commuting with y; None when no such correction exists."""
    if x.degree != y.degree:
        raise DegreeMismatch("elements of different degree")
    if x.cycle_type() != y.cycle_type():
        return None
    n = x.degree
    cx = sorted(x.cycles(), key=lambda c: (-len(c), c))
    cy = sorted(y.cycles(), key=lambda c: (-len(c), c))
    img = [0] * n
    for a, b in zip(cx, cy):
        for s, t in zip(a, b):
            img[s - 1] = t
    fx = [i for i in range(1, n + 1) if x(i) == i]
    fy = [i for i in range(1, n + 1) if y(i) == i]
    for s, t in zip(fx, fy):
        img[s - 1] = t
    g = Permutation(img)
    if not even or g.sign() == 1:
        return g
    if len(fy) >= 2:
        return g * Permutation.from_cycles([fy[:2]], n)
    for c in cy:
        if len(c) % 2 == 0:
            return g * Permutation.from_cycles([c], n)
    for a, b in zip(cy, cy[1:]):
        if len(a) == len(b):
            return g * Permutation.from_cycles([(s, t) for s, t in zip(a, b)], n)
    return None
