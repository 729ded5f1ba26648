"""Text forms for groups and inertia groups.

Grammar::

    group    := product | explicit
    product  := family ("x" family)*
    family   := ("A" | "S" | "C") <positive integer>
    explicit := "deg=" <d> ";gens=" cycles (";" cycles)*
    inertia  := "gens=" cycles (";" cycles)*

Factors of a product act on consecutive blocks of points in the listed order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import CycleSyntaxError, InertiaCertError
from .perm import MAX_DEGREE, PermGroup, Permutation, parse_cycles

_FAMILY = re.compile(r"([ASC])([0-9]+)")


class GroupSpecError(InertiaCertError, ValueError):
    """The text does not follow the group grammar."""


@dataclass(frozen=True)
class GroupSpec:
    text: str  # canonical form
    group: PermGroup
    factors: tuple[tuple[str, int], ...] = ()  # (family letter, size); empty if explicit

    @property
    def tag(self) -> str:
        names = {"A": "Alt", "S": "Sym", "C": "C"}
        if not self.factors:
            return "explicit"
        return " x ".join(f"{names[f]}({d})" for f, d in self.factors)


def family_group(letter: str, d: int) -> PermGroup:
    if letter == "A":
        return PermGroup.alternating(d)
    if letter == "S":
        return PermGroup.symmetric(d)
    if d == 1:
        return PermGroup.trivial(1)
    return PermGroup.cyclic(d)


def _product(factors) -> PermGroup:
    degree = sum(d for _, d in factors)
    gens, offset = [], 0
    for letter, d in factors:
        gens += [g.embed(offset, degree) for g in family_group(letter, d).generators]
        offset += d
    return PermGroup(gens, degree)


def _parse_gens(body: str, degree: int) -> list[Permutation]:
    gens = []
    for part in body.split(";"):
        part = part.strip()
        if not part:
            raise GroupSpecError("empty generator")
        try:
            gens.append(parse_cycles(part, degree))
        except (CycleSyntaxError, ValueError) as e:
            raise GroupSpecError(f"generator {part!r}: {e}") from None
    return gens


def parse_group_spec(text: str) -> GroupSpec:
    s = text.strip()
    if s.startswith("deg="):
        m = re.fullmatch(r"deg=([0-9]+);gens=(.*)", s)
        if not m:
            raise GroupSpecError(f"expected deg=<d>;gens=<cycles;...>: {text!r}")
        d = int(m.group(1))
        if d < 1 or d > MAX_DEGREE:
            raise GroupSpecError(f"degree {d} outside 1..{MAX_DEGREE}")
        gens = _parse_gens(m.group(2), d)
        G = PermGroup(gens, d)
        canon = f"deg={d};gens=" + ";".join(str(g) for g in gens)
        return GroupSpec(canon, G)
    factors = []
    for part in s.split("x"):
        m = _FAMILY.fullmatch(part.strip())
        if not m:
            raise GroupSpecError(f"unknown group family {part!r} in {text!r}")
        d = int(m.group(2))
        if d < 1:
            raise GroupSpecError(f"degree must be at least 1 in {part!r}")
        factors.append((m.group(1), d))
    if sum(d for _, d in factors) > MAX_DEGREE:
        raise GroupSpecError(f"total degree exceeds {MAX_DEGREE}")
    canon = "x".join(f"{f}{d}" for f, d in factors)
    return GroupSpec(canon, _product(factors), tuple(factors))


def print_group_spec(spec: GroupSpec) -> str:
    return spec.text


def parse_inertia_spec(text: str, degree: int) -> PermGroup:
    s = text.strip()
    if not s.startswith("gens="):
        raise GroupSpecError(f"inertia must be given as gens=<cycles;...>: {text!r}")
    return PermGroup(_parse_gens(s[len("gens="):], degree), degree)


def inertia_spec(I: PermGroup) -> str:
    return "gens=" + ";".join(str(g) for g in I.generators)
