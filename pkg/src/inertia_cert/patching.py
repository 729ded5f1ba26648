"""Numerics of the patching step (the exponent gamma and the conductors
h1, h2, e) and a tame Riemann-Hurwitz feasibility test."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import PreconditionError


@dataclass(frozen=True)
class PatchingParams:
    p: int
    m: int
    m_prime: int
    h1_prime: int
    h2: int
    gamma: int
    h1: int
    e: int

    def to_dict(self) -> dict:
        return asdict(self)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, math.isqrt(n) + 1))


def _check_gamma_pre(p: int, m: int, h1_prime: int, h2: int) -> None:
    if not _is_prime(p):
        raise PreconditionError(f"p = {p} is not prime", "p prime")
    if p == 2:
        # gamma and m are then odd, so gamma*m + 1 is always even
        raise PreconditionError("no admissible gamma exists for p = 2", "p odd")
    if m < 1 or h2 < 1:
        raise PreconditionError("m and h2 must be positive", "m >= 1, h2 >= 1")
    if math.gcd(h2, p) != 1:
        raise PreconditionError(f"gcd(h2, p) = {math.gcd(h2, p)}", "gcd(h2, p) = 1")
    if math.gcd(m, p) != 1:
        raise PreconditionError(f"gcd(m, p) = {math.gcd(m, p)}", "gcd(m, p) = 1")
    if (h2 * (p - 1)) % m:
        raise PreconditionError(f"{m} does not divide {h2 * (p - 1)}", "m | h2(p-1)")
    if h1_prime < 1 or math.gcd(h1_prime, p) != 1:
        raise PreconditionError("h1' must be positive and prime to p", "gcd(h1', p) = 1")


def gamma_ok(gamma: int, p: int, m: int, h1_prime: int, h2: int) -> bool:
    return (gamma >= 1 and math.gcd(gamma, p) == 1 and math.gcd(gamma, m) == 1
            and (gamma * m + 1) % p != 0 and gamma * h2 >= h1_prime)


def solve_gamma(p: int, m: int, h1_prime: int, h2: int) -> int:
    """Least gamma >= 1 prime to p and m with p not dividing gamma*m + 1 and
    gamma*h2 >= h1'."""
    _check_gamma_pre(p, m, h1_prime, h2)
    start = max(1, -(-h1_prime // h2))
    # apart from the lower bound the conditions depend on gamma mod m*p, and
    # for odd p some residue class passes (gamma = 1 mod m, gamma mod p
    # avoiding 0 and -1/m), so one period suffices
    for gamma in range(start, start + m * p):
        if gamma_ok(gamma, p, m, h1_prime, h2):
            return gamma
    raise AssertionError("no admissible gamma in the search window")


def derive_params(p: int, m: int, m_prime: int, h1_prime: int, h2: int) -> PatchingParams:
    _check_gamma_pre(p, m, h1_prime, h2)
    if math.gcd(h2, m) != m_prime:
        raise PreconditionError(f"gcd(h2, m) = {math.gcd(h2, m)} != m' = {m_prime}",
                                "gcd(h2, m) = m'")
    gamma = solve_gamma(p, m, h1_prime, h2)
    h1 = gamma * h2
    e = h1 * m + h2
    params = PatchingParams(p, m, m_prime, h1_prime, h2, gamma, h1, e)
    bad = params_violations(params)
    if bad:
        raise AssertionError(f"derived parameters violate {bad}")
    return params


def params_violations(q: PatchingParams) -> list[str]:
    """Names of the PatchingParams invariants that fail (empty when valid)."""
    checks = {
        "gcd(gamma, p) = 1": math.gcd(q.gamma, q.p) == 1,
        "gcd(gamma, m) = 1": math.gcd(q.gamma, q.m) == 1,
        "p does not divide gamma*m + 1": (q.gamma * q.m + 1) % q.p != 0,
        "gamma*h2 >= h1'": q.gamma * q.h2 >= q.h1_prime,
        "h1 = gamma*h2": q.h1 == q.gamma * q.h2,
        "e = h1*m + h2": q.e == q.h1 * q.m + q.h2 == (q.gamma * q.m + 1) * q.h2,
        "gcd(e, m) = m'": math.gcd(q.e, q.m) == q.m_prime,
        "p does not divide e": q.e % q.p != 0,
        "gcd(m, e/gcd(h1, h2)) = 1": math.gcd(q.m, q.e // math.gcd(q.h1, q.h2)) == 1,
    }
    return [name for name, ok in checks.items() if not ok]


@dataclass(frozen=True)
class RamificationProfile:
    degree: int
    base_genus: int
    branch_fibers: tuple[tuple[int, ...], ...]

    def __init__(self, degree: int, base_genus: int, branch_fibers: Sequence[Sequence[int]]):
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "base_genus", base_genus)
        object.__setattr__(self, "branch_fibers", tuple(tuple(f) for f in branch_fibers))


@dataclass(frozen=True)
class RHResult:
    value: int  # 2 g_Y - 2
    feasible: bool

    @property
    def genus(self) -> int | None:
        return self.value // 2 + 1 if self.feasible else None


def riemann_hurwitz_tame(profile: RamificationProfile) -> RHResult:
    n = profile.degree
    if n < 1 or profile.base_genus < 0:
        raise PreconditionError("degree must be positive and genus non-negative", "profile")
    total = 0
    for fiber in profile.branch_fibers:
        if any(e < 1 for e in fiber):
            raise PreconditionError("ramification indices must be >= 1", "indices >= 1")
        if sum(fiber) != n:
            raise PreconditionError(f"fiber {fiber} does not sum to degree {n}",
                                    "fiber sums to degree")
        total += sum(e - 1 for e in fiber)
    value = n * (2 * profile.base_genus - 2) + total
    return RHResult(value, value >= -2 and value % 2 == 0)
