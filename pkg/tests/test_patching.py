from __future__ import annotations

import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from inertia_cert.errors import PreconditionError
from inertia_cert.patching import (
    RamificationProfile,
    derive_params,
    params_violations,
    riemann_hurwitz_tame,
    solve_gamma,
)

ODD_PRIMES = [3, 5, 7, 11, 13]


def brute_gamma(p: int, m: int, h1_prime: int, h2: int) -> int:
    gamma = 1
    while True:
        if (math.gcd(gamma, p) == 1 and math.gcd(gamma, m) == 1
                and (gamma * m + 1) % p and gamma * h2 >= h1_prime):
            return gamma
        gamma += 1


@pytest.mark.parametrize("args,gamma", [((3, 2, 1, 1), 5), ((5, 1, 2, 3), 1),
                                        ((3, 2, 7, 1), 11)])
def test_solve_gamma(args, gamma):
    assert solve_gamma(*args) == gamma == brute_gamma(*args)


def test_derive_params_examples():
    q = derive_params(3, 2, 1, 1, 1)
    assert (q.gamma, q.h1, q.e) == (5, 5, 11)
    q = derive_params(5, 1, 1, 2, 3)
    assert (q.gamma, q.h1, q.e) == (1, 3, 6)
    for p in ODD_PRIMES:
        q = derive_params(p, 1, 1, 1, 1)
        assert (q.gamma, q.h1, q.e) == (1, 1, 2)
        assert params_violations(q) == []


@pytest.mark.parametrize("args,condition", [
    ((2, 1, 1, 1, 1), "p odd"),
    ((4, 1, 1, 1, 1), "p prime"),
    ((3, 1, 1, 1, 3), "gcd(h2, p) = 1"),
    ((3, 3, 3, 1, 3), "gcd(h2, p) = 1"),
    ((5, 3, 1, 1, 1), "m | h2(p-1)"),
    ((5, 2, 2, 1, 1), "gcd(h2, m) = m'"),
    ((5, 1, 1, 5, 1), "gcd(h1', p) = 1"),
])
def test_derive_params_refusals(args, condition):
    with pytest.raises(PreconditionError) as e:
        derive_params(*args)
    assert e.value.condition == condition


@st.composite
def admissible(draw):
    p = draw(st.sampled_from(ODD_PRIMES))
    h2 = draw(st.integers(1, 60).filter(lambda h: h % p))
    m = draw(st.sampled_from([d for d in range(1, h2 * (p - 1) + 1)
                              if (h2 * (p - 1)) % d == 0 and d % p]))
    h1_prime = draw(st.integers(1, 200).filter(lambda h: h % p))
    return p, m, math.gcd(h2, m), h1_prime, h2


@given(admissible())
def test_derived_params_invariants(args):
    p, m, m_prime, h1_prime, h2 = args
    q = derive_params(*args)
    assert params_violations(q) == []
    assert q.gamma == brute_gamma(p, m, h1_prime, h2)
    assert math.gcd(q.e, m) == m_prime and q.e % p
    assert math.gcd(m, q.e // math.gcd(q.h1, q.h2)) == 1


@given(admissible(), st.integers(1, 50))
def test_wrong_m_prime_refused(args, k):
    p, m, m_prime, h1_prime, h2 = args
    assume(k != m_prime)
    with pytest.raises(PreconditionError):
        derive_params(p, m, k, h1_prime, h2)


# -- Riemann-Hurwitz ----------------------------------------------------------------------

def test_rh_s4_example():
    res = riemann_hurwitz_tame(RamificationProfile(24, 0, [[4] * 6]))
    assert res.value == -30 and not res.feasible and res.genus is None


def test_rh_kummer_degree_two():
    res = riemann_hurwitz_tame(RamificationProfile(2, 0, [[2], [2]]))
    assert res.value == -2 and res.feasible and res.genus == 0


@pytest.mark.parametrize("n", range(1, 8))
def test_rh_unramified(n):
    res = riemann_hurwitz_tame(RamificationProfile(n, 0, []))
    assert res.value == -2 * n and res.feasible == (n == 1)


def test_rh_bad_fiber():
    with pytest.raises(PreconditionError):
        riemann_hurwitz_tame(RamificationProfile(5, 0, [[2, 2]]))
    with pytest.raises(PreconditionError):
        riemann_hurwitz_tame(RamificationProfile(2, 0, [[0, 2]]))


@given(st.integers(1, 30), st.integers(0, 3), st.data())
def test_rh_formula(n, g, draw):
    fibers = []
    for _ in range(draw.draw(st.integers(0, 3))):
        e = draw.draw(st.sampled_from([k for k in range(1, n + 1) if n % k == 0]))
        fibers.append([e] * (n // e))
    res = riemann_hurwitz_tame(RamificationProfile(n, g, fibers))
    value = n * (2 * g - 2) + sum(e - 1 for f in fibers for e in f)
    assert res.value == value
    assert res.feasible == (value >= -2 and value % 2 == 0)
