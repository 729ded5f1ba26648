from __future__ import annotations

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from inertia_cert.errors import PreconditionError
from inertia_cert.perm import PermGroup, parse_cycles
from inertia_cert.product import (
    abelianization_order,
    direct_product,
    embed_factor,
    evaluate_cyclic_hom,
    factor_kernel,
    fiber_product,
    find_cyclic_epi,
    goursat,
    goursat_reconstruct,
    is_cyclic_epi,
    is_cyclic_hom,
    max_cyclic_common_quotient,
    projection,
    support_pattern,
)


def P(text: str, n: int):
    return parse_cycles(text, n)


A3, S3 = PermGroup.alternating(3), PermGroup.symmetric(3)
S6 = PermGroup.symmetric(6)
WREATH18 = PermGroup([P("(1 2 3)", 6), P("(4 5 6)", 6), P("(1 4)(2 5)(3 6)", 6)])


# -- products -----------------------------------------------------------------------

def test_direct_product_order():
    G, ps = direct_product([A3, A3])
    assert G.order() == 9 and G.degree == 6 and ps.degree == 6


def test_embed_factor():
    _, ps = direct_product([PermGroup.symmetric(5)] * 2)
    assert embed_factor(ps, 2, P("(1 2 3)", 5)) == P("(6 7 8)", 10)
    with pytest.raises(IndexError):
        embed_factor(ps, 3, P("(1 2 3)", 5))


def test_support_pattern():
    _, ps = direct_product([S3, S3, PermGroup.symmetric(5)])
    g = P("(1 2 3)(10 11)", 11)
    assert support_pattern(ps, g) == {1, 3}


def test_projections():
    G, ps = direct_product([A3, A3])
    diag = PermGroup([P("(1 2 3)(4 5 6)", 6)])
    assert projection(ps, diag, 1) == A3
    assert projection(ps, G, 2) == A3
    _, ps2 = direct_product([PermGroup.symmetric(2)] * 2)
    H = PermGroup([P("(1 2)(3 4)", 4)])
    assert H.order() == 2 and projection(ps2, H, 1).order() == 2 == projection(ps2, H, 2).order()


def test_projection_rejects_crossing_group():
    _, ps = direct_product([A3, A3])
    with pytest.raises(PreconditionError):
        projection(ps, PermGroup([P("(1 4)", 6)]), 1)


# -- Goursat ----------------------------------------------------------------------------

def test_goursat_diagonal_z2():
    C2 = PermGroup.symmetric(2)
    _, ps = direct_product([C2, C2])
    d = goursat(ps, PermGroup([P("(1 2)(3 4)", 4)]))
    assert d.proj1.order() == d.proj2.order() == 2
    assert d.ker1.order() == d.ker2.order() == 1
    assert d.quotient_order == 2


def test_goursat_full_and_diagonal_a3():
    G, ps = direct_product([A3, A3])
    assert goursat(ps, G).quotient_order == 1
    D = PermGroup([P("(1 2 3)(4 5 6)", 6)])
    d = goursat(ps, D)
    assert d.proj1.order() == 3 and d.quotient_order == 3
    assert D.order() == d.proj1.order() * d.proj2.order() // d.quotient_order == 3


def test_goursat_three_factors_refused():
    G, ps = direct_product([A3, A3, A3])
    with pytest.raises(PreconditionError):
        goursat(ps, G)


def test_goursat_reconstruction_small():
    _, ps = direct_product([S3, S3])
    H = PermGroup([P("(1 2)(4 5)", 6), P("(1 2 3)(4 5 6)", 6)])
    assert goursat_reconstruct(ps, H, goursat(ps, H)) == set(H.elements())


def test_factor_kernel():
    G, ps = direct_product([S3, S3])
    H = PermGroup([P("(1 2)(4 5)", 6), P("(1 2 3)", 6)])
    assert factor_kernel(ps, H, 1) == A3
    assert factor_kernel(ps, H, 2).order() == 1


# -- cyclic quotients ---------------------------------------------------------------------

def test_max_cyclic_common_quotient():
    assert max_cyclic_common_quotient(S6, 2) == 2
    for m in (1, 2, 6, 30):
        assert max_cyclic_common_quotient(PermGroup.alternating(5), m) == 1
    assert abelianization_order(WREATH18) == 6
    assert max_cyclic_common_quotient(WREATH18, 2) == 2
    assert max_cyclic_common_quotient(WREATH18, 6) == 6
    assert max_cyclic_common_quotient(PermGroup([P("(1 2 3 4)", 4)]), 6) == 2


def _oracle_cyclic_quotient(H: PermGroup, m: int) -> int:
    # largest t | m such that H has a normal subgroup with cyclic quotient of
    # order t, by brute force over cyclic subgroups of the abelianization
    n = H.degree
    elems = oracles.closure(H.generators, n)
    comm = oracles.closure([oracles.mul(oracles.mul(oracles.inv(a), oracles.inv(b)),
                                        oracles.mul(a, b)) for a in elems for b in elems], n)
    best = 1
    for t in range(1, m + 1):
        if m % t:
            continue
        # H maps onto Z/t iff some element's image in H/H' has order divisible by t
        # after quotienting by the t-th powers
        N = oracles.closure(list(comm) + [_pow(g, t) for g in elems], n)
        if len(elems) % len(N) == 0 and _quotient_cyclic_order(elems, N) % t == 0:
            best = max(best, t)
    return best


def _pow(a, k):
    x = tuple(range(len(a)))
    for _ in range(k):
        x = oracles.mul(x, a)
    return x


def _quotient_cyclic_order(elems, N):
    # H/N is abelian of exponent t; its largest element order
    best = 1
    for g in elems:
        k, x = 1, g
        while x not in N:
            x, k = oracles.mul(x, g), k + 1
        best = max(best, k)
    return best


@given(oracles.generator_lists(min_degree=2, max_degree=5, max_gens=2),
       st.sampled_from([1, 2, 3, 4, 6, 12]))
def test_max_cyclic_quotient_matches_oracle(data, m):
    n, gens = data
    H = PermGroup(gens, n)
    assert max_cyclic_common_quotient(H, m) == _oracle_cyclic_quotient(H, m)


def test_cyclic_hom_validation():
    assert is_cyclic_epi(S3, [1, 0] if S3.generators[0].sign() == -1 else [0, 1], 2)
    assert not is_cyclic_hom(A3, [1], 2)
    assert not is_cyclic_epi(S6, [0] * len(S6.generators), 2)


def test_find_cyclic_epi_sends_c_to_one():
    c = P("(1 2)", 6)
    phi = find_cyclic_epi(S6, 2, c)
    assert phi is not None and evaluate_cyclic_hom(S6, phi, 2, c) == 1
    assert find_cyclic_epi(PermGroup.alternating(5), 2) is None


# -- fiber products ----------------------------------------------------------------------

def _sign_phi(H: PermGroup) -> list[int]:
    return [0 if g.sign() == 1 else 1 for g in H.generators]


def test_fiber_product_sign_s3():
    F = fiber_product(S3, 2, 2, _sign_phi(S3))
    assert F.order() == 6


def test_fiber_product_trivial_quotient():
    H = PermGroup([P("(1 2 3)", 3)])
    assert fiber_product(H, 4, 1, [0]).order() == 3 * 4


def test_fiber_product_sign_s6():
    F = fiber_product(S6, 2, 2, _sign_phi(S6))
    assert F.order() == 720
    assert F.pointwise_stabilizer([7, 8]).order() == 360


def test_fiber_product_errors():
    with pytest.raises(PreconditionError):
        fiber_product(S3, 3, 2, _sign_phi(S3))  # t does not divide m
    with pytest.raises(PreconditionError):
        fiber_product(A3, 3, 3, [0])  # not surjective
    with pytest.raises(PreconditionError):
        fiber_product(A3, 2, 2, [1])  # not a homomorphism


@given(st.sampled_from([S3, PermGroup.symmetric(4), WREATH18, PermGroup([P("(1 2 3 4)", 4)])]),
       st.sampled_from([2, 4, 6]))
def test_fiber_product_order_law(H, m):
    t = max_cyclic_common_quotient(H, m)
    phi = find_cyclic_epi(H, t)
    F = fiber_product(H, m, t, phi)
    assert F.order() * t == H.order() * m
    assert {oracles.tup(g)[:H.degree] for g in F.elements()} == \
        {oracles.tup(h) for h in H.elements()}


def test_subgroup_oracle_known_counts():
    for G, count in ((PermGroup.alternating(4), 10), (PermGroup.symmetric(4), 30)):
        assert len(oracles.subgroups(oracles.closure(G.generators, G.degree))) == count


@given(st.sampled_from([S3, A3, PermGroup.symmetric(4)]), st.integers(0, 1000))
def test_projection_of_embedding(H, seed):
    _, ps = direct_product([H, S3])
    g = H.random_element(seed)
    assert ps.component(embed_factor(ps, 1, g), 1) == g
    assert ps.component(embed_factor(ps, 1, g), 2).is_identity()


@given(oracles.generator_lists(min_degree=2, max_degree=6, max_gens=3),
       st.integers(1, 24))
def test_max_cyclic_quotient_divides(data, m):
    n, gens = data
    H = PermGroup(gens, n)
    t = max_cyclic_common_quotient(H, m)
    assert m % t == 0 and abelianization_order(H) % t == 0
