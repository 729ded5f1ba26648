"""Certificate search. Strategies only assemble rule applications; every
rule re-checks its own hypotheses, so a strategy bug produces a refusal,
never an unsound certificate."""
from __future__ import annotations

import math
from typing import Sequence

from ..analysis import (
    is_p_group,
    is_quasi_p,
    is_sylow,
    normal_closure,
    recognize_alt_or_sym,
    wild_witness,
)
from ..errors import (
    ClosureNotFull,
    HypothesisRefusal,
    NotPGroup,
    NotPotentialInertia,
    NotQuasiP,
    NotSubgroup,
    OutsideProvenRange,
    PreconditionError,
    RuleError,
    StrategyDeclined,
)
from ..inertia import decompose_inertia
from ..patching import derive_params
from ..perm import (
    PermGroup,
    Permutation,
    align_conjugator,
    conjugate,
    lex_key,
    relabel,
    relabel_into,
    restrict_to_points,
)
from ..product import fiber_product, find_cyclic_epi, max_cyclic_common_quotient
from .checks import center_prime_to_p_order, join, restriction
from .model import Certificate, Claim
from .rules import J, Req, build, cyc, ic_claim, pwic_claim, standard_tau


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, math.isqrt(n) + 1))


def _sorted_elements(G: PermGroup) -> list[Permutation]:
    return sorted(G.elements(), key=lambda x: (x.order(), lex_key(x)))


# -- claim validation ------------------------------------------------------------

def validate(G: PermGroup, inertias: Sequence[PermGroup], p: int, seed: int = 0) -> str:
    """Refuse claims outside the conjecture's hypotheses; return the claim kind."""
    if not _is_prime(p):
        raise HypothesisRefusal(f"p = {p} is not prime")
    if not inertias:
        raise HypothesisRefusal("at least one inertia group is required")
    for k, I in enumerate(inertias):
        if I.degree != G.degree or not I.is_subgroup_of(G):
            raise NotSubgroup(f"inertia group {k + 1} is not a subgroup of G")
    if not is_quasi_p(G, p, seed):
        raise NotQuasiP(f"G (order {G.order()}) is not generated by its Sylow {p}-subgroups")
    if len(inertias) == 1 and not is_p_group(inertias[0], p):
        if decompose_inertia(inertias[0], p) is None:
            raise NotPotentialInertia("the inertia group is not a p-group extended by a "
                                      "cyclic group of order prime to p")
        kind = "IC"
    else:
        for k, I in enumerate(inertias):
            if not is_p_group(I, p):
                raise NotPGroup(f"inertia group {k + 1} has order {I.order()}, not a power of {p}")
        kind = "PWIC" if len(inertias) == 1 else "GPWIC"
    gens = [g for I in inertias for g in I.generators]
    if normal_closure(G, gens).order() != G.order():
        raise ClosureNotFull("the conjugates of the inertia groups generate a proper "
                             "normal subgroup")
    return kind


# -- structure ---------------------------------------------------------------------

def factor_structure(G: PermGroup) -> list[tuple[str, list[int]]] | None:
    """Decompose G as a direct product of full alternating or symmetric groups
    on its orbits, or return None."""
    factors = []
    total = 1
    for orb in sorted(G.orbits(), key=min):
        if len(orb) < 2:
            continue
        pts = sorted(orb)
        R = PermGroup([relabel(restrict_to_points(g, pts), pts) for g in G.generators], len(pts))
        tag = recognize_alt_or_sym(R)
        if tag == "Other":
            return None
        factors.append(("A" if tag.startswith("Alt") else "S", pts))
        total *= R.order()
    return factors if total == G.order() else None


def product_group(factors: Sequence[tuple[str, Sequence[int]]], degree: int) -> PermGroup:
    gens = []
    for kind, pts in factors:
        base = PermGroup.alternating(len(pts)) if kind == "A" else PermGroup.symmetric(len(pts))
        gens += [relabel_into(g, list(pts), degree) for g in base.generators if not g.is_identity()]
    return PermGroup(gens, degree)


def relabel_group(G: PermGroup, pts: Sequence[int]) -> PermGroup:
    return PermGroup([relabel(restrict_to_points(g, pts), pts) for g in G.generators], len(pts))


def transport(cert: Certificate, images: Sequence[int], degree: int,
              group: PermGroup | None = None, inertia: Sequence[PermGroup] | None = None
              ) -> Certificate:
    """Carry a certificate along the injection i -> images[i-1]."""
    images = list(images)
    c = cert.claim
    if images == list(range(1, c.group.degree + 1)) and degree == c.group.degree:
        return cert

    def move(H: PermGroup) -> PermGroup:
        return PermGroup([relabel_into(g, images, degree) for g in H.generators], degree)

    G2 = group if group is not None else move(c.group)
    I2 = tuple(inertia) if inertia is not None else tuple(move(I) for I in c.inertia)
    claim = Claim(c.kind, c.p, G2, I2, c.labels, c.tag)
    return build("R-TRANSPORT", claim, [cert], {"images": images})


def enlarge(cert: Certificate, new_inertia: PermGroup, conj: Permutation | None = None
            ) -> Certificate:
    """Pass from (G, I) to (G, I') with a p-group I' containing a conjugate of I."""
    c = cert.claim
    g = conj if conj is not None else Permutation.identity(c.group.degree)
    if new_inertia == c.inertia[0] and g.is_identity():
        return cert
    return build("R-ENLARGE", pwic_claim(c.group, new_inertia, c.p, c.tag), [cert],
                 {"conj": str(g)})


# -- p odd: alternating groups -----------------------------------------------------

def _alt_p_cyclic(p: int) -> Certificate:
    """(A_p, <(1..p)>) on p points."""
    A = PermGroup.alternating(p)
    tau = standard_tau(p, 1, p)
    if p == 3:
        return build("AX-EXT-A3", pwic_claim(A, cyc(tau), p, "A3"))
    return build("AX-SYLOW", pwic_claim(A, cyc(tau), p, f"A{p}"))


def alt_rp_standard(r: int, p: int, u: int) -> Certificate:
    """(A_rp, <tau_1 ... tau_u>) on rp points, tau_i the i-th standard p-cycle."""
    n = r * p
    A = PermGroup.alternating(n)
    tau = standard_tau(p, u, n)
    if u < r:
        return build("AX-EXT-DK-5.6", pwic_claim(A, cyc(tau), p, f"A{n}"), (),
                     {"tau": str(tau)})
    d1 = n - p
    block, rest = list(range(1, d1 + 1)), list(range(d1 + 1, n + 1))
    first = _alt_p_cyclic(p) if r == 2 else alt_rp_standard(r - 1, p, r - 1)
    prem1 = transport(first, block, n)
    prem2 = transport(_alt_p_cyclic(p), rest, n)
    G12 = product_group([("A", block), ("A", rest)], n)
    dk = build("AX-EXT-DK-5.2", pwic_claim(G12, cyc(tau), p), [prem1, prem2],
               {"block": block, "tau": str(tau)})
    c = Permutation.from_cycles([(i, d1 + i) for i in range(1, p + 1)], n)
    H = join([G12, cyc(c)])
    m = c.order()
    t = max_cyclic_common_quotient(H, m)
    phi = find_cyclic_epi(H, t, c)
    if phi is None:
        raise StrategyDeclined("no surjection onto the common cyclic quotient")
    F = fiber_product(H, m, t, phi)
    I = PermGroup([tau, c], n)
    m_prime = center_prime_to_p_order(I, p)
    params = derive_params(p, m, m_prime, 1, minimal_h2(p, m, m_prime))
    notes = [("c is an even permutation", "element_in",
              {"element": str(c), "degree": n, "group": J(A)}, {"sign": c.sign()}),
             ("c swaps the first and last p-cycle of tau", "conjugation_relation",
              {"x": str(tau), "g": str(c), "y": str(tau), "degree": n}, {}),
             (f"H has order {H.order()}", "order_equals", {"group": J(H), "order": H.order()},
              {"order_H": H.order(), "fiber_product_order": F.order(), "t": t})]
    return build("R-KUMMER", pwic_claim(A, cyc(tau), p, f"A{n}"), [dk],
                 {"block": block, "lambda": str(tau), "c": str(c), "H": J(H), "t": t,
                  "phi": phi, "fiber_order": F.order(), "params": params.to_dict()},
                 notes=notes)


def minimal_h2(p: int, m: int, m_prime: int, bound: int = 10 ** 4) -> int:
    """Least h2 >= 1 prime to p with gcd(h2, m) = m' and m | h2(p-1)."""
    for h2 in range(1, bound):
        if math.gcd(h2, p) == 1 and math.gcd(h2, m) == m_prime and (h2 * (p - 1)) % m == 0:
            return h2
    raise StrategyDeclined(f"no admissible h2 for p={p}, m={m}, m'={m_prime}")


def alt_odd(d: int, p: int, P: PermGroup) -> Certificate:
    """PWIC claim (A_d, P) on d points, p odd."""
    A = PermGroup.alternating(d)
    if d % p:
        return build("AX-EXT-DAS-1.7", pwic_claim(A, P, p, f"A{d}"), (),
                     {"factors": [["A", list(range(1, d + 1))]]})
    if d == p:
        return build("AX-SYLOW", pwic_claim(A, P, p, f"A{d}"))
    r = d // p
    x = next(g for g in _sorted_elements(P) if g.order() == p)
    u = len(x.cycles())
    std = standard_tau(p, u, d)
    base = alt_rp_standard(r, p, u)
    g = align_conjugator(std, x, even=True)
    if g is None:
        raise StrategyDeclined("no even conjugator to the chosen element")
    return enlarge(base, P, g)


# -- p = 2 ----------------------------------------------------------------------------

def order2(d: int, tau: Permutation) -> Certificate:
    """(A_d, <tau>) for an even involution, (S_d, <tau>) for an odd one, when
    tau moves fewer than d points."""
    r = len(tau.cycles())
    if tau.order() != 2 or 2 * r >= d:
        raise StrategyDeclined(f"order-2 construction needs an involution with 2r < d "
                               f"(r = {r}, d = {d})")
    tau0 = Permutation.from_cycles([(2 * u - 1, 2 * u) for u in range(1, r + 1)], d)
    leaves = []
    for u in range(1, r + 1):
        for b in range(2 * r + 1, d + 1):
            s = Permutation.from_cycles([(2 * u - 1, 2 * u, b)], d)
            Hub = PermGroup([s, tau0], d)
            extra = [Req("tau^-1 sigma tau = sigma^2", "conjugation_relation",
                         {"x": str(s), "g": str(tau0), "y": str(s * s), "degree": d}),
                     Req("H_(u,b) has order 6", "order_equals", {"group": J(Hub), "order": 6})]
            leaves.append(build("AX-SYLOW", pwic_claim(Hub, cyc(tau0), 2), (), extra=extra))
    target = "Sym" if r % 2 else "Alt"
    G = PermGroup.symmetric(d) if r % 2 else PermGroup.alternating(d)
    H = join([leaf.claim.group for leaf in leaves])
    extra = [Req("H is primitive", "is_primitive", {"group": J(H)}),
             Req(f"H is {target}({d})", "recognize", {"group": J(H), "expected": f"{target}({d})"})]
    if len(leaves) == 1:
        raise StrategyDeclined("too few patching pieces")
    cert = build("R-RAYNAUD-PATCH", pwic_claim(G, cyc(tau0), 2, f"{target[0]}{d}"), leaves,
                 {"mode": "equal"}, extra=extra)
    g = align_conjugator(tau0, tau, even=(target == "Alt"))
    if g is None:
        raise StrategyDeclined("no conjugator inside the group")
    return enlarge(cert, cyc(tau), g)


def char2_alt(d: int, P: PermGroup) -> Certificate:
    """PWIC claim (A_d, P) with p = 2."""
    w = wild_witness(P, "Alt").tau
    cands = [w] + [t for t in _sorted_elements(P) if t.order() == 2 and t != w]
    for t in cands:
        if 2 * len(t.cycles()) < d:
            return enlarge(order2(d, t), P)
    raise OutsideProvenRange(f"every involution of P moves all {d} points; the purely wild "
                             f"inertia claim for A{d} is open")


def char2_sym(d: int, P: PermGroup) -> Certificate:
    """PWIC claim (S_d, P) with p = 2."""
    S = PermGroup.symmetric(d)
    for t in _sorted_elements(P):
        if t.sign() != -1:
            continue
        try:
            if t.order() == 2:
                base = order2(d, t)
            else:
                sq = cyc(t * t)
                if d < 5:
                    continue
                half = char2_alt(d, sq)
                cyc_leaf = build("AX-PGROUP", pwic_claim(cyc(t), cyc(t), 2))
                base = build("R-RAYNAUD-PATCH", pwic_claim(S, cyc(t), 2, f"S{d}"),
                             [half, cyc_leaf], {"mode": "join"})
        except (StrategyDeclined, RuleError):
            continue
        return enlarge(base, P)
    raise OutsideProvenRange(f"no odd element of P yields a construction; the purely wild "
                             f"inertia claim for S{d} with this P is open")


def _sym_element_cert(g: Permutation, factors, degree: int) -> Certificate:
    """(H_g, <g>) for a 2-element g of a product of S_d (d odd), where H_g
    contains Alt of every factor that g moves."""
    invol, long_ = [], []
    for kind, pts in factors:
        comp = restrict_to_points(g, pts)
        if comp.is_identity():
            continue
        (invol if comp.order() == 2 else long_).append((pts, comp))
    premises = []
    for pts, comp in invol:
        fixed = [b for b in pts if comp(b) == b]
        for cyc2 in comp.cycles():
            a = cyc2[0]
            for b in fixed:
                s = Permutation.from_cycles([(a, g(a), b)], degree)
                extra = [Req("g^-1 sigma g = sigma^2", "conjugation_relation",
                             {"x": str(s), "g": str(g), "y": str(s * s), "degree": degree})]
                premises.append(build("AX-SYLOW", pwic_claim(PermGroup([s, g], degree), cyc(g), 2),
                                      (), extra=extra))
    mode = "equal"
    if long_:
        h = g * g
        K = product_group([("A", pts) for pts, _ in long_], degree)
        premises.append(prove_pwic(K, cyc(h), 2))
        premises.append(build("AX-PGROUP", pwic_claim(cyc(g), cyc(g), 2)))
        mode = "join"
    if len(premises) == 1:
        return premises[0]
    H = join([c.claim.group for c in premises])
    return build("R-RAYNAUD-PATCH", pwic_claim(H, cyc(g), 2), premises, {"mode": mode})


def symprod(G: PermGroup, Ps: Sequence[PermGroup], factors, labels=None) -> Certificate:
    """Products of S_d with d odd >= 5, p = 2, one or several inertia groups."""
    n = G.degree
    if any(k != "S" or len(pts) < 5 or len(pts) % 2 == 0 for k, pts in factors):
        raise StrategyDeclined("product construction needs S_d factors with d odd >= 5")

    def signs(g):
        return sum(1 << i for i, (_, pts) in enumerate(factors)
                   if restrict_to_points(g, pts).sign() == -1)

    def supp(g):
        return {i for i, (_, pts) in enumerate(factors)
                if not restrict_to_points(g, pts).is_identity()}

    covered: set[int] = set()
    certs = []
    for P in Ps:
        basis: list[int] = []  # GF(2) echelon of sign vectors
        chosen = []
        for g in _sorted_elements(P):
            v = signs(g)
            for b in basis:
                v = min(v, v ^ b)
            new_sign = v != 0
            if new_sign or not supp(g) <= covered:
                if new_sign:
                    basis.append(v)
                chosen.append(g)
                covered |= supp(g)
        if not chosen:
            certs.append(build("AX-PGROUP", pwic_claim(P, P, 2)))
            continue
        parts = [_sym_element_cert(g, factors, n) for g in chosen]
        if len(parts) == 1:
            cur = parts[0]
        else:
            cur = build("R-RAYNAUD-PATCH",
                        pwic_claim(join([c.claim.group for c in parts]),
                                   PermGroup(chosen, n), 2), parts, {"mode": "join"})
        Gj = cur.claim.group
        if P.is_subgroup_of(Gj):
            cur = enlarge(cur, P)
        elif cur.claim.inertia[0] != P:
            leaf = build("AX-PGROUP", pwic_claim(P, P, 2))
            cur = build("R-RAYNAUD-PATCH", pwic_claim(join([Gj, P]), P, 2), [cur, leaf],
                        {"mode": "join"})
        certs.append(cur)
    if len(Ps) == 1:
        if certs[0].claim.group != G:
            raise StrategyDeclined("the construction does not reach the whole group")
        return certs[0]
    return compose(G, certs, labels)


def compose(G: PermGroup, certs: Sequence[Certificate], labels=None) -> Certificate:
    labels = tuple(labels) if labels else tuple(f"x{j + 1}" for j in range(len(certs)))
    claim = Claim("GPWIC", certs[0].claim.p, G, tuple(c.claim.inertia[0] for c in certs), labels)
    return build("R-GPWIC-COMPOSE", claim, certs)


# -- products and dispatch ----------------------------------------------------------

def prod3(G: PermGroup, P: PermGroup, p: int, factors) -> Certificate:
    """Split off the first factor and combine perfect factors."""
    block = factors[0][1]
    rest = sorted(x for _, pts in factors[1:] for x in pts)
    G1, G2 = restriction(G, block), restriction(G, rest)
    P1, P2 = restriction(P, block), restriction(P, rest)
    c1 = _pwic(G1, P1, p, [factors[0]])
    c2 = _pwic(G2, P2, p, factors[1:])
    return build("R-PROD-3", pwic_claim(G, P, p), [c1, c2], {"block": block})


def _single_factor(G: PermGroup, P: PermGroup, p: int, kind: str, pts: list[int]
                   ) -> Certificate:
    d = len(pts)
    Ps = relabel_group(P, pts)
    if kind == "A" and p % 2:
        std = alt_odd(d, p, Ps)
    elif kind == "A":
        std = char2_alt(d, Ps)
    elif p == 2:
        std = char2_sym(d, Ps)
    else:
        raise StrategyDeclined(f"Sym({d}) is not a quasi-{p} group")
    return transport(std, pts, G.degree, G, [P])


def _pwic(G: PermGroup, P: PermGroup, p: int, factors=None) -> Certificate:
    if P == G:
        return build("AX-PGROUP", pwic_claim(G, P, p))
    if is_sylow(G, P, p):
        return build("AX-SYLOW", pwic_claim(G, P, p))
    if factors is None:
        factors = factor_structure(G)
    if not factors:
        raise StrategyDeclined("no strategy for this group structure")
    if len(factors) == 1:
        return _single_factor(G, P, p, *factors[0])
    kinds = {k for k, _ in factors}
    if kinds == {"A"}:
        return prod3(G, P, p, factors)
    if kinds == {"S"} and p == 2:
        return symprod(G, [P], factors)
    raise StrategyDeclined("products mixing alternating and symmetric factors are not covered")


def prove_pwic(G: PermGroup, P: PermGroup, p: int) -> Certificate:
    return _pwic(G, P, p)


def reduction(cert_tau: Certificate, cert_inertia: Certificate, tau: Permutation,
              c: Permutation, target: PermGroup | None = None,
              conj: Permutation | None = None, extra: Sequence[Req] = ()) -> Certificate:
    """From (G, <tau>) and (H, <tau> x| <c>) with H in G, realize
    (G, <tau> x| <c>), then move the wild part to a p-group containing a
    conjugate of <tau> that is normalized by the conjugated c."""
    G = cert_tau.claim.group
    p = cert_tau.claim.p
    if math.gcd(c.order(), p) != 1:
        raise RuleError(f"c has order {c.order()}, divisible by p = {p}")
    I = PermGroup([tau, c], G.degree)
    m, m_prime = c.order(), center_prime_to_p_order(I, p)
    params = derive_params(p, m, m_prime, 1, minimal_h2(p, m, m_prime))
    cert = build("R-PATCH-HKG", ic_claim(G, I, p), [cert_tau, cert_inertia],
                 {"tau": str(tau), "c": str(c), "params": params.to_dict()}, extra=extra)
    if target is None:
        return cert
    g = conj if conj is not None else Permutation.identity(G.degree)
    b2 = conjugate(c, g)
    dec = decompose_inertia(target, p)
    if dec is None:
        raise RuleError("the target is not a p-group extended by a cyclic group")
    wild_new = dec.P
    if not all(wild_new.contains(conjugate(h, b2)) for h in wild_new.generators):
        bad = next(h for h in wild_new.generators if not wild_new.contains(conjugate(h, b2)))
        raise RuleError(f"the conjugated c does not normalize the new wild part: it sends "
                        f"{bad} to {conjugate(bad, b2)}")
    return build("R-ENLARGE", ic_claim(G, target, p), [cert],
                 {"conj": str(g), "beta": str(c), "wild": J(cyc(tau)),
                  "wild_new": J(wild_new)})


def corollary_a_p_plus_1(p: int, I: PermGroup) -> Certificate:
    """Inertia claim (A_(p+1), I) for p >= 5 through A_p."""
    n = p + 1
    A = PermGroup.alternating(n)
    dec = decompose_inertia(I, p)
    if dec is None or dec.P.order() != p:
        raise StrategyDeclined("inertia group of unexpected shape")
    x = next(g for g in _sorted_elements(dec.P) if g.order() == p)
    std = standard_tau(p, 1, n)
    g = align_conjugator(std, x)
    if g.sign() == -1:
        # a multiplier of order p-1 normalizes <(1..p)> and is odd
        k = next(k for k in range(2, p) if all(pow(k, (p - 1) // q, p) != 1
                                             for q in range(2, p) if (p - 1) % q == 0
                                             and _is_prime(q)))
        t = Permutation([(i * k) % p or p if i <= p else i for i in range(1, n + 1)])
        g = t * g
    # pull I back so that its wild part is <std> and it fixes the last point
    I0 = PermGroup([conjugate(h, g.inverse()) for h in I.generators], n)
    c0 = conjugate(dec.c, g.inverse())
    tau_cert = build("AX-SYLOW", pwic_claim(A, cyc(std), p, f"A{n}"))
    small = relabel_group(I0, list(range(1, p + 1)))
    bp = build("AX-EXT-BP-A_p", Claim("IC", p, PermGroup.alternating(p), (small,), (), f"A{p}"))
    Ap = PermGroup([relabel_into(h, list(range(1, p + 1)), n)
                    for h in PermGroup.alternating(p).generators], n)
    bp_emb = transport(bp, list(range(1, p + 1)), n, Ap, [I0])
    extra = [Req(f"the normalizers of <(1..p)> in A{p} and A{n} coincide", "normalizers_equal",
                 {"small": J(Ap), "large": J(A), "sub": J(cyc(std))})]
    target = I if I != I0 else None
    return reduction(tau_cert, bp_emb, std, c0, target, g, extra)


def _ic(G: PermGroup, I: PermGroup, p: int) -> Certificate:
    factors = factor_structure(G)
    if factors and len(factors) == 1 and factors[0][0] == "A":
        pts = factors[0][1]
        d = len(pts)
        if d == p and p >= 5:
            std = build("AX-EXT-BP-A_p", Claim("IC", p, PermGroup.alternating(p),
                                               (relabel_group(I, pts),), (), f"A{p}"))
            return transport(std, pts, G.degree, G, [I])
        if d == p + 1 and p >= 5:
            small = relabel_group(I, pts)
            std = corollary_a_p_plus_1(p, small)
            return transport(std, pts, G.degree, G, [I])
    raise StrategyDeclined("no inertia-conjecture construction covers this group", open_case=True)


def _gpwic(G: PermGroup, Ps: Sequence[PermGroup], p: int, labels) -> Certificate:
    factors = factor_structure(G)
    if factors and p == 2 and {k for k, _ in factors} == {"S"} and all(
            len(pts) % 2 and len(pts) >= 5 for _, pts in factors):
        return symprod(G, Ps, factors, labels)
    certs = []
    for P in Ps:
        Gj = normal_closure(G, P.generators)
        if Gj.order() == 1:
            certs.append(build("AX-PGROUP", pwic_claim(P, P, p)))
        else:
            certs.append(_pwic(Gj, P, p))
    return compose(G, certs, labels)


def prove(G: PermGroup, inertias: Sequence[PermGroup], p: int,
          labels: Sequence[str] | None = None, seed: int = 0) -> Certificate:
    """Search a certificate for the claim; raise a HypothesisRefusal when the
    claim violates the conjecture's hypotheses and StrategyDeclined when no
    construction applies."""
    inertias = list(inertias)
    kind = validate(G, inertias, p, seed)
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != len(inertias) or len(set(labels)) != len(labels):
            raise PreconditionError("point labels must be distinct, one per inertia group",
                                    "distinct labels")
    try:
        if kind == "PWIC" and not labels:
            return _pwic(G, inertias[0], p)
        if kind == "IC":
            return _ic(G, inertias[0], p)
        return _gpwic(G, inertias, p, labels)
    except RuleError as e:
        raise StrategyDeclined(f"a construction step was refused: {e}") from None
