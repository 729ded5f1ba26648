"""The rule system. Each rule derives, from a node's claim, premises and
witnesses, the exact list of conditions that must hold for it to fire. The
constructor evaluates them; the verifier derives and evaluates them again.

External theorems enter only as one Assumed condition per rule, and only
after their structural hypotheses are Verified."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..errors import RuleError
from ..perm import PermGroup, Permutation, relabel, restrict_to_points
from .checks import complement_block, restriction, run_check
from .model import (
    Certificate,
    Claim,
    ClaimCheck,
    SideCondition,
    group_from_json,
    group_to_json,
    parse_element,
)


@dataclass(frozen=True)
class Req:
    statement: str
    check: str
    args: dict
    status: str = "verified"
    citation: str = ""

    def condition(self) -> SideCondition:
        return SideCondition(self.statement, self.status, self.check, self.args, self.citation)


@dataclass(frozen=True)
class Rule:
    id: str
    citation: str
    external: str  # statement of the assumed external theorem, "" for none
    requirements: Callable[[Claim, Sequence[Certificate], dict], list[Req]]
    claim_checks: Callable[[Claim, Sequence[Certificate], dict], list] = field(
        default=lambda c, p, w: [])

    def assumed(self) -> Req:
        return Req(self.external, "external", {"rule": self.id}, "assumed", self.citation)


RULES: dict[str, Rule] = {}


def need(cond: bool, message: str) -> None:
    if not cond:
        raise RuleError(message)


def J(G: PermGroup) -> dict:
    return group_to_json(G)


def cyc(x: Permutation) -> PermGroup:
    return PermGroup([x], x.degree)


def elt(witnesses: dict, key: str, degree: int) -> Permutation:
    need(key in witnesses, f"missing witness {key!r}")
    try:
        return parse_element(witnesses[key], degree)
    except (ValueError, TypeError) as e:
        raise RuleError(f"witness {key!r}: {e}") from None


def single(claim: Claim, kinds=("PWIC",)) -> PermGroup:
    need(claim.kind in kinds, f"claim kind {claim.kind} not in {kinds}")
    need(len(claim.inertia) == 1, "exactly one inertia group expected")
    need(claim.inertia[0].degree == claim.group.degree, "inertia degree differs")
    return claim.inertia[0]


def premises_of(premises, count=None, kinds=("PWIC",), degree=None, p=None):
    if count is not None:
        need(len(premises) == count, f"expected {count} premises, got {len(premises)}")
    for c in premises:
        need(c.claim.kind in kinds, f"premise kind {c.claim.kind} not in {kinds}")
        if degree is not None:
            need(c.claim.group.degree == degree, "premise degree differs")
        if p is not None:
            need(c.claim.p == p, "premise prime differs")
    return premises


def block_of(witnesses: dict, degree: int) -> list[int]:
    need("block" in witnesses, "missing witness 'block'")
    b = witnesses["block"]
    need(isinstance(b, list) and all(isinstance(x, int) and 1 <= x <= degree for x in b)
         and b == sorted(set(b)), "block must be a sorted list of points")
    return b


def register(rule_id: str, citation: str, external: str = "", claim_checks=None):
    def deco(fn):
        RULES[rule_id] = Rule(rule_id, citation, external, fn,
                              claim_checks or (lambda c, p, w: []))
        return fn
    return deco


def eq(statement, a: PermGroup, b: PermGroup) -> Req:
    return Req(statement, "groups_equal", {"a": J(a), "b": J(b)})


def generation_req(G: PermGroup, subs) -> Req:
    return Req("the conjugates of the inertia groups generate the group",
               "normal_closure_full", {"group": J(G), "subs": [J(s) for s in subs]})


def split_reqs(G: PermGroup, I: PermGroup, block, premises) -> list[Req]:
    """G = G|block x G|rest, premise k is the k-th restriction of (G, I)."""
    rest = complement_block(G, block)
    need(bool(rest), "block must leave a second factor")
    reqs = [Req("the group is the direct product of its restrictions to the two blocks",
                "direct_split", {"group": J(G), "block": block})]
    for k, pts in enumerate((block, rest)):
        reqs.append(Req(f"premise {k} group is factor {k + 1} of the product",
                        "restriction_equals",
                        {"group": J(G), "block": pts, "sub": J(premises[k].claim.group)}))
        reqs.append(Req(f"premise {k} inertia is the projection of the inertia to factor {k + 1}",
                        "restriction_equals",
                        {"group": J(I), "block": pts, "sub": J(premises[k].claim.inertia[0])}))
    return reqs


# -- axioms --------------------------------------------------------------------

@register("AX-PGROUP", "any p-group is realizable with itself as inertia (wild covers of p-groups)",
          "every p-group G is realized with inertia G over the affine line")
def _ax_pgroup(claim, premises, w):
    I = single(claim)
    premises_of(premises, 0)
    return [Req("the group is a p-group", "is_p_group", {"group": J(claim.group), "p": claim.p}),
            eq("the inertia group is the whole group", I, claim.group)]


@register("AX-SYLOW", "[Raynaud_AC, Corollary 2.2.2]",
          "a quasi-p group is realized with a Sylow p-subgroup as inertia")
def _ax_sylow(claim, premises, w):
    I = single(claim)
    premises_of(premises, 0)
    G = claim.group
    return [Req("the group is a quasi-p group", "is_quasi_p", {"group": J(G), "p": claim.p}),
            Req("the inertia group is a Sylow p-subgroup", "is_sylow",
                {"group": J(G), "sub": J(I), "p": claim.p})]


@register("AX-EXT-A3", "A3 is cyclic of order 3",
          "the purely wild inertia conjecture holds for the cyclic group A3")
def _ax_a3(claim, premises, w):
    I = single(claim)
    premises_of(premises, 0)
    need(claim.p == 3 and claim.group.degree == 3, "schema: A3 on 3 points with p = 3")
    G = claim.group
    return [Req("the group is Alt(3)", "recognize", {"group": J(G), "expected": "Alt(3)"}),
            Req("the inertia group is a subgroup", "subgroup", {"sub": J(I), "group": J(G)}),
            Req("the inertia group is a 3-group", "is_p_group", {"group": J(I), "p": 3}),
            generation_req(G, [I])]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


@register("AX-EXT-BP-A_p", "[BP, Theorem 1.2]",
          "the inertia conjecture holds for A_p, p >= 5")
def _ax_bp(claim, premises, w):
    I = single(claim, ("IC", "PWIC"))
    premises_of(premises, 0)
    p, G = claim.p, claim.group
    need(_is_prime(p) and p >= 5 and G.degree == p, "schema: A_p on p points, p >= 5 prime")
    return [Req(f"the group is Alt({p})", "recognize", {"group": J(G), "expected": f"Alt({p})"}),
            Req("the inertia group is a subgroup", "subgroup", {"sub": J(I), "group": J(G)}),
            Req("the inertia group is a p-group extended by a cyclic prime-to-p group",
                "potential_inertia", {"group": J(I), "p": p}),
            generation_req(G, [I])]


@register("AX-EXT-DK-5.6", "[DK, Corollary 5.6]",
          "(A_rp, <tau_1...tau_u>) is realizable for u < r")
def _ax_dk56(claim, premises, w):
    I = single(claim)
    premises_of(premises, 0)
    p, G = claim.p, claim.group
    n = G.degree
    need(p % 2 == 1 and n % p == 0 and n // p >= 2, "schema: A_rp with p odd, r >= 2")
    tau = elt(w, "tau", n)
    u = len(tau.cycles())
    need(u < n // p, f"schema: u = {u} must be below r = {n // p}")
    return [Req(f"the group is Alt({n})", "recognize", {"group": J(G), "expected": f"Alt({n})"}),
            eq("the inertia group is generated by tau", I, cyc(tau)),
            Req(f"tau is a product of {u} disjoint p-cycles", "cycle_type",
                {"element": str(tau), "degree": n, "type": [p] * u})]


def standard_tau(p: int, r: int, degree: int) -> Permutation:
    return Permutation.from_cycles([range(i * p + 1, (i + 1) * p + 1) for i in range(r)],
                                   degree)


def _dk52_claim_checks(claim, premises, w):
    return [("factor 1 is perfect", "is_perfect", {"group": J(premises[0].claim.group)}),
            ("factor 2 is perfect", "is_perfect", {"group": J(premises[1].claim.group)})]


@register("AX-EXT-DK-5.2", "[DK, Theorem 5.2]",
          "(A_(r-1)p x A_p, <(tau_1...tau_(r-1), tau_r)>) is realizable",
          claim_checks=_dk52_claim_checks)
def _ax_dk52(claim, premises, w):
    I = single(claim)
    p, G = claim.p, claim.group
    n = G.degree
    need(p % 2 == 1 and n % p == 0 and n // p >= 2, "schema: degree rp with p odd, r >= 2")
    premises_of(premises, 2, degree=n, p=p)
    r = n // p
    block = block_of(w, n)
    need(block == list(range(1, n - p + 1)), "schema: first block is 1..(r-1)p")
    rest = list(range(n - p + 1, n + 1))
    tau = elt(w, "tau", n)
    need(tau == standard_tau(p, r, n), "schema: tau is the standard product of r p-cycles")
    return ([Req("the group is Alt((r-1)p) x Alt(p) on the two blocks", "alt_sym_product",
                 {"group": J(G), "factors": [["A", block], ["A", rest]]}),
             eq("the inertia group is generated by tau", I, cyc(tau))]
            + split_reqs(G, I, block, premises)[1:]
            + [Req("for every 1 <= a < p an automorphism maps (tau_1^a, tau_2) to (tau_1, tau_2)",
                   "product_automorphism", {"group": J(G), "block": block, "tau": str(tau),
                                            "p": p})])


@register("AX-EXT-DAS-1.7", "[Das, Theorem 1.7(3)]",
          "the generalized purely wild inertia conjecture holds for products of A_d "
          "with d = p or d >= p+1 prime to p, p odd")
def _ax_das17(claim, premises, w):
    I = single(claim)
    premises_of(premises, 0)
    p, G = claim.p, claim.group
    need(p % 2 == 1, "schema: p odd")
    need(isinstance(w.get("factors"), list) and w["factors"], "missing witness 'factors'")
    for kind, pts in w["factors"]:
        d = len(pts)
        need(kind == "A" and (d == p or (d >= p + 1 and d % p)), f"schema: A_{d} not admissible")
    return [Req("the group is the product of the listed alternating factors", "alt_sym_product",
                {"group": J(G), "factors": w["factors"]}),
            Req("the inertia group is a subgroup", "subgroup", {"sub": J(I), "group": J(G)}),
            Req("the inertia group is a p-group", "is_p_group", {"group": J(I), "p": p}),
            generation_req(G, [I])]


# -- structural rules ----------------------------------------------------------

@register("R-TRANSPORT", "isomorphic pairs are realized together")
def _r_transport(claim, premises, w):
    (prem,) = premises_of(premises, 1, kinds=(claim.kind,), p=claim.p)
    need(prem.claim.labels == claim.labels, "labels differ")
    need(len(prem.claim.inertia) == len(claim.inertia), "inertia count differs")
    imgs = w.get("images")
    need(isinstance(imgs, list) and len(imgs) == prem.claim.group.degree
         and len(set(imgs)) == len(imgs)
         and all(isinstance(x, int) and 1 <= x <= claim.group.degree for x in imgs),
         "images must be an injective point list")
    reqs = [Req("the group is the relabelled premise group", "image_equals",
                {"src": J(prem.claim.group), "images": imgs, "dst": J(claim.group)})]
    for j, (a, b) in enumerate(zip(prem.claim.inertia, claim.inertia)):
        reqs.append(Req(f"inertia {j} is the relabelled premise inertia", "image_equals",
                        {"src": J(a), "images": imgs, "dst": J(b)}))
    return reqs


@register("R-ENLARGE", "[2, Theorem 2]",
          "realizability passes from (G, P x| <b>) to (G, P' x| <b>) for p-groups P in P'")
def _r_enlarge(claim, premises, w):
    I2 = single(claim, ("PWIC", "IC"))
    (prem,) = premises_of(premises, 1, kinds=(claim.kind,), degree=claim.group.degree,
                          p=claim.p)
    I1 = prem.claim.inertia[0]
    G, p, n = claim.group, claim.p, claim.group.degree
    g = elt(w, "conj", n)
    reqs = [eq("the group is unchanged", prem.claim.group, G),
            Req("the conjugator lies in the group", "element_in",
                {"element": str(g), "degree": n, "group": J(G)}),
            Req("the new inertia group is a subgroup", "subgroup", {"sub": J(I2), "group": J(G)})]
    if claim.kind == "PWIC":
        return reqs + [
            Req("the new inertia group is a p-group", "is_p_group", {"group": J(I2), "p": p}),
            Req("the old inertia group conjugates into the new one", "conjugates_into",
                {"sub": J(I1), "conj": str(g), "group": J(I2)})]
    beta = elt(w, "beta", n)
    P1 = _group_witness(w, "wild")
    P2 = _group_witness(w, "wild_new")
    b2 = g.inverse() * beta * g
    return reqs + [
        Req("P is a Sylow p-subgroup of the old inertia", "is_sylow",
            {"group": J(I1), "sub": J(P1), "p": p}),
        Req("P' is a Sylow p-subgroup of the new inertia", "is_sylow",
            {"group": J(I2), "sub": J(P2), "p": p}),
        Req("beta has order prime to p", "coprime_order",
            {"element": str(beta), "degree": n, "p": p}),
        Req("the old inertia is <P, beta>", "join_equals",
            {"parts": [J(P1), J(cyc(beta))], "group": J(I1)}),
        Req("P conjugates into P'", "conjugates_into",
            {"sub": J(P1), "conj": str(g), "group": J(P2)}),
        Req("the new inertia is <P', beta^g>", "join_equals",
            {"parts": [J(P2), J(cyc(b2))], "group": J(I2)}),
        Req("beta^g normalizes P'", "normalizes",
            {"element": str(b2), "degree": n, "group": J(P2)})]


def _group_witness(w: dict, key: str) -> PermGroup:
    need(key in w, f"missing witness {key!r}")
    try:
        return group_from_json(w[key])
    except (ValueError, TypeError) as e:
        raise RuleError(f"witness {key!r}: {e}") from None


def _params_req(w: dict, I: PermGroup, c: Permutation, p: int) -> Req:
    need(isinstance(w.get("params"), dict), "missing witness 'params'")
    return Req("the numerical hypothesis of the patching step holds", "patching_params",
               {"params": w["params"], "inertia": J(I), "c": str(c), "p": p})


@register("R-PATCH-HKG", "[Pries, Theorem 2.3.7 and Remark 2.3.8]",
          "patching a (G1, <tau>) cover with a (G2, <tau> x| <c>) cover gives (<G1, G2>, "
          "<tau> x| <c>)")
def _r_patch_hkg(claim, premises, w):
    I = single(claim, ("IC",))
    n, p = claim.group.degree, claim.p
    need(len(premises) == 2, "expected 2 premises")
    premises_of(premises[:1], kinds=("PWIC",), degree=n, p=p)
    premises_of(premises[1:], kinds=("IC", "PWIC"), degree=n, p=p)
    tau, c = elt(w, "tau", n), elt(w, "c", n)
    G1, G2 = premises[0].claim.group, premises[1].claim.group
    return [
        Req("tau has order p", "element_order", {"element": str(tau), "degree": n, "order": p}),
        eq("premise 1 has inertia <tau>", premises[0].claim.inertia[0], cyc(tau)),
        eq("premise 2 has the inertia of the claim", premises[1].claim.inertia[0], I),
        Req("the inertia group is <tau, c>", "join_equals",
            {"parts": [J(cyc(tau)), J(cyc(c))], "group": J(I)}),
        Req("c normalizes <tau>", "normalizes", {"element": str(c), "degree": n,
                                                 "group": J(cyc(tau))}),
        Req("c has order prime to p", "coprime_order", {"element": str(c), "degree": n, "p": p}),
        Req("the two premise groups generate the group", "join_equals",
            {"parts": [J(G1), J(G2)], "group": J(claim.group)}),
        _params_req(w, I, c, p)]


def _kummer_claim_checks(claim, premises, w):
    n = claim.group.degree
    H = _group_witness(w, "H")
    S = PermGroup.symmetric(n)
    return [(f"H equals Sym({n})", "groups_equal", {"a": J(H), "b": J(S)},
             {"order_H": H.order(), f"order_Sym({n})": S.order()}),
            ("the kernel of H -> Z/t equals the conclusion group", "cyclic_kernel_equals",
             {"group": J(H), "t": w.get("t"), "phi": w.get("phi"), "target": J(claim.group)},
             {"order_H": H.order(), "t": w.get("t"), "order_target": claim.group.order()})]


@register("R-KUMMER",
          "Harbater-Katz-Gabber cover, [Pries, Theorem 2.3.7] and [Manish_Killing, Prop. 3.5]",
          "pulling back along the Kummer cover of order ord(c) realizes (H x_T <c>, <lambda>)",
          claim_checks=_kummer_claim_checks)
def _r_kummer(claim, premises, w):
    I = single(claim)
    n, p = claim.group.degree, claim.p
    (prem,) = premises_of(premises, 1, degree=n, p=p)
    G12 = prem.claim.group
    block = block_of(w, n)
    rest = complement_block(G12, block)
    lam = elt(w, "lambda", n)
    c = elt(w, "c", n)
    H = _group_witness(w, "H")
    need(all(isinstance(w.get(k), int) for k in ("t", "fiber_order")), "missing t/fiber_order")
    need(isinstance(w.get("phi"), list), "missing witness 'phi'")
    m = c.order()
    l1, l2 = restrict_to_points(lam, block), restrict_to_points(lam, rest)
    G1, G2 = restriction(G12, block), restriction(G12, rest)
    return [
        Req("the premise group is G1 x G2 on the two blocks", "direct_split",
            {"group": J(G12), "block": block}),
        eq("the premise inertia is <lambda>", prem.claim.inertia[0], cyc(lam)),
        eq("the claim inertia is <lambda>", I, cyc(lam)),
        Req("lambda_1 has order p", "element_order", {"element": str(l1), "degree": n, "order": p}),
        Req("lambda_2 has order p", "element_order", {"element": str(l2), "degree": n, "order": p}),
        Req("G1 is a quasi-p group", "is_quasi_p", {"group": J(G1), "p": p}),
        Req("G2 is a quasi-p group", "is_quasi_p", {"group": J(G2), "p": p}),
        Req("c has order prime to p", "coprime_order", {"element": str(c), "degree": n, "p": p}),
        Req("c interchanges lambda_1 and lambda_2 by conjugation", "commutes_and_interchanges",
            {"lambda": str(lam), "c": str(c), "degree": n, "block": block}),
        Req("H = <G1 x G2, c>", "join_equals", {"parts": [J(G12), J(cyc(c))], "group": J(H)}),
        Req("T = Z/t is the largest common cyclic quotient of H and <c>", "max_cyclic_quotient",
            {"group": J(H), "m": m, "t": w["t"]}),
        Req("phi is a surjection H -> Z/t with phi(c) = 1", "cyclic_epi",
            {"group": J(H), "t": w["t"], "phi": w["phi"], "c": str(c)}),
        Req("the fiber product H x_T <c> has order |H| ord(c) / t", "fiber_order_law",
            {"group": J(H), "m": m, "t": w["t"], "phi": w["phi"], "order": w["fiber_order"]}),
        _params_req(w, PermGroup([lam, c], n), c, p),
        Req("lambda lies in the conclusion group", "element_in",
            {"element": str(lam), "degree": n, "group": J(claim.group)})]


@register("R-RAYNAUD-PATCH", "[Raynaud_AC, Theorem 2.2.3]",
          "patching (G_i, I) covers gives (<G_i>, I)")
def _r_raynaud(claim, premises, w):
    I = single(claim)
    n, p = claim.group.degree, claim.p
    premises_of(premises, kinds=("PWIC",), degree=n, p=p)
    need(len(premises) >= 2, "at least two premises")
    mode = w.get("mode", "equal")
    need(mode in ("equal", "join"), "mode must be 'equal' or 'join'")
    reqs = [Req("the premise groups generate the group", "join_equals",
                {"parts": [J(c.claim.group) for c in premises], "group": J(claim.group)})]
    if mode == "equal":
        reqs += [eq(f"premise {k} has the same inertia", c.claim.inertia[0], I)
                 for k, c in enumerate(premises)]
    else:
        reqs += [Req("the inertia group is generated by the premise inertia groups",
                     "join_equals", {"parts": [J(c.claim.inertia[0]) for c in premises],
                                     "group": J(I)}),
                 Req("the inertia group is a p-group", "is_p_group", {"group": J(I), "p": p})]
    return reqs


def _prod_common(claim, premises, w):
    I = single(claim)
    n, p = claim.group.degree, claim.p
    premises_of(premises, 2, degree=n, p=p)
    block = block_of(w, n)
    return I, block, split_reqs(claim.group, I, block, premises)


@register("R-PROD-1", "[DK, Theorem 5.2]",
          "for perfect quasi-p G1, G2 with the automorphism condition, (G1 x G2, <(tau_1, tau_2)>)"
          " is realizable")
def _r_prod1(claim, premises, w):
    I, block, reqs = _prod_common(claim, premises, w)
    n, p = claim.group.degree, claim.p
    tau = elt(w, "tau", n)
    reqs.append(eq("the inertia group is <tau>", I, cyc(tau)))
    for k in range(2):
        G = premises[k].claim.group
        reqs.append(Req(f"factor {k + 1} is perfect", "is_perfect", {"group": J(G)}))
        reqs.append(Req(f"factor {k + 1} is a quasi-p group", "is_quasi_p", {"group": J(G), "p": p}))
    reqs.append(Req("for every 1 <= a < p an automorphism maps (tau_1^a, tau_2) to (tau_1, tau_2)",
                    "product_automorphism",
                    {"group": J(claim.group), "block": block, "tau": str(tau), "p": p}))
    return reqs


@register("R-PROD-2", "[Das, Theorem 7.5]",
          "without a common quotient, (G1 x G2, Q) is realizable when pi_i(Q) = <tau_i>")
def _r_prod2(claim, premises, w):
    I, block, reqs = _prod_common(claim, premises, w)
    n, p = claim.group.degree, claim.p
    rest = complement_block(claim.group, block)
    reqs.append(Req("Q is a p-group", "is_p_group", {"group": J(I), "p": p}))
    for k, pts in enumerate((block, rest)):
        tau = elt(w, f"tau{k + 1}", n)
        reqs.append(eq(f"premise {k} inertia is cyclic", premises[k].claim.inertia[0], cyc(tau)))
    std = [PermGroup([relabel(g, pts) for g in premises[k].claim.group.generators], len(pts))
           for k, pts in enumerate((block, rest))]
    need(isinstance(w.get("tags"), list) and len(w["tags"]) == 2, "missing witness 'tags'")
    reqs.append(Req("the factors have no common non-trivial quotient", "no_common_quotient",
                    {"a": J(std[0]), "tag_a": w["tags"][0], "b": J(std[1]),
                     "tag_b": w["tags"][1]}))
    return reqs


@register("R-PROD-3", "Goursat's lemma, [Manish_Compositum, Corollary 4.6], [Das, Lemma 4.6] "
          "and formal patching",
          "the purely wild inertia conjecture for perfect quasi-p G1 and G2 passes to G1 x G2")
def _r_prod3(claim, premises, w):
    I, block, reqs = _prod_common(claim, premises, w)
    for k in range(2):
        G = premises[k].claim.group
        reqs.append(Req(f"factor {k + 1} is perfect", "is_perfect", {"group": J(G)}))
        reqs.append(Req(f"factor {k + 1} is a quasi-p group", "is_quasi_p",
                        {"group": J(G), "p": claim.p}))
    return reqs


@register("R-GPWIC-COMPOSE", "[Das, Theorem 4.7]",
          "covers realizing (G_j, P_j) with <G_j> = G combine into one G-cover with P_j over x_j")
def _r_compose(claim, premises, w):
    need(claim.kind == "GPWIC", "conclusion must be a multi-point claim")
    n = claim.group.degree
    premises_of(premises, len(claim.inertia), degree=n, p=claim.p)
    need(len(premises) >= 1, "at least one premise")
    need(len(claim.labels) == len(claim.inertia), "one label per inertia group")
    need(len(set(claim.labels)) == len(claim.labels), "point labels must be distinct")
    reqs = [eq(f"premise {j} has inertia P_{j + 1} at {claim.labels[j]}",
               c.claim.inertia[0], claim.inertia[j]) for j, c in enumerate(premises)]
    reqs.append(Req("the premise groups generate the group", "join_equals",
                    {"parts": [J(c.claim.group) for c in premises], "group": J(claim.group)}))
    return reqs


# -- node construction ------------------------------------------------------------

def required(rule: Rule, claim: Claim, premises, witnesses) -> list[Req]:
    reqs = list(rule.requirements(claim, premises, witnesses))
    if rule.external:
        reqs.append(rule.assumed())
    return reqs


def node_claim_checks(rule: Rule, claim: Claim, premises, witnesses) -> list:
    checks = [("the conjugates of the inertia groups generate the group", "normal_closure_full",
               {"group": J(claim.group), "subs": [J(I) for I in claim.inertia]})]
    return checks + list(rule.claim_checks(claim, premises, witnesses))


def build(rule_id: str, claim: Claim, premises: Sequence[Certificate] = (),
          witnesses: dict | None = None, extra: Sequence[Req] = (),
          notes: Sequence[tuple] = ()) -> Certificate:
    """Fire a rule: derive its conditions, evaluate them, refuse on failure.

    ``extra`` are further Verified conditions a strategy wants on record;
    ``notes`` are additional claim-checks (statement, check, args, observed)."""
    if rule_id not in RULES:
        raise RuleError(f"unknown rule {rule_id}")
    rule = RULES[rule_id]
    witnesses = dict(witnesses or {})
    premises = tuple(premises)
    reqs = required(rule, claim, premises, witnesses)
    for r in list(reqs) + list(extra):
        if r.status == "verified" and not run_check(r.check, r.args):
            raise RuleError(f"{rule_id}: condition failed: {r.statement} (check {r.check})")
    ccs = []
    for item in list(node_claim_checks(rule, claim, premises, witnesses)) + list(notes):
        statement, chk, args = item[:3]
        observed = item[3] if len(item) > 3 else {}
        ccs.append(ClaimCheck(statement, run_check(chk, args), chk, args, observed))
    return Certificate(claim, rule_id, rule.citation,
                       tuple(r.condition() for r in list(reqs) + list(extra)),
                       premises, witnesses, tuple(ccs))


def pwic_claim(G: PermGroup, I: PermGroup, p: int, tag: str = "") -> Claim:
    return Claim("PWIC", p, G, (I,), (), tag)


def ic_claim(G: PermGroup, I: PermGroup, p: int, tag: str = "") -> Claim:
    return Claim("IC", p, G, (I,), (), tag)
