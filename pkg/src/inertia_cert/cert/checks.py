"""Named, self-contained checks. Each takes the JSON witness recorded in a
side condition and recomputes its truth from scratch (fresh groups)."""
from __future__ import annotations

import math
from typing import Callable

from ..analysis import (
    derived_subgroup,
    is_p_group,
    is_primitive,
    is_quasi_p,
    is_sylow,
    normal_closure,
    normalizer,
    recognize_alt_or_sym,
)
from ..inertia import decompose_inertia
from ..patching import PatchingParams, derive_params, params_violations
from ..perm import (
    PermGroup,
    Permutation,
    align_conjugator,
    conjugate,
    relabel,
    relabel_into,
    restrict_to_points,
)
from ..product import (
    evaluate_cyclic_hom,
    fiber_product,
    is_cyclic_epi,
    max_cyclic_common_quotient,
)
from .model import group_from_json, group_to_json, parse_element

CHECKS: dict[str, Callable[[dict], bool]] = {}


def check(name: str):
    def deco(fn):
        CHECKS[name] = fn
        return fn
    return deco


def run_check(name: str, args: dict) -> bool:
    """Evaluate a registered check; malformed witnesses count as failure."""
    fn = CHECKS.get(name)
    if fn is None:
        return False
    try:
        return bool(fn(args))
    except Exception:
        return False


def _g(a) -> PermGroup:
    return group_from_json(a)


def _e(text: str, degree: int) -> Permutation:
    return parse_element(text, degree)


def restriction(G: PermGroup, block) -> PermGroup:
    """The subgroup generated by the restrictions of G's generators to an
    invariant block, acting trivially elsewhere."""
    return PermGroup([restrict_to_points(g, block) for g in G.generators], G.degree)


def join(groups) -> PermGroup:
    groups = list(groups)
    return PermGroup([g for H in groups for g in H.generators], groups[0].degree)


def complement_block(G: PermGroup, block) -> list[int]:
    moved = set()
    for g in G.generators:
        moved |= g.support()
    return sorted(moved - set(block))


def center_prime_to_p_order(I: PermGroup, p: int) -> int:
    Z = [z for z in I.elements() if all(z * g == g * z for g in I.generators)]
    n = len(Z)
    while n % p == 0:
        n //= p
    return n


# -- group membership and equality --------------------------------------------

@check("is_p_group")
def _is_p_group(a):
    return is_p_group(_g(a["group"]), a["p"])


@check("is_quasi_p")
def _is_quasi_p(a):
    return is_quasi_p(_g(a["group"]), a["p"])


@check("is_sylow")
def _is_sylow(a):
    return is_sylow(_g(a["group"]), _g(a["sub"]), a["p"])


@check("subgroup")
def _subgroup(a):
    return _g(a["sub"]).is_subgroup_of(_g(a["group"]))


@check("groups_equal")
def _groups_equal(a):
    return _g(a["a"]) == _g(a["b"])


@check("order_equals")
def _order_equals(a):
    return _g(a["group"]).order() == a["order"]


@check("join_equals")
def _join_equals(a):
    return join(_g(x) for x in a["parts"]) == _g(a["group"])


@check("normal_closure_full")
def _normal_closure_full(a):
    G = _g(a["group"])
    gens = [g for s in a["subs"] for g in _g(s).generators]
    return normal_closure(G, gens).order() == G.order()


@check("is_perfect")
def _is_perfect(a):
    G = _g(a["group"])
    return derived_subgroup(G).order() == G.order()


@check("is_primitive")
def _is_primitive(a):
    return is_primitive(_g(a["group"]))


@check("recognize")
def _recognize(a):
    return recognize_alt_or_sym(_g(a["group"])) == a["expected"]


@check("potential_inertia")
def _potential_inertia(a):
    return decompose_inertia(_g(a["group"]), a["p"]) is not None


# -- elements ----------------------------------------------------------------

@check("element_in")
def _element_in(a):
    return _g(a["group"]).contains(_e(a["element"], a["degree"]))


@check("element_order")
def _element_order(a):
    return _e(a["element"], a["degree"]).order() == a["order"]


@check("coprime_order")
def _coprime_order(a):
    return math.gcd(_e(a["element"], a["degree"]).order(), a["p"]) == 1


@check("cycle_type")
def _cycle_type(a):
    return list(_e(a["element"], a["degree"]).cycle_type()) == list(a["type"])


@check("conjugation_relation")
def _conjugation_relation(a):
    n = a["degree"]
    return conjugate(_e(a["x"], n), _e(a["g"], n)) == _e(a["y"], n)


@check("normalizes")
def _normalizes(a):
    x = _e(a["element"], a["degree"])
    P = _g(a["group"])
    return all(P.contains(conjugate(h, x)) for h in P.generators)


@check("conjugates_into")
def _conjugates_into(a):
    sub, target = _g(a["sub"]), _g(a["group"])
    g = _e(a["conj"], sub.degree)
    return all(target.contains(conjugate(h, g)) for h in sub.generators)


@check("commutes_and_interchanges")
def _commutes_and_interchanges(a):
    """c centralizes lambda = (lambda_1, lambda_2) and carries part of the
    support of lambda_2 into the first block (the two factors are swapped)."""
    n = a["degree"]
    lam, c = _e(a["lambda"], n), _e(a["c"], n)
    block = set(a["block"])
    lam2 = lam.support() - block
    return conjugate(lam, c) == lam and any(c(x) in block for x in lam2) and bool(lam2)


# -- products ----------------------------------------------------------------

@check("direct_split")
def _direct_split(a):
    """G preserves the block and equals the product of its two restrictions."""
    G = _g(a["group"])
    block = a["block"]
    rest = complement_block(G, block)
    if not block or not rest:
        return False
    G1, G2 = restriction(G, block), restriction(G, rest)
    return G1.order() * G2.order() == G.order() and G1.is_subgroup_of(G) \
        and G2.is_subgroup_of(G)


@check("restriction_equals")
def _restriction_equals(a):
    return restriction(_g(a["group"]), a["block"]) == _g(a["sub"])


@check("alt_sym_product")
def _alt_sym_product(a):
    """G is the direct product of Alt/Sym on the listed disjoint blocks."""
    G = _g(a["group"])
    seen: set[int] = set()
    total = 1
    for kind, pts in a["factors"]:
        if seen & set(pts) or kind not in ("A", "S"):
            return False
        seen |= set(pts)
        total *= math.factorial(len(pts)) // (2 if kind == "A" and len(pts) > 1 else 1)
    for g in G.generators:
        if not g.support() <= seen:
            return False
        for kind, pts in a["factors"]:
            comp = restrict_to_points(g, pts)  # raises if the block moves
            if kind == "A" and comp.sign() == -1:
                return False
    return G.order() == total


@check("image_equals")
def _image_equals(a):
    src, dst = _g(a["src"]), _g(a["dst"])
    pts = a["images"]
    if len(pts) != src.degree or len(set(pts)) != len(pts):
        return False
    moved = PermGroup([relabel_into(g, pts, dst.degree) for g in src.generators], dst.degree)
    return moved == dst


@check("product_automorphism")
def _product_automorphism(a):
    """For every 1 <= k < p some element of Sym(block) x Sym(rest) normalizing
    G sends (tau_1^k, tau_2) to (tau_1, tau_2)."""
    G = _g(a["group"])
    n = G.degree
    tau = _e(a["tau"], n)
    block = a["block"]
    t1 = restrict_to_points(tau, block)
    for k in range(1, a["p"]):
        x = align_conjugator(relabel(t1 ** k, block), relabel(t1, block))
        if x is None:
            return False
        # g moves only block points, so it fixes the second component
        g = relabel_into(x, block, n)
        if conjugate(t1 ** k, g) != t1:
            return False
        if not all(G.contains(conjugate(h, g)) for h in G.generators):
            return False
    return True


# quotients of recognized factors: name -> set of quotient names (1 omitted)
def known_quotients(tag: str) -> set[str] | None:
    kind, _, rest = tag.partition("(")
    if not rest.endswith(")") or not rest[:-1].isdigit():
        return None
    d = int(rest[:-1])
    if kind == "C":
        return {f"C({k})" for k in range(2, d + 1) if d % k == 0}
    if kind == "Alt":
        if d <= 2:
            return set()
        if d == 3:
            return {"C(3)"}
        if d == 4:
            return {"C(3)", "Alt(4)"}
        return {f"Alt({d})"}
    if kind == "Sym":
        if d <= 1:
            return set()
        if d == 2:
            return {"C(2)"}
        if d == 3:
            return {"C(2)", "Sym(3)"}
        if d == 4:
            return {"C(2)", "Sym(3)", "Sym(4)"}
        return {"C(2)", f"Sym({d})"}
    return None


def _canonical_quotient(name: str) -> str:
    aliases = {"Alt(3)": "C(3)", "Sym(2)": "C(2)"}
    return aliases.get(name, name)


@check("no_common_quotient")
def _no_common_quotient(a):
    """Both groups are recognized and their non-trivial quotient lists are
    disjoint."""
    qs = []
    for key in ("a", "b"):
        G, tag = _g(a[key]), a["tag_" + key]
        if tag.startswith("C("):
            n = int(tag[2:-1])
            if not (G.order() == n and any(g.order() == n for g in G.generators)):
                return False
        elif recognize_alt_or_sym(G) != tag:
            return False
        q = known_quotients(tag)
        if q is None:
            return False
        qs.append({_canonical_quotient(x) for x in q})
    return not (qs[0] & qs[1])


@check("normalizers_equal")
def _normalizers_equal(a):
    small, large, sub = _g(a["small"]), _g(a["large"]), _g(a["sub"])
    return normalizer(small, sub) == normalizer(large, sub)


# -- cyclic quotients and fiber products -------------------------------------

@check("max_cyclic_quotient")
def _max_cyclic_quotient(a):
    return max_cyclic_common_quotient(_g(a["group"]), a["m"]) == a["t"]


@check("cyclic_epi")
def _cyclic_epi(a):
    H = _g(a["group"])
    t, phi = a["t"], a["phi"]
    if not is_cyclic_epi(H, phi, t):
        return False
    if a.get("c") is not None:
        return evaluate_cyclic_hom(H, phi, t, _e(a["c"], H.degree)) == 1 % t
    return True


@check("fiber_order_law")
def _fiber_order_law(a):
    H = _g(a["group"])
    F = fiber_product(H, a["m"], a["t"], a["phi"])
    return F.order() == a["order"] and F.order() * a["t"] == H.order() * a["m"]


# -- patching numerics -------------------------------------------------------

@check("patching_params")
def _patching_params(a):
    """The recorded parameters are the derived ones for (p, m, m', h1', h2),
    with m the order of c and m' read off the centre of I."""
    I = _g(a["inertia"])
    c = _e(a["c"], I.degree)
    q = PatchingParams(**a["params"])
    if q.m != c.order() or q.p != a["p"]:
        return False
    if q.m_prime != center_prime_to_p_order(I, q.p):
        return False
    return derive_params(q.p, q.m, q.m_prime, q.h1_prime, q.h2) == q and not params_violations(q)


def group_arg(G: PermGroup) -> dict:
    return group_to_json(G)


@check("cyclic_kernel_equals")
def _cyclic_kernel_equals(a):
    """The kernel of phi: H -> Z/t is the target group."""
    H, target = _g(a["group"]), _g(a["target"])
    t, phi = a["t"], a["phi"]
    if not is_cyclic_epi(H, phi, t):
        return False
    if target.order() * t != H.order():
        return False
    return target.is_subgroup_of(H) and all(
        evaluate_cyclic_hom(H, phi, t, g) == 0 for g in target.generators)
