"""Independent re-checking of certificates. Nothing produced by a strategy is
trusted: every condition is re-derived from the rule and re-evaluated on
freshly built groups."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import RuleError
from .checks import run_check
from .model import Certificate, Claim, SchemaError, canonical_json, loads, node_digest
from .rules import RULES, node_claim_checks, required


@dataclass
class Report:
    accepted: bool = True
    failures: list[tuple[str, str]] = field(default_factory=list)
    assumed: list[tuple[str, str, str]] = field(default_factory=list)  # path, rule, citation
    failed_claim_checks: list[tuple[str, str]] = field(default_factory=list)
    nodes: int = 0

    def fail(self, path: str, message: str) -> None:
        self.accepted = False
        self.failures.append((path, message))

    def to_json(self) -> dict:
        return {"accepted": self.accepted, "nodes": self.nodes,
                "failures": [{"path": p, "message": m} for p, m in self.failures],
                "assumed": [{"path": p, "rule": r, "citation": c} for p, r, c in self.assumed],
                "failed_claim_checks": [{"path": p, "statement": s}
                                        for p, s in self.failed_claim_checks]}


def _cc_key(statement, check, args) -> str:
    return canonical_json([statement, check, args])


def _recorded_digest(cert: Certificate) -> str:
    # premises enter through their recorded digests, so a change is reported
    # at the node that was altered
    body = {"claim": cert.claim.to_json(), "rule": cert.rule, "citation": cert.citation,
            "side_conditions": [s.to_json() for s in cert.side_conditions],
            "claim_checks": [c.to_json() for c in cert.claim_checks],
            "witnesses": cert.witnesses,
            "premises": [{"digest": p.digest if p.digest is not None else
                          node_digest(p.to_json())} for p in cert.premises]}
    return node_digest(body)


def _verify_node(cert: Certificate, path: str, report: Report) -> None:
    report.nodes += 1
    if cert.digest is not None and cert.digest != _recorded_digest(cert):
        report.fail(path, "digest mismatch: node content was altered")
    rule = RULES.get(cert.rule)
    if rule is None:
        report.fail(path, f"unknown rule {cert.rule!r}")
    else:
        _verify_conditions(cert, rule, path, report)
    for k, prem in enumerate(cert.premises):
        _verify_node(prem, f"{path}.premises[{k}]", report)


def _verify_conditions(cert: Certificate, rule, path: str, report: Report) -> None:
    if cert.citation != rule.citation:
        report.fail(path, "citation differs from the registered rule")
    try:
        reqs = required(rule, cert.claim, cert.premises, cert.witnesses)
        expected_ccs = node_claim_checks(rule, cert.claim, cert.premises, cert.witnesses)
    except RuleError as e:
        report.fail(path, f"rule {rule.id} does not apply: {e}")
        return
    except Exception as e:  # malformed witnesses
        report.fail(path, f"rule {rule.id} cannot read its witnesses: {e}")
        return
    recorded = {s.key(): s for s in cert.side_conditions}
    assumed_ok = {r.condition().key() for r in reqs if r.status == "assumed"}
    for r in reqs:
        if r.condition().key() not in recorded:
            report.fail(path, f"missing side condition: {r.statement}")
    for k, s in enumerate(cert.side_conditions):
        where = f"{path}.side_conditions[{k}]"
        if s.status == "failed":
            report.fail(where, f"failed condition: {s.statement}")
        elif s.status == "assumed":
            if s.key() not in assumed_ok or not s.citation:
                report.fail(where, f"assumption not licensed by rule {rule.id}: {s.statement}")
            else:
                report.assumed.append((path, rule.id, s.citation))
        elif not run_check(s.check, s.args):
            report.fail(where, f"condition does not hold: {s.statement} (check {s.check})")
    recorded_ccs = {_cc_key(c.statement, c.check, c.args) for c in cert.claim_checks}
    for item in expected_ccs:
        if _cc_key(*item[:3]) not in recorded_ccs:
            report.fail(path, f"missing claim-check: {item[0]}")
    for k, c in enumerate(cert.claim_checks):
        fresh = run_check(c.check, c.args)
        if fresh != c.holds:
            report.fail(f"{path}.claim_checks[{k}]",
                        f"recorded outcome {c.holds} but recomputed {fresh}: {c.statement}")
        elif not fresh:
            report.failed_claim_checks.append((path, c.statement))


def verify_certificate(cert: Certificate, expected: Claim | None = None) -> Report:
    report = Report()
    _verify_node(cert, "root", report)
    claim = cert.claim
    gen = {"group": {"degree": claim.group.degree,
                     "gens": [str(g) for g in claim.group.generators]},
           "subs": [{"degree": I.degree, "gens": [str(g) for g in I.generators]}
                    for I in claim.inertia]}
    if not run_check("normal_closure_full", gen):
        report.fail("root", "the inertia groups do not generate the group up to conjugacy")
    if expected is not None and not claim.same_as(expected):
        report.fail("root", "certificate proves a different claim")
    return report


def verify_text(text: str) -> Report:
    try:
        cert = loads(text)
    except SchemaError as e:
        report = Report()
        report.fail(e.path, str(e))
        return report
    return verify_certificate(cert)
