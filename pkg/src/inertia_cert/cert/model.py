"""Certificate data: claims, side conditions, claim-checks and proof nodes,
with a lossless JSON form."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from ..errors import CycleSyntaxError
from ..perm import PermGroup, Permutation, parse_cycles

SCHEMA_VERSION = 1
KINDS = ("PWIC", "IC", "GPWIC")
STATUSES = ("verified", "assumed", "failed")


class SchemaError(ValueError):
    """A document does not match the certificate schema; ``path`` locates it."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def group_to_json(G: PermGroup) -> dict:
    return {"degree": G.degree, "gens": [str(g) for g in G.generators]}


def parse_element(text: str, degree: int) -> Permutation:
    """Parse a permutation that must already be in canonical cycle form."""
    g = parse_cycles(text, degree)
    if str(g) != text:
        raise CycleSyntaxError(f"{text!r} is not in canonical cycle form")
    return g


def group_from_json(data: dict) -> PermGroup:
    if not isinstance(data, dict) or set(data) != {"degree", "gens"}:
        raise ValueError("group must be an object with keys degree and gens")
    n = data["degree"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("degree must be an integer")
    return PermGroup([parse_element(s, n) for s in data["gens"]], n)


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass(frozen=True)
class Claim:
    kind: str
    p: int
    group: PermGroup
    inertia: tuple[PermGroup, ...]
    labels: tuple[str, ...] = ()
    tag: str = ""

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": self.p, "group": group_to_json(self.group),
                "inertia": [group_to_json(I) for I in self.inertia],
                "labels": list(self.labels), "tag": self.tag}

    @classmethod
    def from_json(cls, data: dict, path: str = "claim") -> Claim:
        _expect_keys(data, {"kind", "p", "group", "inertia", "labels", "tag"}, path)
        if data["kind"] not in KINDS:
            raise SchemaError(path + ".kind", f"unknown claim kind {data['kind']!r}")
        if not isinstance(data["p"], int):
            raise SchemaError(path + ".p", "p must be an integer")
        try:
            G = group_from_json(data["group"])
        except (ValueError, TypeError) as e:
            raise SchemaError(path + ".group", str(e)) from None
        inertia = []
        for k, I in enumerate(data["inertia"]):
            try:
                inertia.append(group_from_json(I))
            except (ValueError, TypeError) as e:
                raise SchemaError(f"{path}.inertia[{k}]", str(e)) from None
        return cls(data["kind"], data["p"], G, tuple(inertia),
                   tuple(data["labels"]), data["tag"])

    def same_as(self, other: Claim) -> bool:
        """Equal kind, prime, labels and groups (as subgroups, not generator lists)."""
        return (self.kind == other.kind and self.p == other.p
                and self.labels == other.labels and self.group == other.group
                and len(self.inertia) == len(other.inertia)
                and all(a == b for a, b in zip(self.inertia, other.inertia)))


@dataclass(frozen=True)
class SideCondition:
    statement: str
    status: str
    check: str
    args: dict
    citation: str = ""

    def to_json(self) -> dict:
        return {"statement": self.statement, "status": self.status, "check": self.check,
                "witness": self.args, "citation": self.citation}

    @classmethod
    def from_json(cls, data: dict, path: str) -> SideCondition:
        _expect_keys(data, {"statement", "status", "check", "witness", "citation"}, path)
        if data["status"] not in STATUSES:
            raise SchemaError(path + ".status", f"unknown status {data['status']!r}")
        return cls(data["statement"], data["status"], data["check"], data["witness"],
                   data["citation"])

    def key(self) -> str:
        return canonical_json(self.to_json())


@dataclass(frozen=True)
class ClaimCheck:
    """A computable statement made along the way of a proof, recorded with
    its actual outcome. Not a hypothesis of the rule that carries it."""
    statement: str
    holds: bool
    check: str
    args: dict
    observed: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"statement": self.statement, "holds": self.holds, "check": self.check,
                "witness": self.args, "observed": self.observed}

    @classmethod
    def from_json(cls, data: dict, path: str) -> ClaimCheck:
        _expect_keys(data, {"statement", "holds", "check", "witness", "observed"}, path)
        if not isinstance(data["holds"], bool):
            raise SchemaError(path + ".holds", "holds must be a boolean")
        return cls(data["statement"], data["holds"], data["check"], data["witness"],
                   data["observed"])


@dataclass(frozen=True)
class Certificate:
    claim: Claim
    rule: str
    citation: str
    side_conditions: tuple[SideCondition, ...]
    premises: tuple[Certificate, ...]
    witnesses: dict
    claim_checks: tuple[ClaimCheck, ...] = ()
    digest: str | None = None  # as recorded in a parsed document

    def body_json(self) -> dict:
        return {"claim": self.claim.to_json(), "rule": self.rule, "citation": self.citation,
                "side_conditions": [s.to_json() for s in self.side_conditions],
                "claim_checks": [c.to_json() for c in self.claim_checks],
                "witnesses": self.witnesses,
                "premises": [p.to_json() for p in self.premises]}

    def to_json(self) -> dict:
        body = self.body_json()
        body["digest"] = node_digest(body)
        return body

    @classmethod
    def from_json(cls, data: dict, path: str = "root") -> Certificate:
        _expect_keys(data, {"claim", "rule", "citation", "side_conditions", "claim_checks",
                            "witnesses", "premises", "digest"}, path)
        if not isinstance(data["witnesses"], dict):
            raise SchemaError(path + ".witnesses", "witnesses must be an object")
        for key in ("side_conditions", "claim_checks", "premises"):
            if not isinstance(data[key], list):
                raise SchemaError(f"{path}.{key}", "expected a list")
        return cls(
            Claim.from_json(data["claim"], path + ".claim"),
            data["rule"], data["citation"],
            tuple(SideCondition.from_json(s, f"{path}.side_conditions[{k}]")
                  for k, s in enumerate(data["side_conditions"])),
            tuple(Certificate.from_json(p, f"{path}.premises[{k}]")
                  for k, p in enumerate(data["premises"])),
            data["witnesses"],
            tuple(ClaimCheck.from_json(c, f"{path}.claim_checks[{k}]")
                  for k, c in enumerate(data["claim_checks"])),
            data["digest"])

    def nodes(self):
        yield self
        for p in self.premises:
            yield from p.nodes()

    def size(self) -> int:
        return sum(1 for _ in self.nodes())


def node_digest(body: dict) -> str:
    """sha256 over the canonical JSON of a node body, premises included
    through their own digests."""
    shallow = dict(body)
    shallow["premises"] = [p.get("digest") for p in body["premises"]]
    shallow.pop("digest", None)
    return hashlib.sha256(canonical_json(shallow).encode()).hexdigest()


def _expect_keys(data: Any, keys: set, path: str) -> None:
    if not isinstance(data, dict):
        raise SchemaError(path, "expected an object")
    missing = keys - set(data)
    extra = set(data) - keys
    if missing:
        raise SchemaError(path, f"missing keys {sorted(missing)}")
    if extra:
        raise SchemaError(path, f"unexpected keys {sorted(extra)}")


def document(cert: Certificate) -> dict:
    return {"schema_version": SCHEMA_VERSION, "certificate": cert.to_json()}


def dumps(cert: Certificate) -> str:
    return json.dumps(document(cert), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("$", f"invalid JSON: {e}") from None
    if not isinstance(data, dict):
        raise SchemaError("$", "expected an object")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError("$.schema_version",
                          f"unsupported schema_version {data.get('schema_version')!r}")
    if set(data) != {"schema_version", "certificate"}:
        raise SchemaError("$", "expected keys schema_version and certificate")
    return Certificate.from_json(data["certificate"], "root")
