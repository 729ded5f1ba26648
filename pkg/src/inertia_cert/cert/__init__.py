"""Proof certificates: data model, rules, strategies and the verifier."""
from .model import (
           Certificate,
           Claim,
           ClaimCheck,
           SchemaError,
           SideCondition,
           dumps,
           loads,
)
from .rules import RULES, build
from .strategies import prove
from .verify import Report, verify_certificate, verify_text

__all__ = ["Certificate", "Claim", "ClaimCheck", "SchemaError", "SideCondition", "dumps", "loads",
           "RULES", "build", "prove", "Report", "verify_certificate", "verify_text"]
