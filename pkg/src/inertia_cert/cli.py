"""Command line interface.

Exit codes: 0 success, 1 parse or internal error (or a rejected
certificate / corpus mismatch), 2 refusal of the claim's hypotheses,
3 open case or no applicable construction."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .analysis import is_primitive, is_quasi_p, recognize_alt_or_sym
from .cert.model import SCHEMA_VERSION, dumps
from .cert.strategies import prove
from .cert.verify import verify_text
from .errors import (
    HypothesisRefusal,
    InertiaCertError,
    PreconditionError,
    StrategyDeclined,
)
from .groupspec import GroupSpecError, parse_group_spec, parse_inertia_spec
from .patching import RamificationProfile, derive_params, riemann_hurwitz_tame

EXIT_OK, EXIT_ERROR, EXIT_REFUSED, EXIT_OPEN = 0, 1, 2, 3
PRIMES = (2, 3, 5, 7, 11, 13)
SHIPPED_CORPUS = Path(__file__).parent / "data" / "corpus.txt"


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _error(kind: str, message: str, **extra) -> str:
    return _json({"schema_version": SCHEMA_VERSION, "status": kind, "message": message, **extra})


# -- analyze -----------------------------------------------------------------------

def analyze_report(group_text: str, seed: int = 0) -> dict:
    spec = parse_group_spec(group_text)
    G = spec.group
    return {"schema_version": SCHEMA_VERSION, "group": spec.text, "structure": spec.tag,
            "degree": G.degree, "order": G.order(), "transitive": G.is_transitive(),
            "primitive": is_primitive(G), "recognized": recognize_alt_or_sym(G),
            "quasi_p": {str(p): is_quasi_p(G, p, seed) for p in PRIMES}}


def cmd_analyze(args) -> int:
    report = analyze_report(args.group, args.seed)
    if args.p is not None:
        report["p"] = args.p
        report["quasi_p_at_p"] = is_quasi_p(parse_group_spec(args.group).group, args.p, args.seed)
    _emit(_json(report), args.out)
    return EXIT_OK


# -- prove ---------------------------------------------------------------------------

@dataclass
class ProveOutcome:
    code: int
    text: str
    status: str  # certificate | refusal | open | declined | error
    reason: str = ""


def run_prove(group: str, p: int, inertia: list[str], points: list[str] | None = None,
              seed: int = 0) -> ProveOutcome:
    try:
        spec = parse_group_spec(group)
        Is = [parse_inertia_spec(t, spec.group.degree) for t in inertia]
    except (GroupSpecError, ValueError) as e:
        return ProveOutcome(EXIT_ERROR, _error("error", str(e)), "error")
    try:
        cert = prove(spec.group, Is, p, points or None, seed)
    except HypothesisRefusal as e:
        return ProveOutcome(EXIT_REFUSED, _error("refusal", str(e), reason=e.code), "refusal",
                            e.code)
    except PreconditionError as e:
        return ProveOutcome(EXIT_REFUSED, _error("refusal", str(e), reason="Precondition"),
                            "refusal", "Precondition")
    except StrategyDeclined as e:
        status = "open" if e.open_case else "declined"
        return ProveOutcome(EXIT_OPEN, _error(status, str(e)), status)
    return ProveOutcome(EXIT_OK, dumps(cert), "certificate")


def cmd_prove(args) -> int:
    if args.point and len(args.point) != len(args.inertia):
        sys.stderr.write("--point must be given once per --inertia\n")
        return EXIT_ERROR
    res = run_prove(args.group, args.p, args.inertia, args.point, args.seed)
    if res.code == EXIT_OK:
        _emit(res.text, args.out)
    else:
        sys.stdout.write(res.text)
    return res.code


# -- verify ----------------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        text = Path(args.path).read_text(encoding="utf-8")
    except OSError as e:
        sys.stdout.write(_error("error", str(e)))
        return EXIT_ERROR
    report = verify_text(text)
    doc = {"schema_version": SCHEMA_VERSION, **report.to_json()}
    _emit(_json(doc), args.out)
    return EXIT_OK if report.accepted else EXIT_ERROR


# -- numerics --------------------------------------------------------------------------

def cmd_solve_patching(args) -> int:
    try:
        q = derive_params(args.p, args.m, args.m_prime, args.h1_prime, args.h2)
    except PreconditionError as e:
        sys.stdout.write(_error("refusal", str(e), condition=e.condition))
        return EXIT_REFUSED
    _emit(_json({"schema_version": SCHEMA_VERSION, **q.to_dict()}), args.out)
    return EXIT_OK


def cmd_rh(args) -> int:
    raw = args.profile
    try:
        data = json.loads(Path(raw).read_text(encoding="utf-8") if Path(raw).is_file() else raw)
        profile = RamificationProfile(data["degree"], data.get("base_genus", 0),
                                      data["branch_fibers"])
    except (OSError, ValueError, KeyError, TypeError) as e:
        sys.stdout.write(_error("error", f"bad profile: {e}"))
        return EXIT_ERROR
    try:
        res = riemann_hurwitz_tame(profile)
    except PreconditionError as e:
        sys.stdout.write(_error("refusal", str(e), condition=e.condition))
        return EXIT_REFUSED
    _emit(_json({"schema_version": SCHEMA_VERSION, "value": res.value,
                 "feasible": res.feasible, "genus": res.genus}), args.out)
    return EXIT_OK


# -- corpus ----------------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusRow:
    line: int
    group: str
    p: int
    inertia: tuple[str, ...]
    expected: str  # certificate | open | declined | refusal | refusal:<Code>
    labels: tuple[str, ...] = ()


class ManifestError(InertiaCertError, ValueError):
    pass


def parse_manifest(text: str) -> list[CorpusRow]:
    """One claim per line: ``group | p | inertia [& inertia ...] | expected [| labels]``.
    Blank lines and lines starting with # are skipped."""
    rows = []
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [x.strip() for x in line.split("|")]
        if len(parts) not in (4, 5):
            raise ManifestError(f"line {k}: expected 4 or 5 fields separated by |")
        group, p, inertia, expected = parts[:4]
        if not p.isdigit():
            raise ManifestError(f"line {k}: p must be an integer")
        kind = expected.split(":")[0]
        if kind not in ("certificate", "open", "declined", "refusal"):
            raise ManifestError(f"line {k}: unknown expectation {expected!r}")
        labels = tuple(x.strip() for x in parts[4].split(",")) if len(parts) == 5 else ()
        rows.append(CorpusRow(k, group, int(p), tuple(x.strip() for x in inertia.split("&")),
                              expected, labels))
    return rows


def run_row(row: CorpusRow, seed: int = 0) -> tuple[str, bool, str]:
    res = run_prove(row.group, row.p, list(row.inertia), list(row.labels) or None, seed)
    got = res.status if res.status != "refusal" else f"refusal:{res.reason}"
    detail = ""
    if res.status == "certificate":
        report = verify_text(res.text)
        if not report.accepted:
            got, detail = "rejected", "; ".join(f"{p}: {m}" for p, m in report.failures[:3])
        else:
            detail = f"{len(report.failed_claim_checks)} failed claim-checks" \
                if report.failed_claim_checks else ""
    else:
        detail = json.loads(res.text)["message"]
    want = row.expected
    ok = got == want or (want == "refusal" and got.startswith("refusal:"))
    return got, ok, detail


def cmd_corpus(args) -> int:
    try:
        rows = parse_manifest(Path(args.path).read_text(encoding="utf-8"))
    except (OSError, ManifestError) as e:
        sys.stdout.write(_error("error", str(e)))
        return EXIT_ERROR
    results = [(row, *run_row(row, args.seed)) for row in rows]
    if args.json:
        doc = {"schema_version": SCHEMA_VERSION, "rows": [
            {"line": r.line, "group": r.group, "p": r.p, "inertia": list(r.inertia),
             "expected": r.expected, "got": got, "ok": ok, "detail": detail}
            for r, got, ok, detail in results]}
        _emit(_json(doc), args.out)
    else:
        out = [f"{'line':>4}  {'group':<10} {'p':>2}  {'expected':<22} {'got':<22} result"]
        for r, got, ok, detail in results:
            out.append(f"{r.line:>4}  {r.group:<10} {r.p:>2}  {r.expected:<22} {got:<22} "
                       f"{'ok' if ok else 'MISMATCH'}")
        bad = sum(1 for *_, ok, _ in results if not ok)
        out.append(f"{len(results)} rows, {bad} mismatches")
        _emit("\n".join(out) + "\n", args.out)
    return EXIT_OK if all(ok for _, _, ok, _ in results) else EXIT_ERROR


# -- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="inertia-cert",
                                 description="Certificates for realizability of inertia groups "
                                             "of covers of the affine line in characteristic p.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out")

    a = sub.add_parser("analyze", help="order, quasi-p table, primitivity, recognition")
    a.add_argument("--group", required=True)
    a.add_argument("--p", type=int)
    common(a)
    a.set_defaults(func=cmd_analyze)

    pr = sub.add_parser("prove", help="search a certificate for a realizability claim")
    pr.add_argument("--group", required=True)
    pr.add_argument("--p", type=int, required=True)
    pr.add_argument("--inertia", action="append", required=True)
    pr.add_argument("--point", action="append")
    common(pr)
    pr.set_defaults(func=cmd_prove)

    v = sub.add_parser("verify", help="re-check a certificate document")
    v.add_argument("path")
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve-patching", help="numerical parameters of the patching step")
    for name in ("p", "m", "m-prime", "h1-prime", "h2"):
        s.add_argument(f"--{name}", type=int, required=True)
    common(s)
    s.set_defaults(func=cmd_solve_patching)

    r = sub.add_parser("rh", help="tame Riemann-Hurwitz feasibility of a profile")
    r.add_argument("--profile", required=True, help="JSON text or path to a JSON file")
    common(r)
    r.set_defaults(func=cmd_rh)

    c = sub.add_parser("corpus", help="run a manifest of claims against expected outcomes")
    c.add_argument("path", nargs="?", default=str(SHIPPED_CORPUS),
                   help="manifest file (default: the shipped corpus)")
    c.add_argument("--json", action="store_true")
    common(c)
    c.set_defaults(func=cmd_corpus)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    try:
        return args.func(args)
    except (GroupSpecError, ValueError) as e:
        sys.stdout.write(_error("error", str(e)))
        return EXIT_ERROR
    except Exception as e:  # internal failure
        sys.stdout.write(_error("error", f"internal error: {type(e).__name__}: {e}"))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
