"""Command-line entry point: ``hallbase <command> ...``.

Exit codes: 0 every executed check passed, 1 a check failed, 2 usage or
input error, 3 an element cap or work budget was exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .base import DEFAULT_BUDGET, base_size, q_exact, regular_orbit_count, verify_certificate
from .corpus import MANIFEST, bundled_corpus_dir, load_corpus
from .cosets import coset_space
from .errors import CapExceeded, HallBaseError, WorkBudgetExceeded
from .groupfile import load_group, load_subgroup
from .lie.families import FAMILIES, verify_all
from .perm import DEFAULT_CAP, PrimeSet, is_hall, is_solvable
from .probability import probability_report
from .properties import fpr_table, run_properties

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    group_path: Path | None = None
    subgroup_path: Path | None = None
    pi: PrimeSet | None = None
    c: int = 5
    m: int = 5
    cap: int = DEFAULT_CAP
    budget: int = DEFAULT_BUDGET
    output_format: str = "text"
    families: list[str] = field(default_factory=list)
    q_min: int | None = None
    corpus: Path | None = None
    output: Path | None = None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _prime_set(text: str) -> PrimeSet:
    try:
        return PrimeSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hallbase",
                                     description="Base sizes of solvable Hall subgroups: exact checks and certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")

    limits = argparse.ArgumentParser(add_help=False)
    limits.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="largest group order to enumerate")
    limits.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="work budget for tuple searches")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("group_path", type=Path, metavar="GROUP")
    pair.add_argument("subgroup_path", type=Path, metavar="SUBGROUP")

    corpus = argparse.ArgumentParser(add_help=False)
    corpus.add_argument("--corpus", type=Path, default=None, help="corpus directory (default: bundled corpus)")

    p = sub.add_parser("verify-exceptional", parents=[fmt], help="certify the exceptional-family inequalities")
    p.add_argument("--family", dest="families", action="append", default=[],
                   help=f"family to check, repeatable; one of {', '.join(FAMILIES)} or E6")
    p.add_argument("--qmin", dest="q_min", type=int, default=None, help="override the least q")
    p.add_argument("--output", type=Path, default=None, help="also write the JSON certificates here")

    p = sub.add_parser("basesize", parents=[pair, fmt, limits], help="exact base size and regular orbits")
    p.add_argument("--pi", type=_prime_set, default=None, help="check Hall and solvable for these primes first")
    p.add_argument("--m", type=_positive, default=5, help="tuple length for the regular-orbit count")
    p.add_argument("--c", type=_positive, default=5, help="largest c for the exact non-regular probability")

    sub.add_parser("fpr", parents=[pair, fmt, limits], help="fixed point ratios by two independent routes")

    p = sub.add_parser("qhat", parents=[pair, fmt, limits], help="prime-order class bounds on non-regular tuples")
    p.add_argument("--c", type=_positive, default=5, help="largest c")

    sub.add_parser("props", parents=[corpus, fmt, limits], help="run the property suite on a corpus")
    sub.add_parser("report", parents=[corpus, fmt, limits], help="summary table for a corpus")
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(**{k: v for k, v in vars(ns).items()})


def _emit(payload, text: str, cfg: RunConfig) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load_pair(cfg: RunConfig):
    G = load_group(cfg.group_path, cfg.cap)
    return G, load_subgroup(cfg.subgroup_path, G)


def cmd_verify_exceptional(cfg: RunConfig) -> int:
    summary = verify_all(cfg.families or None, cfg.q_min)
    payload = summary.to_json()
    if cfg.output is not None:
        cfg.output.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    _emit(payload, summary.transcript().rstrip("\n"), cfg)
    return EXIT_OK if summary.verdict else EXIT_FAIL


def cmd_basesize(cfg: RunConfig) -> int:
    G, H = _load_pair(cfg)
    ok = True
    payload: dict = {"group": cfg.group_path.name, "subgroup": cfg.subgroup_path.name}
    if cfg.pi is not None:
        hall, solvable = is_hall(G, H, cfg.pi), is_solvable(H)
        payload.update(pi=str(cfg.pi), hall=hall, solvable=solvable)
        ok = hall and solvable
    space = coset_space(G, H)
    cert = base_size(G, H, cfg.budget)
    verified = verify_certificate(G, H, cert, cfg.budget)
    ok = ok and verified
    payload.update(
        order=G.order,
        index=space.size,
        kernel_order=space.kernel.order,
        base=cert.base,
        witnesses=[str(w) for w in cert.witnesses],
        min_order_below=cert.min_order_below,
        certificate_verified=verified,
    )
    payload[f"reg_{cfg.m}"] = regular_orbit_count(G, H, cfg.m, cfg.budget)
    payload["q_exact_by_c"] = {str(c): str(q_exact(G, H, c, cfg.budget)) for c in range(1, cfg.c + 1)}

    lines = [f"{payload['group']} / {payload['subgroup']}: |G| = {G.order}, index {space.size}, "
             f"core order {space.kernel.order}"]
    if cfg.pi is not None:
        lines.append(f"  pi = {{{cfg.pi}}}: hall={payload['hall']} solvable={payload['solvable']}")
    lines.append(f"  base size {cert.base}; witnesses {', '.join(payload['witnesses']) or '(none)'}")
    lines.append(f"  least intersection of {cert.base - 1} conjugates: {cert.min_order_below}; "
                 f"certificate {'verified' if verified else 'REJECTED'}")
    lines.append(f"  Reg({cfg.m}) = {payload[f'reg_{cfg.m}']}")
    for c, q in payload["q_exact_by_c"].items():
        lines.append(f"  Q(c={c}) = {q}")
    _emit(payload, "\n".join(lines), cfg)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_fpr(cfg: RunConfig) -> int:
    G, H = _load_pair(cfg)
    rows = fpr_table(G, H)
    lines = [f"{'class rep':<40} {'ord':>4} {'size':>8}  fpr"]
    for r in rows:
        mark = "" if r["equal"] else f"  MISMATCH (class route {r['fpr_via_class']})"
        lines.append(f"{r['rep']:<40} {r['order']:>4} {r['size']:>8}  {r['fpr']}{mark}")
    _emit({"group": cfg.group_path.name, "subgroup": cfg.subgroup_path.name, "classes": rows}, "\n".join(lines), cfg)
    return EXIT_OK if all(r["equal"] for r in rows) else EXIT_FAIL


def cmd_qhat(cfg: RunConfig) -> int:
    G, H = _load_pair(cfg)
    report = probability_report(G, H, cfg.c, cfg.budget, include_exact=True)
    payload = {"group": cfg.group_path.name, "subgroup": cfg.subgroup_path.name, **report}
    lines = [f"A = {report['hall_mass']}, B = {report['min_class_size']}"]
    for c in map(str, range(1, cfg.c + 1)):
        lines.append(f"  c={c}: Q = {report['q_exact_by_c'][c]}  Qhat = {report['q_hat_by_c'][c]}  "
                     f"B(A/B)^c = {report['class_mass_bound_by_c'][c]}")
    concluded = report["concluded_c"]
    lines.append(f"  base <= {concluded} from Qhat < 1" if concluded else "  Qhat >= 1 for every c tried")
    _emit(payload, "\n".join(lines), cfg)
    return EXIT_OK


def _corpus_cases(cfg: RunConfig):
    """Cases of the chosen corpus, or ``None`` when it is empty."""
    directory = cfg.corpus if cfg.corpus is not None else bundled_corpus_dir()
    if not directory.is_dir():
        raise FileNotFoundError(f"{directory}: not a directory")
    if not (directory / MANIFEST).exists() and not any(directory.iterdir()):
        return None
    cases = load_corpus(directory, cfg.cap)
    return cases or None


def cmd_props(cfg: RunConfig) -> int:
    cases = _corpus_cases(cfg)
    if cases is None:
        print("warning: corpus is empty, nothing checked", file=sys.stderr)
        _emit({"results": [], "passed": True}, "no cases", cfg)
        return EXIT_OK
    results = run_properties(cases)
    passed = all(r.passed for r in results)
    payload = {
        "results": [{"property": r.prop, "subject": r.subject, "passed": r.passed, "detail": r.detail}
                    for r in results],
        "passed": passed,
    }
    failed = sum(not r.passed for r in results)
    text = "\n".join(r.line() for r in results) + f"\n{len(results) - failed} passed, {failed} failed"
    _emit(payload, text, cfg)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_report(cfg: RunConfig) -> int:
    cases = _corpus_cases(cfg)
    if cases is None:
        print("warning: corpus is empty, nothing checked", file=sys.stderr)
        _emit({"cases": []}, "no cases", cfg)
        return EXIT_OK
    rows, ok = [], True
    for case in cases:
        G, H = case.group, case.subgroup
        space = coset_space(G, H)
        cert = base_size(G, H, cfg.budget)
        verified = verify_certificate(G, H, cert, cfg.budget)
        prob = probability_report(G, H, 5, cfg.budget)
        ok = ok and verified
        rows.append({
            "case": case.name,
            "pi": str(case.pi) if case.pi is not None else None,
            "order": G.order,
            "index": space.size,
            "kernel_order": space.kernel.order,
            "base": cert.base,
            "reg_5": regular_orbit_count(G, H, 5, cfg.budget),
            "hall_mass": prob["hall_mass"],
            "qhat_concludes": prob["concluded_c"],
            "certificate_verified": verified,
        })
    head = f"{'case':<16} {'pi':<6} {'|G|':>6} {'index':>6} {'core':>5} {'base':>4} {'Reg5':>10} {'A':>5}  Qhat<1 at"
    lines = [head]
    for r in rows:
        lines.append(f"{r['case']:<16} {r['pi'] or '-':<6} {r['order']:>6} {r['index']:>6} {r['kernel_order']:>5} "
                     f"{r['base']:>4} {r['reg_5']:>10} {r['hall_mass']:>5}  {r['qhat_concludes'] or '-'}"
                     + ("" if r["certificate_verified"] else "  CERTIFICATE REJECTED"))
    _emit({"cases": rows}, "\n".join(lines), cfg)
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "verify-exceptional": cmd_verify_exceptional,
    "basesize": cmd_basesize,
    "fpr": cmd_fpr,
    "qhat": cmd_qhat,
    "props": cmd_props,
    "report": cmd_report,
}


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[cfg.command](cfg)
    except (CapExceeded, WorkBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (HallBaseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
