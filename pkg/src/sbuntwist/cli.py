"""Command-line interface.

Cycle data travels as a JSON document: {"label": "gamma"|"gamma_inv"|
"trivial", "d": int, "orbits": [{"degree": int, "mult": int}, ...],
"declared_target": optional label}.  Orbit ids are assigned positionally
(x1, x2, ...) on parse, in document order.

Exit codes: 0 success, 1 mathematical failure or violation, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .cycles import (
    BrauerLabel,
    CycleClass,
    Orbit,
    arithmetic_genus,
    noether_check,
    self_intersection,
)
from .links import (
    DegenerateImage,
    UnsupportedDegree,
    WrongDegree,
    phi3_push,
    phi6_push,
)
from .untwist import (
    Factorization,
    InconsistentCycle,
    NonTermination,
    ParityContradiction,
    untwist,
)
from .verify import scan_closed_points, scan_phi3, scan_phi6, scan_table

LABELS = {
    "gamma": BrauerLabel.GAMMA,
    "gamma_inv": BrauerLabel.GAMMA_INVERSE,
    "trivial": BrauerLabel.TRIVIAL,
}
LABEL_NAMES = {v: k for k, v in LABELS.items()}


class DocumentError(Exception):
    """Parse failure; the message names the offending field."""


def parse_cycle_document(data: object) -> tuple[CycleClass, Optional[BrauerLabel]]:
    if not isinstance(data, dict):
        raise DocumentError("document: expected a JSON object")
    known = {"label", "d", "orbits", "declared_target"}
    for key in sorted(set(data) - known):
        raise DocumentError(f"field {key!r}: unknown field")

    label_raw = data.get("label")
    if label_raw not in LABELS:
        raise DocumentError(
            f"field 'label': expected one of {sorted(LABELS)}, got {label_raw!r}"
        )
    d = data.get("d")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise DocumentError(f"field 'd': expected an integer >= 1, got {d!r}")

    orbits = []
    raw_orbits = data.get("orbits", [])
    if not isinstance(raw_orbits, list):
        raise DocumentError(f"field 'orbits': expected a list, got {raw_orbits!r}")
    for i, rec in enumerate(raw_orbits):
        if not isinstance(rec, dict) or set(rec) != {"degree", "mult"}:
            raise DocumentError(
                f"field 'orbits[{i}]': expected an object with 'degree' and 'mult'"
            )
        degree, mult = rec["degree"], rec["mult"]
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 3 or degree % 3:
            raise DocumentError(
                f"field 'orbits[{i}].degree': expected a positive multiple of 3, "
                f"got {degree!r}"
            )
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 0:
            raise DocumentError(
                f"field 'orbits[{i}].mult': expected a non-negative integer, got {mult!r}"
            )
        orbits.append(Orbit(f"x{i + 1}", degree, mult))

    declared = None
    if "declared_target" in data:
        target_raw = data["declared_target"]
        if target_raw not in LABELS:
            raise DocumentError(
                f"field 'declared_target': expected one of {sorted(LABELS)}, "
                f"got {target_raw!r}"
            )
        declared = LABELS[target_raw]
    return CycleClass(LABELS[label_raw], d, tuple(orbits)), declared


def render_cycle_document(
    cycle: CycleClass, declared_target: Optional[BrauerLabel] = None
) -> dict:
    """Canonical document form: orbits sorted by descending multiplicity,
    then ascending degree; multiplicity-0 orbits dropped."""
    orbits = sorted(
        (o for o in cycle.orbits if o.multiplicity > 0),
        key=lambda o: (-o.multiplicity, o.degree),
    )
    doc = {
        "label": LABEL_NAMES[cycle.label],
        "d": cycle.d,
        "orbits": [{"degree": o.degree, "mult": o.multiplicity} for o in orbits],
    }
    if declared_target is not None:
        doc["declared_target"] = LABEL_NAMES[declared_target]
    return doc


def _load(path: str) -> tuple[CycleClass, Optional[BrauerLabel]]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON in {path!r}: {exc}") from exc
    return parse_cycle_document(data)


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _cmd_check(args: argparse.Namespace) -> int:
    cycle, _ = _load(args.file)
    report = noether_check(cycle)
    genus = arithmetic_genus(cycle)
    if args.format == "machine":
        _emit(
            {
                **render_cycle_document(cycle),
                "e2": report.e2,
                "e3": report.e3,
                "e4": report.e4,
                "e5": report.e5,
                "self_intersection": report.self_intersection,
                "anticanonical_degree": report.anticanonical_degree,
                "genus": genus,
                "consistent": report.consistent,
            }
        )
    else:
        verdict = lambda ok: "pass" if ok else "FAIL"  # noqa: E731
        print(f"label: {LABEL_NAMES[cycle.label]}   d: {cycle.d}")
        shown = [f"{o.id} (degree {o.degree}, mult {o.multiplicity})" for o in cycle.orbits]
        print(f"orbits: {'; '.join(shown) if shown else '(none)'}")
        print(f"E2 self-intersection equals 9:          {verdict(report.e2)} "
              f"({report.self_intersection})")
        print(f"E3 anticanonical degree equals 9:       {verdict(report.e3)} "
              f"({report.anticanonical_degree})")
        print(f"E4 maximal multiplicity reaches d+1:    {verdict(report.e4)}")
        print(f"E5 maximal orbit degree in {{3, 6}}:      {verdict(report.e5)}")
        print(f"arithmetic genus: {genus}")
    return 0 if report.consistent else 1


def _cmd_push(args: argparse.Namespace) -> int:
    cycle, declared = _load(args.file)
    if args.center is not None and cycle.find(args.center) is None:
        print(
            f"error: no orbit with id {args.center!r} in the input cycle "
            f"(ids: {[o.id for o in cycle.orbits] or 'none'})",
            file=sys.stderr,
        )
        return 2
    pushed_fn = phi3_push if args.kind == "phi3" else phi6_push
    try:
        out, link = pushed_fn(cycle, args.center)
    except (WrongDegree, DegenerateImage) as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 1
    doc = render_cycle_document(out, declared)
    if args.format == "machine":
        _emit(
            {
                "cycle": doc,
                "link": {
                    "kind": link.kind.value,
                    "center_id": link.center_id,
                    "image_orbit_id": link.image_orbit_id,
                    "source_label": LABEL_NAMES[link.source_label],
                    "target_label": LABEL_NAMES[link.target_label],
                },
            }
        )
    else:
        _emit(doc)
    return 0


_UNTWIST_ERRORS = {
    InconsistentCycle: "inconsistent_cycle",
    ParityContradiction: "parity_contradiction",
    UnsupportedDegree: "unsupported_degree",
    NonTermination: "non_termination",
}


def _cmd_untwist(args: argparse.Namespace) -> int:
    cycle, declared = _load(args.file)
    if args.target is not None:
        declared = LABELS[args.target]
    try:
        fact = untwist(cycle, declared)
    except tuple(_UNTWIST_ERRORS) as exc:
        kind = _UNTWIST_ERRORS[type(exc)]
        if args.format == "machine":
            _emit({"error": kind, "message": str(exc)})
        else:
            print(f"error ({kind}): {exc}", file=sys.stderr)
        return 1
    if args.format == "machine":
        _emit(_factorization_doc(fact))
    else:
        print(f"initial: {LABEL_NAMES[fact.initial.label]}, d = {fact.initial.d}")
        if fact.steps:
            for i, (link, cyc) in enumerate(zip(fact.steps, fact.trace[1:]), 1):
                print(
                    f"  step {i}: {link.kind.value} at {link.center_id}"
                    f"  ->  d = {cyc.d}, label {LABEL_NAMES[cyc.label]}"
                )
        else:
            print("  (empty word)")
        print(f"d-trace: {' -> '.join(str(d) for d in fact.d_trace)}")
        print(f"parity: {fact.parity.value}")
        print(
            f"terminal: -omega on {LABEL_NAMES[fact.terminal.label]} "
            f"(biregular automorphism)"
        )
    return 0


def _factorization_doc(fact: Factorization) -> dict:
    return {
        "initial": render_cycle_document(fact.initial),
        "steps": [
            {
                "kind": link.kind.value,
                "center_id": link.center_id,
                "image_orbit_id": link.image_orbit_id,
                "source_label": LABEL_NAMES[link.source_label],
                "target_label": LABEL_NAMES[link.target_label],
            }
            for link in fact.steps
        ],
        "d_trace": list(fact.d_trace),
        "parity": fact.parity.value,
        "terminal_label": LABEL_NAMES[fact.terminal.label],
    }


def _cmd_verify(args: argparse.Namespace) -> int:
    mode = args.mode
    if mode in ("lemma3", "table"):
        if args.prime is None:
            print("error: --prime is required for this mode", file=sys.stderr)
            return 2
        if args.seed is None:
            print("error: --seed is required for randomized modes", file=sys.stderr)
            return 2
        if args.prime in (2, 3) or any(
            args.prime % k == 0 for k in range(2, args.prime)
        ) or args.prime < 2:
            print(
                f"error: --prime must be a prime other than 2 and 3, got {args.prime}",
                file=sys.stderr,
            )
            return 2

    if mode == "oracle-phi3":
        report = scan_phi3(args.dmax)
        detail = {"mode": mode, "checked": report.checked, "violations": report.violations,
                  "first_mismatch": report.first_mismatch}
    elif mode == "oracle-phi6":
        report = scan_phi6(args.dmax)
        detail = {"mode": mode, "checked": report.checked, "violations": report.violations,
                  "first_mismatch": report.first_mismatch}
    elif mode == "lemma3":
        report = scan_closed_points(args.prime, args.samples, args.seed)
        detail = {
            "mode": mode,
            "prime": report.prime,
            "checked": report.checked,
            "violations": report.violations,
            "collinear_hits": report.collinear_hits,
            "conic_hits": report.conic_hits,
            "collinear_case_breakdown": dict(report.case_breakdown),
        }
    else:  # table
        report = scan_table(args.prime, args.samples, args.seed)
        detail = {
            "mode": mode,
            "q": report.q,
            "checked": report.checked,
            "violations": report.violations,
            "unclassifiable": report.unclassifiable,
            "witnesses": [
                {
                    "case": w.case_id,
                    "realized": w.realized,
                    "lines": w.line_count,
                    "expected": w.expected_count,
                }
                for w in report.witnesses
            ],
        }

    if args.format == "machine":
        _emit(detail)
    else:
        print(f"mode: {mode}")
        for key, value in detail.items():
            if key != "mode":
                print(f"  {key}: {value}")
        print("result: " + ("ok" if report.ok else "VIOLATIONS FOUND"))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbuntwist",
        description=(
            "Exact cycle calculus for birational maps between Severi-Brauer "
            "surfaces: invariant checks, elementary links, untwisting, and "
            "finite-field oracle scans."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("text", "machine"),
            default="text",
            help="human-readable table or one-line machine JSON",
        )

    p_check = sub.add_parser("check", help="evaluate the Noether relations")
    p_check.add_argument("file", help="cycle document (JSON)")
    add_format(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_push = sub.add_parser("push", help="apply one elementary link")
    p_push.add_argument("file", help="cycle document (JSON)")
    p_push.add_argument("--kind", choices=("phi3", "phi6"), required=True)
    p_push.add_argument(
        "--center",
        help="orbit id to push at (assigned x1, x2, ... in document order); "
        "omit for a fresh multiplicity-0 center",
    )
    add_format(p_push)
    p_push.set_defaults(func=_cmd_push)

    p_untwist = sub.add_parser("untwist", help="factor into elementary links")
    p_untwist.add_argument("file", help="cycle document (JSON)")
    p_untwist.add_argument(
        "--target",
        choices=sorted(LABELS),
        help="declared landing family (defaults to the document's "
        "declared_target, then to the source label)",
    )
    add_format(p_untwist)
    p_untwist.set_defaults(func=_cmd_untwist)

    p_verify = sub.add_parser("verify", help="run a plane-oracle scan")
    p_verify.add_argument(
        "--mode",
        choices=("oracle-phi3", "oracle-phi6", "lemma3", "table"),
        required=True,
    )
    p_verify.add_argument("--prime", type=int, help="field characteristic")
    p_verify.add_argument(
        "--samples", type=int, default=100, help="sample count for randomized modes"
    )
    p_verify.add_argument("--seed", type=int, help="RNG seed (required when sampling)")
    p_verify.add_argument(
        "--dmax", type=int, default=50, help="grid bound for the oracle-phi* modes"
    )
    add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
