"""Command line interface.

Subcommands: annihilator, marks, spectrum, analyze, verify.  Exit
codes: 0 success, 1 verification failure, 2 usage error, 3 resource
bound.  JSON output is deterministic (sorted keys, canonical
orderings); unbounded integers are serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .annihilator import (
    RootSpec,
    annihilating_polynomial,
    closed_form_for_preset,
    root_spec_preset,
    root_sum_set,
)
from .config import default_limits
from .errors import ApringsError, BoundExceeded, ExpressionError
from .groups import (
    A5_LABEL_ALIASES,
    a5_reference_table,
    group_from_json,
    named_group,
    named_group_names,
    table_of_marks,
)
from .rings import bundled_model, construct_model, parse_element, verify_annihilated
from .spectrum import element_predicates, spectrum_report
from .verification import paper_checks

USAGE_ERROR = 2
BOUND_ERROR = 3


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _load_root_spec(text: str) -> tuple[RootSpec, Optional[str], str]:
    """Returns (spec, preset-name-or-None, default sign mode)."""
    if text.startswith("preset:"):
        name = text[len("preset:"):]
        spec, mode = root_spec_preset(name)
        return spec, name, mode
    if text.startswith("@"):
        data = json.loads(Path(text[1:]).read_text())
    else:
        data = json.loads(text)
    return RootSpec.from_json(data), None, "signed"


def cmd_annihilator(args) -> int:
    spec, preset, default_mode = _load_root_spec(args.q)
    mode = args.mode or default_mode
    sums = root_sum_set(spec, args.n, mode)
    poly = annihilating_polynomial(spec, args.n, mode)
    closed_matches = None
    if args.closed_form:
        if preset is None:
            raise ExpressionError("--closed-form needs a preset root spec")
        closed = closed_form_for_preset(preset, args.n)
        if closed is None:
            raise ExpressionError(f"preset {preset!r} has no closed form")
        closed_matches = closed == poly
        if not closed_matches:
            print("closed form disagrees with the enumerated polynomial", file=sys.stderr)
            return 1
    if args.format == "json":
        payload = {
            "spec": spec.to_json(),
            "n": args.n,
            "mode": mode,
            "roots": sums.to_json(),
            "polynomial": poly.to_json(),
            "degree": poly.degree,
        }
        if closed_matches is not None:
            payload["closed_form_matches"] = closed_matches
        _emit_json(payload)
    else:
        roots = ", ".join(str(e) for e in sums.elements)
        print(f"n = {args.n}, mode = {mode}, |T_n| = {len(sums)}")
        print(f"roots: {roots}")
        print(f"p_n(x) = {poly}")
        print(f"coefficients (ascending): {', '.join(str(c) for c in poly.coeffs)}")
        if closed_matches is not None:
            print("closed form matches the enumeration")
    return 0


def cmd_marks(args) -> int:
    if args.group.startswith("named:"):
        G = named_group(args.group[len("named:"):])
    elif args.group.startswith("@"):
        G = group_from_json(json.loads(Path(args.group[1:]).read_text()))
    else:
        G = named_group(args.group)
    table = table_of_marks(G)
    if args.check_paper:
        reference = a5_reference_table()
        expected_labels = [A5_LABEL_ALIASES[l] for l in reference["labels"]]
        matches = (
            [list(row) for row in table.marks] == reference["marks"]
            and table.labels() == expected_labels
        )
        if not matches:
            print("table of marks does not match the bundled A5 reference", file=sys.stderr)
            return 1
        print("table of marks matches the bundled A5 reference")
        return 0
    if args.format == "json":
        _emit_json(table.to_json())
    else:
        width = len(str(table.group_order))
        labels = table.labels()
        print("classes: " + ", ".join(labels))
        for label, row in zip(labels, table.marks):
            cells = " ".join(f"{v:>{width}}" for v in row)
            print(f"{label:>6} | {cells}")
    return 0


def _load_model(text: str):
    if text.startswith("preset:"):
        return bundled_model(text[len("preset:"):])
    if text.startswith("@"):
        return construct_model(json.loads(Path(text[1:]).read_text()))
    try:
        return bundled_model(text)
    except ValueError:
        return construct_model(json.loads(text))


def cmd_spectrum(args) -> int:
    model = _load_model(args.ring)
    report = spectrum_report(model, prime_bound=args.primes_up_to)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        print(f"model: {report.model_name}")
        print(f"local: {report.local}")
        if report.finite_primes is not None:
            for info in report.finite_primes:
                tag = " (fundamental ideal)" if info.is_fundamental else ""
                print(f"prime of index {info.index}, size {info.size}{tag}")
        else:
            print(f"minimal primes ({len(report.minimal)}):")
            for p in report.minimal:
                print(f"  {p.label}")
            if report.fundamental is not None:
                print(f"fundamental ideal: {report.fundamental.label}")
            print("maximal families:")
            for fam in report.max_families:
                print(f"  {fam.base_label} + (p), {fam.note}; listed: {fam.primes}")
    return 0


def cmd_analyze(args) -> int:
    model = _load_model(args.ring)
    element = parse_element(model, args.element)
    report = verify_annihilated(model, element)
    preds = element_predicates(model, element)
    if args.format == "json":
        _emit_json(
            {
                "model": model.name,
                "element": model.element_to_json(element),
                "length": report.length,
                "annihilator_degree": report.degree,
                "annihilated": report.annihilated,
                "predicates": preds.to_json(),
            }
        )
    else:
        print(f"model: {model.name}")
        print(f"element: {model.format_element(element)}")
        print(f"length: {report.length}")
        print(
            f"annihilated by p_{report.length} (degree {report.degree}): "
            f"{report.annihilated}"
        )
        for name, value in preds.to_json().items():
            shown = "unsupported" if value is None else value
            print(f"{name}: {shown}")
    return 0


def cmd_verify(args) -> int:
    results = paper_checks(args.filter)
    if not results:
        print(f"no checks match filter {args.filter!r}", file=sys.stderr)
        return USAGE_ERROR
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aprings",
        description="Annihilating polynomials and structure theory for AP rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("annihilator", help="construct an annihilating polynomial")
    p.add_argument("--q", required=True, help="root spec: preset:NAME, JSON, or @file")
    p.add_argument("--n", type=int, required=True, help="number of summands")
    p.add_argument("--mode", choices=["signed", "unsigned"], default=None)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_annihilator)

    p = sub.add_parser("marks", help="compute a table of marks")
    p.add_argument("--group", required=True, help=f"named:NAME ({', '.join(named_group_names())}) or @file")
    p.add_argument("--check-paper", action="store_true", dest="check_paper",
                   help="compare against the bundled A5 reference table")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_marks)

    p = sub.add_parser("spectrum", help="prime spectrum report")
    p.add_argument("--ring", required=True, help="preset:NAME, JSON, or @file")
    p.add_argument("--primes-up-to", type=int, default=default_limits().max_listed_prime)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("analyze", help="length, annihilation and predicates of an element")
    p.add_argument("--ring", required=True)
    p.add_argument("--element", required=True, help='e.g. "2*g0 - 3*g1 + 1"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run the bundled verification suite")
    p.add_argument("--suite", choices=["paper"], required=True)
    p.add_argument("--filter", default=None, help="only run checks whose name contains this")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return BOUND_ERROR
    except (ExpressionError, ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ApringsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
