"""Command-line front end with human-readable and JSON output."""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import classifier, degeneration, framing, genus_one, prong, quartic
from .errors import StratumError
from .signature import format_signature, parse_signature, validate


def _orders(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise StratumError(f"bad orders list {text!r}: {exc}") from None


def _pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise StratumError(f"bad pair {chunk!r}; expected 'wa,wb'")
        pairs.append((int(parts[0]), int(parts[1])))
    return tuple(pairs)


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _signature_from_args(args, allow_zero_orders=False):
    return validate(
        args.k, args.genus, _orders(args.orders), allow_zero_orders=allow_zero_orders
    )


def _describe(descriptor) -> str:
    d = classifier.descriptor_to_dict(descriptor)
    kind = d.pop("type")
    if not d:
        return kind
    body = ", ".join(f"{key}={value}" for key, value in sorted(d.items()))
    return f"{kind}({body})"


def _report_lines(report) -> list[str]:
    lines = [f"{format_signature(report.signature)}", f"components: {report.count}"]
    for descriptor in report.components:
        lines.append(f"  - {_describe(descriptor)}")
    if report.empty_reason:
        lines.append(f"reason: {report.empty_reason}")
    if report.note:
        lines.append(f"note: {report.note}")
    return lines


def _cmd_classify(args) -> int:
    if args.orders_file:
        reports = []
        with open(args.orders_file, encoding="utf-8") as handle:
            for raw in handle:
                raw = raw.strip()
                if not raw or raw.startswith("#"):
                    continue
                sig = parse_signature(raw, allow_zero_orders=False)
                reports.append(classifier.primitive_nonhyperelliptic_components(sig))
        payload = {"reports": [classifier.report_to_dict(r) for r in reports]}
        lines = []
        for r in reports:
            lines.extend(_report_lines(r))
        _emit(payload, args.json, lines)
        return 0
    sig = _signature_from_args(args)
    report = classifier.primitive_nonhyperelliptic_components(sig)
    _emit(classifier.report_to_dict(report), args.json, _report_lines(report))
    return 0


def _cmd_breakdown(args) -> int:
    sig = _signature_from_args(args)
    rows = classifier.full_component_breakdown(sig)
    payload = {
        "signature": format_signature(sig),
        "hyperelliptic_components": "OutOfScope",
        "rows": [
            {
                "divisor": row.divisor,
                "reduced": format_signature(row.signature),
                "report": classifier.report_to_dict(row.report),
            }
            for row in rows
        ],
    }
    lines = [format_signature(sig)]
    for row in rows:
        lines.append(f"d={row.divisor}: {format_signature(row.signature)}")
        lines.extend("  " + line for line in _report_lines(row.report)[1:])
    _emit(payload, args.json, lines)
    return 0


def _cmd_genus1(args) -> int:
    sig = validate(args.k, 1, _orders(args.orders))
    comps = genus_one.components(sig)
    payload = {
        "signature": format_signature(sig),
        "components": [
            {
                "rotation": c.rotation,
                "torsion_order": c.torsion_order,
                "primitive": c.primitive,
                "hyperelliptic": c.hyperelliptic,
            }
            for c in comps
        ],
    }
    lines = [format_signature(sig)] + [
        f"rotation {c.rotation} (torsion {c.torsion_order}):"
        f" primitive={c.primitive} hyperelliptic={c.hyperelliptic}"
        for c in comps
    ]
    _emit(payload, args.json, lines)
    return 0


def _cmd_merge(args) -> int:
    sig = validate(args.k, args.genus, _orders(args.orders))
    if args.genus == 1 and args.rotation is not None:
        outcome = genus_one.merge(sig, args.rotation, args.i, args.j)
        payload = {
            "signature": format_signature(sig),
            "feasible": outcome.feasible,
            "result": None if outcome.result is None else format_signature(outcome.result),
            "rotations": list(outcome.rotations),
            "reason": outcome.reason,
        }
        lines = [
            f"merge entries {args.i},{args.j} at rotation {args.rotation}: "
            + ("feasible" if outcome.feasible else f"infeasible ({outcome.reason})")
        ]
        if outcome.result is not None:
            lines.append(f"result: {format_signature(outcome.result)}")
        if outcome.rotations:
            lines.append(f"rotations: {','.join(map(str, outcome.rotations))}")
        _emit(payload, args.json, lines)
        return 0
    move = degeneration.merge_move(sig, args.i, args.j)
    same_sign = degeneration.merge_feasible_same_sign(sig, args.i, args.j)
    payload = {
        "signature": format_signature(sig),
        "result": None if move.result is None else format_signature(move.result),
        "feasible": move.feasible,
        "simple_merge": "unknown" if same_sign is None else bool(same_sign),
        "reason": move.reason,
    }
    lines = [
        f"merge entries {args.i},{args.j}: "
        + (format_signature(move.result) if move.result else f"invalid ({move.reason})"),
        f"simple merge (same-sign pair): "
        + ("unknown" if same_sign is None else str(same_sign)),
    ]
    _emit(payload, args.json, lines)
    return 0


def _cmd_split(args) -> int:
    sig = validate(args.k, args.genus, _orders(args.orders))
    if not 0 <= args.index < len(sig.orders):
        raise StratumError(f"index {args.index} out of range for {len(sig.orders)} entries")
    z = sig.orders[args.index]
    if args.a is None:
        pairs = degeneration.enumerate_zero_splits(sig.k, z)
        payload = {
            "signature": format_signature(sig),
            "zero": z,
            "splits": [
                {"a": a, "b": b, "marked_point": a == 0 or b == 0} for a, b in pairs
            ],
        }
        lines = [f"splits of {z} on {format_signature(sig)}:"] + [
            f"  ({a},{b})" + (" [marked point]" if 0 in (a, b) else "")
            for a, b in pairs
        ]
        _emit(payload, args.json, lines)
        return 0
    if args.b is None:
        raise StratumError("--a and --b must be given together")
    if args.genus == 1 and args.rotation is not None:
        ok = genus_one.split_to_sphere(sig, args.rotation, args.index, args.a, args.b)
        payload = {
            "signature": format_signature(sig),
            "rotation": args.rotation,
            "a": args.a,
            "b": args.b,
            "reachable": ok,
        }
        _emit(payload, args.json, [f"split to sphere ({args.a},{args.b}): {ok}"])
        return 0
    result = degeneration.split_result(sig, args.index, args.a, args.b)
    payload = {
        "signature": format_signature(sig),
        "a": args.a,
        "b": args.b,
        "result": format_signature(result),
    }
    _emit(payload, args.json, [f"split result: {format_signature(result)}"])
    return 0


def _cmd_arf(args) -> int:
    pairs = _pairs(args.pairs)
    if args.sbar is None:
        value = framing.arf(pairs)
        label = "arf"
    else:
        value = framing.relative_arf(args.sbar, pairs)
        label = "relative_arf"
    _emit({label: value}, args.json, [f"{label}: {value}"])
    return 0


def _cmd_spin(args) -> int:
    sig = validate(args.k, args.genus, _orders(args.orders))
    values = framing.SymplecticFramingValues.from_signature(sig, _pairs(args.pairs))
    value = framing.spin(values)
    payload = {
        "signature": format_signature(sig),
        "boundary": list(values.boundary),
        "spin": value,
    }
    _emit(payload, args.json, [f"spin: {value}"])
    return 0


def _cmd_prong(args) -> int:
    if args.rotation is None and args.torsion is None and args.b is None:
        raise StratumError("--b is required for local prong classes")
    if args.rotation is not None:
        if args.b is None:
            raise StratumError("--b is required for global prong classes")
        count = prong.global_classes_genus_one_split(
            args.k, args.rotation, args.a, args.b, _orders(args.rest) if args.rest else ()
        )
        payload = {
            "k": args.k,
            "rotation": args.rotation,
            "a": args.a,
            "b": args.b,
            "rest": list(_orders(args.rest)) if args.rest else [],
            "global_classes": count,
        }
        _emit(payload, args.json, [f"global prong classes: {count}"])
        return 0
    if args.torsion is not None:
        image = prong.prong_hom_image(args.k, args.a, args.torsion)
        payload = {
            "k": args.k,
            "a": args.a,
            "torsion": args.torsion,
            "delta": image.delta,
            "index": image.index,
        }
        _emit(payload, args.json, [f"delta: {image.delta}", f"index: {image.index}"])
        return 0
    count = prong.local_classes(args.k, args.a, args.b)
    payload = {"k": args.k, "a": args.a, "b": args.b, "local_classes": count}
    _emit(payload, args.json, [f"local prong classes: {count}"])
    return 0


def _cmd_cylinder(args) -> int:
    orders = _orders(args.orders)
    has = degeneration.genus0_has_cylinder(args.k, orders)
    simple = degeneration.genus0_has_simple_cylinder(args.k, orders)
    payload = {
        "k": args.k,
        "orders": list(sorted(orders, reverse=True)),
        "cylinder": has,
        "simple_cylinder": simple,
    }
    _emit(payload, args.json, [f"cylinder: {has}", f"simple cylinder: {simple}"])
    return 0


def _cmd_quartic_verify(args) -> int:
    report = quartic.verify_sporadic(args.construction, precision=args.precision)
    payload = {
        "construction": report.construction,
        "all_passed": report.all_passed,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "expected": c.expected,
                "actual": c.actual,
            }
            for c in report.checks
        ],
    }
    lines = [f"construction {report.construction}:"] + [
        f"  {'PASS' if c.passed else 'FAIL'} {c.name} (expected {c.expected}, got {c.actual})"
        for c in report.checks
    ]
    _emit(payload, args.json, lines)
    return 0


def _add_signature_arguments(parser, with_genus=True):
    parser.add_argument("--k", type=int, required=True, help="differential order")
    if with_genus:
        parser.add_argument("--genus", type=int, required=True)
    parser.add_argument(
        "--orders", required=True, help="comma-separated singularity orders"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kstrata",
        description="Count components of strata of k-differentials and verify "
        "the sporadic cubic constructions, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="primitive nonhyperelliptic component count")
    p.add_argument("--k", type=int)
    p.add_argument("--genus", type=int)
    p.add_argument("--orders")
    p.add_argument("--orders-file", help="file of signature lines 'k:K g:G orders:(..)'")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("breakdown", help="component breakdown over divisors of k")
    _add_signature_arguments(p)
    p.set_defaults(func=_cmd_breakdown)

    p = sub.add_parser("genus1", help="rotation-number components of a genus-one stratum")
    _add_signature_arguments(p, with_genus=False)
    p.set_defaults(func=_cmd_genus1)

    p = sub.add_parser("merge", help="collide two singularities")
    _add_signature_arguments(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--rotation", type=int, help="genus-one component rotation")
    p.set_defaults(func=_cmd_merge)

    p = sub.add_parser("split", help="split a zero into two singularities")
    _add_signature_arguments(p)
    p.add_argument("--index", type=int, required=True, help="index of the zero")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--rotation", type=int, help="genus-one component rotation")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("arf", help="Arf invariant of framing values")
    p.add_argument("--pairs", required=True, help="semicolon-separated 'wa,wb' pairs")
    p.add_argument("--sbar", type=int, help="arc value for the relative invariant")
    p.set_defaults(func=_cmd_arf)

    p = sub.add_parser("spin", help="spin of an odd-k framing on a signature")
    _add_signature_arguments(p)
    p.add_argument("--pairs", required=True, help="semicolon-separated 'wa,wb' pairs")
    p.set_defaults(func=_cmd_spin)

    p = sub.add_parser("prong", help="prong matching counts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--torsion", type=int, help="torsion order e for the image record")
    p.add_argument("--rotation", type=int, help="rotation for global classes")
    p.add_argument("--rest", help="comma-separated remaining orders")
    p.set_defaults(func=_cmd_prong)

    p = sub.add_parser("cylinder", help="genus-zero cylinder criteria")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--orders", required=True)
    p.set_defaults(func=_cmd_cylinder)

    p = sub.add_parser("quartic-verify", help="verify a sporadic cubic construction")
    p.add_argument(
        "--construction",
        required=True,
        choices=quartic.available_constructions(),
    )
    p.add_argument("--precision", type=int, default=13)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_quartic_verify)

    for name, sp in sub.choices.items():
        if name != "quartic-verify":
            sp.add_argument("--json", action="store_true")
        # let comma-separated negative order lists pass as option values
        sp._negative_number_matcher = re.compile(r"^-\d[\d,.\-]*$")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "classify" and not args.orders_file:
        if args.k is None or args.genus is None or args.orders is None:
            parser.error("classify needs --k, --genus and --orders (or --orders-file)")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        # the domain errors (StratumError, PolynomialError, SeriesError, ...)
        # are all ValueErrors raised on bad input
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
