"""Command-line front end.

Subcommands: detect, verify, gen set-packing, elevate, pack-solve and
order-solve.  Exit codes: 0 for yes/success, 1 for no, 2 for errors
(including parse failures and exceeded enumeration caps).  ``--json`` wraps
every result in a report envelope with a content digest of the input file.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .detect import detect_gbd_bruteforce, detect_gbd_zero_dim, detect_sgbd
from .gb import is_groebner_basis, is_zero_dimensional_lt
from .ordersolve import TargetSelection, realize_leading_terms
from .poly import (
    CapExceededError,
    ParseError,
    WeightOrder,
    format_monomial,
    format_polynomial,
    format_system,
    parse_monomial,
    parse_system,
)
from .reductions import elevate_to_zero_dim, encode_set_packing, parse_set_packing, solve_set_packing_bruteforce


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _read_input(path: str) -> tuple[str, str]:
    with open(path, "rb") as fh:
        data = fh.read()
    return data.decode("utf-8"), _digest(data)


def _weights_json(order: WeightOrder) -> list[str]:
    return [str(w) for w in order.weights]


def _weights_text(order: WeightOrder) -> str:
    return " ".join(str(w) for w in order.weights)


def _detection_payload(res, system, mode: str) -> dict:
    lts = None
    if res.leading_terms is not None:
        lts = [format_monomial(m, system.var_names) for m in res.leading_terms]
    return {
        "mode": mode,
        "verdict": "yes" if res.found else "no",
        "weights": _weights_json(res.witness) if res.witness else None,
        "leading_terms": lts,
        "zero_dimensional": res.zero_dimensional,
        "subsets_examined": res.subsets_examined,
        "diagnostics": res.diagnostics,
    }


def _detection_lines(payload: dict) -> list[str]:
    lines = [f"verdict: {payload['verdict']}"]
    if payload["weights"] is not None:
        lines.append("weights: " + " ".join(payload["weights"]))
    if payload["leading_terms"] is not None:
        lines.append("leading terms: " + " ".join(payload["leading_terms"]))
    if payload["zero_dimensional"] is not None:
        lines.append("zero-dimensional: " + ("yes" if payload["zero_dimensional"] else "no"))
    lines.append(f"subsets examined: {payload['subsets_examined']}")
    return lines


def _cmd_detect(args):
    text, digest = _read_input(args.input)
    system = parse_system(text)
    if args.mode == "zero-dim":
        res = detect_gbd_zero_dim(system)
    elif args.mode == "sgbd":
        res = detect_sgbd(system, cap=args.cap)
    elif args.mode == "brute":
        res = detect_gbd_bruteforce(system, False, cap=args.cap)
    else:
        res = detect_gbd_bruteforce(system, True, cap=args.cap)
    payload = _detection_payload(res, system, args.mode)
    return payload, _detection_lines(payload), 0 if res.found else 1, digest


def _cmd_verify(args):
    text, digest = _read_input(args.input)
    system = parse_system(text)
    weights = [Fraction(tok) for tok in args.weights.split(",")]
    if len(weights) != system.n:
        raise ValueError(f"expected {system.n} weights, got {len(weights)}")
    order = WeightOrder(tuple(weights))
    gb = is_groebner_basis(system, order)
    zd = is_zero_dimensional_lt(system, order)
    from .poly import leading_term

    lts = [format_monomial(leading_term(order, p).mono, system.var_names) for p in system.polys]
    payload = {
        "weights": _weights_json(order),
        "groebner_basis": gb.is_basis,
        "zero_dimensional": zd.is_zero_dimensional,
        "unit_ideal": zd.unit_ideal,
        "leading_terms": lts,
        "failing_pair": list(gb.failing_pair) if gb.failing_pair else None,
        "failing_remainder": (
            format_polynomial(gb.failing_remainder, system.var_names)
            if gb.failing_remainder is not None
            else None
        ),
    }
    lines = [
        "groebner basis: " + ("yes" if gb.is_basis else "no"),
        "zero-dimensional: " + ("yes" if zd.is_zero_dimensional else "no"),
        "leading terms: " + " ".join(lts),
    ]
    if gb.failing_pair:
        lines.append(f"failing pair: {gb.failing_pair[0]} {gb.failing_pair[1]}")
        lines.append(f"failing remainder: {payload['failing_remainder']}")
    return payload, lines, 0 if gb.is_basis else 1, digest


def _emit_generated(args, payload, generated_text):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(generated_text)
        lines = [f"wrote {args.output}"]
    else:
        lines = [generated_text.rstrip("\n")]
    payload["output_path"] = args.output
    payload["text"] = generated_text
    return lines


def _cmd_gen_set_packing(args):
    text, digest = _read_input(args.input)
    inst = parse_set_packing(text)
    system, emap = encode_set_packing(inst, degree=args.degree)
    generated = format_system(system)
    payload = {
        "universe": emap.universe,
        "sets": emap.num_sets,
        "goal": emap.goal,
        "degree": emap.degree,
        "variables": system.n,
        "polynomials": len(system.polys),
    }
    lines = _emit_generated(args, payload, generated)
    return payload, lines, 0, digest


def _cmd_elevate(args):
    text, digest = _read_input(args.input)
    system = parse_system(text)
    elevated = elevate_to_zero_dim(system, args.degree)
    generated = format_system(elevated)
    payload = {
        "degree": args.degree,
        "added": len(elevated.polys) - len(system.polys),
        "polynomials": len(elevated.polys),
    }
    lines = _emit_generated(args, payload, generated)
    return payload, lines, 0, digest


def _cmd_pack_solve(args):
    text, digest = _read_input(args.input)
    inst = parse_set_packing(text)
    res = solve_set_packing_bruteforce(inst, cap=args.cap)
    payload = {
        "packing": "yes" if res.found else "no",
        "witness": [i + 1 for i in res.witness] if res.witness is not None else None,
    }
    lines = [f"packing: {payload['packing']}"]
    if res.witness is not None:
        lines.append("witness sets: " + " ".join(str(i) for i in payload["witness"]))
    return payload, lines, 0 if res.found else 1, digest


def _cmd_order_solve(args):
    text, digest = _read_input(args.input)
    system = parse_system(text)
    target_texts = [t.strip() for t in args.targets.split(";")]
    if len(target_texts) != len(system.polys):
        raise ValueError(f"expected {len(system.polys)} targets, got {len(target_texts)}")
    targets = []
    for poly, ttext in zip(system.polys, target_texts):
        mono = parse_monomial(ttext, system.var_names)
        support = poly.support()
        if mono not in support:
            raise ValueError(f"target {ttext!r} is not in the polynomial's support")
        targets.append(support.index(mono))
    order = realize_leading_terms(system, TargetSelection(tuple(targets)))
    if order is None:
        payload = {"feasible": False, "weights": None, "leading_terms": None}
        return payload, ["infeasible"], 1, digest
    lts = [
        format_monomial(t, system.var_names)
        for t in (p.terms[k].mono for p, k in zip(system.polys, targets))
    ]
    payload = {"feasible": True, "weights": _weights_json(order), "leading_terms": lts}
    lines = ["weights: " + _weights_text(order)]
    return payload, lines, 0, digest


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--cap", type=int, default=100_000, help="enumeration cap")
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed echoed in reports; reserved for randomized corpus helpers",
    )
    common.add_argument("-o", "--output", metavar="PATH", default=None, help="output file path")

    parser = argparse.ArgumentParser(
        prog="gbdetect",
        description="Groebner-basis detection in exact rational arithmetic",
    )
    parser.add_argument("--version", action="version", version=f"gbdetect {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("detect", parents=[common], help="decide detection questions")
    p.add_argument("input")
    p.add_argument(
        "--mode",
        choices=["zero-dim", "sgbd", "brute", "brute-zero-dim"],
        default="zero-dim",
    )

    p = sub.add_parser("verify", parents=[common], help="check a system under given weights")
    p.add_argument("input")
    p.add_argument("--weights", required=True, help="comma-separated positive rationals")

    p = sub.add_parser("gen", help="instance generators")
    gsub = p.add_subparsers(dest="gen_cmd", required=True)
    g = gsub.add_parser("set-packing", parents=[common], help="encode a set-packing instance")
    g.add_argument("input")
    g.add_argument("--degree", type=int, default=None, help="target degree (default: cap + 1)")

    p = sub.add_parser("elevate", parents=[common], help="append all monomials of degree 2m+1")
    p.add_argument("input")
    p.add_argument("--degree", type=int, required=True, help="homogeneous degree m of the input")

    p = sub.add_parser("pack-solve", parents=[common], help="brute-force set packing")
    p.add_argument("input")

    p = sub.add_parser("order-solve", parents=[common], help="realize chosen leading terms")
    p.add_argument("input")
    p.add_argument("--targets", required=True, help="semicolon-separated target monomials")

    return parser


_HANDLERS = {
    "detect": _cmd_detect,
    "verify": _cmd_verify,
    "gen set-packing": _cmd_gen_set_packing,
    "elevate": _cmd_elevate,
    "pack-solve": _cmd_pack_solve,
    "order-solve": _cmd_order_solve,
}


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(argv)
    command = args.cmd if args.cmd != "gen" else f"gen {args.gen_cmd}"
    started = time.perf_counter()
    try:
        payload, lines, code, digest = _HANDLERS[command](args)
    except (ParseError, CapExceededError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - started
    if args.json:
        report = {
            "version": __version__,
            "command": command,
            "argv": list(argv),
            "input_digest": digest,
            "seed": args.seed,
            "wall_time_s": round(elapsed, 6),
            "result": payload,
        }
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
