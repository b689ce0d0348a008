"""Command-line front end: every subcommand emits one JSON run report.

Reports are deterministic apart from ``elapsed_ms`` (reruns with identical
inputs produce identical ``outputs``), so a directory of golden files
diffs cleanly; ``accept --golden DIR`` does exactly that comparison.
Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import accept, charvar, congruence, gf, mgroup, smallgrp, speckit

SCHEMA = "charquot.report.v1"


def _report(command, inputs, outputs, claim, t0, passed):
    return {
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "claim": claim,
        "elapsed_ms": int(1000 * (time.time() - t0)),
        "pass": bool(passed),
    }


def _emit(report):
    json.dump(report, sys.stdout, indent=2, sort_keys=True, default=str)
    sys.stdout.write("\n")
    return 0 if report["pass"] else 1


def _field(args):
    return gf.field(args.p ** args.d)


def _parse_s(k0, expr):
    return k0.parse(expr)


def _resolve_group(spec_str, cap):
    path = Path(spec_str)
    if path.is_file():
        return smallgrp.load_group_file(path, cap=cap)
    bundled = Path(__file__).parent / "groups" / f"{spec_str}.txt"
    if bundled.is_file():
        return smallgrp.load_group_file(bundled, name=spec_str, cap=cap)
    return smallgrp.builtin_group(spec_str)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_specialize(args):
    t0 = time.time()
    k0 = _field(args)
    s = _parse_s(k0, args.s)
    spec = speckit.specialize(k0, s)
    outputs = speckit.spec_report(spec)
    return _emit(_report("specialize", {"p": args.p, "d": args.d, "s": args.s},
                         outputs, "fiber type of the specialized unitary group",
                         t0, True))


def cmd_choose_s(args):
    t0 = time.time()
    k0 = _field(args)
    ch = speckit.choose_s(k0, args.kind)
    spec = speckit.specialize(k0, ch.s)
    outputs = speckit.spec_report(spec)
    outputs["minus_t_order"] = ch.t_order
    outputs["source"] = ch.source
    return _emit(_report("choose-s", {"p": args.p, "d": args.d, "kind": args.kind},
                         outputs, "order recipe for a generating specialization",
                         t0, outputs["target"].lower() == args.kind.lower()))


def cmd_certify(args):
    t0 = time.time()
    k0 = _field(args)
    if args.s is None and args.kind is None:
        raise ValueError("certify needs either --s or --kind")
    if args.s is not None:
        s = _parse_s(k0, args.s)
    else:
        s = speckit.choose_s(k0, args.kind).s
    cert = mgroup.certify_characteristic(k0, s, cap=args.cap)
    passed = cert.verdict == mgroup.VERDICT_CHARACTERISTIC
    return _emit(_report("certify",
                         {"p": args.p, "d": args.d, "s": args.s, "kind": args.kind},
                         cert.to_json(),
                         "specialization is a characteristic quotient of F2",
                         t0, passed))


def cmd_order(args):
    t0 = time.time()
    k0 = _field(args)
    s = _parse_s(k0, args.s)
    spec = speckit.specialize(k0, s)
    order = mgroup.closure_order(spec.ext, [spec.X, spec.Y], cap=args.cap)
    outputs = {
        "closure_order": order,
        "target": spec.target,
        "target_order": mgroup.target_order(spec.target, k0.q)
        if spec.target in ("SL3", "SU3") else None,
    }
    return _emit(_report("order", {"p": args.p, "d": args.d, "s": args.s}, outputs,
                         "exact order of the group generated by the images of x, y",
                         t0, True))


def cmd_orbits(args):
    t0 = time.time()
    g = _resolve_group(args.group, args.cap)
    modinn = g.modinn_classes()
    modaut = g.modaut_classes()
    analysis = g.aut_f2_analysis()
    outputs = {
        "order": g.n,
        "pair_count": modinn["pair_count"],
        "class_count": (len(modinn["reps"]) if args.mode == "inn"
                        else len(modaut["reps"])),
        "modinn_class_count": len(modinn["reps"]),
        "modaut_class_count": len(modaut["reps"]),
        "orbit_count": analysis["orbit_count"],
        "fixed_classes": [fc.describe() for fc in analysis["fixed_classes"]],
    }
    return _emit(_report("orbits", {"group": args.group, "mode": args.mode}, outputs,
                         "Nielsen-move orbit structure of surjection classes",
                         t0, True))


def cmd_charvar_scan(args):
    t0 = time.time()
    outputs = charvar.classify_fixed(args.q)
    expected = [list(t) for t in charvar.expected_fixed_orbits(args.q)]
    passed = outputs["fixed_orbits"] == expected
    outputs["details"] = [
        {k: (list(v) if isinstance(v, tuple) else v) for k, v in d.items()}
        for d in outputs["details"]]
    return _emit(_report("charvar-scan", {"q": args.q}, outputs,
                         "only the orbits of (0,0,0) and (2,2,2) are fixed",
                         t0, passed))


def cmd_congruence(args):
    t0 = time.time()
    g = _resolve_group(args.group, args.cap)
    if args.base:
        g1, g2 = (s.strip() for s in args.base.split(";"))
        pair = (g.index[smallgrp.perm_from_cycles(g.degree, smallgrp.parse_cycles(g1))],
                g.index[smallgrp.perm_from_cycles(g.degree, smallgrp.parse_cycles(g2))])
        assert g.generates(*pair), "base pair does not generate the group"
        ca = congruence.build_class_action(g, pair)
        outputs = congruence.congruence_degree(ca)
        outputs["orbit_size"] = outputs.pop("index")
    else:
        outputs = congruence.congruence_report(g)
    return _emit(_report("congruence", {"group": args.group, "base": args.base},
                         outputs, "congruence degree of the stabilizer in SL2(Z)",
                         t0, True))


def cmd_symbolic_check(args):
    t0 = time.time()
    outputs = {}
    passed = True
    for num, name, fn in accept.CRITERIA[:2]:
        try:
            outputs[name] = fn()
        except AssertionError as exc:
            outputs[name] = {"error": str(exc)}
            passed = False
    return _emit(_report("symbolic-check", {}, outputs,
                         "exact identities of the symbolic representation",
                         t0, passed))


def cmd_accept(args):
    t0 = time.time()
    ok, records = accept.run_all(report=lambda line: print(line, file=sys.stderr))
    if args.golden:
        ok = _compare_golden(records, Path(args.golden)) and ok
    if args.write_golden:
        _write_golden(records, Path(args.write_golden))
    return _emit(_report("accept", {"golden": args.golden}, {"criteria": records},
                         "full acceptance battery", t0, ok))


def _canonical(record):
    slim = {k: record[k] for k in ("criterion", "name", "pass", "outputs")}
    return json.dumps(slim, indent=2, sort_keys=True, default=str) + "\n"


def _write_golden(records, directory):
    directory.mkdir(parents=True, exist_ok=True)
    for rec in records:
        (directory / f"criterion_{rec['criterion']:02d}.json").write_text(_canonical(rec))


def _compare_golden(records, directory):
    ok = True
    for rec in records:
        path = directory / f"criterion_{rec['criterion']:02d}.json"
        if not path.is_file():
            print(f"[GOLDEN] missing {path}", file=sys.stderr)
            ok = False
            continue
        if path.read_text() != _canonical(rec):
            print(f"[GOLDEN] mismatch {path}", file=sys.stderr)
            ok = False
    return ok


# ---------------------------------------------------------------------------

def build_parser():
    top = argparse.ArgumentParser(
        prog="charquot",
        description="exact computations with specializations of the Burau "
                    "representation of B4: characteristic quotients of F2, "
                    "Nielsen orbits, character-variety scans, congruence degrees")
    top.add_argument("--threads", type=int, default=1,
                     help="accepted for interface compatibility; all computations "
                          "run deterministically in-process")
    sub = top.add_subparsers(dest="command", required=True)

    def fieldargs(p):
        p.add_argument("--p", type=int, required=True, help="characteristic")
        p.add_argument("--d", type=int, default=1, help="field degree")

    p = sub.add_parser("specialize", help="evaluate the representation at s")
    fieldargs(p)
    p.add_argument("--s", required=True, help="field element: integer or Z^k")
    p.set_defaults(fn=cmd_specialize)

    p = sub.add_parser("choose-s", help="pick s by the order recipes")
    fieldargs(p)
    p.add_argument("--kind", required=True, choices=["sl3", "su3", "SL3", "SU3"])
    p.set_defaults(fn=cmd_choose_s)

    p = sub.add_parser("certify", help="full characteristic-quotient certificate")
    fieldargs(p)
    p.add_argument("--s", help="field element: integer or Z^k")
    p.add_argument("--kind", choices=["sl3", "su3", "SL3", "SU3"])
    p.add_argument("--cap", type=int, default=None,
                   help="closure cap (default 2^25 or BURAU_CLOSURE_CAP)")
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("order", help="exact closure order at s")
    fieldargs(p)
    p.add_argument("--s", required=True)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("orbits", help="Nielsen-move orbit analysis of a finite group")
    p.add_argument("--group", required=True,
                   help="group file (degree line + cycle-notation generators) "
                        "or a bundled name such as a5, psl2_7, psl3_3")
    p.add_argument("--mode", choices=["aut", "inn"], default="aut")
    p.add_argument("--cap", type=int, default=smallgrp.DEFAULT_GROUP_CAP)
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("charvar-scan", help="fixed orbits on the trace cube")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_charvar_scan)

    p = sub.add_parser("congruence", help="congruence degrees of class stabilizers")
    p.add_argument("--group", required=True)
    p.add_argument("--base", help='base pair "(cycles);(cycles)" (default: all orbits)')
    p.add_argument("--cap", type=int, default=smallgrp.DEFAULT_GROUP_CAP)
    p.set_defaults(fn=cmd_congruence)

    p = sub.add_parser("symbolic-check", help="run the exact identity suite")
    p.set_defaults(fn=cmd_symbolic_check)

    p = sub.add_parser("accept", help="run the full acceptance battery")
    p.add_argument("--golden", help="directory of golden reports to compare against")
    p.add_argument("--write-golden", help="write golden reports to this directory")
    p.set_defaults(fn=cmd_accept)

    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.threads != 1:
        os.environ.setdefault("OMP_NUM_THREADS", str(args.threads))
    try:
        return args.fn(args)
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        json.dump({"schema": SCHEMA, "error": f"{type(exc).__name__}: {exc}",
                   "pass": False}, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
