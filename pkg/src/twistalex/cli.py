"""The ``twist`` command line: monodromy, seifert, resultant, homcheck,
report and selftest subcommands over the built-in fixtures or input files."""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys

from . import formats, laurent
from .cover import branched_cover_homology_from_monodromy, twisted_invariants
from .errors import SizeLimitError, TwistError
from .exactla import DEFAULT_MAX_MINORS
from .fixtures import FIXTURE_NAMES, HomCheckFixture, MonodromyFixture, load_fixture
from .grouphom import generated_subgroup_order, verify_homomorphism
from .laurent import resultant_with_cyclotomic, to_text
from .obstruction import evaluate_fibred_obstruction
from .seifert import (SeifertMatrix, alexander_polynomial, branched_homology,
                      character_jump, random_seifert_matrix,
                      resultant_order_check)

EX_USAGE = 64
EX_TOOBIG = 65

_INLINE_ALPHA = re.compile(r"Z/\d+:")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def parse_inputs(kind: str, *, path: str | None = None, fixture: str | None = None):
    """Resolve an input either from a built-in fixture or from a file.

    ``kind`` is one of "monodromy", "seifert", "presentation", "hom",
    "lambda-matrix"; the returned payload is typed accordingly.
    """
    if (path is None) == (fixture is None):
        raise ValueError("exactly one of path or fixture must be given")
    if fixture is not None:
        payload = load_fixture(fixture)
        expected = {
            "monodromy": MonodromyFixture,
            "seifert": SeifertMatrix,
            "homcheck": HomCheckFixture,
        }.get(kind)
        if expected is None or not isinstance(payload, expected):
            raise TwistError(f"fixture {fixture!r} is not a {kind} input")
        return payload
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if kind == "monodromy":
        endo, names = formats.parse_monodromy(text)
        return MonodromyFixture(endo=endo, names=names)
    if kind == "seifert":
        return formats.parse_seifert(text)
    if kind == "lambda-matrix":
        return formats.parse_lambda_matrix(text)
    if kind == "presentation":
        return formats.parse_presentation(text)
    if kind == "hom":
        return formats.parse_hom(text)
    raise ValueError(f"unknown input kind {kind!r}")


def _max_minors() -> int:
    value = os.environ.get("TWIST_MAX_MINORS")
    return int(value) if value else DEFAULT_MAX_MINORS


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _report_lines(report) -> list[str]:
    lines = [
        f"torsion = {report.torsion}",
        f"principal = {report.principal}",
        f"monic = {report.monic}",
        f"delta = {to_text(report.delta)}",
        f"verdict = {report.verdict}",
    ]
    lines.extend(f"  {r}" for r in report.reasons)
    return lines


def _report_payload(report) -> dict:
    return {
        "torsion": report.torsion,
        "principal": report.principal,
        "monic": report.monic,
        "delta": to_text(report.delta),
        "verdict": report.verdict,
        "reasons": list(report.reasons),
    }


def _cmd_monodromy(args) -> int:
    fx = parse_inputs("monodromy", path=args.file, fixture=args.fixture)
    if _INLINE_ALPHA.match(args.alpha):
        alpha = formats.parse_inline_alpha(args.alpha, fx.names)
    else:
        with open(args.alpha, encoding="utf-8") as fh:
            alpha, _ = formats.parse_hom(fh.read(), fx.names)
    inv = twisted_invariants(fx.endo, args.d, alpha, tree=args.tree)
    report = evaluate_fibred_obstruction(inv.presentation, max_minors=_max_minors())
    h_rows = inv.h_matrix.to_rows()
    lines = [
        f"group order = {alpha.target.order}",
        f"H1 rank = {inv.h_matrix.rows}",
        f"H = {h_rows}",
        f"delta = {to_text(inv.delta)}",
        f"torsion = {report.torsion}",
        f"principal = {report.principal}",
        f"monic = {report.monic}",
        f"verdict = {report.verdict}",
    ]
    payload = {
        "group_order": alpha.target.order,
        "h1_rank": inv.h_matrix.rows,
        "h": h_rows,
        "delta": to_text(inv.delta),
        "torsion": report.torsion,
        "principal": report.principal,
        "monic": report.monic,
        "verdict": report.verdict,
    }
    _emit(args, lines, payload)
    return 0


def _bool_text(b: bool) -> str:
    return "true" if b else "false"


def _cmd_seifert(args) -> int:
    s = parse_inputs("seifert", path=args.file, fixture=args.fixture)
    if args.d is None and args.sweep is None:
        raise TwistError("give --d and/or --sweep")
    alex = alexander_polynomial(s)
    lines = [f"alexander = {to_text(alex, var='t')}"]
    payload: dict = {"alexander": to_text(alex, var="t")}
    if args.d is not None:
        hom = branched_homology(s, args.d)
        check = resultant_order_check(s, args.d)
        lines.append(
            f"H1 = {hom.group_text()}; resultant = {check.resultant}; "
            f"agree = {_bool_text(check.agree)}")
        payload.update({
            "d": args.d,
            "h1": hom.group_text(),
            "h1_order": check.snf_order,
            "resultant": check.resultant,
            "agree": check.agree,
        })
        if args.r is not None:
            jump = character_jump(s, args.d, args.r)
            if jump is None:
                lines.append(f"no surjection onto Z/{args.r}")
                payload["character_jump"] = None
            else:
                lines.append(
                    f"chi = {[list(row) for row in jump.character]}; "
                    f"jump = {jump.jump}; order = {jump.order}")
                payload["character_jump"] = {
                    "character": [list(row) for row in jump.character],
                    "jump": list(jump.jump),
                    "order": jump.order,
                }
    if args.sweep is not None:
        sweep = {}
        for d in range(2, args.sweep + 1):
            rd = resultant_with_cyclotomic(alex, d)
            sweep[d] = rd
            lines.append(f"R_{d} = {rd}")
        payload["sweep"] = {str(d): v for d, v in sweep.items()}
    _emit(args, lines, payload)
    return 0


def _cmd_resultant(args) -> int:
    if args.poly is not None:
        p = laurent.parse_laurent(args.poly)
    else:
        s = parse_inputs("seifert", path=args.file, fixture=args.fixture)
        p = alexander_polynomial(s)
    lines = [f"polynomial = {to_text(p, var='t')}"]
    payload: dict = {"polynomial": to_text(p, var="t")}
    if args.d is not None:
        rd = resultant_with_cyclotomic(p, args.d)
        lines.append(f"R_{args.d} = {rd}")
        payload["resultant"] = {str(args.d): rd}
    else:
        dmax = args.sweep if args.sweep is not None else 30
        sweep = {}
        for d in range(2, dmax + 1):
            rd = resultant_with_cyclotomic(p, d)
            sweep[str(d)] = rd
            lines.append(f"R_{d} = {rd}")
        payload["resultant"] = sweep
    _emit(args, lines, payload)
    return 0


def _cmd_homcheck(args) -> int:
    if args.fixture is not None:
        fx = parse_inputs("homcheck", fixture=args.fixture)
        pres, hom = fx.presentation, fx.hom
    else:
        if not args.presentation or not args.hom:
            raise TwistError("give --fixture, or both --presentation and --hom")
        pres, names = parse_inputs("presentation", path=args.presentation)
        with open(args.hom, encoding="utf-8") as fh:
            hom, _ = formats.parse_hom(fh.read(), names)
    failures = verify_homomorphism(hom, pres)
    order = generated_subgroup_order(hom)
    surjective = order == hom.target.order
    total = len(pres.relators)
    ok = total - len(failures)
    status = f"relations: {ok}/{total} ok"
    if failures:
        status += " (failed: " + ", ".join(str(k + 1) for k in failures) + ")"
    status += f"; image order = {order} ({'surjective' if surjective else 'not surjective'})"
    payload = {
        "relators_total": total,
        "relators_ok": ok,
        "failed_relators": [k + 1 for k in failures],
        "image_order": order,
        "surjective": surjective,
    }
    _emit(args, [status], payload)
    return 0


def _cmd_report(args) -> int:
    p = parse_inputs("lambda-matrix", path=args.presentation)
    report = evaluate_fibred_obstruction(p, max_minors=_max_minors())
    _emit(args, _report_lines(report), _report_payload(report))
    return report.exit_code


def _cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    checks: list[tuple[str, bool, str]] = []

    fx = load_fixture("trefoil-monodromy")
    alpha = formats.parse_inline_alpha("Z/3:x=1,y=1", fx.names)
    inv = twisted_invariants(fx.endo, 2, alpha)
    delta_text = to_text(inv.delta)
    checks.append(("trefoil-monodromy delta", delta_text == "s^4 - s^3 - s + 1",
                   f"delta = {delta_text}"))
    checks.append(("trefoil-monodromy det(H)", inv.h_matrix.det() == 1,
                   f"det = {inv.h_matrix.det()}"))
    mono_h1 = branched_cover_homology_from_monodromy(fx.endo, 2)
    checks.append(("trefoil branched H1 (monodromy)", mono_h1.group_text() == "Z/3",
                   f"H1 = {mono_h1.group_text()}"))

    s = load_fixture("trefoil-seifert")
    seifert_h1 = branched_homology(s, 2)
    checks.append(("trefoil branched H1 (seifert)", seifert_h1.group_text() == "Z/3",
                   f"H1 = {seifert_h1.group_text()}"))

    f8 = load_fixture("figure8-seifert")
    check = resultant_order_check(f8, 2)
    checks.append(("figure8 d=2 order", (check.snf_order, check.resultant) == (5, 5),
                   f"order = {check.snf_order}, resultant = {check.resultant}"))

    s5 = load_fixture("paper-s5")
    failures = verify_homomorphism(s5.hom, s5.presentation)
    order = generated_subgroup_order(s5.hom)
    checks.append(("paper-s5 relations", not failures, f"failures = {list(failures)}"))
    checks.append(("paper-s5 image order", order == 60, f"order = {order}"))

    for i in range(3):
        rs = random_seifert_matrix(rng.choice((2, 4)), rng)
        rc = resultant_order_check(rs, rng.randint(2, 5))
        checks.append((f"random seifert agreement #{i + 1}", rc.agree,
                       f"order = {rc.snf_order}, resultant = {rc.resultant}"))

    lines = []
    ok = 0
    for name, passed, detail in checks:
        lines.append(f"{'PASS' if passed else 'FAIL'}  {name}  ({detail})")
        ok += passed
    lines.append(f"selftest: {ok}/{len(checks)} checks ok")
    payload = {
        "checks": [{"name": n, "passed": p, "detail": d} for n, p, d in checks],
        "ok": ok,
        "total": len(checks),
    }
    _emit(args, lines, payload)
    return 0 if ok == len(checks) else 1


def _add_source_args(p, with_file=True):
    p.add_argument("--fixture", choices=FIXTURE_NAMES, help="built-in fixture name")
    if with_file:
        p.add_argument("--file", help="input file path")


def build_parser() -> _Parser:
    parser = _Parser(prog="twist",
                     description="Twisted Alexander invariants and the fibredness obstruction")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("monodromy", help="twisted invariants from a fibred monodromy")
    _add_source_args(p)
    p.add_argument("--d", type=int, required=True, help="covering degree")
    p.add_argument("--alpha", required=True,
                   help="surjection: inline Z/r:x=a,y=b or a homomorphism file")
    p.add_argument("--tree", choices=("bfs", "dfs"), default="bfs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_monodromy)

    p = sub.add_parser("seifert", help="branched-cover data from a Seifert matrix")
    _add_source_args(p)
    p.add_argument("--d", type=int, help="covering degree (>= 2)")
    p.add_argument("--r", type=int, help="cyclic character target order")
    p.add_argument("--sweep", type=int, help="print R_d for d = 2..SWEEP")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_seifert)

    p = sub.add_parser("resultant", help="resultants against t^d - 1")
    _add_source_args(p)
    p.add_argument("--poly", help="polynomial text, e.g. 't^2-3t+1'")
    p.add_argument("--d", type=int, help="single degree")
    p.add_argument("--sweep", type=int, nargs="?", const=30,
                   help="sweep d = 2..SWEEP (default 30)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_resultant)

    p = sub.add_parser("homcheck", help="verify a homomorphism kills a presentation")
    _add_source_args(p, with_file=False)
    p.add_argument("--presentation", help="presentation file")
    p.add_argument("--hom", help="homomorphism file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_homcheck)

    p = sub.add_parser("report", help="fibredness obstruction verdict for a presentation matrix")
    p.add_argument("--presentation", required=True, help="Laurent matrix file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("selftest", help="reproduce the built-in fixture numbers")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EX_USAGE
    try:
        return args.func(args)
    except SizeLimitError as e:
        print(f"twist: size limit: {e}", file=sys.stderr)
        return EX_TOOBIG
    except (TwistError, ValueError, OSError) as e:
        print(f"twist: error: {e}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
