"""``qal`` command-line front end.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 no certificate found
for this diagram, 4 search budget exceeded, 5 crossing cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import parse_pd, serialize, writhe
from .errors import CrossingLimitError, InvariantViolation, PDParseError
from .families import degree_bound_audit, enumerate_classes, smoothing_degree_bounds, twist_family_audit
from .fixtures import fixture, fixtures, load_corpus, standard_corpus
from .invariants import determinant, determinant_from_jones, jones, skein_check
from .laurent import parse_poly, render
from .obstructions import audit
from .qa import (BudgetExceeded, Certified, SearchBudget, certificate_to_json, certify,
                 verify_certificate)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NOT_CERTIFIED, EXIT_BUDGET, EXIT_CAP = range(6)


class InputError(Exception):
    pass


def _add_input(p: argparse.ArgumentParser, corpus: bool = False):
    g = p.add_mutually_exclusive_group(required=not corpus)
    g.add_argument("--pd", help="inline PD text, e.g. 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'")
    g.add_argument("--fixture", help="name of a shipped fixture (see 'qal fixtures')")
    g.add_argument("--file", help="file holding one PD text")
    if corpus:
        g.add_argument("--corpus", help="corpus file of 'name: <PD>' lines")


def _inputs(args) -> list[tuple[str, object]]:
    try:
        if getattr(args, "corpus", None):
            return load_corpus(args.corpus)
        if args.pd is not None:
            return [("pd", parse_pd(args.pd))]
        if args.fixture is not None:
            return [(args.fixture, fixture(args.fixture).diagram)]
        if args.file is not None:
            with open(args.file) as fh:
                return [(args.file, parse_pd(fh.read()))]
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    except OSError as exc:
        raise InputError(str(exc)) from None
    return [(name, fx.diagram) for name, fx in fixtures().items()]


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.max_nodes, args.max_depth)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(obj, as_json: bool, text: str):
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_jones(args) -> int:
    (name, D), = _inputs(args)
    cache: dict = {}
    V = jones(D, cache=cache)
    det = determinant_from_jones(V)
    record = {"name": name, "pd": serialize(D), "jones": render(V), "determinant": det,
              "components": D.n_components, "writhe": writhe(D)}
    _emit(record, args.json, f"{render(V)}\ndet {det}")
    return EXIT_OK


def cmd_det(args) -> int:
    (name, D), = _inputs(args)
    det = determinant(D)
    _emit({"name": name, "pd": serialize(D), "determinant": det}, args.json, str(det))
    return EXIT_OK


def cmd_certify(args) -> int:
    (name, D), = _inputs(args)
    outcome = certify(D, _budget(args))
    record = {"name": name, "pd": serialize(D), "outcome": type(outcome).__name__,
              "nodes": outcome.nodes}
    if isinstance(outcome, Certified):
        record["certificate"] = certificate_to_json(outcome.certificate)
        record["verified"] = verify_certificate(outcome.certificate).valid
        code = EXIT_OK
    elif isinstance(outcome, BudgetExceeded):
        record["reason"] = outcome.reason
        code = EXIT_BUDGET
    else:
        record["note"] = ("no certificate from this diagram; "
                          "this does not show the link is not quasi-alternating")
        code = EXIT_NOT_CERTIFIED
    print(json.dumps(record, indent=2))
    return code


def _check_one(name, D, jones_override=None) -> dict:
    cache: dict = {}
    V = jones_override if jones_override is not None else jones(D, cache=cache)
    det = determinant(D, cache)
    record = {"name": name, "pd": serialize(D), "jones": render(V), "determinant": det,
              "obstructions": audit(V, det).to_json()}
    skein = []
    degree = []
    if jones_override is None:
        for i in range(D.n_crossings):
            rep = skein_check(D, i, cache)
            skein.append({"crossing": i, "sign": rep.sign, "e": rep.e, "holds": rep.holds})
            m, M = smoothing_degree_bounds(D, i, cache)
            degree.append(degree_bound_audit(D, i, m, M, cache).to_json())
    record["skein"] = skein
    record["degree_bound"] = degree
    # alternation and the coefficient bound only bind quasi-alternating links
    record["passed"] = (record["obstructions"]["det_consistent"]
                        and all(s["holds"] for s in skein)
                        and all(d["passed"] for d in degree))
    return record


def cmd_check(args) -> int:
    override = None
    if args.jones is not None:
        try:
            override = parse_poly(args.jones)
        except ValueError as exc:
            raise InputError(f"bad --jones polynomial: {exc}") from None
    records = []
    for name, D in _inputs(args):
        try:
            records.append(_check_one(name, D, override))
        except (ValueError, InvariantViolation) as exc:
            raise InputError(f"{name}: {exc}") from None
    failures = sum(1 for r in records if not r["passed"])
    out = {"entries": records, "failures": failures}
    text = "\n".join(f"{r['name']}: {'ok' if r['passed'] else 'FAILED'}" for r in records)
    _emit(out, args.json, text + f"\n{failures} failure(s)")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_twist(args) -> int:
    (name, D), = _inputs(args)
    if args.n < 1:
        raise InputError("-n must be at least 1")
    try:
        rep = twist_family_audit(D, args.crossing, args.n)
    except IndexError as exc:
        raise InputError(str(exc)) from None
    record = {"name": name, "pd": serialize(D), **rep.to_json()}
    print(json.dumps(record, indent=2))
    return EXIT_OK if rep.passed in (True, None) else EXIT_FAIL


def cmd_enumerate(args) -> int:
    try:
        corpus = load_corpus(args.corpus) if args.corpus else standard_corpus()
    except OSError as exc:
        raise InputError(str(exc)) from None
    result = enumerate_classes(corpus, _budget(args), parallel=args.parallel)
    data = result.to_json()
    if args.det is not None:
        data["classes"] = [c for c in data["classes"] if c["determinant"] == args.det]
    print(json.dumps(data, indent=2))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    rows = []
    for name, fx in fixtures().items():
        rows.append({"name": name, "pd": fx.pd,
                     "expected_jones": render(fx.expected_jones) if fx.expected_jones else None,
                     "expected_det": fx.expected_det, "note": fx.note})
    text = "\n".join(f"{r['name']:<11} det={r['expected_det']:<2} {r['pd']}" for r in rows)
    _emit(rows, args.json, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jones", help="Jones polynomial and determinant")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("det", help="determinant")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_det)

    for name, func, help_text in (("certify", cmd_certify, "search for a certificate"),
                                  ("enumerate", cmd_enumerate, "group a corpus by determinant")):
        p = sub.add_parser(name, help=help_text)
        if name == "certify":
            _add_input(p)
        else:
            p.add_argument("--corpus", help="corpus file (default: shipped standard corpus)")
            p.add_argument("--det", type=int, help="only report this determinant")
            p.add_argument("--parallel", action="store_true",
                           help="certify corpus entries in parallel processes")
        p.add_argument("--max-nodes", type=int, default=100_000)
        p.add_argument("--max-depth", type=int, default=64)
        p.set_defaults(func=func)

    p = sub.add_parser("check", help="obstruction and skein-identity report")
    _add_input(p, corpus=True)
    p.add_argument("--jones", help="check this polynomial instead of the computed one")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("twist", help="twist-family audit at one crossing")
    _add_input(p)
    p.add_argument("--crossing", type=int, default=0)
    p.add_argument("-n", type=int, default=5)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("fixtures", help="list shipped fixtures")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PDParseError, InputError) as exc:
        print(f"qal: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CrossingLimitError as exc:
        print(f"qal: error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
