"""Command-line front end.  JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Sequence

from . import freegroup as fg
from . import lie2, nq, racg, verify
from .complex import (CUBICAL_MAX_VERTICES, SimplicialComplex, complex_from_json,
                      gscox_generators, rmk_homology)


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    cls: int | None = None
    dmax: int | None = None
    seed: int = 0
    fmt: str = "json"

    def __post_init__(self):
        if self.cls is not None and not 1 <= self.cls <= nq.class_cap():
            raise InputError(f"--class must lie in 1..{nq.class_cap()}")
        if self.dmax is not None and not 1 <= self.dmax <= lie2.MAX_DEGREE:
            raise InputError(f"--dmax must lie in 1..{lie2.MAX_DEGREE}")


def load_complex(path: str) -> SimplicialComplex:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    try:
        return complex_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


_WORD = re.compile(r"^\s*\(?\s*(\d+(?:\s*,\s*\d+)*)\s*\)?\s*$")


def parse_word(text: str) -> tuple[int, ...]:
    """``"(1,2,1,1)"`` -> ``(1, 2, 1, 1)``, the left-nested commutator indices."""
    match = _WORD.match(text)
    if not match:
        raise InputError(f"cannot parse commutator {text!r}; expected e.g. (1,2,1,1)")
    return tuple(int(x) for x in match.group(1).split(","))


def _emit(payload, fmt: str) -> None:
    if fmt == "table":
        _print_table(payload)
    else:
        json.dump(payload, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")


def _print_table(payload) -> None:
    if isinstance(payload, dict):
        for key in sorted(payload):
            print(f"{key}\t{json.dumps(payload[key], sort_keys=True)}")
    elif isinstance(payload, list):
        for row in payload:
            print(json.dumps(row, sort_keys=True))
    else:
        print(payload)


def _cmd_dims(cfg: RunConfig) -> tuple[dict, bool]:
    K = load_complex(cfg.input)
    pc = nq.racg_quotient(K, cfg.cls or 4)
    inv = pc.layer_invariants
    return {"dims": pc.dims, "invariants": [x.to_list() for x in inv]}, True


def _cmd_homology(cfg: RunConfig) -> tuple[dict, bool]:
    K = load_complex(cfg.input)
    if K.m > CUBICAL_MAX_VERTICES:
        raise InputError(f"m = {K.m} exceeds the cap {CUBICAL_MAX_VERTICES}")
    groups = {str(k): rmk_homology(K, k).to_list() for k in range(0, K.m + 1)}
    return {"homology": groups}, True


def _cmd_gens(cfg: RunConfig) -> tuple[dict, bool]:
    K = load_complex(cfg.input)
    pats = [list(p.letters) for p in gscox_generators(K)]
    return {"count": len(pats), "generators": pats}, True


def _cmd_identities(cfg: RunConfig, trials: int) -> tuple[dict, bool]:
    rep = fg.run_identity_suite(trials, cfg.seed)
    failures = [repr(f) for f in rep["failures"]]
    return {"trials": rep["trials"], "failures": failures}, not failures


def _cmd_racg_identities(cfg: RunConfig) -> tuple[dict, bool]:
    rep = racg.racg_identity_report(load_complex(cfg.input))
    return rep, rep["ok"]


def _cmd_lie_dims(cfg: RunConfig, squares: bool) -> tuple[dict, bool]:
    K = load_complex(cfg.input)
    extra = lie2.square_relations(K.m) if squares else []
    d = cfg.dmax or 4
    dims = lie2.quotient_dims(K.m, sorted(K.edges), extra, d)
    return {"dims": dims, "square_relations": squares}, True


def _cmd_lie_compare(cfg: RunConfig) -> tuple[dict, bool]:
    K = load_complex(cfg.input)
    rows = lie2.compare_with_group(K, cfg.dmax or 4)
    return {"compare": rows}, all(r["kernel"] >= 0 for r in rows)


def _cmd_express(cfg: RunConfig, word: str) -> tuple[dict, bool]:
    K = load_complex(cfg.input)
    letters = parse_word(word)
    if any(not 1 <= x <= K.m for x in letters):
        raise InputError(f"generator index out of range 1..{K.m}")
    k = len(letters)
    c = cfg.cls or k
    if k > c:
        raise InputError(f"a commutator of length {k} needs --class at least {k}")
    pc = nq.racg_quotient(K, c)
    coords = nq.express(pc, nq.nested_word(letters), k)
    if isinstance(coords, str):
        return {"word": list(letters), "degree": k, "coordinates": coords}, True
    return {"word": list(letters), "degree": k, "coordinates": list(coords)}, True


def _cmd_verify(cfg: RunConfig, case: str | None, as_json: bool) -> tuple[object, bool]:
    try:
        reports = verify.run_all(case, seed=cfg.seed or verify.DEFAULT_SEED)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    ok = all(r.passed for r in reports)
    if as_json:
        return [r.to_json() for r in reports], ok
    for r in reports:
        print(f"{r.status.upper():4}  {r.claim:12}  {r.statement}", file=sys.stderr)
    return {"passed": sum(r.passed for r in reports), "total": len(reports)}, ok


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="racg-lcs", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "table"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="complex as JSON: {\"m\":..,\"faces\":..} or {\"m\":..,\"edges\":..,\"flag\":true}")
        return sp

    sp = with_input("dims", "dims and invariants of L^1..L^c")
    sp.add_argument("--class", dest="cls", type=int, default=4)
    sp = with_input("homology", "integral homology of the real moment-angle complex")
    with_input("gens", "nested-commutator generators read off the complex")
    sp = sub.add_parser("identities", help="free-group identity fuzz suites")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    with_input("racg-identities", "square and degree-4 identities for every generator pair")
    sp = with_input("lie-dims", "dimensions of the graph Lie algebra over GF(2)")
    sp.add_argument("--dmax", type=int, default=4)
    sp.add_argument("--with-square-relations", action="store_true")
    sp = with_input("lie-compare", "graph Lie algebra with square relations vs L(RC_K)")
    sp.add_argument("--dmax", type=int, default=4)
    sp = with_input("express", "coordinates of a nested commutator in L^k")
    sp.add_argument("--class", dest="cls", type=int, default=None)
    sp.add_argument("--word", required=True, help='left-nested indices, e.g. "(1,2,1,1)"')
    sp = sub.add_parser("verify-paper", help="run the encoded claim suite")
    sp.add_argument("--case", default=None, choices=sorted(verify.CLAIMS))
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        cfg = RunConfig(args.command, getattr(args, "input", None), getattr(args, "cls", None),
                        getattr(args, "dmax", None), getattr(args, "seed", 0), args.format)
        cmd = args.command
        if cmd == "dims":
            payload, ok = _cmd_dims(cfg)
        elif cmd == "homology":
            payload, ok = _cmd_homology(cfg)
        elif cmd == "gens":
            payload, ok = _cmd_gens(cfg)
        elif cmd == "identities":
            payload, ok = _cmd_identities(cfg, args.trials)
        elif cmd == "racg-identities":
            payload, ok = _cmd_racg_identities(cfg)
        elif cmd == "lie-dims":
            payload, ok = _cmd_lie_dims(cfg, args.with_square_relations)
        elif cmd == "lie-compare":
            payload, ok = _cmd_lie_compare(cfg)
        elif cmd == "express":
            payload, ok = _cmd_express(cfg, args.word)
        else:
            payload, ok = _cmd_verify(cfg, args.case, args.json)
    except (InputError, nq.CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, cfg.fmt)
    if not ok:
        print("check failed", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
