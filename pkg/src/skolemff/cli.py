"""Batch CLI: instance files in, machine-readable JSON reports out.

Exit codes: 0 completed with an answer, 1 theorem violation detected (never
expected), 2 invalid input, 3 inconclusive within the configured bounds.
Reports are single JSON documents on stdout; every numeric value is a decimal
string, and `timing_ms` is the only field excluded from the determinism
contract.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .errors import (
    FactorizationTooHard,
    PreconditionGlobalZeroExists,
    QEqualsOne,
    SkolemffError,
    UnsupportedConstantPair,
)
from .generate import PROFILES, generate_instance
from .powersum import certify_local_global, decide_global_zero, eval_B, find_local_witness
from .serialize import (
    canonical_dumps,
    instance_digest,
    load_instance,
    place_to_json,
    save_instance,
    stringify_numbers,
)
from .smallcoef import smallcoef_end_to_end
from .verify_suites import SUITES, run_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3


def _exit_code_for(exc: SkolemffError) -> int:
    if isinstance(exc, (FactorizationTooHard, UnsupportedConstantPair)):
        return EXIT_INCONCLUSIVE
    if isinstance(exc, (QEqualsOne, PreconditionGlobalZeroExists)):
        return EXIT_VIOLATION
    return EXIT_INVALID


def _report_inequality(rep) -> dict:
    return {
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "holds": rep.holds,
        "comparison": rep.comparison,
        "detail": {k: v if isinstance(v, (str, bool, list)) else str(v) for k, v in rep.detail.items()},
    }


def _cmd_solve(path: str, n_bound: int | None) -> tuple[dict, int]:
    inst, doc = load_instance(path)
    n = decide_global_zero(inst, n_bound=n_bound)
    result: dict = {"global_zero": n}
    if n is not None:
        result["verified_zero"] = eval_B(inst, n).is_zero
    return result, EXIT_OK


def _cmd_local(path: str, a: int, k_bound: int) -> tuple[dict, int]:
    inst, doc = load_instance(path)
    witness = find_local_witness(inst, a, k_bound)
    return {"a": a, "k_bound": k_bound, "witness": witness}, EXIT_OK


def _cmd_certify(path: str, k_bound: int) -> tuple[dict, int]:
    inst, doc = load_instance(path)
    rep = certify_local_global(inst, k_bound=k_bound)
    result = {
        "verdict": rep.verdict,
        "global_zero": rep.global_zero,
        "a": rep.a,
        "local_witness": rep.local_witness,
        "k_bound": rep.k_bound,
        "theorem_violation": rep.theorem_violation,
        "notes": list(rep.notes),
        "per_class": [
            {
                "residue": cc.residue,
                "q": cc.q,
                "p": cc.p,
                "ell": cc.ell,
                "a": cc.a,
                "dep_roots": cc.dep_roots,
                "ind_roots": cc.ind_roots,
                "split_complete": cc.split_complete,
                "lemma_checks": [_report_inequality(r) for r in cc.lemma_checks],
            }
            for cc in rep.per_class
        ],
    }
    if rep.s_work is not None:
        result["s_work"] = [place_to_json(p) for p in rep.s_work]
    if rep.theorem_violation:
        return result, EXIT_VIOLATION
    if rep.verdict == "InconclusiveWithinBounds":
        return result, EXIT_INCONCLUSIVE
    return result, EXIT_OK


def _cmd_smallcoef(path: str, rho: str, k_bound: int) -> tuple[dict, int]:
    inst, doc = load_instance(path)
    rep = smallcoef_end_to_end(inst, Fraction(rho), k_bound=k_bound)
    result = {
        "status": rep.status,
        "rho": str(rep.rho),
        "e": rep.e,
        "a": rep.a,
        "gamma": str(rep.gamma) if rep.gamma is not None else None,
        "witness": rep.witness,
        "k_bound": rep.k_bound,
    }
    if rep.conclusion is not None:
        result["conclusion"] = {
            "branch": rep.conclusion.branch,
            "verified": rep.conclusion.verified,
            "theorem_violation": rep.conclusion.theorem_violation,
            "distinct_exponents": rep.conclusion.distinct_exponents,
        }
    return result, EXIT_VIOLATION if rep.status == "theorem_violation" else EXIT_OK


def _cmd_verify(suite: str, seed: int, count: int, max_deg: int) -> tuple[dict, int]:
    res = run_suite(suite, seed, count, max_deg)
    result = {
        "suite": res.suite,
        "seed": res.seed,
        "count": res.count,
        "checked": res.checked,
        "violations": res.violations,
        "skipped_dependent": res.skipped_dependent,
        "reproducer": res.reproducer,
        "notes": res.notes,
    }
    return result, EXIT_VIOLATION if res.violations else EXIT_OK


def _cmd_gen(seed: int, profile: str, out: str) -> tuple[dict, int]:
    inst, metadata = generate_instance(seed, profile)
    doc = save_instance(inst, out, metadata)
    return {"path": out, "profile": profile, "seed": seed, "instance": doc}, EXIT_OK


def _envelope(command: dict, result: dict, code: int, started: float, digest: str | None) -> dict:
    return {
        "command": command,
        "instance_digest": digest,
        "result": result,
        "timing_ms": str(int((time.monotonic() - started) * 1000)),
        "exit_code": code,
    }


def _run_single(handler, path: str, command: dict):
    started = time.monotonic()
    digest = None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            digest = instance_digest(json.load(fh))
    except (OSError, json.JSONDecodeError):
        pass
    try:
        result, code = handler(path)
    except SkolemffError as exc:
        code = _exit_code_for(exc)
        result = {"error": type(exc).__name__, "message": str(exc)}
    except OSError as exc:
        code = EXIT_INVALID
        result = {"error": "OSError", "message": str(exc)}
    return _envelope(dict(command, file=path), result, code, started, digest)


_SEVERITY = {EXIT_VIOLATION: 3, EXIT_INVALID: 2, EXIT_INCONCLUSIVE: 1, EXIT_OK: 0}


def _run_instance_command(args, handler, command: dict) -> int:
    if getattr(args, "dir", None):
        files = sorted(
            os.path.join(args.dir, name)
            for name in os.listdir(args.dir)
            if name.endswith(".json")
        )
        with ThreadPoolExecutor(max_workers=min(8, max(1, len(files)))) as pool:
            reports = list(pool.map(lambda p: _run_single(handler, p, command), files))
        reports.sort(key=lambda r: r["command"]["file"])
        code = EXIT_OK
        for rep in reports:
            if _SEVERITY[rep["exit_code"]] > _SEVERITY[code]:
                code = rep["exit_code"]
        print(canonical_dumps(stringify_numbers({"command": command, "reports": reports})))
        return code
    report = _run_single(handler, args.file, command)
    print(canonical_dumps(stringify_numbers(report)))
    return report["exit_code"]


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skolemff",
        description="Exact power-sum local-global toolkit on F(t)",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add_instance_cmd(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", nargs="?", help="instance JSON file")
        p.add_argument("--dir", help="process every *.json in a directory")
        return p

    p = add_instance_cmd("solve", "decide whether some B(n) vanishes identically")
    p.add_argument("--n-bound", type=int, default=None, help="override the scan window on |n|")

    p = add_instance_cmd("local", "search a local witness k for f^a - 1")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--k-bound", type=int, default=100)

    p = add_instance_cmd("certify", "run the effective local-global certification")
    p.add_argument("--k-bound", type=int, default=100)

    p = add_instance_cmd("smallcoef", "small-coefficients theorem pipeline")
    p.add_argument("--rho", type=str, required=True, help="rational rho in (0,1), e.g. 1/10")
    p.add_argument("--k-bound", type=int, default=100)

    p = sub.add_parser("verify", help="randomized theorem suites")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-deg", type=int, default=12)

    p = sub.add_parser("gen", help="generate a random valid instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--profile", choices=PROFILES, required=True)
    p.add_argument("--out", required=True)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        if args.cmd == "solve":
            if not args.dir and not args.file:
                raise SystemExit(2)
            return _run_instance_command(
                args, lambda p: _cmd_solve(p, args.n_bound), {"cmd": "solve", "n_bound": args.n_bound}
            )
        if args.cmd == "local":
            if not args.dir and not args.file:
                raise SystemExit(2)
            return _run_instance_command(
                args,
                lambda p: _cmd_local(p, args.a, args.k_bound),
                {"cmd": "local", "a": args.a, "k_bound": args.k_bound},
            )
        if args.cmd == "certify":
            if not args.dir and not args.file:
                raise SystemExit(2)
            return _run_instance_command(
                args,
                lambda p: _cmd_certify(p, args.k_bound),
                {"cmd": "certify", "k_bound": args.k_bound},
            )
        if args.cmd == "smallcoef":
            if not args.dir and not args.file:
                raise SystemExit(2)
            return _run_instance_command(
                args,
                lambda p: _cmd_smallcoef(p, args.rho, args.k_bound),
                {"cmd": "smallcoef", "rho": args.rho, "k_bound": args.k_bound},
            )
        if args.cmd == "verify":
            command = {
                "cmd": "verify",
                "suite": args.suite,
                "seed": args.seed,
                "count": args.count,
                "max_deg": args.max_deg,
            }
            result, code = _cmd_verify(args.suite, args.seed, args.count, args.max_deg)
            print(canonical_dumps(stringify_numbers(_envelope(command, result, code, started, None))))
            return code
        if args.cmd == "gen":
            command = {"cmd": "gen", "seed": args.seed, "profile": args.profile, "out": args.out}
            result, code = _cmd_gen(args.seed, args.profile, args.out)
            print(canonical_dumps(stringify_numbers(_envelope(command, result, code, started, None))))
            return code
    except SkolemffError as exc:
        code = _exit_code_for(exc)
        doc = _envelope(
            {"cmd": args.cmd}, {"error": type(exc).__name__, "message": str(exc)}, code, started, None
        )
        print(canonical_dumps(stringify_numbers(doc)))
        return code
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
