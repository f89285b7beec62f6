"""Command-line entry point: ``shadowcodes <command> ...``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage,
parse or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import __version__
from .builder import ImpossibleCase, UnknownCase, extend, recipe_for
from .corpus import FORMULA_SIZE_LIMIT, load_manifest, verify_seed
from .cwe import check_formula, cwe_of_code
from .jacobi import DomainError, JacobiCheckSpec, evaluate_candidate, modularity_check, structural_check, theta_vector
from .lincode import (
    CodeFormatError,
    EnumerationTooLarge,
    TypeVerdict,
    classify,
    dual,
    dumps_code,
    is_self_orthogonal,
    read_code,
    write_code,
)
from .shadow import (
    GeneralizedShadow,
    ImageShapeError,
    InvalidShadowVector,
    NotTypeIError,
    decompose,
    find_generalized_s,
    shadow_weight_check,
    verify_orthogonality,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
INPUT_ERRORS = (
    CodeFormatError,
    OSError,
    NotTypeIError,
    InvalidShadowVector,
    ImageShapeError,
    ImpossibleCase,
    UnknownCase,
    EnumerationTooLarge,
    DomainError,
)


class UsageError(ValueError):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False, default=str))


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"cannot parse vector {text!r}") from None


def _decomposition(args, code):
    """Shadow decomposition chosen by --mode / --s."""
    if args.s is not None:
        return decompose(code, GeneralizedShadow(_parse_vector(args.s)))
    if args.mode == "shadow":
        return decompose(code)
    square = {"gen": None, "gen0": 0, "genhalf": code.params.half}[args.mode]
    s = find_generalized_s(code, random.Random(args.seed), square=square)
    return decompose(code, GeneralizedShadow(s))


def cmd_info(args) -> int:
    code = read_code(args.file)
    verdict = classify(code)
    label = "zero code" if not code.rows else verdict.value
    print(f"m={code.m} n={code.n} |C|={code.size} {label}")
    if code.size <= (1 << 20):
        hist = cwe_of_code(code).euclidean_histogram()
        print("euclidean weights: " + json.dumps({str(k): v for k, v in hist.items()}))
    return EXIT_OK


def cmd_check(args) -> int:
    code = read_code(args.file)
    verdict = classify(code)
    _emit({"m": code.m, "n": code.n, "size": code.size, "self_orthogonal": is_self_orthogonal(code), "verdict": verdict.value})
    return EXIT_FAIL if verdict is TypeVerdict.NOT_SELF_DUAL else EXIT_OK


def cmd_dual(args) -> int:
    code = read_code(args.file)
    d = dual(code)
    if args.out:
        write_code(d, args.out, comment=f"dual of {args.file}")
    else:
        sys.stdout.write(dumps_code(d))
    return EXIT_OK


def cmd_shadow(args) -> int:
    code = read_code(args.file)
    dec = _decomposition(args, code)
    table = verify_orthogonality(dec)
    out = {"decomposition": dec.to_json(), "orthogonality": table.to_json()}
    ok = table.passed
    if args.mode == "shadow" and args.s is None:
        weights = shadow_weight_check(dec)
        out["weight_congruence"] = weights.to_json()
        ok = ok and weights.passed
    _emit(out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_extend(args) -> int:
    code = read_code(args.file)
    dec = _decomposition(args, code)
    recipe = recipe_for(dec, args.variant)
    cert = extend(dec, recipe)
    if args.out and cert.code is not None:
        write_code(cert.code, args.out, comment=f"{recipe.label} extension of {args.file}")
    if args.cert:
        with open(args.cert, "w") as fh:
            json.dump(cert.to_json(), fh, indent=2)
    _emit(cert.to_json())
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_cwe(args) -> int:
    code = read_code(args.file)
    if args.variant is None:
        _emit(cwe_of_code(code).to_json())
        return EXIT_OK
    dec = _decomposition(args, code)
    recipe = recipe_for(dec, args.variant)
    cert = extend(dec, recipe)
    fc = check_formula(dec, recipe, cert.code)
    _emit({"enumerator": cwe_of_code(cert.code).to_json(), "formula_check": fc.to_json()})
    return EXIT_OK if fc.passed else EXIT_FAIL


def cmd_jacobi(args) -> int:
    code = read_code(args.file)
    we = cwe_of_code(code)
    tau, z = _parse_complex(args.tau), _parse_complex(args.z)
    value = evaluate_candidate(we, tau, z, args.radius)
    _, tail = theta_vector(code.params, tau, z, args.radius)
    out: dict = {"value": [value.real, value.imag], "theta_tail_bound": tail}
    ok = True
    if args.check:
        spec = JacobiCheckSpec.for_enumerator(we, tol=args.tol, radius=args.radius)
        report = modularity_check(we, spec)
        out["modularity"] = report.to_json()
        out["structure"] = structural_check(we).to_json()
        ok = report.passed
    _emit(out)
    return EXIT_OK if ok else EXIT_FAIL


def _verify_one(job):
    entry, seed, limit = job
    return verify_seed(entry, seed, limit).to_json()


def cmd_verify_corpus(args) -> int:
    entries = load_manifest(args.manifest)
    if not entries:
        print("warning: manifest lists no seeds", file=sys.stderr)
        _emit({"seeds": 0, "passed": True, "results": []})
        return EXIT_OK
    jobs = [(e, args.seed, args.formula_limit) for e in entries]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    failed = [r for r in results if not r["passed"]]
    for r in results:
        status = "PASS" if r["passed"] else "FAIL"
        extra = "" if r["passed"] else "  " + ", ".join(r["failed_checks"] or [r["error"] or "?"])
        print(f"{status} {r['seed']}{extra}", file=sys.stderr)
    summary = {
        "seeds": len(results),
        "checks": sum(len(r["checks"]) for r in results),
        "failed_checks": sum(len(r["failed_checks"]) for r in results),
        "failed_seeds": [r["seed"] for r in failed],
        "passed": not failed,
    }
    if args.json:
        _emit({"summary": summary, "results": results})
    else:
        _emit(summary)
    return EXIT_OK if not failed else EXIT_FAIL


def _add_mode(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=["shadow", "gen", "gen0", "genhalf"], default="shadow",
                   help="Type I shadow, or a generalized shadow (s.s = 0 for gen0, 2^(m-1) for genhalf, either for gen)")
    p.add_argument("--s", help="explicit generalized-shadow vector, e.g. '1 0 2 3'")
    p.add_argument("--seed", type=int, default=0, help="seed for the s search (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shadowcodes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="size, type and Euclidean weights of a code")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("check", help="self-duality and Type I/II classification")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dual", help="write the dual code")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("shadow", help="coset decomposition and orthogonality table")
    p.add_argument("file")
    _add_mode(p)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("extend", help="build the extended self-dual code")
    p.add_argument("file")
    _add_mode(p)
    p.add_argument("--variant", choices=["a", "b"], default="a")
    p.add_argument("--out", help="write the extended code here")
    p.add_argument("--cert", help="also write the certificate JSON here")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("cwe", help="complete weight enumerator (optionally of an extension, with formula check)")
    p.add_argument("file")
    _add_mode(p)
    p.add_argument("--variant", choices=["a", "b"], help="extend first and compare with the coset-sum formula")
    p.set_defaults(func=cmd_cwe)

    p = sub.add_parser("jacobi", help="evaluate cwe at theta series; optionally check transformation laws")
    p.add_argument("file")
    p.add_argument("--tau", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--radius", type=int, default=40)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("verify-corpus", help="run the full pipeline over a seed manifest")
    p.add_argument("--manifest", help="manifest.json (default: bundled corpus)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--formula-limit", type=int, default=FORMULA_SIZE_LIMIT,
                   help="skip formula checks for codes larger than this")
    p.add_argument("--json", action="store_true", help="emit per-seed results, not just the summary")
    p.set_defaults(func=cmd_verify_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
