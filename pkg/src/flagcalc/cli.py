"""``flagcalc`` command line.

Reports go to standard output, diagnostics to standard error.  Exit status
is 0 on success, 1 for invalid input or usage, 2 when an internal invariant
fails (including a corrupt cache or a failing identity check).
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import __version__
from .cohomology import (
    CacheCorruptError,
    FlagSpace,
    InvariantViolation,
    STORE,
    cache_dir,
    cup_product,
    parse_class,
    parse_space,
    schubert_basis,
    verify_lemmas,
)
from .cohomology import cache as sc_cache
from .polyring import DomainError, coinvariant_normal_form, expand_in_schubert_basis, parse_polynomial
from .report import make_report, render

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _space(args) -> FlagSpace:
    return parse_space(args.space if getattr(args, "space", None) else args.target, getattr(args, "n", None))


def _int_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        values = list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise DomainError(f"bad range {text!r}; use N or A..B") from None
    if not values:
        raise DomainError(f"empty range {text!r}")
    return values


def _expansion_payload(exp) -> list:
    return [[list(w.entries), _num(c)] for w, c in sorted(exp.items(), key=lambda wc: (wc[0].length, wc[0].entries))]


def _num(c):
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else int(c)
    return c


# subcommands -----------------------------------------------------------------

def cmd_mult(args):
    space = _space(args)
    a = parse_class(args.left, space)
    b = parse_class(args.right, space)
    prod = cup_product(a, b)
    inputs = {"space": space.spec(), "left": a.to_json()["terms"], "right": b.to_json()["terms"]}
    return inputs, {"product": prod.to_json(), "text": prod.to_text()}, EXIT_OK


def cmd_expand(args):
    f = parse_polynomial(args.polynomial)
    exp = coinvariant_normal_form(f, args.n) if args.n else expand_in_schubert_basis(f)
    mode = f"coinvariant n={args.n}" if args.n else "polynomial ring"
    return {"polynomial": f.to_text(), "mode": mode}, {"expansion": _expansion_payload(exp)}, EXIT_OK


def cmd_basis(args):
    space = _space(args)
    basis = schubert_basis(space, args.deg)
    return (
        {"space": space.spec(), "deg": args.deg},
        {"dimension": space.dimension, "size": len(basis), "basis": [list(w.entries) for w in basis]},
        EXIT_OK,
    )


def cmd_obstruct(args):
    import json

    from .obstruct import Certificate, decide, default_library, verdict_payload

    space = _space(args)
    library = default_library()
    if args.certificate:
        with open(args.certificate) as fh:
            data = json.load(fh)
        library = [Certificate.from_json(data.get("certificate", data))] + library
    verdict, system = decide(args.m, space, args.bound, library)
    result = verdict_payload(verdict, system, include_system=args.show_system)
    inputs = {"m": args.m, "target": space.spec(), "space": space.describe(), "bound": args.bound}
    return inputs, result, EXIT_OK


def cmd_construct(args):
    from .geometry import (
        embed_fiber,
        nonconstancy_witness,
        p3_to_g134,
        pencil_divisor_degrees,
        sample_lines,
        symplectic_perp,
        validate_flag,
    )

    if args.samples < 2:
        raise DomainError("--samples must be at least 2")
    FlagSpace.minimal(args.j, args.n)
    lines = sample_lines(args.samples, args.seed)
    valid = perp_ok = 0
    for L in lines:
        perp = symplectic_perp(L)
        if perp.dim == 3 and perp.contains(L):
            perp_ok += 1
        pt = embed_fiber(p3_to_g134(L), args.n, args.j)
        if validate_flag(pt) and args.j not in pt.dims:
            valid += 1
    fn = lambda L: embed_fiber(p3_to_g134(L), args.n, args.j)
    pair = nonconstancy_witness(fn, lines)
    p, q = lines[0].basis[0], lines[1].basis[0]
    degrees = list(pencil_divisor_degrees(p, q))
    result = {
        "samples": args.samples,
        "valid_flags": valid,
        "perp_checks": perp_ok,
        "nonconstancy": None if pair is None else [[str(x) for x in s.basis[0]] for s in pair],
        "constant_over_sample": pair is None,
        "pencil_degrees": degrees,
        "example": fn(lines[0]).to_json(),
    }
    passed = valid == perp_ok == args.samples and pair is not None and degrees == [1, 1]
    result["status"] = "PASS" if passed else "FAIL"
    inputs = {"n": args.n, "j": args.j, "samples": args.samples, "seed": args.seed}
    return inputs, result, EXIT_OK if passed else EXIT_INTERNAL


def cmd_verify_lemmas(args):
    ns = _int_range(args.n)
    if ns[0] < 4:
        raise DomainError("the identities are stated for n >= 4")
    rows = verify_lemmas(ns)
    table = [r.to_json() for r in rows]
    ok = all(r.passed for r in rows)
    result = {"checks": table, "total": len(rows), "passed": sum(r.passed for r in rows), "status": "PASS" if ok else "FAIL"}
    return {"n": ns}, result, EXIT_OK if ok else EXIT_INTERNAL


def cmd_cache(args):
    if args.action == "build":
        space = FlagSpace(args.n, ()) if not args.space else parse_space(args.space, args.n)
        paths = sc_cache.build_tables(space, args.max_codim)
        return (
            {"action": "build", "space": space.spec(), "max_codim": args.max_codim},
            {"tables": [p.name for p in paths], "status": "PASS"},
            EXIT_OK,
        )
    if args.action == "verify":
        paths = sc_cache.list_tables()
        checked = {}
        for p in paths:
            checked[p.name] = sc_cache.verify_table(p, args.fraction, args.seed)
        status = "PASS" if paths else "EMPTY"
        return {"action": "verify", "fraction": args.fraction, "seed": args.seed}, {"sampled_pairs": checked, "status": status}, EXIT_OK
    removed = sc_cache.clear_tables()
    return {"action": "clear"}, {"removed": removed, "status": "PASS"}, EXIT_OK


# parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flagcalc", description="Schubert calculus and morphism obstructions for type-A flag varieties.")
    parser.add_argument("--version", action="version", version=f"flagcalc {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.set_defaults(func=func)
        return p

    p = add("mult", cmd_mult, "Multiply two classes, e.g. mult --space gr:2,4 'D(2)' '(1,3,2,4)'.")
    p.add_argument("--space", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("left")
    p.add_argument("right")

    p = add("expand", cmd_expand, "Expand a polynomial such as '3*x1^2*x2 - x3' in Schubert polynomials.")
    p.add_argument("polynomial")
    p.add_argument("--n", type=int, help="reduce modulo symmetric polynomials in x1..xn")

    p = add("basis", cmd_basis, "List the Schubert basis of a given codimension.")
    p.add_argument("--space", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--deg", type=int, required=True)

    p = add("obstruct", cmd_obstruct, "Decide whether P^m can map nonconstantly to the target.")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--target", default="minimal:1")
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--certificate", help="stored certificate (JSON) to try first")
    p.add_argument("--show-system", action="store_true")

    p = add("construct", cmd_construct, "Sample the morphism P^3 -> G/P_alpha_j and check it.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=20240601)

    p = add("verify-lemmas", cmd_verify_lemmas, "Check the incidence-cycle product identities for a range of n.")
    p.add_argument("--n", default="4..7", help="N or A..B")

    p = add("cache", cmd_cache, "Build, verify or clear structure-constant tables.")
    p.add_argument("action", choices=("build", "verify", "clear"))
    p.add_argument("--n", type=int)
    p.add_argument("--space")
    p.add_argument("--max-codim", type=int, default=4)
    p.add_argument("--fraction", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_INPUT
    except SystemExit as exc:  # --help / --version
        return EXIT_OK if not exc.code else EXIT_INPUT
    if args.command == "cache" and args.action == "build" and args.n is None:
        print("flagcalc cache build: error: --n is required", file=err)
        return EXIT_INPUT
    start = time.perf_counter()
    try:
        inputs, result, code = args.func(args)
    except (CacheCorruptError, InvariantViolation, ArithmeticError) as exc:
        key = getattr(exc, "key", None)
        print(f"flagcalc: internal error: {exc}", file=err)
        report = make_report(args.command, {"argv": list(argv or sys.argv[1:])}, {"status": "ERROR", "error": str(exc), "key": key})
        out.write(render(report, args.format))
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"flagcalc: error: {exc}", file=err)
        return EXIT_INPUT
    elapsed = time.perf_counter() - start
    cache = {"dir": str(cache_dir()), "tables_on_disk": len(sc_cache.list_tables()), "tables_loaded": STORE.stats["disk_tables"]}
    report = make_report(args.command, inputs, result, timing={"seconds": round(elapsed, 6)}, cache=cache)
    out.write(render(report, args.format))
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
