"""Command-line front end.

Exit status is 0 on success, 1 when the mathematics refuses the input
(a non-unit, a non-automorphism where one is required, a failed check) and
2 for usage errors, including malformed literals.  Verdict commands put a
single greppable word on the first line of output.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import basicgroup as bg
from . import gz4, verify
from .endos import Endo, classify, invert, order
from .errors import InternalCheckFailed, RingAutoError
from .fixedrings import (
    CoeffModule,
    SubgroupSpec,
    fixed_module,
    identify_z4,
    modules_equal,
    parse_poly_list,
    span_module,
)
from .polyring import f_adic_expand, parse_poly
from .residues import check_modulus


class UsageError(Exception):
    """A literal that does not parse; reported like an argparse error."""


def _literal(parse, *args):
    try:
        return parse(*args)
    except RingAutoError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _poly_json(p) -> str:
    return json.dumps(p.to_list(), separators=(",", ":"))


# -- basic group -------------------------------------------------------------


def _classes_table(n: int) -> str:
    payload = bg.classes_payload(n)
    lines = [f"B(Z_{n}): order {payload['group_order']}, {payload['count']} conjugacy classes"]
    width = max(len(f"{c['u']}*x+{c['a']}") for c in payload["classes"])
    lines.append(f"{'class':<{width}}  size")
    for c in payload["classes"]:
        lines.append(f"{c['u']}*x+{c['a']:<{width - len(str(c['u'])) - 3}}  {c['size']}")
    return "\n".join(lines)


def _bruteforce_agrees(n: int) -> None:
    orbits = bg.conjugation_orbits(n)
    by_formula = sorted(c.size for c in bg.enumerate_classes(n))
    if sorted(len(o) for o in orbits) != by_formula:
        raise InternalCheckFailed(f"class sizes for Z_{n} disagree with the brute-force orbits")


def cmd_classes(args) -> str:
    n = check_modulus(args.modulus)
    if args.check_bruteforce:
        _bruteforce_agrees(n)
    if args.format == "json":
        return bg.classes_to_json(n)
    if args.format == "csv":
        return bg.classes_to_csv(n).rstrip("\n")
    return _classes_table(n)


def cmd_count(args) -> str:
    n = check_modulus(args.modulus)
    value = bg.psi(n)
    if not args.check_bruteforce:
        return str(value)
    brute = bg.psi_bruteforce(n)
    if brute != value:
        raise InternalCheckFailed(f"psi({n}) = {value} but brute force counts {brute}")
    return f"{value}\nbruteforce {brute}"


def cmd_conjugate(args) -> str:
    n = check_modulus(args.modulus)
    s = _literal(bg.parse_elem, args.first, n)
    t = _literal(bg.parse_elem, args.second, n)
    g = bg.conjugacy_witness(s, t)
    if g is None:
        return "NOT_CONJUGATE"
    return f"CONJUGATE\nwitness {g.u},{g.a}"


def cmd_canon(args) -> str:
    n = check_modulus(args.modulus)
    rep = bg.canonical_rep(_literal(bg.parse_elem, args.elem, n))
    return f"{rep.u}*x+{bg.display_a(rep)}"


# -- single automorphisms ------------------------------------------------------


def _endo(args) -> Endo:
    n = check_modulus(args.modulus)
    return Endo(_literal(parse_poly, args.image, n))


def cmd_auto_check(args) -> str:
    form = classify(_endo(args))
    if form is None:
        return "NOT_AUTOMORPHISM"
    return f"AUTOMORPHISM\na={form.a.value} u={form.u.value} f={_poly_json(form.f)}"


def cmd_invert(args) -> str:
    inv = invert(_endo(args))
    return f"{_poly_json(inv.image)}\nx -> {inv.image}"


def cmd_order(args) -> str:
    return str(order(_endo(args), args.cap))


def cmd_expand(args) -> str:
    n = check_modulus(args.modulus)
    f = _literal(parse_poly, args.f, n)
    g = _literal(parse_poly, args.g, n)
    digits = f_adic_expand(g, f)
    return json.dumps([d.to_list() for d in digits], separators=(",", ":"))


# -- fixed rings -------------------------------------------------------------


def cmd_fixed(args) -> str:
    n = check_modulus(args.modulus)
    images = _literal(parse_poly_list, args.gens, n)
    H = SubgroupSpec(tuple(Endo(p) for p in images))
    D = args.degree
    W = 2 * D if args.work_bound is None else args.work_bound
    module = fixed_module(H, D, n=n)
    # a fixed ring is a ring: products of its basis must stay inside
    closed = span_module(list(module.basis), D, W, n=n)
    if not modules_equal(module, closed):
        raise InternalCheckFailed(f"fixed module is not closed under products at D={D}, W={W}")
    if args.format == "json":
        return json.dumps(module.to_json(), separators=(",", ":"))
    return _module_table(module, W)


def _module_table(module: CoeffModule, W: int) -> str:
    lines = [
        f"fixed module over Z_{module.n}, degree <= {module.degree_bound}, "
        f"{len(module.basis)} basis elements, {module.size()} polynomials",
        f"closed under products up to formal degree {W}",
    ]
    lines += [str(p) for p in module.basis]
    return "\n".join(lines)


# -- Z_4 -----------------------------------------------------------------------


def _g4_list(text: str) -> list[gz4.GAut4]:
    return [_literal(gz4.parse_element, part) for part in text.split(";") if part.strip()]


def cmd_z4_identify(args) -> str:
    elems = _g4_list(args.gens)
    verdict = identify_z4(SubgroupSpec(tuple(e.to_endo() for e in elems)), args.degree)
    gens = ", ".join(str(p) for p in verdict.ring_generators)
    return "\n".join(
        [
            verdict.label(),
            f"subgroup order {len(verdict.subgroup)}",
            f"fixed ring Z_4[{gens}]",
            f"certified at D={verdict.degree_bound}, W={verdict.work_bound}",
        ]
    )


def cmd_z4_stabilizer(args) -> str:
    ring = _literal(parse_poly_list, args.ring_gens, gz4.N)
    return json.dumps(gz4.stabilizer(ring, args.pool_degree).to_json(), separators=(",", ":"))


def cmd_z4_classes(args) -> str:
    classes = gz4.conjugacy_classes(args.pool_degree)
    return json.dumps([[e.to_json() for e in c] for c in classes], separators=(",", ":"))


def cmd_verify(args) -> str | None:
    ok = verify.run(args.suite, args.max_n, emit=lambda line: print(line, flush=True))
    if not ok:
        raise InternalCheckFailed(f"suite {args.suite} reported failures")
    print(f"suite {args.suite}: all checks passed")
    return None


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringauto", description="Automorphisms, conjugacy and invariant subrings of Z_n[x]."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def modulus(p):
        p.add_argument("--modulus", type=int, required=True, metavar="N")

    p = sub.add_parser("classes", help="conjugacy classes of B(Z_n)")
    modulus(p)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--check-bruteforce", action="store_true")
    p.set_defaults(run=cmd_classes)

    p = sub.add_parser("count", help="number of conjugacy classes of B(Z_n)")
    modulus(p)
    p.add_argument("--check-bruteforce", action="store_true")
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("conjugate", help="decide conjugacy of two basic automorphisms")
    modulus(p)
    p.add_argument("--first", required=True, metavar="u,a")
    p.add_argument("--second", required=True, metavar="u,a")
    p.set_defaults(run=cmd_conjugate)

    p = sub.add_parser("canon", help="canonical class representative")
    modulus(p)
    p.add_argument("--elem", required=True, metavar="u,a")
    p.set_defaults(run=cmd_canon)

    for name, fn, hint in (
        ("auto-check", cmd_auto_check, "is x -> image an automorphism"),
        ("invert", cmd_invert, "inverse automorphism"),
        ("order", cmd_order, "order of an automorphism"),
    ):
        p = sub.add_parser(name, help=hint)
        modulus(p)
        p.add_argument("--image", required=True, metavar="[c0,c1,...]")
        if name == "order":
            p.add_argument("--cap", type=int, default=None, metavar="K")
        p.set_defaults(run=fn)

    p = sub.add_parser("expand", help="f-adic expansion of g")
    modulus(p)
    p.add_argument("--f", required=True, metavar="[coeffs]")
    p.add_argument("--g", required=True, metavar="[coeffs]")
    p.set_defaults(run=cmd_expand)

    p = sub.add_parser("fixed", help="degree-bounded fixed ring of a group of automorphisms")
    modulus(p)
    p.add_argument("--gens", required=True, metavar='"[coeffs];[coeffs];..."')
    p.add_argument("--degree", type=int, required=True, metavar="D")
    p.add_argument("--work-bound", type=int, default=None, metavar="W")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(run=cmd_fixed)

    z4 = sub.add_parser("z4", help="the automorphism group of Z_4[x]")
    z4sub = z4.add_subparsers(dest="z4_command", required=True)
    p = z4sub.add_parser("identify", help="catalog case of a fixed ring")
    p.add_argument("--gens", required=True, metavar='"<alpha|beta>:[coeffs];..."')
    p.add_argument("--degree", type=int, required=True, metavar="D")
    p.set_defaults(run=cmd_z4_identify)
    p = z4sub.add_parser("stabilizer", help="pool elements fixing a subring")
    p.add_argument("--ring-gens", required=True, metavar='"[coeffs];..."')
    p.add_argument("--pool-degree", type=int, required=True, metavar="d")
    p.set_defaults(run=cmd_z4_stabilizer)
    p = z4sub.add_parser("classes", help="conjugacy classes of a pool")
    p.add_argument("--pool-degree", type=int, required=True, metavar="d")
    p.set_defaults(run=cmd_z4_classes)

    p = sub.add_parser("verify", help="run oracle suites")
    p.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    p.add_argument("--max-n", type=int, default=24, metavar="N")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("degree", "pool_degree", "work_bound", "max_n", "cap"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")
    try:
        out = args.run(args)
    except UsageError as exc:
        parser.error(str(exc))
    except RingAutoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if out is not None:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
