"""Command-line front end.

Subcommands expose every capability with machine-readable output: domains,
dynkin, enumerate, dim, words, verify, structconst, poincare, irreps,
verify-all.  Output is deterministic for fixed flags and seed.  Exit codes:
0 success, 1 verification failure, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .domains import Family, domain_str, domain_to_json, enumerate_domains
from .groupoid import (
    SizeCapExceeded,
    Word,
    dimension_formula,
    element_to_json,
    groupoid_for,
    word_to_json,
)
from .hecke import HeckeAlgebra, hecke_eval, hecke_poly
from .roots import dynkin_dot, dynkin_json, root_system
from .scalars import laurent_to_json, rational_from_string, rational_to_string
from .superreps import iso_report_json, verify_isomorphism
from .weylgroups import WeylType, is_semisimple, poincare
from .weylreps import irreps, split_regular_weyl


@dataclass
class RunConfig:
    """Validated flag bundle shared by the family-based subcommands."""

    family: Family
    scalar: str = "poly"
    q0: Fraction = Fraction(2)
    fmt: str = "text"
    output: str | None = None
    seed: int = 0
    max_elements: int = 500_000

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        kind = args.family
        m, n = args.m, args.n
        if kind == "C":
            # C(n) = osp(2|2(n-1)) is the CD family at m = 1
            if n is None or n < 2:
                raise SystemExit2("--family C needs --n >= 2 (C(n) with n >= 2)")
            family = Family("CD", 1, n - 1)
        else:
            if m is None or n is None:
                raise SystemExit2("--m and --n are required")
            try:
                family = Family(kind, m, n)
            except ValueError as exc:
                raise SystemExit2(str(exc))
        scalar = getattr(args, "scalar", "poly")
        q0 = rational_from_string(getattr(args, "q", "2"))
        if scalar == "eval" and q0 == 0:
            raise SystemExit2("eval mode needs q0 != 0")
        return cls(
            family=family,
            scalar=scalar,
            q0=q0,
            fmt=getattr(args, "format", "text"),
            output=getattr(args, "output", None),
            seed=getattr(args, "seed", 0),
            max_elements=getattr(args, "max_elements", 500_000),
        )


def _parse_family(args) -> Family:
    return RunConfig.from_args(args).family


class SystemExit2(Exception):
    pass


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def cmd_domains(args) -> int:
    fam = _parse_family(args)
    doms = enumerate_domains(fam)
    if args.format == "json":
        _emit(args, _json_dump({
            "schema_version": 1,
            "family": {"kind": fam.kind, "m": fam.m, "n": fam.n},
            "count": len(doms),
            "domains": [domain_to_json(a) for a in doms],
        }))
    else:
        lines = [domain_str(a) for a in doms]
        _emit(args, "\n".join(lines + [f"count: {len(doms)}"]) + "\n")
    return 0


def cmd_dynkin(args) -> int:
    fam = _parse_family(args)
    if args.format == "dot":
        _emit(args, dynkin_dot(fam))
    elif args.format == "json":
        _emit(args, _json_dump(dynkin_json(fam)))
    else:
        rs = root_system(fam)
        lines = []
        for a in rs.domains:
            diag = rs.dynkin(a)
            cross = ",".join(str(n.index) for n in diag.nodes if n.crossed)
            filled = ",".join(str(n.index) for n in diag.nodes if n.filled)
            edges = " ".join(f"{i}-{j}:{m}" for i, j, m in diag.edges)
            lines.append(f"{domain_str(a)} cross=[{cross}] filled=[{filled}] edges: {edges}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_enumerate(args) -> int:
    fam = _parse_family(args)
    G = groupoid_for(fam)
    G.max_elements = args.max_elements
    els = G.elements()
    if args.format == "json":
        _emit(args, _json_dump({
            "schema_version": 1,
            "family": {"kind": fam.kind, "m": fam.m, "n": fam.n},
            "count": len(els),
            "elements": [
                {**element_to_json(w), "length": G.length(w)} for w in els
            ],
        }))
    else:
        _emit(args, f"{len(els)}\n")
    return 0


def cmd_dim(args) -> int:
    fam = _parse_family(args)
    G = groupoid_for(fam)
    G.max_elements = args.max_elements
    count = G.order()
    formula = dimension_formula(fam)
    if args.format == "json":
        _emit(args, _json_dump({
            "schema_version": 1,
            "family": {"kind": fam.kind, "m": fam.m, "n": fam.n},
            "dimension": count,
            "formula": formula,
            "match": count == formula,
        }))
    else:
        _emit(args, f"{count}\n")
    return 0 if count == formula else 1


def cmd_words(args) -> int:
    fam = _parse_family(args)
    G = groupoid_for(fam)
    from .domains import domain_from_json

    base = domain_from_json(fam, json.loads(args.base))
    letters = tuple(int(x) for x in args.letters.split(",") if x)
    word = Word(base, letters)
    w = G.evaluate(word)
    data = {
        "schema_version": 1,
        "word": word_to_json(word),
        "element": element_to_json(w),
        "length": G.length(w),
        "reduced": G.length(w) == len(letters),
        "canonical_word": word_to_json(G.canonical_reduced_word(w)),
        "reduced_words": [word_to_json(u) for u in G.all_reduced_words(w)],
        "braid_connected": G.braid_connected(w),
    }
    if args.format == "json":
        _emit(args, _json_dump(data))
    else:
        _emit(
            args,
            f"length {data['length']} reduced {data['reduced']} "
            f"#reduced_words {len(data['reduced_words'])} "
            f"braid_connected {data['braid_connected']}\n",
        )
    return 0


def cmd_verify(args) -> int:
    fam = _parse_family(args)
    alg = _algebra(args, fam)
    axioms = root_system(fam).check_axioms()
    pres = alg.verify_presentation()
    data = {
        "schema_version": 1,
        "family": {"kind": fam.kind, "m": fam.m, "n": fam.n},
        "axioms_passed": axioms.passed,
        "axiom_failures": [f.description for f in axioms.failures],
        "relations_checked": pres.checked,
        "relations_passed": pres.passed,
        "relation_failures": pres.failures,
    }
    ok = axioms.passed and pres.passed
    if args.format == "json":
        _emit(args, _json_dump(data))
    else:
        _emit(args, ("PASS" if ok else "FAIL") + f" ({pres.checked} relation instances)\n")
    return 0 if ok else 1


def _algebra(args, fam: Family) -> HeckeAlgebra:
    if args.scalar == "poly":
        return hecke_poly(fam)
    return hecke_eval(fam, rational_from_string(args.q))


def cmd_structconst(args) -> int:
    fam = _parse_family(args)
    alg = _algebra(args, fam)
    data = alg.structure_constants_json()
    _emit(args, _json_dump(data))
    return 0


def cmd_poincare(args) -> int:
    wt = WeylType(args.type, args.n)
    if args.q is None:
        p = poincare(wt)
        if args.format == "json":
            _emit(args, _json_dump({
                "schema_version": 1,
                "type": {"kind": wt.kind, "n": wt.n},
                "poincare": laurent_to_json(p),
            }))
        else:
            _emit(args, f"{p}\n")
        return 0
    q0 = rational_from_string(args.q)
    val = poincare(wt, q0)
    if args.format == "json":
        _emit(args, _json_dump({
            "schema_version": 1,
            "type": {"kind": wt.kind, "n": wt.n},
            "q": rational_to_string(q0),
            "value": rational_to_string(val),
            "semisimple": is_semisimple(wt, q0) if q0 != 0 else False,
        }))
    else:
        _emit(args, f"{rational_to_string(val)}\n")
    return 0


def cmd_irreps(args) -> int:
    wt = WeylType(args.type, args.n)
    q0 = rational_from_string(args.q)
    if args.oracle:
        comps = split_regular_weyl(wt, q0, seed=args.seed)
        data = {
            "schema_version": 1,
            "type": {"kind": wt.kind, "n": wt.n},
            "q": rational_to_string(q0),
            "components": [
                {
                    "dim": c.irrep.dim,
                    "multiplicity": c.multiplicity,
                    "generators": [
                        [[rational_to_string(x) for x in row] for row in g]
                        for g in c.irrep.gens
                    ],
                }
                for c in comps
            ],
        }
    else:
        reps = irreps(wt, q0)
        data = {
            "schema_version": 1,
            "type": {"kind": wt.kind, "n": wt.n},
            "q": rational_to_string(q0),
            "irreps": [
                {
                    "label": _label_json(r.label),
                    "dim": r.dim,
                    "generators": [
                        [[rational_to_string(x) for x in row] for row in g]
                        for g in r.gens
                    ],
                }
                for r in reps
            ],
        }
    if args.format == "json":
        _emit(args, _json_dump(data))
    else:
        if args.oracle:
            dims = [(c.irrep.dim, c.multiplicity) for c in comps]
            _emit(args, f"components (dim, multiplicity): {dims}\n")
        else:
            _emit(args, f"dims: {[r.dim for r in reps]}\n")
    return 0


def _label_json(label):
    if isinstance(label, tuple):
        return [_label_json(x) for x in label]
    return label


def cmd_reps(args) -> int:
    fam = _parse_family(args)
    q0 = rational_from_string(args.q)
    if args.mode == "build":
        from .superreps import big_map

        bm = big_map(fam, q0)
        data = {
            "schema_version": 1,
            "family": {"kind": fam.kind, "m": fam.m, "n": fam.n},
            "q0": rational_to_string(q0),
            "summands": [
                {
                    "left_label": _label_json(s.left.label),
                    "right_label": _label_json(s.right.label),
                    "block_dim": s.block_dim,
                    "total_dim": s.total_dim,
                }
                for s in bm.summands
            ],
        }
        _emit(args, _json_dump(data))
        return 0
    report = verify_isomorphism(fam, q0)
    if args.format == "json":
        _emit(args, _json_dump(iso_report_json(report)))
    else:
        _emit(
            args,
            ("PASS" if report.passed else "FAIL")
            + f"  rank {report.basis_rank} = formula {report.dim_formula}\n",
        )
    return 0 if report.passed else 1


def cmd_verify_all(args) -> int:
    fam = _parse_family(args)
    q0 = rational_from_string(args.q)
    lines = []
    ok = True

    def report(name: str, passed: bool, detail: str = ""):
        nonlocal ok
        ok = ok and passed
        tail = f"  {detail}" if detail else ""
        lines.append(f"{'PASS' if passed else 'FAIL'}  {name}{tail}")

    G = groupoid_for(fam)
    count = G.order()
    formula = dimension_formula(fam)
    report("dimension formula", count == formula, f"|W\\0| = {count}, formula = {formula}")
    axioms = root_system(fam).check_axioms()
    report("root system axioms", axioms.passed)
    pres = hecke_poly(fam).verify_presentation()
    report("presentation relations", pres.passed, f"{pres.checked} instances")
    # length theory
    lengths_ok = True
    for w in G.elements():
        if G.length(G.inverse(w)) != G.length(w):
            lengths_ok = False
        word = G.canonical_reduced_word(w)
        if len(word.letters) != G.length(w) or G.evaluate(word) != w:
            lengths_ok = False
    report("length theory", lengths_ok)
    if count <= args.braid_cap:
        braid_ok = all(G.braid_connected(w) for w in G.elements())
        report("braid connectivity", braid_ok, f"{count} elements")
    else:
        lines.append(f"SKIP  braid connectivity  ({count} > cap {args.braid_cap})")
    try:
        iso = verify_isomorphism(fam, q0)
        report(
            "isomorphism",
            iso.passed,
            f"rank {iso.basis_rank} = formula {iso.dim_formula}",
        )
    except ValueError as exc:
        report("isomorphism", False, str(exc))
    if count <= args.structconst_cap:
        alg = hecke_poly(fam)
        table = alg.structure_constants()
        integral = all(
            c.min_exp >= 0 for row in table.values() for _, c in row
        )
        report("Z[q] structure constants", integral, f"{len(table)} products")
    else:
        lines.append(f"SKIP  Z[q] structure constants  ({count} > cap {args.structconst_cap})")
    _emit(args, "\n".join(lines) + ("\nOK\n" if ok else "\nFAILED\n"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superhecke",
        description=__doc__,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_opts(p):
        p.add_argument("--family", choices=["A", "B", "CD", "C"], required=True)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--format", choices=["json", "dot", "text"], default="text")
        p.add_argument("--output")
        p.add_argument("--scalar", choices=["poly", "eval"], default="poly")
        p.add_argument("--q", default="2")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-elements", dest="max_elements", type=int, default=500_000)

    p = sub.add_parser("domains", help="list the domain set")
    add_family_opts(p)
    p.set_defaults(func=cmd_domains)

    p = sub.add_parser("dynkin", help="per-domain diagrams and the orbit graph")
    add_family_opts(p)
    p.set_defaults(func=cmd_dynkin)

    p = sub.add_parser("enumerate", help="all nonzero groupoid elements")
    add_family_opts(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dim", help="|W \\ 0| against the closed formula")
    add_family_opts(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("words", help="length / reduced words / braid check of a word")
    add_family_opts(p)
    p.add_argument("--base", required=True, help="domain as JSON")
    p.add_argument("--letters", required=True, help="comma-separated generator indices")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("verify", help="root-system axioms and presentation relations")
    add_family_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("structconst", help="structure-constant table as JSON")
    add_family_opts(p)
    p.set_defaults(func=cmd_structconst)

    p = sub.add_parser("poincare", help="Poincare polynomial of a classical group")
    p.add_argument("--type", choices=["A", "B", "D"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("irreps", help="irreducible representations of a classical Hecke algebra")
    p.add_argument("--type", choices=["A", "B", "D"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", default="2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", action="store_true", help="use the regular-module splitting oracle")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_irreps)

    p = sub.add_parser("reps", help="box-tensor representations: build summands or verify the isomorphism")
    add_family_opts(p)
    p.add_argument("--mode", choices=["build", "verify"], default="verify")
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("verify-all", help="full verification suite for one family")
    add_family_opts(p)
    p.add_argument("--braid-cap", dest="braid_cap", type=int, default=200)
    p.add_argument("--structconst-cap", dest="structconst_cap", type=int, default=200)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
