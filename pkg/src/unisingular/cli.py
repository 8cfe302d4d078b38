"""Command-line interface: covering searches and certificate verification,
affine-group certification by independent oracles, F2 witness
representations, character-table verdicts, the L2(q) classifier, the
n-catalog, and reproduction of the published arithmetic tables.

Every subcommand prints JSON on stdout and exits 0 on success; failures
print a structured error object and exit nonzero.
"""

import argparse
import csv
import importlib.resources as resources
import json
import sys

from .errors import UnisingularError
from . import catalog as cat
from .affine import (
    AffineGroup,
    LinearCharacter,
    cyclic_sweep_primes,
    is_unisingular_monomial,
    permutation_model,
    triple_oracle_agreement,
)
from .chartab import char_report, load_table, psl2_classify
from .cover import (
    CoverWitness,
    covers,
    search_cover,
    verify_witness,
)
from .field import FieldSpec, FMatrix, hyperplanes
from .groups import MatGroup, generating_set, irreducible_cyclic_generator, ord_mod


def _cmd_cover(args):
    w = search_cover(args.r, args.p, d=args.d, strategy=args.strategy,
                     threads=args.threads)
    if w is None:
        return {"covered": False, "r": args.r, "p": args.p,
                "exhausted": True}, 0
    if not verify_witness(w):
        return {"error": "InvariantViolation",
                "message": "witness failed re-verification"}, 1
    obj = w.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(obj, fh, indent=2)
    return obj, 0


def _cmd_verify(args):
    with open(args.cert) as fh:
        w = CoverWitness.from_json(json.load(fh))
    ok = verify_witness(w)
    return {"verified": ok, "r": w.r, "p": w.p, "d": w.d,
            "normal": w.normal}, 0 if ok else 1


def _parse_h_spec(spec_text, r, d):
    "Build the H generators for certify-affine from the --h descriptor."
    if spec_text.startswith("cyclic:") or spec_text.startswith("cyclic-inv:"):
        inv = spec_text.startswith("cyclic-inv:")
        p = int(spec_text.split(":", 1)[1])
        if d != ord_mod(r, p):
            raise UnisingularError(
                "d=%d does not match the minimal faithful dimension %d"
                % (d, ord_mod(r, p)))
        model = irreducible_cyclic_generator(r, p)
        gens = [model.g]
        if inv:
            spec = model.spec
            minus = FMatrix(spec, [[(r - 1) if i == j else 0
                                    for j in range(d)] for i in range(d)])
            gens.append(minus)
        return gens, ("C_%d x C_2" % p if inv else "C_%d" % p)
    if spec_text == "a6-on-f3-4":
        if (r, d) != (3, 4):
            raise UnisingularError("a6-on-f3-4 requires r=3, d=4")
        group, _ = cat.a6_on_f3_4()
        return generating_set(group.elements()), "derived isometry group (360)"
    raise UnisingularError("unknown H descriptor %r" % spec_text)


def _cmd_certify_affine(args):
    gens, hname = _parse_h_spec(args.h, args.r, args.d)
    affine = AffineGroup(args.r, args.d, gens)
    spec = affine.spec
    oracles = (["covering", "monomial", "perm"] if args.oracle == "all"
               else [args.oracle])
    hgroup = MatGroup(spec, gens)
    for phi in hyperplanes(spec):
        char = LinearCharacter(phi)
        verdicts = {}
        if "covering" in oracles:
            verdicts["covering"] = covers(hgroup, phi.kernel()).covered
        if "monomial" in oracles:
            verdicts["monomial"] = is_unisingular_monomial(affine, char)
        if "perm" in oracles:
            _, v1, v2 = permutation_model(affine, char)
            verdicts["perm"] = v1 and v2
        if len(set(verdicts.values())) > 1:
            return {"error": "InvariantViolation",
                    "message": "oracle disagreement at normal %d: %r"
                               % (phi.index(), verdicts)}, 1
        if all(verdicts.values()):
            return {"r": args.r, "d": args.d, "h": hname,
                    "normal": phi.index(), "oracles": verdicts,
                    "unisingular": True,
                    "group_order": affine.order()}, 0
    return {"r": args.r, "d": args.d, "h": hname, "unisingular": False,
            "exhausted": True}, 0


def _cmd_f2_witness(args):
    from .f2 import agl1_witness, centralizer_dim_f2, f2_realize, is_unisingular_f2, wreath

    if args.n == 4:
        rep = agl1_witness(9)
    elif args.n in (8, 12):
        rep = wreath(agl1_witness(9), args.n // 4)
    elif args.n == 11:
        rep = f2_realize(11)
    else:
        raise UnisingularError(
            "no bundled F2 construction for n=%d (have 4, 8, 11, 12)" % args.n)
    checks = {"unisingular": is_unisingular_f2(rep)}
    if args.check_irreducible:
        checks["centralizer_dim"] = centralizer_dim_f2(rep)
        checks["absolutely_irreducible"] = checks["centralizer_dim"] == 1
    obj = rep.to_json()
    obj["checks"] = checks
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(obj, fh, indent=2)
    ok = checks["unisingular"] and checks.get("absolutely_irreducible", True)
    return obj, 0 if ok else 1


def _resolve_table(name):
    bundled = resources.files("unisingular") / "data" / name
    if bundled.is_file():
        with resources.as_file(bundled) as p:
            return load_table(str(p))
    return load_table(name)


def _cmd_chartab(args):
    table = _resolve_table(args.file)
    if args.character:
        return char_report(table, args.character, odd_only=args.odd_only), 0
    return {"table": table.name, "order": table.order,
            "classes": len(table.classes),
            "characters": table.char_names(),
            "partial": table.partial}, 0


def _cmd_psl2(args):
    return {"q": args.q,
            "verdicts": [v.to_json() for v in psl2_classify(args.q)]}, 0


def _cmd_classify(args):
    if args.all:
        entries = [e.to_json() for e in cat.full_classification()]
        if args.csv:
            with open(args.csv, "w", newline="") as fh:
                wr = csv.DictWriter(fh, fieldnames=["n", "status", "family",
                                                    "paperRow",
                                                    "deskCertifiable",
                                                    "flags"])
                wr.writeheader()
                for e in entries:
                    row = dict(e)
                    row["flags"] = ";".join(row["flags"])
                    wr.writerow(row)
        return {"entries": entries}, 0
    entry = cat.classify_n(args.n)
    obj = entry.to_json()
    if entry.status == "witness" and args.witness:
        obj["certificate"] = cat.build_witness(
            args.n, strict=args.strict_desk).to_json()
    return obj, 0


def _cmd_table1(args):
    computed = cat.table1()
    return {"ord3": computed,
            "expected": cat.TABLE1_EXPECTED,
            "match": computed == cat.TABLE1_EXPECTED}, 0


def _cmd_artin(args):
    computed = cat.artin_list(args.bound)
    obj = {"bound": args.bound, "primes": computed}
    if args.bound == 250:
        obj["match"] = tuple(computed) == cat.ARTIN_EXPECTED_250
    return obj, 0


def _cmd_selftest(args):
    passed, failed = [], []

    def check(name, ok):
        (passed if ok else failed).append(name)

    check("table1", cat.table1() == cat.TABLE1_EXPECTED)
    check("artin-250", tuple(cat.artin_list(250)) == cat.ARTIN_EXPECTED_250)
    for (r, p) in ((3, 5), (3, 7), (5, 7)):
        check("no-cover-%d-%d" % (r, p), search_cover(r, p) is None)
    for (r, p) in ((3, 11), (3, 41)):
        w = search_cover(r, p)
        check("cover-%d-%d" % (r, p), w is not None and verify_witness(w))
    table = _resolve_table("table6.tbl")
    rep = char_report(table, "rho13")
    check("rho13", rep["unisingular"] is True and rep["sympF2"] == "certified")
    check("psl2-53", not psl2_classify(53)[2].symp_f2)
    _, uni, irr = cat.dc_construction(3, 3)
    check("dc-3-3", uni and irr)
    ents = cat.full_classification()
    check("catalog-partition",
          sorted(e.status for e in ents).count("none") == 11
          and sum(e.status == "open" for e in ents) == 7
          and sum(e.status == "witness" for e in ents) == 106)
    sweeps = []
    for r in (2, 3, 5):
        for p in cyclic_sweep_primes(r, args.exhaustive_bound):
            _, _, mism = triple_oracle_agreement(r, p)
            sweeps.append(((r, p), mism))
    check("triple-oracle-sweep", all(not m for _, m in sweeps))
    ok = not failed
    return {"passed": passed, "failed": failed, "ok": ok}, 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="unisingular",
        description="Covering and unisingularity certification toolkit")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--strict-desk", action="store_true",
                        dest="strict_desk")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cover", help="search for a covering hyperplane")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--strategy", default="exhaustive-least",
                   choices=["exhaustive-least", "parallel-first"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("verify", help="re-verify a covering certificate")
    p.add_argument("--cert", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("certify-affine",
                       help="certify an affine group by independent oracles")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--h", required=True,
                   help="cyclic:P | cyclic-inv:P | a6-on-f3-4")
    p.add_argument("--oracle", default="all",
                   choices=["covering", "monomial", "perm", "all"])
    p.set_defaults(func=_cmd_certify_affine)

    p = sub.add_parser("f2-witness", help="build a GF(2) witness representation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check-irreducible", action="store_true",
                   dest="check_irreducible")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_f2_witness)

    p = sub.add_parser("chartab", help="character table verdicts")
    p.add_argument("--file", required=True)
    p.add_argument("--character", default=None)
    p.add_argument("--odd-only", action="store_true", dest="odd_only",
                   default=True)
    p.set_defaults(func=_cmd_chartab)

    p = sub.add_parser("psl2", help="L2(q) classifier")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_psl2)

    p = sub.add_parser("classify", help="catalog lookup")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--all", action="store_true")
    p.add_argument("--csv", default=None)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("table1", help="order of 3 modulo the tabulated primes")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("artin", help="primes where 3 is a primitive root")
    p.add_argument("--bound", type=int, default=250)
    p.set_defaults(func=_cmd_artin)

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--exhaustive-bound", type=int, default=2187,
                   dest="exhaustive_bound")
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        obj, code = args.func(args)
    except UnisingularError as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)},
                  sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 1
    except OSError as exc:
        json.dump({"error": "IOError", "message": str(exc)},
                  sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 1
    json.dump(obj, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
