"""Command-line entry point: ``beauvillekit <subcommand> ...``."""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import CONVENTION, __version__
from .beauville import (
    EXIT_CODES,
    BeauvilleCertificate,
    InputError,
    SearchStrategy,
    brute_force_triples,
    load_group,
    maximal_overcount_bound,
    quad_sum_count,
    reverify,
    search_structure,
    torus_guided_search,
)
from .catalog import parse_group_spec
from .chars import character_table, character_zeta, min_nontrivial_degree, verify_soft_bound
from .exactmath import cyclotomic, cyclotomic_resultant, prime_powers_upto, resultant
from .grp import (
    LATTICE_CAP,
    GroupOverflowError,
    abstractly_regular_mask,
    conjugacy_classes,
    format_cycles,
    subgroup_index_zeta,
)
from .ree import check_ree_lemma, ree_class_fusion_bound
from .report import Document
from .tori import (
    count_regular_in_torus,
    gcd_divides_center,
    singer_pair,
    torus_pair_for,
    verify_torus_intersection,
)

EXIT_INPUT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        a, b = (int(p) for p in parts)
    except ValueError:
        raise InputError(f"bad range {text!r}, expected a..b") from None
    if a > b:
        raise InputError(f"empty range {text!r}")
    return a, b


def parse_number(text: str) -> Fraction | float:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad number {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="beauvillekit", description="Beauville structures and finite group arithmetic")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--threads", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("search", help="search for an unmixed Beauville structure")
    s.add_argument("spec")
    s.add_argument("--mode", default="exhaustive-classes",
                   choices=["exhaustive-classes", "torus-guided", "random-seeded"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=10 ** 7, help="maximum candidate pairs")
    s.add_argument("--time-budget", type=float, default=None, help="seconds")
    s.add_argument("--level", choices=["group", "quotient"], default="group")
    s.add_argument("-o", "--output", help="also write the certificate to this file")

    v = sub.add_parser("verify", help="re-verify a certificate file")
    v.add_argument("certificate")

    t = sub.add_parser("tori", help="torus pair and centre check per q")
    t.add_argument("type")
    t.add_argument("r", type=int)
    t.add_argument("--q-range", default="2..100")

    g = sub.add_parser("singer", help="Singer-type tori in SL_{r+1}(q)")
    g.add_argument("r", type=int)
    g.add_argument("q", type=int)
    g.add_argument("--check-intersection", action="store_true")

    c = sub.add_parser("charbound", help="character bound on abstractly regular elements")
    c.add_argument("spec")
    c.add_argument("--seed", type=int, default=0)

    r = sub.add_parser("ree", help="torus arithmetic for 2F4(2^(2f+1))")
    r.add_argument("--f-range", default="1..6")

    n = sub.add_parser("count", help="triples xy = z inside a union of classes")
    n.add_argument("spec")
    n.add_argument("--classes", required=True, help="comma-separated class indices")
    n.add_argument("--seed", type=int, default=0)

    k = sub.add_parser("classes", help="list conjugacy classes")
    k.add_argument("spec")

    x = sub.add_parser("resultant", help="resultant of two cyclotomic polynomials")
    x.add_argument("a", type=int)
    x.add_argument("b", type=int)

    z = sub.add_parser("zeta", help="character zeta and maximal-subgroup zeta")
    z.add_argument("spec")
    z.add_argument("--t", required=True)
    z.add_argument("--seed", type=int, default=0)
    return p


# ---------------------------------------------------------------- commands

def cmd_search(args) -> tuple[Document | str, int]:
    strategy = SearchStrategy(args.mode, args.seed, args.budget, args.time_budget, args.threads)
    if args.mode == "torus-guided":
        spec = parse_group_spec(args.spec)
        if spec.kind not in ("SL", "PSL"):
            raise InputError(f"torus-guided search needs SL or PSL, got {args.spec!r}")
        level = "quotient" if spec.kind == "PSL" else args.level
        rep = torus_guided_search(spec.n - 1, spec.q, level, strategy)
    else:
        G, spec = load_group(args.spec, args.level)
        rep = search_structure(G, strategy, spec=spec, level=args.level)
    if rep.certificate is not None and args.output:
        Path(args.output).write_text(rep.certificate.serialize())
    if args.format == "structured":
        return rep.serialize(), rep.exit_code
    doc = Document("search")
    doc.meta.update(group=rep.group, order=str(rep.group_order), status=rep.status, mode=rep.mode,
                    seed=str(rep.seed))
    doc.add("transcript", {f"{i + 1}": line for i, line in enumerate(rep.transcript)})
    if rep.certificate:
        c = rep.certificate
        doc.add("elements", c.elements)
        doc.add("orders", c.orders)
        doc.add("check", {"closures": c.closure_orders, "sigma_intersection": c.sigma_intersection,
                          "shortcut": c.shortcut})
    return doc, rep.exit_code


def cmd_verify(args):
    try:
        text = Path(args.certificate).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.certificate!r}: {exc.strerror}") from None
    cert = BeauvilleCertificate.parse(text)
    v = reverify(cert)
    doc = Document("verify")
    doc.meta.update(group=cert.group, convention=cert.convention, result="verified" if v.ok else "refused",
                    reason=v.reason)
    return doc, 0 if v.ok else 1


def cmd_tori(args):
    a, b = parse_range(args.q_range)
    try:
        pair = torus_pair_for(args.type, args.r)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = Document("tori")
    doc.meta.update(type=pair.type, case=pair.case, rank=str(pair.rank), order1=str(pair.order1),
                    order2=str(pair.order2), stab1=",".join(map(str, pair.stab1 or [])) or "-",
                    stab2=",".join(map(str, pair.stab2 or [])) or "-")
    ok = True
    for q in prime_powers_upto(b):
        if q < a:
            continue
        c = gcd_divides_center(pair, q)
        ok &= c.passed
        doc.add(f"row.{q}", {"q": q, "T1": c.order1, "T2": c.order2, "gcd": c.gcd, "center": c.center,
                             "resultant": c.resultant, "verdict": c.passed})
    return doc, 0 if ok else 1


def cmd_singer(args):
    try:
        data = singer_pair(args.r, args.q)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    c1, c2 = count_regular_in_torus(data)
    doc = Document("singer")
    fmt = lambda M: "[" + ";".join(",".join(map(str, r)) for r in M) + "]"
    doc.meta.update(r=str(data.r), q=str(data.q), t1=fmt(data.t1), t2=fmt(data.t2))
    ok = True
    for c, reg in ((c1, data.t1_regular), (c2, data.t2_regular)):
        ok &= c.within_bound and c.matrix_check
        doc.add(f"row.T{c.torus}", {"torus": f"T{c.torus}", "order": c.order, "regular": c.regular,
                                    "nonregular": c.nonregular, "bound": c.bound, "generator_regular": reg,
                                    "verdict": c.within_bound and c.matrix_check})
    if args.check_intersection:
        rep = verify_torus_intersection(args.r, args.q)
        ok &= rep.passed
        doc.add("intersection", {"group_order": rep.group_order, "center": rep.center_order,
                                 "conjugates": rep.conjugates_checked, "failures": rep.failures,
                                 "verdict": rep.passed})
    return doc, 0 if ok else 1


def cmd_charbound(args):
    G, spec = load_group(args.spec)
    T = character_table(G, seed=args.seed)
    ar = abstractly_regular_mask(G)
    doc = Document("charbound")
    doc.meta.update(group=spec, order=str(G.order), seed=str(args.seed))
    ok = True
    for ci, C in enumerate(conjugacy_classes(G)):
        if not ar[C.representative]:
            continue
        r = verify_soft_bound(G, C.representative, T)
        ok &= r.holds
        doc.add(f"row.{ci}", {"class": ci, "order": G.element_order(C.representative), "A": len(r.A),
                              "n": r.n, "index": r.index, "bound": round(r.bound, 6),
                              "max_abs_chi": round(r.max_abs_char_value, 6), "violations": r.violations,
                              "verdict": r.holds})
    return doc, 0 if ok else 1


def cmd_ree(args):
    a, b = parse_range(args.f_range)
    if a < 1:
        raise InputError(f"f must be at least 1 in {args.f_range!r}")
    doc = Document("ree")
    ok = True
    for f in range(a, b + 1):
        rep = check_ree_lemma(f)
        fb = ree_class_fusion_bound(f)
        ok &= rep.passed
        doc.add(f"row.{f}", {"f": f, "q": rep.tau.q, "tau1": rep.tau.tau1, "tau2": rep.tau.tau2,
                             "mod12": rep.congruent_mod_12, "phi1": rep.phi[0], "phi2": rep.phi[1],
                             "phi_bound": "n/a" if rep.phi_bound is None else rep.phi_bound,
                             "coprime": rep.coprime, "classes": fb.guaranteed_classes,
                             "verdict": rep.passed})
    return doc, 0 if ok else 1


def _class_ids(text: str, G) -> list[int]:
    out = []
    for tok in text.split(","):
        try:
            i = int(tok)
        except ValueError:
            raise InputError(f"bad class index {tok!r}") from None
        if not 0 <= i < len(conjugacy_classes(G)):
            raise InputError(f"class index {tok!r} out of range")
        out.append(i)
    return sorted(set(out))


def cmd_count(args):
    G, spec = load_group(args.spec)
    ids = _class_ids(args.classes, G)
    T = character_table(G, seed=args.seed)
    n = quad_sum_count(G, ids, T)
    members = [int(m) for i in ids for m in conjugacy_classes(G)[i].members]
    brute = brute_force_triples(G, members)
    doc = Document("count")
    doc.meta.update(group=spec, classes=",".join(map(str, ids)), elements=str(len(members)))
    vals = {"character_count": n, "enumerated": brute, "agree": n == brute}
    if G.order <= LATTICE_CAP:
        o = maximal_overcount_bound(G, ids)
        vals.update(maximal_subgroups=o.subgroups, overcount=o.exact, coarse_bound=o.coarse)
    doc.add("counts", vals)
    return doc, 0 if n == brute else 1


def cmd_classes(args):
    G, spec = load_group(args.spec)
    doc = Document("classes")
    doc.meta.update(group=spec, order=str(G.order), convention=CONVENTION)
    for i, C in enumerate(conjugacy_classes(G)):
        doc.add(f"row.{i}", {"class": i, "order": G.element_order(C.representative), "size": C.size,
                             "representative": format_cycles(G.perm(C.representative))})
    return doc, 0


def cmd_resultant(args):
    if args.a < 1 or args.b < 1:
        raise InputError("indices must be positive")
    if args.a == args.b:
        raise InputError(f"equal indices {args.a} and {args.b} are not covered")
    closed = cyclotomic_resultant(args.a, args.b)
    sylv = resultant(cyclotomic(args.a), cyclotomic(args.b))
    doc = Document("resultant")
    doc.add("result", {"a": args.a, "b": args.b, "closed_form": closed, "sylvester": sylv,
                       "agree": closed == sylv})
    return doc, 0 if closed == sylv else 1


def cmd_zeta(args):
    G, spec = load_group(args.spec)
    t = parse_number(args.t)
    if t <= 0:
        raise InputError(f"t must be positive, got {args.t!r}")
    T = character_table(G, seed=args.seed)
    vals = {"t": args.t, "character_zeta": character_zeta(T, float(t)),
            "min_degree": min_nontrivial_degree(T) if len(T) > 1 else None}
    try:
        vals["subgroup_zeta"] = subgroup_index_zeta(G, t)
    except GroupOverflowError:
        vals["subgroup_zeta"] = None
    doc = Document("zeta")
    doc.meta.update(group=spec, order=str(G.order))
    doc.add("zeta", vals)
    return doc, 0


COMMANDS = {
    "search": cmd_search, "verify": cmd_verify, "tori": cmd_tori, "singer": cmd_singer,
    "charbound": cmd_charbound, "ree": cmd_ree, "count": cmd_count, "classes": cmd_classes,
    "resultant": cmd_resultant, "zeta": cmd_zeta,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise InputError("--threads must be at least 1")
        result, code = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except GroupOverflowError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CODES["inconclusive"]
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    if isinstance(result, str):
        out.write(result)
    else:
        out.write(result.structured() if args.format == "structured" else result.text())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
