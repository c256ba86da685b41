"""Command line interface.

Exit codes: 0 = success / verdict holds, 1 = counterexample found,
2 = usage or format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .chirotope import alternating_chirotope, parse_chirotope
from .circuits import circuits_from_chirotope
from .constructions import (
    composite_construction,
    disjoint_cocircuit_construction,
    search_k_neighborly,
)
from .cyclic import CValueTable
from .errors import DomainError, FormatError, OrimatError
from .neighborly import o_vector, tope_graph_edges
from .signvec import SignVector


def _add_common(p: argparse.ArgumentParser, db: bool = False):
    p.add_argument("--rank", "-r", type=int, required=True)
    p.add_argument("--elements", "-n", type=int, required=True)
    p.add_argument("--base-order", choices=["lex", "colex"], default="lex")
    p.add_argument(
        "--file",
        help="chirotope text file ('-' for stdin); omit for the alternating matroid"
        if not db
        else "database file ('-' for stdin)",
        default=None if not db else "-",
    )


def _read_chirotope(args):
    if args.file is None:
        return alternating_chirotope(args.rank, args.elements)
    text = (
        sys.stdin.read() if args.file == "-" else open(args.file).read()
    ).strip().split()[0]
    return parse_chirotope(text, args.rank, args.elements, base_order=args.base_order)


def _db_lines(args):
    return sys.stdin if args.file == "-" else open(args.file)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orimat")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("circuits", help="print normalized circuits, one per line")
    _add_common(p)

    p = sub.add_parser("ovector", help="o-vector and m-values as JSON")
    _add_common(p)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--tope-graph", metavar="PATH", help="also write the tope graph edge list")

    p = sub.add_parser("mvalue", help="number of k-neighborly reorientations")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("dual", help="print the dual chirotope")
    _add_common(p)

    p = sub.add_parser("minor", help="print a single-element minor")
    _add_common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--delete", type=int, metavar="E")
    group.add_argument("--contract", type=int, metavar="E")

    p = sub.add_parser("reorient", help="print the reoriented chirotope")
    _add_common(p)
    p.add_argument("--set", required=True, metavar="ELEMS", help="e.g. 1,3,5")

    p = sub.add_parser("construct", help="find a k-neighborly reorientation")
    _add_common(p)
    p.add_argument("--method", choices=["search", "cocircuits", "composite"], default="search")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("cvalue", help="c_r(n,k) for the alternating matroid")
    p.add_argument("--rank", "-r", type=int, required=True)
    p.add_argument("--elements", "-n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--show-provenance", action="store_true")
    p.add_argument("--cache", metavar="PATH", help="memo cache file to load/update")

    for name, help_text in [
        ("roudneff", "max m(M,k) over a database vs c_r(n,k)"),
        ("mcmullen", "min m(M,k) over a database (existence of reorientations)"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _add_common(p, db=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--checkpoint", metavar="PATH")

    p = sub.add_parser("audit", help="deletion/contraction inequality per element")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("reduce", help="finite reduction check for (rank, k)")
    p.add_argument("--rank", "-r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--db",
        action="append",
        default=[],
        metavar="RANK:N:PATH",
        help="base-case database, repeatable",
    )
    p.add_argument("--base-order", choices=["lex", "colex"], default="lex")
    return parser


def _cmd_circuits(args) -> int:
    cs = circuits_from_chirotope(_read_chirotope(args))
    for x in cs.members:
        print(x)
    return 0


def _cmd_ovector(args) -> int:
    cs = circuits_from_chirotope(_read_chirotope(args))
    ov = o_vector(cs, workers=args.threads)
    print(
        json.dumps(
            {"r": ov.r, "n": ov.n, "ovector": list(ov.entries), "m": list(ov.m_values())}
        )
    )
    if args.tope_graph:
        with open(args.tope_graph, "w") as fh:
            for a, b in tope_graph_edges(cs):
                fh.write(f"{a} {b}\n")
    return 0


def _cmd_mvalue(args) -> int:
    cs = circuits_from_chirotope(_read_chirotope(args))
    print(o_vector(cs).m(args.k))
    return 0


def _cmd_dual(args) -> int:
    print(_read_chirotope(args).dual().serialize())
    return 0


def _cmd_minor(args) -> int:
    chi = _read_chirotope(args)
    chi = chi.delete(args.delete) if args.delete else chi.contract(args.contract)
    print(chi.serialize())
    return 0


def _cmd_reorient(args) -> int:
    r_set = [int(x) for x in args.set.split(",") if x]
    print(_read_chirotope(args).reorient(r_set).serialize())
    return 0


def _cmd_construct(args) -> int:
    chi = _read_chirotope(args)
    if args.method == "search":
        witness = search_k_neighborly(chi, args.k)
        if witness is None:
            print("none")
            return 1
    elif args.method == "cocircuits":
        witness = disjoint_cocircuit_construction(chi, args.k)
    else:
        witness = composite_construction(chi, args.k)
    print(f"R={','.join(map(str, witness.r_set)) or '-'} level={witness.k}")
    return 0


def _cmd_cvalue(args) -> int:
    table = CValueTable()
    if args.cache:
        try:
            table.load(args.cache)
        except FileNotFoundError:
            pass
    entry = table.entry(args.rank, args.elements, args.k)
    print(f"{entry.value} {entry.provenance}" if args.show_provenance else entry.value)
    if args.cache:
        table.save(args.cache)
    return 0


def _cmd_reports(args) -> int:
    skip = 0
    prior_rows = []
    if args.checkpoint:
        skip, prior = harness.load_checkpoint(args.checkpoint)
        prior_rows = [
            harness.ReportRow(
                d["id"], tuple(d["ovector"]), tuple(d["m"]), tuple(d["attains"])
            )
            for d in prior
        ]
    records = list(
        harness.parse_database(_db_lines(args), args.rank, args.elements)
    )
    table = CValueTable()
    new_rows = []
    for row in harness.compute_rows(
        (rec for rec in records), args.base_order, table, args.threads, skip_ids_upto=skip
    ):
        new_rows.append(row)
        if args.checkpoint:
            harness.append_checkpoint(args.checkpoint, row)
    rows = sorted(prior_rows + new_rows, key=lambda row: row.id)
    for row in rows:
        if args.format == "json":
            print(row.to_json())
        else:
            print(
                f"{row.id},{' '.join(map(str, row.ovector))},"
                f"{' '.join(map(str, row.m))},{' '.join(str(int(a)) for a in row.attains)}"
            )
    k = args.k
    c_bound = table.c_value(args.rank, args.elements, k)
    ms = [row.m[k] for row in rows]
    if args.command == "roudneff":
        max_m = max(ms)
        attaining = sum(1 for v in ms if v == c_bound)
        holds = max_m <= c_bound
        print(
            json.dumps(
                {
                    "verdict": "holds" if holds else "counterexample",
                    "max_m": max_m,
                    "c": c_bound,
                    "attaining": attaining,
                    "argmax_ids": [row.id for row in rows if row.m[k] == max_m],
                }
            ),
            file=sys.stderr,
        )
        return 0 if holds else 1
    min_m = min(ms)
    zero_ids = [row.id for row in rows if row.m[k] == 0]
    print(
        json.dumps(
            {
                "verdict": "all-have-witness" if min_m > 0 else "zero-m-witnesses",
                "min_m": min_m,
                "zero_ids": zero_ids,
            }
        ),
        file=sys.stderr,
    )
    return 0 if min_m > 0 else 1


def _cmd_audit(args) -> int:
    chi = _read_chirotope(args)
    triples = harness.deletion_contraction_audit(chi, args.k)
    ok = True
    for t in triples:
        print(
            f"e={t.element} m={t.m_full} m_delete={t.m_delete} "
            f"m_contract={t.m_contract} holds={t.holds}"
        )
        ok = ok and t.holds
    return 0 if ok else 1


def _cmd_reduce(args) -> int:
    db_map = {}
    for db_arg in args.db:
        rank_s, n_s, path = db_arg.split(":", 2)
        r_prime, n_prime = int(rank_s), int(n_s)
        db_map[(r_prime, n_prime)] = list(
            harness.parse_database(open(path), r_prime, n_prime)
        )
    verdict = harness.finite_reduction_check(
        args.rank, args.k, db_map, base_order=args.base_order
    )
    for line in verdict.detail:
        print(line)
    if verdict.confirmed:
        print("confirmed")
        return 0
    print("incomplete-evidence" if verdict.incomplete else "counterexample")
    return 0 if verdict.incomplete else 1


_COMMANDS = {
    "circuits": _cmd_circuits,
    "ovector": _cmd_ovector,
    "mvalue": _cmd_mvalue,
    "dual": _cmd_dual,
    "minor": _cmd_minor,
    "reorient": _cmd_reorient,
    "construct": _cmd_construct,
    "cvalue": _cmd_cvalue,
    "roudneff": _cmd_reports,
    "mcmullen": _cmd_reports,
    "audit": _cmd_audit,
    "reduce": _cmd_reduce,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except (FormatError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OrimatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
