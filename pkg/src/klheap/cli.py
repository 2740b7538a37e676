"""Command line interface.

Exit codes: 0 for success, 1 for a negative verdict (a predicate that
came back false, or verification failures), 2 for invalid input, 3 for
refused resource limits.
"""

from __future__ import annotations

import argparse
import csv
import json
import multiprocessing
import os
import sys

from . import deodhar, figures, hecke, heap, schubert, verify
from .errors import ConsistencyError, InputError, ResourceLimitError
from .perm import (
    Perm,
    Word,
    all_321_avoiding,
    apply_word,
    canonical_reduced_word,
    format_perm,
    format_word,
    identity,
    is_321_avoiding,
    is_321_hexagon_avoiding,
    is_hexagon_avoiding,
    is_reduced,
    length,
    parse_perm,
    parse_word,
    validate_perm,
)
from .qpoly import ZERO, QPoly, poly_json, poly_text


# ---------------------------------------------------------------- input


def _resolve_w(args) -> tuple[Word, Perm]:
    """The reduced word and permutation named by --word or --perm."""
    if getattr(args, "word", None):
        a = parse_word(args.word)
        if not is_reduced(a):
            raise InputError(f"word is not reduced: {args.word!r}")
        return a, apply_word(a)
    w = parse_perm(args.perm)
    validate_perm(w)
    return canonical_reduced_word(w), w


def _parse_x(text: str, n: int) -> Perm:
    if text.strip() == "e":
        return identity(n)
    x = parse_perm(text)
    if len(x) != n:
        raise InputError(f"rank mismatch: |x| = {len(x)}, |w| = {n}")
    return x


# --------------------------------------------------------------- output


def _emit_poly(p: QPoly, fmt: str) -> None:
    if fmt == "text":
        print(poly_text(p))
    elif fmt == "json":
        print(json.dumps(poly_json(p)))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["coeffs"])
        writer.writerow([" ".join(str(c) for c in p)])


def _sorted_items(table: dict[Perm, QPoly]) -> list[tuple[Perm, QPoly]]:
    return sorted(table.items(), key=lambda kv: (length(kv[0]), kv[0]))


def _emit_table(table: dict[Perm, QPoly], fmt: str) -> None:
    items = _sorted_items(table)
    if fmt == "text":
        for x, p in items:
            print(f"{format_perm(x)}: {poly_text(p)}")
    elif fmt == "json":
        print(
            json.dumps(
                [{"x": format_perm(x), "poly": poly_json(p)} for x, p in items]
            )
        )
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["x", "coeffs"])
        for x, p in items:
            writer.writerow([format_perm(x), " ".join(str(c) for c in p)])


# ---------------------------------------------------------------- cache


def _load_cache(path: str) -> None:
    if not os.path.exists(path):
        return
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            w = parse_perm(obj["w"])
            table = {
                parse_perm(e["x"]): tuple(e["poly"]["coeffs"]) for e in obj["entries"]
            }
            hecke.seed_kl_table(w, table)


def _save_cache(path: str) -> None:
    tables = hecke.all_cached_tables()
    if not tables:
        return
    lines = []
    for w in sorted(tables, key=lambda w: (length(w), w)):
        entries = [
            {"x": format_perm(x), "poly": poly_json(p)}
            for x, p in _sorted_items(tables[w])
        ]
        lines.append(
            json.dumps({"w": format_perm(w), "entries": entries}, separators=(",", ":"))
        )
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


# ------------------------------------------------------------- commands


def cmd_check(args) -> int:
    w = parse_perm(args.perm)
    validate_perm(w)
    flat = is_321_avoiding(w)
    hexa = is_hexagon_avoiding(w)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "perm": format_perm(w),
                    "avoids_321": flat,
                    "avoids_hexagon": hexa,
                    "avoids_321_hexagon": flat and hexa,
                }
            )
        )
    else:
        yn = {True: "yes", False: "no"}
        print(f"321-avoiding: {yn[flat]}")
        print(f"hexagon-avoiding: {yn[hexa]}")
        print(f"321-hexagon-avoiding: {yn[flat and hexa]}")
    return 0 if flat and hexa else 1


def cmd_kl(args) -> int:
    a, w = _resolve_w(args)
    x = _parse_x(args.x, len(w))
    if args.oracle:
        p = hecke.kl_table(w).get(x, ZERO)
    else:
        if not is_321_hexagon_avoiding(w):
            raise InputError(
                f"{format_perm(w)} is not 321-hexagon-avoiding; the mask "
                "statistic does not apply, rerun with --oracle"
            )
        p = deodhar.deodhar_table(a, len(w), jobs=args.jobs).get(x, ZERO)
    _emit_poly(p, args.format)
    return 0


def cmd_table(args) -> int:
    _, w = _resolve_w(args)
    _emit_table(hecke.kl_table(w), args.format)
    return 0


def cmd_poincare(args) -> int:
    _, w = _resolve_w(args)
    _emit_poly(hecke.poincare_ih(w), args.format)
    return 0


def cmd_tight(args) -> int:
    _, w = _resolve_w(args)
    tight = hecke.is_tight(w)
    if args.format == "json":
        print(json.dumps({"perm": format_perm(w), "tight": tight}))
    else:
        print(f"tight: {'yes' if tight else 'no'}")
    return 0 if tight else 1


def cmd_singular(args) -> int:
    a, w = _resolve_w(args)
    locus = schubert.max_singular_locus(a, len(w))
    if args.oracle:
        oracle = schubert.max_singular_locus_oracle(w)
        if oracle != locus:
            raise ConsistencyError(
                f"heap locus {locus} disagrees with table locus {oracle}"
            )
    lw = length(w)
    rows = [(y, lw - length(y)) for y in locus]
    triples = schubert.singular_triples(a) if args.triples else None
    if args.format == "json":
        out = {
            "w": format_perm(w),
            "locus": [{"x": format_perm(y), "codim": c} for y, c in rows],
        }
        if triples is not None:
            out["triples"] = [list(t) for t in triples]
        print(json.dumps(out))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["x", "codim"])
        for y, c in rows:
            writer.writerow([format_perm(y), c])
    else:
        for y, c in rows:
            print(f"{format_perm(y)} codim={c}")
        if triples is not None:
            for t in triples:
                print(f"triple left={t.left} bottom={t.bottom} right={t.right}")
    return 0


def cmd_heap(args) -> int:
    a, _ = _resolve_w(args)
    h = heap.build_heap(a)
    mask = deodhar.parse_mask(args.mask) if args.mask else None
    if args.format == "json":
        obj = heap.heap_json(h)
        if mask is not None:
            rec = deodhar.defect_set(a, mask)
            obj["mask"] = list(mask)
            obj["defects"] = sorted(rec.defects)
            obj["zero_defects"] = sorted(rec.zero_defects)
            obj["one_defects"] = sorted(rec.one_defects)
        print(json.dumps(obj))
    else:
        print(heap.render_ascii(h, mask))
    return 0


def _mask_rows_task(packed):
    a, n, prefix, x = packed
    r = len(a)
    tail = r - len(prefix)
    rows = []
    for m in range(1 << tail):
        mask = prefix + tuple((m >> (tail - 1 - b)) & 1 for b in range(tail))
        rec = deodhar.defect_set(a, mask, n)
        if x is None or rec.product == x:
            rows.append((mask, rec.product, tuple(sorted(rec.defects))))
    return rows


def cmd_masks(args) -> int:
    a = parse_word(args.word)
    if not is_reduced(a):
        raise InputError(f"word is not reduced: {args.word!r}")
    if len(a) > deodhar.MAX_MASK_WORD:
        raise ResourceLimitError(
            f"word length {len(a)} exceeds the mask enumeration limit "
            f"{deodhar.MAX_MASK_WORD}"
        )
    n = max(a) + 1
    x = _parse_x(args.x, n) if args.x else None
    r = len(a)
    if args.jobs > 1 and r >= 10:
        t = min(max(args.jobs - 1, 2).bit_length() + 1, r - 4, 8)
        prefixes = [
            tuple((m >> (t - 1 - b)) & 1 for b in range(t)) for m in range(1 << t)
        ]
        with multiprocessing.Pool(args.jobs) as pool:
            chunks = pool.map(
                _mask_rows_task, [(a, n, pre, x) for pre in prefixes]
            )
        rows = [row for chunk in chunks for row in chunk]
    else:
        rows = _mask_rows_task((a, n, (), x))
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "mask": list(mask),
                        "x": format_perm(prod),
                        "defects": list(defects),
                    }
                    for mask, prod, defects in rows
                ]
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["mask", "x", "defects"])
        for mask, prod, defects in rows:
            writer.writerow(
                [
                    deodhar.format_mask(mask),
                    format_perm(prod),
                    " ".join(str(d) for d in defects),
                ]
            )
    else:
        for mask, prod, defects in rows:
            dtext = "{" + ",".join(str(d) for d in defects) + "}"
            print(f"{deodhar.format_mask(mask)} x={format_perm(prod)} defects={dtext}")
    return 0


def _enum_count(packed):
    n, first = packed
    flat = 0
    hexa = 0
    for w in all_321_avoiding(n, first=first):
        flat += 1
        if is_hexagon_avoiding(w):
            hexa += 1
    return flat, hexa


def enum_counts(n: int, jobs: int = 1) -> tuple[int, int]:
    """(#321-avoiding, #321-hexagon-avoiding) in rank n."""
    if jobs > 1 and n >= 8:
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_enum_count, [(n, v) for v in range(1, n + 1)])
        return tuple(sum(col) for col in zip(*parts))
    return _enum_count((n, None))


def cmd_enum(args) -> int:
    if args.n > 13 and not args.force:
        raise ResourceLimitError(
            f"rank {args.n} enumerates {args.n} ranks of Catalan-many "
            "permutations; pass --force to run anyway"
        )
    rows = [(n, *enum_counts(n, jobs=args.jobs)) for n in range(1, args.n + 1)]
    if args.format == "json":
        print(
            json.dumps(
                [
                    {"n": n, "avoiding_321": flat, "avoiding_321_hexagon": hexa}
                    for n, flat, hexa in rows
                ]
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "avoiding_321", "avoiding_321_hexagon"])
        for row in rows:
            writer.writerow(row)
    else:
        for n, flat, hexa in rows:
            print(f"n={n} 321-avoiding={flat} 321-hexagon-avoiding={hexa}")
    return 0


def cmd_verify(args) -> int:
    report = verify.verify_battery(args.n, sample=args.sample, seed=args.seed)
    if args.format == "json":
        print(json.dumps(report))
    else:
        mode = "exhaustive" if report["exhaustive"] else "sampled"
        print(
            f"rank {report['rank']}: {report['population']} permutations "
            f"({mode}), {len(report['failures'])} failure(s)"
        )
        for failure in report["failures"]:
            print(f"FAIL {failure}")
    return 1 if report["failures"] else 0


def cmd_report(args) -> int:
    a, w = _resolve_w(args)
    if not is_321_hexagon_avoiding(w):
        raise InputError(
            f"{format_perm(w)} is not 321-hexagon-avoiding; no report defined"
        )
    mask = deodhar.parse_mask(args.mask) if args.mask else None
    os.makedirs(args.out, exist_ok=True)
    h = heap.build_heap(a)
    table = hecke.kl_table(w)
    items = _sorted_items(table)

    paths = {}

    paths["heap"] = os.path.join(args.out, "heap.png")
    figures.fig_heap(h, paths["heap"], mask)

    paths["singular"] = os.path.join(args.out, "singular.png")
    figures.fig_singular(a, h, paths["singular"])

    paths["table_csv"] = os.path.join(args.out, "table.csv")
    with open(paths["table_csv"], "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["x", "coeffs"])
        for x, p in items:
            writer.writerow([format_perm(x), " ".join(str(c) for c in p)])

    paths["table_json"] = os.path.join(args.out, "table.json")
    with open(paths["table_json"], "w", encoding="utf-8") as handle:
        json.dump(
            [{"x": format_perm(x), "poly": poly_json(p)} for x, p in items],
            handle,
        )
        handle.write("\n")

    lw = length(w)
    locus = schubert.max_singular_locus(a, len(w))
    summary = {
        "word": format_word(a),
        "perm": format_perm(w),
        "length": lw,
        "tight": hecke.is_tight(w),
        "poincare": poly_json(hecke.poincare_ih(w)),
        "smooth": schubert.is_smooth(w),
        "max_singular_locus": [
            {"x": format_perm(y), "codim": lw - length(y)} for y in locus
        ],
        "files": sorted(os.path.basename(p) for p in paths.values()),
    }
    report_path = os.path.join(args.out, "report.json")
    with open(report_path, "w", encoding="utf-8") as handle:
        json.dump(summary, handle, indent=2, sort_keys=True)
        handle.write("\n")

    for path in sorted(paths.values()) + [report_path]:
        print(path)
    return 0


# --------------------------------------------------------------- parser


def _add_format(sp, choices=("text", "json", "csv")) -> None:
    sp.add_argument("--format", choices=choices, default="text", help="output format")


def _add_w(sp) -> None:
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help='reduced word, like "2 1 3 2 4 3"')
    group.add_argument("--perm", help='one-line permutation, like "3,4,5,1,2"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klheap",
        description="Polynomial invariants of 321-hexagon-avoiding permutations",
    )
    parser.add_argument(
        "--cache",
        default=os.environ.get("KLHEAP_CACHE"),
        help="polynomial table cache file (default: $KLHEAP_CACHE)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="pattern status of a permutation")
    sp.add_argument("perm", help='one-line permutation, like "3,4,5,1,2"')
    _add_format(sp, ("text", "json"))
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("kl", help="one polynomial from the table of w")
    _add_w(sp)
    sp.add_argument("--x", required=True, help='lower permutation, or "e"')
    sp.add_argument(
        "--oracle",
        action="store_true",
        help="compute through the algebra instead of mask enumeration",
    )
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_format(sp)
    sp.set_defaults(func=cmd_kl)

    sp = sub.add_parser("table", help="full polynomial table of w")
    _add_w(sp)
    _add_format(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("poincare", help="graded sum over the table of w")
    _add_w(sp)
    _add_format(sp)
    sp.set_defaults(func=cmd_poincare)

    sp = sub.add_parser("tight", help="canonical-basis product test for w")
    _add_w(sp)
    _add_format(sp, ("text", "json"))
    sp.set_defaults(func=cmd_tight)

    sp = sub.add_parser("singular", help="maximal singular locus of w")
    _add_w(sp)
    sp.add_argument("--triples", action="store_true", help="also list heap triples")
    sp.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the Bruhat-maximal table elements",
    )
    _add_format(sp)
    sp.set_defaults(func=cmd_singular)

    sp = sub.add_parser("heap", help="embedding of a reduced word")
    _add_w(sp)
    sp.add_argument("--mask", help='mask, like "(1,0,1,0)"')
    _add_format(sp, ("text", "json"))
    sp.set_defaults(func=cmd_heap)

    sp = sub.add_parser("masks", help="mask/defect listing for a word")
    sp.add_argument("--word", required=True, help='reduced word, like "2 1 3 2"')
    sp.add_argument("--x", help="restrict to masks with this product")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_format(sp)
    sp.set_defaults(func=cmd_masks)

    sp = sub.add_parser("enum", help="avoidance counts through rank n")
    sp.add_argument("n", type=int, help="largest rank to enumerate")
    sp.add_argument("--force", action="store_true", help="allow ranks above 13")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_format(sp)
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("verify", help="run the self-check battery")
    sp.add_argument("--n", type=int, default=5, help="rank to check")
    sp.add_argument(
        "--sample", type=int, help="sample size (required above rank 6)"
    )
    sp.add_argument("--seed", type=int, default=0, help="sampling seed")
    _add_format(sp, ("text", "json"))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("report", help="figures and table files for one w")
    _add_w(sp)
    sp.add_argument("--mask", help="overlay this mask on the heap figure")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cache:
            _load_cache(args.cache)
        rc = args.func(args)
        if args.cache:
            _save_cache(args.cache)
        return rc
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
