"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 parse error,
3 internal inconsistency, 4 cache corruption.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .engine import (
    InconsistencyError,
    analyze,
    depth_and_dim,
    field_disagreements,
    hilbert_series_z,
    hilbert_series_zn,
    is_buchsbaum,
    is_cohen_macaulay,
    regularity,
)
from .gin import compare, gin_ideal, gin_path_generators
from .graph import Graph, ParseError, parse_graph
from .homology import QQ, FieldSpec, euler_characteristic, reduced_cohomology_dims
from .ideals import minimal_primes
from .poset import build_Q, hasse_dot

log = logging.getLogger("binedge")

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_INCONSISTENT, EXIT_CACHE = 0, 1, 2, 3, 4


class CacheCorruption(RuntimeError):
    pass


def build_report(g: Graph, field: FieldSpec = QQ, zn: bool = False, N: int = 12,
                 verify: bool = False) -> dict:
    prof = analyze(g, field)
    depth, dim = depth_and_dim(prof)
    cm = is_cohen_macaulay(prof)
    if cm != (depth == dim):
        raise InconsistencyError("Cohen-Macaulay verdict disagrees with depth == dim")
    for i in range(len(prof.poset)):
        cx = prof.poset.interval_complex(i)
        dims = reduced_cohomology_dims(cx, field)
        if sum((-1) ** k * v for k, v in dims.items()) != euler_characteristic(cx):
            raise InconsistencyError(f"Euler characteristic mismatch at poset element {i}")
    index = {q: i for i, q in enumerate(prof.poset.elements)}
    series = hilbert_series_z(prof)
    reg = regularity(prof)
    report = {
        "graph": {"n": g.n, "edges": [list(e) for e in g.sorted_edges()], "graph6": g.to_graph6()},
        "field": field.tag,
        "minimal_primes": [p.to_json() for p in minimal_primes(g)],
        "poset": prof.poset.to_json(),
        "local_cohomology": [
            {
                "r": r,
                "terms": [
                    {"q": index[q], "M": m, "d_q": q.krull_dim()} for q, m in prof.entries[r]
                ],
                "series": series[r].to_json(),
                "series_text": series[r].render(),
            }
            for r in prof.nonzero_degrees()
        ],
        "depth": depth,
        "dim": dim,
        "cohen_macaulay": cm,
        "buchsbaum": is_buchsbaum(prof),
        "regularity": reg.to_json(),
    }
    if field.characteristic == 0:
        report["field_check"] = field_disagreements(g)
    if zn:
        report["hilbert_zn"] = {
            "truncation": N,
            "tables": {
                str(r): [[*a, c] for a, c in ms.items()]
                for r, ms in hilbert_series_zn(prof, field, N).items()
            },
        }
    if verify:
        report["verification"] = compare(g, field, N, profile=prof)
    return report


def render_table(report: dict) -> str:
    nodes = report["poset"]["nodes"]
    lines = [
        f"graph {report['graph']['graph6']}  n={report['graph']['n']}  field={report['field']}",
        f"minimal primes: {len(report['minimal_primes'])}   |Q| = {len(nodes)}",
        "",
        f"{'r':>3}  {'q':>4}  {'M':>3}  {'d_q':>4}  ideal",
    ]
    for entry in report["local_cohomology"]:
        for t in entry["terms"]:
            node = nodes[t["q"]]
            lines.append(
                f"{entry['r']:>3}  {t['q']:>4}  {t['M']:>3}  {t['d_q']:>4}  "
                f"s={node['s']} cliques={node['cliques']}"
            )
        lines.append(f"     HS(H^{entry['r']}) = {entry['series_text']}")
    reg = report["regularity"]
    lines += [
        "",
        f"depth {report['depth']}  dim {report['dim']}  "
        f"CM {report['cohen_macaulay']}  Buchsbaum {report['buchsbaum']}",
        f"regularity: series {reg['series_based']}  corrected {reg['corrected_closed_form']}  "
        f"literal {reg['paper_literal']}" + ("" if reg["agree"] else "  [DISAGREE]"),
    ]
    for tag, diffs in report.get("field_check", {}).items():
        if diffs:
            lines.append(f"field dependence: {tag} differs from Q at {diffs}")
    if "verification" in report:
        lines.append(f"verification: {report['verification']['status']}")
    return "\n".join(lines) + "\n"


def _read_input(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    return Path(path).read_text()


def cmd_analyze(args) -> int:
    g = parse_graph(_read_input(args.input))
    report = build_report(g, args.field, zn=args.zn, N=args.truncate, verify=args.verify)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        sys.stdout.write(render_table(report))
    if "verification" in report and report["verification"]["status"] != "pass":
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(_read_input(args.input))
    result = compare(g, args.field, args.truncate)
    print(json.dumps(result, sort_keys=True))
    return EXIT_OK if result["status"] == "pass" else EXIT_MISMATCH


def cmd_poset(args) -> int:
    g = parse_graph(_read_input(args.input))
    q = build_Q(g)
    if args.format == "json":
        print(json.dumps(q.to_json(), sort_keys=True))
    else:
        sys.stdout.write(hasse_dot(q))
    return EXIT_OK


def cmd_gin(args) -> int:
    g = parse_graph(_read_input(args.input))
    ideal = gin_ideal(g)
    _, diff = gin_path_generators(g)
    if args.format == "json":
        print(json.dumps({"generators": ideal.display(), "path_formula_diff": diff}, sort_keys=True))
    else:
        for m in ideal.display():
            print(m)
        if diff["only_paths"] or diff["only_intersection"]:
            print(f"# path formula disagrees: {diff}", file=sys.stderr)
    return EXIT_OK


# --- census ------------------------------------------------------------------

def record_checksum(record: dict) -> str:
    body = {k: v for k, v in record.items() if k != "checksum"}
    return hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()


def load_cache(path: Path) -> dict[tuple[str, str], dict]:
    cache = {}
    if not path.exists():
        return cache
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            raise CacheCorruption(f"{path}:{lineno}: not JSON") from None
        if not isinstance(rec, dict) or rec.get("checksum") != record_checksum(rec):
            raise CacheCorruption(f"{path}:{lineno}: checksum mismatch")
        cache[(rec["graph"], rec["field"])] = rec
    return cache


def census_record(key: str, field_tag: str, N: int) -> dict:
    field = FieldSpec.parse(field_tag)
    g = parse_graph(key)
    prof = analyze(g, field)
    depth, dim = depth_and_dim(prof)
    rec = {
        "graph": key,
        "field": field.tag,
        "depth": depth,
        "dim": dim,
        "cm": is_cohen_macaulay(prof),
        "buchsbaum": is_buchsbaum(prof),
        "reg": regularity(prof).series_based,
        "q_size": len(prof.poset),
        "verify": compare(g, field, N, profile=prof)["status"],
    }
    rec["checksum"] = record_checksum(rec)
    return rec


def run_census(lines, cache_path: Path, field: FieldSpec, N: int, jobs: int = 1, out=None) -> list[dict]:
    """Analyse every uncached graph6 key; appends to the cache and returns the new records."""
    out = out or sys.stdout
    cache = load_cache(cache_path)
    todo = []
    for line in lines:
        key = line.strip().removeprefix(">>graph6<<")
        if not key:
            continue
        if (key, field.tag) in cache or key in todo:
            continue
        todo.append(key)
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            records = list(pool.map(census_record, todo, [field.tag] * len(todo), [N] * len(todo)))
    else:
        records = [census_record(k, field.tag, N) for k in todo]
    with cache_path.open("a") as fh:
        for rec in records:
            line = json.dumps(rec, sort_keys=True)
            fh.write(line + "\n")
            out.write(line + "\n")
    log.info("census: %d new, %d cached", len(records), len(cache))
    return records


def cmd_census(args) -> int:
    text = _read_input(args.input)
    records = run_census(text.splitlines(), Path(args.cache), args.field, args.truncate, args.jobs)
    return EXIT_OK if all(r["verify"] == "pass" for r in records) else EXIT_MISMATCH


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binedge",
        description="Local cohomology of binomial edge ideals via the poset Q_{J_G}.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="table", formats=("json", "table")):
        p.add_argument("input", nargs="?", default="-", help="graph file (edge list or graph6), '-' for stdin")
        p.add_argument("--format", choices=formats, default=fmt_default)
        p.add_argument("--field", type=_field, default=QQ, help="q (default) or fp:<p>")
        p.add_argument("--truncate", type=int, default=12, help="multigraded truncation N")

    p = sub.add_parser("analyze", help="full local cohomology report")
    common(p)
    p.add_argument("--zn", action="store_true", help="include truncated Z^n-graded tables")
    p.add_argument("--verify", action="store_true", help="also run the gin comparison")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="compare against the classical Hochster formula on gin(J_G)")
    common(p, fmt_default="json", formats=("json",))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("poset", help="Hasse diagram of Q_{J_G}")
    common(p, fmt_default="dot", formats=("dot", "json"))
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("gin", help="generators of gin(J_G)")
    common(p, fmt_default="table")
    p.set_defaults(func=cmd_gin)

    p = sub.add_parser("census", help="batch over a graph6 stream with a resumable cache")
    common(p, fmt_default="json", formats=("json",))
    p.add_argument("--cache", required=True, help="JSON-lines cache file")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except CacheCorruption as exc:
        print(f"cache corrupted: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
