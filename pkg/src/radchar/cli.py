"""Command line front end: census tables, rank censuses, verification suites.

Three subcommands:

    census  - character degree census of one radical, optionally checked
              against the orbit and conjugacy-class oracles (--oracle)
    ranks   - rank census polynomials for one symmetry class, optionally
              checked against brute-force enumeration (--brute)
    verify  - named invariant suites over small parameter grids

Exit codes: 0 all verdicts pass, 1 at least one mathematical verdict
failed, 2 usage or parameter error.  Output formats: md (default,
human), json (schema-stable, byte-identical across reruns once --no-timing
is passed), csv (fixed column order).  Polynomial coefficients in JSON
are decimal strings, constant term first.

All configuration is by flags; enumeration sizes are guarded by --budget
with a hard ceiling of 10^8.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .census import VARIANTS, brute_rank_census, census_polynomial
from .charcensus import census_table, qminus1_report
from .falinalg import DEFAULT_ENUM_BUDGET, SymmetryClass, class_size
from .gf import field_for_order, quadratic_extension
from .orbitmethod import (
    DEFAULT_CLASS_BUDGET,
    DEFAULT_ORBIT_BUDGET,
    RadicalParams,
    class_count_brute,
    orbit_census,
    pairing_nondegeneracy_check,
)
from .qpoly import QPoly

__all__ = ["main", "build_parser"]

HARD_BUDGET_CEILING = 10 ** 8

RANK_CLASSES = {
    "sym": SymmetryClass.SYMMETRIC,
    "skew": SymmetryClass.SKEW_SYMMETRIC,
    "herm": SymmetryClass.SKEW_HERMITIAN,
}

# instance grids for the verification suites, kept small enough that the
# brute-force oracles stay inside the default budgets
ORBIT_TRIPLES = (("C", 2, 1), ("C", 3, 1), ("C", 3, 2), ("D", 4, 1), ("D", 4, 2), ("U", 2, 1))
CLASS_TRIPLES = (("C", 2, 1), ("C", 3, 1), ("C", 3, 2), ("D", 3, 2), ("D", 4, 1), ("U", 2, 1))


class UsageError(Exception):
    """Parameter or flag problem; maps to exit code 2."""


def check_q(q: int) -> int:
    """Validate q as an odd prime power (arithmetically, no field built)."""
    if q < 3 or q % 2 == 0:
        raise UsageError("odd prime power required")
    m = q
    p = None
    for cand in range(3, int(q ** 0.5) + 1, 2):
        if m % cand == 0:
            p = cand
            break
    if p is None:
        return q
    while m % p == 0:
        m //= p
    if m != 1:
        raise UsageError("odd prime power required")
    return q


def _field_for(q: int):
    try:
        return field_for_order(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def resolve_budget(args, default: int) -> int:
    if args.budget is None:
        return default
    if args.budget < 1:
        raise UsageError("budget must be positive")
    if args.budget > HARD_BUDGET_CEILING:
        raise UsageError(f"budget exceeds the hard ceiling {HARD_BUDGET_CEILING}")
    return args.budget


def _params(args) -> RadicalParams:
    try:
        return RadicalParams(args.x, args.n, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _qminus1_str(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else f"{mag}*"
            body = f"{head}(q-1)" if k == 1 else f"{head}(q-1)^{k}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    sign0, body0 = parts[0]
    text = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _count_str(row: dict, basis: str) -> str:
    if basis == "qminus1":
        return _qminus1_str([int(s) for s in row["count_qminus1"]])
    return str(QPoly.from_json(row["count"]))


# -- census -----------------------------------------------------------------


def _census_oracle(params: RadicalParams, q: int, variant: str, args) -> dict:
    orbit_budget = resolve_budget(args, DEFAULT_ORBIT_BUDGET)
    class_budget = resolve_budget(args, DEFAULT_CLASS_BUDGET)
    duals = q ** params.a_exponent
    order = q ** params.order_exponent
    if duals > orbit_budget:
        raise UsageError(
            f"oracle needs {duals} dual functionals, over the orbit budget "
            f"{orbit_budget}; raise --budget (ceiling {HARD_BUDGET_CEILING})"
        )
    if order > class_budget:
        raise UsageError(
            f"oracle needs {order} group elements, over the class budget "
            f"{class_budget}; raise --budget (ceiling {HARD_BUDGET_CEILING})"
        )
    _field_for(q)
    orbits = orbit_census(params, q, budget=orbit_budget)
    classes = class_count_brute(params, q, budget=class_budget)
    table = census_table(params, variant)
    symbolic = table.counts_at(q)
    orbital = {r.e: (r.degree, r.char_count) for r in orbits.rows}
    rows_match = symbolic == orbital
    class_match = table.total_poly().eval_at(q) == classes
    return {
        "q": q,
        "orbit_rows": [
            {
                "e": r.e,
                "degree": r.degree,
                "dual_count": r.dual_count,
                "orbit_count": r.orbit_count,
                "char_count": r.char_count,
            }
            for r in orbits.rows
        ],
        "class_count": classes,
        "rows_match": rows_match,
        "class_count_match": class_match,
        "match": rows_match and class_match,
    }


def cmd_census(args):
    params = _params(args)
    q = check_q(args.q) if args.q is not None else None
    if args.oracle and q is None:
        raise UsageError("--oracle requires --q")
    census = census_table(params, args.variant)
    rows = []
    for row in census.rows:
        entry = {
            "r": row.r,
            "e": row.e,
            "degree": row.degree.to_json(),
            "count": row.count.to_json(),
            "count_qminus1": [str(c) for c in row.count.to_qminus1_basis()],
        }
        if q is not None:
            entry["degree_at_q"] = row.degree_at(q)
            entry["count_at_q"] = row.count_at(q)
        rows.append(entry)
    sos_ok = census.sum_of_squares() == census.order_poly()
    record = {
        "command": "census",
        "params": {"type": params.x, "n": params.n, "d": params.d, "q": q},
        "variant": args.variant,
        "basis": args.basis,
        "order": census.order_poly().to_json(),
        "rows": rows,
        "sum_of_squares_ok": sos_ok,
    }
    code = 0 if sos_ok else 1
    if args.oracle:
        oracle = _census_oracle(params, q, args.variant, args)
        record["oracle"] = oracle
        if not oracle["match"]:
            code = 1
    return record, code


# -- ranks ------------------------------------------------------------------


def cmd_ranks(args):
    kind = args.cls
    n = args.n
    q = check_q(args.q) if args.q is not None else None
    if args.brute and q is None:
        raise UsageError("--brute requires --q")
    if args.r is not None:
        rank_list = [args.r]
    else:
        step = 2 if kind == "skew" else 1
        rank_list = list(range(0, n + 1, step))
    polys = {}
    printed = {}
    rows = []
    for r in rank_list:
        try:
            polys[r] = census_polynomial(kind, n, r, "corrected")
            if kind == "herm":
                printed[r] = census_polynomial(kind, n, r, "printed")
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        entry = {"r": r, "count": polys[r].to_json()}
        if kind == "herm":
            entry["count_printed"] = printed[r].to_json()
        if q is not None:
            entry["count_at_q"] = polys[r].eval_at(q)
        rows.append(entry)
    record = {"command": "ranks", "class": kind, "n": n, "q": q, "rows": rows}
    code = 0
    if args.brute:
        budget = resolve_budget(args, DEFAULT_ENUM_BUDGET)
        base = _field_for(q)
        field = quadratic_extension(base) if kind == "herm" else base
        total = class_size(n, RANK_CLASSES[kind], field)
        if total > budget:
            raise UsageError(
                f"brute enumeration needs {total} matrices, over the budget "
                f"{budget}; raise --budget (ceiling {HARD_BUDGET_CEILING})"
            )
        hist = brute_rank_census(n, RANK_CLASSES[kind], field, budget=budget)
        expected = {r: polys[r].eval_at(q) for r in rank_list}
        got = {r: hist.get(r, 0) for r in rank_list}
        match = got == expected
        record["brute"] = {
            "histogram": {str(k): v for k, v in hist.items()},
            "match": match,
        }
        if kind == "herm":
            record["brute"]["printed_matches"] = all(
                hist.get(r, 0) == printed[r].eval_at(q) for r in rank_list
            )
        if not match:
            code = 1
    return record, code


# -- verify -----------------------------------------------------------------


def _capped(limit: int, max_n) -> int:
    return limit if max_n is None else min(limit, max_n)


def _suite_ranks(args, qs):
    budget = resolve_budget(args, DEFAULT_ENUM_BUDGET)
    grid = []
    for n in range(1, _capped(3, args.max_n) + 1):
        for q in qs or (3, 5):
            grid.append(("sym", n, q))
    for n in range(1, _capped(4, args.max_n) + 1):
        for q in qs or (3,):
            grid.append(("skew", n, q))
    for n in range(1, _capped(2, args.max_n) + 1):
        for q in qs or (3, 5):
            grid.append(("herm", n, q))
    if _capped(3, args.max_n) >= 3 and 3 in (qs or (3, 5)):
        grid.append(("herm", 3, 3))
    checks = []
    for kind, n, q in sorted(set(grid)):
        base = _field_for(q)
        field = quadratic_extension(base) if kind == "herm" else base
        hist = brute_rank_census(n, RANK_CLASSES[kind], field, budget=budget)
        step = 2 if kind == "skew" else 1
        expected = {
            r: census_polynomial(kind, n, r, "corrected").eval_at(q)
            for r in range(0, n + 1, step)
        }
        got = {r: hist.get(r, 0) for r in expected}
        ok = got == expected and sum(hist.values()) == sum(expected.values())
        detail = (
            "closed form equals brute histogram"
            if ok
            else f"expected {expected}, brute gave {hist}"
        )
        checks.append({"suite": "ranks", "name": f"{kind} n={n} q={q}", "ok": ok, "detail": detail})
    return checks


def _radical_instances(triples, qs, extra, max_n):
    instances = [(x, n, d, q) for (x, n, d) in triples for q in qs or (3,)]
    if qs is None:
        instances.extend(extra)
    if max_n is not None:
        instances = [t for t in instances if t[1] <= max_n]
    return sorted(set(instances))


def _suite_orbits(args, qs):
    budget = resolve_budget(args, DEFAULT_ORBIT_BUDGET)
    checks = []
    for x, n, d, q in _radical_instances(ORBIT_TRIPLES, qs, [("C", 2, 1, 5)], args.max_n):
        params = RadicalParams(x, n, d)
        duals = q ** params.a_exponent
        if duals > budget:
            raise UsageError(
                f"orbit check ({x}, n={n}, d={d}, q={q}) needs {duals} dual "
                f"functionals, over the budget {budget}; raise --budget"
            )
        _field_for(q)
        orbits = orbit_census(params, q, budget=budget)
        symbolic = census_table(params).counts_at(q)
        orbital = {r.e: (r.degree, r.char_count) for r in orbits.rows}
        ok = symbolic == orbital
        detail = (
            "census table equals orbit census"
            if ok
            else f"table {symbolic}, orbits {orbital}"
        )
        checks.append({"suite": "orbits", "name": f"{x} n={n} d={d} q={q}", "ok": ok, "detail": detail})
    return checks


def _suite_classes(args, qs):
    budget = resolve_budget(args, DEFAULT_CLASS_BUDGET)
    checks = []
    for x, n, d, q in _radical_instances(CLASS_TRIPLES, qs, [("C", 2, 1, 5)], args.max_n):
        params = RadicalParams(x, n, d)
        order = q ** params.order_exponent
        if order > budget:
            raise UsageError(
                f"class count ({x}, n={n}, d={d}, q={q}) needs {order} group "
                f"elements, over the budget {budget}; raise --budget"
            )
        _field_for(q)
        classes = class_count_brute(params, q, budget=budget)
        total = census_table(params).total_poly().eval_at(q)
        ok = classes == total
        detail = (
            f"{classes} conjugacy classes, census total agrees"
            if ok
            else f"{classes} conjugacy classes but census total {total}"
        )
        checks.append({"suite": "classes", "name": f"{x} n={n} d={d} q={q}", "ok": ok, "detail": detail})
    return checks


def _valid_d_range(x: str, n: int):
    return range(0, n) if x == "U" else range(1, n + 1)


def _suite_pairings(args, qs):
    checks = []
    grid = []
    for x in ("C", "D", "U"):
        for n in range(1, _capped(4, args.max_n) + 1):
            for d in _valid_d_range(x, n):
                for q in qs or (3, 5):
                    grid.append((x, n, d, q))
    for x, n, d, q in sorted(grid):
        _field_for(q)
        ok = pairing_nondegeneracy_check(RadicalParams(x, n, d), q)
        detail = "trace pairing Gram matrix invertible" if ok else "degenerate trace pairing"
        checks.append({"suite": "pairings", "name": f"{x} n={n} d={d} q={q}", "ok": ok, "detail": detail})
    return checks


def _suite_positivity(args, qs):
    max_n = args.max_n if args.max_n is not None else 10
    checks = []
    for x in ("C", "D", "U"):
        for n in range(1, max_n + 1):
            bad = []
            for d in _valid_d_range(x, n):
                for r, e, coeffs in qminus1_report(RadicalParams(x, n, d)):
                    if any(c < 0 for c in coeffs):
                        bad.append((d, e))
            ok = not bad
            detail = (
                "all counts have nonnegative (q-1) coefficients"
                if ok
                else f"negative (q-1) coefficients at (d, e) in {bad}"
            )
            checks.append({"suite": "positivity", "name": f"{x} n={n}", "ok": ok, "detail": detail})
    return checks


SUITES = {
    "classes": _suite_classes,
    "orbits": _suite_orbits,
    "pairings": _suite_pairings,
    "positivity": _suite_positivity,
    "ranks": _suite_ranks,
}


def cmd_verify(args):
    qs = tuple(check_q(v) for v in args.q) if args.q else None
    names = tuple(sorted(SUITES)) if args.suite == "all" else (args.suite,)
    checks = []
    for name in names:
        checks.extend(SUITES[name](args, qs))
    ok = all(c["ok"] for c in checks)
    record = {
        "command": "verify",
        "suite": args.suite,
        "checks": checks,
        "failures": [c["name"] for c in checks if not c["ok"]],
        "ok": ok,
    }
    return record, 0 if ok else 1


# -- rendering ----------------------------------------------------------------


def render_json(record: dict, timing) -> str:
    out = dict(record)
    if timing is not None:
        out["timing_seconds"] = timing
    return json.dumps(out, indent=2, sort_keys=True) + "\n"


def render_csv(record: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if record["command"] == "census":
        writer.writerow(["type", "n", "d", "r", "e", "degree", "count_poly", "count_at_q"])
        p = record["params"]
        for row in record["rows"]:
            writer.writerow(
                [
                    p["type"],
                    p["n"],
                    p["d"],
                    row["r"],
                    row["e"],
                    str(QPoly.from_json(row["degree"])),
                    _count_str(row, record["basis"]),
                    row.get("count_at_q", ""),
                ]
            )
    elif record["command"] == "ranks":
        writer.writerow(["class", "n", "r", "count_poly", "count_at_q", "brute_count"])
        hist = record.get("brute", {}).get("histogram", {})
        for row in record["rows"]:
            writer.writerow(
                [
                    record["class"],
                    record["n"],
                    row["r"],
                    str(QPoly.from_json(row["count"])),
                    row.get("count_at_q", ""),
                    hist.get(str(row["r"]), ""),
                ]
            )
    else:
        writer.writerow(["suite", "check", "verdict", "detail"])
        for c in record["checks"]:
            writer.writerow([c["suite"], c["name"], "PASS" if c["ok"] else "FAIL", c["detail"]])
    return buf.getvalue()


def _md_verdict(flag: bool) -> str:
    return "PASS" if flag else "FAIL"


def render_md(record: dict, timing) -> str:
    lines = []
    if record["command"] == "census":
        p = record["params"]
        lines.append(f"# census {p['type']} n={p['n']} d={p['d']} (variant {record['variant']})")
        lines.append("")
        header = ["r", "e", "degree", "count"]
        if p["q"] is not None:
            header += [f"degree(q={p['q']})", f"count(q={p['q']})"]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "---|" * len(header))
        for row in record["rows"]:
            cells = [
                str(row["r"]),
                str(row["e"]),
                str(QPoly.from_json(row["degree"])),
                _count_str(row, record["basis"]),
            ]
            if p["q"] is not None:
                cells += [str(row["degree_at_q"]), str(row["count_at_q"])]
            lines.append("| " + " | ".join(cells) + " |")
        lines.append("")
        lines.append(f"group order: {QPoly.from_json(record['order'])}")
        lines.append(f"sum of squared degrees identity: {_md_verdict(record['sum_of_squares_ok'])}")
        oracle = record.get("oracle")
        if oracle:
            lines.append(
                f"oracle at q={oracle['q']}: degree layers {_md_verdict(oracle['rows_match'])}, "
                f"class count {_md_verdict(oracle['class_count_match'])} "
                f"({oracle['class_count']} conjugacy classes)"
            )
    elif record["command"] == "ranks":
        lines.append(f"# ranks {record['class']} n={record['n']}")
        lines.append("")
        brute = record.get("brute")
        hist = brute["histogram"] if brute else {}
        header = ["r", "count"]
        if record["class"] == "herm":
            header.append("count (printed variant)")
        if record["q"] is not None:
            header.append(f"count(q={record['q']})")
        if brute:
            header.append("brute")
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "---|" * len(header))
        for row in record["rows"]:
            cells = [str(row["r"]), str(QPoly.from_json(row["count"]))]
            if record["class"] == "herm":
                cells.append(str(QPoly.from_json(row["count_printed"])))
            if record["q"] is not None:
                cells.append(str(row["count_at_q"]))
            if brute:
                cells.append(str(hist.get(str(row["r"]), 0)))
            lines.append("| " + " | ".join(cells) + " |")
        if brute:
            lines.append("")
            lines.append(f"brute-force check: {_md_verdict(brute['match'])}")
            if "printed_matches" in brute:
                note = "also matches" if brute["printed_matches"] else "flagged, disagrees with enumeration"
                lines.append(f"printed variant: {note}")
    else:
        lines.append(f"# verify suite={record['suite']}")
        lines.append("")
        for c in record["checks"]:
            lines.append(f"{_md_verdict(c['ok'])} [{c['suite']}] {c['name']} : {c['detail']}")
        lines.append("")
        failed = len(record["failures"])
        lines.append(f"{len(record['checks'])} checks, {failed} failure{'s' if failed != 1 else ''}")
    if timing is not None:
        lines.append(f"elapsed {timing}s")
    return "\n".join(lines) + "\n"


def render(record: dict, args, elapsed: float) -> str:
    timing = None if args.no_timing else round(elapsed, 6)
    if args.fmt == "json":
        return render_json(record, timing)
    if args.fmt == "csv":
        return render_csv(record)
    return render_md(record, timing)


# -- parser -------------------------------------------------------------------


def _add_common(parser):
    parser.add_argument("--format", dest="fmt", choices=("json", "csv", "md"), default="md")
    parser.add_argument("--budget", type=int, default=None, help=f"enumeration cap, ceiling {HARD_BUDGET_CEILING}")
    parser.add_argument("--no-timing", dest="no_timing", action="store_true", help="omit the timing field for byte-identical output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radchar",
        description="Character degree censuses for unipotent radicals of maximal parabolics, with brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("census", help="character degree census of one radical")
    pc.add_argument("--type", dest="x", required=True, choices=("C", "D", "U"))
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--d", type=int, required=True)
    pc.add_argument("--q", type=int, default=None)
    pc.add_argument("--variant", choices=VARIANTS, default="corrected")
    pc.add_argument("--basis", choices=("q", "qminus1"), default="q")
    pc.add_argument("--oracle", action="store_true", help="cross-check against orbit and class oracles (needs --q)")
    _add_common(pc)

    pr = sub.add_parser("ranks", help="rank census polynomials for a symmetry class")
    pr.add_argument("--class", dest="cls", required=True, choices=tuple(RANK_CLASSES))
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--r", type=int, default=None)
    pr.add_argument("--q", type=int, default=None)
    pr.add_argument("--brute", action="store_true", help="compare with exhaustive enumeration (needs --q)")
    _add_common(pr)

    pv = sub.add_parser("verify", help="run named invariant suites")
    pv.add_argument("--suite", required=True, choices=tuple(SUITES) + ("all",))
    pv.add_argument("--max-n", dest="max_n", type=int, default=None)
    pv.add_argument("--q", type=int, nargs="+", default=None)
    _add_common(pv)
    return parser


COMMANDS = {"census": cmd_census, "ranks": cmd_ranks, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        record, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(record, args, time.perf_counter() - start))
    return code


if __name__ == "__main__":
    sys.exit(main())
