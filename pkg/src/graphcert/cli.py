"""Batch command line frontend.

Every subcommand that emits a construction re-verifies it before exiting 0;
nothing unverified ever exits 0. Exit codes: 0 success/verified, 1
verification failed or the construction reported none, 2 usage error,
3 budget exhausted (search inconclusive).
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from typing import Sequence

from . import io as gio
from . import keller
from .chess import (QueenClass, build_bishop, build_queen, build_rook,
                    classify_queen_prediction, queen_delta)
from .core import (Graph, verify_clique_cover, verify_edge_coloring,
                   verify_hamiltonian_cycle, verify_hamiltonian_decomposition,
                   verify_hamiltonian_path)
from .kempe import BudgetExhaustedError, SearchBudget, edge_critical_check, find_class1
from .multicycle import (Multicycle, chromatic_index, derive, survey, survey_csv,
                         verify_multicycle_coloring)
from .mycielski import (MycielskiVertex, cycle_graph, even_cycle_parity_witness,
                        ham_path_mu_odd_cycle, mycielskian)
from .queen import (MethodInapplicableError, class1_even, class1_ladder_multicycle,
                    class1_square_odd, class2_overfull_coloring, classify_and_color)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# boards larger than this (in squares) sit behind --long-run
BOARD_SQUARE_CAP = 2500
# keller dimensions past this need --long-run for anything that walks all edges
KELLER_DIM_CAP = 5


def _emit(args, payload: dict, lines: Sequence[str] = ()) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _params(args) -> dict:
    out = {}
    for key in ("m", "n", "d", "table"):
        if getattr(args, key, None) is not None:
            out[key] = getattr(args, key)
    return out


def _need_long_run(args, why: str) -> None:
    if not getattr(args, "long_run", False):
        raise ValueError(f"{why}; pass --long-run to proceed")


def _budget(args) -> SearchBudget:
    default = SearchBudget.default(args.seed)
    return SearchBudget(
        max_switches=getattr(args, "budget_switches", None) or default.max_switches,
        max_restarts=getattr(args, "restarts", None) or default.max_restarts,
        seed=args.seed)


def _parallel_map(fn, tasks: list, jobs: int) -> list:
    # pool.map keeps input order, so output is deterministic for any N
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with multiprocessing.Pool(processes=min(jobs, len(tasks))) as pool:
        return pool.map(fn, tasks, chunksize=1)


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")


# --- gen ---------------------------------------------------------------------------

def _build_family(args) -> Graph:
    fam = args.family
    if fam == "keller":
        if args.d is None:
            raise ValueError("--d is required for the keller family")
        if args.d > KELLER_DIM_CAP:
            _need_long_run(args, f"building G_{args.d} walks {4 ** args.d} vertices")
        return keller.build(args.d)
    if fam == "mycielski":
        if args.n is None:
            raise ValueError("--n is required for the mycielski family")
        return mycielskian(cycle_graph(args.n))
    if args.m is None or args.n is None:
        raise ValueError("--m and --n are required for board families")
    if args.m * args.n > BOARD_SQUARE_CAP:
        _need_long_run(args, f"a {args.m}x{args.n} board has {args.m * args.n} squares")
    builder = {"queen": build_queen, "rook": build_rook, "bishop": build_bishop}[fam]
    return builder(args.m, args.n)


def _cmd_gen(args) -> int:
    g = _build_family(args)
    comment = f"family={args.family} " + " ".join(f"{k}={v}" for k, v in _params(args).items())
    if args.out:
        gio.write_dimacs(g, args.out, comments=[comment])
    elif not args.json:
        gio.write_dimacs(g, sys.stdout, comments=[comment])
    else:
        raise ValueError("--json without --out would discard the graph; add --out")
    payload = {"ok": True, "family": args.family, "params": _params(args),
               "size": g.edge_count, "seed": args.seed}
    _emit(args, payload, [f"vertices = {g.vertex_count}", f"edges = {g.edge_count}"])
    return EXIT_OK


# --- color -------------------------------------------------------------------------

def _color_queen(args):
    m, n = args.m, args.n
    if m is None or n is None:
        raise ValueError("--m and --n are required")
    if m * n > BOARD_SQUARE_CAP:
        _need_long_run(args, f"a {m}x{n} board has {m * n} squares")
    name = args.construction
    if name != "kempe" and getattr(args, "warm_start", None):
        raise ValueError("--warm-start only applies to the kempe construction")
    if name == "auto":
        return classify_and_color(m, n, budget=_budget(args), seed=args.seed)
    if name == "even-union":
        return class1_even(m, n)
    if name == "square-odd":
        if m != n:
            raise ValueError("square-odd needs m = n")
        return class1_square_odd(n)
    if name == "ladder-multicycle":
        return class1_ladder_multicycle(m, n)
    if name == "overfull":
        return class2_overfull_coloring(m, n)
    assert name == "kempe"
    warm = gio.read_coloring(args.warm_start) if args.warm_start else None
    outcome = find_class1(build_queen(m, n), _budget(args), warm_start=warm)
    if outcome.coloring is None:
        if outcome.reason == "overfull":
            raise MethodInapplicableError("board is overfull: no Delta coloring exists")
        raise BudgetExhaustedError("kempe search exhausted its budget")
    from .queen import QueenColoringCertificate

    return QueenColoringCertificate(m, n, outcome.coloring, 1, "KempeSearch")


def _cmd_color(args) -> int:
    cert = _color_queen(args)
    g = build_queen(args.m, args.n)
    report = verify_edge_coloring(g, cert.coloring)
    colors = cert.coloring.declared_color_count
    want = queen_delta(args.m, args.n) + (cert.claimed_class - 1)
    ok = report.ok and colors == want
    payload = {"ok": ok, "family": "queen", "params": _params(args),
               "class": cert.claimed_class, "colors": colors,
               "construction": cert.construction, "seed": args.seed}
    if not ok:
        print(f"verification failed: {report.detail}", file=sys.stderr)
        _emit(args, payload)
        return EXIT_FAIL
    if args.out:
        gio.write_coloring(cert.coloring, args.out,
                           comments=[f"queen m={args.m} n={args.n} "
                                     f"construction={cert.construction}"])
    _emit(args, payload, [f"class = {cert.claimed_class}", f"colors = {colors}",
                          f"construction = {cert.construction}"])
    return EXIT_OK


# --- verify ------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    g = gio.read_dimacs(args.graph)
    kind = args.kind
    extra = {}
    if kind == "coloring":
        coloring = gio.read_coloring(args.certificate)
        report = verify_edge_coloring(g, coloring)
        delta = max(g.degree(v) for v in range(g.vertex_count)) if g.vertex_count else 0
        extra = {"colors": coloring.declared_color_count}
        if report.ok and coloring.declared_color_count in (delta, delta + 1):
            extra["class"] = coloring.declared_color_count - delta + 1
    elif kind == "hamcycle":
        seq = gio.read_sequence(args.certificate)
        report = verify_hamiltonian_cycle(g, seq)
        extra = {"size": len(seq)}
    elif kind == "hampath":
        seq = gio.read_sequence(args.certificate)
        start = args.start - 1 if args.start is not None else None
        end = args.end - 1 if args.end is not None else None
        report = verify_hamiltonian_path(g, seq, start=start, end=end)
        extra = {"size": len(seq)}
    elif kind == "decomposition":
        cycles = gio.read_vertex_sets(args.certificate)
        matching = None
        if args.matching:
            pairs = gio.read_vertex_sets(args.matching)
            if any(len(p) != 2 for p in pairs):
                raise ValueError("matching file must hold one pair per line")
            matching = [tuple(p) for p in pairs]
        report = verify_hamiltonian_decomposition(g, cycles, matching)
        extra = {"size": len(cycles)}
    else:
        assert kind == "cover"
        sets = gio.read_vertex_sets(args.certificate)
        report = verify_clique_cover(g, sets)
        extra = {"size": len(sets)}
    payload = {"ok": report.ok, "family": "file",
               "params": {"graph": args.graph, "certificate": args.certificate},
               "seed": args.seed, **extra}
    if not report.ok:
        for line in report.detail:
            print(f"fail: {line}", file=sys.stderr)
    _emit(args, payload, [f"ok = {report.ok}"] +
          [f"{k} = {v}" for k, v in extra.items()])
    return EXIT_OK if report.ok else EXIT_FAIL


# --- multicycle --------------------------------------------------------------------

def _cmd_multicycle_derive(args) -> int:
    dm = derive(args.m, args.n)
    payload = {"ok": True, "family": "multicycle",
               "params": {"m": args.m, "n": args.n, "mult": list(dm.mult),
                          "order": list(dm.order)},
               "size": dm.sigma, "seed": args.seed}
    _emit(args, payload, [f"mult = {','.join(str(x) for x in dm.mult)}",
                          f"order = {','.join(str(x) for x in dm.order)}",
                          f"sigma = {dm.sigma}"])
    return EXIT_OK


def _cmd_multicycle_chi(args) -> int:
    mc = Multicycle(tuple(_csv_ints(args.mult)))
    result = chromatic_index(mc, oracle_cap=args.oracle_cap)
    report = verify_multicycle_coloring(mc, result.coloring, result.upper)
    ok = report.ok and result.exact
    payload = {"ok": ok, "family": "multicycle",
               "params": {"mult": list(mc.mult)}, "colors": result.upper,
               "construction": result.method, "seed": args.seed}
    if not report.ok:
        print(f"verification failed: {report.detail}", file=sys.stderr)
        _emit(args, payload)
        return EXIT_FAIL
    lines = [f"chi = {result.upper}" if result.exact else
             f"chi in [{result.lower}, {result.upper}]",
             f"construction = {result.method}"]
    _emit(args, payload, lines)
    return EXIT_OK if result.exact else EXIT_BUDGET


def _survey_task(task):
    m, n, cap = task
    return survey([m], [n], oracle_cap=cap)


def _survey_rows(args):
    m_values = _csv_ints(args.m)
    n_values = [n for n in range(3, args.n_max + 1) if n % 2 == 1 and n >= args.n_min]
    tasks = [(m, n, args.oracle_cap) for m in sorted(set(m_values))
             for n in n_values if m <= n]
    chunks = _parallel_map(_survey_task, tasks, args.jobs)
    return [row for chunk in chunks for row in chunk]


def _cmd_multicycle_survey(args) -> int:
    rows = _survey_rows(args)
    csv_text = survey_csv(rows)
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(csv_text)
    ok = all(r.conjecture4_ok and r.conjecture5_ok for r in rows)
    payload = {"ok": ok, "family": "multicycle",
               "params": {"m": _csv_ints(args.m), "n_max": args.n_max},
               "size": len(rows), "seed": args.seed}
    _emit(args, payload, [] if args.csv and not args.json else [csv_text.rstrip("\n")])
    return EXIT_OK if ok else EXIT_FAIL


# --- mycielski ---------------------------------------------------------------------

def _cmd_mycielski_hampath(args) -> int:
    src = MycielskiVertex.parse(args.src)
    dst = MycielskiVertex.parse(args.dst)
    path = ham_path_mu_odd_cycle(args.n, src, dst)
    g = mycielskian(cycle_graph(args.n))
    report = verify_hamiltonian_path(g, path, start=src.to_id(args.n),
                                     end=dst.to_id(args.n))
    payload = {"ok": report.ok, "family": "mycielski",
               "params": {"n": args.n, "from": str(src), "to": str(dst)},
               "size": len(path), "construction": "template", "seed": args.seed}
    if not report.ok:
        print(f"verification failed: {report.detail}", file=sys.stderr)
        _emit(args, payload)
        return EXIT_FAIL
    if args.out:
        gio.write_sequence(path, args.out)
    names = " ".join(str(MycielskiVertex.from_id(v, args.n)) for v in path)
    _emit(args, payload, [names])
    return EXIT_OK


def _cmd_mycielski_witness(args) -> int:
    rep = even_cycle_parity_witness(args.n)
    ok = not rep.path_exists
    payload = {"ok": ok, "family": "mycielski", "params": {"n": args.n},
               "size": rep.nodes_explored, "seed": args.seed}
    _emit(args, payload,
          [f"path exists = {rep.path_exists}", f"nodes explored = {rep.nodes_explored}"])
    return EXIT_OK if ok else EXIT_FAIL


# --- keller ------------------------------------------------------------------------

def _keller_dim(args, cap: int = KELLER_DIM_CAP) -> int:
    if args.d < 2:
        raise ValueError("--d must be at least 2")
    if args.d > cap:
        _need_long_run(args, f"dimension {args.d} walks {4 ** args.d} vertices")
    return args.d


def _cmd_keller_build(args) -> int:
    d = _keller_dim(args)
    g = keller.build(d)
    if args.out:
        gio.write_dimacs(g, args.out, comments=[f"keller d={d}"])
    elif not args.json:
        gio.write_dimacs(g, sys.stdout, comments=[f"keller d={d}"])
    payload = {"ok": True, "family": "keller", "params": {"d": d},
               "size": g.edge_count, "seed": args.seed}
    _emit(args, payload, [f"vertices = {g.vertex_count}", f"edges = {g.edge_count}"])
    return EXIT_OK


def _cmd_keller_hamcycle(args) -> int:
    d = _keller_dim(args)
    cycle = keller.ham_cycle(d)
    report = verify_hamiltonian_cycle(keller.build(d), cycle)
    payload = {"ok": report.ok, "family": "keller", "params": {"d": d},
               "size": len(cycle), "construction": "prefix-blocks", "seed": args.seed}
    if not report.ok:
        print(f"verification failed: {report.detail}", file=sys.stderr)
        _emit(args, payload)
        return EXIT_FAIL
    if args.out:
        gio.write_sequence(cycle, args.out)
    _emit(args, payload, [f"cycle length = {len(cycle)}"])
    return EXIT_OK


def _cmd_keller_edgecolor(args) -> int:
    d = _keller_dim(args)
    coloring = keller.class1_coloring(d)
    g = keller.build(d)
    report = verify_edge_coloring(g, coloring)
    ok = report.ok and coloring.declared_color_count == keller.delta(d)
    payload = {"ok": ok, "family": "keller", "params": {"d": d}, "class": 1,
               "colors": coloring.declared_color_count,
               "construction": "difference-kernel", "seed": args.seed}
    if not ok:
        print(f"verification failed: {report.detail}", file=sys.stderr)
        _emit(args, payload)
        return EXIT_FAIL
    if args.out:
        gio.write_coloring(coloring, args.out, comments=[f"keller d={d} class 1"])
    _emit(args, payload, [f"colors = {coloring.declared_color_count}"])
    return EXIT_OK


def _cmd_keller_square(args) -> int:
    d = _keller_dim(args, cap=7)
    square = keller.independence_square(d)
    grid = square.encoded()
    if args.flip:
        perm = keller.bitstring_automorphism(d, args.flip)
        grid = [[perm[v] for v in row] for row in grid]
    rows = [" ".join(str(keller.KellerVertex.decode(v, d)) for v in row) for row in grid]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(rows) + "\n")
    payload = {"ok": True, "family": "keller", "params": {"d": d},
               "size": len(grid), "seed": args.seed}
    _emit(args, payload, rows)
    return EXIT_OK


def _cmd_keller_alpha(args) -> int:
    d = _keller_dim(args)
    value = keller.alpha_exact(d)
    expected = keller.alpha_value(d)
    ok = value == expected
    payload = {"ok": ok, "family": "keller", "params": {"d": d}, "size": value,
               "seed": args.seed}
    if not ok:
        print(f"alpha mismatch: computed {value}, table says {expected}",
              file=sys.stderr)
    _emit(args, payload, [f"alpha = {value}"])
    return EXIT_OK if ok else EXIT_FAIL


def _source_cover(args, d: int) -> list[list[int]]:
    if d in (3, 4, 5):
        return keller.fixture_clique_cover(d)
    if d == 2:
        # any single color class of the class-1 coloring is a perfect matching
        coloring = keller.class1_coloring(2)
        return [sorted(e) for e, c in sorted(coloring.assignment.items()) if c == 1]
    if d in (6, 7):
        _need_long_run(args, f"the G_{d} cover is rebuilt by repeated doubling")
        cover = keller.fixture_clique_cover(5)
        for dim in range(5, d):
            cover = keller.double_clique_cover(dim, cover)
        return cover
    raise ValueError("covers are available for 2 <= d <= 7")


def _cmd_keller_double_cover(args) -> int:
    d = args.d
    cover = _source_cover(args, d)
    doubled = keller.double_clique_cover(d, cover)
    report = keller.verify_cover_by_rule(d + 1, doubled)
    payload = {"ok": report.ok, "family": "keller",
               "params": {"d": d, "target": d + 1}, "size": len(doubled),
               "construction": "prefix-doubling", "seed": args.seed}
    if not report.ok:
        for line in report.detail:
            print(f"fail: {line}", file=sys.stderr)
        _emit(args, payload)
        return EXIT_FAIL
    if args.out:
        gio.write_vertex_sets(doubled, args.out)
    _emit(args, payload,
          [f"cover of G_{d + 1} with {len(doubled)} cliques verified"])
    return EXIT_OK


def _cmd_keller_decompose(args) -> int:
    d = _keller_dim(args, cap=2)
    budget = getattr(args, "budget_switches", None) or 400
    result = keller.ham_decomposition_search(d, budget=budget, seed=args.seed)
    if result is None:
        raise BudgetExhaustedError("decomposition search exhausted its budget")
    g = keller.build(d)
    report = verify_hamiltonian_decomposition(g, [list(c) for c in result.cycles],
                                              result.matching)
    payload = {"ok": report.ok, "family": "keller", "params": {"d": d},
               "size": len(result.cycles), "construction": "kernel+kempe",
               "seed": args.seed}
    if not report.ok:
        print(f"verification failed: {report.detail}", file=sys.stderr)
        _emit(args, payload)
        return EXIT_FAIL
    if args.out:
        gio.write_vertex_sets([list(c) for c in result.cycles], args.out)
    if args.matching_out and result.matching is not None:
        gio.write_vertex_sets([list(e) for e in result.matching], args.matching_out)
    lines = [f"cycles = {len(result.cycles)}",
             f"matching = {'yes' if result.matching else 'no'}",
             f"switches used = {result.switches_used}"]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_keller_verify_fixture(args) -> int:
    table = args.table
    if table == 1:
        cycles = keller.fixture_ham_decomposition()
        report = verify_hamiltonian_decomposition(keller.build(3), cycles)
        size = len(cycles)
    else:
        d = {5: 3, 6: 4, 7: 5}[table]
        cover = keller.fixture_clique_cover(d)
        report = keller.verify_cover_by_rule(d, cover)
        if report.ok and d <= 4:
            report = verify_clique_cover(keller.build(d), cover)
        size = len(cover)
    payload = {"ok": report.ok, "family": "keller", "params": {"table": table},
               "size": size, "seed": args.seed}
    if not report.ok:
        for line in report.detail:
            print(f"fail: {line}", file=sys.stderr)
    _emit(args, payload, [f"ok = {report.ok}", f"size = {size}"])
    return EXIT_OK if report.ok else EXIT_FAIL


# --- conjecture --------------------------------------------------------------------

def _class_task(task):
    m, n, switches, restarts, seed = task
    pred = classify_queen_prediction(m, n)
    cert = classify_and_color(m, n, budget=SearchBudget(switches, restarts, seed),
                              seed=seed)
    verified = verify_edge_coloring(build_queen(m, n), cert.coloring).ok
    predicted = 2 if pred.status is QueenClass.CLASS2_OVERFULL else 1
    return (m, n, predicted, cert.claimed_class, verified)


def _cmd_conjecture2(args) -> int:
    budget = _budget(args)
    tasks = [(m, n, budget.max_switches, budget.max_restarts, args.seed)
             for m in range(1, args.m_max + 1)
             for n in range(m, args.n_max + 1)]
    results = _parallel_map(_class_task, tasks, args.jobs)
    bad = [(m, n) for m, n, pred, got, verified in results
           if not verified or pred != got]
    ok = not bad
    payload = {"ok": ok, "family": "queen",
               "params": {"m_max": args.m_max, "n_max": args.n_max},
               "size": len(results), "seed": args.seed}
    lines = [f"Q_{m},{n}: predicted class {p}, colored as class {g}"
             for m, n, p, g, _ in results]
    lines.append(f"checked = {len(results)}, disagreements = {len(bad)}")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_conjecture3(args) -> int:
    _need_long_run(args, "edge criticality re-colors the board once per edge")
    report = edge_critical_check(build_queen(args.m, args.n), _budget(args))
    payload = {"ok": report.critical, "family": "queen", "params": _params(args),
               "size": len(report.failures) + len(report.disproved),
               "seed": args.seed}
    lines = [f"critical = {report.critical}",
             f"inconclusive edges = {len(report.failures)}",
             f"disproving edges = {len(report.disproved)}"]
    _emit(args, payload, lines)
    if report.critical:
        return EXIT_OK
    return EXIT_FAIL if report.disproved else EXIT_BUDGET


def _cmd_conjecture4(args) -> int:
    rows = _survey_rows(args)
    bad = [(r.m, r.n) for r in rows if not r.conjecture4_ok]
    payload = {"ok": not bad, "family": "multicycle",
               "params": {"m": _csv_ints(args.m), "n_max": args.n_max},
               "size": len(rows), "seed": args.seed}
    _emit(args, payload, [f"checked = {len(rows)}, violations = {len(bad)}"] +
          [f"violated at m={m} n={n}" for m, n in bad])
    return EXIT_OK if not bad else EXIT_FAIL


def _cmd_conjecture5(args) -> int:
    rows = _survey_rows(args)
    bad = [(r.m, r.n) for r in rows if not r.conjecture5_ok]
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(survey_csv(rows))
    payload = {"ok": not bad, "family": "multicycle",
               "params": {"m": _csv_ints(args.m), "n_max": args.n_max},
               "size": len(rows), "seed": args.seed}
    _emit(args, payload, [f"checked = {len(rows)}, violations = {len(bad)}"] +
          [f"violated at m={m} n={n}" for m, n in bad])
    return EXIT_OK if not bad else EXIT_FAIL


def _cmd_conjecture9(args) -> int:
    if args.d_max > 7:
        raise ValueError("omega is tabulated through d=7 only")
    lines = []
    ok = True
    settled = {}
    for d in range(2, args.d_max + 1):
        cover = _source_cover(args, d)
        report = keller.verify_cover_by_rule(d, cover)
        ok = ok and report.ok
        bounds = keller.theta_bounds(d, len(cover))
        settled[d] = bounds.upper == bounds.lower
        lines.append(f"{bounds}" + ("  (matches the conjectured value)"
                                    if settled[d] else "  (open)"))
    payload = {"ok": ok, "family": "keller", "params": {"d_max": args.d_max},
               "size": sum(1 for v in settled.values() if v), "seed": args.seed}
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


# --- parser ------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="print a JSON result line")
    p.add_argument("--out", default=None, help="write the artifact to this file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--long-run", action="store_true",
                   help="allow paper-scale computations")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers for sweeps; output order is fixed")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-switches", type=int, default=None)
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--warm-start", default=None,
                   help="coloring file seeding the kempe search")


def _add_color_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--construction", default="auto",
                   choices=["auto", "even-union", "square-odd", "ladder-multicycle",
                            "overfull", "kempe"])
    _add_budget(p)
    _add_common(p)
    p.set_defaults(handler=_cmd_color, family="queen")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcert",
        description="Certified colorings, paths, and covers for chess-piece, "
                    "Mycielski, and Keller graphs.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gen", help="generate a graph as DIMACS")
    p.add_argument("--family", required=True,
                   choices=["queen", "rook", "bishop", "mycielski", "keller"])
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    _add_common(p)
    p.set_defaults(handler=_cmd_gen)

    _add_color_args(subs.add_parser("color", help="edge-color a queen graph"))

    # `queen color ...` is accepted as a spelled-out alias of `color ...`
    queen = subs.add_parser("queen", help="queen-graph commands")
    queen_subs = queen.add_subparsers(dest="queen_command", required=True)
    _add_color_args(queen_subs.add_parser("color"))

    verify = subs.add_parser("verify", help="check a certificate against a graph")
    vsubs = verify.add_subparsers(dest="kind", required=True)
    for kind in ("coloring", "hamcycle", "hampath", "decomposition", "cover"):
        vp = vsubs.add_parser(kind)
        vp.add_argument("--graph", required=True)
        vp.add_argument("--certificate", required=True)
        if kind == "hampath":
            vp.add_argument("--start", type=int, default=None,
                            help="required first vertex, 1-based")
            vp.add_argument("--end", type=int, default=None,
                            help="required last vertex, 1-based")
        if kind == "decomposition":
            vp.add_argument("--matching", default=None,
                            help="file of leftover matching pairs, one per line")
        _add_common(vp)
        vp.set_defaults(handler=_cmd_verify, kind=kind)

    mc = subs.add_parser("multicycle", help="derived multicycle machinery")
    msubs = mc.add_subparsers(dest="mc_command", required=True)
    p = msubs.add_parser("derive")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_multicycle_derive)
    p = msubs.add_parser("chi")
    p.add_argument("--mult", required=True, help="comma-separated multiplicities")
    p.add_argument("--oracle-cap", type=int, default=24)
    _add_common(p)
    p.set_defaults(handler=_cmd_multicycle_chi)
    p = msubs.add_parser("survey")
    p.add_argument("--m", required=True, help="comma-separated odd board heights")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--oracle-cap", type=int, default=24)
    p.add_argument("--csv", default=None, help="write rows as CSV to this file")
    _add_common(p)
    p.set_defaults(handler=_cmd_multicycle_survey)

    my = subs.add_parser("mycielski", help="Hamiltonian paths in mu(C_n)")
    ysubs = my.add_subparsers(dest="my_command", required=True)
    p = ysubs.add_parser("hampath")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="src", required=True, help="endpoint, e.g. x1")
    p.add_argument("--to", dest="dst", required=True, help="endpoint, e.g. y6")
    _add_common(p)
    p.set_defaults(handler=_cmd_mycielski_hampath)
    p = ysubs.add_parser("witness")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_mycielski_witness)

    ke = subs.add_parser("keller", help="Keller graph commands")
    ksubs = ke.add_subparsers(dest="keller_command", required=True)
    for name, handler in (("build", _cmd_keller_build),
                          ("hamcycle", _cmd_keller_hamcycle),
                          ("edgecolor", _cmd_keller_edgecolor),
                          ("alpha", _cmd_keller_alpha),
                          ("double-cover", _cmd_keller_double_cover)):
        p = ksubs.add_parser(name)
        p.add_argument("--d", type=int, required=True)
        _add_common(p)
        p.set_defaults(handler=handler)
    p = ksubs.add_parser("square")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--flip", default=None,
                   help="bit-string automorphism to apply, e.g. 001")
    _add_common(p)
    p.set_defaults(handler=_cmd_keller_square)
    p = ksubs.add_parser("decompose")
    p.add_argument("--d", type=int, required=True)
    _add_budget(p)
    p.add_argument("--matching-out", default=None)
    _add_common(p)
    p.set_defaults(handler=_cmd_keller_decompose)
    p = ksubs.add_parser("verify-fixture")
    p.add_argument("--table", type=int, required=True, choices=[1, 5, 6, 7])
    _add_common(p)
    p.set_defaults(handler=_cmd_keller_verify_fixture)

    co = subs.add_parser("conjecture", help="conjecture check harnesses")
    csubs = co.add_subparsers(dest="which", required=True)
    p = csubs.add_parser("2", help="class 2 iff overfull, over a board sweep")
    p.add_argument("--m-max", type=int, default=4)
    p.add_argument("--n-max", type=int, default=12)
    _add_budget(p)
    _add_common(p)
    p.set_defaults(handler=_cmd_conjecture2)
    p = csubs.add_parser("3", help="just-overfull boards are edge critical")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--n", type=int, default=13)
    _add_budget(p)
    _add_common(p)
    p.set_defaults(handler=_cmd_conjecture3)
    for which, handler in (("4", _cmd_conjecture4), ("5", _cmd_conjecture5)):
        p = csubs.add_parser(which)
        p.add_argument("--m", default="3,5,7,9", help="comma-separated odd heights")
        p.add_argument("--n-max", type=int, default=39)
        p.add_argument("--n-min", type=int, default=3)
        p.add_argument("--oracle-cap", type=int, default=24)
        if which == "5":
            p.add_argument("--csv", default=None)
        _add_common(p)
        p.set_defaults(handler=handler)
    p = csubs.add_parser("9", help="theta equals ceil(4^d / omega)")
    p.add_argument("--d-max", type=int, default=5)
    _add_common(p)
    p.set_defaults(handler=_cmd_conjecture9)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except MethodInapplicableError as exc:
        print(f"no construction: {exc}", file=sys.stderr)
        _emit(args, {"ok": False, "family": getattr(args, "family", args.command),
                     "params": _params(args), "error": str(exc)})
        return EXIT_FAIL
    except BudgetExhaustedError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        _emit(args, {"ok": False, "family": getattr(args, "family", args.command),
                     "params": _params(args), "error": str(exc)})
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        _emit(args, {"ok": False, "family": getattr(args, "family", args.command),
                     "params": _params(args), "error": str(exc)})
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
