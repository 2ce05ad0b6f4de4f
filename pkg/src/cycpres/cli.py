"""Command-line interface: classify, abelianize, reduce, scan, verify.

Scans stream one record per tuple in a fixed order (lexicographic by
(r, n, k, s, q)) regardless of the worker count, so identical invocations
produce byte-identical output.  Records can be cached in an append-only
JSON-lines file keyed by the canonical tuple string "r,n,k,s,q"; corrupt
cache lines are skipped with a warning and a random 1% of cache hits are
recomputed and compared as a soundness check.

Exit codes: 0 success, 1 internal inconsistency, 2 usage or parse error,
3 reduction not applicable, 4 output I/O error.  `verify` exits 0 only when
the suite found no violations.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from functools import partial
from math import gcd
from typing import Optional

from . import classify, cyclic_words, poly, prishchepov, sweeps
from .classify import Verdict
from .cyclic_words import WordParseError
from .poly import IntPoly
from .prishchepov import PrishParams, ReductionError

RECORD_FIELDS = [
    "r", "n", "k", "s", "q", "det", "invariant_factors", "perfect",
    "type_Z", "type_Zprime", "obvious", "classifier", "witness_j", "witness_eps",
]
CSV_HEADER = "r,n,k,s,q,det,perfect,type_Z,type_Zprime,obvious,classifier,witness_j,witness_eps"

GROUP_MODES = ("classify", "verify-theorem-a", "verify-corollary-b", "verify-reduction", "open-cases")
GRID_MODES = ("verify-lemma", "verify-resultant-symmetry")
SCAN_MODES = GROUP_MODES + GRID_MODES
GCD6_MODES = ("verify-theorem-a", "verify-lemma")

VERIFY_SUITES = (
    "theorem-a", "corollary-b", "lemma", "odoni", "resultant-symmetry",
    "dual-paths", "reduction", "flip", "newton-girard",
)

N_CAP = 60
ENV_CACHE = "CYCPRES_CACHE"


# ---------------------------------------------------------------------------
# records

def group_record(p: PrishParams) -> dict:
    """Full per-tuple record: determinant, Smith form, flags, classifier."""
    rep = classify.abelianization(p)
    flags = classify.type_flags(p)
    verdict = classify.corollary_b_classify(p)
    return {
        "r": p.r, "n": p.n, "k": p.k, "s": p.s, "q": p.q,
        "det": str(rep.det),
        "invariant_factors": [str(d) for d in rep.invariant_factors],
        "perfect": rep.is_perfect,
        "type_Z": flags.type_Z,
        "type_Zprime": flags.type_Zprime,
        "obvious": ",".join(flags.obvious_labels()),
        "classifier": verdict.verdict.value,
        "witness_j": None,
        "witness_eps": None,
    }


def _f_vector(n: int, r: int, k: int) -> tuple[int, ...]:
    t_n = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    f = poly.reduce_mod(prishchepov.poly_F(r, k), t_n)
    return tuple(f.coeffs) + (0,) * (n - len(f.coeffs))


def grid_record(n: int, r: int, k: int, with_witness: bool) -> dict:
    """Record for an (n, r, k) grid row, carrying the determinant of F."""
    d = classify._det_of_vector(_f_vector(n, r, k))
    rec = {
        "r": r, "n": n, "k": k, "s": None, "q": None,
        "det": str(d),
        "invariant_factors": None,
        "perfect": abs(d) == 1,
        "type_Z": None,
        "type_Zprime": None,
        "obvious": "",
        "classifier": "",
        "witness_j": None,
        "witness_eps": None,
    }
    if with_witness:
        w = classify.unit_symmetry_search(n, r, k)
        if w is not None:
            rec["witness_j"], rec["witness_eps"] = w.j, w.epsilon
    return rec


def attach_witness(rec: dict) -> dict:
    if rec["r"] >= 2 and rec["witness_j"] is None:
        w = classify.unit_symmetry_search(rec["n"], rec["r"], rec["k"])
        if w is not None:
            rec["witness_j"], rec["witness_eps"] = w.j, w.epsilon
    return rec


def record_to_csv(rec: dict) -> str:
    def cell(v):
        if v is None:
            return ""
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)

    return ",".join(cell(rec[f]) for f in RECORD_FIELDS if f != "invariant_factors")


def record_to_json(rec: dict) -> str:
    return json.dumps({f: rec[f] for f in RECORD_FIELDS}, separators=(", ", ": "))


# ---------------------------------------------------------------------------
# per-tuple violation checks used by scan modes

def _theorem_a_violation(rec: dict, include_mirror: bool) -> bool:
    if not rec["perfect"]:
        return False
    ok = rec["type_Z"] or rec["type_Zprime"] or bool(rec["obvious"])
    if not ok and include_mirror:
        ok = (rec["k"] - 1 + rec["q"]) % rec["n"] == 0
    return not ok


def _corollary_b_violation(rec: dict) -> bool:
    if rec["classifier"] == Verdict.INAPPLICABLE.value:
        return False
    return (rec["classifier"] == Verdict.PERFECT.value) != rec["perfect"]


def _reduction_violation(p: PrishParams) -> bool:
    red = prishchepov.reduce_params(p)
    lhs = abs(classify.det_of_params(p))
    rhs = abs(classify.det_of_params(red.reduced)) ** red.copies
    return lhs != rhs


def _symmetry_violation(n: int, r: int, k: int, det_F: int) -> bool:
    t_n = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    g = poly.reduce_mod(prishchepov.poly_G(r, k), t_n)
    det_G = classify._det_of_vector(tuple(g.coeffs) + (0,) * (n - len(g.coeffs)))
    return abs(det_F) != abs(det_G)


def _scan_worker(mode: str, include_mirror: bool, witness: bool, task) -> tuple[dict, bool]:
    if mode in GRID_MODES:
        n, r, k = task
        rec = grid_record(n, r, k, with_witness=(witness or mode == "verify-lemma"))
        if mode == "verify-lemma":
            viol = not classify.main_lemma_instance(n, r, k)
        else:
            viol = _symmetry_violation(n, r, k, int(rec["det"]))
        return rec, viol
    p = PrishParams(*task)
    rec = group_record(p)
    if witness:
        attach_witness(rec)
    viol = _record_violation(mode, include_mirror, rec)
    return rec, viol


def _record_violation(mode: str, include_mirror: bool, rec: dict) -> bool:
    if mode == "verify-theorem-a":
        return _theorem_a_violation(rec, include_mirror)
    if mode == "verify-corollary-b":
        return _corollary_b_violation(rec)
    if mode == "verify-reduction":
        return _reduction_violation(PrishParams(rec["r"], rec["n"], rec["k"], rec["s"], rec["q"]))
    return False


# ---------------------------------------------------------------------------
# cache

def _cache_key(task) -> str:
    return ",".join(str(x) for x in task)


def load_cache(path: str) -> dict[str, dict]:
    out: dict[str, dict] = {}
    if not os.path.exists(path):
        return out
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                key = obj["key"]
                rec = obj["record"]
                if not isinstance(key, str) or not isinstance(rec, dict):
                    raise ValueError("bad cache entry shape")
                missing = [f for f in RECORD_FIELDS if f not in rec]
                if missing:
                    raise ValueError(f"cache entry missing fields {missing}")
            except (ValueError, KeyError, TypeError) as exc:
                print(f"warning: skipping corrupt cache line {lineno}: {exc}", file=sys.stderr)
                continue
            out[key] = rec
    return out


def _core_record(rec: dict) -> dict:
    core = dict(rec)
    core["witness_j"] = None
    core["witness_eps"] = None
    return core


# ---------------------------------------------------------------------------
# argument plumbing

@dataclass
class ScanSpec:
    mode: str
    n_values: list[int]
    r_range: tuple[int, int] | None
    s_range: tuple[int, int] | None
    k_range: tuple[int, int] | None
    q_range: tuple[int, int] | None
    s_lock: bool
    jobs: int
    output: Optional[str]
    fmt: str
    cache: Optional[str]
    figures: Optional[str]
    witness: bool
    include_mirror: bool


def parse_n_spec(spec: str, gcd6_filter: str) -> list[int]:
    values: list[int] = []
    for part in spec.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    if any(n < 2 for n in values):
        raise ValueError("n must be at least 2")
    if gcd6_filter == "coprime":
        values = [n for n in values if gcd(n, 6) == 1]
    return sorted(set(values))


def _range_values(rng: tuple[int, int] | None, n: int) -> list[int]:
    lo, hi = rng if rng else (1, n)
    return list(range(lo, min(hi, n) + 1)) if rng else list(range(1, n + 1))


def scan_tasks(spec: ScanSpec) -> list[tuple]:
    tasks: list[tuple] = []
    for n in spec.n_values:
        if spec.mode == "open-cases":
            tasks.extend(p.key() for p in sweeps.open_case_tuples(n))
        elif spec.mode in GRID_MODES:
            r_lo = 2
            k_lo = 1 if spec.mode == "verify-lemma" else 2
            rs = [r for r in _range_values(spec.r_range, n) if r >= r_lo]
            ks = [k for k in _range_values(spec.k_range, n) if k >= k_lo]
            tasks.extend((n, r, k) for r in rs for k in ks)
        else:
            rs = _range_values(spec.r_range, n)
            ks = _range_values(spec.k_range, n)
            qs = _range_values(spec.q_range, n)
            for r in rs:
                ss = [r - 1] if spec.s_lock else _range_values(spec.s_range, n)
                for s in ss:
                    if s < 1:
                        continue
                    for k in ks:
                        for q in qs:
                            if spec.mode == "verify-reduction":
                                if s != r - 1 or (k - 1) % gcd(n, q) != 0 or n == gcd(n, q):
                                    continue
                            tasks.append((r, n, k, s, q))
    if spec.mode in GRID_MODES:
        tasks.sort(key=lambda t: (t[1], t[0], t[2]))  # (r, n, k) lexicographic
    else:
        tasks.sort()
    return tasks


def run_scan(spec: ScanSpec, out) -> int:
    tasks = scan_tasks(spec)
    worker = partial(_scan_worker, spec.mode, spec.include_mirror, spec.witness)
    cache: dict[str, dict] = {}
    cache_fh = None
    use_cache = spec.cache is not None and spec.mode in GROUP_MODES
    if use_cache:
        cache = load_cache(spec.cache)
        cache_fh = open(spec.cache, "a", encoding="utf-8")
    rng = random.Random()

    results: list[tuple[dict, bool]] = []
    pending: list[tuple] = []
    if use_cache:
        for task in tasks:
            if _cache_key(task) not in cache:
                pending.append(task)
    else:
        pending = tasks

    computed: dict[tuple, tuple[dict, bool]] = {}
    if pending:
        if spec.jobs > 1:
            from multiprocessing import Pool

            chunk = max(1, len(pending) // (spec.jobs * 8))
            with Pool(spec.jobs) as pool:
                for task, res in zip(pending, pool.imap(worker, pending, chunksize=chunk)):
                    computed[task] = res
        else:
            for task in pending:
                computed[task] = worker(task)

    for task in tasks:
        if task in computed:
            rec, viol = computed[task]
            if use_cache:
                entry = {"key": _cache_key(task), "record": _core_record(rec)}
                cache_fh.write(json.dumps(entry, separators=(",", ":")) + "\n")
        else:
            rec = dict(cache[_cache_key(task)])
            if rng.random() < 0.01:
                fresh, _ = worker(task)
                if _core_record(fresh) != _core_record(rec):
                    raise SystemExit(
                        f"cache soundness check failed for {_cache_key(task)}: "
                        f"cached record differs from a fresh computation"
                    )
            if spec.witness:
                attach_witness(rec)
            viol = _record_violation(spec.mode, spec.include_mirror, rec)
        results.append((rec, viol))
    if cache_fh is not None:
        cache_fh.close()

    violations = 0
    if spec.fmt == "csv":
        out.write(CSV_HEADER + "\n")
        for rec, viol in results:
            out.write(record_to_csv(rec) + "\n")
            violations += viol
        out.write(f"# summary tuples={len(results)} violations={violations}\n")
    else:
        for rec, viol in results:
            out.write(record_to_json(rec) + "\n")
            violations += viol
        out.write(json.dumps({"summary": {"tuples": len(results), "violations": violations}}) + "\n")

    if spec.figures:
        from . import plots

        plots.render_scan_figures([rec for rec, _ in results], spec.mode, spec.figures)
    return 0


# ---------------------------------------------------------------------------
# subcommands

def _print_group_report(rec: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(record_to_json(rec) + "\n")
        return
    out.write(f"P({rec['r']},{rec['n']},{rec['k']},{rec['s']},{rec['q']})\n")
    out.write(f"det: {rec['det']}\n")
    out.write("invariant factors: " + " ".join(rec["invariant_factors"]) + "\n")
    out.write(f"perfect: {'true' if rec['perfect'] else 'false'}\n")
    out.write(f"type_Z: {'true' if rec['type_Z'] else 'false'}"
              f"  type_Z': {'true' if rec['type_Zprime'] else 'false'}\n")
    out.write(f"obvious congruences: {rec['obvious'] or '-'}\n")
    out.write(f"classifier: {rec['classifier']}\n")
    if rec["witness_j"] is not None:
        out.write(f"unit symmetry witness: j={rec['witness_j']} eps={rec['witness_eps']:+d}\n")


def cmd_classify(args, out) -> int:
    try:
        p = PrishParams(args.r, args.n, args.k, args.s, args.q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rec = group_record(p)
    if args.witness:
        attach_witness(rec)
    _print_group_report(rec, args.json, out)
    return 0


def cmd_abelianize(args, out) -> int:
    try:
        w = cyclic_words.parse_word(args.word, args.n)
    except (WordParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    c = cyclic_words.exponent_sums(w)
    from .exact_linear import det as mat_det, smith_normal_form

    M = cyclic_words.circulant_of(c)
    d = mat_det(M)
    snf = smith_normal_form(M)
    payload = {
        "n": args.n,
        "word": cyclic_words.word_to_text(w),
        "exponent_sums": list(c),
        "det": str(d),
        "invariant_factors": [str(x) for x in snf],
        "perfect": abs(d) == 1,
        "finite_abelianization": d != 0,
    }
    if args.json:
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(f"word: {payload['word'] or '(empty)'}  (n={args.n})\n")
        out.write(f"exponent sums: {' '.join(str(x) for x in c)}\n")
        out.write(f"det: {payload['det']}\n")
        out.write("invariant factors: " + " ".join(payload["invariant_factors"]) + "\n")
        out.write(f"perfect: {'true' if payload['perfect'] else 'false'}\n")
        out.write(f"finite abelianization: {'true' if payload['finite_abelianization'] else 'false'}\n")
    return 0


def cmd_reduce(args, out) -> int:
    try:
        p = PrishParams(args.r, args.n, args.k, args.s, args.q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        red = prishchepov.reduce_params(p)
    except ReductionError as exc:
        print(f"not reducible: {exc}", file=sys.stderr)
        return 3
    payload = {
        "d": red.d, "N": red.N, "Q": red.Q, "Qhat": red.Qhat,
        "Kprime": red.Kprime, "K": red.K, "copies": red.copies,
        "reduced": {"r": red.reduced.r, "n": red.reduced.n, "k": red.reduced.k,
                    "s": red.reduced.s, "q": red.reduced.q},
    }
    out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_scan(args, out) -> int:
    try:
        gcd6 = args.gcd6_filter or ("coprime" if args.mode in GCD6_MODES else "all")
        n_values = parse_n_spec(args.n, gcd6)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not n_values:
        print("error: empty n set after filtering", file=sys.stderr)
        return 2
    if args.mode in GCD6_MODES:
        bad = [n for n in n_values if gcd(n, 6) != 1]
        if bad:
            print(f"error: mode {args.mode} requires gcd(n,6)=1; offending n: {bad} "
                  f"(use --gcd6-filter coprime)", file=sys.stderr)
            return 2
    if args.mode == "open-cases":
        bad = [n for n in n_values if n % 2 == 0]
        if bad:
            print(f"error: open-cases needs odd n (2r = 1 mod n); offending: {bad}", file=sys.stderr)
            return 2
    if max(n_values) > N_CAP and not args.force:
        print(f"error: n > {N_CAP} refused without --force", file=sys.stderr)
        return 2

    def rng_pair(lo, hi):
        return None if lo is None and hi is None else (lo or 1, hi or max(n_values))

    spec = ScanSpec(
        mode=args.mode,
        n_values=n_values,
        r_range=rng_pair(args.r_min, args.r_max),
        s_range=rng_pair(args.s_min, args.s_max),
        k_range=rng_pair(args.k_min, args.k_max),
        q_range=rng_pair(args.q_min, args.q_max),
        s_lock=args.lock_s,
        jobs=args.jobs,
        output=args.output,
        fmt=args.format,
        cache=args.cache if args.cache is not None else os.environ.get(ENV_CACHE),
        figures=args.figures,
        witness=args.witness,
        include_mirror=args.include_mirror,
    )
    if spec.output:
        try:
            fh = open(spec.output, "w", encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write output: {exc}", file=sys.stderr)
            return 4
        try:
            return run_scan(spec, fh)
        finally:
            fh.close()
    return run_scan(spec, out)


def _parse_verify_n(args, default: list[int]) -> list[int]:
    if args.n:
        return parse_n_spec(args.n, "all")
    if args.n_max:
        return list(range(2, args.n_max + 1))
    return default


def cmd_verify(args, out) -> int:
    suite = args.suite
    if suite not in VERIFY_SUITES:
        print(f"error: unknown suite {suite!r}; choose from {', '.join(VERIFY_SUITES)}",
              file=sys.stderr)
        return 2
    violations: list = []
    checked = ""
    if suite == "theorem-a":
        ns = [n for n in _parse_verify_n(args, [5, 7]) if gcd(n, 6) == 1]
        violations = sweeps.theorem_a_violations(ns, include_mirror=args.include_mirror)
        checked = f"n={ns}, full r,s,k,q box"
    elif suite == "corollary-b":
        ns = _parse_verify_n(args, [5, 7])
        violations, decided = sweeps.corollary_b_disagreements(ns)
        checked = f"n={ns}, {decided} decided tuples"
    elif suite == "lemma":
        ns = [n for n in _parse_verify_n(args, [5, 7]) if gcd(n, 6) == 1]
        violations = sweeps.main_lemma_violations(ns)
        checked = f"n={ns}"
    elif suite == "odoni":
        ns = _parse_verify_n(args, [5, 7])
        violations = sweeps.odoni_violations(ns)
        checked = f"n={ns}"
    elif suite == "resultant-symmetry":
        n_max = args.n_max or 12
        violations = sweeps.resultant_symmetry_violations(n_max)
        checked = f"n<= {n_max}"
    elif suite == "dual-paths":
        ns = _parse_verify_n(args, list(range(2, 16)))
        violations = sweeps.dual_path_failures(ns, per_n=args.per_n, seed=args.seed)
        checked = f"n={ns}, {args.per_n} random polynomials each"
    elif suite == "reduction":
        n_max = args.n_max or 20
        violations, count = sweeps.reduction_mismatches(n_max)
        checked = f"n <= {n_max}, {count} tuples"
    elif suite == "flip":
        ns = _parse_verify_n(args, [5, 7])
        violations = sweeps.flip_mismatches(ns)
        checked = f"n={ns}"
    elif suite == "newton-girard":
        ns = _parse_verify_n(args, [5])
        for n in ns:
            violations.extend((n,) + pair for pair in sweeps.newton_girard_anomalies(n, args.ell))
        checked = f"n={ns}, ell={args.ell}"
    out.write(f"suite {suite}: checked {checked}\n")
    out.write(f"violations: {len(violations)}\n")
    for v in violations:
        out.write(f"  {v}\n")
    return 0 if not violations else 1


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cycpres",
        description="Exact classification of cyclically presented groups P(r,n,k,s,q).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_params(sp):
        for name in ("r", "n", "k", "s", "q"):
            sp.add_argument(name, type=int)

    sp = sub.add_parser("classify", help="classify one parameter tuple")
    add_params(sp)
    sp.add_argument("--json", action="store_true", help="emit a JSON record")
    sp.add_argument("--witness", action="store_true",
                    help="include the unit-symmetry witness for (n, r, k)")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("abelianize", help="abelianization of a general cyclic word")
    sp.add_argument("--word", required=True, help='e.g. "x0 x1 X2"')
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_abelianize)

    sp = sub.add_parser("reduce", help="gcd(n,q) normalization of a tuple (JSON output)")
    add_params(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("scan", help="stream records over a parameter box")
    sp.add_argument("--mode", choices=SCAN_MODES, default="classify")
    sp.add_argument("--n", required=True, help='e.g. "5,7" or "5..13"')
    sp.add_argument("--gcd6-filter", choices=("coprime", "all"), default=None)
    for name in ("r", "s", "k", "q"):
        sp.add_argument(f"--{name}-min", type=int, default=None)
        sp.add_argument(f"--{name}-max", type=int, default=None)
    sp.add_argument("--lock-s", action="store_true", help="lock s = r-1")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--output", default=None)
    sp.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    sp.add_argument("--cache", default=None,
                    help=f"JSON-lines record cache (default: ${ENV_CACHE} if set)")
    sp.add_argument("--figures", default=None, metavar="DIR",
                    help="render one PNG per n alongside the output")
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--include-mirror", action="store_true",
                    help="theorem-a: also accept the flip congruence k = 1-q (mod n)")
    sp.add_argument("--force", action="store_true", help=f"allow n > {N_CAP}")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify", help="run a verification suite, exit 0 iff clean")
    sp.add_argument("suite")
    sp.add_argument("--n", default=None, help='e.g. "5,7,11"')
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--per-n", type=int, default=100, help="dual-paths: polynomials per n")
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--ell", type=int, default=4, help="newton-girard: multiset size")
    sp.add_argument("--include-mirror", action="store_true")
    sp.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
