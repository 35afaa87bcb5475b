"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 unparsable or invalid instance,
3 budget exceeded, 4 infeasible / unbounded / empty input where disallowed.
"""

import argparse
import csv
import io
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import report
from .budget import Budgets, parse_overrides
from .deep_bases import enumerate_deep_bases
from .errors import (BudgetError, DimensionError, EmptySetError, GenerationError,
                     InfeasibleError, InstanceParseError, ParameterError, RankError,
                     UnboundedError)
from .generators import InstanceSpec, gen, suite_seed
from .hull import faces, hull_vertices, lattice_points
from .instance import format_instance, instance_hash, parse_instance
from .polyhedron import real_vertices
from .subdet import delta, delta_profile
from .verify import bound_formulas, gamma_bruteforce, verify_instance

EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET, EXIT_INFEASIBLE = 1, 2, 3, 4

SUITE_KEYS = {"n", "m", "bound", "scale", "count", "seed"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ------------------------------------------------------------------ helpers


def _load(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise InstanceParseError("file is not UTF-8 text") from None
    return parse_instance(text), instance_hash(data)


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _pt(v):
    return "(" + ", ".join(report.num(x) for x in v) + ")"


def _emit(fmt, doc, header, rows, text):
    if fmt == "json":
        return report.dumps(doc)
    if fmt == "csv":
        return _csv(header, rows)
    return text


def parse_suite(spec, seed_override=None):
    """``family:key=val,...`` -> list of (instance id, InstanceSpec)."""
    family, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, sep, val = item.partition("=")
        if not sep or key not in SUITE_KEYS:
            raise UsageError(f"bad suite parameter {item!r}; keys: {sorted(SUITE_KEYS)}")
        try:
            params[key] = int(val)
        except ValueError:
            raise UsageError(f"suite parameter {key} must be an integer") from None
    if seed_override is not None:
        params["seed"] = seed_override
    count = params.pop("count", 1)
    seed = params.pop("seed", 0)
    n = params.pop("n", 2)
    base = InstanceSpec(family=family, n=n, m=params.get("m", 0),
                        entry_bound=params.get("bound", 3), scale=params.get("scale", 1))
    base.validate()
    out = []
    for i in range(count):
        s = suite_seed(seed, i) if family == "random" else seed
        spec_i = InstanceSpec(base.family, base.n, base.m, base.entry_bound, base.scale, s)
        if family == "random":
            ident = f"random-n{n}-m{base.m}-b{base.entry_bound}-s{s}"
        else:
            ident = f"{family}-n{n}-scale{base.scale}"
        out.append((ident, spec_i))
    return out


def _verify_spec(job):
    ident, spec, budgets, timing = job
    t0 = time.perf_counter()
    P = gen(spec, budgets)
    digest = instance_hash(format_instance(P))
    rep = verify_instance(P, ident, budgets)
    return report.instance_document(rep, digest, time.perf_counter() - t0 if timing else None)


# ------------------------------------------------------------------ commands


def cmd_delta(args, budgets):
    P, _ = _load(args.file)
    A = [list(r) for r in P.a]
    ks = None
    if args.k:
        if "all" in args.k:
            ks = list(range(1, min(P.m, P.n) + 1))
        else:
            try:
                ks = [int(k) for k in args.k]
            except ValueError:
                raise UsageError("--k takes integers or 'all'") from None
    prof = delta_profile(A, list(P.b), ks, budgets)
    doc = {"delta_1": report.num(prof.delta_1), "delta": report.num(prof.delta_rank),
           "delta_ext": report.num(prof.delta_ext)}
    rows = [["delta_1", prof.delta_1], ["delta", prof.delta_rank], ["delta_ext", prof.delta_ext]]
    lines = [f"delta_1   = {prof.delta_1}", f"delta     = {prof.delta_rank}",
             f"delta_ext = {prof.delta_ext}"]
    if prof.per_k:
        doc["per_k"] = {str(k): report.num(v) for k, v in prof.per_k}
        for k, v in prof.per_k:
            rows.append([f"delta_{k}", v])
            lines.append(f"delta_{k}   = {v}")
    return _emit(args.format, doc, ["quantity", "value"], rows, "\n".join(lines) + "\n")


def cmd_hull(args, budgets):
    P, _ = _load(args.file)
    S = lattice_points(P, budgets)
    if not S:
        raise EmptySetError("P contains no integer points")
    V = hull_vertices(S)
    vs = set(V)
    doc = {"lattice_points": [report.vec(p) for p in S], "hull_vertices": [report.vec(v) for v in V]}
    rows = [[*p, int(p in vs)] for p in S]
    text = (f"{len(S)} lattice points, {len(V)} hull vertices\n"
            + "".join(f"{'*' if p in vs else ' '} {_pt(p)}\n" for p in S))
    return _emit(args.format, doc, [f"x{j + 1}" for j in range(P.n)] + ["vertex"], rows, text)


def cmd_vertices(args, budgets):
    P, _ = _load(args.file)
    vs = real_vertices(P, budgets)
    doc = {"vertices": [{"point": report.vec(v.point), "tight_rows": list(v.tight_rows)} for v in vs]}
    rows = [[report.num(x) for x in v.point] + [" ".join(map(str, v.tight_rows))] for v in vs]
    text = f"{len(vs)} vertices\n" + "".join(
        f"{_pt(v.point)}  tight {list(v.tight_rows)}\n" for v in vs)
    return _emit(args.format, doc, [f"x{j + 1}" for j in range(P.n)] + ["tight_rows"], rows, text)


def cmd_faces(args, budgets):
    P, _ = _load(args.file)
    S = lattice_points(P, budgets)
    if not S:
        raise EmptySetError("P contains no integer points")
    V = hull_vertices(S)
    F = faces(S, vertices=V, budgets=budgets)
    doc = {"vertices": [report.vec(v) for v in V], "faces": [
        {"dim": f.dim_k, "vertices": list(f.vertex_indices), "improper": f.improper,
         "lattice_members": [report.vec(p) for p in f.lattice_members],
         "certificate": {"c": report.vec(f.c), "d": report.num(f.d), "margin": report.num(f.margin)}}
        for f in F]}
    rows = [[f.dim_k, " ".join(map(str, f.vertex_indices)), len(f.lattice_members),
             " ".join(map(report.num, f.c)), report.num(f.d), report.num(f.margin)] for f in F]
    text = "".join(f"dim {f.dim_k}: vertices {list(f.vertex_indices)}"
                   f"{' (improper)' if f.improper else ''}, {len(f.lattice_members)} lattice points,"
                   f" c = {_pt(f.c)}, d = {report.num(f.d)}\n" for f in F)
    return _emit(args.format, doc, ["dim", "vertices", "lattice_members", "c", "d", "margin"], rows, text)


def cmd_deep_bases(args, budgets):
    P, _ = _load(args.file)
    d = args.delta if args.delta is not None else delta([list(r) for r in P.a], budgets)
    bases = enumerate_deep_bases(P, d, budgets)
    doc = {"delta": report.num(d), "beta": len(bases), "bases": [
        {"rows": list(B.rows_b), "det_abs": report.num(B.det_abs), "witness": report.vec(B.witness)}
        for B in bases]}
    rows = [[" ".join(map(str, B.rows_b)), B.det_abs, " ".join(map(report.num, B.witness))] for B in bases]
    text = f"delta = {d}, beta = {len(bases)}\n" + "".join(
        f"rows {list(B.rows_b)}  |det| {B.det_abs}  witness {_pt(B.witness)}\n" for B in bases)
    return _emit(args.format, doc, ["rows", "det_abs", "witness"], rows, text)


def cmd_gamma(args, budgets):
    value, witness = gamma_bruteforce(args.n, args.delta, budgets)
    doc = {"n": args.n, "delta": report.num(args.delta), "gamma": value,
           "witness": [report.vec(p) for p in witness]}
    rows = [list(p) for p in witness]
    text = f"gamma({args.n}, {args.delta}) = {value}\n" + "".join(f"  {_pt(p)}\n" for p in witness)
    return _emit(args.format, doc, [f"x{j + 1}" for j in range(args.n)], rows, text)


def cmd_bounds(args, budgets):
    b = bound_formulas(args.n, args.m, args.delta)
    vals = [("main_bound", b.main_bound), ("xi", b.xi), ("brass", b.brass),
            ("erdos_furedi", b.erdos_furedi)]
    doc = {k: report.num(v) for k, v in vals}
    text = "".join(f"{k:<13}= {report.num(v)}\n" for k, v in vals)
    return _emit(args.format, doc, ["quantity", "value"], [[k, report.num(v)] for k, v in vals], text)


def cmd_gen(args, budgets):
    spec = InstanceSpec(args.family, args.n, args.m, args.bound, args.scale, args.seed)
    P = gen(spec, budgets)
    comment = (f"family={spec.family} n={spec.n} m={P.m} bound={spec.entry_bound}"
               f" scale={spec.scale} seed={spec.seed}")
    text = format_instance(P, comment)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return ""
    return text


def _verify_text(doc):
    c = doc["checks"]
    cor = c["corollary1"]
    return (
        f"instance {doc['instance']['id'] or doc['instance']['sha256'][:12]}: "
        f"m={doc['instance']['m']} n={doc['instance']['n']} delta={doc['delta']['delta']}\n"
        f"  lattice points {doc['counts']['lattice_points']}, hull vertices "
        f"{doc['counts']['hull_vertices']}, beta {doc['counts']['beta']}\n"
        f"  theorem 1: {'ok' if c['theorem1']['ok'] else 'VIOLATED'} "
        f"({c['theorem1']['faces_checked']} faces)\n"
        f"  corollary 1: prop1 {'ok' if cor['prop1']['ok'] else 'VIOLATED'}, "
        f"prop2 derived {cor['prop2']['derived']['fail']} fail, "
        f"literal {cor['prop2']['literal']['fail']} fail, "
        f"prop3 {'ok' if cor['prop3']['ok'] else 'VIOLATED'} "
        f"(|vert| / bound = {cor['prop3']['ratio']})\n"
        f"  lemma 1: {'ok' if c['lemma1']['ok'] else 'VIOLATED'} "
        f"(beta * gamma = {c['lemma1']['bound']}, gamma {c['lemma1']['gamma_source']})\n"
    )


VERIFY_CSV = ["id", "m", "n", "delta", "lattice_points", "hull_vertices", "beta", "theorem1_ok",
              "prop1_ok", "prop2_derived_fail", "prop2_literal_fail", "main_bound", "main_ok",
              "lemma1_bound", "lemma1_ok"]


def _verify_row(doc):
    c = doc["checks"]
    cor = c["corollary1"]
    return [doc["instance"]["id"], doc["instance"]["m"], doc["instance"]["n"], doc["delta"]["delta"],
            doc["counts"]["lattice_points"], doc["counts"]["hull_vertices"], doc["counts"]["beta"],
            c["theorem1"]["ok"], cor["prop1"]["ok"], cor["prop2"]["derived"]["fail"],
            cor["prop2"]["literal"]["fail"], cor["prop3"]["main_bound"], cor["prop3"]["ok"],
            c["lemma1"]["bound"], c["lemma1"]["ok"]]


def cmd_verify(args, budgets):
    if bool(args.file) == bool(args.suite):
        raise UsageError("verify needs either FILE or --suite (not both)")
    if args.file:
        t0 = time.perf_counter()
        P, digest = _load(args.file)
        rep = verify_instance(P, args.id or "", budgets)
        doc = report.instance_document(rep, digest, time.perf_counter() - t0 if args.timing else None)
        return _emit(args.format, doc, VERIFY_CSV, [_verify_row(doc)], _verify_text(doc))
    try:
        jobs = [(ident, spec, budgets, args.timing)
                for s in args.suite for ident, spec in parse_suite(s, args.seed)]
    except ParameterError as exc:
        raise UsageError(str(exc)) from None
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            docs = list(pool.map(_verify_spec, jobs))
    else:
        docs = [_verify_spec(j) for j in jobs]
    doc = report.suite_document(args.suite, docs)
    s = doc["summary"]
    text = "".join(_verify_text(d) for d in docs) + (
        f"summary: {s['instances']} instances ({s['nonempty']} with lattice points), "
        f"{s['faces_checked']} faces, theorem 1 violations {s['theorem1_violations']}, "
        f"prop1 failures {s['prop1_failures']}, prop2 derived failures {s['prop2_derived_failures']}, "
        f"prop2 literal failures {s['prop2_literal_failures']}/{s['prop2_vertices']}, "
        f"main bound violations {s['main_bound_violations']} (max ratio {s['max_main_ratio']}), "
        f"lemma 1 violations {s['lemma1_violations']}\n")
    return _emit(args.format, doc, VERIFY_CSV, [_verify_row(d) for d in docs], text)


# ------------------------------------------------------------------ parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--budget", action="append", default=[], metavar="NAME=VALUE",
                        help="override an enumeration budget (repeatable)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = _Parser(prog="intvert", description="Integer hulls of Delta-modular polyhedra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("delta", parents=[common], help="subdeterminant parameters")
    s.add_argument("file")
    s.add_argument("--k", nargs="+", help="also print Delta_k for these k ('all' for every k)")
    s.set_defaults(func=cmd_delta)

    for name, func, hlp in (("hull", cmd_hull, "lattice points and vertices of P_I"),
                            ("vertices", cmd_vertices, "vertices of P"),
                            ("faces", cmd_faces, "certified faces of P_I")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("file")
        s.set_defaults(func=func)

    s = sub.add_parser("deep-bases", parents=[common], help="Delta-deep bases")
    s.add_argument("file")
    s.add_argument("--delta", type=int, help="override Delta (default: Delta(A))")
    s.set_defaults(func=cmd_deep_bases)

    s = sub.add_parser("gamma", parents=[common], help="largest convex-independent grid subset")
    s.add_argument("n", type=int)
    s.add_argument("delta", type=int)
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("bounds", parents=[common], help="closed-form bound values")
    s.add_argument("n", type=int)
    s.add_argument("m", type=int)
    s.add_argument("delta", type=int)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("gen", parents=[common], help="generate an instance file")
    s.add_argument("--family", required=True,
                   choices=("hypercube", "scaled-simplex", "dilated-triangle", "random"))
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--bound", type=int, default=3)
    s.add_argument("--scale", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", parents=[common], help="run every check")
    s.add_argument("file", nargs="?")
    s.add_argument("--suite", action="append",
                   help="family:key=val,... e.g. random:n=2,m=6,bound=3,count=100,seed=7")
    s.add_argument("--seed", type=int, help="override the suite seed")
    s.add_argument("--id", help="instance id recorded in the report")
    s.add_argument("--timing", action="store_true",
                   help="add wall-clock timing (makes output run-dependent)")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        budgets = Budgets.from_env()
        for item in args.budget:
            budgets = budgets.updated(parse_overrides(item))
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        out = args.func(args, budgets)
    except (UsageError, ParameterError, DimensionError) as exc:
        print(f"intvert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InstanceParseError, RankError) as exc:
        print(f"intvert: invalid instance: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetError, GenerationError) as exc:
        print(f"intvert: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InfeasibleError, UnboundedError, EmptySetError) as exc:
        print(f"intvert: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
