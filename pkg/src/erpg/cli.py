"""Command-line front end.

Subcommands:

* ``build``  -- construct and certify a coclique or triangle-free set
* ``graph``  -- export ER_q in graph6 / DIMACS / CSV
* ``solve``  -- exact maximum-independent-set on ER_q
* ``orbits`` -- orbit census for odd square q
* ``table``  -- bound table with constructed sizes

Exit codes: 0 success, 2 invalid arguments, 3 verification failure,
4 bound violation (both 3 and 4 indicate an implementation bug).
Identical inputs produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

from . import constructions as cons
from . import graphs as gr
from . import hypergraph as hg
from .field import factor_prime_power, field_for_order
from .plane import ProjectivePlane
from .polarity import Polarity, build_er_graph

EXIT_USAGE = 2
EXIT_VERIFICATION = 3
EXIT_BOUND = 4

_CONSTRUCTION_FLAGS = {
    "auto": "auto",
    "odd-neg": "odd_sq_neg",
    "odd-pos": "odd_sq_pos",
    "even-arc": "even_arc",
    "even-sq-arc": "even_sq_subfield_arc",
    "triangle-free": "triangle_free",
}


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _check_q(q):
    try:
        factor_prime_power(q)
    except ValueError as e:
        raise CliError(str(e))
    return q


def _report(args, command, parameters, summary, outputs=(), t0=None):
    if getattr(args, "json", False):
        doc = {"command": command, "parameters": parameters,
               "result": summary, "output_paths": list(outputs)}
        if getattr(args, "timings", False) and t0 is not None:
            doc["wall_time_s"] = time.monotonic() - t0
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for k, v in summary.items():
            print(f"{k}: {v}")
        for p in outputs:
            print(f"wrote {p}")


# ---------------------------------------------------------------------------

def cmd_build(args):
    t0 = time.monotonic()
    q = _check_q(args.q)
    construction = _CONSTRUCTION_FLAGS[args.construction]
    outputs = []
    if construction == "triangle_free":
        if q % 2:
            raise CliError(f"q = {q}: triangle-free construction needs even q")
        tfs = cons.triangle_free_set(q)
        ctx, plane, pol = cons._context(q)
        sub = cons.induced_on_points(plane, pol, tfs.points)
        tri = sub.triangle_count()
        regular = sub.is_regular(q // 2)
        girth = sub.girth()
        if tri or not regular or girth < 5:
            raise CliError("triangle-free verification failed",
                           EXIT_VERIFICATION)
        doc = {
            "version": cons.CERTIFICATE_VERSION,
            "construction": "triangle_free",
            "q": q,
            "modulus": list(ctx.modulus),
            "parameters": {"lambda": tfs.lam},
            "size": tfs.size,
            "claimed_size": q * (q + 1) // 2,
            "points": [[list(ctx.coeffs(c)) for c in pt] for pt in tfs.points],
            "verified": {"triangle_free": True, "regular": True,
                         "girth_at_least_5": True, "size_matches": True},
        }
        payload = json.dumps(doc, indent=2, sort_keys=True)
        summary = {"construction": "triangle_free", "q": q, "size": tfs.size,
                   "regular": q // 2, "girth": girth}
    else:
        try:
            cert = cons.build_coclique(q, construction)
        except ValueError as e:
            raise CliError(str(e))
        except cons.VerificationError as e:
            raise CliError(str(e), EXIT_VERIFICATION)
        if not all(cert.verified.values()):
            raise CliError("certificate verification failed",
                           EXIT_VERIFICATION)
        ctx = field_for_order(q)
        payload = cert.to_json(ctx)
        summary = {"construction": cert.construction_id, "q": q,
                   "size": cert.size, "claimed_size": cert.claimed_size,
                   "verified": cert.verified}
        if cert.extension:
            summary["extension_candidates"] = cert.extension["candidate_count"]
            summary["greedy_extended_size"] = cert.extension["greedy_size"]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
        outputs.append(args.out)
    _report(args, "build", {"q": q, "construction": args.construction},
            summary, outputs, t0)


def cmd_graph(args):
    t0 = time.monotonic()
    q = _check_q(args.q)
    plane = ProjectivePlane(field_for_order(q))
    g = build_er_graph(plane)
    data = gr.export(g, args.format)
    outputs = []
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        outputs.append(args.out)
    else:
        sys.stdout.buffer.write(data)
        if not data.endswith(b"\n"):
            sys.stdout.buffer.write(b"\n")
    m = g.num_edges()
    assert m == q * (q + 1) ** 2 // 2
    _report(args, "graph", {"q": q, "format": args.format},
            {"n": g.n, "m": m}, outputs, t0)


def alpha_bounds(q):
    """Known lower/upper bounds on the independence number of ER_q."""
    r = cons.isqrt_exact(q)
    upper = math.floor(q ** 1.5 + q ** 0.5) + 1
    lower = 1
    note = ""
    if q % 2 == 0:
        if r is not None:
            upper = min(upper, q ** 1.5 - q + r + 1)
            lower = int(q ** 1.5 - q + r)
        else:
            h = cons.isqrt_exact(q // 2)
            lower = int(round(q ** 1.5 / math.sqrt(2))) - q + h
    else:
        if r is not None:
            if r % 4 == 3:
                lower = (q * r - r) // 2 + q + 1
            else:
                lower = (q * r + q) // 2 + q + 1
        else:
            lower = math.floor(120 * q ** 1.5 / (73 * math.sqrt(73)))
            note = "reported, not constructed"
    return int(lower), int(upper), note


def cmd_solve(args):
    t0 = time.monotonic()
    q = _check_q(args.q)
    plane = ProjectivePlane(field_for_order(q))
    g = build_er_graph(plane)
    budget_nodes = args.budget or int(os.environ.get("ERPG_BUDGET_NODES",
                                                     10 ** 8))
    initial = None
    try:
        cert = cons.build_coclique(q, "auto")
        initial = [plane.index[pt] for pt in cert.points]
    except ValueError:
        pass  # no construction for this q; solve unseeded
    res = gr.max_independent_set(g, gr.SolveBudget(max_nodes=budget_nodes),
                                 initial=initial)
    lower, upper, note = alpha_bounds(q)
    violation = None
    if res.size > upper:
        violation = f"value {res.size} exceeds upper bound {upper}"
    if res.status == "optimal" and not note and res.size < lower:
        violation = f"optimal value {res.size} below lower bound {lower}"
    summary = {"q": q, "alpha": res.size, "status": res.status,
               "nodes": res.nodes, "lower_bound": lower,
               "upper_bound": upper}
    _report(args, "solve", {"q": q, "budget": budget_nodes}, summary, (), t0)
    if violation:
        raise CliError(f"bound violation: {violation}", EXIT_BOUND)


def cmd_orbits(args):
    t0 = time.monotonic()
    q = _check_q(args.q)
    try:
        census = cons.orbit_census_odd_square(q)
    except ValueError as e:
        raise CliError(str(e))
    ok = census.matches_expected()
    summary = {
        "q": q,
        "census": [{"class": c, "orbit_size": s, "multiplicity": m}
                   for c, s, m in census.entries],
        "status": "PASS" if ok else "FAIL",
    }
    _report(args, "orbits", {"q": q}, summary, (), t0)
    if not ok:
        raise CliError("orbit census mismatch", EXIT_VERIFICATION)


TABLE_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 81, 121, 128]


def cmd_table(args):
    t0 = time.monotonic()
    rows = []
    for q in TABLE_Q:
        lower, upper, note = alpha_bounds(q)
        built = ""
        try:
            cert = cons.build_coclique(q, "auto")
            built = cert.size
        except ValueError:
            pass
        rows.append({"q": q, "lower": lower, "upper": upper,
                     "constructed": built, "note": note})
    if args.json:
        print(json.dumps({"command": "table", "rows": rows}, indent=2,
                         sort_keys=True))
    else:
        print(f"{'q':>5} {'lower':>8} {'constructed':>12} {'upper':>8}  note")
        for r in rows:
            print(f"{r['q']:>5} {r['lower']:>8} {str(r['constructed']):>12} "
                  f"{r['upper']:>8}  {r['note']}")


# ---------------------------------------------------------------------------

def make_parser():
    p = argparse.ArgumentParser(
        prog="erpg",
        description="Polarity graphs of PG(2,q): constructions, "
                    "verification, exact solving")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct and certify a point set")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--construction", choices=sorted(_CONSTRUCTION_FLAGS),
                   default="auto")
    b.add_argument("--out")
    b.add_argument("--json", action="store_true")
    b.add_argument("--timings", action="store_true")
    b.set_defaults(func=cmd_build)

    g = sub.add_parser("graph", help="export ER_q")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--format", choices=["graph6", "dimacs", "csv"],
                   required=True)
    g.add_argument("--out")
    g.add_argument("--json", action="store_true")
    g.add_argument("--timings", action="store_true")
    g.set_defaults(func=cmd_graph)

    s = sub.add_parser("solve", help="exact alpha(ER_q)")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--budget", type=int)
    s.add_argument("--json", action="store_true")
    s.add_argument("--timings", action="store_true")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("orbits", help="orbit census, odd square q")
    o.add_argument("--q", type=int, required=True)
    o.add_argument("--json", action="store_true")
    o.add_argument("--timings", action="store_true")
    o.set_defaults(func=cmd_orbits)

    t = sub.add_parser("table", help="bound table")
    t.add_argument("--set", choices=["default"], default="default")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except cons.VerificationError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    return 0


if __name__ == "__main__":
    sys.exit(main())
