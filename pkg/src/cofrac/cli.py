"""Command-line entry point: ``cofrac <verb> ...``.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 capability limit, 4 internal certificate failure.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import harness
from .errors import CapabilityError, CertificateError, CrossCheckError, ParseError
from .graph import graph_from_spec, parse_graph, stats, to_edge_list
from .solver import (
    CHI_F,
    Z_F,
    CertifiedValue,
    check_certificate,
    chi_f,
    z_f,
)
from .subsets import EXACT_SEARCH_LIMIT

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CAPABILITY, EXIT_INTERNAL = 0, 1, 2, 3, 4

THEOREMS = ("example1", "prop1", "thm3", "thm4", "thm5", "thm6", "thm7", "mycielski", "kneser")
SEEDED_THEOREMS = ("thm3", "thm6")
EXPERIMENTS = ("remark6", "gap", "zf-nm", "aks")

_NUMERIC = re.compile(r"^-?\d+(/\d+)?$")


class UsageError(Exception):
    pass


def load_graph(source):
    if source.startswith("gen:"):
        return graph_from_spec(source)
    try:
        with open(source) as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None


def split_graph_list(text):
    """Split ``petersen,c5,star:3,0`` into specs; bare numbers stay with the previous spec."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if out and _NUMERIC.match(tok):
            out[-1] += "," + tok
        elif tok:
            out.append(tok)
    return out


def parse_range(text):
    """``"1..6"`` -> ``[1..6]``; ``"2"`` -> ``[2]``; ``"1,3"`` -> ``[1, 3]``."""
    out = []
    for part in text.split(","):
        lo, sep, hi = part.partition("..")
        out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
    return out


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, separators=(", ", ": "))


# -- verbs -----------------------------------------------------------------------


def cmd_compute(args):
    G = load_graph(args.graph)
    limit = args.max_n
    param = args.param
    if param in (CHI_F, Z_F):
        fn = chi_f if param == CHI_F else z_f
        kw = {"method": args.method}
        if limit:
            kw.update(enum_limit=limit, colgen_limit=limit)
        cert = fn(G, **kw)
        if args.json:
            _emit(args, _dump(cert.to_json(G)) + "\n")
        else:
            cliques = sum(1 for s, _ in cert.cover.entries if s.kind == "clique")
            lines = [
                str(cert.value),
                f"{param} = {cert.value} via {cert.method}",
                f"cover: {len(cert.cover.entries)} sets ({cliques} cliques), weight {cert.cover.weight}",
                f"dual labeling weight {cert.dual.weight}",
            ]
            _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK
    if param in ("alpha", "omega"):
        st = stats(G, limit or EXACT_SEARCH_LIMIT)
        value = getattr(st, param)
    elif param == "chi":
        value = harness.integral_chi(G, limit or harness.INTEGRAL_CHI_LIMIT)
    else:
        value = harness.integral_z(G, limit or harness.INTEGRAL_Z_LIMIT)
    if args.json:
        _emit(args, _dump({"parameter": param, "value": value, "graph": G.provenance()}) + "\n")
    else:
        _emit(args, f"{value}\n")
    return EXIT_OK


def cmd_generate(args):
    G = load_graph(args.graph)
    if args.json:
        obj = {"n": G.n, "edges": [list(e) for e in G.sorted_edges()], "graph": G.provenance()}
        _emit(args, _dump(obj) + "\n")
    else:
        _emit(args, to_edge_list(G))
    return EXIT_OK


def cmd_verify(args):
    G = load_graph(args.graph)
    try:
        with open(args.cert) as fh:
            cert = CertifiedValue.from_json(json.load(fh))
    except OSError as exc:
        raise ParseError(f"cannot read {args.cert}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None
    if cert.parameter not in (CHI_F, Z_F):
        raise ParseError(f"unknown parameter {cert.parameter!r}")
    ok = check_certificate(G, cert)
    result = {"valid": bool(ok), "parameter": cert.parameter, "value": str(cert.value)}
    if not ok:
        result["reason"] = ok.reason
    if args.json:
        _emit(args, _dump(result) + "\n")
    else:
        _emit(args, ("ok" if ok else f"invalid: {ok.reason}") + "\n")
    return EXIT_OK if ok else EXIT_VERIFY


def _theorem_reports(args):
    tid = args.theorem
    if tid in SEEDED_THEOREMS and args.seed is None:
        raise UsageError(f"check {tid} samples random graphs and needs --seed")
    graphs = [load_graph("gen:" + g) for g in split_graph_list(args.graphs)] if args.graphs else None
    if tid == "example1":
        return [harness.check_example1(t, s) for t in parse_range(args.t) for s in parse_range(args.s)]
    if tid == "prop1":
        graphs = graphs or [load_graph("gen:" + g) for g in ("petersen", "c5", "c7", "star:3,0")]
        return [harness.check_proposition1(G) for G in graphs]
    if tid == "thm3":
        return harness.theorem3_suite(args.max_n or 10, args.count or 60, args.seed)
    if tid == "thm4":
        return harness.theorem4_suite(args.max_n or 14)
    if tid == "thm5":
        graphs = graphs or [load_graph("gen:" + g) for g in ("c5", "k3", "k2")]
        out = []
        for G in graphs:
            k = args.k if args.k is not None else max(stats(G).omega, 1)
            out.append(harness.check_theorem5(G, k))
        return out
    if tid == "thm6":
        if graphs:
            return [harness.check_theorem6(G) for G in graphs]
        return harness.theorem6_suite(args.count or 500, args.max_n or 9, args.seed)
    if tid == "thm7":
        if graphs is None and args.seed is not None:
            return harness.theorem7_suite(args.count or 100, args.max_n or 12, args.seed)
        graphs = graphs or [load_graph("gen:" + g) for g in ("petersen", "c5", "grotzsch")]
        if args.seed is not None:
            return [harness.theorem7_report(G, harness.random_cocover(G, args.seed)) for G in graphs]
        return [harness.theorem7_report(G, harness.edge_cocover(G)) for G in graphs]
    if tid == "mycielski":
        graphs = graphs or [load_graph("gen:" + g) for g in ("k2", "c5", "k1")]
        return [harness.check_mycielski(G) for G in graphs]
    # kneser
    pairs = [tuple(int(x) for x in p.split(":")) for p in (args.pairs or "5:2,4:2,3:1").split(",")]
    return [harness.check_kneser(a, b) for a, b in pairs]


def cmd_check(args):
    reports = _theorem_reports(args)
    _emit(args, "".join(_dump(r.to_json()) + "\n" for r in reports))
    return EXIT_VERIFY if any(r.failed for r in reports) else EXIT_OK


def cmd_experiment(args):
    if args.seed is None:
        raise UsageError("experiments need an explicit --seed")
    name = args.name
    if name == "remark6":
        reports = [harness.remark6_experiment(n, args.seed) for n in parse_range(args.n or "20")]
    elif name == "gap":
        eps = Fraction(args.eps or "1/2")
        reports = [harness.gap_experiment(n, eps, args.seed) for n in parse_range(args.n or "10")]
    elif name == "zf-nm":
        if args.n is None or args.m is None:
            raise UsageError("zf-nm needs --n and --m")
        res = harness.zf_nm_search(int(args.n), args.m, args.trials, args.seed)
        obj = {"experiment": "zf-nm", "n": res.witness.n, "m": res.witness.m, "best": str(res.best),
               "evaluations": res.evaluations, "witness": [list(e) for e in res.witness.sorted_edges()]}
        _emit(args, _dump(obj) + "\n")
        return EXIT_OK
    else:
        if not args.graph:
            raise UsageError("aks needs --graph")
        sample = harness.aks_subgraph_sample(load_graph(args.graph), args.seed)
        obj = {"experiment": "aks", "kept_vertices": sample.vertices, "empty": sample.empty,
               "edges": [list(e) for e in sample.graph.sorted_edges()], "z_f": str(sample.zf.value)}
        _emit(args, _dump(obj) + "\n")
        return EXIT_OK
    _emit(args, "".join(_dump(r.to_json()) + "\n" for r in reports))
    return EXIT_VERIFY if any(r.failed for r in reports) else EXIT_OK


# -- parser ----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="cofrac", description="Exact fractional (co)chromatic numbers with certificates.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, graph_required=True):
        sp.add_argument("--graph", required=graph_required, help="edge-list/DIMACS path or gen:<family>:<params>")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--out")
        sp.add_argument("--max-n", type=int, dest="max_n")

    sp = sub.add_parser("compute")
    common(sp)
    sp.add_argument("--param", required=True, choices=["chi_f", "z_f", "alpha", "omega", "chi", "z"])
    sp.add_argument("--method", default="auto", choices=["enum", "colgen", "auto"])
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("generate")
    common(sp)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("verify")
    common(sp)
    sp.add_argument("--cert", required=True, help="certificate JSON emitted by 'compute --json'")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("check")
    sp.add_argument("theorem", choices=THEOREMS)
    sp.add_argument("--graphs")
    sp.add_argument("--t", default="1..6")
    sp.add_argument("--s", default="0..2")
    sp.add_argument("--k", type=int)
    sp.add_argument("--pairs", help="Kneser parameters, e.g. 5:2,7:3")
    sp.add_argument("--count", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--max-n", type=int, dest="max_n")
    sp.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON lines")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("experiment")
    sp.add_argument("name", choices=EXPERIMENTS)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--n", help="order, or a range such as 20,30,40")
    sp.add_argument("--m", type=int)
    sp.add_argument("--eps")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--graph")
    sp.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON lines")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_experiment)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapabilityError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (CertificateError, CrossCheckError) as exc:
        print(f"internal certificate failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
