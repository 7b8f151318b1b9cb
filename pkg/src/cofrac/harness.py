"""Mechanized checks of the cocoloring results, integral oracles, experiments.

Every ``check_*`` function returns a :class:`TheoremReport`. A ``fails``
verdict means a computed counterexample and is never expected; the test
suite and the CLI treat it as fatal.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import CapabilityError, CertificateError
from .graph import (
    Graph,
    complement,
    disjoint_union,
    gen_complete,
    gen_cycle,
    gen_kneser,
    gen_mycielski,
    gen_path,
    gen_random,
    gen_random_triangle_free,
    gen_star,
    stats,
)
from .rng import SplitMix64
from .solver import (
    COCOLORING,
    COLORING,
    Check,
    FractionalCover,
    Labeling,
    chi_f,
    verify_cover,
    verify_labeling,
    z_f,
)
from .subsets import (
    CLIQUE,
    INDEPENDENT,
    VertexSet,
    clique_number,
    enumerate_maximal_cliques,
    enumerate_maximal_independent_sets,
    find_independent_subset,
    greedy_coloring,
)

HOLDS = "holds"
EXCEPTION = "exception"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"

INTEGRAL_CHI_LIMIT = 16
INTEGRAL_Z_LIMIT = 14

# diagonal Ramsey numbers R(k, k) known exactly
RAMSEY = {2: 2, 3: 6, 4: 18}


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class TheoremReport:
    theorem_id: str
    graph: dict
    quantities: dict = field(default_factory=dict)
    verdict: str = HOLDS
    exception_family: str = None
    note: str = ""

    @property
    def failed(self):
        return self.verdict == FAILS

    def to_json(self):
        out = {
            "theorem": self.theorem_id,
            "graph": self.graph,
            "quantities": _jsonable(self.quantities),
            "verdict": self.verdict,
        }
        if self.exception_family:
            out["exception_family"] = self.exception_family
        if self.note:
            out["note"] = self.note
        return out


def _verdict(ok):
    return HOLDS if ok else FAILS


# -- integral oracles ------------------------------------------------------------


def _min_cover_number(n, masks):
    """Fewest sets from ``masks`` covering all ``n`` vertices.

    Any optimal partition into cliques/independent sets can be grown class
    by class into maximal sets, so branching on the maximal sets through
    the lowest uncovered vertex is exhaustive.
    """
    through = [[s for s in masks if s >> v & 1] for v in range(n)]

    @lru_cache(maxsize=None)
    def best(rest):
        if not rest:
            return 0
        v = (rest & -rest).bit_length() - 1
        return 1 + min(best(rest & ~s) for s in through[v])

    return best((1 << n) - 1)


def integral_chi(G, limit=INTEGRAL_CHI_LIMIT):
    """Chromatic number by exhaustive search over maximal independent sets."""
    if G.n > limit:
        raise CapabilityError(f"integral chromatic number limited to n <= {limit} (got n={G.n})")
    if G.n == 0:
        return 0
    masks = [s.mask for s in enumerate_maximal_independent_sets(G, max(limit, G.n))]
    return _min_cover_number(G.n, masks)


def integral_z(G, limit=INTEGRAL_Z_LIMIT):
    """Cochromatic number: fewest cliques and independent sets covering V."""
    if G.n > limit:
        raise CapabilityError(f"integral cochromatic number limited to n <= {limit} (got n={G.n})")
    if G.n == 0:
        return 0
    lim = max(limit, G.n)
    masks = {s.mask for s in enumerate_maximal_independent_sets(G, lim)}
    masks |= {s.mask for s in enumerate_maximal_cliques(G, lim)}
    return _min_cover_number(G.n, sorted(masks))


# -- closed forms and equalities ---------------------------------------------------


def star_value(t, s):
    """Closed form of ``Z_f(K_{1,t} + s K_1)``."""
    return 2 - Fraction(1, t) if s == 0 else 2 - Fraction(1, t + 1)


def star_certificate(t, s):
    """The explicit optimal cover and labeling for a star with isolated vertices."""
    q = Fraction(1, t) if s == 0 else Fraction(1, t + 1)
    leaves = tuple(range(1, t + 1))
    isolated = tuple(range(t + 1, t + 1 + s))
    entries = [(VertexSet((0, leaf), CLIQUE), q) for leaf in leaves]
    labels = {0: 1 - q}
    labels.update({leaf: q for leaf in leaves})
    if s == 0:
        if 1 - q:
            entries.append((VertexSet(leaves, INDEPENDENT), 1 - q))
    else:
        entries.append((VertexSet(leaves + isolated, INDEPENDENT), 1 - q))
        entries.append((VertexSet((0,) + isolated, INDEPENDENT), q))
        labels[isolated[0]] = q
    return FractionalCover(entries, COCOLORING), Labeling(labels)


def check_example1(t, s=0):
    G = gen_star(t, s)
    expected = star_value(t, s)
    cert = z_f(G)
    cover, labeling = star_certificate(t, s)
    cover_ok = bool(verify_cover(G, cover)) and cover.weight == expected
    label_ok = bool(verify_labeling(G, labeling, COCOLORING)) and labeling.weight == expected
    q = {"t": t, "s": s, "z_f": cert.value, "formula": expected,
         "explicit_cover": cover_ok, "explicit_labeling": label_ok}
    return TheoremReport("example1", G.provenance(), q,
                         _verdict(cert.value == expected and cover_ok and label_ok))


def _uniform_design_cover(G, k, kind):
    """Weight ``1/l`` on every maximum clique or independent set of size ``k``.

    Returns ``None`` if vertices are not covered equally often.
    """
    if kind == INDEPENDENT:
        sets = [s for s in enumerate_maximal_independent_sets(G) if len(s) == k]
    else:
        sets = [s for s in enumerate_maximal_cliques(G) if len(s) == k]
        if k == 1:
            sets = [VertexSet((v,)) for v in range(G.n)]
    counts = [0] * G.n
    for s in sets:
        for v in s:
            counts[v] += 1
    if len(set(counts)) != 1 or counts[0] == 0:
        return None
    ell = counts[0]
    return FractionalCover([(s, Fraction(1, ell)) for s in sets], COCOLORING)


def check_proposition1(G):
    st = stats(G)
    k = max(st.alpha, st.omega)
    bound = Fraction(G.n, k)
    cert = z_f(G)
    uniform = Labeling({v: Fraction(1, k) for v in range(G.n)})
    label_ok = bool(verify_labeling(G, uniform, COCOLORING))
    q = {"n": G.n, "alpha": st.alpha, "omega": st.omega, "bound": bound,
         "z_f": cert.value, "uniform_labeling": label_ok, "transitive": G.transitive}
    ok = label_ok and cert.value >= bound
    if G.transitive:
        ok = ok and cert.value == bound
        if G.n <= 24:
            kind = INDEPENDENT if st.alpha >= st.omega else CLIQUE
            design = _uniform_design_cover(G, k, kind)
            q["design_cover"] = design is not None and bool(verify_cover(G, design)) \
                and design.weight == bound
            ok = ok and q["design_cover"]
    q["equality"] = cert.value == bound
    return TheoremReport("prop1", G.provenance(), q, _verdict(ok))


def averaged_labeling(f, n, k):
    """Average a labeling of ``kG`` over the ``k`` copies of each vertex."""
    vals = f.as_list(n * k)
    out = {}
    for v in range(n):
        avg = sum((vals[j * n + v] for j in range(k)), Fraction(0)) / k
        for j in range(k):
            out[j * n + v] = avg
    return Labeling(out)


def check_theorem5(G, k):
    omega = clique_number(G) if G.n else 0
    if k < omega:
        return TheoremReport("thm5", G.provenance(), {"k": k, "omega": omega}, NOT_APPLICABLE,
                             note="k is below the clique number")
    kG = disjoint_union(G, k)
    zf_kg = z_f(kG)
    chi_kg = chi_f(kG)
    chi_g = chi_f(G)
    # the averaged optimal colour labeling must already be a cocolor labeling
    avg = averaged_labeling(chi_kg.dual, G.n, k)
    avg_ok = bool(verify_labeling(kG, avg, COCOLORING)) and avg.weight == chi_kg.value
    q = {"k": k, "omega": omega, "z_f_kG": zf_kg.value, "chi_f_kG": chi_kg.value,
         "chi_f_G": chi_g.value, "averaged_labeling": avg_ok}
    ok = zf_kg.value == chi_kg.value == chi_g.value and avg_ok
    return TheoremReport("thm5", G.provenance(), q, _verdict(ok))


def star_shape(G):
    """``(t, s)`` if the edges of ``G`` form one star ``K_{1,t}``, else ``None``."""
    if not G.edges:
        return None
    degrees = [G.degree(v) for v in range(G.n)]
    centre = max(range(G.n), key=lambda v: degrees[v])
    if degrees[centre] != G.m:
        return None
    t = G.m
    return t, G.n - t - 1


def check_theorem6(G):
    omega = clique_number(G) if G.n else 0
    if omega > 2:
        return TheoremReport("thm6", G.provenance(), {"omega": omega}, NOT_APPLICABLE,
                             note="graph contains a triangle")
    chi = chi_f(G).value
    zf = z_f(G).value
    q = {"n": G.n, "m": G.m, "chi_f": chi, "z_f": zf}
    shape = star_shape(G)
    if shape is None:
        return TheoremReport("thm6", G.provenance(), q, _verdict(chi == zf))
    t, s = shape
    q.update(t=t, s=s, formula=star_value(t, s))
    family = "star" if s == 0 else "star-plus-isolated"
    ok = chi == 2 and zf == star_value(t, s) and zf < chi
    return TheoremReport("thm6", G.provenance(), q, EXCEPTION if ok else FAILS, family)


def check_mycielski(G):
    if G.n == 0:
        return TheoremReport("mycielski", G.provenance(), {}, NOT_APPLICABLE, note="empty graph")
    c = chi_f(G).value
    M = gen_mycielski(G)
    cm = chi_f(M).value
    q = {"chi_f_G": c, "chi_f_M": cm, "formula": c + 1 / c}
    return TheoremReport("mycielski", G.provenance(), q, _verdict(cm == c + 1 / c))


def check_kneser(a, b):
    if a < 2 * b:
        return TheoremReport("kneser", {"family": "kneser", "params": [a, b]}, {"a": a, "b": b},
                             NOT_APPLICABLE, note="needs a >= 2b")
    G = gen_kneser(a, b)
    chi = chi_f(G).value
    q = {"a": a, "b": b, "n": G.n, "chi_f": chi, "formula": Fraction(a, b)}
    ok = chi == Fraction(a, b)
    if a == 3 * b - 1:
        zf = z_f(G).value
        q["z_f"] = zf
        q["z_formula"] = 3 - Fraction(1, b)
        ok = ok and zf == 3 - Fraction(1, b)
    return TheoremReport("kneser", G.provenance(), q, _verdict(ok))


def is_k2(G):
    return G.n == 2 and G.m == 1


def check_theorem3(G):
    omega = clique_number(G) if G.n else 0
    if omega > 2:
        return TheoremReport("thm3", G.provenance(), {"omega": omega}, NOT_APPLICABLE,
                             note="graph contains a triangle")
    chi = integral_chi(G)
    zz = integral_z(G)
    q = {"chi": chi, "z": zz}
    if is_k2(G):
        return TheoremReport("thm3", G.provenance(), q, EXCEPTION if zz == 1 else FAILS, "K2")
    return TheoremReport("thm3", G.provenance(), q, _verdict(chi == zz))


def check_theorem4(G, k):
    omega = clique_number(G) if G.n else 0
    if k < omega:
        return TheoremReport("thm4", G.provenance(), {"k": k, "omega": omega}, NOT_APPLICABLE,
                             note="k is below the clique number")
    kG = disjoint_union(G, k)
    q = {"k": k, "z_kG": integral_z(kG), "chi_kG": integral_chi(kG), "chi_G": integral_chi(G)}
    return TheoremReport("thm4", G.provenance(), q,
                         _verdict(q["z_kG"] == q["chi_kG"] == q["chi_G"]))


# -- Ramsey rounding -----------------------------------------------------------------


@dataclass
class RamseyConversionTrace:
    k: int
    R: int
    partition_sizes: list
    s: list
    residues: list
    input_weight: Fraction
    output_weight: Fraction

    def check(self):
        if self.residues[0] != 0:
            return Check(False, "R_0 must be 0")
        for i, (size, si) in enumerate(zip(self.partition_sizes, self.s), start=1):
            if si < 0:
                return Check(False, f"s_{i} negative")
            if self.residues[i] >= self.R:
                return Check(False, f"R_{i} = {self.residues[i]} not below R = {self.R}")
            if si * self.k != size + self.residues[i - 1] - self.residues[i]:
                return Check(False, f"accounting identity broken at level {i}")
        if self.output_weight > self.input_weight + self.R:
            return Check(False, f"output {self.output_weight} exceeds input + R")
        return Check(True)

    def to_json(self):
        return _jsonable({
            "k": self.k, "R": self.R, "partition_sizes": self.partition_sizes, "s": self.s,
            "residues": self.residues, "input_weight": self.input_weight,
            "output_weight": self.output_weight,
        })


def _merge(entries):
    merged = {}
    for s, w in entries:
        merged[s] = merged.get(s, Fraction(0)) + w
    return [(s, w) for s, w in merged.items() if w > 0]


def ramsey_convert(G, cover):
    """Turn a fractional cocoloring into a fractional coloring, paying at most ``R(k,k)``.

    Vertices are bucketed by clique load into levels ``(i-1)/n < load <= i/n``
    (loads above 1 go to level ``n``). Sweeping the levels upward, the
    carried vertices lose independent ``k``-sets at weight ``i/n`` until
    fewer than ``R`` remain; the last remainder gets weight-1 singletons.
    All clique entries are dropped, independent entries kept.
    """
    ok = verify_cover(G, cover)
    if not ok:
        raise ValueError(f"input is not a valid cocoloring: {ok.reason}")
    n = G.n
    k = (clique_number(G) if n else 0) + 1
    if k not in RAMSEY:
        raise CapabilityError(f"R({k},{k}) is not known exactly; ramsey_convert needs clique number <= 3")
    R = RAMSEY[k]
    loads = cover.clique_load(n)
    levels = [[] for _ in range(n + 1)]
    for v, c in enumerate(loads):
        if c > 0:
            levels[min(math.ceil(c * n), n)].append(v)
    entries = [(s, w) for s, w in cover.entries if s.kind == INDEPENDENT]
    sizes, extracted, residues = [], [], [0]
    carried = []
    for i in range(1, n + 1):
        pool = sorted(carried + levels[i])
        count = 0
        while len(pool) >= R:
            found = find_independent_subset(G, pool, k)
            if found is None:
                raise CertificateError(f"no independent {k}-set among {len(pool)} >= R({k},{k}) vertices")
            entries.append((found, Fraction(i, n)))
            taken = set(found.members)
            pool = [v for v in pool if v not in taken]
            count += 1
        sizes.append(len(levels[i]))
        extracted.append(count)
        residues.append(len(pool))
        carried = pool
    entries.extend((VertexSet((v,)), Fraction(1)) for v in carried)
    out = FractionalCover(_merge(entries), COLORING)
    trace = RamseyConversionTrace(k, R, sizes, extracted, residues, cover.weight, out.weight)
    return out, trace


# -- experiments -----------------------------------------------------------------------


@dataclass
class SubgraphSample:
    graph: Graph
    zf: object
    vertices: list
    empty: bool
    source: object


def aks_subgraph_sample(G, seed):
    """Keep the heavily clique-covered vertices of an optimal cocoloring, then halve the edges."""
    cert = z_f(G)
    loads = cert.cover.clique_load(G.n)
    keep = [v for v in range(G.n) if loads[v] >= Fraction(1, 2)]
    G1 = G.induced(keep)
    rng = SplitMix64(seed)
    edges = [e for e in G1.sorted_edges() if rng.bernoulli(Fraction(1, 2))]
    H = Graph.from_edges(G1.n, edges, "random", (G1.n, Fraction(1, 2), seed, "subgraph"))
    return SubgraphSample(H, z_f(H), keep, not keep, cert)


def remark6_experiment(n, seed):
    G = gen_random(n, Fraction(1, 2), seed)
    st = stats(G)
    k = max(st.alpha, st.omega) if n else 1
    lower = Fraction(n, k)
    zf = z_f(G).value
    colours = greedy_coloring(G)
    upper = max(colours) + 1 if n else 0
    reference = n / (2 * math.log2(n)) if n > 1 else None
    q = {"n": n, "seed": seed, "alpha": st.alpha, "omega": st.omega, "lower": lower,
         "z_f": zf, "chi_greedy": upper, "reference": reference,
         "ratio": float(zf) / reference if reference else None}
    return TheoremReport("remark6", G.provenance(), q, _verdict(lower <= zf <= upper))


def gap_experiment(n, eps, seed):
    eps = Fraction(eps)
    p = 1 / (2 - eps)
    G = gen_random(n, p, seed)
    return gap_report(G)


def gap_report(G):
    """Compare ``n/alpha - chi(G^c)`` with ``chi_f - Z_f`` on one graph."""
    st = stats(G)
    lhs = Fraction(G.n, st.alpha) - integral_chi(complement(G))
    rhs = chi_f(G).value - z_f(G).value
    q = {"n": G.n, "alpha": st.alpha, "lhs": lhs, "rhs": rhs}
    return TheoremReport("remark10", G.provenance(), q, _verdict(lhs <= rhs))


@dataclass
class SearchResult:
    witness: Graph
    best: Fraction
    certificate: object
    complement_witness: Graph
    evaluations: int


def zf_nm_search(n, m, trials, seed):
    """Randomised lower bound on the largest ``Z_f`` among ``n``-vertex, ``m``-edge graphs.

    The first half of the trials draws uniform ``m``-edge graphs; the rest
    swap one edge of the incumbent for a non-edge and keep non-worsening
    moves.
    """
    pairs = list(combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise ValueError(f"m must lie in 0..{len(pairs)}")
    rng = SplitMix64(seed)
    cache = {}

    def evaluate(edges):
        key = frozenset(edges)
        if key not in cache:
            cache[key] = z_f(Graph.from_edges(n, key, "random", (n, m, seed, "search")))
        return cache[key]

    best_edges = None
    best = None
    current = None
    for trial in range(max(trials, 1)):
        if best_edges is None or trial < (trials + 1) // 2 or m in (0, len(pairs)):
            edges = rng.sample(pairs, m)
        else:
            edges = list(current)
            non = [e for e in pairs if e not in set(edges)]
            edges[rng.below(len(edges))] = non[rng.below(len(non))]
        cert = evaluate(edges)
        if best is None or cert.value > best.value:
            best, best_edges = cert, sorted(edges)
        if current is None or cert.value >= evaluate(current).value:
            current = sorted(edges)
    witness = Graph.from_edges(n, best_edges, "random", (n, m, seed, "search"))
    co = complement(witness)
    if z_f(co).value != best.value:
        raise CertificateError("Z_f differs between a witness and its complement")
    return SearchResult(witness, best.value, best, co, len(cache))


# -- corpora and suites -------------------------------------------------------------------

_TF_PROBABILITIES = [Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1)]


def triangle_free_sample(count, max_n, seed):
    """Seeded triangle-free graphs with ``1 <= n <= max_n``."""
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        n = 1 + rng.below(max_n)
        p = _TF_PROBABILITIES[rng.below(len(_TF_PROBABILITIES))]
        out.append(gen_random_triangle_free(n, p, rng.next_u64()))
    return out


def random_sample(count, max_n, seed, p=Fraction(1, 2), min_n=1):
    """Seeded ``G(n, p)`` graphs with ``min_n <= n <= max_n``."""
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        n = min_n + rng.below(max_n - min_n + 1)
        out.append(gen_random(n, p, rng.next_u64()))
    return out


def named_triangle_free():
    return [gen_cycle(5), gen_cycle(7), gen_kneser(5, 2), gen_mycielski(gen_cycle(5))]


def small_corpus(max_n=10):
    """Generator families at small parameters, filtered to ``n <= max_n``."""
    graphs = [gen_star(t, s) for t in range(1, 5) for s in range(3)]
    graphs += [gen_complete(n) for n in range(1, 6)]
    graphs += [gen_cycle(n) for n in range(3, 10)]
    graphs += [gen_path(n) for n in range(1, 8)]
    graphs += [gen_kneser(5, 2), gen_kneser(4, 2), gen_kneser(3, 1)]
    graphs += [gen_mycielski(gen_complete(2)), gen_mycielski(gen_complete(1))]
    graphs += [disjoint_union(gen_complete(2), 2), disjoint_union(gen_cycle(5), 2)]
    return [G for G in graphs if G.n <= max_n]


def theorem6_suite(count=500, max_n=9, seed=11):
    graphs = triangle_free_sample(count, max_n, seed) + named_triangle_free()
    return [check_theorem6(G) for G in graphs]


def theorem7_report(G, cover=None):
    """Run the Ramsey rounding on ``G`` (default: an optimal cocoloring) and audit it."""
    cover = cover if cover is not None else z_f(G).cover
    out, trace = ramsey_convert(G, cover)
    valid = verify_cover(G, out)
    audit = trace.check()
    q = dict(trace.to_json(), output_valid=bool(valid), accounting=bool(audit))
    note = "" if valid and audit else (valid.reason or audit.reason)
    return TheoremReport("thm7", G.provenance(), q, _verdict(valid and audit), note=note)


def _top_up(G, entries):
    cover = FractionalCover(entries, COCOLORING)
    for v, c in enumerate(cover.coverage(G.n)):
        if c < 1:
            entries.append((VertexSet((v,)), 1 - c))
    return FractionalCover(_merge(entries), COCOLORING)


def edge_cocover(G, weight=None):
    """Every edge as a clique of ``weight`` (default ``1/max degree``), singletons fill any deficit."""
    if weight is None:
        weight = Fraction(1, max((G.degree(v) for v in range(G.n)), default=1) or 1)
    return _top_up(G, [(VertexSet(e, CLIQUE), Fraction(weight)) for e in G.sorted_edges()])


_EDGE_WEIGHTS = [Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(1)]


def random_cocover(G, seed):
    """A valid, usually suboptimal cocoloring with substantial clique weight."""
    rng = SplitMix64(seed)
    entries = []
    for e in G.sorted_edges():
        w = _EDGE_WEIGHTS[rng.below(len(_EDGE_WEIGHTS))]
        if w:
            entries.append((VertexSet(e, CLIQUE), w))
    return _top_up(G, entries)


def theorem7_suite(count=100, max_n=12, seed=7):
    rng = SplitMix64(seed)
    graphs = triangle_free_sample(count, max_n, rng.next_u64())
    return [theorem7_report(G, random_cocover(G, rng.next_u64())) for G in graphs]


def theorem3_suite(max_n=10, count=60, seed=3):
    graphs = [G for G in small_corpus(max_n)]
    graphs += triangle_free_sample(count, max_n, seed)
    return [r for r in (check_theorem3(G) for G in graphs) if r.verdict != NOT_APPLICABLE]


def theorem4_suite(max_kn=14):
    out = []
    for G in small_corpus(7):
        omega = clique_number(G)
        for k in range(max(omega, 1), omega + 2):
            if k * G.n <= max_kn:
                out.append(check_theorem4(G, k))
    return out
