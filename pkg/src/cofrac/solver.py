"""Exact fractional chromatic and cochromatic numbers with certificates.

Both parameters are covering LPs over vertex sets: independent sets for
``chi_f``, cliques and independent sets for ``z_f``. Two routes solve them:

* ``enumeration`` lists every maximal set up front (``n <= 24`` default);
* ``column-generation`` seeds the ``n`` singletons and prices new columns
  with the exact max-weight oracles until no set has dual weight above 1
  (``n <= 60`` default).

Every returned :class:`CertifiedValue` has passed :func:`verify_cover`,
:func:`verify_labeling` and exact strong duality before it leaves here.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapabilityError, CertificateError, CrossCheckError
from .lp import OPTIMAL, RevisedSimplex
from .subsets import (
    CLIQUE,
    ENUMERATION_LIMIT,
    EXACT_SEARCH_LIMIT,
    INDEPENDENT,
    VertexSet,
    enumerate_maximal_cliques,
    enumerate_maximal_independent_sets,
    max_weight_clique,
    max_weight_independent_set,
)

CHI_F = "chi_f"
Z_F = "z_f"
COLORING = "coloring"
COCOLORING = "cocoloring"
ENUMERATION = "enumeration"
COLGEN = "column-generation"

# auto picks enumeration up to this order, column generation above
AUTO_ENUMERATION_MAX = 16

_MODE = {CHI_F: COLORING, Z_F: COCOLORING}


class Check:
    """Boolean verdict that carries the reason for a failure."""

    def __init__(self, ok, reason=""):
        self.ok = bool(ok)
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"Check({self.ok}, {self.reason!r})"


@dataclass
class FractionalCover:
    entries: list = field(default_factory=list)
    mode: str = COCOLORING

    @property
    def weight(self):
        return sum((w for _, w in self.entries), Fraction(0))

    @property
    def independent_weight(self):
        return sum((w for s, w in self.entries if s.kind == INDEPENDENT), Fraction(0))

    @property
    def clique_weight(self):
        return sum((w for s, w in self.entries if s.kind == CLIQUE), Fraction(0))

    def coverage(self, n):
        out = [Fraction(0)] * n
        for s, w in self.entries:
            for v in s.members:
                out[v] += w
        return out

    def clique_load(self, n):
        """Total weight of clique entries through each vertex."""
        out = [Fraction(0)] * n
        for s, w in self.entries:
            if s.kind == CLIQUE:
                for v in s.members:
                    out[v] += w
        return out

    def to_json(self):
        return [dict(s.to_json(), weight=str(w)) for s, w in self.entries]

    @classmethod
    def from_json(cls, items, mode=COCOLORING):
        return cls([(VertexSet.from_json(it), Fraction(it["weight"])) for it in items], mode)


@dataclass
class Labeling:
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = {int(v): Fraction(x) for v, x in self.values.items()}

    @property
    def weight(self):
        return sum(self.values.values(), Fraction(0))

    def as_list(self, n):
        return [self.values.get(v, Fraction(0)) for v in range(n)]

    def to_json(self):
        return {str(v): str(x) for v, x in sorted(self.values.items())}

    @classmethod
    def from_json(cls, obj):
        return cls({int(k): Fraction(v) for k, v in obj.items()})


@dataclass
class CertifiedValue:
    value: Fraction
    cover: FractionalCover
    dual: Labeling
    parameter: str
    method: str
    columns: int = 0
    pivots: int = 0
    iterations: int = 0

    def to_json(self, graph=None):
        out = {
            "parameter": self.parameter,
            "value": str(self.value),
            "cover": self.cover.to_json(),
            "dual": self.dual.to_json(),
            "method": self.method,
        }
        if graph is not None:
            out["graph"] = graph.provenance()
        return out

    @classmethod
    def from_json(cls, obj):
        param = obj["parameter"]
        return cls(
            value=Fraction(obj["value"]),
            cover=FractionalCover.from_json(obj["cover"], _MODE.get(param, COCOLORING)),
            dual=Labeling.from_json(obj["dual"]),
            parameter=param,
            method=obj.get("method", ""),
        )


# -- verification --------------------------------------------------------------


def verify_cover(G, cover):
    """Independent primal check; adjacency is re-read from ``G.edges``."""
    edges = G.edges
    for s, w in cover.entries:
        ms = s.members
        if any(not 0 <= v < G.n for v in ms):
            return Check(False, f"set {list(ms)} has a vertex outside 0..{G.n - 1}")
        if w < 0:
            return Check(False, f"set {list(ms)} has negative weight {w}")
        if s.kind == CLIQUE and cover.mode == COLORING:
            return Check(False, f"set {list(ms)} is a clique in a coloring cover")
        want = s.kind == CLIQUE
        for i, u in enumerate(ms):
            for v in ms[i + 1:]:
                if ((u, v) in edges) != want:
                    return Check(False, f"set {list(ms)} declared {s.kind} but {u}-{v} "
                                        f"{'is not' if want else 'is'} an edge")
    for v, c in enumerate(cover.coverage(G.n)):
        if c < 1:
            return Check(False, f"vertex {v} covered {c} < 1")
    return Check(True)


def verify_labeling(G, g, mode):
    """True iff every independent set (and clique, in cocoloring mode) sums to <= 1."""
    if any(x < 0 for x in g.values.values()):
        bad = next(v for v, x in g.values.items() if x < 0)
        raise ValueError(f"negative label on vertex {bad}")
    if any(not 0 <= v < G.n for v in g.values):
        return Check(False, "label on a vertex outside the graph")
    if G.n == 0:
        return Check(True)
    w = g.as_list(G.n)
    s, total = max_weight_independent_set(G, w, limit=max(G.n, EXACT_SEARCH_LIMIT))
    if total > 1:
        return Check(False, f"independent set {list(s.members)} has label sum {total} > 1")
    if mode == COCOLORING:
        s, total = max_weight_clique(G, w, limit=max(G.n, EXACT_SEARCH_LIMIT))
        if total > 1:
            return Check(False, f"clique {list(s.members)} has label sum {total} > 1")
    return Check(True)


def check_certificate(G, cert):
    """Full closure check: cover, labeling, and exact equality of both weights with the value."""
    mode = _MODE[cert.parameter]
    if cert.cover.mode != mode:
        return Check(False, f"cover mode {cert.cover.mode} does not match {cert.parameter}")
    ok = verify_cover(G, cert.cover)
    if not ok:
        return ok
    try:
        ok = verify_labeling(G, cert.dual, mode)
    except ValueError as exc:
        return Check(False, str(exc))
    if not ok:
        return ok
    if cert.cover.weight != cert.value:
        return Check(False, f"cover weight {cert.cover.weight} != value {cert.value}")
    if cert.dual.weight != cert.value:
        return Check(False, f"dual weight {cert.dual.weight} != value {cert.value}")
    return Check(True)


# -- solving -------------------------------------------------------------------


def _empty_certificate(parameter, method):
    return CertifiedValue(Fraction(0), FractionalCover([], _MODE[parameter]), Labeling({}), parameter, method)


def _finish(G, parameter, method, sets, sol, iterations):
    if sol.status != OPTIMAL:
        raise CertificateError(f"{parameter} LP reported {sol.status}")
    entries = [(sets[j], x) for j, x in sol.primal.items() if x > 0]
    entries.sort(key=lambda e: (e[0].kind, e[0].members))
    cover = FractionalCover(entries, _MODE[parameter])
    dual = Labeling({v: y for v, y in enumerate(sol.dual) if y})
    cert = CertifiedValue(sol.value, cover, dual, parameter, method,
                          columns=len(sets), pivots=sol.pivots, iterations=iterations)
    ok = check_certificate(G, cert)
    if not ok:
        raise CertificateError(f"{parameter} certificate failed verification: {ok.reason}")
    return cert


def _enumerated_columns(G, parameter, limit):
    sets = list(enumerate_maximal_independent_sets(G, limit))
    if parameter == Z_F:
        seen = set(sets)
        # singleton cliques coincide with singleton independent sets
        sets += [c for c in enumerate_maximal_cliques(G, limit) if c not in seen]
    return sets


def _solve_enumeration(G, parameter, limit):
    sets = _enumerated_columns(G, parameter, limit)
    lp = RevisedSimplex(G.n, [s.members for s in sets])
    return _finish(G, parameter, ENUMERATION, sets, lp.solve(), 1)


def _solve_colgen(G, parameter, limit):
    sets = [VertexSet((v,)) for v in range(G.n)]
    lp = RevisedSimplex(G.n, [s.members for s in sets])
    iterations = 0
    while True:
        iterations += 1
        sol = lp.solve()
        added = 0
        oracles = [max_weight_independent_set]
        if parameter == Z_F:
            oracles.append(max_weight_clique)
        for oracle in oracles:
            s, w = oracle(G, sol.dual, limit=limit)
            if w > 1:
                sets.append(s)
                lp.add_column(s.members)
                added += 1
        if not added:
            return _finish(G, parameter, COLGEN, sets, sol, iterations)


def _solve(G, parameter, method, enum_limit, colgen_limit):
    if method == "auto":
        method = ENUMERATION if G.n <= AUTO_ENUMERATION_MAX else COLGEN
    method = {"enum": ENUMERATION, "colgen": COLGEN}.get(method, method)
    if method not in (ENUMERATION, COLGEN):
        raise ValueError(f"unknown method {method!r}")
    if G.n == 0:
        return _empty_certificate(parameter, method)
    if method == ENUMERATION:
        return _solve_enumeration(G, parameter, enum_limit)
    if G.n > colgen_limit:
        raise CapabilityError(f"column generation limited to n <= {colgen_limit} (got n={G.n})")
    return _solve_colgen(G, parameter, colgen_limit)


def chi_f(G, method="auto", enum_limit=ENUMERATION_LIMIT, colgen_limit=EXACT_SEARCH_LIMIT):
    """Fractional chromatic number of ``G`` with its certificate."""
    return _solve(G, CHI_F, method, enum_limit, colgen_limit)


def z_f(G, method="auto", enum_limit=ENUMERATION_LIMIT, colgen_limit=EXACT_SEARCH_LIMIT):
    """Fractional cochromatic number of ``G`` with its certificate."""
    return _solve(G, Z_F, method, enum_limit, colgen_limit)


def cross_check(G, enum_limit=ENUMERATION_LIMIT):
    """Solve both parameters by both methods and insist the values agree."""
    if G.n > enum_limit:
        raise CapabilityError(f"cross_check needs full enumeration, limited to n <= {enum_limit}")
    report = {"n": G.n, "m": G.m}
    for name, fn in ((CHI_F, chi_f), (Z_F, z_f)):
        certs = {m: fn(G, method=m, enum_limit=enum_limit) for m in (ENUMERATION, COLGEN)}
        a, b = certs[ENUMERATION], certs[COLGEN]
        if a.value != b.value:
            raise CrossCheckError(
                f"{name}: enumeration gives {a.value}, column generation gives {b.value}",
                {m: c.to_json() for m, c in certs.items()},
            )
        report[name] = {
            "value": a.value,
            ENUMERATION: {"columns": a.columns, "pivots": a.pivots},
            COLGEN: {"columns": b.columns, "pivots": b.pivots, "iterations": b.iterations},
        }
    return report
