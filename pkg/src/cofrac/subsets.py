"""Maximal clique / independent set enumeration and exact max-weight search.

Everything runs on the bitset adjacency of :class:`~cofrac.graph.Graph`.
Independent-set routines are the clique routines applied to the
complement's adjacency.

Tie-breaking in the weighted searches is deterministic: among sets of
maximum weight, the winner is the one whose indicator vector is largest
when read from vertex 0 downward. For sets of equal size this is the
lexicographically smallest sorted member list.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import CapabilityError
from .graph import bits, popcount

ENUMERATION_LIMIT = 24
EXACT_SEARCH_LIMIT = 60

CLIQUE = "clique"
INDEPENDENT = "independent"


@dataclass(frozen=True, order=True)
class VertexSet:
    """Sorted vertex tuple tagged clique or independent.

    Sets of size <= 1 are canonically ``independent``.
    """

    members: tuple
    kind: str = INDEPENDENT

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        if self.kind not in (CLIQUE, INDEPENDENT):
            raise ValueError(f"unknown kind {self.kind!r}")
        if len(members) <= 1:
            object.__setattr__(self, "kind", INDEPENDENT)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v):
        return v in self.members

    @property
    def mask(self):
        out = 0
        for v in self.members:
            out |= 1 << v
        return out

    def is_valid(self, G):
        """Check the kind's adjacency predicate against ``G`` from scratch."""
        ms = self.members
        if any(not 0 <= v < G.n for v in ms):
            return False
        want = self.kind == CLIQUE
        return all(G.has_edge(u, v) == want for i, u in enumerate(ms) for v in ms[i + 1:])

    def to_json(self):
        return {"kind": self.kind, "members": list(self.members)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["members"]), obj["kind"])


def _from_mask(mask, kind):
    return VertexSet(tuple(bits(mask)), kind)


def _check_limit(G, limit, what):
    if G.n > limit:
        raise CapabilityError(f"{what} limited to n <= {limit} (got n={G.n})")


# -- enumeration ---------------------------------------------------------------


def _maximal_cliques_masks(adj, n):
    """Bron-Kerbosch with Tomita pivoting; yields bitmasks."""
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(R)
            return
        PX = P | X
        pivot = max(bits(PX), key=lambda u: popcount(P & adj[u]))
        for v in bits(P & ~adj[pivot]):
            bit = 1 << v
            expand(R | bit, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    if n:
        expand(0, (1 << n) - 1, 0)
    return out


def _sorted_sets(masks, kind):
    return sorted(_from_mask(m, kind) for m in masks)


def enumerate_maximal_cliques(G, limit=ENUMERATION_LIMIT):
    _check_limit(G, limit, "maximal clique enumeration")
    return _sorted_sets(_maximal_cliques_masks(G.adj, G.n), CLIQUE)


def enumerate_maximal_independent_sets(G, limit=ENUMERATION_LIMIT):
    _check_limit(G, limit, "maximal independent set enumeration")
    return _sorted_sets(_maximal_cliques_masks(G.coadj, G.n), INDEPENDENT)


# -- weighted search -------------------------------------------------------------


def _weights_list(G, w):
    if isinstance(w, dict):
        vals = [Fraction(w.get(v, 0)) for v in range(G.n)]
    elif hasattr(w, "values") and isinstance(getattr(w, "values"), dict):
        vals = [Fraction(w.values.get(v, 0)) for v in range(G.n)]
    else:
        vals = [Fraction(x) for x in w]
        if len(vals) != G.n:
            raise ValueError(f"expected {G.n} weights, got {len(vals)}")
    for v, x in enumerate(vals):
        if x < 0:
            raise ValueError(f"negative weight {x} on vertex {v}")
    return vals


def _max_weight_clique_mask(adj, n, weights, candidates=None):
    """Exact maximum-weight clique restricted to ``candidates``.

    Rational weights are scaled to integers by their common denominator,
    then shifted left by ``n`` bits and tagged with ``2**(n-1-v)`` so every
    set has a distinct score; that encodes the tie-break and makes the
    ``<=`` pruning exact.
    """
    if candidates is None:
        candidates = (1 << n) - 1
    if not candidates:
        return 0
    den = lcm(*(x.denominator for x in weights)) if weights else 1
    W = [int(x * den) << n | 1 << (n - 1 - v) for v, x in enumerate(weights)]
    best_w = 0
    best_m = 0

    def expand(P, cw, cm):
        nonlocal best_w, best_m
        # greedy colouring: each class is pairwise non-adjacent, so a clique
        # takes at most its heaviest member
        order = []
        bounds = []
        Q = P
        cum = 0
        while Q:
            avail = Q
            heavy = 0
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                if W[v] > heavy:
                    heavy = W[v]
                avail &= ~adj[v] & ~low
                Q &= ~low
            cum += heavy
            bounds.extend([cum] * (len(order) - len(bounds)))
        for i in range(len(order) - 1, -1, -1):
            if cw + bounds[i] <= best_w:
                return
            v = order[i]
            bit = 1 << v
            nw = cw + W[v]
            NP = P & adj[v]
            if NP:
                expand(NP, nw, cm | bit)
            elif nw > best_w:
                best_w, best_m = nw, cm | bit
            P &= ~bit

    expand(candidates, 0, 0)
    return best_m


def _search(G, w, adj, kind, limit):
    _check_limit(G, limit, "exact max-weight search")
    weights = _weights_list(G, w)
    mask = _max_weight_clique_mask(adj, G.n, weights)
    vs = _from_mask(mask, kind)
    return vs, sum((weights[v] for v in vs.members), Fraction(0))


def max_weight_independent_set(G, w, limit=EXACT_SEARCH_LIMIT):
    """Heaviest independent set of ``G`` and its exact weight."""
    return _search(G, w, G.coadj, INDEPENDENT, limit)


def max_weight_clique(G, w, limit=EXACT_SEARCH_LIMIT):
    """Heaviest clique of ``G`` and its exact weight."""
    return _search(G, w, G.adj, CLIQUE, limit)


def independence_number(G, limit=EXACT_SEARCH_LIMIT):
    if G.n == 0:
        return 0
    return len(max_weight_independent_set(G, [1] * G.n, limit)[0])


def clique_number(G, limit=EXACT_SEARCH_LIMIT):
    if G.n == 0:
        return 0
    return len(max_weight_clique(G, [1] * G.n, limit)[0])


def find_independent_subset(G, vertices, k):
    """An independent ``k``-subset of ``vertices`` or ``None``.

    Takes the first ``k`` members of a maximum independent set within
    ``vertices`` (unit weights, usual tie-break), so the answer is
    deterministic.
    """
    cand = 0
    for v in vertices:
        cand |= 1 << v
    if k == 0:
        return VertexSet(())
    mask = _max_weight_clique_mask(G.coadj, G.n, [Fraction(1)] * G.n, cand)
    members = bits(mask)
    if len(members) < k:
        return None
    return VertexSet(tuple(members[:k]), INDEPENDENT)


def greedy_coloring(G):
    """Largest-first greedy colouring; returns a colour per vertex."""
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    color = [-1] * G.n
    for v in order:
        used = {color[u] for u in G.neighbors(v)}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color
