"""Finite simple graphs on dense integer ids, plus generators.

Graphs are immutable. Adjacency is kept as Python ints used as bitsets
(``adj[v] >> u & 1`` iff ``uv`` is an edge), which is what every search
routine in the package consumes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .errors import CapabilityError, ParseError
from .rng import SplitMix64

FAMILIES = (
    "star",
    "star-plus-isolated",
    "complete",
    "cycle",
    "path",
    "kneser",
    "mycielski",
    "disjoint-union",
    "random",
    "parsed",
)
TRANSITIVE_FAMILIES = ("complete", "cycle", "kneser")

# exact alpha/omega search refuses graphs larger than this
EXACT_SEARCH_LIMIT = 60


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    family: str = field(default="parsed", compare=False)
    params: tuple = field(default=(), compare=False)
    transitive: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.transitive and self.family not in TRANSITIVE_FAMILIES:
            raise ValueError("only complete, cycle and kneser graphs are flagged transitive")
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}-{v} out of range for n={self.n}")
            clean.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n, edges, family="parsed", params=(), transitive=False):
        return cls(n, frozenset(edges), family, tuple(params), transitive)

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def adj(self):
        """Tuple of neighbourhood bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def coadj(self):
        """Neighbourhood bitmasks of the complement."""
        full = (1 << self.n) - 1
        return tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj))

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return bits(self.adj[v])

    def degree(self, v):
        return popcount(self.adj[v])

    def sorted_edges(self):
        return sorted(self.edges)

    def provenance(self):
        return {"family": self.family, "params": list(_jsonable(p) for p in self.params)}

    def induced(self, vertices):
        """Induced subgraph relabelled to ``0..len(vertices)-1`` in sorted order."""
        keep = sorted(vertices)
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(keep), edges, "parsed", ())

    def components(self):
        """Connected components as sorted vertex lists, ordered by smallest member."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(bits(comp))
        return out

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, family={self.family!r}, params={self.params!r})"


@dataclass(frozen=True)
class GraphStats:
    alpha: int
    omega: int
    triangle_free: bool
    m: int


def bits(mask):
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask):
    return bin(mask).count("1")


def _jsonable(p):
    if isinstance(p, Fraction):
        return str(p)
    if isinstance(p, tuple):
        return [_jsonable(x) for x in p]
    return p


# -- parsing -----------------------------------------------------------------


def parse_graph(text):
    """Parse edge-list ("n m" header, 0-based) or DIMACS .col (1-based) text."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ParseError("empty input", 1)
    first = lines[0][1].split()[0]
    if first in ("c", "p"):
        return _parse_dimacs(lines)
    return _parse_edge_list(lines)


def _ints(lineno, tokens, count):
    if len(tokens) != count:
        raise ParseError(f"expected {count} integers, got {len(tokens)}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def _check_edge(lineno, u, v, n):
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"endpoint out of range in edge {u} {v} (n={n})", lineno)
    if u == v:
        raise ParseError(f"self-loop at vertex {u}", lineno)


def _parse_edge_list(lines):
    lineno, header = lines[0]
    n, m = _ints(lineno, header.split(), 2)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", lineno)
    edges = set()
    for lineno, ln in body:
        u, v = _ints(lineno, ln.split(), 2)
        _check_edge(lineno, u, v, n)
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges, "parsed", ())


def _parse_dimacs(lines):
    n = None
    edges = set()
    for lineno, ln in lines:
        tokens = ln.split()
        tag = tokens[0]
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError("malformed problem line, expected 'p edge n m'", lineno)
            n, _m = _ints(lineno, tokens[2:], 2)
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            u, v = _ints(lineno, tokens[1:], 2)
            u, v = u - 1, v - 1
            _check_edge(lineno, u, v, n)
            edges.add((min(u, v), max(u, v)))
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing problem line", lines[-1][0])
    return Graph.from_edges(n, edges, "parsed", ())


def to_edge_list(G):
    rows = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(rows) + "\n"


# -- operations ----------------------------------------------------------------


def complement(G):
    edges = [(u, v) for u, v in combinations(range(G.n), 2) if not G.has_edge(u, v)]
    return Graph.from_edges(G.n, edges, G.family, G.params, G.transitive)


def disjoint_union(G, k):
    """``k`` disjoint copies; copy ``j`` occupies ids ``j*n .. (j+1)*n - 1``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = G.n
    edges = [(u + j * n, v + j * n) for j in range(k) for u, v in G.edges]
    return Graph.from_edges(k * n, edges, "disjoint-union", (k, G.family, G.params))


def gen_star(t, s=0):
    """``K_{1,t}`` plus ``s`` isolated vertices; 0 is the centre, 1..t the leaves."""
    if t < 1:
        raise ValueError("star needs t >= 1")
    if s < 0:
        raise ValueError("s must be nonnegative")
    family = "star" if s == 0 else "star-plus-isolated"
    return Graph.from_edges(t + s + 1, [(0, i) for i in range(1, t + 1)], family, (t, s))


def gen_complete(n):
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Graph.from_edges(n, combinations(range(n), 2), "complete", (n,), True)


def gen_cycle(n):
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], "cycle", (n,), True)


def gen_path(n):
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], "path", (n,))


def kneser_vertices(a, b):
    return list(combinations(range(1, a + 1), b))


def gen_kneser(a, b):
    """Kneser graph on the ``b``-subsets of ``{1..a}`` (lexicographic ids).

    For ``a < 2b`` the graph is edgeless; that is allowed.
    """
    if b < 1 or b > a:
        raise ValueError("Kneser graph needs 1 <= b <= a")
    verts = [frozenset(s) for s in kneser_vertices(a, b)]
    edges = [(i, j) for i, j in combinations(range(len(verts)), 2) if not verts[i] & verts[j]]
    return Graph.from_edges(len(verts), edges, "kneser", (a, b), True)


def gen_mycielski(G):
    """Mycielskian: ``v_i -> i``, shadow ``v'_i -> n + i``, apex ``z -> 2n``."""
    n = G.n
    edges = list(G.edges)
    for u, v in G.edges:
        edges.append((n + u, v))
        edges.append((n + v, u))
    edges.extend((n + i, 2 * n) for i in range(n))
    return Graph.from_edges(2 * n + 1, edges, "mycielski", (G.family, G.params))


def gen_random(n, p, seed):
    """``G(n, p)``: pairs ``u < v`` in lexicographic order, one SplitMix64 draw each."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = SplitMix64(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.bernoulli(p)]
    return Graph.from_edges(n, edges, "random", (n, p, seed))


def gen_random_triangle_free(n, p, seed):
    """Seeded triangle-free graph: a ``G(n, p)`` draw per pair, rejecting edges that close a triangle."""
    p = Fraction(p)
    rng = SplitMix64(seed)
    adj = [0] * n
    edges = []
    for u, v in combinations(range(n), 2):
        if rng.bernoulli(p) and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            edges.append((u, v))
    return Graph.from_edges(n, edges, "random", (n, p, seed, "triangle-free"))


def stats(G, limit=EXACT_SEARCH_LIMIT):
    if G.n > limit:
        raise CapabilityError(
            f"exact alpha/omega search limited to n <= {limit} (got n={G.n}); "
            "use a heuristic bound instead"
        )
    from .subsets import independence_number, clique_number

    alpha = independence_number(G)
    omega = clique_number(G)
    return GraphStats(alpha=alpha, omega=omega, triangle_free=omega <= 2, m=G.m)


NAMED = {
    "petersen": lambda: gen_kneser(5, 2),
    "grotzsch": lambda: gen_mycielski(gen_cycle(5)),
}


def graph_from_spec(spec):
    """Build a graph from an inline spec.

    Accepted forms: ``gen:<family>:<p1>,<p2>``, bare ``<family>:<params>``,
    named graphs (``petersen``, ``grotzsch``, ``c5``, ``k3``, ``p4``), and
    ``gen:mycielski:<inner>`` / ``gen:union:<k>:<inner>`` which nest.
    """
    spec = spec.strip()
    if spec.startswith("gen:"):
        spec = spec[4:]
    low = spec.lower()
    if low in NAMED:
        return NAMED[low]()
    if len(low) > 1 and low[0] in "ckp" and low[1:].isdigit():
        n = int(low[1:])
        return {"c": gen_cycle, "k": gen_complete, "p": gen_path}[low[0]](n)
    family, _, rest = spec.partition(":")
    try:
        if family == "mycielski":
            return gen_mycielski(graph_from_spec(rest))
        if family in ("union", "disjoint-union"):
            k, _, inner = rest.partition(":")
            return disjoint_union(graph_from_spec(inner), int(k))
        args = [a for a in rest.split(",") if a] if rest else []
        if family == "star":
            return gen_star(*[int(a) for a in args])
        if family == "complete":
            return gen_complete(int(args[0]))
        if family == "empty":
            return complement(gen_complete(int(args[0])))
        if family == "cycle":
            return gen_cycle(int(args[0]))
        if family == "path":
            return gen_path(int(args[0]))
        if family == "kneser":
            return gen_kneser(int(args[0]), int(args[1]))
        if family == "random":
            return gen_random(int(args[0]), Fraction(args[1]), int(args[2]))
    except (IndexError, ValueError, TypeError) as exc:
        raise ParseError(f"bad generator spec {spec!r}: {exc}") from None
    raise ParseError(f"unknown generator family {family!r}")
