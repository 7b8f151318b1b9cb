"""Brute-force oracles shared by the test modules.

Nothing here imports the search or LP code under test; each oracle works
from the raw edge set.
"""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from cofrac.graph import Graph


def edge_set(G):
    return {frozenset(e) for e in G.edges}


def is_independent(G, S):
    E = edge_set(G)
    return all(frozenset((u, v)) not in E for u, v in combinations(S, 2))


def is_clique(G, S):
    E = edge_set(G)
    return all(frozenset((u, v)) in E for u, v in combinations(S, 2))


def all_subsets(n):
    for r in range(n + 1):
        yield from combinations(range(n), r)


def brute_alpha(G):
    return max(len(S) for S in all_subsets(G.n) if is_independent(G, S))


def brute_omega(G):
    return max(len(S) for S in all_subsets(G.n) if is_clique(G, S))


def brute_maximal(G, pred):
    sets = [set(S) for S in all_subsets(G.n) if S and pred(G, S)]
    return sorted(tuple(sorted(S)) for S in sets if not any(S < T for T in sets))


def brute_max_weight(G, w, pred):
    best = max(sum((w[v] for v in S), Fraction(0)) for S in all_subsets(G.n) if pred(G, S))
    return best


def solve_linear(A, b):
    """Gauss-Jordan over Fractions; ``None`` if singular."""
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[r][n] for r in range(n)]


def brute_covering_lp(num_rows, columns):
    """Minimum of ``1.x`` over basic feasible solutions of ``[A | -I] z = 1``.

    Exhaustive over all bases; only for tiny instances.
    """
    m = num_rows
    cols = []
    for c in columns:
        cols.append(([1 if i in c else 0 for i in range(m)], 1))
    for i in range(m):
        cols.append(([-1 if r == i else 0 for r in range(m)], 0))
    best = None
    for basis in combinations(range(len(cols)), m):
        A = [[cols[j][0][r] for j in basis] for r in range(m)]
        x = solve_linear(A, [1] * m)
        if x is None or any(v < 0 for v in x):
            continue
        cost = sum((x[k] * cols[j][1] for k, j in enumerate(basis)), Fraction(0))
        if best is None or cost < best:
            best = cost
    return best


def brute_chromatic(G):
    for k in range(0 if G.n == 0 else 1, G.n + 1):
        if _colourable(G, k):
            return k
    return G.n


def _colourable(G, k):
    colour = [-1] * G.n
    adj = [[] for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)

    def go(v):
        if v == G.n:
            return True
        for c in range(k):
            if all(colour[u] != c for u in adj[v]):
                colour[v] = c
                if go(v + 1):
                    return True
        colour[v] = -1
        return False

    return go(0)


def brute_cochromatic(G):
    """Fewest parts in a partition into cliques and independent sets."""
    n = G.n
    if n == 0:
        return 0
    good = [S for S in all_subsets(n) if S and (is_clique(G, S) or is_independent(G, S))]
    masks = sorted({sum(1 << v for v in S) for S in good})
    full = (1 << n) - 1
    frontier = {0}
    for k in range(1, n + 1):
        frontier = {f | s for f in frontier for s in masks}
        if full in frontier:
            return k
    return n


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@pytest.fixture
def petersen():
    from cofrac.graph import gen_kneser

    return gen_kneser(5, 2)
