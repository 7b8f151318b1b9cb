from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from cofrac.errors import CapabilityError, ParseError
from cofrac.graph import (
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
    graph_from_spec,
    parse_graph,
    stats,
    to_edge_list,
)
from cofrac.rng import SplitMix64

from conftest import brute_alpha, brute_omega, graphs


def degrees(G):
    return sorted(G.degree(v) for v in range(G.n))


def test_parse_examples():
    P = parse_graph("3 2\n0 1\n0 2")
    assert P.n == 3 and P.edges == {(0, 1), (0, 2)} and P.family == "parsed"
    assert parse_graph("1 0") == Graph.from_edges(1, [])
    assert parse_graph("3 3\n0 1\n1 2\n0 2") == gen_complete(3)


def test_parse_collapses_duplicates():
    G = parse_graph("3 3\n0 1\n1 0\n1 2\n")
    assert G.m == 2


def test_parse_dimacs_is_one_based():
    G = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert G == gen_complete(3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3\n0 1", 1),
        ("x y", 1),
        ("3 1\n0 3", 2),
        ("3 2\n0 1\n2 2", 3),
        ("3 2\n0 1", 1),
        ("p edge 3 1\ne 1 4", 2),
        ("p edge 3\ne 1 2", 1),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_edge_list_round_trip(petersen):
    assert parse_graph(to_edge_list(petersen)) == petersen


def test_complement_examples():
    assert complement(gen_complete(3)).m == 0
    C6 = gen_cycle(6)
    assert complement(complement(C6)) == C6
    C5c = complement(gen_cycle(5))
    assert C5c.m == 5 and degrees(C5c) == [2] * 5
    assert complement(gen_cycle(5)).transitive


def test_disjoint_union_examples():
    M = disjoint_union(gen_complete(2), 3)
    assert M.n == 6 and M.edges == {(0, 1), (2, 3), (4, 5)}
    G = gen_path(4)
    assert disjoint_union(G, 1) == G
    U = disjoint_union(gen_cycle(5), 2)
    assert (U.n, U.m, stats(U).omega) == (10, 10, 2)
    with pytest.raises(ValueError):
        disjoint_union(G, 0)


def test_gen_star():
    assert gen_star(1, 0) == gen_complete(2)
    S = gen_star(3, 0)
    assert (S.n, S.m) == (4, 3) and S.family == "star"
    S = gen_star(2, 1)
    assert (S.n, S.m) == (4, 2) and S.family == "star-plus-isolated"
    assert S.edges == {(0, 1), (0, 2)}
    with pytest.raises(ValueError):
        gen_star(0, 1)


def test_kneser_small_cases():
    assert gen_kneser(3, 1) == gen_complete(3)
    # 3 disjoint pairs of complementary 2-subsets of a 4-set
    K = gen_kneser(4, 2)
    assert K.m == 3 and degrees(K) == [1] * 6
    with pytest.raises(ValueError):
        gen_kneser(3, 0)
    with pytest.raises(ValueError):
        gen_kneser(2, 3)
    assert gen_kneser(3, 2).m == 0


def test_petersen_by_brute_force(petersen):
    subsets = list(combinations(range(1, 6), 2))
    disjoint = sum(1 for a, b in combinations(subsets, 2) if not set(a) & set(b))
    assert disjoint == 15
    assert petersen.n == 10 and petersen.m == disjoint
    assert degrees(petersen) == [3] * 10
    assert petersen.transitive


def test_mycielski():
    M = gen_mycielski(gen_complete(2))
    assert (M.n, M.m) == (5, 5) and degrees(M) == [2] * 5
    assert len(M.components()) == 1 and stats(M).triangle_free
    M1 = gen_mycielski(gen_complete(1))
    assert M1.n == 3 and M1.edges == {(1, 2)}
    assert gen_mycielski(gen_cycle(5)).n == 11


def test_gen_random_extremes_and_determinism():
    assert gen_random(5, 0, 42).m == 0
    assert gen_random(5, 1, 42) == gen_complete(5)
    a = gen_random(30, Fraction(1, 2), 7)
    b = gen_random(30, Fraction(1, 2), 7)
    assert a.edges == b.edges
    assert a.edges != gen_random(30, Fraction(1, 2), 8).edges
    with pytest.raises(ValueError):
        gen_random(5, Fraction(3, 2), 1)


def test_splitmix_reference_stream():
    # reference SplitMix64 outputs for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_random_graph_is_frozen():
    # pins the pair-consumption order and the 53-bit comparison
    G = gen_random(6, Fraction(1, 2), 7)
    assert G.sorted_edges() == FROZEN_G6


FROZEN_G6 = [(0, 1), (0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)]


def test_random_triangle_free():
    for seed in range(20):
        G = gen_random_triangle_free(9, Fraction(1, 2), seed)
        assert stats(G).triangle_free


def test_stats_examples(petersen):
    s = stats(gen_cycle(5))
    assert (s.alpha, s.omega, s.triangle_free) == (2, 2, True)
    s = stats(petersen)
    assert (s.alpha, s.omega) == (brute_alpha(petersen), brute_omega(petersen)) == (4, 2)
    s = stats(gen_star(3))
    assert (s.alpha, s.omega) == (3, 2)


def test_stats_limit():
    with pytest.raises(CapabilityError):
        stats(gen_complete(61))


def test_graph_from_spec():
    assert graph_from_spec("gen:star:3,0") == gen_star(3, 0)
    assert graph_from_spec("petersen") == gen_kneser(5, 2)
    assert graph_from_spec("c5") == gen_cycle(5)
    assert graph_from_spec("gen:mycielski:cycle:5") == gen_mycielski(gen_cycle(5))
    assert graph_from_spec("gen:union:2:k3") == disjoint_union(gen_complete(3), 2)
    assert graph_from_spec("gen:random:10,1/2,3") == gen_random(10, Fraction(1, 2), 3)
    with pytest.raises(ParseError):
        graph_from_spec("gen:nonsense:1")


def test_provenance_json():
    assert gen_star(2, 1).provenance() == {"family": "star-plus-isolated", "params": [2, 1]}
    assert gen_random(4, Fraction(1, 2), 9).provenance() == {"family": "random", "params": [4, "1/2", 9]}


def test_transitive_flag_only_by_construction():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1)], "path", (2,), transitive=True)


def test_invalid_edges_rejected():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_complement_involution(G):
    assert complement(complement(G)) == G


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9, min_n=1))
def test_alpha_omega_swap_under_complement(G):
    s, c = stats(G), stats(complement(G))
    assert s.alpha == c.omega and s.omega == c.alpha
    assert s.alpha == brute_alpha(G) and s.omega == brute_omega(G)
    assert s.triangle_free == (s.omega <= 2)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6, min_n=1))
def test_disjoint_union_counts(G):
    for k in (1, 2, 3):
        U = disjoint_union(G, k)
        assert U.m == k * G.m and U.n == k * G.n
        assert stats(U).omega == stats(G).omega
