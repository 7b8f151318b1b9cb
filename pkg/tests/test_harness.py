from fractions import Fraction

import pytest
from hypothesis import given, settings

from cofrac.errors import CapabilityError
from cofrac.graph import (
    Graph,
    complement,
    disjoint_union,
    gen_complete,
    gen_cycle,
    gen_kneser,
    gen_mycielski,
    gen_star,
)
from cofrac.harness import (
    EXCEPTION,
    FAILS,
    HOLDS,
    NOT_APPLICABLE,
    aks_subgraph_sample,
    check_example1,
    check_kneser,
    check_mycielski,
    check_proposition1,
    check_theorem3,
    check_theorem4,
    check_theorem5,
    check_theorem6,
    edge_cocover,
    gap_report,
    integral_chi,
    integral_z,
    ramsey_convert,
    random_cocover,
    remark6_experiment,
    star_certificate,
    star_value,
    theorem7_report,
    triangle_free_sample,
    zf_nm_search,
)
from cofrac.solver import check_certificate, verify_cover, z_f

from conftest import brute_chromatic, brute_cochromatic, graphs


def test_integral_values():
    assert integral_chi(gen_cycle(5)) == 3
    assert integral_chi(gen_kneser(5, 2)) == 3
    assert integral_z(gen_cycle(5)) == 3
    assert integral_z(gen_star(3)) == 2
    assert integral_z(gen_complete(5)) == 1
    assert integral_chi(Graph.from_edges(0, [])) == 0
    with pytest.raises(CapabilityError):
        integral_z(gen_cycle(15))


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7, min_n=1))
def test_integral_oracles_match_brute_force(G):
    assert integral_chi(G) == brute_chromatic(G)
    assert integral_z(G) == brute_cochromatic(G)


@pytest.mark.parametrize("t, s", [(t, s) for t in range(1, 5) for s in range(4)])
def test_example1_certificates(t, s):
    r = check_example1(t, s)
    assert r.verdict == HOLDS
    cover, labeling = star_certificate(t, s)
    assert cover.weight == labeling.weight == star_value(t, s)


def test_proposition1():
    r = check_proposition1(gen_kneser(5, 2))
    assert r.verdict == HOLDS and r.quantities["equality"] and r.quantities["design_cover"]
    r = check_proposition1(gen_star(3))
    assert r.verdict == HOLDS and not r.quantities["equality"]
    assert r.quantities["z_f"] == Fraction(5, 3) > r.quantities["bound"] == Fraction(4, 3)


def test_theorem5():
    r = check_theorem5(gen_cycle(5), 2)
    assert r.verdict == HOLDS and r.quantities["z_f_kG"] == Fraction(5, 2)
    assert check_theorem5(gen_complete(3), 3).quantities["z_f_kG"] == 3
    assert check_theorem5(gen_complete(3), 2).verdict == NOT_APPLICABLE


def test_theorem6_detects_exceptions():
    assert check_theorem6(gen_cycle(5)).verdict == HOLDS
    r = check_theorem6(gen_star(2, 1))
    assert r.verdict == EXCEPTION and r.exception_family == "star-plus-isolated"
    assert check_theorem6(gen_star(3)).exception_family == "star"
    # a star built by other means is still recognised
    assert check_theorem6(Graph.from_edges(4, [(3, 0), (3, 1)])).verdict == EXCEPTION
    assert check_theorem6(gen_complete(3)).verdict == NOT_APPLICABLE


def test_mycielski_and_kneser():
    assert check_mycielski(gen_complete(2)).quantities["chi_f_M"] == Fraction(5, 2)
    assert check_mycielski(gen_complete(1)).verdict == HOLDS
    r = check_kneser(5, 2)
    assert r.verdict == HOLDS and r.quantities["z_f"] == Fraction(5, 2)
    assert check_kneser(3, 2).verdict == NOT_APPLICABLE


def test_theorem3_and_4():
    r = check_theorem3(gen_complete(2))
    assert r.verdict == EXCEPTION and r.quantities == {"chi": 2, "z": 1}
    assert check_theorem3(gen_cycle(7)).verdict == HOLDS
    r = check_theorem4(gen_cycle(5), 2)
    assert r.verdict == HOLDS and r.quantities["z_kG"] == 3


def test_ramsey_on_petersen_edge_cover():
    P = gen_kneser(5, 2)
    cover = edge_cocover(P)
    assert len(cover.entries) == 15 and cover.weight == 5
    out, trace = ramsey_convert(P, cover)
    assert verify_cover(P, out) and trace.check()
    assert (trace.k, trace.R) == (3, 6)
    assert out.weight <= cover.weight + 6


def test_ramsey_trace_tampering_detected():
    P = gen_kneser(5, 2)
    _, trace = ramsey_convert(P, edge_cocover(P))
    trace.s[-1] += 1
    assert not trace.check()


def test_ramsey_rejects_invalid_input_and_large_cliques():
    P = gen_kneser(5, 2)
    cover = edge_cocover(P, Fraction(1, 4))
    cover.entries = cover.entries[:3]
    with pytest.raises(ValueError):
        ramsey_convert(P, cover)
    K4 = gen_complete(4)
    with pytest.raises(CapabilityError):
        ramsey_convert(K4, z_f(K4).cover)


def test_theorem7_on_random_covers():
    for i, G in enumerate(triangle_free_sample(30, 12, 5)):
        r = theorem7_report(G, random_cocover(G, i))
        assert r.verdict == HOLDS, r.note


def test_remark6_and_gap():
    r = remark6_experiment(20, 1)
    assert r.verdict == HOLDS
    assert r.quantities["lower"] <= r.quantities["z_f"] <= r.quantities["chi_greedy"]
    assert remark6_experiment(20, 1).quantities == r.quantities
    r = gap_report(gen_complete(5))
    assert r.quantities["lhs"] == r.quantities["rhs"] == 4
    assert gap_report(gen_cycle(5)).verdict == HOLDS


def test_aks_sample_is_a_certified_subgraph():
    for G in (gen_kneser(5, 2), complement(gen_cycle(7)), disjoint_union(gen_complete(3), 2)):
        sample = aks_subgraph_sample(G, 3)
        parent = G.induced(sample.vertices)
        assert sample.graph.n == parent.n and sample.graph.edges <= parent.edges
        assert check_certificate(sample.graph, sample.zf)
    assert aks_subgraph_sample(gen_cycle(5), 1).empty


def test_zf_nm_search():
    res = zf_nm_search(6, 7, 40, 5)
    assert res.witness.n == 6 and res.witness.m == 7
    assert z_f(res.witness).value == res.best == z_f(res.complement_witness).value
    assert zf_nm_search(6, 7, 40, 5).best == res.best
    with pytest.raises(ValueError):
        zf_nm_search(4, 7, 10, 1)


def test_reports_are_json_ready():
    r = check_theorem6(gen_star(2, 1))
    obj = r.to_json()
    assert obj["verdict"] == EXCEPTION and obj["quantities"]["z_f"] == "5/3"
    assert FAILS not in {check_theorem6(G).verdict for G in triangle_free_sample(40, 8, 2)}
