import json
from collections import Counter
from fractions import Fraction

import pytest

from regclique.certify import (
    ErgParams,
    Failure,
    assemble_certificate,
    canonical_spread,
    check_edge_regular,
    check_strongly_regular,
    clique_nexus,
    eigenvalues_2x2,
    predicted_local_valencies,
    predicted_mu_witness,
    quotient_matrix,
    srg_clique_parameters,
)
from regclique.errors import (
    HypothesisViolated,
    NoOutsideVertices,
    NotAClique,
    NotAPartition,
    NotEdgeRegular,
)
from regclique.graphcore import Graph

from conftest import cayley_instance
from reference import complete_edges, cycle_edges


def test_edge_regular_x1(x1):
    _, _, _, g = x1
    assert check_edge_regular(g) == ErgParams(28, 9, 2)


def test_edge_regular_cycle_and_star():
    five_cycle = Graph.from_edges(*cycle_edges(5))
    assert check_edge_regular(five_cycle) == ErgParams(5, 2, 0)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    result = check_edge_regular(star)
    assert isinstance(result, Failure)
    u, v = result.witness
    assert star.degree(u) != star.degree(v)


def test_edge_regular_failure_carries_deviant_edge():
    # two triangles sharing a vertex made 2-regular: bowtie is irregular, use
    # instead a 4-cycle plus chord's complement... simplest: prism vs near-prism
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    # triangular prism: 3-regular, adjacent in triangle share 1, across share 0
    result = check_edge_regular(g)
    assert isinstance(result, Failure)
    u, v = result.witness
    assert g.has_edge(u, v)


def test_strongly_regular_petersen(petersen):
    scan = check_strongly_regular(petersen)
    assert scan.verdict == "SRG"
    params = scan.params
    assert (params.n, params.k, params.lam, params.mu) == (10, 3, 0, 1)
    assert {params.theta1, params.theta2} == {1.0, -2.0}


def test_strongly_regular_complete():
    g = Graph.from_edges(*complete_edges(5))
    assert check_strongly_regular(g).verdict == "Complete"


def test_strongly_regular_x1(x1):
    _, _, _, g = x1
    scan = check_strongly_regular(g)
    assert scan.verdict == "NotSRG"
    assert scan.mu_values == (2, 3, 4)
    assert scan.witnesses == ((0, 9, 2), (0, 1, 3), (0, 10, 4))
    for u, v, mu in scan.witnesses:
        assert not g.has_edge(u, v)
        assert g.common_neighbours(u, v) == mu


def test_strongly_regular_requires_edge_regular():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(NotEdgeRegular):
        check_strongly_regular(star)


def test_identity_scan_matches_exhaustive_on_cayley(x1):
    _, _, _, g = x1
    exhaustive = check_strongly_regular(g, scan="exhaustive")
    from_zero = check_strongly_regular(g, scan="from_identity")
    assert exhaustive.mu_values == from_zero.mu_values
    assert from_zero.witnesses == ((0, 9, 2), (0, 1, 3), (0, 10, 4))


def test_canonical_spread_x1(x1):
    gp, _, _, g = x1
    spread = canonical_spread(gp)
    assert len(spread) == 7
    assert all(len(c) == 4 for c in spread)
    covered = sorted(v for clique in spread for v in clique)
    assert covered == list(range(28))
    for clique in spread:
        report = clique_nexus(g, clique)
        assert report.order == 4
        assert report.nexus == 1
        assert report.witnesses is None
        assert g.common_neighbours(clique[0], clique[1]) == 2  # adjacent pair: lambda


def test_clique_nexus_single_edge_not_regular(x1):
    gp, _, _, g = x1
    edge = canonical_spread(gp)[0][:2]
    report = clique_nexus(g, edge)
    assert report.nexus is None
    (v1, c1), (v2, c2) = report.witnesses
    assert c1 != c2
    assert (g.bitset(v1) & sum(1 << v for v in edge)).bit_count() == c1


def test_clique_nexus_errors(x1):
    _, _, _, g = x1
    k4 = Graph.from_edges(*complete_edges(4))
    with pytest.raises(NoOutsideVertices):
        clique_nexus(k4, [0, 1, 2, 3])
    with pytest.raises(NotAClique):
        clique_nexus(g, [0, 1, 2])  # 0 and 1 differ by an element outside the connection set
    with pytest.raises(ValueError):
        clique_nexus(g, [0])


def test_predicted_local_valencies_x1(x1):
    gp, pi, ctx, g = x1
    predicted = predicted_local_valencies(gp, pi, ctx)
    assert predicted == Counter({2: 9})
    assert predicted == g.neighbourhood_degree_multiset(0)
    assert sum(predicted.values()) == 9  # the degree


def test_predicted_local_valencies_non_uniform_for_l2():
    gp, pi, ctx, g = cayley_instance(2, 2, 7, 1, (0, 1, 2))
    predicted = predicted_local_valencies(gp, pi, ctx)
    assert predicted == Counter({6: 7, 2: 6})
    assert predicted == g.neighbourhood_degree_multiset(0)


def test_predicted_mu_witness_m2(x1):
    gp, pi, ctx, g = x1
    # pi(g) = 0 at g = 1 gives the count 2 + 2*c(0,1) = 2
    assert predicted_mu_witness(gp, pi, ctx, 1) == 2
    assert predicted_mu_witness(gp, pi, ctx, 3) == 4
    with pytest.raises(HypothesisViolated):
        predicted_mu_witness(gp, pi, ctx, 2)  # pi(2) = 1: adjacent pair
    with pytest.raises(HypothesisViolated):
        predicted_mu_witness(gp, pi, ctx, 0)


def test_predicted_local_valencies_m3(m3_29):
    gp, pi, ctx, g = m3_29
    # slice valency is 6 * c(1,5) = 6, matching the within-s0 valency 8l - 2
    predicted = predicted_local_valencies(gp, pi, ctx)
    assert predicted == Counter({6: 35})
    assert predicted == g.neighbourhood_degree_multiset(0)


def test_predicted_mu_witness_m3(m3_29):
    gp, pi, ctx, g = m3_29
    from regclique.construction import GroupElement, encode_vertex

    expected = {1: 2, 2: 4, 3: 4, 5: 6, 6: 4, 7: 10}
    rho = int(gp.pd.exp[1])
    for gv, want in expected.items():
        assert predicted_mu_witness(gp, pi, ctx, gv) == want
        w = encode_vertex(gp, GroupElement(0, gv, rho))
        assert g.common_neighbours(0, w) == want
    assert pi[4 - 1] == 1
    with pytest.raises(HypothesisViolated):
        predicted_mu_witness(gp, pi, ctx, 4)


def test_quotient_matrix_x1(x1):
    gp, _, _, g = x1
    clique = canonical_spread(gp)[0]
    rest = [v for v in range(g.n) if v not in set(clique)]
    qm = quotient_matrix(g, [clique, rest])
    assert qm.equitable
    assert qm.entries == ((Fraction(3), Fraction(6)), (Fraction(1), Fraction(8)))
    hi, lo = eigenvalues_2x2(qm.entries)
    assert abs(hi - 9) < 1e-9
    assert abs(lo - 2) < 1e-9


def test_quotient_matrix_inequitable_partition():
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    qm = quotient_matrix(path, [[0, 1], [2, 3]])
    assert not qm.equitable


def test_quotient_matrix_partition_validation(x1):
    _, _, _, g = x1
    with pytest.raises(NotAPartition):
        quotient_matrix(g, [list(range(10))])
    with pytest.raises(NotAPartition):
        quotient_matrix(g, [list(range(20)), list(range(15, 28))])
    with pytest.raises(NotAPartition):
        quotient_matrix(g, [list(range(28)), []])


def test_srg_clique_parameters():
    params = srg_clique_parameters(3, 2)
    assert (params.n, params.k, params.lam, params.mu) == (28, 9, 2, 3)
    assert (params.theta1, params.theta2) == (2, -3)
    assert (params.n - params.k - 1) * params.mu == 54 == params.k * (params.k - params.lam - 1)
    assert srg_clique_parameters(1, 1) == srg_clique_parameters(1, 1)
    assert (srg_clique_parameters(1, 1).n, srg_clique_parameters(1, 1).k) == (4, 2)
    with pytest.raises(ValueError):
        srg_clique_parameters(0, 1)


def test_certificate_x1_passes(x1):
    gp, pi, _, g = x1
    cert = assemble_certificate(gp, pi, None, g)
    assert cert.passed
    assert (cert.n_vertices, cert.k, cert.lam) == (28, 9, 2)
    assert cert.spread == {"count": 7, "order": 4, "nexus": 1}
    assert cert.srg["verdict"] == "NotSRG"
    assert cert.first_failure() is None
    # forced parameters would need mu = t + 1 = 3; the witnessed mu = 2 differs
    t, rem = divmod(gp.q - 1, 2 * 1 + 1)
    assert rem == 0
    assert 2 != t + 1


def test_certificate_l2_fails_edge_regularity():
    gp, pi, _, g = cayley_instance(2, 2, 7, 1, (0, 1, 2))
    cert = assemble_certificate(gp, pi, None, g)
    assert not cert.passed
    assert cert.first_failure() == "edge_regular"
    assert cert.lam is None
    by_name = {c["name"]: c["pass"] for c in cert.checks}
    assert not by_name["edge_regular"]
    assert not by_name["parameters"]
    assert by_name["clique_spread"]
    assert by_name["local_valencies"]
    assert by_name["mu_witnesses"]
    assert by_name["not_strongly_regular"]


def test_certificate_json_contract(x1):
    gp, pi, _, g = x1
    cert = assemble_certificate(gp, pi, None, g)
    data = json.loads(cert.to_json())
    assert list(data.keys()) == [
        "m", "l", "p", "a", "q", "modulus", "rho", "pi", "variant",
        "N", "k", "lambda", "edge_regular", "spread", "srg", "checks", "pass",
    ]
    assert list(data["spread"].keys()) == ["count", "order", "nexus"]
    assert list(data["srg"].keys())[:3] == ["verdict", "mu_values", "witnesses"]
    assert data["modulus"] is None
    assert data["rho"] == 3
    assert data["pi"] == [0, 1, 2]
    assert data["lambda"] == 2
    assert all(set(c) == {"name", "pass", "detail"} for c in data["checks"])


def test_certificate_m3_with_larger_clique():
    # q = 197 has c(1,5) = 5, so l = 4: cliques of order 32, and the
    # 6304-vertex size routes the scan outward from vertex 0 automatically
    from regclique.construction import psi1_table

    gp, pi, _, g = cayley_instance(4, 3, 197, 1, psi1_table())
    cert = assemble_certificate(gp, pi, "psi1", g)
    assert cert.passed
    assert (cert.n_vertices, cert.k, cert.lam) == (6304, 227, 30)
    assert cert.spread == {"count": 197, "order": 32, "nexus": 1}
    assert cert.srg["verdict"] == "NotSRG"
    assert cert.srg["scan"] == "from_identity"


def test_certificate_records_modulus_for_extension_fields():
    # GF(49) has c(1, 2) = 7, so l = 4 is the passing choice
    gp, pi, _, g = cayley_instance(4, 2, 7, 2, (0, 1, 2))
    cert = assemble_certificate(gp, pi, None, g)
    assert cert.passed
    data = json.loads(cert.to_json())
    assert data["modulus"] == [1, 0, 1]
    assert data["p"] == 7 and data["a"] == 2 and data["q"] == 49
    assert (data["N"], data["k"], data["lambda"]) == (784, 63, 14)
