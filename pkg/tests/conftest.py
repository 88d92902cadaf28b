import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from regclique.construction import build_cayley_graph, generating_set, make_group, psi1_table
from regclique.cyclotomy import make_context
from regclique.fields import build_field, find_primitive_element
from regclique.graphcore import Graph

from reference import petersen_edges


def cayley_instance(l, m, q_p, q_a, pi):
    """(gp, pi, ctx, graph) for one set of construction parameters."""
    field = build_field(q_p, q_a)
    pd = find_primitive_element(field)
    gp = make_group(l, m, field, pd)
    graph = build_cayley_graph(gp, generating_set(gp, pi))
    ctx = make_context(field, pd, (1 << m) - 1)
    return gp, pi, ctx, graph


@pytest.fixture(scope="session")
def x1():
    """The 28-vertex flagship instance: m=2, l=1, q=7, pi=(0,1,2)."""
    return cayley_instance(1, 2, 7, 1, (0, 1, 2))


@pytest.fixture(scope="session")
def m3_29():
    """The smallest m=3 instance: q=29 with the psi1 bijection."""
    return cayley_instance(1, 3, 29, 1, psi1_table())


@pytest.fixture(scope="session")
def petersen():
    n, edges = petersen_edges()
    return Graph.from_edges(n, edges)
