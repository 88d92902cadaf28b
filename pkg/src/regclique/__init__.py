"""Cayley graphs over Z_l + Z_2^m + F_q with spreads of 1-regular cliques:
construction, parameter search, and verifiable edge-regularity certificates.
"""

from .certify import (
    Certificate,
    ErgParams,
    SrgParams,
    assemble_certificate,
    check_edge_regular,
    check_strongly_regular,
    srg_clique_parameters,
)
from .construction import (
    GroupElement,
    GroupParams,
    build_cayley_graph,
    generating_set,
    make_group,
    psi1_table,
    psi2_table,
)
from .cyclotomy import CyclotomicContext, cyclotomic_number, cyclotomic_table, make_context
from .fields import Field, PrimitiveData, build_field, dlog, find_primitive_element
from .graphcore import Graph
from .numtheory import search_m2, search_m3

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CyclotomicContext",
    "ErgParams",
    "Field",
    "Graph",
    "GroupElement",
    "GroupParams",
    "PrimitiveData",
    "SrgParams",
    "assemble_certificate",
    "build_cayley_graph",
    "build_field",
    "check_edge_regular",
    "check_strongly_regular",
    "cyclotomic_number",
    "cyclotomic_table",
    "dlog",
    "find_primitive_element",
    "generating_set",
    "make_context",
    "make_group",
    "psi1_table",
    "psi2_table",
    "search_m2",
    "search_m3",
    "srg_clique_parameters",
]
