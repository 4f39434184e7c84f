"""Exact arithmetic for quantum seeds built from reduced words."""

from .glsinit import ConventionMismatch, initial_seed, initial_seed_data
from .graph import ExchangeGraph, enumerate_graph, relative_expansions
from .qring import NotDivisible, QInt
from .qtorus import QuantumTorus, TorusElement
from .rootdata import CartanDatum, NotReduced, Weight, named_cartan
from .seed import FrozenMutation, LaurentFailure, QuantumSeed

__all__ = [
    "CartanDatum",
    "ConventionMismatch",
    "ExchangeGraph",
    "FrozenMutation",
    "LaurentFailure",
    "NotDivisible",
    "NotReduced",
    "QInt",
    "QuantumSeed",
    "QuantumTorus",
    "TorusElement",
    "Weight",
    "enumerate_graph",
    "initial_seed",
    "initial_seed_data",
    "named_cartan",
    "relative_expansions",
]

__version__ = "0.1.0"
