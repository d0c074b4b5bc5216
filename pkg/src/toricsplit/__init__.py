"""Toric ideals of graphs: minimal generators, primitive walks and splittings."""

from .errors import (BudgetExceeded, ChordNotOdd, GraphError, NoMatchingType, NotAChord,
                     NotASplitting, NotReduced, NotSubgraph, ClosedFormViolation, ToricError,
                     WalkError)
from .fibers import (Binomial, Fiber, MinimalSystem, Monomial, a_degree, count_minimal_systems,
                     enumerate_fiber, generates, generator_degrees, indispensable_binomials,
                     indispensable_monomials, is_primitive, minimal_binomials,
                     minimal_generating_set, mu)
from .graph import Graph, family
from .walks import Walk, classify_chord, classify_walk, crossing_kind, enumerate_primitive_walks

__version__ = "0.1.0"
