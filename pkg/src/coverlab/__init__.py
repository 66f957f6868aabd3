"""Cover ideals of graphs: symbolic powers, Hilbert series, multiplicity, regularity."""

__version__ = "0.1.0"

from .monomial import (
    AmbientMismatchError,
    Monomial,
    MonomialIdeal,
    PreconditionError,
    PrimeSupport,
    colon,
    colon_ideal,
    contains,
    divides,
    gcd,
    ideal_sum,
    intersect,
    lcm,
    minimal_primes,
    minimalize,
    product,
)
from .graphs import (
    SimpleGraph,
    VertexCover,
    closed_form_cover_generators,
    complete_graph,
    complete_multipartite,
    cover_degree,
    cover_ideal,
    crown,
    edge_ideal,
    from_edge_list,
    minimal_vertex_covers,
)
from .powers import (
    bracket_power,
    multipartite_chain_ideal,
    multipartite_symbolic_generators,
    power,
    symbolic_membership,
    symbolic_power,
)
from .polynomial import IntPolynomial
from .hilbert import HilbertSeries, hilbert_function_oracle, numerator, reduce
from .betti import BettiTable, betti_table, closed_form_regularity, projective_dimension, regularity
