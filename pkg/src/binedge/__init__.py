"""Local cohomology of binomial edge ideals through a Hochster-type poset decomposition."""

from .engine import (
    CohomologyProfile,
    analyze,
    depth_and_dim,
    hilbert_series_z,
    hilbert_series_zn,
    is_buchsbaum,
    is_cohen_macaulay,
    multiplicities,
    regularity,
)
from .gin import compare, gin_ideal, main2_decomposition
from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    edgeless_graph,
    parse_graph,
    path_graph,
)
from .homology import FieldSpec, SimplicialComplex, reduced_cohomology_dims
from .ideals import PrimeComponentIdeal, SumIdeal, minimal_primes
from .poset import build_P, build_Q
from .series import RationalSeries

__version__ = "0.1.0"
