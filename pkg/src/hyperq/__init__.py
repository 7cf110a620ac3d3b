"""Signless Laplacian spectra of uniform hypergraphs."""

from ._config import NUMBA_AVAILABLE, USE_NUMBA, Tolerances
from .charpoly import CharPoly, char_poly_exact
from .core import (
    DegreeProfile,
    Hypergraph,
    build_hypergraph,
    cartesian_product,
    degrees,
    diameter,
    distance,
    edge_neighborhood,
    is_connected,
    neighborhood,
    union,
)
from .errors import HypergraphError
from .io import parse, parse_text, serialize
from .multigraphs import Multigraph, clique_multigraph, line_degree_check, line_multigraph
from .power import (
    PowerParams,
    PowerVertexMap,
    kernel_dimension_witnesses,
    lift_eigenvector,
    power,
    predict_power_spectrum,
    verify_power_spectrum,
)
from .spectral import (
    Spectrum,
    degree_matrix,
    eigen_decompose,
    gram_line_matrix,
    incidence_matrix,
    principal_eigenvector,
    product_eigsum_check,
    q_spectrum,
    quadratic_form_edges,
    signless_laplacian,
    spectral_radius,
    spectrum_union_check,
    subgraph_monotonicity_check,
    verify_poly_identity_line,
)
from .structure import (
    Coloring,
    PartialBipartition,
    balanced_bipartition_to_kernel,
    degree_sum_bounds,
    detect_easy_balanced_patterns,
    diameter_upper_bound,
    distinct_eigenvalues_vs_diameter,
    greedy_min_degree_coloring,
    partial_bipartition_from_kernel,
    regularity_report,
    spectral_edge_count,
    zero_eigenpair_valid,
)

__version__ = "0.1.0"
