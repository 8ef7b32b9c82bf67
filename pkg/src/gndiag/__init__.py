"""g-good-neighbor connectivity, gc number, and diagnosability under the PMC model."""

from .connectivity import (
    EXACT,
    NONEXISTENT,
    UNDETERMINED,
    GnCutResult,
    is_gn_cut,
    is_gn_faulty_set,
    kappa_g,
)
from .diagnosability import (
    DiagnosabilityResult,
    ProductBoundReport,
    product_bounds,
    t_g_exists,
    t_g_formula,
    t_g_oracle,
)
from .families import FamilySpec, cartesian_product, family, make_family
from .gc import G1, G2, GcCertificate, GcResult, balanced_partition, classify, gc_number
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    components_after_removal,
    has_edge_between,
    induced_min_degree,
    parse_edge_list,
    format_edge_list,
)
from .pmc import Syndrome, TestAssignment, distinguishable_criterion, distinguishable_oracle, is_consistent

__version__ = "0.1.0"
