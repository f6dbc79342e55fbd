"""coxeterlab: exact classification and superhyperbolicity certificates for Coxeter diagrams."""

from .rationals import QQ
from .scalars import (
    Scalar,
    MinPoly,
    min_poly,
    scalar_from_label,
    scalar_sign,
    cos_pi_over,
    sqrt2,
    sqrt5,
    sqrt10,
    BOLD,
    LevelCapExceeded,
)
from .rhopoly import RhoPoly, poly
from .diagram import (
    CoxeterDiagram,
    EdgeLabel,
    Subdiagram,
    DiagramError,
    ParseError,
    parse,
    parse_file,
    build,
    induced,
    connected_components,
)
from .spectra import (
    GramMatrix,
    Inertia,
    PolyFraction,
    gram,
    det_elim,
    det_cycles,
    det_cofactor,
    local_det,
    join_local_det,
    join_diagrams,
    inertia,
    inertia_via_charpoly,
    charpoly,
)
from .numeric import fast_inertia
from .taxonomy import (
    DiagramClass,
    CatalogEntry,
    classify,
    is_lanner,
    scan_subdiagrams,
    polytope_admissible,
    catalog_match,
    catalog_json,
    table1_entries,
    table2_entries,
    table3_entries,
    lanner_triangles,
    triangle_diagram,
)
from .certify import (
    DomainError,
    InapplicableError,
    PositivityCertificate,
    ShiftPositive,
    SturmWitness,
    Failed,
    SuperhyperbolicVerdict,
    d_func,
    D_func,
    positive_on_ray,
    certify_superhyperbolic_family,
    certify_superhyperbolic_any,
    dotted_leaf_test,
    case_identity_checks,
)
from .search import (
    ProductSpec,
    AdmissibleDiagram,
    GuardExceeded,
    expansion_search,
    expansion_empty_for_order,
    lanner_universe,
    product_search,
    check_product_membership,
    neighbor_table_check,
)
from .nikulin import A_coeff, mean_polygon_bound, three_free_contradiction, FaceBoundReport

__all__ = [name for name in dir() if not name.startswith("_")]
