"""rigikit: rigidity analysis of graphs and bar-joint frameworks.

Exact or floating arithmetic, combinatorial and randomized rigidity tests,
rigidity-preserving constructions, NAC-coloring enumeration, motion tracking
and animation, plus a CLI and an HTTP service.
"""

__version__ = "0.1.0"

from .scalars import Mode
from .graphs import (
    Graph,
    connected_components,
    from_vertices_and_edges,
    graph_from_edges,
    is_connected,
    is_vertex_connected,
)
from .expressions import evaluate, parse_expression, unparse
from .linalg import ExactMatrix, FloatMatrix, cokernel, kernel, rank
from .pebble import is_kl_sparse, is_kl_tight, pebble_components, pebble_rank
from .frameworks import (
    Framework,
    framework_new,
    inf_flexes,
    is_congruent,
    is_equivalent,
    is_inf_rigid,
    is_min_inf_rigid,
    is_nontrivial_flex,
    is_prestress_stable,
    is_redundantly_inf_rigid,
    is_second_order_rigid,
    is_stress,
    project,
    random_realization,
    rescale,
    rigidity_matrix,
    rotate2d,
    rotate3d,
    stress_matrix,
    stresses,
    translate,
    trivial_flex_basis,
)
from .generic import (
    Rd_closure,
    RigidityVerdict,
    is_Rd_circuit,
    is_Rd_closed,
    is_Rd_dependent,
    is_Rd_independent,
    is_globally_rigid,
    is_k_redundantly_rigid,
    is_min_rigid,
    is_rigid,
    rigid_components,
)
from .constructions import combine, cone, k_extension, named_framework, named_graph
from .nac import (
    NacColoring,
    is_nac_coloring,
    monochromatic_classes,
    nac_colorings,
    stable_separating_set,
)
from .motion import (
    ApproximateMotion,
    ParametricMotion,
    SvgStyle,
    animate_svg,
    approximate_motion,
    motion_samples,
    parametric_motion_new,
)
from .export import framework_svg, to_tikz
from .serialize import decode, encode

__all__ = [name for name in dir() if not name.startswith("_")]
