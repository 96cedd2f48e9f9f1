"""Groups of projectivities of simplicial complexes and simple polytopes."""

from .complex import (
    SimplicialComplex,
    barycentric_subdivision,
    build,
    codim2_faces,
    dual_graph,
    is_locally_strongly_connected,
    is_strongly_connected,
    join,
    link,
    manifold_precheck,
    star,
)
from .permgroup import Permutation, PermutationGroup, classify_symmetric_product, generate
from .projectivity import (
    base_change,
    induced_map,
    odd_subgroup,
    perspectivity,
    pi_group,
    projectivity,
    verify_generation,
    verify_join_product,
)
from .coloring import chromatic_number, is_balanced, is_bipartite
from .polytope import SimplePolytope, coloring_theorem_check, dualize, load_polytope
from .builders import make

__version__ = "0.1.0"
