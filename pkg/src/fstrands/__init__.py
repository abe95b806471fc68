"""Strand-diagram calculus for Thompson's group F.

Split/merge strand diagrams and their reduction groupoid, elementary
forests and weighted generalized diagrams, the cube complex of split
chains on (1,n) diagrams, exact piecewise-linear homeomorphisms of
[0,1], and configuration tuples on the line together with the map that
sends a weighted diagram to the positions of its strands.
"""

from .diagrams import (
    M,
    S,
    SliceWord,
    StrandDiagram,
    canonical_encoding,
    equivalent,
    from_slices,
    identity,
    invert,
    is_reduced,
    multiply,
    reduce,
    to_slices,
)
from .errors import (
    CompositionError,
    DomainError,
    FormatError,
    InvariantViolation,
    SliceWordError,
)
from .forests import (
    EDGE,
    ElementaryForest,
    GeneralizedStrandDiagram,
    WeightedElementaryForest,
    canonicalize_generalized,
    forest_to_slices,
    merge_factor,
    random_gmove,
    split_factor,
)
from .thompson import (
    X0,
    X1,
    FElement,
    PLMap,
    TreePair,
    diagram_to_tree_pair,
    f_inv,
    f_mul,
    from_word,
    pl_compose,
    pl_eq,
    pl_eval,
    to_pl,
    tree_pair_to_diagram,
)
from .cubes import (
    BallGraph,
    ComplexVertex,
    Cube,
    OrbitKey,
    ball,
    cube_from_forest,
    cubes_at,
    elementary_forests_at,
    holonomy,
    left_act,
    leq,
    orbit_key,
    parameterize,
    trivial_vertex,
    upper_bound,
)
from .configspace import (
    canonicalize_cf,
    config_map,
    contract_slice,
    df_section,
    expand,
    is_in_cf,
    is_in_df,
    retract,
    retract_path,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
