"""A workbench for order topology on finite and cofinite spaces.

Finite T0 spaces are carried as their specialization posets (the topology
is the Alexandroff one, so nothing is lost); the symbolic cofinite space
is the one supported infinite instance.  On top of these the package
enumerates the classical set families (irreducible closed, compact
saturated, directed closures, Rudin and WD sets), builds Smyth and Hoare
power spaces and the sobrification and well-filtered reflections, and
re-verifies the characterization theorems of the surrounding theory by
brute force, producing witnesses when anything fails.
"""

from .catalog import all_posets, antichain, canonical_key, chain, diamond_poset, lambda_poset, named, random_poset, vee_poset
from .classify import (
    Classification,
    ClassificationVector,
    EQUATIONS,
    EquationProbe,
    FAIL,
    FLAGS,
    IMPLICATIONS,
    NOT_APPLICABLE,
    PASS,
    TheoremReport,
    THEOREMS,
    check_implications,
    classify,
    equational_probe,
    verify_theorems,
)
from .errors import CapExceededError, OrderError, SpaceFileError, UnsupportedOperationError
from .poset import FinPoset, OrderPredicates, bits_of, bounds_and_cut, closures, extremes, mask_of, order_predicates, sorted_masks, subset_key
from .powerspace import (
    OpenFilterReport,
    PowerSpace,
    UnionMapReport,
    eta_map,
    hoare,
    irr_open_filter,
    open_filters_and_phi,
    power_order,
    smyth,
    smyth_irreducible,
    union_map_check,
    xi_map,
)
from .reflect import (
    BulkFactorization,
    CofiniteReflection,
    FactorizationReport,
    FunctorAction,
    ProductReflectionReport,
    Reflection,
    diamond_lattice_check,
    factorize,
    factorize_all,
    functor_action,
    homeomorphic,
    product_reflection_check,
    sobrification,
    wf_reflection,
)
from .rudin import (
    FilteredFamily,
    M_and_m,
    RudinWitness,
    WD_NO,
    WD_UNKNOWN,
    WD_YES,
    WD_YES_BY_INCLUSION,
    WdReport,
    is_rudin_set,
    rudin_family,
    topological_rudin_minimize,
    wd_family,
    wd_status,
)
from .space import (
    Caps,
    CofiniteSpace,
    CofiniteTails,
    DEFAULT_CAPS,
    Families,
    FinOrCofinSet,
    FiniteSpace,
    ProductSpace,
    add_top,
    as_space,
    continuous_maps,
    enumerate_families,
    filtered_subfamilies,
    generic_points,
    image_mask,
    is_filtered_family,
    is_irreducible,
    is_sober_finite,
    is_supercompact,
    min_of_compact,
    preimage_mask,
    product,
    subspace_closed,
    topology_ops,
)

__all__ = [name for name in dir() if not name.startswith("_")]
