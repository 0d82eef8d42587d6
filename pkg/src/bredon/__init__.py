"""Bredon homology of finite simplicial G-sets with exact arithmetic.

The main entry points:

>>> from bredon import builtin_group, builtin_space, builtin_system, bredon_homology
>>> G = builtin_group("Z2")
>>> K = builtin_space("circle_antipodal", G)
>>> print(bredon_homology(K, builtin_system("constant", G)))
H_0 = Z
H_1 = Z
"""

from .coefficients import (
    BUILTIN_SYSTEMS,
    HOMOLOGICAL_BUILTINS,
    CoefficientSystem,
    MackeyFunctor,
    builtin_system,
    constant_system,
    fixed_point_mackey,
    from_generators,
    is_homological,
    linearization_system,
)
from .errors import BredonError
from .fgroups import (
    FElement,
    FGElement,
    alpha,
    alpha_inverse,
    beta,
    gamma,
    iota,
    pushforward,
    pushforward_G,
)
from .groups import (
    Group,
    Subgroup,
    builtin_group,
    cyclic_group,
    from_cayley_table,
    symmetric_group,
)
from .gsets import GMap, GSet, PointedGMap, PointedGSet
from .homology import (
    ChainComplex,
    HomologyResult,
    bredon_homology,
    chain_complex,
    homology,
    induced_map,
    unreduced_homology,
)
from .linalg import smith_normal_form
from .orbits import OrbitCategory, OrbitMorphism
from .rings import GF, QQ, ZZ, Ring, parse_ring
from .simplicial import (
    FormalSimplex,
    GComplex,
    SimplicialGMap,
    SimplicialGSet,
    barycentric_subdivide,
    fixed_subcomplex,
    from_ordered_complex,
    orbit_quotient,
    wedge,
)
from .spaces import BUILTIN_SPACES
from .spaces import builtin as builtin_space
from .transfer import (
    GCovering,
    SimplicialCovering,
    check_axioms,
    transfer,
    transfer_chain_map,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_SPACES",
    "BUILTIN_SYSTEMS",
    "GF",
    "HOMOLOGICAL_BUILTINS",
    "QQ",
    "ZZ",
    "BredonError",
    "ChainComplex",
    "CoefficientSystem",
    "FElement",
    "FGElement",
    "FormalSimplex",
    "GComplex",
    "GCovering",
    "GMap",
    "GSet",
    "Group",
    "HomologyResult",
    "MackeyFunctor",
    "OrbitCategory",
    "OrbitMorphism",
    "PointedGMap",
    "PointedGSet",
    "Ring",
    "SimplicialCovering",
    "SimplicialGMap",
    "SimplicialGSet",
    "Subgroup",
    "alpha",
    "alpha_inverse",
    "barycentric_subdivide",
    "beta",
    "bredon_homology",
    "builtin_group",
    "builtin_space",
    "builtin_system",
    "chain_complex",
    "check_axioms",
    "constant_system",
    "cyclic_group",
    "fixed_point_mackey",
    "fixed_subcomplex",
    "from_cayley_table",
    "from_generators",
    "from_ordered_complex",
    "gamma",
    "homology",
    "induced_map",
    "iota",
    "is_homological",
    "linearization_system",
    "orbit_quotient",
    "parse_ring",
    "pushforward",
    "pushforward_G",
    "smith_normal_form",
    "symmetric_group",
    "transfer",
    "transfer_chain_map",
    "unreduced_homology",
    "wedge",
]
