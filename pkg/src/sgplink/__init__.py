"""Linkage and duality of relative ideals over numerical semigroups."""

from .core import (
    NumericalSemigroup,
    apery_set,
    contains,
    is_symmetric,
    semigroup_from_generators,
    semigroup_to_json,
)
from .ideals import (
    IdealGenerators,
    RelativeIdeal,
    colon,
    equals,
    format_ideal,
    ideal_contains,
    ideal_from_generators,
    ideal_to_json,
    isomorphic,
    minimal_ideal_generators,
    normalize,
    semigroup_as_ideal,
    translate,
)
from .linkage import (
    LiaisonClassResult,
    canonical_ideal,
    canonical_liaison_class,
    is_directly_linked,
    is_k_reflexive,
    is_s_reflexive,
    k_closure,
    k_dual,
    liaison_to_json,
    principal_liaison_class,
    s_biclosure,
    s_dual,
    shifted_canonical,
    verify_chain,
)
from .orbits import (
    ClassificationReport,
    OrbitGraph,
    classify,
    enumerate_normalized_ideals,
    mixed_orbit,
    orbit_to_dot,
    orbit_to_json,
    report_to_json,
    report_to_text,
)

__version__ = "0.1.0"
