"""Endomorphism monoids of undirected cycle graphs.

Five monoids of vertex maps of the n-cycle, ordered by containment: the
automorphism group, strict endomorphisms, endomorphisms, strong weak
endomorphisms, and weak endomorphisms.  The package enumerates them, counts
them in closed form, decides membership and regularity, analyzes Green's
relations R, L and D, and computes minimum generating sets.
"""

from .core import (
    Arc,
    ContextError,
    CycleContext,
    CycleEndoError,
    DomainError,
    InvariantViolation,
    KernelPartition,
    MonoidKind,
    ResourceCapError,
    Transformation,
    compose,
    image,
    interval_image,
    is_member,
    kernel,
    kernel_contains,
    normalize_image,
    rank,
)
from .dihedral import (
    DihedralElement,
    dihedral_inverse,
    dihedral_product,
    enumerate_dihedral,
    recognize,
)
from .enumeration import (
    StepSequence,
    cardinality,
    closure,
    enumerate_images,
    enumerate_monoid,
    resolve_cap,
)
from .green import (
    FullSublistWitness,
    LWitness,
    d_classes,
    d_related,
    factor,
    full_sublist_witness,
    is_regular,
    l_classes,
    l_oracle,
    l_related,
    r_classes,
    r_related,
    regular_oracle,
    regular_partner,
)
from .ranks import (
    RankResult,
    SimClass,
    algorithm1,
    monoid_rank,
    preceq,
    r_transversal,
    sim_canonicalize,
    verify_generating_set,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ContextError",
    "CycleContext",
    "CycleEndoError",
    "DihedralElement",
    "DomainError",
    "FullSublistWitness",
    "InvariantViolation",
    "KernelPartition",
    "LWitness",
    "MonoidKind",
    "RankResult",
    "ResourceCapError",
    "SimClass",
    "StepSequence",
    "Transformation",
    "algorithm1",
    "cardinality",
    "closure",
    "compose",
    "d_classes",
    "d_related",
    "dihedral_inverse",
    "dihedral_product",
    "enumerate_dihedral",
    "enumerate_images",
    "enumerate_monoid",
    "factor",
    "full_sublist_witness",
    "image",
    "interval_image",
    "is_member",
    "is_regular",
    "kernel",
    "kernel_contains",
    "l_classes",
    "l_oracle",
    "l_related",
    "monoid_rank",
    "normalize_image",
    "preceq",
    "r_classes",
    "r_related",
    "r_transversal",
    "rank",
    "recognize",
    "regular_oracle",
    "regular_partner",
    "resolve_cap",
    "sim_canonicalize",
    "verify_generating_set",
]
