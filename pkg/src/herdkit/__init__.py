"""Exact verification of herds, corings, coherds and Hopf-Galois co-objects."""

from .algebra import (
    AlgebraMorphism, FinDimAlgebra, ground_field, group_algebra, identity_morphism, matrix_algebra,
    unit_morphism, validate_algebra,
)
from .bimodule import Bimodule, BimoduleMap, TensorProduct, tensor, tensor_maps
from .coherd import (
    CoherdData, coherd_from_tame_herd, compare_rings, compute_h_maps, reconstruct_rings, validate_coherd,
)
from .compose import (
    SmashData, check_torsor_compatibility, compose_duals, compose_herds, composition_report, extract_sigma,
)
from .coring import (
    Comodule, Coring, Entwining, base_coring_C, base_coring_D, canonical_map, check_theta_iso,
    entwining_from_herd, left_entwining_from_herd, shepherd_from_galois,
)
from .errors import HerdkitError, InconsistencyError, InputError, NotBalancedError, PreconditionError
from .herd import (
    FormalDualPair, HerdData, check_progenerator, check_tame, comatrix_herd, coring_from_herd_left,
    coring_from_herd_right, trivial_herd, validate_formal_dual, validate_herd,
)
from .hopf import (
    HopfAlgebra, ModuleCoalgebra, check_composition_theorem, check_equaliser_coalgebra, compose_coobjects,
    find_coobject_iso, group_hopf, herd_from_coobject, quadratic_coobject, smash_sigma, trivial_coobject,
)
from .linalg import Field, Matrix
from .report import Check, Report
from .setherd import (
    FiniteHerd, affine_herd, basepoint_report, find_group_isomorphism, reconstruct_group, validate_set_herd,
)

__version__ = "0.1.0"

__all__ = [
    "affine_herd",
    "AlgebraMorphism",
    "base_coring_C",
    "base_coring_D",
    "basepoint_report",
    "Bimodule",
    "BimoduleMap",
    "canonical_map",
    "Check",
    "check_composition_theorem",
    "check_equaliser_coalgebra",
    "check_progenerator",
    "check_tame",
    "check_theta_iso",
    "check_torsor_compatibility",
    "coherd_from_tame_herd",
    "CoherdData",
    "comatrix_herd",
    "Comodule",
    "compare_rings",
    "compose_coobjects",
    "compose_duals",
    "compose_herds",
    "composition_report",
    "compute_h_maps",
    "Coring",
    "coring_from_herd_left",
    "coring_from_herd_right",
    "Entwining",
    "entwining_from_herd",
    "extract_sigma",
    "Field",
    "find_coobject_iso",
    "find_group_isomorphism",
    "FinDimAlgebra",
    "FiniteHerd",
    "FormalDualPair",
    "ground_field",
    "group_algebra",
    "group_hopf",
    "herd_from_coobject",
    "HerdData",
    "HerdkitError",
    "HopfAlgebra",
    "identity_morphism",
    "InconsistencyError",
    "InputError",
    "left_entwining_from_herd",
    "Matrix",
    "matrix_algebra",
    "ModuleCoalgebra",
    "NotBalancedError",
    "PreconditionError",
    "quadratic_coobject",
    "reconstruct_group",
    "reconstruct_rings",
    "Report",
    "shepherd_from_galois",
    "smash_sigma",
    "SmashData",
    "tensor",
    "tensor_maps",
    "TensorProduct",
    "trivial_coobject",
    "trivial_herd",
    "unit_morphism",
    "validate_algebra",
    "validate_coherd",
    "validate_formal_dual",
    "validate_herd",
    "validate_set_herd",
]
