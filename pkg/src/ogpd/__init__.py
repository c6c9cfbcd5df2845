"""Finite ordered groupoids: validation, functors, lifting, quotients, enlargements and cocylinders."""

from .core import (
    OrderedGroupoid, Poset, ValidationReport, Violation, components, corestriction, is_inductive,
    meet, pi0_quotient, product, pseudoproduct, restriction, star, trivial_groupoid, validate_ogpd,
)
from .errors import (
    AxiomViolation, BudgetExceeded, InvariantBreach, OGError, PreconditionError, StructureError,
)
from .search import Budget
from .functor import (
    MappingGroupoid, NaturalTransformation, OrderedFunctor, StarClass, curry, enumerate_functors,
    find_isomorphism, identity_functor, inclusion, is_covering, is_embedding, is_fibration,
    is_immersion, is_isomorphism, kernel, mapping_groupoid, post_compose, star_class, uncurry,
    validate_functor,
)
from .homotopy import HomotopySquare, certified_lift, cylinder, find_lift, has_path_lifting, make_homotopy
from .quotient import Factorization, QuotientGroupoid, factorize, is_normal, quotient
from .action import GroupoidAction, SemidirectProduct, covering_to_action, semidirect_product
from .enlargement import (
    EnlargementWitness, TensorPoset, is_enlargement, maximum_enlargement, tensor_poset,
    triple_factorization, universal_map,
)
from .cocylinder import derived_groupoid, fibration_theorem_pipeline, gamma_iso, loops_iso, mapping_cocylinder
from .builders import fixtures, interval, random_instance
from .fileformat import Document, FileFormatError, parse, serialize
from .dot import emit_dot

__version__ = "0.1.0"
