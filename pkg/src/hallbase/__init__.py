"""Exact base-size computations for subgroup actions and symbolic bounds for the exceptional families."""

from .base import BaseCertificate, base_size, q_exact, regular_orbit_count, verify_certificate
from .cosets import CosetSpace, coset_space, fpr, fpr_via_class
from .errors import (
    CapExceeded,
    HallBaseError,
    NotEventuallyPositive,
    NotHall,
    NotSubgroup,
    ParseError,
    UnknownFamily,
    WorkBudgetExceeded,
)
from .perm import (
    Permutation,
    PermutationGroup,
    PrimeSet,
    SubgroupHandle,
    core,
    fitting_subgroup,
    generate_elements,
    is_hall,
    o_p,
    subgroup,
    sylow_subgroup,
)
from .probability import class_mass_bound, prime_order_profile, q_hat

__version__ = "0.1.0"
