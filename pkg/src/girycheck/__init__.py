"""Executable mathematics for super convex spaces and the probability
monad at desk scale: exact-rational carriers, certified countable sums,
finite measurable spaces, barycenters, and a seeded law harness.
"""

from .numerics import (
    Enclosure,
    ExtReal,
    INF,
    PartitionOfOne,
    Undecided,
    UnsupportedRepresentation,
    binary_combine,
    compose_partitions,
    countable_combine,
    dirac_partition,
    ext_eq,
    random_partition,
)
from .scvx import (
    ArityMismatch,
    CarrierViolation,
    CountablyAffineMap,
    FunctionSpace,
    IntervalSpace,
    ProductSpace,
    SuperConvexSpace,
    affine_map,
    check_axiom1,
    check_axiom2,
    check_morphism,
    constant_map,
    identity_map,
    make_interval_space,
    make_product_space,
)
from .meas import (
    FiniteMeasurableSpace,
    InfiniteCarrier,
    MeasurableMap,
    generate_sigma_algebra,
    indicator,
    is_measurable,
    sigma_functor,
)
from .giry import (
    BaseMismatch,
    GeneralizedPoint,
    GirySpace,
    LazyMeasure,
    NotAMeasure,
    ProbMeasure,
    barycenter,
    dirac,
    integrate,
    mixture,
    monad_mu,
    phi,
    phi_inverse,
    pushforward,
)
from .reports import LawReport

__version__ = "0.1.0"
