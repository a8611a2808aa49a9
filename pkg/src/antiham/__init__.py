"""Antilinear Hamiltonian terms through a doubled Hilbert space.

System A is any finite-dimensional quantum system.  System B doubles its
Hilbert space with a hidden twofold degeneracy; system C is system B after the
real-linear involution U that swaps multiplication by i with the operator j.
Antilinear terms that cannot enter the Hamiltonian of A become ordinary
self-adjoint terms in C.
"""

from .applications import (
    build_time_reversal_C,
    check_generator_condition,
    evolve_reallinear,
    inject_term_C,
    realify,
    validate_antilinear_condition,
)
from .ctransform import (
    SystemCBundle,
    UTransform,
    build_observable_C,
    build_system_C,
    build_U,
    map_density_C,
    map_state_C,
    transform_op,
)
from .doubling import (
    DoubledSpace,
    build_system_B,
    check_lift_constraint,
    lift_density,
    lift_operator,
    lift_pure,
    symmetrize_density,
    unlift,
)
from .ensembles import gen_random_density, gen_random_system_A
from .errors import (
    AntihamError,
    ConditionViolationError,
    ContractError,
    NotLiftableError,
    ShapeError,
    ZeroProbabilityError,
)
from .harness import CampaignConfig, PropertyReport, run_campaign
from .reallinear import RealLinearOp, adjoint, apply, compose, real_trace, split
from .system import (
    DensityMatrix,
    QuantumSystem,
    SpectralDecomposition,
    collapse,
    evolve_density,
    evolve_state,
    expectation,
    measure_probabilities,
    spectral_decompose,
)

__version__ = "0.1.0"
