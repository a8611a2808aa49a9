"""Antilinear Hamiltonian terms, realified dynamics and linear time reversal."""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .ctransform import SystemCBundle, lift_and_transform, transform_op
from .system import propagator
from .errors import ConditionViolationError, ContractError, ShapeError
from .reallinear import (
    DEFAULT_TOL,
    RealLinearOp,
    adjoint,
    as_matrix,
    as_vector,
    compose,
    is_self_adjoint,
    max_abs,
    op_distance,
)


def unitarity_violation(g: RealLinearOp) -> float:
    """Deviation of (i g)^dag from -i g.

    Zero exactly when exp(-i t g) and 1 + i eps g preserve norms to first order.
    """
    i = RealLinearOp.scalar(1j, g.dim)
    ig = compose(i, g)
    return op_distance(adjoint(ig), -ig)


def validate_antilinear_condition(h2: RealLinearOp, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    dev = unitarity_violation(h2)
    return dev <= tol, dev


def realify(m: RealLinearOp) -> np.ndarray:
    """Real 2n x 2n matrix acting on (Re psi; Im psi) as ``m`` acts on psi."""
    b, a = m.linear, m.antilinear
    return np.block([
        [b.real + a.real, a.imag - b.imag],
        [b.imag + a.imag, b.real - a.real],
    ])


def encode(v) -> np.ndarray:
    v = as_vector(v)
    return np.concatenate([v.real, v.imag])


def derealify(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    n = x.shape[0] // 2
    return x[:n] + 1j * x[n:]


def evolve_reallinear(h, h2: RealLinearOp, psi0, t: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Solve d/dt psi = -i (H + H2) psi with the real matrix exponential."""
    h = as_matrix(h, square=True)
    if not is_self_adjoint(h, tol):
        raise ContractError("H must be self-adjoint")
    psi0 = as_vector(psi0)
    if h.shape[0] != h2.dim or psi0.shape[0] != h2.dim:
        raise ShapeError("H, H2 and psi0 must share a dimension")
    gen = compose(RealLinearOp.scalar(-1j, h2.dim), RealLinearOp.from_linear(h) + h2)
    return derealify(scipy.linalg.expm(t * realify(gen)) @ encode(psi0))


def injected_term(bundle: SystemCBundle, h2_a: RealLinearOp, tol: float = DEFAULT_TOL) -> np.ndarray:
    """-ij U H2^B U^-1 without the admissibility check."""
    n = bundle.u.space.base_dim
    if h2_a.dim != n:
        raise ShapeError(f"term dim {h2_a.dim} does not match base dim {n}")
    moved = lift_and_transform(bundle.u, h2_a)
    if not moved.is_linear(tol):
        raise ContractError("transformed term is not linear")
    return -1j * bundle.j_matrix @ moved.linear


def inject_term_C(bundle: SystemCBundle, h2_a: RealLinearOp, tol: float = DEFAULT_TOL) -> np.ndarray:
    """H2^C = -ij U H2^B U^-1, a linear self-adjoint matrix for admissible terms."""
    ok, dev = validate_antilinear_condition(h2_a, tol)
    if not ok:
        raise ConditionViolationError(f"(i H2)^dag != -i H2 (deviation {dev:.3e}); H2^C would not be self-adjoint")
    return injected_term(bundle, h2_a, tol)


def check_antiunitary(t_a: RealLinearOp, h_a, tol: float = DEFAULT_TOL) -> dict[str, float]:
    h = RealLinearOp.from_linear(h_a)
    return {
        "antilinear": max_abs(t_a.linear),
        "T^dag T = 1": op_distance(compose(adjoint(t_a), t_a), RealLinearOp.identity(t_a.dim)),
        "[T, H] = 0": op_distance(compose(t_a, h), compose(h, t_a)),
    }


def build_time_reversal_C(bundle: SystemCBundle, t_a: RealLinearOp, h_a=None, tol: float = DEFAULT_TOL) -> np.ndarray:
    """T^C = U T^B U^-1; linear and unitary for antiunitary T^A commuting with H^A.

    ``h_a`` defaults to the top-left block of the bundle's energy observable
    mapped back, which for a C built from a lifted A is H^A itself.
    """
    if h_a is None:
        n = bundle.u.space.base_dim
        h_a = _recover_h_a(bundle, n)
    bad = {k: v for k, v in check_antiunitary(t_a, h_a, tol).items() if v > tol}
    if bad:
        raise ContractError(f"time reversal preconditions violated: {bad}")
    moved = lift_and_transform(bundle.u, t_a)
    if not moved.is_linear(tol):
        raise ContractError("T^C is not linear")
    return np.array(moved.linear)


def _recover_h_a(bundle: SystemCBundle, n: int) -> np.ndarray:
    back = transform_op(bundle.u, bundle.energy_observable_c)
    return np.array(back.linear[:n, :n])


def check_generator_condition(g: RealLinearOp, epsilon: float, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Admissibility of a real-linear symmetry generator.

    Returns the verdict on (i g)^dag = -i g and the residual
    ||(1 + i eps g)^dag (1 + i eps g) - 1||, which is O(eps^2) when it holds.
    """
    one = RealLinearOp.identity(g.dim)
    x = one + compose(RealLinearOp.scalar(1j * epsilon, g.dim), g)
    residual = op_distance(compose(adjoint(x), x), one)
    return unitarity_violation(g) <= tol, residual


def reversed_evolution(h_c, psi, t: float) -> np.ndarray:
    """Solution of d/dt psi = +i H psi."""
    return propagator(h_c, -t) @ as_vector(psi)

