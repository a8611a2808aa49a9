"""System B to system C: interchange i and j through the involution U.

    U = 1/2 (1 - ij + KL + ijKL)

is real-linear with linear part (1 - ij)/2 and antilinear part (1 + ij) L / 2.
Conjugation by U maps i <-> j and K <-> L; lifted observables become linear
matrices that commute with j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .doubling import DoubledSpace, check_lift_constraint, lift_operator
from .errors import ContractError, ShapeError
from .reallinear import (
    DEFAULT_TOL,
    RealLinearOp,
    adjoint,
    apply,
    as_matrix,
    as_vector,
    compose,
    dagger,
    inner,
    is_self_adjoint,
    max_abs,
)
from .system import DensityMatrix, Label, QuantumSystem


@dataclass(frozen=True, eq=False)
class UTransform:
    space: DoubledSpace
    u: RealLinearOp

    @property
    def dim(self) -> int:
        return self.space.total_dim

    def basis_gram(self) -> np.ndarray:
        """Complex Gram matrix <U e_m, U e_n> of the computational basis images."""
        images = np.column_stack([apply(self.u, e) for e in np.eye(self.dim)])
        return dagger(images) @ images

    def real_gram_deviation(self) -> float:
        """max |Re<U e_m, U e_n> - delta_mn|.

        U is orthogonal for the real inner product only; the imaginary part
        of the Gram matrix does not vanish (U e_2 = i U e_1 for n = 1).
        """
        return max_abs(self.basis_gram().real - np.eye(self.dim))


def build_U(space: DoubledSpace) -> UTransform:
    one = space.identity
    ij = 1j * space.j
    return UTransform(space, RealLinearOp(0.5 * (one - ij), 0.5 * (one + ij) @ space.l))


def special_ops(space: DoubledSpace) -> dict[str, RealLinearOp]:
    """The four units i, j, K, L on the doubled space as real-linear operators."""
    n2 = space.total_dim
    return {
        "i": RealLinearOp.scalar(1j, n2),
        "j": RealLinearOp.from_linear(space.j),
        "K": RealLinearOp.conjugation(n2),
        "L": RealLinearOp.from_linear(space.l),
    }


def transform_op(u: UTransform, m) -> RealLinearOp:
    """M -> U M U^-1 (U^-1 = U)."""
    if not isinstance(m, RealLinearOp):
        m = RealLinearOp.from_linear(m)
    if m.dim != u.dim:
        raise ShapeError(f"operator dim {m.dim} does not match U dim {u.dim}")
    return compose(u.u, compose(m, u.u))


def transform_commuting_shortcut(space: DoubledSpace, m: RealLinearOp) -> RealLinearOp:
    """(1-ij)/2 M + (1+ij)/2 KL M KL, valid for M commuting with ij."""
    n2 = space.total_dim
    p_minus = RealLinearOp.from_linear(0.5 * (space.identity - 1j * space.j))
    p_plus = RealLinearOp.from_linear(0.5 * (space.identity + 1j * space.j))
    kl = compose(RealLinearOp.conjugation(n2), RealLinearOp.from_linear(space.l))
    return compose(p_minus, m) + compose(p_plus, compose(kl, compose(m, kl)))


def _linear_result(op: RealLinearOp, tol: float, what: str) -> np.ndarray:
    if not op.is_linear(tol):
        raise ContractError(f"{what} is not linear (antilinear part {max_abs(op.antilinear):.3e})")
    return np.array(op.linear)


def build_observable_C(u: UTransform, o_b, tol: float = DEFAULT_TOL) -> np.ndarray:
    """O^C = U O^B U^-1, returned as an ordinary matrix."""
    o_b = as_matrix(o_b, square=True)
    if not is_self_adjoint(o_b, tol):
        raise ContractError("B observable must be self-adjoint")
    ok, dev = check_lift_constraint(o_b, u.space, tol)
    if not ok:
        raise ContractError(f"not a B observable: lift constraint violated by {dev:.3e}")
    out = _linear_result(transform_op(u, o_b), tol, "transformed observable")
    return 0.5 * (out + dagger(out))


def re_im_form(o_b, space: DoubledSpace) -> np.ndarray:
    """Re O^B + j Im O^B (componentwise real and imaginary parts)."""
    o_b = np.asarray(o_b)
    return o_b.real + space.j @ o_b.imag


@dataclass(frozen=True, eq=False)
class SystemCBundle:
    system: QuantumSystem
    hamiltonian_c: np.ndarray
    energy_observable_c: np.ndarray
    j_matrix: np.ndarray
    u: UTransform

    @property
    def grading(self) -> np.ndarray:
        """The factor -ij relating Hamiltonian and energy observable."""
        return -1j * self.j_matrix


def build_system_C(sys_b: QuantumSystem, space: DoubledSpace, tol: float | None = None) -> SystemCBundle:
    """H^C = -ij U H^B U^-1; observables O^C = U O^B U^-1."""
    tol = sys_b.tol if tol is None else tol
    if sys_b.label is not Label.B:
        raise ContractError(f"build_system_C expects system B, got {sys_b.label.value}")
    if sys_b.dim != space.total_dim:
        raise ShapeError("system B dimension does not match the doubled space")
    u = build_U(space)
    energy_c = build_observable_C(u, sys_b.energy_observable, tol)
    h_c = -1j * space.j @ energy_c
    h_c = 0.5 * (h_c + dagger(h_c))
    observables = tuple(build_observable_C(u, o, tol) for o in sys_b.observables)
    system = QuantumSystem(
        Label.C,
        h_c,
        energy_c,
        observables,
        ground_state=map_state_C(u, sys_b.ground_state),
        tol=tol,
    )
    return SystemCBundle(system, h_c, energy_c, np.array(space.j), u)


def map_state_C(u: UTransform, psi_b) -> np.ndarray:
    psi_b = as_vector(psi_b)
    if psi_b.shape[0] != u.dim:
        raise ShapeError(f"state dim {psi_b.shape[0]} does not match U dim {u.dim}")
    return apply(u.u, psi_b)


def map_ensemble_C(u: UTransform, probabilities, vectors) -> np.ndarray:
    """sum_n p_n (U psi_n)(U psi_n)^dag for explicit ensemble columns."""
    images = np.column_stack([map_state_C(u, v) for v in np.asarray(vectors).T])
    return (images * np.asarray(probabilities)) @ dagger(images)


def map_density_C(u: UTransform, rho_b: DensityMatrix) -> DensityMatrix:
    """rho^C from the canonical eigendecomposition of rho^B.

    This is not U rho^B U^dag.  For degenerate spectra the result depends on
    the chosen eigenbasis; every choice gives the same predictions.
    """
    if rho_b.dim != u.dim:
        raise ShapeError("density dim does not match U dim")
    m = map_ensemble_C(u, rho_b.probabilities, rho_b.vectors)
    return DensityMatrix.from_matrix(0.5 * (m + dagger(m)))


def real_part_density(probabilities, vectors) -> RealLinearOp:
    """rho_R with rho_R phi = sum_n p_n psi_n Re(psi_n^dag phi)."""
    w = np.asarray(vectors, dtype=complex)
    p = np.asarray(probabilities, dtype=float)
    return RealLinearOp(0.5 * (w * p) @ dagger(w), 0.5 * (w * p) @ w.T)


def map_density_via_real_part(u: UTransform, probabilities, vectors) -> np.ndarray:
    """rho^C = U rho_R U^dag - i U rho_R U^dag i, i.e. twice the linear part."""
    y = compose(u.u, compose(real_part_density(probabilities, vectors), adjoint(u.u)))
    return 2 * np.array(y.linear)


def inner_C(u: UTransform, psi_b, phi_b) -> complex:
    return inner(map_state_C(u, psi_b), map_state_C(u, phi_b))


def lift_and_transform(u: UTransform, m_a) -> RealLinearOp:
    """U M^B U^-1 for an operator given on the base space."""
    return transform_op(u, lift_operator(m_a if isinstance(m_a, RealLinearOp) else RealLinearOp.from_linear(m_a)))
