"""Doubling the Hilbert space: system A to system B.

Basis ordering of the direct sum: indices ``0..n-1`` hold the first summand
and ``n..2n-1`` the second.  With that ordering

    V = [[0, I], [0, 0]]     V (psi, phi) = (phi, 0)
    j = V^dag - V            j^2 = -1, j^dag = -j
    L = V V^dag - V^dag V    L = diag(I, -I)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ContractError, NotLiftableError
from .reallinear import (
    DEFAULT_TOL,
    RealLinearOp,
    as_matrix,
    as_vector,
    compose,
    dagger,
    max_abs,
    op_norm,
)
from .system import DensityMatrix, Label, QuantumSystem


@dataclass(frozen=True)
class DoubledSpace:
    base_dim: int

    def __post_init__(self):
        if self.base_dim < 1:
            raise ValueError("base_dim must be >= 1")

    @property
    def total_dim(self) -> int:
        return 2 * self.base_dim

    @cached_property
    def v(self) -> np.ndarray:
        n = self.base_dim
        v = np.zeros((2 * n, 2 * n), dtype=complex)
        v[:n, n:] = np.eye(n)
        v.flags.writeable = False
        return v

    @cached_property
    def v_dag(self) -> np.ndarray:
        return dagger(self.v)

    @cached_property
    def j(self) -> np.ndarray:
        return self.v_dag - self.v

    @cached_property
    def l(self) -> np.ndarray:
        return self.v @ self.v_dag - self.v_dag @ self.v

    @property
    def identity(self) -> np.ndarray:
        return np.eye(self.total_dim, dtype=complex)

    def zoo_residuals(self) -> dict[str, float]:
        """Deviations of the defining identities of V, j and L."""
        v, vd, j, l, one = self.v, self.v_dag, self.j, self.l, self.identity
        return {
            "V^2 = 0": max_abs(v @ v),
            "(V^dag)^2 = 0": max_abs(vd @ vd),
            "V V^dag + V^dag V = 1": max_abs(v @ vd + vd @ v - one),
            "V V^dag V = V": max_abs(v @ vd @ v - v),
            "V^dag V V^dag = V^dag": max_abs(vd @ v @ vd - vd),
            "j^2 = -1": max_abs(j @ j + one),
            "j^dag = -j": max_abs(dagger(j) + j),
            "L^2 = 1": max_abs(l @ l - one),
            "L^dag = L": max_abs(dagger(l) - l),
            "Lj = -jL": max_abs(l @ j + j @ l),
        }


def _blockdiag(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    out[:n, :n] = m
    out[n:, n:] = m
    return out


def lift_operator(m):
    """Block-diagonal duplication M^B (psi, phi) = (M psi, M phi).

    Accepts a plain matrix or a RealLinearOp and returns the same kind.
    """
    if isinstance(m, RealLinearOp):
        return RealLinearOp(_blockdiag(m.linear), _blockdiag(m.antilinear))
    return _blockdiag(as_matrix(m, square=True))


def lift_density(rho_a: DensityMatrix) -> DensityMatrix:
    if not isinstance(rho_a, DensityMatrix):
        raise ContractError("lift_density expects a DensityMatrix")
    return DensityMatrix.from_matrix(0.5 * _blockdiag(rho_a.matrix))


def lift_pure(psi) -> np.ndarray:
    """Psi^B = (Psi^A, 0)."""
    psi = as_vector(psi)
    return np.concatenate([psi, np.zeros_like(psi)])


def _as_op(m) -> RealLinearOp:
    return m if isinstance(m, RealLinearOp) else RealLinearOp.from_linear(m)


def lift_violation(m, space: DoubledSpace) -> float:
    """max(||[V, M]||, ||[V^dag, M]||) using real-linear products."""
    m = _as_op(m)
    v = RealLinearOp.from_linear(space.v)
    vd = RealLinearOp.from_linear(space.v_dag)
    return max(
        op_norm(compose(v, m) - compose(m, v)),
        op_norm(compose(vd, m) - compose(m, vd)),
    )


def check_lift_constraint(m, space: DoubledSpace, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    dev = lift_violation(m, space)
    return dev < tol, dev


def unlift(m, space: DoubledSpace, tol: float = DEFAULT_TOL):
    """Recover M^A from a lifted operator by extracting its top-left block."""
    ok, dev = check_lift_constraint(m, space, tol)
    if not ok:
        raise NotLiftableError(f"operator violates the lift constraint by {dev:.3e}")
    n = space.base_dim
    if isinstance(m, RealLinearOp):
        return RealLinearOp(m.linear[:n, :n], m.antilinear[:n, :n])
    return np.array(as_matrix(m)[:n, :n])


def symmetrizers(space: DoubledSpace) -> list[tuple[np.ndarray, np.ndarray]]:
    """The four conjugating pairs (X, X^-1) with X = (V^dag + V)^a j^b."""
    s = space.v_dag + space.v
    j = space.j
    one = space.identity
    out = []
    for a in (0, 1):
        sa = s if a else one
        for b in (0, 1):
            jb, jb_inv = (j, -j) if b else (one, one)
            out.append((sa @ jb, jb_inv @ sa))  # (V^dag + V)^-1 = V^dag + V
    return out


def symmetrize_matrix(m, space: DoubledSpace) -> np.ndarray:
    m = np.asarray(m)
    return 0.25 * sum(x @ m @ x_inv for x, x_inv in symmetrizers(space))


def symmetrize_density(rho1: DensityMatrix, space: DoubledSpace) -> DensityMatrix:
    """rho_2 = 1/4 sum_{a,b} (V^dag+V)^a j^b rho_1 j^-b (V^dag+V)^-a."""
    out = symmetrize_matrix(rho1.matrix, space)
    return DensityMatrix.from_matrix(0.5 * (out + dagger(out)))


def build_system_B(sys_a: QuantumSystem) -> QuantumSystem:
    if sys_a.label is not Label.A:
        raise ContractError(f"build_system_B expects system A, got {sys_a.label.value}")
    h_b = lift_operator(sys_a.hamiltonian)
    return QuantumSystem(
        Label.B,
        h_b,
        h_b,
        tuple(lift_operator(o) for o in sys_a.observables),
        ground_state=lift_pure(sys_a.ground_state),
        tol=sys_a.tol,
    )


def vacuum_pair(sys_b: QuantumSystem, space: DoubledSpace) -> tuple[np.ndarray, np.ndarray]:
    """The two degenerate vacua (Theta, 0) and V^dag (Theta, 0) = (0, Theta)."""
    return sys_b.ground_state, space.v_dag @ sys_b.ground_state
