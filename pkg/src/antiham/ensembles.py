"""Seeded random instances: Hermitian matrices, density matrices, systems, operators."""

from __future__ import annotations

import numpy as np

from .reallinear import RealLinearOp, dagger
from .system import DensityMatrix, QuantumSystem


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_vector(dim: int, seed=None) -> np.ndarray:
    return complex_gaussian(_rng(seed), dim)


def random_unit_vector(dim: int, seed=None) -> np.ndarray:
    v = random_vector(dim, seed)
    return v / np.linalg.norm(v)


def random_hermitian(dim: int, seed=None, degenerate: bool = False) -> np.ndarray:
    """(G + G^dag)/2 with complex Gaussian G.

    With ``degenerate`` the lowest eigenvalue is repeated once (dim >= 2).
    """
    rng = _rng(seed)
    g = complex_gaussian(rng, (dim, dim))
    h = 0.5 * (g + dagger(g))
    if degenerate and dim >= 2:
        values, vectors = np.linalg.eigh(h)
        values[1] = values[0]
        h = (vectors * values) @ dagger(vectors)
        h = 0.5 * (h + dagger(h))
    return h


def random_real_symmetric(dim: int, seed=None) -> np.ndarray:
    g = _rng(seed).standard_normal((dim, dim))
    return 0.5 * (g + g.T).astype(complex)


def random_unitary(dim: int, seed=None) -> np.ndarray:
    q, r = np.linalg.qr(complex_gaussian(_rng(seed), (dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_reallinear(dim: int, seed=None) -> RealLinearOp:
    rng = _rng(seed)
    return RealLinearOp(complex_gaussian(rng, (dim, dim)), complex_gaussian(rng, (dim, dim)))


def random_antisymmetric_antilinear(dim: int, seed=None) -> RealLinearOp:
    """Antilinear operator whose matrix satisfies A^T = -A (admissible term)."""
    g = complex_gaussian(_rng(seed), (dim, dim))
    return RealLinearOp.from_antilinear(0.5 * (g - g.T))


def random_symmetric_antilinear(dim: int, seed=None) -> RealLinearOp:
    """Antilinear operator with A^T = A, A != 0 (inadmissible term)."""
    g = complex_gaussian(_rng(seed), (dim, dim))
    return RealLinearOp.from_antilinear(0.5 * (g + g.T))


def gen_random_density(dim: int, seed=None, rank: int | None = None) -> DensityMatrix:
    """W W^dag / Tr(W W^dag) with complex Gaussian W (full rank unless ``rank``)."""
    rng = _rng(seed)
    w = complex_gaussian(rng, (dim, rank or dim))
    rho = w @ dagger(w)
    rho = rho / np.trace(rho).real
    return DensityMatrix.from_matrix(0.5 * (rho + dagger(rho)))


def gen_random_system_A(dim: int, seed=None, degenerate: bool = False, n_observables: int = 2) -> QuantumSystem:
    if dim < 1:
        raise ValueError("dim must be >= 1")
    rng = _rng(seed)
    h = random_hermitian(dim, rng, degenerate)
    obs = tuple(random_hermitian(dim, rng, degenerate) for _ in range(n_observables))
    return QuantumSystem.system_a(h, obs)
