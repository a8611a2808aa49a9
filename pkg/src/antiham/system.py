"""Quantum systems as data, plus measurement and unitary dynamics.

Shared by systems A, B and C: spectral decomposition into orthogonal
projectors, Born probabilities Tr(rho E_n), collapse, Schrodinger and von
Neumann evolution under a time-independent Hamiltonian.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import ContractError, ShapeError, ZeroProbabilityError
from .reallinear import DEFAULT_TOL, as_matrix, as_vector, dagger, is_self_adjoint, max_abs

COLLAPSE_FLOOR = 1e-12


class Label(str, Enum):
    A = "A"
    B = "B"
    C = "C"


def default_cluster_tol(o: np.ndarray) -> float:
    return 1e-8 * (1.0 + max_abs(o))


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.flags.writeable = False
    return a


def _require_self_adjoint(o: np.ndarray, tol: float, what: str = "operator") -> None:
    if not is_self_adjoint(o, tol):
        raise ContractError(f"{what} is not self-adjoint (deviation {max_abs(o - dagger(o)):.3e})")


def _cluster(values: np.ndarray, tol: float) -> list[list[int]]:
    """Group indices of ascending ``values`` whose consecutive gaps are <= tol."""
    groups: list[list[int]] = []
    for k, lam in enumerate(values):
        if groups and lam - values[groups[-1][-1]] <= tol:
            groups[-1].append(k)
        else:
            groups.append([k])
    return groups


def canonical_phase(vectors: np.ndarray) -> np.ndarray:
    """Make the first largest-modulus component of each column real positive."""
    out = np.array(vectors, dtype=complex)
    for k in range(out.shape[1]):
        col = out[:, k]
        idx = _pivot(col)
        out[:, k] = col * (np.conj(col[idx]) / abs(col[idx]))
    return out


def _pivot(col: np.ndarray) -> int:
    mags = np.abs(col)
    return int(np.argmax(mags >= mags.max() * (1 - 1e-12)))


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct (clustered) eigenvalues with their orthogonal projectors."""

    eigenvalues: tuple[float, ...]
    projectors: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @property
    def ranks(self) -> list[int]:
        return [int(round(np.trace(e).real)) for e in self.projectors]

    def reconstruct(self) -> np.ndarray:
        return sum(lam * e for lam, e in zip(self.eigenvalues, self.projectors))


def eigh_clustered(o, cluster_tol: float | None = None, tol: float = DEFAULT_TOL):
    """Hermitian eigendecomposition with eigenvalue clusters.

    Returns ``(values, vectors, groups)``: ascending eigenvalues, orthonormal
    eigenvector columns and the index groups of each cluster.
    """
    o = as_matrix(o, square=True)
    _require_self_adjoint(o, tol)
    herm = 0.5 * (o + dagger(o))
    values, vectors = np.linalg.eigh(herm)
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(o)
    return values, vectors, _cluster(values, cluster_tol)


def spectral_decompose(o, cluster_tol: float | None = None, tol: float = DEFAULT_TOL) -> SpectralDecomposition:
    values, vectors, groups = eigh_clustered(o, cluster_tol, tol)
    eigenvalues, projectors = [], []
    for g in groups:
        w = vectors[:, g]
        eigenvalues.append(float(np.mean(values[g])))
        projectors.append(_freeze(w @ dagger(w)))
    return SpectralDecomposition(tuple(eigenvalues), tuple(projectors))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Unit-trace positive semidefinite self-adjoint matrix.

    ``probabilities`` and ``vectors`` (columns) hold the canonical
    eigendecomposition computed once at construction: ascending eigenvalues,
    each eigenvector phased so that its first largest-modulus entry is real
    positive, and degenerate clusters ordered by that entry's index.
    """

    matrix: np.ndarray
    probabilities: np.ndarray = field(repr=False)
    vectors: np.ndarray = field(repr=False)

    @classmethod
    def from_matrix(cls, m, tol: float = DEFAULT_TOL) -> DensityMatrix:
        m = as_matrix(m, square=True)
        _require_self_adjoint(m, tol, "density matrix")
        tr = np.trace(m)
        if abs(tr - 1) > tol:
            raise ContractError(f"density matrix trace is {tr:.12g}, expected 1")
        values, vectors, groups = eigh_clustered(m, tol=tol)
        if values[0] < -tol:
            raise ContractError(f"density matrix has negative eigenvalue {values[0]:.3e}")
        vectors = canonical_phase(vectors)
        order = []
        for g in groups:
            order.extend(sorted(g, key=lambda k: (_pivot(vectors[:, k]), k)))
        return cls(m, _freeze(values[order]), _freeze(vectors[:, order]))

    @classmethod
    def from_ensemble(cls, probabilities, vectors, tol: float = DEFAULT_TOL) -> DensityMatrix:
        """Assemble sum_n p_n v_n v_n^dag from columns ``vectors``."""
        p = np.asarray(probabilities, dtype=float)
        w = np.asarray(vectors, dtype=complex)
        return cls.from_matrix((w * p) @ dagger(w), tol)

    @classmethod
    def pure(cls, psi, tol: float = DEFAULT_TOL) -> DensityMatrix:
        psi = as_vector(psi)
        psi = psi / np.linalg.norm(psi)
        return cls.from_matrix(np.outer(psi, np.conj(psi)), tol)

    @classmethod
    def maximally_mixed(cls, n: int) -> DensityMatrix:
        return cls.from_matrix(np.eye(n) / n)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigen_residual(self) -> float:
        w = self.vectors
        return max_abs((w * self.probabilities) @ dagger(w) - self.matrix)


@dataclass(frozen=True)
class MeasurementOutcome:
    eigenvalue: float
    probability: float
    post_state: DensityMatrix | None


@dataclass(frozen=True, eq=False)
class QuantumSystem:
    """A Hamiltonian, an energy observable and a list of observables.

    For systems A and B the energy observable equals the Hamiltonian; in
    system C they differ by the grading factor -ij.
    """

    label: Label
    hamiltonian: np.ndarray
    energy_observable: np.ndarray
    observables: tuple[np.ndarray, ...] = ()
    ground_state: np.ndarray | None = None
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        object.__setattr__(self, "label", Label(self.label))
        h = as_matrix(self.hamiltonian, square=True)
        e = as_matrix(self.energy_observable, square=True)
        obs = tuple(as_matrix(o, square=True) for o in self.observables)
        _require_self_adjoint(h, self.tol, "hamiltonian")
        _require_self_adjoint(e, self.tol, "energy observable")
        n = h.shape[0]
        if e.shape != h.shape or any(o.shape != h.shape for o in obs):
            raise ShapeError("all operators of a system must share its dimension")
        for k, o in enumerate(obs):
            _require_self_adjoint(o, self.tol, f"observable {k}")
        if self.label in (Label.A, Label.B) and max_abs(h - e) > self.tol:
            raise ContractError(f"system {self.label.value}: energy observable must equal the hamiltonian")
        gs = self.ground_state
        if gs is None:
            _, vecs, _ = eigh_clustered(e, tol=self.tol)
            gs = canonical_phase(vecs[:, :1])[:, 0]
        gs = _freeze(as_vector(gs))
        if gs.shape[0] != n:
            raise ShapeError("ground state dimension mismatch")
        object.__setattr__(self, "hamiltonian", h)
        object.__setattr__(self, "energy_observable", e)
        object.__setattr__(self, "observables", obs)
        object.__setattr__(self, "ground_state", gs)

    @classmethod
    def system_a(cls, hamiltonian, observables=(), tol: float = DEFAULT_TOL) -> QuantumSystem:
        return cls(Label.A, hamiltonian, hamiltonian, tuple(observables), tol=tol)

    @property
    def dim(self) -> int:
        return self.hamiltonian.shape[0]

    def ground_degeneracy(self) -> int:
        """Rank of the lowest-energy spectral projector."""
        return spectral_decompose(self.energy_observable, tol=self.tol).ranks[0]


def _check_dims(n: int, *ms) -> None:
    for m in ms:
        if np.shape(m)[0] != n:
            raise ShapeError(f"dimension mismatch: expected {n}, got {np.shape(m)[0]}")


def measure_probabilities(rho: DensityMatrix, spec: SpectralDecomposition) -> list[tuple[float, float]]:
    """Born probabilities ``(lambda_n, Tr(rho E_n))`` for every eigenvalue."""
    out = []
    for lam, e in zip(spec.eigenvalues, spec.projectors):
        _check_dims(rho.dim, e)
        out.append((lam, float(np.trace(rho.matrix @ e).real)))
    return out


def pure_probabilities(psi, spec: SpectralDecomposition) -> list[float]:
    psi = as_vector(psi)
    return [float(np.vdot(psi, e @ psi).real) for e in spec.projectors]


def collapse(rho: DensityMatrix, e_n, floor: float = COLLAPSE_FLOOR, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Post-measurement state E rho E / Tr(rho E)."""
    e_n = as_matrix(e_n, square=True)
    _check_dims(rho.dim, e_n)
    p = np.trace(rho.matrix @ e_n).real
    if p <= floor:
        raise ZeroProbabilityError(f"outcome probability {p:.3e} is below floor {floor:.1e}")
    post = e_n @ rho.matrix @ e_n / p
    return DensityMatrix.from_matrix(0.5 * (post + dagger(post)), tol)


def measure(rho: DensityMatrix, spec: SpectralDecomposition, floor: float = COLLAPSE_FLOOR) -> list[MeasurementOutcome]:
    """All outcomes with probabilities and post-measurement states.

    Outcomes below ``floor`` get ``post_state=None``.
    """
    outcomes = []
    for (lam, p), e in zip(measure_probabilities(rho, spec), spec.projectors):
        post = collapse(rho, e, floor) if p > floor else None
        outcomes.append(MeasurementOutcome(lam, p, post))
    return outcomes


def propagator(h, t: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """exp(-i h t) for self-adjoint ``h`` via its eigendecomposition."""
    h = as_matrix(h, square=True)
    _require_self_adjoint(h, tol, "generator")
    values, vectors = np.linalg.eigh(0.5 * (h + dagger(h)))
    return (vectors * np.exp(-1j * values * t)) @ dagger(vectors)


def evolve_state(sys: QuantumSystem, psi, t: float) -> np.ndarray:
    psi = as_vector(psi)
    _check_dims(sys.dim, psi)
    return propagator(sys.hamiltonian, t, sys.tol) @ psi


def evolve_density_matrix(h, rho_m, t: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    u = propagator(h, t, tol)
    out = u @ np.asarray(rho_m) @ dagger(u)
    return 0.5 * (out + dagger(out))


def evolve_density(sys: QuantumSystem, rho: DensityMatrix, t: float) -> DensityMatrix:
    _check_dims(sys.dim, rho.matrix)
    return DensityMatrix.from_matrix(evolve_density_matrix(sys.hamiltonian, rho.matrix, t, sys.tol), sys.tol)


def expectation(rho: DensityMatrix, o, tol: float = DEFAULT_TOL) -> float:
    o = as_matrix(o, square=True)
    _require_self_adjoint(o, tol, "observable")
    _check_dims(rho.dim, o)
    val = np.trace(rho.matrix @ o)
    if abs(val.imag) > tol * (1 + abs(val.real)):
        raise ContractError(f"expectation has imaginary residue {val.imag:.3e}")
    return float(val.real)
