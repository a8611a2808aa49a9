"""Dense complex matrices and the calculus of real-linear operators.

A real-linear operator ``M`` on C^n is stored through its unique split
``M = B + A`` into a linear part ``B`` and an antilinear part ``A``; both are
kept as ordinary complex matrices and the action is

    M psi = B @ psi + A @ conj(psi)

Conjugation ``K`` is componentwise in the computational basis, so it is
``RealLinearOp(0, I)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError

DEFAULT_TOL = 1e-9


def as_matrix(m, *, square: bool = False) -> np.ndarray:
    """Return ``m`` as a read-only finite complex 2-D array."""
    arr = np.array(m, dtype=complex)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got shape {arr.shape}")
    if square and arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    arr.flags.writeable = False
    return arr


def as_vector(v) -> np.ndarray:
    arr = np.array(v, dtype=complex)
    if arr.ndim != 1:
        raise ShapeError(f"expected a 1-D vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector entries must be finite")
    return arr


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def max_abs(x) -> float:
    """Entrywise infinity norm; 0.0 for empty input."""
    x = np.asarray(x)
    return float(np.max(np.abs(x))) if x.size else 0.0


def is_self_adjoint(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and max_abs(m - dagger(m)) <= tol


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


@dataclass(frozen=True, eq=False)
class RealLinearOp:
    """Real-linear operator ``psi -> linear @ psi + antilinear @ conj(psi)``."""

    linear: np.ndarray
    antilinear: np.ndarray

    def __post_init__(self):
        b = as_matrix(self.linear, square=True)
        a = as_matrix(self.antilinear, square=True)
        if a.shape != b.shape:
            raise ShapeError(f"part shapes differ: {b.shape} vs {a.shape}")
        object.__setattr__(self, "linear", b)
        object.__setattr__(self, "antilinear", a)

    @property
    def dim(self) -> int:
        return self.linear.shape[0]

    @classmethod
    def from_linear(cls, b) -> RealLinearOp:
        b = as_matrix(b, square=True)
        return cls(b, np.zeros_like(b))

    @classmethod
    def from_antilinear(cls, a) -> RealLinearOp:
        a = as_matrix(a, square=True)
        return cls(np.zeros_like(a), a)

    @classmethod
    def identity(cls, n: int) -> RealLinearOp:
        return cls.from_linear(np.eye(n))

    @classmethod
    def scalar(cls, alpha: complex, n: int) -> RealLinearOp:
        """Multiplication by the complex number ``alpha``."""
        return cls.from_linear(alpha * np.eye(n))

    @classmethod
    def conjugation(cls, n: int) -> RealLinearOp:
        """Componentwise complex conjugation K."""
        return cls.from_antilinear(np.eye(n))

    @classmethod
    def zero(cls, n: int) -> RealLinearOp:
        z = np.zeros((n, n))
        return cls(z, z)

    def is_linear(self, tol: float = DEFAULT_TOL) -> bool:
        return max_abs(self.antilinear) <= tol

    def is_antilinear(self, tol: float = DEFAULT_TOL) -> bool:
        return max_abs(self.linear) <= tol

    def __call__(self, v) -> np.ndarray:
        return apply(self, v)

    def __matmul__(self, other: RealLinearOp) -> RealLinearOp:
        return compose(self, other)

    def __add__(self, other: RealLinearOp) -> RealLinearOp:
        _check_same_dim(self, other)
        return RealLinearOp(self.linear + other.linear, self.antilinear + other.antilinear)

    def __sub__(self, other: RealLinearOp) -> RealLinearOp:
        _check_same_dim(self, other)
        return RealLinearOp(self.linear - other.linear, self.antilinear - other.antilinear)

    def __neg__(self) -> RealLinearOp:
        return RealLinearOp(-self.linear, -self.antilinear)

    def __mul__(self, a: float) -> RealLinearOp:
        # real scalars only; complex scalars must go through compose
        if isinstance(a, complex) or np.iscomplexobj(a):
            raise TypeError("use compose(RealLinearOp.scalar(alpha, n), op) for complex scalars")
        return RealLinearOp(a * self.linear, a * self.antilinear)

    __rmul__ = __mul__

    @property
    def H(self) -> RealLinearOp:
        return adjoint(self)

    def __repr__(self) -> str:
        return f"RealLinearOp(dim={self.dim})"


def _check_same_dim(m: RealLinearOp, n: RealLinearOp) -> None:
    if m.dim != n.dim:
        raise ShapeError(f"dimension mismatch: {m.dim} vs {n.dim}")


def op_distance(m: RealLinearOp, n: RealLinearOp) -> float:
    """Entrywise max deviation between the stored parts of two operators."""
    _check_same_dim(m, n)
    return max(max_abs(m.linear - n.linear), max_abs(m.antilinear - n.antilinear))


def op_norm(m: RealLinearOp) -> float:
    return max(max_abs(m.linear), max_abs(m.antilinear))


def apply(op: RealLinearOp, v) -> np.ndarray:
    v = as_vector(v)
    if v.shape[0] != op.dim:
        raise ShapeError(f"operator dim {op.dim} does not match vector dim {v.shape[0]}")
    return op.linear @ v + op.antilinear @ np.conj(v)


def split(op: RealLinearOp) -> tuple[RealLinearOp, RealLinearOp]:
    """Unique decomposition into (linear, antilinear) operators."""
    zero = np.zeros_like(op.linear)
    return RealLinearOp(op.linear, zero), RealLinearOp(zero, op.antilinear)


def compose(m: RealLinearOp, n: RealLinearOp) -> RealLinearOp:
    """The product ``m n`` (apply ``n`` first)."""
    _check_same_dim(m, n)
    bm, am, bn, an = m.linear, m.antilinear, n.linear, n.antilinear
    return RealLinearOp(bm @ bn + am @ np.conj(an), bm @ an + am @ np.conj(bn))


def adjoint(op: RealLinearOp) -> RealLinearOp:
    """Adjoint defined by Re<M^dag psi, phi> = Re<psi, M phi>.

    The linear part goes to its conjugate transpose and the antilinear part to
    its plain transpose.
    """
    return RealLinearOp(dagger(op.linear), op.antilinear.T)


def real_trace(op: RealLinearOp) -> complex:
    """Basis-independent trace: the trace of the linear part."""
    return complex(np.trace(op.linear))


def inner(u, v) -> complex:
    """Standard inner product <u, v>, antilinear in the first slot."""
    u, v = as_vector(u), as_vector(v)
    if u.shape != v.shape:
        raise ShapeError(f"vector dims differ: {u.shape[0]} vs {v.shape[0]}")
    return complex(np.vdot(u, v))


def real_inner(u, v) -> float:
    return inner(u, v).real


def reconstruct_inner(u, v) -> complex:
    """Rebuild <u, v> from real parts only: Re<u,v> - i Re<u, i v>."""
    v = as_vector(v)
    return real_inner(u, v) - 1j * real_inner(u, 1j * v)


def vector_adjoint_apply(n: RealLinearOp, psi, phi) -> complex:
    """Evaluate (N psi)^dag phi through the adjoint of ``n``.

    For non-linear ``n`` this is not psi^dag N^dag phi; the correct form is
    Re(psi^dag N^dag phi) - i Re(psi^dag N^dag i phi).
    """
    psi, phi = as_vector(psi), as_vector(phi)
    if psi.shape[0] != n.dim or phi.shape[0] != n.dim:
        raise ShapeError("vector dims must match operator dim")
    nd = adjoint(n)
    return real_inner(psi, apply(nd, phi)) - 1j * real_inner(psi, apply(nd, 1j * phi))
