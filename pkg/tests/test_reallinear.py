import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from antiham.errors import ShapeError
from antiham.ensembles import random_reallinear, random_vector
from antiham.reallinear import (
    RealLinearOp,
    adjoint,
    apply,
    compose,
    inner,
    op_distance,
    real_inner,
    real_trace,
    reconstruct_inner,
    split,
    vector_adjoint_apply,
)

K2 = RealLinearOp.conjugation(2)
I2 = RealLinearOp.identity(2)
iI2 = RealLinearOp.scalar(1j, 2)


def assert_op_close(m, n, tol=1e-12):
    assert op_distance(m, n) <= tol, (m, n)


def action_matrix(op, n):
    """Real 2n x 2n matrix of op read off from basis vectors e_k and i e_k."""
    cols = []
    for k in range(n):
        for z in (1.0, 1j):
            e = np.zeros(n, complex)
            e[k] = z
            cols.append(apply(op, e))
    return np.array(cols)


# --- apply -----------------------------------------------------------------

def test_apply_conjugation():
    np.testing.assert_allclose(apply(K2, [1 + 2j, 3]), [1 - 2j, 3])


def test_apply_identity(rng):
    v = random_vector(4, rng)
    np.testing.assert_array_equal(apply(RealLinearOp.identity(4), v), v)


def test_apply_hand_example():
    op = RealLinearOp([[0, 1], [1, 0]], np.eye(2))
    v = np.array([1j, 0])
    expected = np.array([0, 1j]) + np.conj(v)  # B v + A conj(v), componentwise
    np.testing.assert_allclose(apply(op, v), expected)
    np.testing.assert_allclose(apply(op, v), [-1j, 1j])


def test_apply_shape_error():
    with pytest.raises(ShapeError):
        apply(K2, [1, 2, 3])


def test_constructor_rejects_mismatched_parts():
    with pytest.raises(ShapeError):
        RealLinearOp(np.eye(2), np.eye(3))


@given(a=st.floats(-5, 5), b=st.floats(-5, 5), seed=st.integers(0, 2**32 - 1))
@settings(max_examples=50, deadline=None)
def test_real_linearity(a, b, seed):
    rng = np.random.default_rng(seed)
    m = random_reallinear(3, rng)
    u, v = random_vector(3, rng), random_vector(3, rng)
    lhs = apply(m, a * u + b * v)
    np.testing.assert_allclose(lhs, a * apply(m, u) + b * apply(m, v), atol=1e-11 * (1 + abs(a) + abs(b)))


def test_not_complex_linear(rng):
    m = random_reallinear(3, rng)
    v = random_vector(3, rng)
    assert np.max(np.abs(apply(m, 1j * v) - 1j * apply(m, v))) > 1e-3


# --- split -----------------------------------------------------------------

def test_split_conjugation():
    b, a = split(K2)
    assert_op_close(b, RealLinearOp.zero(2))
    assert_op_close(a, K2)


def test_split_scalar_i():
    b, a = split(iI2)
    assert_op_close(b, iI2)
    assert_op_close(a, RealLinearOp.zero(2))


def test_split_identity_plus_k_action_oracle():
    m = I2 + K2
    b, a = split(m)
    half_minus = 0.5 * (m - compose(iI2, compose(m, iI2)))
    half_plus = 0.5 * (m + compose(iI2, compose(m, iI2)))
    # compare on the action level, basis vectors e_k and i e_k
    np.testing.assert_allclose(action_matrix(b, 2), action_matrix(half_minus, 2), atol=1e-15)
    np.testing.assert_allclose(action_matrix(a, 2), action_matrix(half_plus, 2), atol=1e-15)
    assert_op_close(b, I2)
    assert_op_close(a, K2)


def test_split_recombines(rng):
    m = random_reallinear(4, rng)
    b, a = split(m)
    assert b.is_linear() and a.is_antilinear()
    assert_op_close(b + a, m, 0)


# --- compose ---------------------------------------------------------------

def test_compose_k_squared():
    assert_op_close(compose(K2, K2), I2, 0)


def test_compose_i_and_k_anticommute():
    ik, ki = compose(iI2, K2), compose(K2, iI2)
    assert_op_close(ik, RealLinearOp.from_antilinear(1j * np.eye(2)), 0)
    assert_op_close(ki, RealLinearOp.from_antilinear(-1j * np.eye(2)), 0)
    assert_op_close(ik, -ki, 0)


def test_compose_matches_sequential_apply(rng):
    m, n = random_reallinear(4, rng), random_reallinear(4, rng)
    mn = compose(m, n)
    for _ in range(20):
        v = random_vector(4, rng)
        np.testing.assert_allclose(apply(mn, v), apply(m, apply(n, v)), atol=1e-12)
    assert_op_close(m @ n, mn, 0)


def test_scalar_multiplication_rejects_complex():
    with pytest.raises(TypeError):
        K2 * 1j


# --- adjoint ---------------------------------------------------------------

def test_adjoint_of_k():
    assert_op_close(adjoint(K2), K2, 0)


def test_adjoint_involution(rng):
    m = random_reallinear(5, rng)
    assert_op_close(adjoint(adjoint(m)), m, 0)


def test_antilinear_adjoint_is_transpose(rng):
    a = RealLinearOp.from_antilinear([[0, 1], [0, 0]])
    ad = adjoint(a)
    assert_op_close(ad, RealLinearOp.from_antilinear([[0, 0], [1, 0]]), 0)
    for _ in range(20):
        psi, phi = random_vector(2, rng), random_vector(2, rng)
        assert abs(real_inner(apply(ad, psi), phi) - real_inner(psi, apply(a, phi))) < 1e-12
        assert abs(inner(apply(ad, psi), phi) - np.conj(inner(psi, apply(a, phi)))) < 1e-12


def test_adjoint_contract_random(rng):
    worst = 0.0
    for _ in range(100):
        m = random_reallinear(4, rng)
        psi, phi = random_vector(4, rng), random_vector(4, rng)
        worst = max(worst, abs(real_inner(apply(adjoint(m), psi), phi) - real_inner(psi, apply(m, phi))))
    assert worst < 1e-11


def test_adjoint_product_and_scalar_rules(rng):
    m, n = random_reallinear(4, rng), random_reallinear(4, rng)
    assert_op_close(adjoint(compose(m, n)), compose(adjoint(n), adjoint(m)))
    alpha = 0.3 - 1.7j
    lhs = adjoint(compose(m, RealLinearOp.scalar(alpha, 4)))
    assert_op_close(lhs, compose(RealLinearOp.scalar(np.conj(alpha), 4), adjoint(m)))


def test_property_h_alias(rng):
    m = random_reallinear(3, rng)
    assert_op_close(m.H, adjoint(m), 0)


# --- traces and inner products --------------------------------------------

def test_real_trace_examples(rng):
    assert real_trace(RealLinearOp.conjugation(4)) == 0
    assert real_trace(RealLinearOp.scalar(1j, 5)) == 5j
    m, n = random_reallinear(6, rng), random_reallinear(6, rng)
    assert abs(real_trace(compose(m, n)).real - real_trace(compose(n, m)).real) < 1e-12
    assert abs(real_trace(m + n) - real_trace(m) - real_trace(n)) < 1e-12


def test_full_trace_of_product_is_not_cyclic_in_imaginary_part(rng):
    # only the real part is cyclic; the imaginary part generally is not
    m, n = random_reallinear(3, rng), random_reallinear(3, rng)
    assert abs(real_trace(compose(m, n)).imag - real_trace(compose(n, m)).imag) > 1e-6


def test_inner_examples():
    u = np.array([1, 1j]) / np.sqrt(2)
    assert abs(real_inner(u, u) - 1) < 1e-15
    assert abs(reconstruct_inner(u, u) - 1) < 1e-15
    assert real_inner([1, 0], [1j, 0]) == 0
    assert reconstruct_inner([1, 0], [1j, 0]) == 1j


def test_reconstruct_inner_random(rng):
    for _ in range(20):
        u, v = random_vector(5, rng), random_vector(5, rng)
        assert abs(reconstruct_inner(u, v) - np.vdot(u, v)) < 1e-12


def test_vector_adjoint_apply_examples(rng):
    psi, phi = random_vector(3, rng), random_vector(3, rng)
    assert abs(vector_adjoint_apply(RealLinearOp.identity(3), psi, phi) - np.vdot(psi, phi)) < 1e-12
    assert abs(vector_adjoint_apply(K2, [1j, 0], [1, 0]) - 1j) < 1e-15


def test_vector_adjoint_apply_antilinear_random(rng):
    for _ in range(50):
        n = RealLinearOp.from_antilinear(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        psi, phi = random_vector(3, rng), random_vector(3, rng)
        assert abs(vector_adjoint_apply(n, psi, phi) - np.vdot(apply(n, psi), phi)) < 1e-12
