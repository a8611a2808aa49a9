import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings, strategies as st

from antiham.applications import (
    build_time_reversal_C,
    check_antiunitary,
    check_generator_condition,
    derealify,
    encode,
    evolve_reallinear,
    inject_term_C,
    injected_term,
    realify,
    reversed_evolution,
    validate_antilinear_condition,
)
from antiham.ctransform import build_system_C, map_state_C
from antiham.doubling import DoubledSpace, build_system_B, lift_pure
from antiham.ensembles import (
    gen_random_system_A,
    random_antisymmetric_antilinear,
    random_hermitian,
    random_real_symmetric,
    random_reallinear,
    random_symmetric_antilinear,
    random_unit_vector,
    random_vector,
)
from antiham.errors import ConditionViolationError, ContractError
from antiham.reallinear import RealLinearOp, apply, compose
from antiham.system import QuantumSystem, evolve_state


def bundle_for(sys_a):
    return build_system_C(build_system_B(sys_a), DoubledSpace(sys_a.dim))


# --- admissibility ----------------------------------------------------------

def test_validate_examples():
    assert validate_antilinear_condition(RealLinearOp.from_antilinear([[0, 1], [-1, 0]]))[0]
    ok, dev = validate_antilinear_condition(RealLinearOp.from_antilinear(np.eye(2)))
    assert not ok and dev > 0.5
    assert validate_antilinear_condition(RealLinearOp.zero(3))[0]


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=50, deadline=None)
def test_validate_matches_matrix_criterion(seed):
    # for a general term: B self-adjoint and A antisymmetric
    rng = np.random.default_rng(seed)
    m = random_reallinear(3, rng)
    mode = rng.integers(4)
    b = 0.5 * (m.linear + m.linear.conj().T) if mode & 1 else m.linear
    a = 0.5 * (m.antilinear - m.antilinear.T) if mode & 2 else m.antilinear
    ok, _ = validate_antilinear_condition(RealLinearOp(b, a))
    assert ok == (mode == 3)


# --- realification ----------------------------------------------------------

def test_realify_examples(rng):
    n = 3
    i3, z = np.eye(n), np.zeros((n, n))
    np.testing.assert_array_equal(realify(RealLinearOp.scalar(1j, n)), np.block([[z, -i3], [i3, z]]))
    np.testing.assert_array_equal(realify(RealLinearOp.conjugation(n)), np.block([[i3, z], [z, -i3]]))
    m, v = random_reallinear(n, rng), random_vector(n, rng)
    np.testing.assert_allclose(derealify(realify(m) @ encode(v)), apply(m, v), atol=1e-12)


def test_realify_homomorphism(rng):
    m, n = random_reallinear(4, rng), random_reallinear(4, rng)
    np.testing.assert_allclose(realify(compose(m, n)), realify(m) @ realify(n), atol=1e-12)


# --- real-linear evolution --------------------------------------------------

def test_evolve_reallinear_reduces_to_schrodinger(rng):
    sys = gen_random_system_A(3, rng)
    psi = random_unit_vector(3, rng)
    out = evolve_reallinear(sys.hamiltonian, RealLinearOp.zero(3), psi, 1.1)
    np.testing.assert_allclose(out, evolve_state(sys, psi, 1.1), atol=1e-10)
    np.testing.assert_allclose(evolve_reallinear(sys.hamiltonian, RealLinearOp.zero(3), psi, 0.0), psi, atol=1e-15)


def test_evolve_reallinear_norm(rng):
    h = random_hermitian(3, rng)
    psi = random_unit_vector(3, rng)
    good = evolve_reallinear(h, random_antisymmetric_antilinear(3, rng), psi, 1.3)
    assert abs(np.linalg.norm(good) - 1) < 1e-10
    bad = evolve_reallinear(h, random_symmetric_antilinear(3, rng), psi, 1.3)
    assert abs(np.linalg.norm(bad) - 1) > 1e-4


def test_evolve_reallinear_against_small_steps(rng):
    # independent oracle: many first-order-corrected steps of the action itself
    h = random_hermitian(2, rng)
    h2 = random_antisymmetric_antilinear(2, rng)
    psi = random_unit_vector(2, rng)
    gen = compose(RealLinearOp.scalar(-1j, 2), RealLinearOp.from_linear(h) + h2)
    dt, x = 1e-3, psi.copy()
    for _ in range(1000):  # RK4
        k1 = apply(gen, x)
        k2 = apply(gen, x + dt / 2 * k1)
        k3 = apply(gen, x + dt / 2 * k2)
        k4 = apply(gen, x + dt * k3)
        x = x + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    np.testing.assert_allclose(evolve_reallinear(h, h2, psi, 1.0), x, atol=1e-10)


def test_evolve_reallinear_rejects_non_hermitian(rng):
    with pytest.raises(ContractError):
        evolve_reallinear(np.triu(np.ones((2, 2))), RealLinearOp.zero(2), [1, 0], 1.0)


# --- injection --------------------------------------------------------------

def test_inject_zero():
    bundle = bundle_for(gen_random_system_A(2, 3))
    np.testing.assert_array_equal(inject_term_C(bundle, RealLinearOp.zero(2)), np.zeros((4, 4)))


def test_inject_antisymmetric_real_c():
    c = 0.7
    bundle = bundle_for(QuantumSystem.system_a(np.diag([1.0, -1.0])))
    h2_c = inject_term_C(bundle, RealLinearOp.from_antilinear([[0, c], [-c, 0]]))
    np.testing.assert_allclose(h2_c, h2_c.conj().T, atol=1e-15)
    # i times a real antisymmetric matrix: self-adjoint, purely imaginary
    np.testing.assert_allclose(h2_c.real, 0, atol=1e-15)
    assert np.max(np.abs(h2_c)) == pytest.approx(c)


def test_inject_is_imaginary_for_any_antisymmetric_term(rng):
    # U i U = j and U K U = L, so for A = X + iY (X, Y real): H2^C = -i j X L + i Y L
    bundle = bundle_for(gen_random_system_A(3, rng))
    h2 = random_antisymmetric_antilinear(3, rng)
    h2_c = inject_term_C(bundle, h2)
    space = bundle.u.space
    x = np.kron(np.eye(2), h2.antilinear.real)
    y = np.kron(np.eye(2), h2.antilinear.imag)
    expected = -1j * space.j @ x @ space.l + 1j * y @ space.l
    np.testing.assert_allclose(h2_c, expected, atol=1e-14)
    np.testing.assert_allclose(h2_c.real, 0, atol=1e-15)


def test_inject_rejects_inadmissible(rng):
    bundle = bundle_for(gen_random_system_A(3, rng))
    bad = random_symmetric_antilinear(3, rng)
    with pytest.raises(ConditionViolationError):
        inject_term_C(bundle, bad)
    raw = injected_term(bundle, bad)
    assert np.max(np.abs(raw - raw.conj().T)) > 1e-3


def test_injection_dynamics_correspondence(rng):
    sys_a = gen_random_system_A(3, rng)
    bundle = bundle_for(sys_a)
    h2 = random_antisymmetric_antilinear(3, rng)
    total = bundle.hamiltonian_c + inject_term_C(bundle, h2)
    np.testing.assert_allclose(total, total.conj().T, atol=1e-14)
    psi0 = random_unit_vector(3, rng)
    start = map_state_C(bundle.u, lift_pure(psi0))
    for t in (0.5, 1.0, 2.0):
        lhs = map_state_C(bundle.u, lift_pure(evolve_reallinear(sys_a.hamiltonian, h2, psi0, t)))
        rhs = scipy.linalg.expm(-1j * t * total) @ start
        assert np.max(np.abs(lhs - rhs)) < 1e-9


# --- time reversal ----------------------------------------------------------

def test_check_antiunitary():
    k = RealLinearOp.conjugation(2)
    checks = check_antiunitary(k, np.diag([1.0, 2.0]))
    assert max(checks.values()) == 0
    assert check_antiunitary(k, np.array([[0, 1j], [-1j, 0]]))["[T, H] = 0"] > 0.5


def test_time_reversal_scalar():
    e = 0.9
    bundle = bundle_for(QuantumSystem.system_a([[e]]))
    t_c = build_time_reversal_C(bundle, RealLinearOp.conjugation(1))
    # K lifts and maps to L = diag(1, -1)
    np.testing.assert_allclose(t_c, np.diag([1.0, -1.0]), atol=1e-15)
    np.testing.assert_allclose(t_c.conj().T @ t_c, np.eye(2), atol=1e-15)


def test_time_reversal_random(rng):
    h = random_real_symmetric(3, rng)
    bundle = bundle_for(QuantumSystem.system_a(h))
    t_c = build_time_reversal_C(bundle, RealLinearOp.conjugation(3), h)
    h_c, e_c = bundle.hamiltonian_c, bundle.energy_observable_c
    assert np.max(np.abs(t_c.conj().T @ t_c - np.eye(6))) < 1e-10
    assert np.max(np.abs(t_c @ h_c + h_c @ t_c)) < 1e-10
    assert np.max(np.abs(t_c @ e_c - e_c @ t_c)) < 1e-10
    psi = random_unit_vector(6, rng)
    for t in (0.3, 1.0, 2.5):
        lhs = t_c @ evolve_state(bundle.system, psi, t)
        rhs = scipy.linalg.expm(1j * t * h_c) @ (t_c @ psi)
        assert np.max(np.abs(lhs - rhs)) < 1e-9
        np.testing.assert_allclose(reversed_evolution(h_c, t_c @ psi, t), rhs, atol=1e-12)


def test_time_reversal_default_recovers_h(rng):
    h = random_real_symmetric(2, rng)
    bundle = bundle_for(QuantumSystem.system_a(h))
    np.testing.assert_allclose(
        build_time_reversal_C(bundle, RealLinearOp.conjugation(2)),
        build_time_reversal_C(bundle, RealLinearOp.conjugation(2), h),
    )


def test_time_reversal_preconditions(rng):
    h = random_hermitian(3, rng)  # complex, does not commute with K
    bundle = bundle_for(QuantumSystem.system_a(h))
    with pytest.raises(ContractError):
        build_time_reversal_C(bundle, RealLinearOp.conjugation(3), h)
    with pytest.raises(ContractError):
        build_time_reversal_C(bundle, RealLinearOp.from_antilinear(2 * np.eye(3)), np.eye(3))


# --- generator condition ----------------------------------------------------

def test_generator_condition_examples(rng):
    ok, res = check_generator_condition(RealLinearOp.from_linear(random_hermitian(3, rng)), 1e-3)
    assert ok
    anti = RealLinearOp.from_antilinear([[0, 1 + 0.5j], [-1 - 0.5j, 0]])
    ok, res = check_generator_condition(anti, 1e-3)
    assert ok and res < 1e-5
    ok, res_bad = check_generator_condition(RealLinearOp.from_antilinear([[1, 0.3], [0.3, -0.2j]]), 1e-3)
    assert not ok and res_bad > 1e-4


def test_generator_residual_is_second_order(rng):
    g = random_antisymmetric_antilinear(3, rng)
    _, r1 = check_generator_condition(g, 1e-2)
    _, r2 = check_generator_condition(g, 1e-3)
    assert r1 / r2 == pytest.approx(100, rel=1e-6)
