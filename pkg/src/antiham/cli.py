"""Command-line entry point: verify, demo, transform."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

import numpy as np

from . import applications as app
from . import ctransform as ct
from . import doubling as db
from . import io
from . import harness
from .reallinear import RealLinearOp, dagger, max_abs
from .system import Label, QuantumSystem, evolve_state, propagator

SEED_ENV = "ANTIHAM_SEED"


def _fmt(m) -> str:
    return np.array2string(np.asarray(m), precision=4, suppress_small=True, max_line_width=120)


def _check(name: str, dev: float, tol: float = 1e-9) -> str:
    return f"  [{'ok' if dev <= tol else 'FAIL'}] {name}: {dev:.2e}"


def cmd_verify(args) -> int:
    seed = args.seed
    if os.environ.get(SEED_ENV):
        seed = int(os.environ[SEED_ENV])
    try:
        cfg = harness.CampaignConfig(
            base_dim=args.dim,
            trials=args.trials,
            master_seed=seed,
            tolerance=args.tol,
            suites=tuple(args.suite) if args.suite else harness.SUITE_NAMES,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    started = time.perf_counter()
    reports = harness.run_campaign(cfg)
    elapsed = time.perf_counter() - started
    doc = harness.campaign_document(cfg, reports)
    for r in reports:
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.suite:<22} {r.property:<36} failures={r.failures:<4} max_dev={r.max_deviation:.3e}"
        print(line)
        for f in r.failed_trials[:3]:
            print(f"      trial {f['trial']} seed {f['seed']} deviation {f['deviation']}")
    print(f"overall_pass={doc['overall_pass']} properties={len(reports)} seed={seed} elapsed={elapsed:.2f}s")
    if args.out:
        if args.out == "-":
            print(json.dumps(doc, indent=2))
        else:
            io.dump(doc, args.out)
    return 0 if doc["overall_pass"] else 1


def _print_systems(sys_a: QuantumSystem, bundle: ct.SystemCBundle) -> None:
    sys_b = db.build_system_B(sys_a)
    print("H^A =\n" + _fmt(sys_a.hamiltonian))
    print("H^B =\n" + _fmt(sys_b.hamiltonian))
    print("energy observable in C =\n" + _fmt(bundle.energy_observable_c))
    print("H^C =\n" + _fmt(bundle.hamiltonian_c))


def _demo_scalar() -> None:
    e = 1.5
    sys_a = QuantumSystem.system_a(np.array([[e]]))
    space = db.DoubledSpace(1)
    bundle = ct.build_system_C(db.build_system_B(sys_a), space)
    _print_systems(sys_a, bundle)
    u = bundle.u
    print("U linear part =\n" + _fmt(u.u.linear))
    print("U antilinear part =\n" + _fmt(u.u.antilinear))
    e1 = np.array([1.0, 0.0])
    print("U e1 =", _fmt(ct.map_state_C(u, e1)), " U (i e1) =", _fmt(ct.map_state_C(u, 1j * e1)))
    h_c = bundle.hamiltonian_c
    print("checks:")
    print(_check("H^C self-adjoint", max_abs(h_c - dagger(h_c))))
    print(_check("spectrum of H^C in {+E, -E}", max_abs(np.abs(np.linalg.eigvalsh(h_c)) - e)))
    print(_check("U e1 = e1", max_abs(ct.map_state_C(u, e1) - e1)))
    print(_check("U (i e1) = j e1", max_abs(ct.map_state_C(u, 1j * e1) - space.j @ e1)))


def _demo_pauli() -> None:
    y = np.array([[0, -1j], [1j, 0]])
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    z = np.diag([1.0, -1.0]).astype(complex)
    sys_a = QuantumSystem.system_a(z, (y, x))
    space = db.DoubledSpace(2)
    bundle = ct.build_system_C(db.build_system_B(sys_a), space)
    _print_systems(sys_a, bundle)
    o_b = db.lift_operator(y)
    o_c = bundle.system.observables[0]
    print("Pauli-Y lifted to B =\n" + _fmt(o_b))
    print("Pauli-Y in C =\n" + _fmt(o_c))
    print("eigenvalues in C:", _fmt(np.linalg.eigvalsh(o_c)))
    print("checks:")
    print(_check("O^C = Re O^B + j Im O^B", max_abs(o_c - ct.re_im_form(o_b, space))))
    print(_check("[O^C, j] = 0", max_abs(o_c @ space.j - space.j @ o_c)))
    print(_check("O^C real", max_abs(o_c.imag)))
    print(_check("spectra of O^B and O^C match", max_abs(np.linalg.eigvalsh(o_b) - np.linalg.eigvalsh(o_c))))


def _demo_timereversal() -> None:
    h = np.array([[1.0, 0.3], [0.3, -0.5]], dtype=complex)
    sys_a = QuantumSystem.system_a(h)
    space = db.DoubledSpace(2)
    bundle = ct.build_system_C(db.build_system_B(sys_a), space)
    _print_systems(sys_a, bundle)
    t_c = app.build_time_reversal_C(bundle, RealLinearOp.conjugation(2), h)
    h_c, e_c = bundle.hamiltonian_c, bundle.energy_observable_c
    print("T^C =\n" + _fmt(t_c))
    psi = np.array([0.6, 0.0, 0.0, 0.8j])
    t = 1.0
    rev = max_abs(t_c @ evolve_state(bundle.system, psi, t) - app.reversed_evolution(h_c, t_c @ psi, t))
    print("checks:")
    print(_check("T^C unitary", max_abs(dagger(t_c) @ t_c - np.eye(4))))
    print(_check("{T^C, H^C} = 0", max_abs(t_c @ h_c + h_c @ t_c)))
    print(_check("[T^C, energy observable] = 0", max_abs(t_c @ e_c - e_c @ t_c)))
    print(_check("T^C Psi(t) solves d/dt = +i H^C", rev))


def _demo_inject() -> None:
    c = 0.4
    h = np.diag([1.0, -1.0]).astype(complex)
    h2 = RealLinearOp.from_antilinear(np.array([[0, c], [-c, 0]], dtype=complex))
    sys_a = QuantumSystem.system_a(h)
    space = db.DoubledSpace(2)
    bundle = ct.build_system_C(db.build_system_B(sys_a), space)
    _print_systems(sys_a, bundle)
    ok, dev = app.validate_antilinear_condition(h2)
    h2_c = app.inject_term_C(bundle, h2)
    print(f"antilinear term matrix = {_fmt(h2.antilinear)}; admissible={ok} (deviation {dev:.1e})")
    print("H^C_2 =\n" + _fmt(h2_c))
    psi0 = np.array([1.0, 0.0], dtype=complex)
    t = 1.0
    psi_a = app.evolve_reallinear(h, h2, psi0, t)
    lhs = ct.map_state_C(bundle.u, db.lift_pure(psi_a))
    rhs = propagator(bundle.hamiltonian_c + h2_c, t) @ ct.map_state_C(bundle.u, db.lift_pure(psi0))
    bad = RealLinearOp.from_antilinear(np.eye(2, dtype=complex))
    bad_c = app.injected_term(bundle, bad)
    print("checks:")
    print(_check("H^C_2 self-adjoint", max_abs(h2_c - dagger(h2_c))))
    print(_check("U lift(Psi^A(t)) = exp(-i(H^C + H^C_2)t) U lift(Psi^A(0))", max_abs(lhs - rhs)))
    print(_check("norm of Psi^A(t) conserved", abs(np.linalg.norm(psi_a) - 1.0)))
    print(f"  symmetric antilinear term: H^C_2 self-adjointness violation {max_abs(bad_c - dagger(bad_c)):.2e} (expected nonzero)")


DEMOS = {
    "scalar": _demo_scalar,
    "pauli": _demo_pauli,
    "timereversal": _demo_timereversal,
    "inject": _demo_inject,
}


def cmd_demo(args) -> int:
    DEMOS[args.example]()
    return 0


def cmd_transform(args) -> int:
    sys_a = io.system_from_doc(io.load(args.input))
    if sys_a.label is not Label.A:
        print(f"error: input must be a system A document, got {sys_a.label.value}", file=sys.stderr)
        return 2
    sys_b = db.build_system_B(sys_a)
    if args.to == "B":
        doc = io.system_to_doc(sys_b)
    else:
        doc = io.bundle_to_doc(ct.build_system_C(sys_b, db.DoubledSpace(sys_a.dim)))
    io.dump(doc, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antiham", description="Antilinear Hamiltonian terms via the doubled and transformed systems.")
    p.add_argument("--log-level", default="WARNING")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the randomized verification campaign")
    v.add_argument("--dim", type=int, default=3)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=harness.CampaignConfig.master_seed)
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--suite", nargs="+", choices=harness.SUITE_NAMES)
    v.add_argument("--out", help="write the JSON report here ('-' for stdout)")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("demo", help="print a small worked example")
    d.add_argument("--example", required=True, choices=sorted(DEMOS))
    d.set_defaults(func=cmd_demo)

    t = sub.add_parser("transform", help="build system B or the system-C bundle from a system A document")
    t.add_argument("--input", required=True)
    t.add_argument("--to", required=True, choices=("B", "C"))
    t.add_argument("--out", required=True)
    t.set_defaults(func=cmd_transform)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
