"""JSON documents for matrices, real-linear operators, systems and C bundles.

Matrix:          {"rows": n, "cols": m, "data": [[re, im], ...]}  (row-major)
RealLinearOp:    {"dim": n, "linear": <matrix>, "antilinear": <matrix>}
System:          {"label": "A"|"B"|"C", "dim": n, "hamiltonian": <matrix>,
                  "energy_observable": <matrix>, "observables": [<matrix>, ...]}
DoubledSpace:    {"base_dim": n}
SystemCBundle:   system document plus {"j": <matrix>, "u": <reallinearop>}
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .ctransform import SystemCBundle, UTransform
from .doubling import DoubledSpace
from .errors import ShapeError
from .reallinear import RealLinearOp, as_matrix
from .system import QuantumSystem


def matrix_to_doc(m) -> dict:
    m = np.asarray(m, dtype=complex)
    flat = m.reshape(-1)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_doc(doc: dict) -> np.ndarray:
    rows, cols = int(doc["rows"]), int(doc["cols"])
    data = doc["data"]
    if len(data) != rows * cols:
        raise ShapeError(f"matrix document has {len(data)} entries, expected {rows * cols}")
    flat = np.array([complex(re, im) for re, im in data], dtype=complex)
    return np.array(as_matrix(flat.reshape(rows, cols)))


def op_to_doc(op: RealLinearOp) -> dict:
    return {"dim": op.dim, "linear": matrix_to_doc(op.linear), "antilinear": matrix_to_doc(op.antilinear)}


def op_from_doc(doc: dict) -> RealLinearOp:
    op = RealLinearOp(matrix_from_doc(doc["linear"]), matrix_from_doc(doc["antilinear"]))
    if op.dim != int(doc["dim"]):
        raise ShapeError(f"operator document dim {doc['dim']} does not match its matrices ({op.dim})")
    return op


def system_to_doc(sys: QuantumSystem) -> dict:
    return {
        "label": sys.label.value,
        "dim": sys.dim,
        "hamiltonian": matrix_to_doc(sys.hamiltonian),
        "energy_observable": matrix_to_doc(sys.energy_observable),
        "observables": [matrix_to_doc(o) for o in sys.observables],
    }


def system_from_doc(doc: dict) -> QuantumSystem:
    h = matrix_from_doc(doc["hamiltonian"])
    e = matrix_from_doc(doc["energy_observable"]) if "energy_observable" in doc else h
    sys = QuantumSystem(doc["label"], h, e, tuple(matrix_from_doc(o) for o in doc.get("observables", [])))
    if "dim" in doc and int(doc["dim"]) != sys.dim:
        raise ShapeError(f"system document dim {doc['dim']} does not match its matrices ({sys.dim})")
    return sys


def space_to_doc(space: DoubledSpace) -> dict:
    return {"base_dim": space.base_dim}


def space_from_doc(doc: dict) -> DoubledSpace:
    return DoubledSpace(int(doc["base_dim"]))


def bundle_to_doc(bundle: SystemCBundle) -> dict:
    doc = system_to_doc(bundle.system)
    doc["j"] = matrix_to_doc(bundle.j_matrix)
    doc["u"] = op_to_doc(bundle.u.u)
    return doc


def bundle_from_doc(doc: dict) -> SystemCBundle:
    sys = system_from_doc(doc)
    j = matrix_from_doc(doc["j"])
    space = DoubledSpace(sys.dim // 2)
    u = UTransform(space, op_from_doc(doc["u"]))
    return SystemCBundle(sys, sys.hamiltonian, sys.energy_observable, j, u)


def dump(doc: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2))


def load(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())
