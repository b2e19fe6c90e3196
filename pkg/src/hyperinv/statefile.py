"""JSON state and operator files.

Complex scalars are stored as explicit [re, im] pairs.  Density files
carry the matrix as nested rows; pure files carry a flat amplitude list
in row-major order of ``dims``.
"""

from __future__ import annotations

import json

import numpy as np

from .bloch import DensityState, PureState
from .errors import ValidationError

FILE_HERMITIAN_TOL = 1e-8


def _decode_complex(pair, where):
    if (
        not isinstance(pair, (list, tuple))
        or len(pair) != 2
        or not all(isinstance(x, (int, float)) for x in pair)
    ):
        raise ValidationError(f"{where}: expected a [re, im] pair, got {pair!r}")
    return complex(pair[0], pair[1])


def _encode_complex(z):
    return [float(np.real(z)), float(np.imag(z))]


def load_state(path):
    """Load a density or pure state, validating dimensional consistency."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read state file {path}: {exc}") from exc
    return state_from_dict(doc, where=str(path))


def state_from_dict(doc, where="state"):
    if not isinstance(doc, dict):
        raise ValidationError(f"{where}: expected a JSON object")
    kind = doc.get("kind")
    dims = doc.get("dims")
    if not isinstance(dims, list) or not all(
        isinstance(d, int) and d >= 1 for d in dims
    ):
        raise ValidationError(f"{where}: 'dims' must be a list of positive integers")
    dims = tuple(dims)
    D = int(np.prod(dims))
    if kind == "density":
        rows = doc.get("matrix")
        if not isinstance(rows, list) or len(rows) != D:
            raise ValidationError(f"{where}: 'matrix' must have {D} rows")
        mat = np.empty((D, D), dtype=np.complex128)
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != D:
                raise ValidationError(f"{where}: matrix row {i} must have {D} entries")
            for j, pair in enumerate(row):
                mat[i, j] = _decode_complex(pair, f"{where}: matrix[{i}][{j}]")
        if np.max(np.abs(mat - mat.conj().T)) > FILE_HERMITIAN_TOL:
            raise ValidationError(f"{where}: density matrix is not Hermitian")
        # symmetrize the residual so downstream real-coefficient checks hold
        mat = 0.5 * (mat + mat.conj().T)
        return DensityState(dims, mat)
    if kind == "pure":
        amps = doc.get("amplitudes")
        if not isinstance(amps, list) or len(amps) != D:
            raise ValidationError(f"{where}: 'amplitudes' must have {D} entries")
        vec = np.array(
            [_decode_complex(p, f"{where}: amplitudes[{i}]") for i, p in enumerate(amps)]
        )
        return PureState(dims, vec.reshape(dims))
    raise ValidationError(f"{where}: 'kind' must be 'density' or 'pure'")


def state_to_dict(state):
    if isinstance(state, DensityState):
        return {
            "kind": "density",
            "dims": list(state.dims),
            "matrix": [[_encode_complex(z) for z in row] for row in state.matrix],
        }
    if isinstance(state, PureState):
        return {
            "kind": "pure",
            "dims": list(state.dims),
            "amplitudes": [_encode_complex(z) for z in state.amplitudes.entries],
        }
    raise ValidationError(f"cannot serialize {type(state).__name__}")


def save_state(state, path):
    with open(path, "w") as fh:
        json.dump(state_to_dict(state), fh, indent=1)
        fh.write("\n")


def operator_to_dict(kind, matrix):
    matrix = np.asarray(matrix, dtype=np.complex128)
    return {
        "kind": kind,
        "dim": int(matrix.shape[0]),
        "matrix": [[_encode_complex(z) for z in row] for row in matrix],
    }


def save_operator(kind, matrix, path):
    with open(path, "w") as fh:
        json.dump(operator_to_dict(kind, matrix), fh, indent=1)
        fh.write("\n")


def fingerprint_to_dict(fp):
    return {
        "kind": fp.kind,
        "dims": list(fp.dims),
        "convention": fp.convention,
        "entries": [
            {
                "name": e.name,
                "value": _encode_complex(e.value),
                "constant": e.constant,
                "guaranteed": e.guaranteed,
            }
            for e in fp.entries
        ],
    }


def fingerprint_to_csv(fp):
    lines = ["name,real,imag,constant,guaranteed"]
    for e in fp.entries:
        lines.append(
            f"{e.name},{np.real(e.value):.17g},{np.imag(e.value):.17g},"
            f"{int(e.constant)},{int(e.guaranteed)}"
        )
    return "\n".join(lines) + "\n"
