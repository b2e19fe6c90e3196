import pathlib

import numpy as np
import pytest

STATES_DIR = pathlib.Path(__file__).resolve().parent.parent / "states"


@pytest.fixture(scope="session")
def states_dir():
    return STATES_DIR


def rel_err(value, reference):
    """Relative error against a reference, absolute when reference ~ 0."""
    diff = abs(value - reference)
    scale = abs(reference)
    return diff if scale < 1e-12 else diff / scale


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
