"""JSON round trips for complexes and module references."""

import json

import numpy as np
import pytest

from homcat.algebras import preset
from homcat.complexes import cohomology_dims, stalk
from homcat.errors import ValidationError
from homcat.modules import projective_module, simple_module
from homcat.samples import random_complex
from homcat.serialize import complex_from_json, complex_to_json, module_from_json

L1 = preset("lambda1", 101)


def test_complex_round_trip_random():
    rng = np.random.default_rng(31)
    for _ in range(5):
        x = random_complex(L1, rng)
        data = json.loads(json.dumps(complex_to_json(x)))
        y = complex_from_json(data)
        assert y == x


def test_complex_round_trip_stalk():
    x = stalk(simple_module(L1, 2), 3)
    y = complex_from_json(complex_to_json(x))
    assert y == x
    assert cohomology_dims(y) == {3: 1}


def test_module_references():
    assert module_from_json(L1, "regular").dim == 6
    assert module_from_json(L1, "proj:1").dim == 2
    assert module_from_json(L1, "simple:0").dim == 1
    assert module_from_json(L1, "zero").dim == 0
    with pytest.raises(ValidationError):
        module_from_json(L1, "mystery:9000")


def test_from_json_revalidates():
    x = stalk(projective_module(L1, 0), 0)
    data = complex_to_json(x)
    # corrupt an action matrix: the unit no longer acts as the identity
    data["modules"][0]["action"][0][0][0] = 7
    with pytest.raises(ValidationError):
        complex_from_json(data)
