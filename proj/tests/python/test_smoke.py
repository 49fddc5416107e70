import json
import os
import subprocess
from fractions import Fraction
from itertools import product

import pytest

import schemegb


def hamming_labels(n):
    pts = list(product([0, 1], repeat=n))
    return [[sum(a != b for a, b in zip(x, y)) for y in pts] for x in pts]


def test_orbit_scheme():
    s = schemegb.Scheme.orbit(8, 3)
    assert (s.d, s.v) == (3, 8)
    assert s.valencies == [1, 4, 2, 1]
    assert s.intersection_number(1, 1, 2) == 4
    assert schemegb.multiplicative_orbits(9, 2) == [[0], [1, 2, 4, 5, 7, 8], [3, 6]]


def test_character_table_is_exact():
    t = schemegb.character_table(schemegb.Scheme.orbit(8, 3))
    assert t["rational"]
    P, Q = t["P"], t["Q"]
    assert all(isinstance(x, Fraction) for row in P for x in row)
    assert {tuple(r) for r in P} == {(1, 4, 2, 1), (1, -4, 2, 1), (1, 0, 0, -1), (1, 0, -2, 1)}
    for i in range(4):
        for j in range(4):
            assert sum(P[i][k] * Q[k][j] for k in range(4)) == (8 if i == j else 0)


def test_irrational_entries():
    t = schemegb.character_table(schemegb.Scheme.orbit(5, 4), digits=12)
    assert not t["rational"]
    x = t["P"][1][1]
    assert isinstance(x, schemegb.RealNumber)
    assert x.minimal_polynomial == [-1, 1, 1]
    lo, hi = x.interval
    assert lo < hi and lo * lo + lo - 1 < 0 < hi * hi + hi - 1
    assert abs(float(x) - 0.6180339887498949) < 1e-15
    assert t["multiplicities"] == [1, 2, 2]


def test_p_polynomial():
    yes = schemegb.check_p_polynomial(schemegb.Scheme.orbit(9, 2))
    assert yes["is_p_polynomial"] and yes["eliminant"] == [0, -18, -3, 1]
    no = schemegb.check_p_polynomial(schemegb.Scheme.orbit(8, 3))
    assert not no["is_p_polynomial"] and len(no["diagnostics"]) == 3
    h = schemegb.check_p_polynomial(schemegb.Scheme.from_relations(hamming_labels(3)))
    assert h["is_p_polynomial"] and len(h["eliminant"]) == 5


def test_express_and_generators():
    s = schemegb.Scheme.orbit(8, 3)
    assert schemegb.express(s, [1, 2]) == {3: "-x2 + 1/4*x1^2 - 1"}
    assert schemegb.minimal_generating_sets(s) == [[1, 2], [1, 3]]
    g = schemegb.find_generic_element(s, seed=1)
    assert len(g["eliminant"]) == 5 and g["coefficients"][3] == 1
    with pytest.raises(schemegb.NotExpressible):
        schemegb.express(s, [3])
    with pytest.raises(schemegb.AttemptsExhausted):
        schemegb.find_generic_element(s, max_attempts=0)


def test_errors():
    with pytest.raises(schemegb.SchemeError):
        schemegb.Scheme.orbit(9, 3)
    with pytest.raises(schemegb.SchemeError):
        schemegb.Scheme.from_relations([[0, 1, 2], [2, 0, 1], [1, 2, 0]])
    with pytest.raises(schemegb.ParseError):
        schemegb.Scheme.from_spec("{")
    assert issubclass(schemegb.SchemeError, schemegb.Error)


@pytest.mark.skipif("SCHEMEGB_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_agrees_with_module():
    spec = json.dumps({"type": "orbit", "m": 9, "r": 2})
    out = subprocess.run([os.environ["SCHEMEGB_CLI"], "chartab", "-", "--format", "json"],
                         input=spec, capture_output=True, text=True, check=True).stdout
    P = [[Fraction(x) for x in row] for row in json.loads(out)["P"]]
    assert P == schemegb.character_table(schemegb.Scheme.orbit(9, 2))["P"]
