import json
import math
from fractions import Fraction

import pytest

sigtorus = pytest.importorskip("sigtorus")


def test_twist_constants():
    for k in (-2, 0, 3):
        link = sigtorus.Link.family("twist", k)
        assert link.colors == 2
        expected = (0, 1) if k == 0 else ((k > 0) - (k < 0), 0)
        for omega in (["1/4", "1/2"], [Fraction(2, 7), Fraction(5, 9)], "1/3,2/3"):
            assert sigtorus.signature_nullity(link, omega) == expected


def test_torus_node_and_oracle():
    link = sigtorus.Link.family("torus", 3)
    assert sigtorus.signature_nullity(link, ["1/6", "1/6"]) == (1, 1)
    for a, b in [("1/7", "2/7"), ("1/3", "1/2"), ("5/11", "9/13")]:
        assert sigtorus.signature_nullity(link, [a, b]) == sigtorus.oracle_torus(3, a, b)


def test_boundary_and_bad_angles_raise():
    link = sigtorus.Link.family("torus", 3)
    with pytest.raises(sigtorus.SigtorusError):
        sigtorus.signature_nullity(link, ["0", "1/2"])
    with pytest.raises(sigtorus.SigtorusError):
        sigtorus.signature_nullity(link, ["1/3"])
    with pytest.raises(sigtorus.SigtorusError):
        sigtorus.signature_nullity(link, ["one third", "1/2"])


def test_limits_and_slope():
    t6 = sigtorus.Link.family("torus", 3)
    assert sigtorus.directional_limit(t6, ["1/10"], "plus")["value"] == 2
    assert sigtorus.directional_limit(t6, ["1/10"], "minus")["value"] == -2
    value, s, eps = sigtorus.slope(sigtorus.Link.family("twist", 2), ["1/4"])
    assert math.isclose(value, 4.0, rel_tol=1e-12)
    assert (s, eps) == (1, 0)


def test_rho_and_inertia():
    assert [sigtorus.rho_ell([5], [f"{2 * k + 1}/10"]) for k in range(5)] == [4, 2, 0, -2, -4]
    assert sigtorus.tau_ell([3], ["1/3"]) == 1
    assert sigtorus.inertia([[1, 1j], [-1j, 1]]) == (1, 0, 1)


def test_verify_and_torres():
    reports = sigtorus.verify(sigtorus.Link.family("torus", 3), "all", samples=5, seed=2)
    assert reports and all(r["pass"] for r in reports)
    p = sigtorus.predict_torres(sigtorus.Link.family("torus", 3), ["1/10"])
    assert p["eta"] == 2 and p["lim_plus"] + p["lim_minus"] == 0


def test_json_round_trip(tmp_path):
    link = sigtorus.Link.family("torus", -2)
    text = link.to_json()
    again = sigtorus.Link.from_json(text)
    assert json.loads(again.to_json()) == json.loads(text)
    path = tmp_path / "t.json"
    path.write_text(text)
    loaded = sigtorus.Link.load(str(path))
    assert sigtorus.signature_nullity(loaded, ["1/5", "1/7"]) == sigtorus.signature_nullity(link, ["1/5", "1/7"])
    with pytest.raises(sigtorus.IoError):
        sigtorus.Link.load(str(tmp_path / "missing.json"))
