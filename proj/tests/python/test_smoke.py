from fractions import Fraction

import pytest

import lefschetz as lz


def togliatti():
    return lz.Ideal(["x^3", "y^3", "z^3", "xyz"])


def test_ideal_basics():
    I = togliatti()
    assert (I.n, I.degree, I.r) == (2, 3, 4)
    assert I.variables == ["x", "y", "z"]
    assert I.is_monomial
    assert lz.is_artinian(I)
    assert lz.h_vector(I) == [1, 3, 6, 6, 3]
    assert lz.Ideal.from_json(I.to_json()).generators == I.generators


def test_wlp_and_togliatti():
    verdict = lz.has_wlp(togliatti())
    assert not verdict["has_wlp"]
    assert verdict["failure_degrees"] == [2]
    assert lz.fails_in_degree_dminus1(togliatti())
    assert lz.is_togliatti(togliatti())

    control = lz.has_wlp(lz.Ideal(["x^3", "y^3", "z^3", "x^2y"]))
    assert control["has_wlp"]
    assert control["h_vector"] == [1, 3, 6, 6, 4, 1]


def test_geometry():
    I = togliatti()
    assert sorted(lz.apolar_system(I)) == sorted(["x^2*y", "x*y^2", "x^2*z", "x*z^2", "y^2*z", "y*z^2"])
    osc = lz.osculating_dimension(I, 2)
    assert osc["actual_dim"] == 4 and osc["delta"] == 1
    assert lz.splitting_type(I) == [-2, -1, 0]
    p = lz.polytope(I)
    assert p["smooth"] and p["normalized_volume"] == 6


def test_examples_and_classification():
    assert "case-1" in lz.named_examples()
    case4 = lz.Ideal.example("case-4")
    assert lz.perkinson_quadric(case4) == "a*b"
    record = lz.certify(lz.Ideal.example("case-1"))
    assert record["togliatti"]
    result = lz.classify(2)
    assert len(result["records"]) == 1


def test_rank():
    assert lz.rank([[1, 2], [2, 4]]) == 1
    assert lz.rank([[Fraction(1, 2), 1], [1, "3/4"]]) == 2
    assert lz.rank([]) == 0


def test_errors():
    with pytest.raises(lz.ParseError):
        lz.Ideal(["x^3", "y^2"])
    with pytest.raises(ValueError):
        lz.Ideal(["x^3 + q"])
    with pytest.raises(lz.PreconditionError):
        lz.polytope(lz.Ideal(["x^3 + y^3", "z^3"]))
    with pytest.raises(lz.NotArtinianError):
        lz.has_wlp(lz.Ideal(["x^3", "y^3"]))
