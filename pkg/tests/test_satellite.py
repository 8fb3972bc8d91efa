import pytest
from hypothesis import given
from hypothesis import strategies as st

from alexcert.braid import PositiveBraidWord as W, torus_word
from alexcert.laurent import ONE, U, ZERO, HalfLaurent, summarize
from alexcert.satellite import (
    SatellitePattern,
    cable_pattern,
    is_knot_poly,
    krishna_check,
    obstruction,
    satellite_poly,
)

from conftest import T


@st.composite
def knot_polys(draw, min_degree=1):
    """Symmetric integral polynomials with Delta(1) = 1 and nonzero top coefficient."""
    d = draw(st.integers(min_degree, 4))
    cs = draw(st.lists(st.integers(-4, 4), min_size=d, max_size=d))
    if cs[-1] == 0:
        cs[-1] = 1
    terms = {}
    for i, c in enumerate(cs, start=1):
        terms[2 * i] = c
        terms[-2 * i] = c
    terms[0] = 1 - 2 * sum(cs)
    return HalfLaurent(terms)


@st.composite
def pattern_polys(draw):
    half = draw(st.booleans())
    d = draw(st.integers(0, 3))
    cs = draw(st.lists(st.integers(-3, 3), min_size=d + 1, max_size=d + 1))
    if cs[-1] == 0:
        cs[-1] = draw(st.sampled_from([-2, -1, 1, 2]))
    terms = {}
    if half:
        for i, c in enumerate(cs):
            terms[2 * i + 1] = c
            terms[-(2 * i + 1)] = -c
    else:
        for i, c in enumerate(cs):
            terms[2 * i] = c
            terms[-2 * i] = c
    return HalfLaurent(terms)


def test_satellite_poly_examples():
    assert satellite_poly(SatellitePattern(2, ONE), T("t - 1 + t^-1")) == T("t^2 - 1 + t^-2")
    assert satellite_poly(SatellitePattern(3, U), ONE) == U
    k = T("t - 1 + t^-1")
    assert satellite_poly(SatellitePattern(1, U), k) == k * U


def test_obstruction_examples():
    v = obstruction(cable_pattern(2))
    assert v.fires and v.label == "NOT_IN_P"
    assert not obstruction(SatellitePattern(1, ONE)).fires
    v = obstruction(SatellitePattern(3, U))
    assert v.winding_ok and not v.sign_ok and not v.fires
    v = obstruction(SatellitePattern(2, ZERO))
    assert v.fires and v.zero_pattern
    assert obstruction(SatellitePattern(-2, ONE)).fires


def test_cable_pattern():
    assert cable_pattern(2) == SatellitePattern(2, ONE)
    assert cable_pattern(5) == SatellitePattern(5, ONE)
    with pytest.raises(ValueError):
        cable_pattern(1)


def test_pattern_must_be_conway():
    with pytest.raises(ValueError):
        SatellitePattern(2, T("t + 1 - t^-1"))


def test_krishna_examples():
    r = krishna_check(2, W(2, (1, 1, 1)))
    assert r.cable_poly == T("t^2 - 1 + t^-2") and r.beta == 0 and r.ok
    r = krishna_check(3, W(2, (1, 1, 1)))
    assert r.cable_poly == T("t^3 - 1 + t^-3") and r.ok
    r = krishna_check(2, torus_word(3, 4))
    assert r.cable_poly == T("t^6 - t^4 + 1 - t^-4 + t^-6") and r.ok
    with pytest.raises(ValueError):
        krishna_check(2, W(2, (1, 1)))


@given(knot_polys(), pattern_polys(), st.integers(2, 5), st.booleans())
def test_coefficient_transfer(k, p, w, neg):
    w = -w if neg else w
    sat = satellite_poly(SatellitePattern(w, p), k)
    sk, sp, ss = summarize(k), summarize(p), summarize(sat)
    assert ss.alpha == sk.alpha * sp.alpha
    assert ss.beta == sk.alpha * sp.beta
    if obstruction(SatellitePattern(w, p)).fires:
        assert ss.alpha * ss.beta >= 0


@given(knot_polys(), st.integers(2, 6))
def test_cables_have_zero_beta(k, n):
    assert is_knot_poly(k)
    assert summarize(satellite_poly(cable_pattern(n), k)).beta == 0
