"""Paley graphs, the switching pipeline, and duplicated-vertex graphs."""

import math

import numpy as np
import pytest

from huckel.bounds import upper_bound_order_even
from huckel.constructions import (
    ConstructionError,
    build_extremal_srg,
    build_remark_graph,
    build_switched_srg,
    conference_he_closed_form,
    paley_graph,
    remark_cubic,
    verify_remark_spectrum,
)
from huckel.graphs import Graph, complement, write_graph6
from huckel.spectra import eigenvalues, energy_values
from huckel.srg import srg_params


def test_paley_5_is_pentagon():
    g = paley_graph(5)
    assert g == Graph.cycle(5)
    assert write_graph6(g) == "Dhc"


def test_paley_9():
    g = paley_graph(9, adjacency="nonsquare")
    assert srg_params(g).as_tuple() == (9, 4, 1, 2)
    # Squares and nonsquares give complementary graphs of the same kind.
    assert complement(g) == paley_graph(9, adjacency="square")
    assert srg_params(paley_graph(9)).as_tuple() == (9, 4, 1, 2)


def test_paley_13():
    assert srg_params(paley_graph(13)).as_tuple() == (13, 6, 2, 3)


def test_paley_errors():
    with pytest.raises(ConstructionError, match="not 1 mod 4"):
        paley_graph(7)
    with pytest.raises(ConstructionError, match="not a prime power"):
        paley_graph(33)
    with pytest.raises(ValueError, match="adjacency"):
        paley_graph(5, adjacency="both")


@pytest.mark.parametrize("t", [1, 2, 3])
def test_switching_pipeline(t):
    n = 4 * t * t + 4 * t + 2
    sw = build_switched_srg(t)
    assert sw.n == n
    assert srg_params(sw).as_tuple() == (n, 2 * t * t + t, t * t - 1, t * t)
    ext = build_extremal_srg(t)
    assert srg_params(ext).as_tuple() == (n, 2 * t * t + 3 * t + 1, t * t + 2 * t, t * t + 2 * t + 1)
    assert ext == complement(sw)


def test_switched_graph_deterministic():
    assert write_graph6(build_switched_srg(1)) == "ICOcYgww?"


def test_extremal_he_attains_order_bound():
    for t in (1, 2):
        ext = build_extremal_srg(t)
        he = energy_values(eigenvalues(ext)).huckel
        assert he == pytest.approx(upper_bound_order_even(ext.n), abs=1e-8)


def test_switched_family_needs_prime_power():
    # t=7 gives q=15, not a prime power.
    with pytest.raises(ConstructionError, match="prime power"):
        build_switched_srg(7)
    with pytest.raises(ValueError):
        build_switched_srg(0)


@pytest.mark.parametrize(
    "t,roots",
    [
        (1, (6.574234249637456, 1.2793215138220404, -2.853555763458715)),
        (2, (15.569658864896725, 2.7047126832643524, -4.274371548160913)),
    ],
)
def test_remark_cubic(t, roots):
    coeffs, got = remark_cubic(t)
    assert coeffs[0] == 1.0
    if t == 1:
        assert coeffs == (1.0, -5.0, -14.0, 24.0)
    assert got == pytest.approx(roots, abs=1e-9)
    # Cross-check bisection against the numpy companion-matrix solver.
    np_roots = sorted(np.roots(coeffs).real, reverse=True)
    assert got == pytest.approx(np_roots, abs=1e-8)
    # Vieta: root sum and product match the coefficients.
    assert sum(got) == pytest.approx(-coeffs[1], abs=1e-8)
    assert got[0] * got[1] * got[2] == pytest.approx(-coeffs[3], abs=1e-8)


@pytest.mark.parametrize("t", [1, 2])
def test_remark_graph_spectrum(t):
    h = build_remark_graph(t)
    assert h.n == 4 * t * t + 4 * t + 3
    report = verify_remark_spectrum(h, t)
    assert report.matches
    assert report.max_deviation <= 1e-6
    assert len(report.expected) == h.n
    assert report.cubic_roots[2] < -math.sqrt(2.0) * t
    # HE exceeds the additive estimate 2(2t^2+2t)(t+1)... by a sqrt(2)t margin.
    he = energy_values(eigenvalues(h)).huckel
    closed = 4.0 * t ** 3 + 8.0 * t * t + 4.0 * t - 2.0 * report.cubic_roots[2]
    assert he == pytest.approx(closed, abs=1e-8)
    estimate = 2.0 * (2 * t * t + 2 * t) * (t + 1) + 2.0 * math.sqrt(2.0) * t
    assert he > estimate


def test_remark_spectrum_wrong_order():
    with pytest.raises(ValueError, match="vertices"):
        verify_remark_spectrum(Graph.complete(5), 1)


def test_remark_known_he():
    h = build_remark_graph(1)
    he = energy_values(eigenvalues(h)).huckel
    assert he == pytest.approx(21.707111526918, abs=1e-8)


def test_conference_closed_form_disagrees_with_spectrum():
    for t, q in ((1, 5), (2, 9), (3, 13)):
        g = paley_graph(q)
        he = energy_values(eigenvalues(g)).huckel
        computed = 4.0 * t + (4.0 * t - 1.0) * (math.sqrt(4.0 * t + 1.0) - 1.0) / 2.0
        stated = conference_he_closed_form(t)
        assert he == pytest.approx(computed, abs=1e-8)
        assert abs(stated - computed) > 1e-3  # genuinely different values
    with pytest.raises(ValueError):
        conference_he_closed_form(0)
