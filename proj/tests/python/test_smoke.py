"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import pfgeom


def test_contact_form_is_nowhere_integrable():
    spec = pfgeom.CovectorFieldSpec.contact()
    metric = pfgeom.MetricSpec.euclidean(3)
    report = pfgeom.integrability_class_at_point(spec, metric, np.array([0.1, 0.4, -0.2]))
    assert report.pair_count == 1
    assert report.degree_of_integrability == 1
    assert not report.completely_integrable

    grid = pfgeom.GridSpec(np.zeros(3), 0.5 * np.ones(3), 5)
    region = pfgeom.classify_region(spec, metric, grid)
    assert region.histogram == {1: 125}


def test_sphere_curvature_and_frame():
    spec = pfgeom.CovectorFieldSpec.exact_sphere(3)
    metric = pfgeom.MetricSpec.euclidean(3)
    x = np.array([0.0, 0.0, 2.0])

    geom = pfgeom.differential_split(spec, metric, x)
    assert np.allclose(geom.n_cov, [0, 0, 1])
    assert np.max(np.abs(geom.antisym)) < 1e-14

    report = pfgeom.curvature_report_at(spec, metric, x)
    assert report.classification == "umbilic"
    assert np.allclose(report.principal, [0.5, 0.5], atol=1e-8)
    assert math.isclose(report.gaussian_curvature, 0.25, rel_tol=1e-8)


def test_geodesic_integration_round_trip():
    spec = pfgeom.CovectorFieldSpec.exact_sphere(3)
    metric = pfgeom.MetricSpec.euclidean(3)
    settings = pfgeom.IntegratorSettings()
    settings.steps = 3142
    settings.step = math.pi / 3142.0
    traj = pfgeom.integrate(spec, metric, "geodesic", np.array([1.0, 0.0, 0.0]),
                            np.array([0.0, 1.0, 0.0]), 0.0, settings)
    assert traj.status == "ok"
    assert traj.samples == 3143
    endpoint = traj.positions()[-1]
    assert np.linalg.norm(endpoint - np.array([-1.0, 0.0, 0.0])) < 1e-5
    assert traj.max_drift() < 1e-7

    csv = traj.to_csv()
    assert csv.splitlines()[0] == "s,x0,x1,x2,v0,v1,v2,lambda,drift,speed"


def test_lorentz_equivalence():
    v_perp = 0.01
    gamma = 1.0 / math.sqrt(1.0 - v_perp * v_perp)
    pot = pfgeom.em.FourPotentialSpec.uniform_B(1.0)
    settings = pfgeom.IntegratorSettings()
    settings.steps = 2000
    settings.step = 1e-3
    x0 = np.zeros(4)
    v0 = np.array([gamma, gamma * v_perp, 0.0, 0.0])

    lorentz = pfgeom.em.lorentz_integrate(pot, x0, v0, settings)
    geodesic = pfgeom.em.constrained_geodesic_em(pot, x0, v0, settings)
    max_dist, rms = pfgeom.em.trajectory_compare(geodesic, lorentz)
    assert max_dist < 1e-8
    assert geodesic.lambdas()[0] == pytest.approx(-1.0)


def test_em_degrees():
    grid = pfgeom.GridSpec(np.zeros(4), 0.3 * np.ones(4), 3)
    assert pfgeom.em.em_integrability_report(
        pfgeom.em.FourPotentialSpec.uniform_B(1.0), grid).degree == 3
    assert pfgeom.em.em_integrability_report(
        pfgeom.em.FourPotentialSpec.crossed_EB(1.0, 1.0), grid).degree == 2


def test_errors_surface_as_exceptions():
    spec = pfgeom.CovectorFieldSpec.exact_sphere(3)
    metric = pfgeom.MetricSpec.euclidean(3)
    with pytest.raises(pfgeom.Error, match="ZeroForm"):
        pfgeom.differential_split(spec, metric, np.zeros(3))
