"""Smoke tests for the python bindings: a few pinned values per module."""

import math

import pytest

import spinor3 as s3


def test_xi_from_pseudo_pinned():
    xi = s3.xi_from_pseudo(s3.PseudoVectorState(3, 0, 4))
    assert xi.c1 == pytest.approx(3.0)
    assert xi.c2 == pytest.approx(1.0)

    axis = s3.xi_from_pseudo(s3.PseudoVectorState(0, 0, 2))
    assert axis.c1 == pytest.approx(2.0)
    assert abs(axis.c2) == 0.0


def test_round_trip():
    a, v = s3.pseudo_from_xi(s3.xi_from_pseudo(s3.PseudoVectorState(0.3, -1.2, 0.7)))
    assert a == pytest.approx(math.sqrt(0.3**2 + 1.2**2 + 0.7**2))
    assert v.x == pytest.approx(0.3)
    assert v.y == pytest.approx(-1.2)
    assert v.z == pytest.approx(0.7)


def test_eta_and_map():
    eta = s3.eta_from_proper(s3.Vec3(1, 0, 0))
    assert eta.c1 == pytest.approx(0.0)
    assert eta.c2 == pytest.approx(math.sqrt(2.0))

    via_map = s3.xi_to_eta(s3.xi_from_pseudo(s3.PseudoVectorState(1, 0, 0)))
    assert s3.spinor_dist(via_map, eta) < 1e-14

    back = s3.eta_to_xi(eta)
    assert back.c1 == pytest.approx(1.0)
    assert back.c2 == pytest.approx(1.0)


def test_group_action():
    z_half_turn = s3.GroupElement(0.0, s3.Vec3(0, 0, 1))
    b = s3.su2_matrix(z_half_turn)
    assert b[0][0] == pytest.approx(-1j)
    assert b[1][1] == pytest.approx(1j)
    rotated = s3.act_on_vector(z_half_turn, s3.Vec3(1, 0, 0))
    assert rotated.x == pytest.approx(-1.0)


def test_region_and_errors():
    assert s3.classify_region(s3.PseudoVectorState(0, 0, 1)) == s3.RegionTag.AxisPlus
    assert s3.classify_region(s3.PseudoVectorState(1, 0, 0)) == s3.RegionTag.Cut
    with pytest.raises(ArithmeticError):
        s3.grad_xi(s3.PseudoVectorState(0, 0, 1))


def test_chart_metric_and_field():
    p = s3.ChartPoint(s3.ChartId.CylindricalParabolic, 1, 1, 5, s3.DomainVariant.ExtendedG)
    g = s3.metric(p)
    assert g[0][0] == pytest.approx(2.0)
    assert g[2][2] == pytest.approx(1.0)

    sph = s3.ChartPoint(s3.ChartId.Spherical, 1, math.pi / 2, 0, s3.DomainVariant.ExtendedG)
    xi = s3.xi_in_chart(sph)
    assert xi.c1 == pytest.approx(1.0)
    assert xi.c2 == pytest.approx(1.0)

    flipped = s3.xi_in_chart(s3.antipode(p))
    assert s3.spinor_dist(flipped, -s3.xi_in_chart(p)) < 1e-12


def test_transport_circle():
    n = 64
    pts = [
        s3.Vec3(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n), 0.0)
        for i in range(n)
    ]
    r = s3.transport_spinor(s3.Path(pts, closed=True), s3.Model.Xi)
    assert r.winding == 1
    assert r.sign_flip
    assert r.final.c1 == pytest.approx(-1.0, abs=1e-9)


def test_check_suite():
    results = s3.run_check_suite("map")
    assert results and all(r.ok for r in results)
