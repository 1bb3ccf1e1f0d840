import math

import pytest

import cylqd


def test_bessel_values():
    assert cylqd.bessel_j(0, 0.0) == 1.0
    assert cylqd.bessel_j(1, 1.0) == pytest.approx(0.44005058574493355, rel=1e-14)
    assert cylqd.bessel_k(0, 1.0) == pytest.approx(0.42102443824070834, rel=1e-14)
    assert cylqd.bessel_j(0, cylqd.bessel_j_zero(0, 1)) == pytest.approx(0.0, abs=1e-14)


def test_default_spectrum():
    rows = cylqd.solve()
    assert len(rows) == 30
    ground = rows[0]
    assert (ground["m"], ground["k"], ground["kz"]) == (0, 1, 1)
    assert ground["E_meV"] == pytest.approx(48.8886, abs=1e-4)
    for r in rows:
        assert r["E2_meV"] >= r["E_meV"]
        assert r["E1_meV"] >= r["E2_meV"] - 1e-4


def test_zero_field_has_no_shift():
    for r in cylqd.solve(field_kOe=0.0, levels_per_m=2):
        assert r["E1_meV"] == r["E_meV"] == r["E2_meV"]


def test_corrections_scale_quadratically():
    g = cylqd.WellGeometry.from_lab_units(2.75, 4.0, 1.0)
    s = cylqd.enumerate_states(g, 1, 3)[1][0]
    ms = cylqd.compute_moments(s, g, "avg")
    c1, c2 = cylqd.circular_correction(ms, 50.0), cylqd.circular_correction(ms, 100.0)
    e1, e2 = cylqd.elliptic_correction(ms, 50.0), cylqd.elliptic_correction(ms, 100.0)
    assert c2 / c1 == pytest.approx(4.0, rel=1e-12)
    assert e2 / e1 == pytest.approx(4.0, rel=1e-12)
    assert e2 <= c2
    assert ms.shifted_z(7.0).var_z == pytest.approx(ms.var_z, rel=1e-12)


def test_levels_lie_below_barrier():
    g = cylqd.WellGeometry.from_lab_units(2.75, 4.0, 1.0)
    levels = cylqd.solve_radial_levels(0, g)
    assert levels == sorted(levels)
    assert all(0.0 < e < g.barrier for e in levels)
    assert math.isclose(cylqd.axial_energy(2, g) / cylqd.axial_energy(1, g), 4.0)


def test_errors_are_exceptions():
    with pytest.raises(cylqd.ConfigError):
        cylqd.solve(radius=3.0)
    with pytest.raises(ValueError):
        cylqd.solve(levels_per_m=0)


def test_reference_audit_ordering():
    audit = cylqd.audit_reference_table()
    assert audit["ordering_ok"]
    assert "Discrepancies" in audit["report"]
