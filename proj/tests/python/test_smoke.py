import math

import pytest

import blochlab


def test_constants():
    c = blochlab.constant_set()
    assert abs(c.c1 - 2.6920443647335008) < 1e-12
    assert abs(c.c2 - (2 * c.c1 + 1 / 3)) < 1e-12
    assert abs(c.c3 - (c.c1 + 1)) < 1e-12
    assert c.theorem_a_constant == 3.31

    r_star, c1 = blochlab.minimize_psi(1e-10)
    oracle = math.sqrt((-28 + math.sqrt(820)) / 2)
    assert abs(r_star - oracle) < 1e-9
    assert abs(c1 - c.c1) < 1e-12
    assert blochlab.psi(r_star) == pytest.approx(c1)


def test_metric():
    z, w = 0.3 + 0j, 0.5j
    rho = blochlab.pseudo_distance(z, w)
    assert rho == pytest.approx(math.sqrt(0.34 / 1.0225), abs=1e-15)
    assert blochlab.one_minus_rho_sq(z, w) == pytest.approx(1 - rho * rho, abs=1e-12)
    # involution
    back = blochlab.mobius_apply(w, blochlab.mobius_apply(w, z))
    assert abs(back - z) < 1e-14
    assert abs(blochlab.mobius_derivative(0.5 + 0j, -0.5 + 0j) - (-0.48)) < 1e-15


def test_seminorms():
    z_squared = blochlab.polynomial([0j, 0j, 1 + 0j])
    est = blochlab.bloch_seminorm(z_squared)
    assert est.value == pytest.approx(4 / (3 * math.sqrt(3)), abs=1e-8)
    assert est.grid_value <= est.value

    lf = blochlab.HarmonicMap.log_fixture()
    val = blochlab.harmonic_bloch_seminorm(lf).value
    assert 1.99 <= val <= 2.0

    shear = blochlab.HarmonicMap(
        blochlab.polynomial([0j, 1 + 0j]), blochlab.polynomial([0j, 0.5 + 0j])
    )
    assert blochlab.harmonic_bloch_seminorm(shear).value == pytest.approx(1.5, abs=1e-9)
    assert blochlab.bloch_type_seminorm(shear).value == pytest.approx(
        math.sqrt(0.75), abs=1e-9
    )
    assert blochlab.quasiregularity_constant(shear) == pytest.approx(3.0, abs=1e-9)

    b = shear.bundle_at(0.2 + 0.1j)
    assert b.big_lambda == pytest.approx(1.5, abs=1e-14)
    assert b.jacobian == pytest.approx(0.75, abs=1e-14)


def test_map_json_round_trip():
    f = blochlab.HarmonicMap(
        blochlab.gen_polynomial(5, 4), blochlab.gen_polynomial(6, 4)
    )
    back = blochlab.harmonic_map_from_json(f.to_json())
    for z in (0.1 + 0.2j, -0.5 + 0.3j):
        assert abs(f.eval(z) - back.eval(z)) < 1e-15


def test_campaign():
    rep = blochlab.run_campaign("theorem1", seed=7, n_trials=150, threads=1)
    assert rep.campaign_name == "theorem1"
    assert rep.n_trials == 150
    assert rep.n_violations == 0
    assert rep.n_errors == 0
    assert 0 < rep.max_quotient < 1
    assert rep.max_quotient_raw == pytest.approx(rep.max_quotient * rep.bound, rel=1e-12)

    again = blochlab.run_campaign("theorem1", seed=7, n_trials=150, threads=4)
    assert rep.to_json() == again.to_json()

    with pytest.raises(ValueError):
        blochlab.run_campaign("theorem9", seed=1, n_trials=10)


def test_quasiregular_generator():
    f, K = blochlab.gen_quasiregular(77, 4, 0.5)
    assert K == pytest.approx(3.0, abs=1e-14)
    for z in (0j, 0.5 + 0.2j, -0.7j):
        assert f.bundle_at(z).jacobian > 0
    assert blochlab.quasiregularity_constant(f) <= K + 1e-6


def test_witness():
    q, ref = blochlab.non_lipschitz_witness(0.99, 1e-4)
    assert ref == pytest.approx(100.0, abs=1e-12)
    assert q >= 0.9 * ref


def test_displacement_pair():
    lhs, rhs = blochlab.lemma23_pair(blochlab.log_fixture(), 0j, 1 / 3 + 0j, 2.0)
    assert lhs == pytest.approx(2 / 3, abs=1e-12)
    assert rhs == pytest.approx(blochlab.constant_set().c1 * 2 / 3, abs=1e-12)

    lo, hi = blochlab.log_displacement_inequality(1 / 3)
    assert lo == pytest.approx(8 / 9 * math.log(2), abs=1e-14)
    assert hi == pytest.approx(2 / 3, abs=1e-14)
