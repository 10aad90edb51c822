import math

import pytest
from hypothesis import given, strategies as st

from dirac_rdi.units import (CODATA_2018, SIParameters, ScaledParameters, cyclotron_omega,
                             intensity_from_field, laser_omega, nondimensionalize, to_si)

# independent literals for the oracles below
C, H, E, ME, EPS0 = 299792458.0, 6.62607015e-34, 1.602176634e-19, 9.1093837015e-31, 8.8541878128e-12
HBAR = H / (2 * math.pi)


def test_pinned_constants():
    k = CODATA_2018
    assert (k.c, k.h, k.e, k.m_e, k.epsilon_0) == (C, H, E, ME, EPS0)
    assert k.alpha == 7.2973525693e-3
    assert k.critical_B == pytest.approx(4.414005e9, rel=1e-6)
    assert k.length_unit == pytest.approx(3.8615926796e-13, rel=1e-9)
    assert k.table()["source"] == "CODATA 2018"


def test_first_scenario_groups():
    s = nondimensionalize(SIParameters(omega=0.5e9, B=0.35, a1=1e-6, a2=2e-6))
    assert s.beta1 == pytest.approx(1e-6 * 0.5e9 / C, rel=1e-15)
    assert s.beta1 == pytest.approx(1.6678e-6, rel=1e-4)
    assert s.beta2 == pytest.approx(2 * s.beta1, rel=1e-15)
    assert s.b == pytest.approx(E * 0.35 / (ME * 0.5e9), rel=1e-15)
    assert s.mu == pytest.approx(ME * C * C / (HBAR * 0.5e9), rel=1e-15)
    # internal values
    assert s.eB == pytest.approx(0.35 / (ME * ME * C * C / (E * HBAR)), rel=1e-13)
    assert s.a1 == pytest.approx(1e-6 / (HBAR / (ME * C)), rel=1e-13)
    assert s.omega == pytest.approx(0.5e9 * HBAR / (ME * C * C), rel=1e-13)


def test_second_scenario_frequencies():
    w_cyc = cyclotron_omega(0.13)
    w_laser = laser_omega(800e-9)
    assert w_cyc == pytest.approx(E * 0.13 / ME, rel=1e-15)
    assert w_cyc == pytest.approx(2.2865e10, rel=1e-4)
    assert w_laser == pytest.approx(2 * math.pi * C / 800e-9, rel=1e-15)
    # the quoted 2.35 per femtosecond is the laser value, not eB/m
    assert w_laser / 1e15 == pytest.approx(2.35, rel=3e-3)
    s = nondimensionalize(SIParameters(omega=w_laser, B=0.13, a0=3.24))
    assert s.a0_tilde == pytest.approx(E * 3.24 / (ME * w_laser), rel=1e-15)
    assert s.a0_tilde == pytest.approx(2.42e-4, rel=1e-2)


def test_intensity_from_amplitude():
    expected = EPS0 * C * (3.24 * C) ** 2 / 1e4
    assert intensity_from_field(3.24) == pytest.approx(expected, rel=1e-15)
    assert 1e11 < intensity_from_field(3.24) < 1e12


pos = st.floats(1e-3, 1e3)


@given(st.floats(1e6, 1e18), pos, pos, pos, pos)
def test_round_trip(omega, B, a1, a2, a0):
    si = SIParameters(omega=omega, B=B, a1=a1 * 1e-6, a2=a2 * 1e-6, a0=a0)
    back = to_si(nondimensionalize(si))
    for name in ("omega", "B", "a1", "a2", "a0"):
        assert getattr(back, name) == pytest.approx(getattr(si, name), rel=1e-12)


def test_missing_entries_stay_missing():
    s = nondimensionalize(SIParameters(omega=1e9, B=0.1))
    assert s.beta1 is None and s.a1 is None and s.ea0 is None
    d = s.to_dict()
    assert d["a0_tilde"] is None and d["eB_internal"] == s.eB
    assert isinstance(s, ScaledParameters)
