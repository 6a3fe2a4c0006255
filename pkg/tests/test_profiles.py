"""Profile construction: analytic derivatives, supports, scalings."""

import math

import numpy as np
import pytest

from rellich import (
    Profile1D,
    bump,
    bump_corpus,
    check_derivatives,
    log_squeezed,
    plateau_profile,
    radial_power_bump,
)
from rellich.profiles import arg_scaled, translated


@pytest.mark.parametrize(
    "profile",
    [
        bump(0.25, 0.5),
        bump(-3.0, 7.0),
        plateau_profile(50.0),
        log_squeezed(bump(0.25, 0.5), 0.1),
        translated(bump(0, 1), 4.0),
        arg_scaled(bump(1, 2), 2.0),
        radial_power_bump(1.5, 2.0),
    ],
)
def test_derivative_spot_check(profile):
    # analytic d1/d2 match central differences at 100 interior points
    assert check_derivatives(profile, points=100, rel_tol=1e-6) < 1e-6


def test_endpoint_vanishing():
    for v in [bump(0.25, 0.5), plateau_profile(10.0), log_squeezed(bump(0.25, 0.5), 0.2)]:
        a, b = v.support
        for s in (a, b):
            x = np.array([s])
            assert abs(float(v.value(x)[0])) < 1e-12
            assert abs(float(v.d1(x)[0])) < 1e-12
            assert abs(float(v.d2(x)[0])) < 1e-12


def test_plateau_peak_and_scaling():
    for T in (25.0, 50.0, 100.0, 200.0):
        v = plateau_profile(T)
        assert float(v.value(np.array([0.0]))[0]) == 1.0
        s = np.linspace(-T, T, 4001)
        d2max = float(np.max(np.abs(v.d2(s))))
        # ||v_T''||_inf = ||psi''||_inf / T^2
        ref = float(np.max(np.abs(bump(-1, 1).d2(np.linspace(-1, 1, 4001)))))
        assert abs(d2max - ref / T**2) < 1e-9


def test_log_squeezed_support():
    v = log_squeezed(bump(0.25, 0.5), 0.1)
    lo, hi = v.support
    assert abs(lo - math.log(2) / 0.1) < 1e-12
    assert abs(hi - math.log(4) / 0.1) < 1e-12
    with pytest.raises(ValueError):
        log_squeezed(bump(0.5, 2.0), 0.1)  # not inside (0, 1)


def test_bump_corpus_determinism_and_floor():
    a = bump_corpus(0, 5)
    b = bump_corpus(0, 5)
    assert [v.support for v in a] == [v.support for v in b]
    assert [v.support for v in bump_corpus(1, 5)] != [v.support for v in a]
    for v in bump_corpus(2, 20, center_range=(1.0, 3.0), left_min=math.log(2)):
        assert v.support[0] > math.log(2)


def test_profile_validation():
    with pytest.raises(ValueError):
        bump(1.0, 1.0)
    with pytest.raises(ValueError):
        Profile1D(lambda s: s, lambda s: s, lambda s: s, (2.0, 1.0))
