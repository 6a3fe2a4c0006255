"""Compactly supported C^2 test profiles with analytic derivatives.

A Profile1D carries value, first and second derivative callables on a
compact support interval; all quadrature-based verification is built on
these.  The workhorse is the polynomial bump psi(t) = (1 - t^2)^3 on
[-1, 1], which vanishes to second order at the endpoints and integrates
exactly under Gauss rules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Profile1D:
    value: object  # ndarray -> ndarray
    d1: object
    d2: object
    support: tuple[float, float]
    smoothness: str = "C2"
    label: str = ""

    def __post_init__(self):
        a, b = self.support
        if not (b > a):
            raise ValueError(f"empty support {self.support}")

    def __call__(self, s):
        return self.value(s)


def _psi(t):
    t = np.asarray(t, dtype=float)
    inside = np.abs(t) < 1.0
    u = np.where(inside, 1.0 - t * t, 0.0)
    return np.where(inside, u**3, 0.0)


def _psi_d1(t):
    t = np.asarray(t, dtype=float)
    inside = np.abs(t) < 1.0
    u = np.where(inside, 1.0 - t * t, 0.0)
    return np.where(inside, -6.0 * t * u**2, 0.0)


def _psi_d2(t):
    t = np.asarray(t, dtype=float)
    inside = np.abs(t) < 1.0
    u = np.where(inside, 1.0 - t * t, 0.0)
    return np.where(inside, u * (30.0 * t * t - 6.0), 0.0)


def bump(a: float, b: float, label: str = "") -> Profile1D:
    """Polynomial bump (1 - t^2)^3 mapped onto [a, b]; peak value 1 at the center."""
    if not b > a:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return Profile1D(
        value=lambda s: _psi((np.asarray(s, dtype=float) - mid) / half),
        d1=lambda s: _psi_d1((np.asarray(s, dtype=float) - mid) / half) / half,
        d2=lambda s: _psi_d2((np.asarray(s, dtype=float) - mid) / half) / half**2,
        support=(a, b),
        smoothness="C2-polynomial",
        label=label or f"bump[{a:g},{b:g}]",
    )


def plateau_profile(T: float) -> Profile1D:
    """v_T(s) = psi(s/T) on [-T, T]; derivatives scale as 1/T and 1/T^2.

    The near-extremizer family: as T grows the derivative terms vanish
    and separable Rellich ratios approach the zero-order coefficient.
    """
    if T <= 0:
        raise ValueError("T must be positive")
    return bump(-T, T, label=f"plateau[T={T:g}]")


def arg_scaled(v: Profile1D, c: float) -> Profile1D:
    """Profile s -> v(s/c); support scales by c (c > 0)."""
    if c <= 0:
        raise ValueError("scale must be positive")
    a, b = v.support
    return Profile1D(
        value=lambda s: v.value(np.asarray(s, dtype=float) / c),
        d1=lambda s: v.d1(np.asarray(s, dtype=float) / c) / c,
        d2=lambda s: v.d2(np.asarray(s, dtype=float) / c) / c**2,
        support=(a * c, b * c) if c > 0 else (b * c, a * c),
        smoothness=v.smoothness,
        label=f"{v.label}/arg_scaled[{c:g}]",
    )


def translated(v: Profile1D, shift: float) -> Profile1D:
    a, b = v.support
    return Profile1D(
        value=lambda s: v.value(np.asarray(s, dtype=float) - shift),
        d1=lambda s: v.d1(np.asarray(s, dtype=float) - shift),
        d2=lambda s: v.d2(np.asarray(s, dtype=float) - shift),
        support=(a + shift, b + shift),
        smoothness=v.smoothness,
        label=f"{v.label}+{shift:g}",
    )


def log_squeezed(phi: Profile1D, eps: float) -> Profile1D:
    """v(s) = phi(e^{-eps s}), the epsilon-indexed critical family.

    For phi supported in (a0, b0) with 0 < a0 < b0 < 1 the support is
    [-log(b0)/eps, -log(a0)/eps], marching to +infinity as eps -> 0.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    a0, b0 = phi.support
    if not (0.0 < a0 < b0 < 1.0):
        raise ValueError("phi must be supported inside (0, 1)")

    def val(s):
        return phi.value(np.exp(-eps * np.asarray(s, dtype=float)))

    def d1(s):
        x = np.exp(-eps * np.asarray(s, dtype=float))
        return -eps * x * phi.d1(x)

    def d2(s):
        x = np.exp(-eps * np.asarray(s, dtype=float))
        return eps**2 * (x**2 * phi.d2(x) + x * phi.d1(x))

    return Profile1D(
        value=val,
        d1=d1,
        d2=d2,
        support=(-math.log(b0) / eps, -math.log(a0) / eps),
        smoothness=phi.smoothness,
        label=f"{phi.label}(r^eps), eps={eps:g}",
    )


def radial_power_bump(q: float, T: float, center: float = 0.0) -> Profile1D:
    """Radial profile u(r) = r^{-q} psi((s - center)/T), s = -log r.

    Used as a near-extremizer for the Hardy constant ((N-2+beta)/p)^2
    with q = (N-2+beta)/p.  Derivatives are with respect to r.
    """
    h = bump(center - T, center + T)

    def _s(r):
        return -np.log(np.asarray(r, dtype=float))

    def val(r):
        r = np.asarray(r, dtype=float)
        return r ** (-q) * h.value(_s(r))

    def d1(r):
        r = np.asarray(r, dtype=float)
        s = _s(r)
        return r ** (-q - 1) * (-q * h.value(s) - h.d1(s))

    def d2(r):
        r = np.asarray(r, dtype=float)
        s = _s(r)
        return r ** (-q - 2) * (
            q * (q + 1) * h.value(s) + (2 * q + 1) * h.d1(s) + h.d2(s)
        )

    r_lo = math.exp(-(center + T))
    r_hi = math.exp(-(center - T))
    return Profile1D(val, d1, d2, (r_lo, r_hi),
                     label=f"r^-{q:g}*bump(T={T:g})")


def check_derivatives(v: Profile1D, points: int = 100, rel_tol: float = 1e-6) -> float:
    """Spot-check d1, d2 against central finite differences at interior points.

    Returns the worst relative error; raises AssertionError beyond rel_tol.
    """
    a, b = v.support
    # per-point steps proportional to |s| handle multiscale profiles
    # (radial ones compress features near r -> 0); the factor ladder
    # brackets the truncation/roundoff sweet spot
    pad = (b - a) * 1e-3
    s = np.linspace(a + pad, b - pad, points)
    worst = math.inf
    for factor in (2e-4, 5e-5, 1.25e-5, 3e-6):
        h = factor * (np.abs(s) + (b - a) * 0.05)
        scale1 = float(np.max(np.abs(v.d1(s)))) + 1e-30
        scale2 = float(np.max(np.abs(v.d2(s)))) + 1e-30
        fd1 = (v.value(s + h) - v.value(s - h)) / (2 * h)
        fd2 = (v.value(s + h) - 2 * v.value(s) + v.value(s - h)) / h**2
        err1 = float(np.max(np.abs(fd1 - v.d1(s)))) / scale1
        err2 = float(np.max(np.abs(fd2 - v.d2(s)))) / scale2
        worst = min(worst, max(err1, err2))
    if worst > rel_tol:
        raise AssertionError(
            f"analytic derivatives disagree with finite differences: {worst:.3e}"
        )
    return worst


def bump_corpus(seed: int, count: int,
                center_range: tuple[float, float] = (1.5, 10.0),
                width_range: tuple[float, float] = (0.4, 3.0),
                left_min: float = 0.0) -> list[Profile1D]:
    """Deterministic corpus of bumps with support in (left_min, inf)."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        c = float(rng.uniform(*center_range))
        w = float(rng.uniform(*width_range))
        w = min(w, 0.9 * (c - left_min))  # keep support right of left_min
        out.append(bump(c - w, c + w, label=f"corpus[{i}]"))
    return out
