"""Planar limit of the quartic one-matrix model.

Everything needed from the solvable planar model: the endpoint
parameter a^2 of the eigenvalue density, the free energy in both its
closed-sum and a^2-parametrized forms, the two- and four-point
functions, the wave-function renormalization t(g) that pins the
two-point function to 1 (eliminating nugatory and non-prime diagrams),
and the 2l-point formulas whose coefficients count flype-equivalence
classes of prime alternating l-tangles.

All series are exact; floating point appears only in the quadrature
cross-checks of the eigenvalue density.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .rings import rat
from .series import Series, solve_algebraic


@dataclass(frozen=True)
class PlanarState:
    """Quadratic coupling t(g) and endpoint parameter a2(g) as series."""

    t: Series
    a2: Series

    def check_quartic(self):
        """Residual of 3*(g/t^2)*a2^2 - a2 + 1 (zero series when consistent)."""
        n = min(self.t.order, self.a2.order)
        g = Series.gen(n)
        t = self.t.truncate(n)
        a2 = self.a2.truncate(n)
        return (g / (t * t)) * a2 * a2 * 3 - a2 + 1


def solve_a2(t: Series) -> Series:
    """Endpoint parameter a^2(g) with a^2(0) = 1, for a given t(g) series.

    Solves 3*(g/t^2)*y^2 - y + 1 = 0 on the branch continuous at g = 0.
    """
    order = t.order
    if t.coeffs[0] == 0:
        raise ValueError("t(0) must be nonzero")
    coupling = Series.gen(order) / (t * t) * 3
    return solve_algebraic([Series.one(order), -Series.one(order), coupling], 1, order)


def planar_state(t: Series) -> PlanarState:
    return PlanarState(t=t, a2=solve_a2(t))


def free_energy_term(p: int):
    """Coefficient of (g/t^2)^p in the planar free energy: 3^p (2p-1)!/(p!(p+2)!)."""
    if p < 1:
        return rat(0)
    return rat(3**p * math.factorial(2 * p - 1),
               math.factorial(p) * math.factorial(p + 2))


def free_energy_perturbative(t: Series) -> Series:
    """Free energy as the explicit sum over planar diagram counts."""
    order = t.order
    u = Series.gen(order) / (t * t)
    acc = Series.constant(free_energy_term(order), order)
    for p in range(order - 1, 0, -1):
        acc = acc * u + free_energy_term(p)
    return acc * u


def free_energy(state: PlanarState) -> Series:
    """Free energy in the a^2-parametrized closed form."""
    a2 = state.a2
    return a2.log() / 2 - (a2 - 1) * (9 - a2) / 24


def two_point(state: PlanarState) -> Series:
    """Two-point function (1/(3t)) * a^2 * (4 - a^2)."""
    return state.a2 * (4 - state.a2) / (state.t * 3)


def four_point(state: PlanarState) -> Series:
    """Connected four-point function (1/(9t^2)) * a^4 * (1-a^2) * (2a^2-5)."""
    a2 = state.a2
    return a2 * a2 * (1 - a2) * (a2 * 2 - 5) / (state.t * state.t * 9)


def renormalize_t(order: int) -> PlanarState:
    """The unique t(g) with t(0)=1 making the two-point function exactly 1.

    Eliminating t between the endpoint equation and the two-point
    condition leaves (y-1)(4-y)^2 = 27g for y = a^2; the branch with
    y(0)=1 then gives t = y(4-y)/3.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    n = max(order, 1)
    poly = [
        Series.constant(-16, n) - Series.gen(n) * 27,  # y^0
        Series.constant(24, n),                        # y^1
        Series.constant(-9, n),                        # y^2
        Series.one(n),                                 # y^3
    ]
    a2 = solve_algebraic(poly, 1, n)
    t = a2 * (4 - a2) / 3
    return PlanarState(t=t.truncate(order), a2=a2.truncate(order))


def renormalized_free_energy(order: int) -> Series:
    """F(g) after wave-function renormalization (counts prime alternating links).

    Fixed by the four-point function through the marked-crossing identity
    2 dF/dg = Gamma(g): marking one crossing of a connected link diagram
    and opening it is two-to-one onto 2-tangle diagrams.  Substituting
    t(g) directly into the closed form would instead reweight every
    diagram by t(g)^(-2V), which is not the counting normalization.
    """
    if order < 1:
        return Series.zero(order)
    gamma = renormalized_four_point(order - 1)
    return (gamma / 2).integral()


def renormalized_four_point(order: int) -> Series:
    """Gamma(g) after wave-function renormalization (prime alternating 2-tangle diagrams).

    Equals (5-2a^2)(a^2-1)/(4-a^2)^2 on the renormalized branch, and also
    2 dF/dg.
    """
    a2 = renormalize_t(order).a2
    den = 4 - a2
    return (5 - a2 * 2) * (a2 - 1) / (den * den)


@lru_cache(maxsize=None)
def tangle_class_constant(ell: int):
    """The rational constant c_ell of the 2l-point flype-class formula.

    Defined by the recursion
    c_{l+1} = 1/(3l+1) * sum_{l/2 <= q <= l} (-4)^(q-l) (l+q)!/((2q-l)!(l-q)!).
    """
    if ell < 2:
        raise ValueError("c_ell defined for ell >= 2 here")
    l = ell - 1
    total = rat(0)
    for q in range((l + 1) // 2, l + 1):
        term = rat(math.factorial(l + q),
                   math.factorial(2 * q - l) * math.factorial(l - q))
        total += term * rat(-4) ** (q - l)
    return total / (3 * l + 1)


def tangle_class_series(ell: int, A: Series) -> Series:
    """Generating series of flype classes of prime alternating ell-tangles.

    Takes the flype-renormalized parameter series A(g) and evaluates
    (c_ell/ell!) (A-2)^(ell-1) (3 ell - 2 - (ell-1) A).
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    c = tangle_class_constant(ell)
    return (A - 2) ** (ell - 1) * (3 * ell - 2 - (A * (ell - 1))) * (c / rat(math.factorial(ell)))


# -- numeric density cross-checks (validation only) --------------------


def _a2_value(g_value, order=60):
    """Truncated-series value of a^2 at a small rational g (t = 1)."""
    a2 = solve_a2(Series.one(order))
    return a2(rat(g_value))


def density_function(g_value, order=60):
    """Eigenvalue density u(lambda) at fixed numeric g (t=1) as a callable.

    Returns (u, a) with support [-2a, 2a]; intended for quadrature checks
    well inside the convergence region |g| < 1/12.
    """
    a2 = float(_a2_value(g_value, order))
    gf = float(g_value)
    a = math.sqrt(a2)

    def u(lam):
        s = 4 * a2 - lam * lam
        if s < 0:
            return 0.0
        return (1 - 2 * gf * a2 - gf * lam * lam) * math.sqrt(s) / (2 * math.pi)

    return u, a


def density_moment(g_value, power=0, order=60):
    """Numeric integral of lambda^power * u(lambda) over the support.

    Uses the substitution lambda = 2a sin(theta) to remove the edge
    singularity, then adaptive quadrature.
    """
    from scipy.integrate import quad

    u, a = density_function(g_value, order)

    def integrand(theta):
        lam = 2 * a * math.sin(theta)
        return (lam ** power) * u(lam) * 2 * a * math.cos(theta)

    val, _err = quad(integrand, -math.pi / 2, math.pi / 2, epsabs=1e-13, epsrel=1e-13)
    return val
