"""Quotient by flype equivalence via coupling-constant renormalization.

The flype moves identify families of prime alternating 2-tangle
diagrams; the quotient is implemented by a change of coupling g -> g0(g)
under which the renormalized four-point series turns into the counting
series of flype-equivalence classes.  Everything is parametrized by the
auxiliary series A(g) = 6/(4 - a^2(g0)), the root of an explicit quintic
that stays at 2 when g -> 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .planar import renormalized_four_point
from .series import Series, solve_algebraic


@dataclass(frozen=True)
class FlypeState:
    """Flype-quotient data: parameter A, coupling map g0, class series."""

    A: Series
    g0: Series
    gamma_tilde: Series
    H: Series
    H_tilde_prime: Series


def flype_parameter(order: int) -> Series:
    """The series A(g) with A(0) = 2 solving the degree-five equation

    A^5 g - 6 A^4 g + 4 A^3 (g^2 - 2g - 1)/(g - 1) - 32 A^2 + 64 A - 32 = 0.

    The rational coefficient of A^3 is expanded as a series before the
    Newton solve, keeping the solver's contract polynomial-in-A.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    n = max(order, 1)
    g = Series.gen(n)
    cubic_coeff = (g * g - g * 2 - 1) * 4 / (g - 1)
    poly = [
        Series.constant(-32, n),
        Series.constant(64, n),
        Series.constant(-32, n),
        cubic_coeff,
        g * (-6),
        g,
    ]
    return solve_algebraic(poly, 2, n).truncate(order)


def flype_quintic_residual(A: Series) -> Series:
    """Residual of the defining quintic at a candidate A (zero when exact)."""
    n = A.order
    g = Series.gen(max(n, 1)).truncate(n)
    cubic_coeff = ((g * g - g * 2 - 1) * 4 / (g - 1)) if n >= 1 else Series.constant(4, 0)
    return (
        (A ** 5) * g
        - (A ** 4) * g * 6
        + (A ** 3) * cubic_coeff
        - (A * A) * 32
        + A * 64
        - 32
    )


def flype_class_two_tangles(order: int) -> Series:
    """Generating series of flype-equivalence classes of prime alternating
    2-tangles: (A-2)(4-A)/4."""
    A = flype_parameter(order)
    return (A - 2) * (4 - A) / 4


def bare_coupling(order: int) -> Series:
    """The coupling map g0(g) implementing the flype quotient: 4(A-2)/A^3."""
    A = flype_parameter(order)
    return (A - 2) * 4 / (A ** 3)


def flype_state(order: int) -> FlypeState:
    """All flype-quotient series at once (single quintic solve)."""
    A = flype_parameter(order)
    g0 = (A - 2) * 4 / (A ** 3)
    gamma_tilde = (A - 2) * (4 - A) / 4
    H, Hp = h2pi_decomposition(order, gamma_tilde=gamma_tilde, g0=g0)
    return FlypeState(A=A, g0=g0, gamma_tilde=gamma_tilde, H=H, H_tilde_prime=Hp)


def h2pi_decomposition(order: int, gamma_tilde: Series | None = None,
                       g0: Series | None = None):
    """Horizontally-two-particle-irreducible decompositions.

    Returns (H, H_tilde_prime) where H = Gamma/(1+Gamma) generates H2PI
    2-tangle diagrams and H_tilde_prime solves

        gamma_tilde = g + g*gamma_tilde + H'/(1 - H'),

    the recursive structure of flype classes.  The exact identity
    g0 = g - 2*g*H' is verified and a failure raises ArithmeticError.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    gamma = renormalized_four_point(order)
    H = gamma / (gamma + 1)
    if gamma_tilde is None:
        gamma_tilde = flype_class_two_tangles(order)
    if g0 is None:
        g0 = bare_coupling(order)
    g = Series.gen(order)
    x = gamma_tilde - g - g * gamma_tilde  # = H'/(1-H')
    Hp = x / (x + 1)
    residual = g - g * Hp * 2 - g0
    if not residual.is_zero():
        raise ArithmeticError("flype H2PI identity g0 = g - 2 g H' failed")
    return H, Hp
