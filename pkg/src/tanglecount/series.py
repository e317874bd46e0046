"""Truncated formal power series with exact coefficients.

A :class:`Series` is an immutable list of exact coefficients
``c_0 .. c_order`` in a single expansion variable.  The coefficient
domain is pluggable (rationals, :class:`~tanglecount.rings.TauPoly`,
:class:`~tanglecount.rings.CappedPoly`, ...): any type with exact ring
arithmetic works.  Truncation orders are explicit and combine with the
min rule -- no operation ever invents coefficients it does not know.

Besides ring arithmetic the module provides composition, compositional
reversion, and a Newton solver for algebraic equations ``P(g, y) = 0``
with series coefficients, which together cover every change of variable
used by the counting pipelines.
"""

from __future__ import annotations

from .rings import is_rat, rat, rat_from_str, rat_to_str, TauPoly


class Series:
    """Truncated power series; exact, immutable, domain-agnostic."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("Series is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(value, order, ring_zero=None):
        z = ring_zero if ring_zero is not None else rat(0)
        first = z + value
        return Series([first] + [z * 0] * order, order)

    @staticmethod
    def zero(order, ring_zero=None):
        return Series.constant(0, order, ring_zero)

    @staticmethod
    def one(order, ring_zero=None):
        return Series.constant(1, order, ring_zero)

    @staticmethod
    def gen(order, ring_zero=None):
        """The expansion variable g itself."""
        z = ring_zero if ring_zero is not None else rat(0)
        if order < 1:
            raise ValueError("need order >= 1 to represent g")
        cs = [z * 0 for _ in range(order + 1)]
        cs[1] = z * 0 + 1
        return Series(cs, order)

    @staticmethod
    def from_rationals(values, order=None):
        return Series([rat(v) for v in values], order)

    # -- ring constants derived from the stored domain ----------------

    @property
    def _zero(self):
        return self.coeffs[0] * 0

    @property
    def _one(self):
        return self.coeffs[0] * 0 + 1

    # -- basics --------------------------------------------------------

    def coeff(self, i):
        """Coefficient of g^i; raises beyond the truncation order."""
        if i > self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i]

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], order)

    def valuation(self):
        """Index of the first nonzero coefficient (order+1 if all zero)."""
        for i, c in enumerate(self.coeffs):
            if c != self._zero:
                return i
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_zero(self):
        return self.valuation() > self.order

    # -- ring operations -----------------------------------------------

    def _combine(self, other, op):
        n = min(self.order, other.order)
        return Series([op(self.coeffs[i], other.coeffs[i]) for i in range(n + 1)], n)

    def __add__(self, other):
        if isinstance(other, Series):
            return self._combine(other, lambda a, b: a + b)
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return Series(cs, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, Series):
            return self._combine(other, lambda a, b: a - b)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        z = self._zero
        out = [z] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == z:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != z:
                    out[i + j] = out[i + j] + a * b
        return Series(out, n)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Series.one(self.order, self._zero)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        """Multiplicative inverse; constant term must be invertible."""
        a0 = self.coeffs[0]
        inv0 = self._one / a0
        out = [inv0]
        for n in range(1, self.order + 1):
            s = self._zero
            for j in range(1, n + 1):
                s = s + self.coeffs[j] * out[n - j]
            out.append(-(s * inv0))
        return Series(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return Series([c / other for c in self.coeffs], self.order)

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- calculus -------------------------------------------------------

    def derivative(self):
        if self.order == 0:
            return Series([self._zero], 0)
        return Series(
            [self.coeffs[i] * i for i in range(1, self.order + 1)], self.order - 1
        )

    def integral(self):
        """Antiderivative with zero constant term (order grows by one)."""
        out = [self._zero]
        for i, c in enumerate(self.coeffs):
            out.append(c / (i + 1))
        return Series(out, self.order + 1)

    def log(self):
        """log(f) for f with constant term 1."""
        if self.coeffs[0] != self._one:
            raise ValueError("log requires constant term 1")
        return (self.derivative() / self.truncate(max(self.order - 1, 0))).integral().truncate(self.order)

    # -- composition ----------------------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """f(h(g)) for h with zero constant term, truncated exactly."""
        if inner.coeffs[0] != inner._zero:
            raise ValueError("composition requires inner series with zero constant term")
        n = min(self.order, inner.order)
        h = inner.truncate(n)
        acc = Series.constant(self.coeffs[n], n, self._zero)
        for i in range(n - 1, -1, -1):
            acc = acc * h + self.coeffs[i]
        return acc

    def reversion(self) -> "Series":
        """Compositional inverse of f (f(0)=0, f'(0) invertible)."""
        zero = self._zero
        if self.coeffs[0] != zero:
            raise ValueError("reversion requires zero constant term")
        if self.order < 1:
            raise ValueError("reversion needs order >= 1")
        inv_f1 = self._one / self.coeffs[1]
        df = self.derivative()
        # Newton iteration r <- r - (f(r) - g)/f'(r); valid order doubles.
        # The numerator's valuation exceeds the current valid order, so the
        # derivative known to order n-1 suffices for a result at order n.
        m = 1
        r = Series([zero, inv_f1], 1)
        while m < self.order:
            m = min(2 * m + 1, self.order)
            rm = _pad(r, m, zero)
            num = self.truncate(m).compose(rm) - Series.gen(m, zero)
            v = num.valuation()
            if v > m:
                r = rm
                continue
            dm = min(df.order, m)
            den = df.truncate(dm).compose(rm.truncate(dm))
            quot = Series(num.coeffs[v:], m - v) / den.truncate(m - v)
            r = rm - Series([zero] * v + list(quot.coeffs), m)
        return r

    # -- evaluation and serialization ------------------------------------

    def __call__(self, x):
        """Evaluate the truncated polynomial at an exact point (Horner)."""
        acc = self.coeffs[self.order] * (x * 0 + 1) if not is_rat(x) else self.coeffs[self.order]
        for i in range(self.order - 1, -1, -1):
            acc = acc * x + self.coeffs[i]
        return acc

    def map_coeffs(self, fn):
        return Series([fn(c) for c in self.coeffs], self.order)

    def to_json(self):
        def enc(c):
            if isinstance(c, TauPoly):
                return c.to_json()
            return rat_to_str(c)

        return {"truncation_order": self.order, "coeffs": [enc(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data):
        def dec(c):
            if isinstance(c, list):
                return TauPoly.from_json(c)
            return rat_from_str(c)

        return Series([dec(c) for c in data["coeffs"]], data["truncation_order"])

    def __repr__(self):
        shown = ", ".join(repr(c) for c in self.coeffs[: min(8, self.order + 1)])
        tail = ", ..." if self.order + 1 > 8 else ""
        return f"Series([{shown}{tail}], order={self.order})"


def _pad(s: Series, order, zero):
    """Zero-pad a candidate polynomial (internal Newton use only)."""
    if order <= s.order:
        return s.truncate(order)
    return Series(list(s.coeffs) + [zero] * (order - s.order), order)


def solve_algebraic(poly_coeffs, y0, order):
    """Series root of P(g, y) = sum_i poly_coeffs[i](g) * y^i with y(0) = y0.

    ``poly_coeffs`` is a list of Series (or exact constants) indexed by the
    power of y.  Newton iteration from the constant seed doubles the valid
    order each step; the seed must be a simple root of P(0, y).
    """
    cs = []
    for p in poly_coeffs:
        if isinstance(p, Series):
            if p.order < order:
                raise ValueError("polynomial coefficient series too short")
            cs.append(p.truncate(order))
        else:
            cs.append(Series.constant(p, order))
    zero = cs[0]._zero
    one = cs[0]._one

    def eval_poly(coeffs_list, y):
        acc = Series.constant(0, y.order, zero)
        for c in reversed(coeffs_list):
            acc = acc * y + c.truncate(y.order)
        return acc

    dcs = [cs[i] * i for i in range(1, len(cs))]

    seed = Series.constant(y0, 0, zero)
    p0 = eval_poly([c.truncate(0) for c in cs], seed)
    if p0.coeffs[0] != zero:
        raise ValueError(f"seed {y0} is not a root of P at g=0")
    d0 = eval_poly([c.truncate(0) for c in dcs], seed)
    if d0.coeffs[0] == zero:
        raise ValueError("singular derivative at seed (wrong branch)")

    m = 0
    y = seed
    while m < order:
        m = min(2 * m + 1, order)
        ym = _pad(y, m, zero)
        py = eval_poly(cs, ym)
        dpy = eval_poly(dcs, ym)
        y = ym - py / dpy
    return y


def geometric(order):
    """1/(1-g) as a rational series."""
    return Series([rat(1)] * (order + 1), order)
