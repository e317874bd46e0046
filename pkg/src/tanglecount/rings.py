"""Exact coefficient domains used throughout the package.

All series coefficients live in one of the rings defined here:

* plain rationals (``gmpy2.mpq`` when available, ``fractions.Fraction``
  otherwise) -- the workhorse;
* :class:`TauPoly`, polynomials in the colour-count variable tau with
  rational coefficients;
* :class:`RatFunc`, quotients of two ``TauPoly`` in lowest terms, for
  generic-tau Weingarten entries;
* :class:`CappedPoly`, polynomials in an auxiliary variable truncated at
  a fixed maximal degree (used with x = 1/N^2 for genus expansions).

No floating point ever enters these types.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def rat(p=0, q=1):
        """Exact rational; prefers gmpy2 for speed."""
        if q == 1:
            return _mpq(p)  # one-arg form also parses "p/q" strings
        return _mpq(p, q)

    RAT_TYPES = (_mpq, Fraction, int)
except ImportError:  # pragma: no cover - exercised only without gmpy2
    def rat(p=0, q=1):
        return Fraction(p, q)

    RAT_TYPES = (Fraction, int)


def rat_from_str(s):
    """Parse "p/q" or "p" into an exact rational."""
    return rat(Fraction(s))


def rat_to_str(x):
    """Serialize an exact rational as "p/q" (or "p" when integral)."""
    return str(x)


def is_rat(x):
    return isinstance(x, RAT_TYPES)


class TauPoly:
    """Polynomial in tau with exact rational coefficients, ascending powers.

    Immutable; trailing zero coefficients are stripped so equality is
    canonical.  Mixed arithmetic with ints and rationals treats them as
    degree-0 polynomials.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if is_rat(coeffs):
            coeffs = (coeffs,)
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("TauPoly is immutable")

    @staticmethod
    def tau(power=1):
        """The monomial tau**power."""
        return TauPoly((0,) * power + (1,))

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if is_rat(other):
            other = TauPoly(other)
        if not isinstance(other, TauPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("TauPoly", self.coeffs))

    def __add__(self, other):
        if is_rat(other):
            other = TauPoly(other)
        if not isinstance(other, TauPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return TauPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TauPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, TauPoly) else TauPoly(-rat(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rat(other):
            if other == 0:
                return TauPoly()
            return TauPoly([c * other for c in self.coeffs])
        if not isinstance(other, TauPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return TauPoly()
        out = [rat(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return TauPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_rat(other):
            return TauPoly([c / other for c in self.coeffs])
        if isinstance(other, TauPoly):
            if other.degree == 0:
                return self / other.coeffs[0]
            q, r = divmod_poly(self, other)
            if r:
                raise ZeroDivisionError("inexact TauPoly division")
            return q
        return NotImplemented

    def __pow__(self, n):
        out = TauPoly(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, tau_value):
        """Evaluate at an exact tau value (Horner)."""
        acc = rat(0)
        for c in reversed(self.coeffs):
            acc = acc * tau_value + c
        return acc

    def to_json(self):
        return [rat_to_str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data):
        return TauPoly([rat_from_str(s) for s in data])

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*tau" if c != 1 else "tau")
            else:
                terms.append(f"{c}*tau^{i}" if c != 1 else f"tau^{i}")
        return " + ".join(terms)


def divmod_poly(a: TauPoly, b: TauPoly):
    """Euclidean division of TauPolys over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    q = [rat(0)] * max(len(r) - len(b.coeffs) + 1, 0)
    bl = b.coeffs[-1]
    db = b.degree
    while len(r) - 1 >= db and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        f = r[-1] / bl
        shift = len(r) - 1 - db
        q[shift] = f
        for i, c in enumerate(b.coeffs):
            r[shift + i] -= f * c
        r.pop()
    return TauPoly(q), TauPoly(r)


def gcd_poly(a: TauPoly, b: TauPoly) -> TauPoly:
    """Monic gcd over the rationals."""
    while b:
        _, a = a, divmod_poly(a, b)[1]
        a, b = b, a
    if a and a.coeffs[-1] != 1:
        a = a / a.coeffs[-1]
    return a


class RatFunc:
    """Quotient of two TauPolys kept in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            assert den is None
            object.__setattr__(self, "num", num.num)
            object.__setattr__(self, "den", num.den)
            return
        num = num if isinstance(num, TauPoly) else TauPoly(num)
        den = TauPoly(1) if den is None else (den if isinstance(den, TauPoly) else TauPoly(den))
        if not den:
            raise ZeroDivisionError("RatFunc with zero denominator")
        if not num:
            den = TauPoly(1)
        else:
            g = gcd_poly(num, den)
            if g.degree > 0:
                num = divmod_poly(num, g)[0]
                den = divmod_poly(den, g)[0]
            lead = den.coeffs[-1]
            if lead != 1:
                num = num / lead
                den = den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, TauPoly) or is_rat(x):
            return RatFunc(x)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("RatFunc division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __call__(self, tau_value):
        d = self.den(tau_value)
        if d == 0:
            raise ZeroDivisionError(f"RatFunc pole at tau={tau_value}")
        return self.num(tau_value) / d

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data):
        return RatFunc(TauPoly.from_json(data["num"]), TauPoly.from_json(data["den"]))

    def __repr__(self):
        if self.den == TauPoly(1):
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


class CappedPoly:
    """Polynomial in an auxiliary variable x, truncated above degree `cap`.

    Multiplication silently drops powers beyond the cap, which is exactly
    the arithmetic of a genus expansion truncated at fixed maximal genus
    (x = 1/N^2).  Two CappedPolys must share a cap to combine.
    """

    __slots__ = ("cap", "coeffs")

    def __init__(self, cap, coeffs=()):
        if is_rat(coeffs):
            coeffs = (coeffs,)
        cs = [rat(c) for c in coeffs][: cap + 1]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("CappedPoly is immutable")

    def _check(self, other):
        if self.cap != other.cap:
            raise ValueError("CappedPoly cap mismatch")

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else rat(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if is_rat(other):
            other = CappedPoly(self.cap, other)
        if not isinstance(other, CappedPoly):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("CappedPoly", self.cap, self.coeffs))

    def __add__(self, other):
        if is_rat(other):
            other = CappedPoly(self.cap, other)
        if not isinstance(other, CappedPoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return CappedPoly(self.cap, out)

    __radd__ = __add__

    def __neg__(self):
        return CappedPoly(self.cap, [-c for c in self.coeffs])

    def __sub__(self, other):
        if is_rat(other):
            other = CappedPoly(self.cap, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rat(other):
            return CappedPoly(self.cap, [c * other for c in self.coeffs])
        if not isinstance(other, CappedPoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CappedPoly(self.cap)
        out = [rat(0)] * min(len(a) + len(b) - 1, self.cap + 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if i + j <= self.cap:
                        out[i + j] += ca * cb
        return CappedPoly(self.cap, out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; requires an invertible constant term."""
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroDivisionError("CappedPoly with zero constant term")
        a0 = self.coeffs[0]
        out = [1 / a0]
        for n in range(1, self.cap + 1):
            s = rat(0)
            for j in range(1, n + 1):
                s += self.coeff(j) * out[n - j]
            out.append(-s / a0)
        return CappedPoly(self.cap, out)

    def __truediv__(self, other):
        if is_rat(other):
            return CappedPoly(self.cap, [c / other for c in self.coeffs])
        if not isinstance(other, CappedPoly):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __repr__(self):
        return f"CappedPoly(cap={self.cap}, {list(self.coeffs)})"
