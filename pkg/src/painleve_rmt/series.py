"""Truncated power series over exact rationals or complex floats.

A :class:`TruncatedSeries` is a dense coefficient vector ``c[0..P]`` in a
single variable together with an explicit truncation order ``P``.  Every
binary operation takes the minimum of the two truncation orders, so a result
never claims more accuracy than its inputs carry.

Exact series use :class:`fractions.Fraction` coefficients (arbitrary
precision, always in lowest terms with positive denominator, which is the
canonical rational form used throughout this package).  Float series use
``complex`` coefficients.  The two kinds are never mixed implicitly; convert
with :meth:`TruncatedSeries.to_complex`.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "Rational",
    "TruncatedSeries",
    "series_add",
    "series_mul",
    "series_scale",
    "series_exp",
    "series_log",
    "series_div",
    "series_integrate_logfree",
    "format_rational",
    "parse_rational",
]

# Canonical exact scalar: arbitrary-precision rational in lowest terms.
Rational = Fraction

_EXACT_TYPES = (int, Fraction)


def format_rational(q):
    """Text form ``p/q`` with the denominator omitted when it is 1."""
    q = Fraction(q)
    return str(q)


def parse_rational(text):
    """Inverse of :func:`format_rational`."""
    return Fraction(text)


def _classify(coeffs):
    """Return ('exact'|'complex', coerced tuple).  Mixing kinds is an error."""
    has_float = any(isinstance(c, (float, complex)) for c in coeffs)
    has_exact = any(isinstance(c, Fraction) for c in coeffs)
    if has_float and has_exact:
        raise TypeError("cannot mix exact rational and float coefficients in one series")
    if has_float:
        return "complex", tuple(complex(c) for c in coeffs)
    return "exact", tuple(Fraction(c) for c in coeffs)


class TruncatedSeries:
    """Power series truncated at an explicit order.

    ``coeffs[n]`` is the coefficient of ``var**n``; ``order`` equals
    ``len(coeffs) - 1``.  Instances are immutable; all operations return new
    series.
    """

    __slots__ = ("coeffs", "order", "var", "kind")

    def __init__(self, coeffs, var="s"):
        if len(coeffs) == 0:
            raise ValueError("series needs at least the constant coefficient")
        kind, coeffs = _classify(coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", len(coeffs) - 1)
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order, var="s", exact=True):
        c = Fraction(0) if exact else 0.0
        return cls([c] * (order + 1), var=var)

    @classmethod
    def one(cls, order, var="s", exact=True):
        c = [Fraction(0)] * (order + 1) if exact else [0.0] * (order + 1)
        c[0] = Fraction(1) if exact else 1.0
        return cls(c, var=var)

    @classmethod
    def monomial(cls, n, order, coeff=1, var="s"):
        if n > order:
            raise ValueError("monomial degree exceeds truncation order")
        c = [0] * (order + 1)
        c[n] = coeff
        return cls(c, var=var)

    # -- basics -------------------------------------------------------

    def coeff(self, n):
        """Coefficient of ``var**n`` (0 beyond the truncation order)."""
        if n < 0:
            raise IndexError("negative power")
        if n > self.order:
            return Fraction(0) if self.kind == "exact" else 0.0
        return self.coeffs[n]

    def truncate(self, order):
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1], var=self.var)

    def to_complex(self):
        if self.kind == "complex":
            return self
        return TruncatedSeries([complex(c) for c in self.coeffs], var=self.var)

    def _check_compat(self, other):
        if self.var != other.var:
            raise ValueError(
                f"variable tag mismatch: {self.var!r} vs {other.var!r}"
            )
        if self.kind != other.kind:
            raise TypeError("cannot combine exact and float series; convert explicitly")

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        self._check_compat(other)
        p = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[n] + other.coeffs[n] for n in range(p + 1)], var=self.var
        )

    def __sub__(self, other):
        self._check_compat(other)
        p = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[n] - other.coeffs[n] for n in range(p + 1)], var=self.var
        )

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], var=self.var)

    def __mul__(self, other):
        self._check_compat(other)
        p = min(self.order, other.order)
        zero = Fraction(0) if self.kind == "exact" else 0.0
        out = [zero] * (p + 1)
        for i in range(p + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(p + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, var=self.var)

    def scale(self, c):
        if self.kind == "exact" and isinstance(c, (float, complex)):
            raise TypeError("scaling an exact series by a float; convert explicitly")
        return TruncatedSeries([c * a for a in self.coeffs], var=self.var)

    def shift(self, c):
        """Add a constant to the series."""
        out = list(self.coeffs)
        out[0] = out[0] + c
        return TruncatedSeries(out, var=self.var)

    def divide(self, other):
        """Series quotient; the divisor needs a nonzero constant term."""
        self._check_compat(other)
        if other.coeffs[0] == 0:
            raise ZeroDivisionError("division by a series with zero constant term")
        p = min(self.order, other.order)
        zero = Fraction(0) if self.kind == "exact" else 0.0
        out = [zero] * (p + 1)
        for n in range(p + 1):
            acc = self.coeffs[n]
            for i in range(n):
                acc -= out[i] * other.coeffs[n - i]
            out[n] = acc / other.coeffs[0]
        return TruncatedSeries(out, var=self.var)

    # -- calculus -----------------------------------------------------

    def differentiate(self):
        """Termwise derivative; drops one order of accuracy."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series")
        return TruncatedSeries(
            [(n + 1) * self.coeffs[n + 1] for n in range(self.order)], var=self.var
        )

    def exp(self):
        """exp of a series with zero constant term, order by order.

        Uses g' = f'.g, i.e. n*g_n = sum_{m=1..n} m*f_m*g_{n-m}; exact over
        rationals.
        """
        if self.coeffs[0] != 0:
            raise ValueError("series_exp requires a zero constant term")
        one = Fraction(1) if self.kind == "exact" else 1.0
        out = [one] + [one * 0] * self.order
        for n in range(1, self.order + 1):
            acc = out[0] * 0
            for m in range(1, n + 1):
                acc += m * self.coeffs[m] * out[n - m]
            out[n] = acc / n
        return TruncatedSeries(out, var=self.var)

    def log(self):
        """log of a series with constant term 1 (inverse of :meth:`exp`)."""
        if self.coeffs[0] != 1:
            raise ValueError("series_log requires constant term 1")
        zero = Fraction(0) if self.kind == "exact" else 0.0
        out = [zero] * (self.order + 1)
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for m in range(1, n):
                acc -= m * out[m] * self.coeffs[n - m] / n
            out[n] = acc
        return TruncatedSeries(out, var=self.var)

    def integrate_logfree(self, lower_exponent=1):
        """integral_0^X f(s) ds/s as a series in X.

        Requires the first ``lower_exponent`` coefficients to vanish so the
        integrand f(s)/s is regular at 0; coefficient n of the result is
        ``f_n / n``.
        """
        for n in range(lower_exponent):
            if self.coeffs[n] != 0:
                raise ValueError(
                    "divergent integral: coefficient %d is nonzero" % n
                )
        zero = Fraction(0) if self.kind == "exact" else 0.0
        out = [zero] * (self.order + 1)
        for n in range(1, self.order + 1):
            out[n] = self.coeffs[n] / n
        return TruncatedSeries(out, var=self.var)

    # -- evaluation and text form ---------------------------------------

    def __call__(self, x):
        """Horner evaluation; exact when the series and the point are exact."""
        if self.kind == "exact" and isinstance(x, (int, Fraction)):
            tot = Fraction(0)
            for c in reversed(self.coeffs):
                tot = tot * x + c
            return tot
        tot = 0.0
        for c in reversed(self.coeffs):
            tot = tot * x + (float(c) if self.kind == "exact" else c)
        return tot

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.var == other.var
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.var))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:5])
        tail = ", ..." if self.order > 4 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order}, var={self.var!r})"

    def to_json(self):
        """JSON-ready dict: coefficient strings plus the truncation order."""
        return {
            "order": self.order,
            "variable": self.var,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data):
        coeffs = data["coeffs"]
        try:
            vals = [Fraction(c) for c in coeffs]
        except ValueError:
            vals = [complex(c) for c in coeffs]
        if len(vals) != data["order"] + 1:
            raise ValueError("order field inconsistent with coefficient count")
        return cls(vals, var=data.get("variable", "s"))


# Functional aliases matching the operation names used across the package.

def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_scale(a, c):
    return a.scale(c)


def series_exp(f):
    return f.exp()


def series_log(f):
    return f.log()


def series_div(a, b):
    return a.divide(b)


def series_integrate_logfree(f, lower_exponent=1):
    return f.integrate_logfree(lower_exponent)
