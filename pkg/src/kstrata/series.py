"""Truncated power series over exact rationals, and curve-branch expansions.

A branch of f(x, y) = 0 through the origin with a transverse tangent is
parameterized by (x, phi(x)); the coefficients of phi come one at a time
from a linear equation whose pivot df/dy(0, 0) is a unit.  Orders of
vanishing along the branch are intersection multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Polynomial


class SeriesError(ValueError):
    """Invalid series input or insufficient precision."""


@dataclass(frozen=True)
class AtLeast:
    """An order of vanishing only bounded below by the working precision."""

    bound: int


class PowerSeries:
    """Coefficients c_0..c_N of a series known exactly modulo x^(N+1)."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coefficients = tuple(Fraction(c) for c in coefficients)
        if not coefficients:
            raise SeriesError("a series needs at least the constant coefficient")
        self.coefficients = coefficients

    @classmethod
    def zero(cls, precision: int) -> "PowerSeries":
        return cls((Fraction(0),) * (precision + 1))

    @property
    def precision(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> Fraction:
        if n > self.precision:
            raise SeriesError(f"coefficient {n} beyond precision {self.precision}")
        return self.coefficients[n]

    def truncate(self, precision: int) -> "PowerSeries":
        if precision > self.precision:
            raise SeriesError(
                f"cannot extend precision {self.precision} to {precision}"
            )
        return PowerSeries(self.coefficients[: precision + 1])

    def _aligned(self, other: "PowerSeries") -> int:
        return min(self.precision, other.precision)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = self._aligned(other)
        return PowerSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))[: n + 1]
        )

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = self._aligned(other)
        return PowerSeries(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients))[: n + 1]
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(tuple(c * other for c in self.coefficients))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = self._aligned(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients[: n + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coefficients[: n + 1 - i]):
                if b:
                    out[i + j] += a * b
        return PowerSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def valuation(self):
        """Smallest exponent with nonzero coefficient, or AtLeast past precision."""
        for n, c in enumerate(self.coefficients):
            if c:
                return n
        return AtLeast(self.precision + 1)

    def __repr__(self):
        return f"PowerSeries({self.coefficients!r})"

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coefficients):
            if not c:
                continue
            if n == 0:
                parts.append(str(c))
            elif abs(c) == 1:
                parts.append(("-" if c < 0 else "") + (f"x^{n}" if n > 1 else "x"))
            else:
                parts.append(f"{c}*x^{n}" if n > 1 else f"{c}*x")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O(x^{self.precision + 1})"


def polynomial_on_branch(
    poly: Polynomial, phi: PowerSeries, x_var: str = "x", y_var: str = "y"
) -> PowerSeries:
    """Series of poly(x, phi(x)) at phi's precision, via Horner in y."""
    precision = phi.precision
    y_coeffs = poly.coefficients_in(y_var)
    result = PowerSeries.zero(precision)
    for layer in reversed(y_coeffs):
        result = result * phi + _poly_to_series(layer, x_var, precision)
    return result


def _poly_to_series(p: Polynomial, x_var: str, precision: int) -> PowerSeries:
    coeffs = [Fraction(0)] * (precision + 1)
    idx = p.variables.index(x_var)
    for exps, coeff in p.terms.items():
        others = [e for j, e in enumerate(exps) if j != idx]
        if any(others):
            raise SeriesError(f"{p} involves variables besides {x_var!r}")
        if exps[idx] <= precision:
            coeffs[exps[idx]] += coeff
    return PowerSeries(coeffs)


def branch_series(
    f: Polynomial, precision: int, x_var: str = "x", y_var: str = "y"
) -> PowerSeries:
    """The unique series phi with phi(0) = 0 and f(x, phi(x)) = O(x^(N+1)).

    Needs f(0,0) = 0 and df/dy(0,0) != 0; each coefficient a_n solves a
    linear equation with that derivative as the pivot.
    """
    origin = {x_var: 0, y_var: 0}
    if f.evaluate(origin) != 0:
        raise SeriesError("curve does not pass through the origin")
    pivot = f.partial_derivative(y_var).evaluate(origin)
    if pivot == 0:
        raise SeriesError("singular branch point: df/dy vanishes at the origin")
    coeffs = [Fraction(0)] * (precision + 1)
    for n in range(1, precision + 1):
        partial = PowerSeries(coeffs[: n + 1])
        residual = polynomial_on_branch(f, partial, x_var, y_var)
        coeffs[n] = -residual.coefficient(n) / pivot
    return PowerSeries(coeffs)


def vanishing_order(
    g: Polynomial, phi: PowerSeries, precision: int, x_var: str = "x", y_var: str = "y"
):
    """Order of vanishing of g(x, phi(x)): an int, or AtLeast(precision + 1).

    This is the intersection multiplicity of g with the branch carried by
    phi.  The series must carry at least the requested precision.
    """
    if phi.precision < precision:
        raise SeriesError(
            f"series precision {phi.precision} below requested {precision}"
        )
    return polynomial_on_branch(g, phi.truncate(precision), x_var, y_var).valuation()


def tangent_contact_order(
    f: Polynomial, precision: int = 13, x_var: str = "x", y_var: str = "y"
):
    """Contact order of the x-axis with the branch of f = y + higher order.

    Equals the valuation of the branch series: 2 at an ordinary point
    (no holomorphic form triple-vanishes there), 3 at a flex that is not a
    hyperflex, and 4 or more at a hyperflex.
    """
    origin = {x_var: 0, y_var: 0}
    if f.partial_derivative(x_var).evaluate(origin) != 0:
        raise SeriesError("tangent line at the origin is not the x-axis")
    return branch_series(f, precision, x_var, y_var).valuation()
