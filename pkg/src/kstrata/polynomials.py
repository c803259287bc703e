"""Sparse multivariate polynomials over exact rationals.

Supports the arithmetic needed to certify plane-curve constructions:
parsing, derivatives, evaluation, univariate gcds and rational roots, and
Sylvester resultants computed by fraction-free (Bareiss) elimination over
the polynomial ring, so every intermediate value stays exact.
"""

from __future__ import annotations

import re
from fractions import Fraction


class PolynomialError(ValueError):
    """Invalid polynomial input or operation."""


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\^)|(\*)|(/)|(\+)|(-))")


class Polynomial:
    """Sparse polynomial: exponent tuples mapped to nonzero coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        width = len(self.variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            coeff = Fraction(coeff)
            if len(exps) != width:
                raise PolynomialError(
                    f"exponent tuple {exps} does not fit variables {self.variables}"
                )
            if any(e < 0 for e in exps):
                raise PolynomialError(f"negative exponent in {exps}")
            if coeff:
                clean[exps] = coeff
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "Polynomial":
        return cls(variables)

    @classmethod
    def constant(cls, value, variables) -> "Polynomial":
        width = len(tuple(variables))
        return cls(variables, {(0,) * width: Fraction(value)})

    @classmethod
    def variable(cls, name, variables) -> "Polynomial":
        variables = tuple(variables)
        if name not in variables:
            raise PolynomialError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: Fraction(1)})

    @classmethod
    def from_string(cls, text: str, variables) -> "Polynomial":
        """Parse a sum of terms like ``3*x^2*y`` or ``-1/2 x y^3``.

        Coefficients are integers or fractions; a missing coefficient means
        1 and juxtaposition works as multiplication.
        """
        variables = tuple(variables)
        tokens = _tokenize(text)
        terms: dict[tuple[int, ...], Fraction] = {}
        i = 0
        if not tokens:
            raise PolynomialError("empty polynomial text")
        while i < len(tokens):
            sign = 1
            while i < len(tokens) and tokens[i] in (("op", "+"), ("op", "-")):
                if tokens[i][1] == "-":
                    sign = -sign
                i += 1
            if i >= len(tokens):
                raise PolynomialError(f"dangling sign in {text!r}")
            coeff = Fraction(sign)
            exps = [0] * len(variables)
            saw_factor = False
            while i < len(tokens) and tokens[i] not in (("op", "+"), ("op", "-")):
                kind, value = tokens[i]
                if kind == "op" and value == "*":
                    i += 1
                    continue
                if kind == "num":
                    i += 1
                    numerator = value
                    if i < len(tokens) and tokens[i] == ("op", "/"):
                        i += 1
                        if i >= len(tokens) or tokens[i][0] != "num":
                            raise PolynomialError(f"bad fraction in {text!r}")
                        coeff *= Fraction(numerator, tokens[i][1])
                        i += 1
                    else:
                        coeff *= numerator
                    saw_factor = True
                    continue
                if kind == "name":
                    if value not in variables:
                        raise PolynomialError(f"unknown variable {value!r}")
                    idx = variables.index(value)
                    i += 1
                    exponent = 1
                    if i < len(tokens) and tokens[i] == ("op", "^"):
                        i += 1
                        if i >= len(tokens) or tokens[i][0] != "num":
                            raise PolynomialError(f"bad exponent in {text!r}")
                        exponent = tokens[i][1]
                        i += 1
                    exps[idx] += exponent
                    saw_factor = True
                    continue
                raise PolynomialError(f"unexpected token {value!r} in {text!r}")
            if not saw_factor:
                raise PolynomialError(f"empty term in {text!r}")
            key = tuple(exps)
            total = terms.get(key, Fraction(0)) + coeff
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return cls(variables, terms)

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolynomialError("not a constant polynomial")
        return next(iter(self.terms.values()), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        idx = self._index(name)
        return max((e[idx] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def coefficients_in(self, name: str) -> list["Polynomial"]:
        """Coefficients of powers of one variable, as polynomials without it."""
        idx = self._index(name)
        buckets: list[dict] = [{} for _ in range(self.degree_in(name) + 1)]
        for exps, coeff in self.terms.items():
            reduced = exps[:idx] + (0,) + exps[idx + 1 :]
            buckets[exps[idx]][reduced] = coeff
        return [Polynomial(self.variables, b) for b in buckets]

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise PolynomialError(f"unknown variable {name!r}") from None

    def _match(self, other: "Polynomial") -> None:
        if self.variables != other.variables:
            raise PolynomialError(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._match(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.variables)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return Polynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return Polynomial(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise PolynomialError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.variables)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- calculus and specialization -------------------------------------

    def partial_derivative(self, name: str) -> "Polynomial":
        idx = self._index(name)
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[idx] == 0:
                continue
            reduced = exps[:idx] + (exps[idx] - 1,) + exps[idx + 1 :]
            terms[reduced] = terms.get(reduced, Fraction(0)) + coeff * exps[idx]
        return Polynomial(self.variables, terms)

    def substitute(self, name: str, value) -> "Polynomial":
        """Substitute a rational value for one variable (kept in the ring)."""
        idx = self._index(name)
        value = Fraction(value)
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            reduced = exps[:idx] + (0,) + exps[idx + 1 :]
            scaled = coeff * value ** exps[idx]
            total = terms.get(reduced, Fraction(0)) + scaled
            if total:
                terms[reduced] = total
            else:
                terms.pop(reduced, None)
        return Polynomial(self.variables, terms)

    def evaluate(self, values: dict) -> Fraction:
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            product = coeff
            for name, exponent in zip(self.variables, exps):
                if exponent:
                    product *= Fraction(values[name]) ** exponent
            total += product
        return total

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({str(self)!r}, variables={self.variables})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            coeff = self.terms[exps]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exps)
                if e
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            remainder = text[pos:].strip()
            if not remainder:
                break
            raise PolynomialError(f"cannot tokenize {remainder[:12]!r}")
        pos = m.end()
        if m.group(1):
            tokens.append(("num", int(m.group(1))))
        elif m.group(2):
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(0).strip()))
    return tokens


def _lex_leading(p: Polynomial) -> tuple[int, ...]:
    return max(p.terms)


def exact_divide(numerator: Polynomial, denominator: Polynomial) -> Polynomial:
    """Divide exactly, raising PolynomialError when the quotient is inexact.

    Long division against the lex-leading term of the divisor; for exact
    multiples the leading term is always divisible and the reduction
    terminates by well-ordering of the lex order.
    """
    numerator._match(denominator)
    if denominator.is_zero():
        raise PolynomialError("division by the zero polynomial")
    if denominator.is_constant():
        c = denominator.constant_value()
        return Polynomial(
            numerator.variables, {e: v / c for e, v in numerator.terms.items()}
        )
    quotient: dict[tuple[int, ...], Fraction] = {}
    lead_d = _lex_leading(denominator)
    lead_d_coeff = denominator.terms[lead_d]
    remainder = numerator
    while not remainder.is_zero():
        lead_r = _lex_leading(remainder)
        diff = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(d < 0 for d in diff):
            raise PolynomialError("inexact polynomial division")
        coeff = remainder.terms[lead_r] / lead_d_coeff
        quotient[diff] = quotient.get(diff, Fraction(0)) + coeff
        shifted = Polynomial(
            denominator.variables,
            {
                tuple(a + b for a, b in zip(e, diff)): c * coeff
                for e, c in denominator.terms.items()
            },
        )
        remainder = remainder - shifted
    return Polynomial(numerator.variables, quotient)


def _bareiss_determinant(matrix: list[list[Polynomial]], variables) -> Polynomial:
    zero = Polynomial.zero(variables)
    n = len(matrix)
    if n == 0:
        return Polynomial.constant(1, variables)
    m = [row[:] for row in matrix]
    sign = 1
    previous = Polynomial.constant(1, variables)
    for i in range(n - 1):
        if m[i][i].is_zero():
            for r in range(i + 1, n):
                if not m[r][i].is_zero():
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return zero
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                numerator = m[r][c] * m[i][i] - m[r][i] * m[i][c]
                m[r][c] = exact_divide(numerator, previous)
            m[r][i] = zero
        previous = m[i][i]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(p: Polynomial, q: Polynomial, name: str) -> Polynomial:
    """Sylvester resultant eliminating one variable.

    Both inputs need positive degree in the eliminated variable; the result
    is a polynomial in the remaining variables (the variable slot stays but
    its exponent is zero everywhere).
    """
    p._match(q)
    m, n = p.degree_in(name), q.degree_in(name)
    if m <= 0 or n <= 0:
        raise PolynomialError(
            f"resultant needs positive degree in {name!r} (got {m} and {n})"
        )
    pc = p.coefficients_in(name)
    qc = q.coefficients_in(name)
    size = m + n
    zero = Polynomial.zero(p.variables)
    matrix = [[zero] * size for _ in range(size)]
    for row in range(n):
        for i, coeff in enumerate(reversed(pc)):  # x^m first
            matrix[row][row + i] = coeff
    for row in range(m):
        for i, coeff in enumerate(reversed(qc)):
            matrix[n + row][row + i] = coeff
    return _bareiss_determinant(matrix, p.variables)


def _univariate_coeffs(p: Polynomial, name: str) -> list[Fraction]:
    idx = p._index(name)
    for exps in p.terms:
        if any(e for j, e in enumerate(exps) if j != idx):
            raise PolynomialError(f"{p} is not univariate in {name!r}")
    coeffs = [Fraction(0)] * (p.degree_in(name) + 1)
    for exps, coeff in p.terms.items():
        coeffs[exps[idx]] = coeff
    return coeffs


def _from_univariate(coeffs, name, variables) -> Polynomial:
    variables = tuple(variables)
    idx = variables.index(name)
    terms = {}
    for power, coeff in enumerate(coeffs):
        if coeff:
            exps = [0] * len(variables)
            exps[idx] = power
            terms[tuple(exps)] = coeff
    return Polynomial(variables, terms)


def gcd_univariate(p: Polynomial, q: Polynomial, name: str) -> Polynomial:
    """Monic gcd of two polynomials involving only one variable."""
    p._match(q)
    a = _univariate_coeffs(p, name) if not p.is_zero() else []
    b = _univariate_coeffs(q, name) if not q.is_zero() else []
    while b:
        a, b = b, _poly_mod(a, b)
    if not a:
        return Polynomial.zero(p.variables)
    lead = a[-1]
    return _from_univariate([c / lead for c in a], name, p.variables)


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, coeff in enumerate(b):
            a[shift + i] -= factor * coeff
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return a


def rational_roots(p: Polynomial, name: str) -> list[Fraction]:
    """All rational roots of a univariate polynomial, ascending."""
    coeffs = _univariate_coeffs(p, name)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise PolynomialError("the zero polynomial has every root")
    roots = set()
    if coeffs[0] == 0:
        roots.add(Fraction(0))
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) > 1:
        scale = 1
        for c in coeffs:
            scale = scale * c.denominator // _gcd_int(scale, c.denominator)
        ints = [int(c * scale) for c in coeffs]
        lead, const = abs(ints[-1]), abs(ints[0])
        for num in _divisor_candidates(const):
            for den in _divisor_candidates(lead):
                for candidate in (Fraction(num, den), Fraction(-num, den)):
                    if _eval_univariate(coeffs, candidate) == 0:
                        roots.add(candidate)
    return sorted(roots)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _divisor_candidates(n: int):
    return (d for d in range(1, abs(n) + 1) if n % d == 0)


def _eval_univariate(coeffs, value: Fraction) -> Fraction:
    total = Fraction(0)
    for coeff in reversed(coeffs):
        total = total * value + coeff
    return total


def gcd_many(polys, name: str) -> Polynomial:
    """Monic gcd of several univariate polynomials."""
    polys = list(polys)
    if not polys:
        raise PolynomialError("gcd of nothing")
    result = polys[0]
    for p in polys[1:]:
        result = gcd_univariate(result, p, name)
    return result


def parse_homogeneous(text: str, variables=("x", "y", "z")) -> Polynomial:
    """Parse and require a homogeneous polynomial (plane-curve input)."""
    p = Polynomial.from_string(text, variables)
    if not p.is_homogeneous():
        raise PolynomialError(f"{text!r} is not homogeneous")
    return p
