"""Plane-quartic certification for the sporadic genus-3 cubic components.

Verifies, in exact rational arithmetic, that the embedded quartic
constructions behave as claimed: the curve is smooth, the marked branch has
the stated expansion, the cubic meets it to order 12, and the tangency at
the marked point has the stated contact order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .polynomials import (
    Polynomial,
    PolynomialError,
    gcd_many,
    rational_roots,
    resultant,
)
from .series import branch_series, tangent_contact_order, vanishing_order


class UnknownConstructionError(ValueError):
    """No embedded construction is registered under the requested name."""


@dataclass(frozen=True)
class SmoothnessCertificate:
    """Semi-decision for smoothness of a projective plane curve.

    ``smooth`` means every affine chart was certified by a constant gcd of
    resultants of the partials.  ``singular`` exhibits an exact rational
    common zero of the partials.  Anything else is ``not_certified``.
    """

    status: str  # "smooth" | "singular" | "not_certified"
    point: tuple[Fraction, Fraction, Fraction] | None = None
    detail: str = ""


@dataclass(frozen=True)
class SporadicCheck:
    name: str
    passed: bool
    expected: str
    actual: str


@dataclass(frozen=True)
class SporadicReport:
    construction: str
    checks: tuple[SporadicCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _chart_survey(partials, chart):
    """Dehomogenized partials on one chart, deduplicated, plus a unit flag."""
    specialized = [p.substitute(chart, 1) for p in partials]
    nonzero = list(dict.fromkeys(g for g in specialized if not g.is_zero()))
    has_unit = any(g.is_constant() for g in nonzero)
    return nonzero, has_unit


def _certify_chart(gs, elim, other):
    """Try to certify that the chart has no common zero, eliminating one way.

    Returns (certified, gcd_poly): the gcd of the eliminants in the other
    variable, or None when an eliminant degenerates.
    """
    with_elim = [g for g in gs if g.degree_in(elim) > 0]
    without = [g for g in gs if g.degree_in(elim) <= 0]
    if with_elim:
        base = max(with_elim, key=lambda g: g.degree_in(elim))
        eliminants = list(without)
        for g in gs:
            if g is base or g.degree_in(elim) <= 0:
                continue
            r = resultant(base, g, elim)
            if r.is_zero():
                return False, None
            eliminants.append(r)
        if not eliminants:
            return False, None
    else:
        eliminants = list(gs)
    g = gcd_many(eliminants, other)
    if not g.is_zero() and g.is_constant():
        return True, g
    return False, g


def _search_singular_point(partials, variables, chart, gs, gcd_poly, elim, other):
    """Look for an exact rational common zero in one chart."""
    if gcd_poly is None or gcd_poly.is_zero():
        return None
    for t in rational_roots(gcd_poly, other):
        slices = [g.substitute(other, t) for g in gs]
        if any(s.is_constant() and not s.is_zero() for s in slices):
            continue
        candidates = [s for s in slices if not s.is_zero()]
        if not candidates:
            continue
        pencil = gcd_many(candidates, elim)
        if pencil.is_zero() or pencil.is_constant():
            continue
        for u in rational_roots(pencil, elim):
            point = {chart: Fraction(1), elim: u, other: t}
            if all(p.evaluate(point) == 0 for p in partials):
                return tuple(point[v] for v in variables)
    return None


def smoothness_certificate(F: Polynomial) -> SmoothnessCertificate:
    """Certify smoothness of the projective curve F = 0 when possible.

    Chart by chart, the partial derivatives are dehomogenized and one
    variable is eliminated by resultants; a constant gcd proves the chart
    free of singular points.  Exhibiting a rational common zero proves
    singularity.  Everything else is reported as not certified.
    """
    if len(F.variables) != 3:
        raise PolynomialError("expected a polynomial in three variables")
    if not F.is_homogeneous() or F.degree() < 1:
        raise PolynomialError("expected a homogeneous polynomial of positive degree")
    partials = [F.partial_derivative(v) for v in F.variables]
    uncertified = []
    for chart in F.variables:
        others = [v for v in F.variables if v != chart]
        gs, has_unit = _chart_survey(partials, chart)
        if has_unit:
            continue
        if not gs:
            uncertified.append((chart, "all partials vanish identically"))
            continue
        certified = False
        for elim, other in (others, others[::-1]):
            ok, gcd_poly = _certify_chart(gs, elim, other)
            if ok:
                certified = True
                break
            point = _search_singular_point(
                partials, F.variables, chart, gs, gcd_poly, elim, other
            )
            if point is not None:
                return SmoothnessCertificate(
                    "singular", point, f"common zero found on chart {chart} = 1"
                )
        if not certified:
            uncertified.append((chart, "no elimination order gave a constant gcd"))
    if not uncertified:
        return SmoothnessCertificate("smooth", None, "all charts certified")
    detail = "; ".join(f"{chart}: {why}" for chart, why in uncertified)
    return SmoothnessCertificate("not_certified", None, detail)


def _load_constructions() -> dict:
    payload = resources.files("kstrata").joinpath("data/sporadic_quartics.json")
    return json.loads(payload.read_text(encoding="utf-8"))


def available_constructions() -> tuple[str, ...]:
    return tuple(sorted(_load_constructions()))


def verify_sporadic(construction_id: str, precision: int = 13) -> SporadicReport:
    """Run every certification check for one embedded quartic construction.

    The precision must cover the order-12 contact checks.
    """
    if precision < 12:
        raise ValueError(f"precision {precision} cannot resolve the order-12 checks")
    constructions = _load_constructions()
    if construction_id not in constructions:
        raise UnknownConstructionError(
            f"unknown construction {construction_id!r}; "
            f"choose from {sorted(constructions)}"
        )
    data = constructions[construction_id]
    F = Polynomial.from_string(data["quartic"], ("x", "y", "z"))
    f = Polynomial.from_string(data["affine"], ("x", "y"))
    g = Polynomial.from_string(data["cubic"], ("x", "y"))
    expected = data["expected"]
    checks = []

    certificate = smoothness_certificate(F)
    checks.append(
        SporadicCheck(
            "smoothness",
            certificate.status == "smooth",
            "smooth",
            certificate.status,
        )
    )

    affine = F.substitute("z", 1)
    affine2 = Polynomial(("x", "y"), {e[:2]: c for e, c in affine.terms.items()})
    checks.append(
        SporadicCheck(
            "affine_form_matches_quartic",
            affine2 == f,
            str(f),
            str(affine2),
        )
    )

    phi = branch_series(f, precision)
    wanted = [Fraction(0)] * 13
    for key, value in data["branch_coefficients"].items():
        wanted[int(key)] = Fraction(value)
    got = list(phi.coefficients[:13])
    checks.append(
        SporadicCheck(
            "branch_series",
            got == wanted,
            _series_text(wanted),
            _series_text(got),
        )
    )

    cubic_order = vanishing_order(g, phi, precision)
    checks.append(
        SporadicCheck(
            "cubic_vanishing_order",
            cubic_order == expected["cubic_order"],
            str(expected["cubic_order"]),
            str(cubic_order),
        )
    )

    if "quadratic" in data:
        h = Polynomial.from_string(data["quadratic"], ("x", "y"))
        quadratic_order = vanishing_order(h, phi, min(7, precision))
        checks.append(
            SporadicCheck(
                "quadratic_vanishing_order",
                quadratic_order == expected["quadratic_order"],
                str(expected["quadratic_order"]),
                str(quadratic_order),
            )
        )

    contact = tangent_contact_order(f, precision)
    checks.append(
        SporadicCheck(
            "tangent_contact_order",
            contact == expected["contact_order"],
            str(expected["contact_order"]),
            str(contact),
        )
    )
    return SporadicReport(construction_id, tuple(checks))


def _series_text(coeffs) -> str:
    parts = [f"{c}*x^{n}" for n, c in enumerate(coeffs) if c]
    return " + ".join(parts) if parts else "0"
