"""Hitchin map and spectral-surface diagnostics.

The Hitchin map sends an integrable trace-free field Phi = Phi_1 + Phi_2 to

    (rho1, rho12, rho2) = (det Phi_1, -2 A1 A2 - 2 B1 C2, det Phi_2)

inside H0(O(4,0) + O(2,2) + O(0,4)).  Integrability forces the image
constraint rho12^2 = 4 rho1 rho2, so the map is never onto.  The spectral
surface cut out by a consistent datum is

    eta1^2 + rho1 = 0,   eta2^2 + rho2 = 0,   2 eta1 eta2 + rho12 = 0

inside the total space of the tangent bundle; over a base point with
rho1 != 0 it consists of exactly two points, the third equation selecting
the eigenvalue pairing (eta1, eta2 = -rho12/(2 eta1)).

"Generic" is operationalized as: rho1 and rho2 are quartics with four
distinct projective roots and rho12 is not identically zero.  This is the
weakest condition under which the fibre excludes decomposable bundles.
(On consistent data the three conditions are simultaneously unsatisfiable:
rho12^2 = 4 rho1 rho2 with rho12 != 0 forces rho1 and rho2 to be constants
times squares, hence non-generic - the generic tag exists for taxonomy
completeness and in practice consistent data lands in a product or
non-generic class.)  Irrational fibre coordinates are reported exactly as
coef * sqrt(radicand) with a squarefree radicand, never as floats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import _univariate as uni
from .cohomology import LineBundle
from .errors import (
    BundleMismatch,
    InconsistentRho,
    NotIntegrable,
    NotUnivariate,
    SlotViolation,
)
from .exactalg import BiPoly, det2
from .higgs import DecomposableBundle, HiggsField, fits_slot, is_integrable, validate_field


@dataclass(frozen=True)
class SpectralData:
    """Triple of sections of O(4,0), O(2,2), O(0,4)."""

    rho1: BiPoly
    rho12: BiPoly
    rho2: BiPoly

    def __post_init__(self):
        for poly, slot in (
            (self.rho1, LineBundle(4, 0)),
            (self.rho12, LineBundle(2, 2)),
            (self.rho2, LineBundle(0, 4)),
        ):
            if not fits_slot(poly, slot):
                raise SlotViolation(f"component does not fit the slot {slot}")


@dataclass(frozen=True)
class SpectralPoint:
    """Base point (z1, z2) with tangent-fibre coordinates (eta1, eta2)."""

    z1: Fraction
    z2: Fraction
    eta1: Fraction
    eta2: Fraction


def hitchin_map(f: HiggsField) -> SpectralData:
    """(det Phi_1, -2 A1 A2 - 2 B1 C2, det Phi_2) on chart V1."""
    if not validate_field(f):
        raise SlotViolation("field violates its shape slots")
    if not is_integrable(f):
        raise NotIntegrable("Hitchin map needs an integrable field")
    a1, b1, _, a2, _, c2 = f.entries()
    rho1 = det2(f.phi1)
    rho2 = det2(f.phi2)
    rho12 = (a1 * a2 + b1 * c2) * (-2)
    return SpectralData(rho1, rho12, rho2)


def rho_consistent(s: SpectralData) -> bool:
    """Image constraint of the Hitchin map: rho12^2 = 4 rho1 rho2, exactly."""
    return s.rho12 * s.rho12 == s.rho1 * s.rho2 * 4


def spectral_residual(s: SpectralData, p: SpectralPoint) -> tuple[Fraction, Fraction, Fraction]:
    """(eta1^2 + rho1(z), eta2^2 + rho2(z), 2 eta1 eta2 + rho12(z)).

    The point lies on the spectral surface iff all three vanish.
    """
    r1 = p.eta1 * p.eta1 + s.rho1.evaluate(p.z1, p.z2)
    r2 = p.eta2 * p.eta2 + s.rho2.evaluate(p.z1, p.z2)
    r3 = 2 * p.eta1 * p.eta2 + s.rho12.evaluate(p.z1, p.z2)
    return r1, r2, r3


# ---------------------------------------------------------------------------
# exact square roots
# ---------------------------------------------------------------------------


def _squarefree_decompose(n: int) -> tuple[int, int]:
    """n = s^2 * m with m squarefree (sign carried by m)."""
    if n == 0:
        return 0, 1
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, m = 1, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                m *= d
        d += 1 if d == 2 else 2
    m *= n  # leftover prime
    return s, sign * m


@dataclass(frozen=True)
class EtaValue:
    """Exact value coef * sqrt(radicand) with squarefree radicand.

    Rational values have radicand 1; negative radicands encode imaginary
    square roots.  coef = 0 always pairs with radicand 1.
    """

    coef: Fraction
    radicand: int

    def __post_init__(self):
        if not self.coef and self.radicand != 1:
            object.__setattr__(self, "radicand", 1)

    def is_rational(self) -> bool:
        return self.radicand == 1

    def square(self) -> Fraction:
        return self.coef * self.coef * self.radicand

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.coef

    def __neg__(self) -> "EtaValue":
        return EtaValue(-self.coef, self.radicand)

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coef)
        return f"{self.coef}*sqrt({self.radicand})"


def exact_sqrt(q: Fraction) -> EtaValue:
    """The principal square root of q as coef * sqrt(radicand), exactly."""
    if q == 0:
        return EtaValue(Fraction(0), 1)
    s, m = _squarefree_decompose(q.numerator * q.denominator)
    return EtaValue(Fraction(s, q.denominator), m)


# ---------------------------------------------------------------------------
# fibres
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fibre:
    """Fibre of the spectral surface over a rational base point.

    disc1 and disc2 are the squares -rho1(z) and -rho2(z) of the fibre
    coordinates; pairing_rhs is -rho12(z), so admissible points satisfy
    2 eta1 eta2 = pairing_rhs.  points lists the actual fibre: one ramified
    point when both discriminants vanish, else the two paired points.
    """

    z1: Fraction
    z2: Fraction
    disc1: Fraction
    disc2: Fraction
    pairing_rhs: Fraction
    ramified: bool
    points: tuple[tuple[EtaValue, EtaValue], ...]


def fibre_over_point(f: HiggsField, z1: Fraction, z2: Fraction) -> Fibre:
    """Points of the spectral surface of f over (z1, z2).

    Over an unramified point the two eigenvalue pairs are
    (eta1, -rho12/(2 eta1)) and its negative; the cross pairings fail the
    third surface equation whenever rho12(z) != 0.  The fibre is flagged
    ramified when rho1 or rho2 vanishes at the point (repeated eigenvalue
    of the corresponding component).
    """
    s = hitchin_map(f)
    z1, z2 = Fraction(z1), Fraction(z2)
    r1 = s.rho1.evaluate(z1, z2)
    r2 = s.rho2.evaluate(z1, z2)
    r12 = s.rho12.evaluate(z1, z2)
    ramified = r1 == 0 or r2 == 0
    points: list[tuple[EtaValue, EtaValue]]
    if r1 == 0 and r2 == 0:
        zero = EtaValue(Fraction(0), 1)
        points = [(zero, zero)]
    elif r1 != 0:
        eta1 = exact_sqrt(-r1)
        # 2 eta1 eta2 = -rho12(z); with eta1 = c sqrt(m), eta2 = -rho12/(2cm) sqrt(m)
        partner = Fraction(-r12, 2) / (eta1.coef * eta1.radicand)
        eta2 = EtaValue(partner, eta1.radicand)
        points = [(eta1, eta2), (-eta1, -eta2)]
    else:
        # rho1(z) = 0 < ramified; consistency forces rho12(z) = 0, and the
        # fibre is {0} x {eta2 : eta2^2 = -rho2(z)}
        eta2 = exact_sqrt(-r2)
        zero = EtaValue(Fraction(0), 1)
        points = [(zero, eta2), (zero, -eta2)]
    return Fibre(z1, z2, -r1, -r2, -r12, ramified, tuple(points))


# ---------------------------------------------------------------------------
# quartic genericity and decomposability
# ---------------------------------------------------------------------------


def is_generic_quartic(rho: BiPoly) -> bool:
    """Four distinct projective roots of the binary quartic homogenizing rho.

    rho must be univariate (either variable); the degree deficit counts as
    multiplicity at infinity, detected together with finite multiplicities
    through the resultant of the dehomogenized polynomial and its
    derivative.
    """
    if rho.is_univariate(1):
        coeffs = rho.univariate_coeffs(1)
    elif rho.is_univariate(2):
        coeffs = rho.univariate_coeffs(2)
    else:
        raise NotUnivariate("genericity test needs a univariate quartic")
    if len(coeffs) > 5:
        raise SlotViolation("degree exceeds the quartic slot")
    f = uni.trim(list(coeffs))
    d = uni.deg(f)
    if d < 0:
        return False
    if 4 - d >= 2:
        return False  # multiple root at infinity
    return uni.resultant(f, uni.derivative(f)) != 0


class FibreClass(enum.Enum):
    GENERIC_NO_DECOMPOSABLE = "GenericNoDecomposable"
    PRODUCT_CASE_AXIS1 = "ProductCaseAxis1"
    PRODUCT_CASE_AXIS2 = "ProductCaseAxis2"
    NON_GENERIC_OTHER = "NonGenericOther"


def fibre_decomposability(s: SpectralData) -> FibreClass:
    """Classification of a consistent spectral datum by what its fibre can hold.

    Product cases (rho12 = 0 with one generic quartic and the other
    component zero) are the fibres that do contain decomposable bundles
    (products of a spectral curve with a projective line); generic data
    exclude them; anything else is non-generic.
    """
    if not rho_consistent(s):
        raise InconsistentRho("rho12^2 != 4 rho1 rho2")
    if s.rho12.is_zero() and s.rho2.is_zero() and is_generic_quartic(s.rho1):
        return FibreClass.PRODUCT_CASE_AXIS1
    if s.rho12.is_zero() and s.rho1.is_zero() and is_generic_quartic(s.rho2):
        return FibreClass.PRODUCT_CASE_AXIS2
    if (
        not s.rho12.is_zero()
        and is_generic_quartic(s.rho1)
        and is_generic_quartic(s.rho2)
    ):
        return FibreClass.GENERIC_NO_DECOMPOSABLE
    return FibreClass.NON_GENERIC_OTHER


def product_case_verify(a: int, b: int, m: int, f: HiggsField) -> bool:
    """Verification half of the product-case correspondence.

    For a validated field on O(a,m)+O(b,m): true iff Phi_2 = 0 and the
    Hitchin image has the form (rho1, 0, 0).
    """
    expected = DecomposableBundle(LineBundle(a, m), LineBundle(b, m))
    if f.bundle != expected:
        raise BundleMismatch(f"expected {expected}, got {f.bundle}")
    if not validate_field(f):
        raise SlotViolation("field violates its shape slots")
    if not f.phi2.is_zero():
        return False
    s = hitchin_map(f)
    return s.rho12.is_zero() and s.rho2.is_zero()
