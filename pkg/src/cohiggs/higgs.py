"""Higgs fields on decomposable rank-2 bundles over P1 x P1.

A field is a pair Phi = Phi_1 d/dz1 + Phi_2 d/dz2 of trace-free 2x2
polynomial matrices on the affine chart V1, with each entry constrained to
a degree box ("slot") determined by the underlying split bundle
L1 + L2: writing Phi_i = (A_i B_i; C_i -A_i),

    A_1 in H0(O(2,0)),              A_2 in H0(O(0,2)),
    B_1 in H0(O(a1-a2+2, b1-b2)),   B_2 in H0(O(a1-a2, b1-b2+2)),
    C_1 in H0(O(a2-a1+2, b2-b1)),   C_2 in H0(O(a2-a1, b2-b1+2)).

Integrability is the vanishing of [Phi_1, Phi_2], equivalently the three
entrywise identities B1*C2 = C1*B2, A1*B2 = B1*A2, C1*A2 = A1*C2.

Stability is slope stability for the polarization H = C0 + F against
Phi-invariant sub-line bundles.  Classification is implemented exactly for
the cases with a complete criterion: unequal-slope split bundles (the
dominant summand is the unique destabilizer), O+O (strict semistability is
equivalent to a common eigenvector of the six coefficient matrices) and
the O(1,0)+O(-1,0) / O(0,1)+O(0,-1) pairs; every other equal-slope bundle
reports Unsupported rather than guessing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import _univariate as uni
from .cohomology import LineBundle
from .errors import (
    BundleMismatch,
    IrrationalEigenvector,
    LeadingCoefficientZero,
    NotInNormalFormDomain,
    NotIntegrable,
    NotStrictlySemistable,
    SlotViolation,
    ZeroC,
    ZeroC1,
)
from .exactalg import BiPoly, PolyMat2, RatFn, commutator2, conjugate2, det2

O = LineBundle


@dataclass(frozen=True)
class DecomposableBundle:
    """L1 + L2 with the first summand written first."""

    L1: LineBundle
    L2: LineBundle

    def __str__(self) -> str:
        return f"{self.L1}+{self.L2}"


@dataclass(frozen=True)
class HiggsShape:
    """Slot (degree box) of each of the six matrix entries."""

    a1: LineBundle
    b1: LineBundle
    c1: LineBundle
    a2: LineBundle
    b2: LineBundle
    c2: LineBundle


def higgs_shape(b: DecomposableBundle) -> HiggsShape:
    da, db = b.L1.a - b.L2.a, b.L1.b - b.L2.b
    return HiggsShape(
        a1=O(2, 0),
        b1=O(da + 2, db),
        c1=O(-da + 2, -db),
        a2=O(0, 2),
        b2=O(da, db + 2),
        c2=O(-da, -db + 2),
    )


def fits_slot(p: BiPoly, slot: LineBundle) -> bool:
    """True iff every monomial of p lies in the slot's box (zero always fits)."""
    if not p:
        return True
    if slot.a < 0 or slot.b < 0:
        return False
    d1, d2 = p.bidegree()
    return d1 <= slot.a and d2 <= slot.b


def _entry_poly(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, RatFn):
        return x.as_bipoly()
    if isinstance(x, (int, Fraction)):
        return BiPoly.const(x)
    raise TypeError(f"matrix entry of type {type(x).__name__} is not polynomial")


@dataclass(frozen=True)
class HiggsField:
    """Underlying split bundle plus the two matrix components on chart V1."""

    bundle: DecomposableBundle
    phi1: PolyMat2
    phi2: PolyMat2

    def __post_init__(self):
        object.__setattr__(self, "phi1", self.phi1.map_entries(_entry_poly))
        object.__setattr__(self, "phi2", self.phi2.map_entries(_entry_poly))

    def entries(self) -> tuple[BiPoly, ...]:
        """(A1, B1, C1, A2, B2, C2)."""
        return (
            self.phi1.entry(0, 0), self.phi1.entry(0, 1), self.phi1.entry(1, 0),
            self.phi2.entry(0, 0), self.phi2.entry(0, 1), self.phi2.entry(1, 0),
        )

    def is_zero(self) -> bool:
        return self.phi1.is_zero() and self.phi2.is_zero()


def field(bundle: DecomposableBundle, a1=0, b1=0, c1=0, a2=0, b2=0, c2=0) -> HiggsField:
    """Convenience constructor from the six entries."""
    return HiggsField(
        bundle,
        PolyMat2.trace_free(_entry_poly(a1), _entry_poly(b1), _entry_poly(c1)),
        PolyMat2.trace_free(_entry_poly(a2), _entry_poly(b2), _entry_poly(c2)),
    )


def validate_field(f: HiggsField) -> bool:
    """Trace-freeness of both components plus the slot boxes of all six entries."""
    if not (f.phi1.is_trace_free() and f.phi2.is_trace_free()):
        return False
    s = higgs_shape(f.bundle)
    a1, b1, c1, a2, b2, c2 = f.entries()
    return (
        fits_slot(a1, s.a1) and fits_slot(b1, s.b1) and fits_slot(c1, s.c1)
        and fits_slot(a2, s.a2) and fits_slot(b2, s.b2) and fits_slot(c2, s.c2)
    )


def trace_free_part(phi1_raw: PolyMat2, phi2_raw: PolyMat2) -> tuple[PolyMat2, PolyMat2]:
    """Subtract (trace/2) * Id from each component."""

    def centre(m: PolyMat2) -> PolyMat2:
        half_tr = m.trace() * Fraction(1, 2)
        return PolyMat2(
            [
                [m.entry(0, 0) - half_tr, m.entry(0, 1)],
                [m.entry(1, 0), m.entry(1, 1) - half_tr],
            ]
        )

    return centre(phi1_raw), centre(phi2_raw)


def wedge(psi: HiggsField, phi: HiggsField) -> PolyMat2:
    """[Psi_1, Phi_2] - [Psi_2, Phi_1]: the d/dz1 ^ d/dz2 coefficient of Psi ^ Phi."""
    if psi.bundle != phi.bundle:
        raise BundleMismatch(f"{psi.bundle} vs {phi.bundle}")
    return commutator2(psi.phi1, phi.phi2) - commutator2(psi.phi2, phi.phi1)


def is_integrable(f: HiggsField) -> bool:
    """The three entrywise identities; equivalent to [Phi_1, Phi_2] = 0."""
    a1, b1, c1, a2, b2, c2 = f.entries()
    return b1 * c2 == c1 * b2 and a1 * b2 == b1 * a2 and c1 * a2 == a1 * c2


# ---------------------------------------------------------------------------
# constant eigenvector machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryQuadratic:
    """q(x,y) = q20 x^2 + q11 xy + q02 y^2 over the rationals."""

    q20: Fraction
    q11: Fraction
    q02: Fraction

    def evaluate(self, x: Fraction, y: Fraction) -> Fraction:
        return self.q20 * x * x + self.q11 * x * y + self.q02 * y * y

    def is_zero(self) -> bool:
        return not (self.q20 or self.q11 or self.q02)

    def univariate(self) -> list[Fraction]:
        """q(x, 1) as a dense coefficient list."""
        return uni.trim([self.q02, self.q11, self.q20])

    def mult_at_infinity(self) -> int:
        """Multiplicity of the projective root [1:0], i.e. of the factor y."""
        return 2 - uni.deg(self.univariate()) if not self.is_zero() else 2


def _constant_matrix(x) -> tuple[Fraction, Fraction, Fraction]:
    """(a, b, c) of a constant trace-free matrix (a b; c -a)."""
    if isinstance(x, PolyMat2):
        vals = []
        for i in range(2):
            for j in range(2):
                e = x.entry(i, j)
                if isinstance(e, RatFn):
                    e = e.as_bipoly()
                d1, d2 = e.bidegree()
                if d1 > 0 or d2 > 0:
                    raise ValueError("matrix entry is not constant")
                vals.append(e.coeff(0, 0))
        a, b, c, d = vals
    else:
        (a, b), (c, d) = ((Fraction(v) for v in row) for row in x)
    if a + d != 0:
        raise ValueError("matrix is not trace-free")
    return a, b, c


def eigen_quadratic(x) -> BinaryQuadratic:
    """Eigenvector form of a constant trace-free matrix (a b; c -a).

    v = (x, y) is an eigenvector iff q(v) = 0, with
    q(x, y) = c x^2 - 2a xy - b y^2.
    """
    a, b, c = _constant_matrix(x)
    return BinaryQuadratic(c, -2 * a, -b)


def _family_common_factor(quads: list[BinaryQuadratic]) -> tuple[int, list[Fraction]]:
    """(multiplicity of the common factor y, monic gcd of the affine parts)."""
    m_inf = min(q.mult_at_infinity() for q in quads)
    g: list[Fraction] = []
    for q in quads:
        g = uni.gcd(g, q.univariate())
    return m_inf, g


def common_eigenvector_exists(mats) -> bool:
    """True iff the given constant trace-free matrices share an eigenvector.

    Zero matrices are dropped (every vector is an eigenvector of 0); an
    empty or all-zero family is vacuously True.  The test is whether the
    gcd of the eigenvector quadratics has a nonconstant homogeneous factor,
    i.e. a common projective root over the algebraic closure.
    """
    quads = []
    for m in mats:
        q = eigen_quadratic(m)
        if not q.is_zero():
            quads.append(q)
    if not quads:
        return True
    m_inf, g = _family_common_factor(quads)
    return m_inf >= 1 or uni.deg(g) >= 1


def _rational_common_eigenvector(quads: list[BinaryQuadratic]):
    """A projective rational common root (x, y) of the family, or None.

    Prefers [1:0] when available (it keeps upper-triangular input fixed),
    then the smallest rational affine root.  Returns None when the common
    factor is nonconstant but irreducible over the rationals.
    """
    m_inf, g = _family_common_factor(quads)
    if m_inf >= 1:
        return (Fraction(1), Fraction(0))
    d = uni.deg(g)
    if d == 1:
        return (-g[0] / g[1], Fraction(1))
    if d == 2:
        disc = g[1] * g[1] - 4 * g[2] * g[0]
        root = _fraction_sqrt(disc)
        if root is None:
            return None
        xs = sorted({(-g[1] - root) / (2 * g[2]), (-g[1] + root) / (2 * g[2])})
        return (xs[0], Fraction(1))
    return None


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    import math

    n = math.isqrt(q.numerator)
    d = math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


# ---------------------------------------------------------------------------
# stability
# ---------------------------------------------------------------------------


class StabilityClass(enum.Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"
    UNSUPPORTED = "Unsupported"


def _coefficient_matrices(f: HiggsField) -> list[list[list[Fraction]]]:
    """The six constant matrices M0,M1,M2 (z1-coefficients of Phi_1) and
    N0,N1,N2 (z2-coefficients of Phi_2) for a field on O+O."""
    mats = []
    for mat, axis in ((f.phi1, 1), (f.phi2, 2)):
        for k in range(3):
            rows = []
            for i in range(2):
                row = []
                for j in range(2):
                    p = mat.entry(i, j)
                    row.append(p.coeff(k, 0) if axis == 1 else p.coeff(0, k))
                rows.append(row)
            mats.append(rows)
    return mats


_PM10 = frozenset({O(1, 0), O(-1, 0)})
_PM01 = frozenset({O(0, 1), O(0, -1)})


def stability_classify(f: HiggsField) -> StabilityClass:
    """Slope-stability classification of a validated integrable field.

    Unequal slopes: the dominant summand is the unique destabilizing
    sub-line bundle; it is invariant iff both lower-left entries (after
    putting the dominant summand first) vanish, giving Unstable.  When it
    is not invariant the pair is semistable; mu(E) is a half-integer for
    odd total slope, hence unattained by sub-line bundles, giving Stable.
    Even total slope is decided only for the classified pairs
    O(1,0)+O(-1,0) and O(0,1)+O(0,-1) (every slope-0 sub-line bundle sits
    inside the dominant summand), else Unsupported.

    Equal slopes: only O+O has a complete criterion (common eigenvector of
    the coefficient matrices <=> strictly semistable, never unstable);
    everything else is Unsupported.
    """
    if not validate_field(f):
        raise SlotViolation("field violates its shape slots or trace-freeness")
    if not is_integrable(f):
        raise NotIntegrable("field is not integrable")
    l1, l2 = f.bundle.L1, f.bundle.L2
    mu1, mu2 = l1.slope(), l2.slope()
    if mu1 == mu2:
        if l1 == l2 == O(0, 0):
            if common_eigenvector_exists(_coefficient_matrices(f)):
                return StabilityClass.STRICTLY_SEMISTABLE
            return StabilityClass.STABLE
        return StabilityClass.UNSUPPORTED
    # dominant summand first; swapping conjugates by the permutation matrix,
    # which exchanges the B and C entries
    if mu1 > mu2:
        low1, low2 = f.phi1.entry(1, 0), f.phi2.entry(1, 0)
    else:
        l1, l2 = l2, l1
        low1, low2 = f.phi1.entry(0, 1), f.phi2.entry(0, 1)
    if not low1 and not low2:
        return StabilityClass.UNSTABLE
    if (l1.slope() + l2.slope()) % 2 != 0:
        return StabilityClass.STABLE
    pair = frozenset({l1, l2})
    if pair == _PM10 or pair == _PM01:
        return StabilityClass.STABLE
    return StabilityClass.UNSUPPORTED


def graded_object(f: HiggsField) -> HiggsField:
    """Associated graded of a strictly semistable field on O+O.

    Conjugates a rational common eigenvector to the first basis vector and
    keeps only the diagonal (A, -A) per component.  Raises
    NotStrictlySemistable when the field is not strictly semistable, and
    IrrationalEigenvector when the only common eigenvectors live in a
    quadratic extension (the graded object then has no representation with
    rational coefficients).
    """
    if stability_classify(f) is not StabilityClass.STRICTLY_SEMISTABLE:
        raise NotStrictlySemistable("graded object needs a strictly semistable field")
    quads = []
    for m in _coefficient_matrices(f):
        q = eigen_quadratic(m)
        if not q.is_zero():
            quads.append(q)
    if not quads:
        return f  # zero field: already diagonal
    v = _rational_common_eigenvector(quads)
    if v is None:
        raise IrrationalEigenvector(
            "common eigenvector exists only over a quadratic extension"
        )
    x0, y0 = v
    if y0 == 0:
        phi1, phi2 = f.phi1, f.phi2
    else:
        # change of basis (v, e1); conjugating by its inverse sends v to e1
        psi_inv = PolyMat2(
            [[BiPoly.const(0), BiPoly.const(1 / y0)],
             [BiPoly.const(1), BiPoly.const(-x0 / y0)]]
        )
        phi1 = conjugate2(f.phi1, psi_inv).to_bipoly()
        phi2 = conjugate2(f.phi2, psi_inv).to_bipoly()
    for m in (phi1, phi2):
        if m.entry(1, 0):
            raise NotStrictlySemistable("eigenvector conjugation failed to triangularize")
    a1 = phi1.entry(0, 0)
    a2 = phi2.entry(0, 0)
    return field(f.bundle, a1=a1, a2=a2)


def s_equiv_rep(f: HiggsField) -> tuple[BiPoly, BiPoly]:
    """Canonical (A1, A2) representative of the S-equivalence class.

    Two strictly semistable fields on O+O are S-equivalent iff their graded
    diagonals agree up to a common sign; the sign is fixed by making the
    leading coefficient (graded-lex) of A1 + A2 positive, falling back to
    A1 then A2 when the sum vanishes.
    """
    g = graded_object(f)
    a1 = g.phi1.entry(0, 0)
    a2 = g.phi2.entry(0, 0)
    key = a1 + a2
    if not key:
        key = a1 if a1 else a2
    if key and key.leading_coefficient() < 0:
        a1, a2 = -a1, -a2
    return a1, a2


# ---------------------------------------------------------------------------
# normal forms and constructions
# ---------------------------------------------------------------------------

_F0_BUNDLE = DecomposableBundle(O(0, 0), O(-1, 0))
_PM1_BUNDLE = DecomposableBundle(O(1, 0), O(-1, 0))


def normal_form_F0(f: HiggsField) -> tuple[HiggsField, PolyMat2]:
    """Conjugacy-class representative on O+O(-1,0) with Phi_2 = 0.

    Writes C1 = alpha (z1 - p) (alpha = leading coefficient, required
    nonzero) and conjugates by Psi = (1 P; 0 Q) with Q = 1/alpha and
    P = -(1/alpha) [A1'(p) + (A1''(p)/2)(z1 - p)], producing constant
    diagonal A1(p) and subdiagonal z1 - p.  Determinant is preserved
    exactly and the representative is a fixed point of the map.
    """
    if f.bundle != _F0_BUNDLE:
        raise BundleMismatch(f"expected {_F0_BUNDLE}, got {f.bundle}")
    if not validate_field(f):
        raise SlotViolation("field violates its shape slots")
    if not f.phi2.is_zero():
        raise NotInNormalFormDomain("normal form requires Phi_2 = 0")
    c1 = f.phi1.entry(1, 0)
    c_lead = c1.coeff(1, 0)
    if not c_lead:
        raise LeadingCoefficientZero("C1 must have nonzero z1 coefficient")
    alpha = c_lead
    p = -c1.coeff(0, 0) / alpha
    a1 = f.phi1.entry(0, 0)
    coeffs = a1.univariate_coeffs(1) + [Fraction(0)] * 3
    a_at_p = uni.evaluate(coeffs[:3], p)
    a_prime_p = coeffs[1] + 2 * coeffs[2] * p
    a_half_second = coeffs[2]
    z1_minus_p = BiPoly({(1, 0): 1, (0, 0): -p})
    big_p = (BiPoly.const(a_prime_p) + a_half_second * z1_minus_p) * (-1 / alpha)
    psi = PolyMat2([[BiPoly.const(1), big_p], [BiPoly.const(0), BiPoly.const(1 / alpha)]])
    rep = conjugate2(f.phi1, psi).to_bipoly()
    assert rep.entry(0, 0) == BiPoly.const(a_at_p)
    assert rep.entry(1, 0) == z1_minus_p
    return HiggsField(f.bundle, rep, PolyMat2.zero()), psi


def normal_form_pm1(f: HiggsField) -> HiggsField:
    """Representative (0 B; 1 0) on O(1,0)+O(-1,0) with Phi_2 = 0.

    Rescales the constant C1 to 1 and shears off the diagonal; the top-right
    entry of the result is C1*B1 + A1^2 = -det Phi_1, so determinant is
    preserved exactly and equal determinants give equal representatives.
    """
    if f.bundle != _PM1_BUNDLE:
        raise BundleMismatch(f"expected {_PM1_BUNDLE}, got {f.bundle}")
    if not validate_field(f):
        raise SlotViolation("field violates its shape slots")
    if not f.phi2.is_zero():
        raise NotInNormalFormDomain("normal form requires Phi_2 = 0")
    c = f.phi1.entry(1, 0).coeff(0, 0)
    if not c:
        raise ZeroC1("C1 vanishes identically")
    a1 = f.phi1.entry(0, 0)
    shear = PolyMat2([[BiPoly.const(1), -a1], [BiPoly.const(0), BiPoly.const(1)]])
    rescale = PolyMat2([[BiPoly.const(c), BiPoly.const(0)], [BiPoly.const(0), BiPoly.const(1)]])
    rep = conjugate2(f.phi1, shear @ rescale).to_bipoly()
    assert not rep.entry(0, 0) and rep.entry(1, 0) == BiPoly.const(1)
    return HiggsField(f.bundle, rep, PolyMat2.zero())


def section_Q(rho: BiPoly, axis: int) -> HiggsField:
    """The stable field (0 -rho; 1 0) on O(1,0)+O(-1,0) (axis 1) or
    O(0,1)+O(0,-1) (axis 2); det Phi_axis = rho, so this right-inverts the
    corresponding component of the Hitchin map."""
    slot = O(4, 0) if axis == 1 else O(0, 4)
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    if not fits_slot(rho, slot):
        raise SlotViolation(f"rho does not fit the slot {slot}")
    mat = PolyMat2([[BiPoly.const(0), -rho], [BiPoly.const(1), BiPoly.const(0)]])
    if axis == 1:
        return HiggsField(_PM1_BUNDLE, mat, PolyMat2.zero())
    return HiggsField(
        DecomposableBundle(O(0, 1), O(0, -1)), PolyMat2.zero(), mat
    )


@dataclass(frozen=True)
class PullbackField:
    """A field pulled back from one projective line, with its spectral datum."""

    field: HiggsField
    rho: BiPoly
    axis: int

    def membership(self, p: Fraction, eta: Fraction) -> bool:
        """Does (p, eta) lie on the associated spectral curve eta^2 = -rho(p)?"""
        value = self.rho.evaluate(p, 0) if self.axis == 1 else self.rho.evaluate(0, p)
        return Fraction(eta) ** 2 + value == 0


def pullback_from_line(a: BiPoly, b: BiPoly, c: BiPoly, axis: int) -> PullbackField:
    """Pull back a stable degree -1 field from a projective line factor.

    a, b, c are univariate in the axis variable of degrees <= 2, 3, 1; the
    result lives on O+O(-1,0) (axis 1) or O+O(0,-1) (axis 2) with the other
    component zero.  rho = det Phi = -(a^2 + b c); the membership test of
    :class:`PullbackField` recognises points of eta^2 = a(p)^2 + b(p)c(p).
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    bounds = ((2, 0), (3, 0), (1, 0)) if axis == 1 else ((0, 2), (0, 3), (0, 1))
    for poly, bound in zip((a, b, c), bounds):
        if not fits_slot(poly, O(*bound)):
            raise SlotViolation(f"{poly} does not fit the slot O{bound}")
    if not c:
        raise ZeroC("the lower-left entry must be nonzero for stability")
    mat = PolyMat2.trace_free(a, b, c)
    if axis == 1:
        f = HiggsField(_F0_BUNDLE, mat, PolyMat2.zero())
        rho = det2(f.phi1)
    else:
        f = HiggsField(
            DecomposableBundle(O(0, 0), O(0, -1)), PolyMat2.zero(), mat
        )
        rho = det2(f.phi2)
    return PullbackField(f, rho, axis)
