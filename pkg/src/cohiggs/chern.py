"""Chern-class bookkeeping and the numerical decision procedures.

Rank-2 first Chern classes are written c1 = alpha*C0 + beta*F, c2 = gamma.
The intersection form on P1 x P1 is hard-coded (C0^2 = F^2 = 0, C0.F = 1).
Twisting by a line bundle reaches exactly one of the four reduced classes
0, -F, -C0, -C0-F according to the parities of (alpha, beta), and the
moduli-existence question descends to a single threshold on the twisted
second Chern class.

For odd-odd parities the widely quoted closed form "2*gamma >= alpha*beta - 2"
disagrees with the bound obtained by composing the class reduction with the
necessity theorem for -C0-F (which forces c2 >= 1):  the composition yields
2*gamma >= alpha*beta + 1.  This module follows the reduction route and
exposes the disagreement as a diagnostic flag; the two verdicts differ
exactly on the boundary tuples with gamma' = 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cohomology import LineBundle


@dataclass(frozen=True)
class ChernData:
    """c1 = alpha*C0 + beta*F and c2 = gamma."""

    alpha: int
    beta: int
    gamma: int


@dataclass(frozen=True)
class NumericalInvariants:
    """Extension invariants: d = splitting type on the general fibre, r = push-forward degree."""

    d: int
    r: int


class ReducedTag(enum.Enum):
    ZERO = "Zero"
    MINUS_F = "MinusF"
    MINUS_C0 = "MinusC0"
    MINUS_C0_MINUS_F = "MinusC0MinusF"


@dataclass(frozen=True)
class ReducedClass:
    tag: ReducedTag
    twist: LineBundle
    gamma_prime: int


def intersect(c0_coeff1: int, f_coeff1: int, c0_coeff2: int, f_coeff2: int) -> int:
    """Intersection number of a1*C0 + b1*F with a2*C0 + b2*F."""
    return c0_coeff1 * f_coeff2 + f_coeff1 * c0_coeff2


def twisted_chern(c: ChernData, x: int, y: int) -> ChernData:
    """Chern data of E tensor O(x,y).

    O(x,y) has class y*C0 + x*F, so c1 shifts by (2y, 2x) and
    c2 by c1(E).c1(L) + c1(L)^2 = alpha*x + beta*y + 2*x*y.
    """
    shift = intersect(c.alpha, c.beta, y, x) + intersect(y, x, y, x)
    return ChernData(c.alpha + 2 * y, c.beta + 2 * x, c.gamma + shift)


def reduce_class(c: ChernData) -> ReducedClass:
    """Twist to the unique reduced class determined by the parities of (alpha, beta).

    Returns the tag, the twisting line bundle L, and the twisted second
    Chern class gamma', which is always an integer:
    gamma - alpha*beta/2 for the tags Zero/MinusF/MinusC0 and
    gamma + (1 - alpha*beta)/2 for MinusC0MinusF.
    """
    a_even = c.alpha % 2 == 0
    b_even = c.beta % 2 == 0
    # choose (x, y) with alpha + 2y and beta + 2x the reduced class
    if a_even and b_even:
        tag = ReducedTag.ZERO
        x, y = -c.beta // 2, -c.alpha // 2
    elif a_even:
        tag = ReducedTag.MINUS_F
        x, y = -(1 + c.beta) // 2, -c.alpha // 2
    elif b_even:
        tag = ReducedTag.MINUS_C0
        x, y = -c.beta // 2, -(1 + c.alpha) // 2
    else:
        tag = ReducedTag.MINUS_C0_MINUS_F
        x, y = -(1 + c.beta) // 2, -(1 + c.alpha) // 2
    twisted = twisted_chern(c, x, y)
    return ReducedClass(tag, LineBundle(x, y), twisted.gamma)


def ext_length(c: ChernData, inv: NumericalInvariants) -> int:
    """Length of the point scheme in the canonical extension presentation.

    ell = gamma - alpha*r - beta*d + 2*d*r.
    """
    return c.gamma - c.alpha * inv.r - c.beta * inv.d + 2 * inv.d * inv.r


def bundle_moduli_nonempty(c: ChernData, inv: NumericalInvariants) -> bool:
    """Non-emptiness of the bundle moduli M(c1, c2, d, r).

    True iff ell >= 0 and (2d > alpha, or 2d = alpha and beta - 2r <= ell).
    """
    ell = ext_length(c, inv)
    if ell < 0:
        return False
    two_d = 2 * inv.d
    return two_d > c.alpha or (two_d == c.alpha and c.beta - 2 * inv.r <= ell)


def cohiggs_moduli_nonempty(c: ChernData) -> bool:
    """Non-emptiness of the rank-2 semistable co-Higgs moduli for (c1, c2).

    Reduces the class and thresholds gamma': >= 0 for Zero/MinusF/MinusC0,
    >= 1 for MinusC0MinusF.  When non-empty the moduli always contains a
    pair with nonzero Higgs field.
    """
    red = reduce_class(c)
    if red.tag is ReducedTag.MINUS_C0_MINUS_F:
        return red.gamma_prime >= 1
    return red.gamma_prime >= 0


def theorem48_case2_discrepancy(c: ChernData) -> bool:
    """True iff the printed odd-odd closed form and the reduction route disagree.

    For odd alpha, beta the printed bound 2*gamma >= alpha*beta - 2 admits
    exactly one extra line of tuples, those with gamma' = 0.
    """
    if c.alpha % 2 == 0 or c.beta % 2 == 0:
        return False
    red = reduce_class(c)
    printed = 2 * c.gamma >= c.alpha * c.beta - 2
    return printed != (red.gamma_prime >= 1)


def no_nontrivial_higgs_region(inv: NumericalInvariants, c2: int) -> bool:
    """Region (for c1 = -F) where every bundle in M(-F, c2, d, r) is stable
    with only the zero Higgs field.

    True iff d > 1, r <= -1-d and c2 >= 3 - d(1+2r), or
            d = 1, r <= -2 and c2 >= -4r - 1.
    """
    d, r = inv.d, inv.r
    if d > 1 and r <= -1 - d and c2 >= 3 - d * (1 + 2 * r):
        return True
    if d == 1 and r <= -2 and c2 >= -4 * r - 1:
        return True
    return False
