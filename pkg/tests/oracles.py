"""Independent oracles and random generators for the test suite.

Everything here deliberately avoids the library code paths it is used to
check: the eigenvector search enumerates roots over explicit quadratic
extensions, conjugation results are verified through the cross-multiplied
identity R * Psi = Psi * Phi, and matrix products are spelled out by hand.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from cohiggs.cohomology import LineBundle
from cohiggs.exactalg import BiPoly, PolyMat2, RatFn
from cohiggs.higgs import DecomposableBundle, HiggsField, field, higgs_shape

# ---------------------------------------------------------------------------
# quadratic-extension arithmetic: numbers a + b*sqrt(D)
# ---------------------------------------------------------------------------

QE = tuple[Fraction, Fraction]


def qe(a, b=0) -> QE:
    return (Fraction(a), Fraction(b))


def qe_add(x: QE, y: QE) -> QE:
    return (x[0] + y[0], x[1] + y[1])


def qe_sub(x: QE, y: QE) -> QE:
    return (x[0] - y[0], x[1] - y[1])


def qe_mul(x: QE, y: QE, d: Fraction) -> QE:
    return (x[0] * y[0] + x[1] * y[1] * d, x[0] * y[1] + x[1] * y[0])


def qe_is_zero(x: QE) -> bool:
    return not (x[0] or x[1])


def _is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    return (
        math.isqrt(q.numerator) ** 2 == q.numerator
        and math.isqrt(q.denominator) ** 2 == q.denominator
    )


def _sqrt_fraction(q: Fraction) -> Fraction:
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def _eigen_candidates(mat) -> list[tuple[QE, QE, Fraction]]:
    """Projective eigenvector candidates (x, y, D) of one trace-free matrix.

    v = (x, y) is an eigenvector of (a b; c -a) iff
    (a x + b y) y = (c x - a y) x; setting y = 1 this is the quadratic
    -c t^2 + 2a t + b = 0, plus the direction (1, 0) exactly when c = 0.
    """
    (a, b), (c, _) = mat
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    out: list[tuple[QE, QE, Fraction]] = []
    if c == 0:
        out.append((qe(1), qe(0), Fraction(0)))
        if a != 0:
            out.append((qe(Fraction(-b, 2 * a)), qe(1), Fraction(0)))
        return out
    disc = a * a + b * c
    if _is_square(disc):
        root = _sqrt_fraction(disc)
        for s in ((a + root) / c, (a - root) / c):
            out.append((qe(s), qe(1), Fraction(0)))
    else:
        out.append(((a / c, Fraction(1) / c), qe(1), disc))
        out.append(((a / c, Fraction(-1) / c), qe(1), disc))
    return out


def _is_eigenvector(mat, x: QE, y: QE, d: Fraction) -> bool:
    (a, b), (c, _) = mat
    a, b, c = qe(a), qe(b), qe(c)
    lhs = qe_mul(qe_add(qe_mul(a, x, d), qe_mul(b, y, d)), y, d)
    rhs = qe_mul(qe_sub(qe_mul(c, x, d), qe_mul(a, y, d)), x, d)
    return qe_is_zero(qe_sub(lhs, rhs))


def brute_force_common_eigenvector(mats) -> bool:
    """Root-substitution oracle for the common-eigenvector question.

    Enumerates the projective eigenvector directions of the first nonzero
    matrix over the rationals or the quadratic extension of its
    discriminant, and substitutes each into the eigenvector condition of
    the remaining matrices.
    """
    live = []
    for m in mats:
        rows = [[Fraction(x) for x in row] for row in m]
        if any(any(row) for row in rows):
            live.append(rows)
    if not live:
        return True
    for x, y, d in _eigen_candidates(live[0]):
        if all(_is_eigenvector(m, x, y, d) for m in live[1:]):
            return True
    return False


# ---------------------------------------------------------------------------
# matrix oracles
# ---------------------------------------------------------------------------


def mat_mul_oracle(x: PolyMat2, y: PolyMat2) -> list[list]:
    """2x2 product written out by hand (independent of PolyMat2.__matmul__)."""
    e = lambda m, i, j: m.entry(i, j)
    return [
        [
            e(x, 0, 0) * e(y, 0, 0) + e(x, 0, 1) * e(y, 1, 0),
            e(x, 0, 0) * e(y, 0, 1) + e(x, 0, 1) * e(y, 1, 1),
        ],
        [
            e(x, 1, 0) * e(y, 0, 0) + e(x, 1, 1) * e(y, 1, 0),
            e(x, 1, 0) * e(y, 0, 1) + e(x, 1, 1) * e(y, 1, 1),
        ],
    ]


def check_conjugation(result: PolyMat2, psi: PolyMat2, phi: PolyMat2) -> bool:
    """R = Psi Phi Psi^{-1} without inverting: R Psi == Psi Phi entrywise."""
    lhs = mat_mul_oracle(result, psi)
    rhs = mat_mul_oracle(psi, phi)
    return all(RatFn(lhs[i][j]) == RatFn(rhs[i][j]) for i in range(2) for j in range(2))


# ---------------------------------------------------------------------------
# random generators
# ---------------------------------------------------------------------------


def random_rat(rng: random.Random, height: int = 9) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, 3))


def random_bipoly(rng: random.Random, d1: int, d2: int, height: int = 9, density: float = 0.7) -> BiPoly:
    if d1 < 0 or d2 < 0:
        return BiPoly.zero()
    terms = {}
    for i in range(d1 + 1):
        for j in range(d2 + 1):
            if rng.random() < density:
                terms[(i, j)] = random_rat(rng, height)
    return BiPoly(terms)


def slot_poly(rng: random.Random, slot: LineBundle, height: int = 9) -> BiPoly:
    return random_bipoly(rng, slot.a, slot.b, height)


def random_field(rng: random.Random, bundle: DecomposableBundle, height: int = 9) -> HiggsField:
    """Uniformly random validated field (not necessarily integrable)."""
    s = higgs_shape(bundle)
    return field(
        bundle,
        a1=slot_poly(rng, s.a1, height),
        b1=slot_poly(rng, s.b1, height),
        c1=slot_poly(rng, s.c1, height),
        a2=slot_poly(rng, s.a2, height),
        b2=slot_poly(rng, s.b2, height),
        c2=slot_poly(rng, s.c2, height),
    )


def random_constant_invertible(rng: random.Random) -> PolyMat2:
    while True:
        a, b, c, d = (random_rat(rng, 4) for _ in range(4))
        if a * d - b * c:
            return PolyMat2(
                [[BiPoly.const(a), BiPoly.const(b)], [BiPoly.const(c), BiPoly.const(d)]]
            )


def random_univariate(rng: random.Random, deg: int, axis: int, height: int = 9) -> BiPoly:
    return BiPoly.from_univariate([random_rat(rng, height) for _ in range(deg + 1)], axis)


_O00 = DecomposableBundle(LineBundle(0, 0), LineBundle(0, 0))


def random_integrable_field(rng: random.Random, bundle: DecomposableBundle) -> HiggsField:
    """Random field that is integrable by construction.

    Strategies: one component zero, or both components univariate multiples
    of a common constant trace-free matrix; on O+O the result is optionally
    conjugated by a random constant automorphism (which preserves both the
    slots and integrability).
    """
    s = higgs_shape(bundle)
    choice = rng.randrange(3)
    if choice == 0:  # phi2 = 0
        f = field(
            bundle,
            a1=slot_poly(rng, s.a1),
            b1=slot_poly(rng, s.b1),
            c1=slot_poly(rng, s.c1),
        )
    elif choice == 1:  # phi1 = 0
        f = field(
            bundle,
            a2=slot_poly(rng, s.a2),
            b2=slot_poly(rng, s.b2),
            c2=slot_poly(rng, s.c2),
        )
    else:
        # proportional pairs: phi1 = g1(z1) M, phi2 = g2(z2) M for a constant
        # trace-free M supported in the slots both components allow
        def both_fit(s1: LineBundle, s2: LineBundle) -> bool:
            return min(s1.a, s1.b, s2.a, s2.b) >= 0

        am = random_rat(rng, 3)
        bm = random_rat(rng, 3) if both_fit(s.b1, s.b2) else Fraction(0)
        cm = random_rat(rng, 3) if both_fit(s.c1, s.c2) else Fraction(0)
        g1 = random_univariate(rng, 2, 1)
        g2 = random_univariate(rng, 2, 2)
        f = field(
            bundle,
            a1=g1 * am, b1=g1 * bm, c1=g1 * cm,
            a2=g2 * am, b2=g2 * bm, c2=g2 * cm,
        )
    if bundle == _O00 and rng.random() < 0.5:
        from cohiggs.exactalg import conjugate2

        psi = random_constant_invertible(rng)
        f = HiggsField(
            bundle,
            conjugate2(f.phi1, psi).to_bipoly(),
            conjugate2(f.phi2, psi).to_bipoly(),
        )
    return f
