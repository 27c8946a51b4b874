"""Exact arithmetic substrate.

Everything downstream is built from four value types:

* ``Rat`` - arbitrary-precision rationals (``fractions.Fraction``; always
  stored gcd-reduced with a positive denominator, zero is 0/1),
* :class:`BiPoly` - bivariate polynomials in the affine chart coordinates
  ``(z1, z2)`` with ``Rat`` coefficients and non-negative exponents,
* :class:`RatFn` - quotients of two ``BiPoly`` (denominator nonzero),
* :class:`PolyMat2` - 2x2 matrices whose entries are ``BiPoly`` or ``RatFn``.

All values are immutable after construction and all operations are pure
functions, so everything here is safe to share between threads.

Canonical monomial order is graded lexicographic with ``z1 > z2``; it fixes
printing and JSON serialization.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import DegreeBoundViolation, SingularAutomorphism

Rat = Fraction

Term = tuple[int, int]
Scalar = Union[int, Fraction]

NEG_INF = -math.inf


def _as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


def _grlex_key(term: Term) -> tuple[int, int]:
    # graded lex, z1 > z2: compare total degree first, then the z1 exponent
    i, j = term
    return (i + j, i)


class BiPoly:
    """Bivariate polynomial with exact rational coefficients.

    Stored as a sparse map ``(i, j) -> coefficient`` with no zero values and
    non-negative exponents; ``z1^i z2^j`` is the monomial with exponents
    ``(i, j)``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Term, Scalar] | None = None):
        clean: dict[Term, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial ({i}, {j})")
                c = _as_rat(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def variable(cls, axis: int) -> "BiPoly":
        if axis == 1:
            return cls({(1, 0): 1})
        if axis == 2:
            return cls({(0, 1): 1})
        raise ValueError("axis must be 1 or 2")

    @classmethod
    def from_univariate(cls, coeffs: Iterable[Scalar], axis: int) -> "BiPoly":
        """Polynomial ``sum coeffs[k] * z_axis^k``."""
        terms: dict[Term, Scalar] = {}
        for k, c in enumerate(coeffs):
            terms[(k, 0) if axis == 1 else (0, k)] = c
        return cls(terms)

    # -- structure ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        """Terms in descending graded-lex order (leading term first)."""
        for (i, j) in sorted(self._terms, key=_grlex_key, reverse=True):
            yield i, j, self._terms[(i, j)]

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def bidegree(self) -> tuple[float, float]:
        """(max z1-exponent, max z2-exponent); (-inf, -inf) for zero."""
        if not self._terms:
            return (NEG_INF, NEG_INF)
        return (
            max(i for i, _ in self._terms),
            max(j for _, j in self._terms),
        )

    def deg(self, axis: int) -> float:
        return self.bidegree()[0 if axis == 1 else 1]

    def leading_coefficient(self) -> Fraction:
        for _, _, c in self.terms():
            return c
        return Fraction(0)

    def content(self) -> Fraction:
        """gcd of the coefficients (0 for the zero polynomial)."""
        num_gcd = 0
        den_lcm = 1
        for c in self._terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm)

    def is_univariate(self, axis: int) -> bool:
        other = 1 if axis == 1 else 0
        return all(t[other] == 0 for t in self._terms)

    def univariate_coeffs(self, axis: int) -> list[Fraction]:
        """Dense coefficient list [c0, c1, ...] in ``z_axis``; requires univariate."""
        if not self.is_univariate(axis):
            raise ValueError("polynomial is not univariate in the requested axis")
        if not self._terms:
            return []
        pick = 0 if axis == 1 else 1
        d = max(t[pick] for t in self._terms)
        out = [Fraction(0)] * (d + 1)
        for (i, j), c in self._terms.items():
            out[i if axis == 1 else j] = c
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        res = dict(self._terms)
        for t, c in other._terms.items():
            s = res.get(t, Fraction(0)) + c
            if s:
                res[t] = s
            else:
                res.pop(t, None)
        out = BiPoly.__new__(BiPoly)
        out._terms = res
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BiPoly.__new__(BiPoly)
        out._terms = {t: -c for t, c in self._terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, BiPoly)):
            return self + (-other if isinstance(other, BiPoly) else BiPoly.const(-_as_rat(other)))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other) + (-self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_rat(other)
            if not c:
                return BiPoly.zero()
            out = BiPoly.__new__(BiPoly)
            out._terms = {t: v * c for t, v in self._terms.items()}
            return out
        if not isinstance(other, BiPoly):
            return NotImplemented
        res: dict[Term, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                t = (i1 + i2, j1 + j2)
                s = res.get(t, Fraction(0)) + c1 * c2
                if s:
                    res[t] = s
                else:
                    res.pop(t, None)
        out = BiPoly.__new__(BiPoly)
        out._terms = res
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- evaluation and calculus -------------------------------------------

    def evaluate(self, z1: Scalar, z2: Scalar) -> Fraction:
        z1 = _as_rat(z1)
        z2 = _as_rat(z2)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * z1**i * z2**j
        return total

    def derivative(self, axis: int) -> "BiPoly":
        res: dict[Term, Fraction] = {}
        for (i, j), c in self._terms.items():
            if axis == 1 and i > 0:
                res[(i - 1, j)] = c * i
            elif axis == 2 and j > 0:
                res[(i, j - 1)] = c * j
        out = BiPoly.__new__(BiPoly)
        out._terms = res
        return out

    def shift(self, di: int, dj: int) -> "BiPoly":
        """Multiply by the monomial z1^di z2^dj (di, dj >= 0)."""
        if di < 0 or dj < 0:
            raise ValueError("shift exponents must be non-negative")
        out = BiPoly.__new__(BiPoly)
        out._terms = {(i + di, j + dj): c for (i, j), c in self._terms.items()}
        return out

    def exact_div(self, d: "BiPoly") -> "BiPoly | None":
        """Return self / d when d divides self exactly, else None.

        Single-divisor division in graded-lex order: the remainder is zero
        iff d divides self, so this is a complete divisibility test.
        """
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        lt_d = max(d._terms, key=_grlex_key)
        lc_d = d._terms[lt_d]
        rem = dict(self._terms)
        quot: dict[Term, Fraction] = {}
        while rem:
            lt_r = max(rem, key=_grlex_key)
            qi, qj = lt_r[0] - lt_d[0], lt_r[1] - lt_d[1]
            if qi < 0 or qj < 0:
                return None
            qc = rem[lt_r] / lc_d
            quot[(qi, qj)] = qc
            for (i, j), c in d._terms.items():
                t = (i + qi, j + qj)
                s = rem.get(t, Fraction(0)) - qc * c
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        out = BiPoly.__new__(BiPoly)
        out._terms = quot
        return out

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, j, c in self.terms():
            mono = "*".join(
                ([f"z1^{i}" if i > 1 else "z1"] if i else [])
                + ([f"z2^{j}" if j > 1 else "z2"] if j else [])
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        text = " + ".join(parts).replace("+ -", "- ")
        return text

    def __repr__(self) -> str:
        return f"BiPoly({self})"


Z1 = BiPoly.variable(1)
Z2 = BiPoly.variable(2)
ONE = BiPoly.const(1)


def _rat_gcd(a: Fraction, b: Fraction) -> Fraction:
    num = math.gcd(abs(a.numerator), abs(b.numerator))
    den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    return Fraction(num, den)


class RatFn:
    """Quotient of two bivariate polynomials.

    Normalization divides numerator and denominator by their common
    coefficient content and fixes the denominator's leading coefficient to
    be positive; no multivariate gcd is attempted.  Equality is decided by
    cross-multiplication, so equal values always compare equal regardless
    of representation.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFn) and den is None:
            self.num, self.den = num.num, num.den
            return
        num = _coerce_bipoly(num)
        den = ONE if den is None else _coerce_bipoly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = BiPoly.zero(), ONE
            return
        g = _rat_gcd(num.content(), den.content())
        if den.leading_coefficient() < 0:
            g = -g
        if g != 1:
            num = num * (1 / g)
            den = den * (1 / g)
        self.num, self.den = num, den

    def is_polynomial(self) -> bool:
        return self.den == ONE or self.num.exact_div(self.den) is not None

    def as_bipoly(self) -> BiPoly:
        if self.den == ONE:
            return self.num
        q = self.num.exact_div(self.den)
        if q is None:
            raise ValueError(f"{self} is not a polynomial")
        return q

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other):
        other = _coerce_ratfn(other)
        if other is None:
            return NotImplemented
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_ratfn(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_ratfn(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_ratfn(other)
        if other is None:
            return NotImplemented
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_ratfn(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_ratfn(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = _coerce_ratfn(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    # equality is by cross-multiplication, which no cheap structural hash
    # can respect without a full multivariate gcd (excluded by design)
    __hash__ = None

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFn({self})"


def _coerce_bipoly(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return BiPoly.const(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a polynomial")


def _coerce_ratfn(x) -> RatFn | None:
    if isinstance(x, RatFn):
        return x
    if isinstance(x, (int, Fraction, BiPoly)):
        return RatFn(x)
    return None


Entry = Union[BiPoly, RatFn]


class PolyMat2:
    """2x2 matrix of polynomials or rational functions."""

    __slots__ = ("_e",)

    def __init__(self, entries):
        rows = list(entries)
        if len(rows) != 2 or any(len(list(r)) != 2 for r in rows):
            raise ValueError("PolyMat2 needs a 2x2 array of entries")
        self._e = tuple(
            tuple(_coerce_bipoly(x) if isinstance(x, (int, Fraction)) else x for x in row)
            for row in rows
        )
        for row in self._e:
            for x in row:
                if not isinstance(x, (BiPoly, RatFn)):
                    raise TypeError(f"bad matrix entry of type {type(x).__name__}")

    @classmethod
    def zero(cls) -> "PolyMat2":
        return cls([[0, 0], [0, 0]])

    @classmethod
    def identity(cls) -> "PolyMat2":
        return cls([[1, 0], [0, 1]])

    @classmethod
    def trace_free(cls, a: Entry, b: Entry, c: Entry) -> "PolyMat2":
        """Matrix (a b; c -a)."""
        neg_a = -a
        return cls([[a, b], [c, neg_a]])

    def entry(self, i: int, j: int) -> Entry:
        return self._e[i][j]

    def rows(self):
        return self._e

    def __add__(self, other):
        if not isinstance(other, PolyMat2):
            return NotImplemented
        return PolyMat2(
            [[self._e[i][j] + other._e[i][j] for j in range(2)] for i in range(2)]
        )

    def __sub__(self, other):
        if not isinstance(other, PolyMat2):
            return NotImplemented
        return PolyMat2(
            [[self._e[i][j] - other._e[i][j] for j in range(2)] for i in range(2)]
        )

    def __neg__(self):
        return PolyMat2([[-self._e[i][j] for j in range(2)] for i in range(2)])

    def __matmul__(self, other):
        if not isinstance(other, PolyMat2):
            return NotImplemented
        a, b = self._e
        c, d = other._e[0], other._e[1]
        return PolyMat2(
            [
                [a[0] * c[0] + a[1] * d[0], a[0] * c[1] + a[1] * d[1]],
                [b[0] * c[0] + b[1] * d[0], b[0] * c[1] + b[1] * d[1]],
            ]
        )

    def scale(self, c) -> "PolyMat2":
        return PolyMat2([[x * c for x in row] for row in self._e])

    def trace(self) -> Entry:
        return self._e[0][0] + self._e[1][1]

    def is_zero(self) -> bool:
        return all(not x for row in self._e for x in row)

    def is_trace_free(self) -> bool:
        t = self.trace()
        return not t

    def map_entries(self, f) -> "PolyMat2":
        return PolyMat2([[f(x) for x in row] for row in self._e])

    def to_bipoly(self) -> "PolyMat2":
        """Coerce every entry to BiPoly; raises ValueError if any is not polynomial."""
        return self.map_entries(lambda x: x.as_bipoly() if isinstance(x, RatFn) else x)

    def __eq__(self, other):
        if not isinstance(other, PolyMat2):
            return NotImplemented
        for i in range(2):
            for j in range(2):
                a, b = self._e[i][j], other._e[i][j]
                if isinstance(a, RatFn) or isinstance(b, RatFn):
                    if RatFn(a) != RatFn(b):
                        return False
                elif a != b:
                    return False
        return True

    def __hash__(self):
        # hashable exactly when every entry is (entries are BiPoly in all
        # library paths that store matrices in hashed containers)
        return hash(self._e)

    def __str__(self) -> str:
        return "[[{}, {}], [{}, {}]]".format(
            self._e[0][0], self._e[0][1], self._e[1][0], self._e[1][1]
        )

    __repr__ = __str__


# ---------------------------------------------------------------------------
# module operations
# ---------------------------------------------------------------------------


def eval_poly(p: BiPoly, z1: Scalar, z2: Scalar) -> Fraction:
    """Exact evaluation of p at the rational point (z1, z2)."""
    return p.evaluate(z1, z2)


def commutator2(x: PolyMat2, y: PolyMat2) -> PolyMat2:
    """XY - YX."""
    return (x @ y) - (y @ x)


def det2(x: PolyMat2):
    """Determinant; a BiPoly when all entries are polynomial, else a RatFn."""
    d = x.entry(0, 0) * x.entry(1, 1) - x.entry(0, 1) * x.entry(1, 0)
    if isinstance(d, RatFn) and d.is_polynomial():
        return d.as_bipoly()
    return d


def conjugate2(phi: PolyMat2, psi: PolyMat2) -> PolyMat2:
    """psi . phi . psi^{-1}, exactly, with RatFn entries.

    Trace and determinant are preserved identically.  Raises
    SingularAutomorphism when det(psi) vanishes identically.
    """
    d = RatFn(psi.entry(0, 0)) * psi.entry(1, 1) - RatFn(psi.entry(0, 1)) * psi.entry(1, 0)
    if not d:
        raise SingularAutomorphism("conjugating matrix has identically zero determinant")
    adj = PolyMat2(
        [[psi.entry(1, 1), -psi.entry(0, 1)], [-psi.entry(1, 0), psi.entry(0, 0)]]
    )
    raw = (psi @ phi) @ adj
    return raw.map_entries(lambda x: RatFn(x) / d)


def chart_involution(p: BiPoly, bound: tuple[int, int], axis: int) -> BiPoly:
    """Representative of p in the opposite chart along one axis.

    Substitutes ``z_axis -> 1/z_axis`` and clears denominators by the slot
    bound: exponent ``e`` along the axis becomes ``bound_axis - e``.  The
    result is polynomial exactly when the bound dominates the degree;
    otherwise DegreeBoundViolation is raised.  Applying the involution twice
    with the same bound is the identity.
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    cap = bound[0] if axis == 1 else bound[1]
    res: dict[Term, Fraction] = {}
    for i, j, c in p.terms():
        e = i if axis == 1 else j
        flipped = cap - e
        if flipped < 0:
            raise DegreeBoundViolation(
                f"monomial z1^{i} z2^{j} exceeds the axis-{axis} bound {cap}"
            )
        res[(flipped, j) if axis == 1 else (i, flipped)] = c
    return BiPoly(res)
