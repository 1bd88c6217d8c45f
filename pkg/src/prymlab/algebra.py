"""Exact univariate and bivariate polynomial arithmetic over the rationals.

Everything in this package ultimately reduces to computations in Q[x],
Q[x,x'] and truncated Laurent series rings with exact rational coefficients.
This module provides those substrates:

    ExactScalar    alias for fractions.Fraction (always reduced, exact)
    Poly           dense univariate polynomials, coefficients ascending
    BiPoly         dense bivariate polynomials, grid indexed (x-deg, x'-deg)
    LaurentSeries  truncated Laurent series with an explicit validity window
    TridiagSpec    tridiagonal matrices with polynomial diagonal entries

plus the structural operations the rest of the package consumes:
divided differences, parity projections, tridiagonal minor determinants and
the monic-square splitting f = p^2 + r.

Coefficient slots are duck typed: the same Poly/BiPoly code is reused with
MultiPoly (symbolic.py) or LaurentSeries coefficients whenever an identity
has to hold symbolically or along a formal solution.  The generic additive
zero is the plain int 0, which coerces correctly against every coefficient
type used here.

Text format for rational polynomials: comma-separated coefficients in
ascending degree, each an integer or `p/q`, e.g. `-4,0,9,0,-6,0,1` is
x^6 - 6x^4 + 9x^2 - 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ExactScalar = Fraction


class TruncationError(ArithmeticError):
    """A Laurent-series coefficient beyond the validity window was requested."""


# ---------------------------------------------------------------------------
# rational parsing / formatting
# ---------------------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    """Parse `p/q` or an integer literal into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_poly(text: str) -> "Poly":
    """Parse the comma-separated ascending-coefficient text format."""
    text = text.strip()
    if not text:
        return Poly()
    return Poly([parse_rational(part) for part in text.split(",")])


def format_poly(p: "Poly") -> str:
    return ",".join(format_rational(c) for c in p.coeffs) if p.coeffs else "0"


# ---------------------------------------------------------------------------
# dense univariate polynomials
# ---------------------------------------------------------------------------

class Poly:
    """Dense univariate polynomial; coeffs[k] multiplies x^k.

    The zero polynomial has an empty coefficient list and degree -1.
    Coefficients may live in any commutative ring that supports +, -, *
    and comparison with 0 (Fraction, MultiPoly, LaurentSeries, ...).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to the sentinel -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- ring operations ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if isinstance(other, int) and other == 0:
                return self
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __radd__(self, other) -> "Poly":
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        return Poly([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return Poly([other * c for c in self.coeffs])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structural operations ---------------------------------------------

    def evaluate(self, x):
        """Horner evaluation; x may live in any compatible ring."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reflect(self) -> "Poly":
        """Substitute x -> -x."""
        return Poly([-c if k & 1 else c for k, c in enumerate(self.coeffs)])

    def even_odd_parts(self) -> tuple["Poly", "Poly"]:
        """Split into (even, odd) parts with p = even + odd."""
        even = [c if k % 2 == 0 else 0 for k, c in enumerate(self.coeffs)]
        odd = [c if k % 2 == 1 else 0 for k, c in enumerate(self.coeffs)]
        return Poly(even), Poly(odd)

    def is_even(self) -> bool:
        return all(c == 0 for k, c in enumerate(self.coeffs) if k % 2 == 1)

    def is_odd(self) -> bool:
        return all(c == 0 for k, c in enumerate(self.coeffs) if k % 2 == 0)

    def decimate_even(self) -> "Poly":
        """For even p return g with p(x) = g(x^2)."""
        if not self.is_even():
            raise ValueError("polynomial is not even")
        return Poly(self.coeffs[0::2])

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def divrem(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Exact long division over a field of coefficients."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        quot = [0] * max(0, len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead if isinstance(c, Fraction) or isinstance(lead, Fraction) else c * (1 / lead)
            quot[k - dd] = q
            for j, b in enumerate(divisor.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - q * b
        return Poly(quot), Poly(rem[:dd])

    def __repr__(self) -> str:
        return f"Poly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        try:
            return format_poly(self)
        except TypeError:
            return ",".join(str(c) for c in self.coeffs)


def deflate(p: Poly, y) -> tuple[Poly, object]:
    """Synthetic division: p = (x - y) q + r with r scalar."""
    if p.is_zero():
        return Poly(), 0
    q = [0] * p.degree
    acc = p.coeffs[p.degree]
    for k in range(p.degree - 1, -1, -1):
        q[k] = acc
        acc = p.coeffs[k] + acc * y
    return Poly(q), acc


def exact_divide_linear(p: Poly, y) -> Poly:
    """Divide by (x - y), insisting on zero remainder."""
    q, r = deflate(p, y)
    if not (r == 0):
        raise ValueError("polynomial is not divisible by x - y")
    return q


def exact_divide_x2_minus(p: Poly, y) -> Poly:
    """Divide by (x - y)(x + y) = x^2 - y^2, insisting on exactness."""
    return exact_divide_linear(exact_divide_linear(p, y), -y)


# ---------------------------------------------------------------------------
# dense bivariate polynomials
# ---------------------------------------------------------------------------

class BiPoly:
    """Dense bivariate polynomial; grid[i][j] multiplies x^i x'^j."""

    __slots__ = ("grid",)

    def __init__(self, grid: Sequence[Sequence] = ()):
        self.grid = [list(row) for row in grid]
        self._trim()

    def _trim(self) -> None:
        while self.grid and all(c == 0 for c in self.grid[-1]):
            self.grid.pop()
        if self.grid:
            width = max(len(row) for row in self.grid)
            for row in self.grid:
                row.extend([0] * (width - len(row)))
            while width and all(row[width - 1] == 0 for row in self.grid):
                for row in self.grid:
                    row.pop()
                width -= 1
            if width == 0:
                self.grid = []

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def outer(cls, p: Poly, q: Poly) -> "BiPoly":
        """p(x) * q(x')."""
        return cls([[a * b for b in q.coeffs] for a in p.coeffs])

    @classmethod
    def of_sum(cls, p: Poly) -> "BiPoly":
        """p(x + x') expanded through the binomial theorem."""
        result = cls.zero()
        deg = p.degree
        if deg < 0:
            return result
        binom = [[1]]
        for k in range(1, deg + 1):
            row = [1]
            for j in range(1, k):
                row.append(binom[-1][j - 1] + binom[-1][j])
            row.append(1)
            binom.append(row)
        grid = [[0] * (deg + 1) for _ in range(deg + 1)]
        for k, c in enumerate(p.coeffs):
            if c == 0:
                continue
            for j in range(k + 1):
                grid[j][k - j] = grid[j][k - j] + c * binom[k][j]
        return cls(grid)

    def coeff(self, i: int, j: int):
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[i]):
            return self.grid[i][j]
        return 0

    def is_zero(self) -> bool:
        return not self.grid

    def degrees(self) -> tuple[int, int]:
        if not self.grid:
            return (-1, -1)
        return (len(self.grid) - 1, len(self.grid[0]) - 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return (self - other).is_zero()
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.grid))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        dx = max(len(self.grid), len(other.grid))
        dy = max(len(self.grid[0]) if self.grid else 0,
                 len(other.grid[0]) if other.grid else 0)
        grid = [[self.coeff(i, j) + other.coeff(i, j) for j in range(dy)]
                for i in range(dx)]
        return BiPoly(grid)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __neg__(self) -> "BiPoly":
        return BiPoly([[-c for c in row] for row in self.grid])

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            if self.is_zero() or other.is_zero():
                return BiPoly.zero()
            nx = len(self.grid) + len(other.grid) - 1
            ny = len(self.grid[0]) + len(other.grid[0]) - 1
            grid = [[0] * ny for _ in range(nx)]
            for i, row in enumerate(self.grid):
                for j, a in enumerate(row):
                    if a == 0:
                        continue
                    for k, orow in enumerate(other.grid):
                        for l, b in enumerate(orow):
                            if b == 0:
                                continue
                            grid[i + k][j + l] = grid[i + k][j + l] + a * b
            return BiPoly(grid)
        return BiPoly([[c * other for c in row] for row in self.grid])

    def __rmul__(self, other):
        return BiPoly([[other * c for c in row] for row in self.grid])

    def evaluate(self, x, xp):
        acc = 0
        for i, row in enumerate(self.grid):
            inner = 0
            for c in reversed(row):
                inner = inner * xp + c
            acc = acc + inner * x ** i
        return acc

    def reflect_x(self) -> "BiPoly":
        return BiPoly([[-c if i & 1 else c for c in row]
                       for i, row in enumerate(self.grid)])

    def reflect_xp(self) -> "BiPoly":
        return BiPoly([[-c if j & 1 else c for j, c in enumerate(row)]
                       for row in self.grid])

    def swap(self) -> "BiPoly":
        """Exchange x and x'."""
        dx, dy = self.degrees()
        if dx < 0:
            return BiPoly.zero()
        return BiPoly([[self.coeff(i, j) for i in range(dx + 1)]
                       for j in range(dy + 1)])

    def __repr__(self) -> str:
        return f"BiPoly({self.grid!r})"


def divided_difference(p: Poly, phi: Poly) -> BiPoly:
    """(p(x) phi(x') - p(x') phi(x)) / (x - x'), always a polynomial.

    Expanded monomial by monomial:
      (x^i x'^j - x^j x'^i)/(x - x') = sum_{s=0}^{i-j-1} x^{j+s} x'^{i-1-s}
    for i > j, with the antisymmetric counterpart for i < j.
    """
    d = max(p.degree, phi.degree)
    if d < 1:
        return BiPoly.zero()
    grid = [[0] * d for _ in range(d)]
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(phi.coeffs):
            if b == 0:
                continue
            c = a * b
            if i > j:
                for s in range(i - j):
                    grid[j + s][i - 1 - s] = grid[j + s][i - 1 - s] + c
            elif i < j:
                for s in range(j - i):
                    grid[i + s][j - 1 - s] = grid[i + s][j - 1 - s] - c
    return BiPoly(grid)


_PARITY = {"even": 0, "odd": 1}


def parity_project(F: BiPoly, parity_x: str, parity_xp: str) -> BiPoly:
    """Keep exactly the monomials of F with the requested parities.

    Equivalent to the reflection average
    (F(x,x') +- F(-x,x') -+ F(x,-x') - F(-x,-x'))/4 for each parity choice.
    """
    px = _PARITY[parity_x]
    pxp = _PARITY[parity_xp]
    grid = [[c if (i % 2 == px and j % 2 == pxp) else 0
             for j, c in enumerate(row)]
            for i, row in enumerate(F.grid)]
    return BiPoly(grid)


def exact_divide_x2_minus_xp2(F: BiPoly) -> BiPoly:
    """Divide F(x,x') by (x^2 - x'^2), insisting on exactness.

    Treats F as a polynomial in x whose coefficients are polynomials in x';
    divides by x^2 - c with c = x'^2 from the top coefficient down.
    """
    dx, dy = F.degrees()
    if dx < 0:
        return BiPoly.zero()
    rows = [list(r) for r in F.grid]  # rows[i] = coefficient of x^i (poly in x')
    width = dy + 1
    quot = [[0] * width for _ in range(max(0, dx - 1))]
    for i in range(dx, 1, -1):
        q = rows[i]
        quot[i - 2] = list(q)
        # rows[i-2] += x'^2 * q
        target = rows[i - 2]
        target.extend([0] * (len(q) + 2 - len(target)))
        for j, c in enumerate(q):
            target[j + 2] = target[j + 2] + c
        rows[i] = [0] * width
    for leftover in rows[:2]:
        if any(c != 0 for c in leftover):
            raise ValueError("bivariate polynomial is not divisible by x^2 - x'^2")
    return BiPoly(quot)


# ---------------------------------------------------------------------------
# tridiagonal minors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TridiagSpec:
    """Tridiagonal n x n matrix: diag[i] on the diagonal, sup[i] at (i, i+1),
    sub[i] at (i+1, i), zero elsewhere (0-based storage, 1-based indices in
    the minor API).  Diagonal entries are Poly, band entries scalars."""

    n: int
    diag: tuple
    sup: tuple
    sub: tuple

    def __post_init__(self):
        if len(self.diag) != self.n or len(self.sup) != self.n - 1 or len(self.sub) != self.n - 1:
            raise ValueError("band lengths inconsistent with matrix size")

    @classmethod
    def build(cls, diag: Sequence[Poly], sup: Sequence, sub: Sequence) -> "TridiagSpec":
        return cls(len(diag), tuple(diag), tuple(sup), tuple(sub))


def _run_det(spec: TridiagSpec, lo: int, hi: int) -> Poly:
    """Determinant of the block on 1-based indices lo..hi via the three-term
    recursion det(1..j) = diag_j det(1..j-1) - sup_{j-1} sub_{j-1} det(1..j-2)."""
    prev2 = Poly([1])
    prev = Poly([1])
    for k in range(lo, hi + 1):
        cur = spec.diag[k - 1] * prev
        if k > lo:
            cur = cur - (spec.sup[k - 2] * spec.sub[k - 2]) * prev2
        prev2, prev = prev, cur
    return prev


def tridiag_minor_det(spec: TridiagSpec, removed: Iterable[int] = ()) -> Poly:
    """Determinant of the minor obtained by deleting rows and columns
    `removed` (1-based, reduced mod n).  The empty 0x0 minor is 1.

    Deleting an index decouples the band, so the minor determinant is the
    product of the determinants of the maximal surviving consecutive blocks.
    """
    n = spec.n
    removed_set = set()
    for idx in removed:
        norm = (idx - 1) % n + 1
        if norm in removed_set:
            raise ValueError(f"duplicate removal index {idx}")
        removed_set.add(norm)
    keep = [i for i in range(1, n + 1) if i not in removed_set]
    result = Poly([1])
    run_start = None
    prev = None
    for i in keep + [None]:
        if run_start is None:
            run_start = i
        elif i is None or i != prev + 1:
            result = result * _run_det(spec, run_start, prev)
            run_start = i
        prev = i
    return result


# ---------------------------------------------------------------------------
# monic-square splitting  f = p^2 + r
# ---------------------------------------------------------------------------

def pr_split_from(f: Poly, n: int) -> tuple[Poly, Poly]:
    """Unique (p, r) with p monic of degree n, deg r < n and f = p^2 + r.

    Solved top-down by coefficient matching; exact over any ring containing
    1/2.  Raises ValueError unless f is monic of degree 2n.
    """
    if f.degree != 2 * n or not (f.coeff(2 * n) == 1):
        raise ValueError("input is not monic of degree 2n")
    half = Fraction(1, 2)
    p = [0] * (n + 1)
    p[n] = Fraction(1)
    for d in range(2 * n - 1, n - 1, -1):
        k = d - n
        acc = f.coeff(d)
        for i in range(k + 1, n):
            j = d - i
            if k < j <= n - 1 and i <= n - 1:
                acc = acc - p[i] * p[j]
        p[k] = acc * half
    p_poly = Poly(p)
    r = f - p_poly * p_poly
    if r.degree >= n:
        raise ValueError("splitting failed: remainder degree too large")
    return p_poly, r


def pr_split(u: Poly, v: Poly, w: Poly, n: int) -> tuple[Poly, Poly]:
    """Split u w + v^2 = p^2 + r with p monic of degree n and deg r < n."""
    return pr_split_from(u * w + v * v, n)


# ---------------------------------------------------------------------------
# truncated Laurent series
# ---------------------------------------------------------------------------

class LaurentSeries:
    """Laurent series known exactly on a finite exponent window.

    coeffs[i] multiplies t^(lo+i); every coefficient above `hi` is unknown
    (truncated) and every one below lo is zero.  hi=None marks an exact
    series (a Laurent polynomial) whose higher coefficients are all zero.
    Arithmetic tracks how far results remain valid, so "equals zero through
    the truncation order" is a meaningful exact statement.
    """

    __slots__ = ("lo", "coeffs", "hi")

    def __init__(self, lo: int, coeffs: Iterable = (), hi: int | None = None):
        cs = list(coeffs)
        while cs and cs[0] == 0:
            cs.pop(0)
            lo += 1
        if hi is None:
            while cs and cs[-1] == 0:
                cs.pop()
        else:
            if cs and lo + len(cs) - 1 > hi:
                raise ValueError("coefficients extend beyond the validity window")
            while cs and cs[-1] == 0:
                cs.pop()
        if not cs:
            lo = 0 if hi is None else hi + 1
        self.lo = lo
        self.coeffs = cs
        self.hi = hi

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, c) -> "LaurentSeries":
        return cls(0, [c])

    @classmethod
    def monomial(cls, e: int, c=Fraction(1), hi: int | None = None) -> "LaurentSeries":
        return cls(e, [c], hi)

    @classmethod
    def _coerce(cls, value):
        if isinstance(value, LaurentSeries):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(Fraction(value))
        return None

    # -- queries ---------------------------------------------------------------

    def is_exact(self) -> bool:
        return self.hi is None

    def known_zero(self) -> bool:
        return not self.coeffs

    def leading_exponent(self) -> int:
        """First exponent that can carry a nonzero coefficient."""
        if self.coeffs:
            return self.lo
        if self.hi is None:
            raise ValueError("exact zero series has no leading exponent")
        return self.hi + 1

    def pole_order(self) -> int:
        if self.known_zero():
            return 0
        return max(0, -self.lo)

    def coefficient(self, e: int):
        if self.hi is not None and e > self.hi:
            raise TruncationError(f"coefficient t^{e} lies beyond validity window {self.hi}")
        if self.lo <= e < self.lo + len(self.coeffs):
            return self.coeffs[e - self.lo]
        return 0

    def known_through(self) -> int | None:
        return self.hi

    def is_zero_through(self, e: int) -> bool:
        if self.hi is not None and e > self.hi:
            raise TruncationError(f"window ends at t^{self.hi}, asked through t^{e}")
        return all(self.coefficient(k) == 0
                   for k in range(self.lo, min(e, self.lo + len(self.coeffs) - 1) + 1))

    # -- arithmetic --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentSeries):
            return (self.lo, self.coeffs, self.hi) == (other.lo, other.coeffs, other.hi)
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        scalar = Fraction(other)
        if scalar == 0:
            return self.known_zero()
        return self.coeffs == [scalar] and self.lo == 0

    def __hash__(self):
        return hash((self.lo, tuple(self.coeffs), self.hi))

    def __add__(self, other):
        other = LaurentSeries._coerce(other)
        if other is None:
            return NotImplemented
        if self.known_zero() and self.hi is None:
            return other
        if other.known_zero() and other.hi is None:
            return self
        if self.hi is None and other.hi is None:
            hi = None
            top = max(self.lo + len(self.coeffs), other.lo + len(other.coeffs)) - 1
        else:
            his = [h for h in (self.hi, other.hi) if h is not None]
            hi = min(his)
            top = hi
        lo = min(self.lo if self.coeffs else top, other.lo if other.coeffs else top)
        coeffs = [self._get(e) + other._get(e) for e in range(lo, top + 1)]
        return LaurentSeries(lo, coeffs, hi)

    def _get(self, e: int):
        if self.lo <= e < self.lo + len(self.coeffs):
            return self.coeffs[e - self.lo]
        return 0

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.lo, [-c for c in self.coeffs], self.hi)

    def __sub__(self, other):
        other = LaurentSeries._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = LaurentSeries._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = LaurentSeries._coerce(other)
        if other is None:
            return NotImplemented
        if (self.known_zero() and self.hi is None) or (other.known_zero() and other.hi is None):
            return LaurentSeries(0, [], None)
        # validity: unknown terms of one factor start at hi+1 and meet the
        # other factor's leading exponent
        bounds = []
        if self.hi is not None:
            bounds.append(self.hi + other.leading_exponent())
        if other.hi is not None:
            bounds.append(other.hi + self.leading_exponent())
        hi = min(bounds) if bounds else None
        if self.known_zero() or other.known_zero():
            return LaurentSeries(0, [], hi)
        lo = self.lo + other.lo
        top = hi if hi is not None else lo + len(self.coeffs) + len(other.coeffs) - 2
        width = top - lo + 1
        if width <= 0:
            return LaurentSeries(0, [], hi)
        out = [0] * width
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                k = i + j
                if k < width:
                    out[k] = out[k] + a * b
        return LaurentSeries(lo, out, hi)

    __rmul__ = __mul__

    def derivative(self) -> "LaurentSeries":
        hi = None if self.hi is None else self.hi - 1
        coeffs = [Fraction(e) * c for e, c in zip(range(self.lo, self.lo + len(self.coeffs)), self.coeffs)]
        return LaurentSeries(self.lo - 1, coeffs, hi)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        hi = None if self.hi is None else self.hi + k
        return LaurentSeries(self.lo + k, list(self.coeffs), hi)

    def truncate(self, hi: int) -> "LaurentSeries":
        if self.hi is not None and hi > self.hi:
            raise TruncationError("cannot extend validity by truncation")
        coeffs = [self._get(e) for e in range(self.lo, hi + 1)]
        return LaurentSeries(self.lo, coeffs, hi)

    def inverse(self) -> "LaurentSeries":
        """Multiplicative inverse; leading coefficient must be nonzero.

        An exact input must be a single monomial (otherwise the inverse is an
        infinite series and the caller has to truncate first).
        """
        if self.known_zero():
            raise ZeroDivisionError("inverting a series with no known nonzero term")
        a0 = self.coeffs[0]
        m = self.lo
        if self.hi is None:
            if len(self.coeffs) != 1:
                raise TruncationError("inverse of an exact multi-term series is infinite; truncate first")
            return LaurentSeries(-m, [Fraction(1) / a0])
        # unknown input terms at hi+1 perturb the inverse from hi+1-2m on;
        # relative coefficient j of the inverse needs input through m+j.
        hi = self.hi - 2 * m
        length = self.hi - m + 1
        inv0 = Fraction(1) / a0
        out = [inv0]
        for j in range(1, length):
            acc = 0
            for i in range(1, j + 1):
                ai = self.coeffs[i] if i < len(self.coeffs) else 0
                if ai == 0:
                    continue
                acc = acc + ai * out[j - i]
            out.append(-inv0 * acc)
        return LaurentSeries(-m, out, hi)

    def __repr__(self) -> str:
        terms = ", ".join(f"t^{self.lo + i}: {c}" for i, c in enumerate(self.coeffs))
        tail = "exact" if self.hi is None else f"O(t^{self.hi + 1})"
        return f"LaurentSeries({terms or '0'}; {tail})"
