"""Sparse multivariate polynomials over Q and exact linear algebra.

Poisson brackets in this package are materialized as coordinate tables:
for a phase space with coordinates c_0..c_{N-1}, the table entry (i, j)
is the bracket {c_i, c_j} written as an exact polynomial in the
coordinates.  That makes antisymmetry, Jacobi identities, Casimirs and
Poisson-map checks plain polynomial identities, decidable with zero
tolerance.

MultiPoly is the workhorse: a dict from exponent tuples to Fraction,
one exponent slot per coordinate.  It is deliberately minimal; degrees
and variable counts stay small everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import Poly


class MultiPoly:
    """Sparse polynomial in nvars variables with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for expo, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[tuple(expo)] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, nvars: int, value) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def var(cls, nvars: int, index: int) -> "MultiPoly":
        expo = [0] * nvars
        expo[index] = 1
        return cls(nvars, {tuple(expo): Fraction(1)})

    @classmethod
    def variables(cls, nvars: int) -> list["MultiPoly"]:
        return [cls.var(nvars, i) for i in range(nvars)]

    def _coerce(self, other):
        """MultiPoly/int/Fraction -> MultiPoly; anything else -> None so the
        dunder can return NotImplemented and defer to the other operand."""
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return None

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.const(self.nvars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            acc = terms.get(expo, Fraction(0)) + coeff
            if acc:
                terms[expo] = acc
            else:
                terms.pop(expo, None)
        out = MultiPoly(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

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
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(expo, Fraction(0)) + c1 * c2
                if acc:
                    terms[expo] = acc
                else:
                    terms.pop(expo, None)
        out = MultiPoly(self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus / substitution ------------------------------------------------

    def diff(self, index: int) -> "MultiPoly":
        terms: dict = {}
        for expo, coeff in self.terms.items():
            k = expo[index]
            if k == 0:
                continue
            new = list(expo)
            new[index] = k - 1
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + coeff * k
        out = MultiPoly(self.nvars)
        out.terms = {e: c for e, c in terms.items() if c}
        return out

    def eval(self, values: Sequence[Fraction]) -> Fraction:
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            term = coeff
            for v, k in zip(values, expo):
                if k:
                    term *= Fraction(v) ** k
            total += term
        return total

    def subs(self, replacements: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute replacement polynomials for every variable."""
        if len(replacements) != self.nvars:
            raise ValueError("wrong number of replacements")
        nvars = replacements[0].nvars if replacements else 0
        acc = MultiPoly(nvars)
        for expo, coeff in self.terms.items():
            term = MultiPoly.const(nvars, coeff)
            for rep, k in zip(replacements, expo):
                if k:
                    term = term * rep ** k
            acc = acc + term
        return acc

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def to_str(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for expo, coeff in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True):
            factors = []
            for name, k in zip(names, expo):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly(nvars={self.nvars}, {len(self.terms)} terms)"


# ---------------------------------------------------------------------------
# exact linear algebra over Fraction
# ---------------------------------------------------------------------------

def rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    rows = [[Fraction(c) for c in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [c * inv for c in rows[r]]
        for i, row in enumerate(rows):
            if i != r and row[col] != 0:
                factor = row[col]
                rows[i] = [a - factor * b for a, b in zip(row, rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def matrix_rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(matrix)[1])


@dataclass
class AffineSolution:
    """Solution set of A x = b: x = particular + span(kernel_basis)."""

    consistent: bool
    particular: list[Fraction] | None
    kernel_basis: list[list[Fraction]]
    free_columns: list[int]


def solve_affine(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> AffineSolution:
    """Exact solution of a (possibly singular) linear system over Q."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    reduced, pivots = rref(augmented)
    if n in pivots:
        return AffineSolution(False, None, [], [])
    pivot_set = set(pivots)
    free_cols = [j for j in range(n) if j not in pivot_set]
    particular = [Fraction(0)] * n
    for row_idx, col in enumerate(pivots):
        particular[col] = reduced[row_idx][n]
    kernel = []
    for free in free_cols:
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for row_idx, col in enumerate(pivots):
            vec[col] = -reduced[row_idx][free]
        kernel.append(vec)
    return AffineSolution(True, particular, kernel, free_cols)


# ---------------------------------------------------------------------------
# bracket tables
# ---------------------------------------------------------------------------

class BracketTable:
    """Antisymmetric table of coordinate brackets {c_i, c_j} as MultiPoly.

    The table determines the Poisson structure completely: for polynomial
    F, G the biderivation rule gives
        {F, G} = sum_{k,l} dF/dc_k dG/dc_l {c_k, c_l}.
    """

    def __init__(self, names: Sequence[str], entries: Sequence[Sequence[MultiPoly]]):
        self.names = list(names)
        self.entries = [list(row) for row in entries]
        n = len(self.names)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("table shape does not match coordinate count")

    @property
    def dim(self) -> int:
        return len(self.names)

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i][j]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def at(self, values: Sequence[Fraction]) -> list[list[Fraction]]:
        """Numeric bracket matrix at a phase point."""
        return [[entry.eval(values) for entry in row] for row in self.entries]

    def antisymmetry_defects(self) -> list[tuple[int, int]]:
        bad = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                if not (self.entries[i][j] + self.entries[j][i]).is_zero():
                    bad.append((i, j))
        return bad

    def jacobiator(self, i: int, j: int, k: int) -> MultiPoly:
        """{{c_i,c_j},c_k} + {{c_j,c_k},c_i} + {{c_k,c_i},c_j} as MultiPoly."""
        acc = MultiPoly(self.entries[0][0].nvars)
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = self.entries[a][b]
            for l in range(self.dim):
                d = inner.diff(l)
                if not d.is_zero():
                    acc = acc + d * self.entries[l][c]
        return acc

    def jacobi_holds(self) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if not self.jacobiator(i, j, k).is_zero():
                        return False
        return True

    def poisson_bracket(self, F: MultiPoly, G: MultiPoly) -> MultiPoly:
        acc = MultiPoly(F.nvars)
        dF = [F.diff(k) for k in range(self.dim)]
        dG = [G.diff(l) for l in range(self.dim)]
        for k, fk in enumerate(dF):
            if fk.is_zero():
                continue
            for l, gl in enumerate(dG):
                if gl.is_zero() or self.entries[k][l].is_zero():
                    continue
                acc = acc + fk * gl * self.entries[k][l]
        return acc

    def hamiltonian_field(self, H: MultiPoly, values: Sequence[Fraction]) -> list[Fraction]:
        """Numeric vector {c_k, H} evaluated at a phase point."""
        grad = [H.diff(l).eval(values) for l in range(self.dim)]
        matrix = self.at(values)
        return [sum((matrix[k][l] * grad[l] for l in range(self.dim)), Fraction(0))
                for k in range(self.dim)]

    def add(self, other: "BracketTable") -> "BracketTable":
        if self.names != other.names:
            raise ValueError("coordinate systems differ")
        return BracketTable(self.names,
                            [[a + b for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.entries, other.entries)])

    def scale(self, factor) -> "BracketTable":
        return BracketTable(self.names,
                            [[entry * factor for entry in row] for row in self.entries])

    def entry_strings(self) -> list[list[str]]:
        return [[entry.to_str(self.names) for entry in row] for row in self.entries]

    def __repr__(self) -> str:
        return f"BracketTable({self.names})"


def coordinate_poly(coeff_slots: Sequence[int | None], nvars: int,
                    fixed: dict[int, Fraction] | None = None) -> Poly:
    """Build a Poly whose k-th coefficient is the variable coeff_slots[k]
    (or a fixed scalar when the slot is None)."""
    fixed = fixed or {}
    coeffs: list = []
    for k, slot in enumerate(coeff_slots):
        if slot is None:
            coeffs.append(MultiPoly.const(nvars, fixed.get(k, 0)))
        else:
            coeffs.append(MultiPoly.var(nvars, slot))
    return Poly(coeffs)
