"""Periodic sl(n) Toda lattice and its Volterra (Kac-van Moerbeke) slice.

Phase points are pairs of cyclic sequences (a_1..a_n, b_1..b_n) with
prod a_i = 1, packaged as the Lax operator

    L(h) = band(b on the diagonal, a on the super, 1 on the sub)
           + h^{-1} E_{1,n} + h a_n E_{n,1}.

The n spectral invariants are
    I_i     = tr L(h)^{i+1} / (i+1)          i = 0..n-2,
    I_{n-1} = tr L(h)^n / n - h - 1/h,
all independent of h (asserted exactly, per h-exponent).  The momentum map
K is read off the characteristic polynomial,

    det(x Id - L(h)) = -h - 1/h + K(x)/2,    K = 2 (Delta - a_n Delta_{1,n}),

where Delta_{...} are minors of the h-stripped tridiagonal part of
x Id - L(h).  Two compatible Poisson structures make the hierarchy
multi-Hamiltonian: the linear bracket

    {a_i, b_j}^1 = a_i (d_{ij} - d_{i+1,j}),       (I_0 Casimir)

and the quadratic bracket

    {a_i, a_j}^x = a_i a_j (d_{i,j+1} - d_{i+1,j}),
    {a_i, b_j}^x = a_i b_j (d_{ij} - d_{i+1,j}),
    {b_i, b_j}^x = a_j d_{i,j+1} - a_i d_{i+1,j},  (det L Casimir)

(indices cyclic; the b-b entry is the antisymmetric completion forced by
{., I_0}^x = {., I_1}^1).  The hierarchy fields admit the Lax form

    X_i L(h) = [L(h), (L(h)^i)_+],   (sum A_j h^j)_+ = sum_{j>0} A_j h^j + su(A_0),

with su() the strictly upper triangular part, and X_i = {., I_i}^1.

The KM phase space is the b = 0 slice; it is the fixed locus of
(a, b) -> (a, -b), which is a Poisson involution for the quadratic bracket
only, and the induced bracket is {a_i, a_j} = a_i a_j (d_{i,j+1} - d_{i+1,j}).
The basic KM field is da_i/dt = a_i (a_{i-1} - a_{i+1}); within the Lax
hierarchy above it is the restriction of X_2 (the Toda fields X_i with i
even are tangent to the slice, those with odd i are not).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, TridiagSpec, format_rational, parse_rational, tridiag_minor_det
from .errors import InvariantError, ParseError
from .symbolic import BracketTable, MultiPoly

# ---------------------------------------------------------------------------
# phase points
# ---------------------------------------------------------------------------

def _prod(values) -> Fraction:
    acc = Fraction(1)
    for v in values:
        acc *= Fraction(v)
    return acc


@dataclass(frozen=True)
class TodaPoint:
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        if len(self.a) != len(self.b):
            raise InvariantError("size", "a and b must have the same length")
        if any(x == 0 for x in self.a):
            raise InvariantError("a-nonzero", "all a_i must be nonzero")
        if _prod(self.a) != 1:
            raise InvariantError("a-product", "prod a_i must equal 1")

    @property
    def n(self) -> int:
        return len(self.a)

    def shift(self, s: int = 1) -> "TodaPoint":
        """Cyclic automorphism (a_i, b_i) -> (a_{i+s}, b_{i+s})."""
        n = self.n
        return TodaPoint(tuple(self.a[(i + s) % n] for i in range(n)),
                         tuple(self.b[(i + s) % n] for i in range(n)))

    def to_json(self) -> dict:
        return {"n": self.n, "a": [format_rational(x) for x in self.a],
                "b": [format_rational(x) for x in self.b]}

    @classmethod
    def from_json(cls, payload: dict) -> "TodaPoint":
        try:
            n = int(payload["n"])
            a = [parse_rational(str(x)) for x in payload["a"]]
            b = [parse_rational(str(x)) for x in payload.get("b", ["0"] * n)]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed lattice point: {exc}") from exc
        if len(a) != n or len(b) != n:
            raise ParseError("sequence lengths disagree with n")
        return cls(tuple(a), tuple(b))


@dataclass(frozen=True)
class KMPoint:
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        if any(x == 0 for x in self.a):
            raise InvariantError("a-nonzero", "all a_i must be nonzero")
        if _prod(self.a) != 1:
            raise InvariantError("a-product", "prod a_i must equal 1")

    @property
    def n(self) -> int:
        return len(self.a)

    def embed(self) -> TodaPoint:
        return TodaPoint(self.a, (Fraction(0),) * self.n)

    def shift(self, s: int = 1) -> "KMPoint":
        n = self.n
        return KMPoint(tuple(self.a[(i + s) % n] for i in range(n)))

    def to_json(self) -> dict:
        return {"n": self.n, "a": [format_rational(x) for x in self.a]}

    @classmethod
    def from_json(cls, payload: dict) -> "KMPoint":
        pt = TodaPoint.from_json(payload)
        if any(x != 0 for x in pt.b):
            raise ParseError("a KM point must have b = 0")
        return cls(pt.a)


# ---------------------------------------------------------------------------
# h-Laurent matrices
# ---------------------------------------------------------------------------

class HLaurent:
    """Finite Laurent polynomial in the spectral parameter h.

    Values attached to each h-exponent may be Fractions, MultiPolys or
    Polys in x; arithmetic is duck typed."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        self.parts = {}
        if parts:
            for k, v in parts.items():
                if not (v == 0):
                    self.parts[k] = v

    @classmethod
    def of(cls, value) -> "HLaurent":
        return cls({0: value})

    def coefficient(self, k: int):
        return self.parts.get(k, 0)

    def is_zero(self) -> bool:
        return not self.parts

    def h_exponents(self) -> list[int]:
        return sorted(self.parts)

    def h_free(self) -> bool:
        return set(self.parts) <= {0}

    def __add__(self, other: "HLaurent") -> "HLaurent":
        parts = dict(self.parts)
        for k, v in other.parts.items():
            acc = parts.get(k, 0) + v
            if acc == 0:
                parts.pop(k, None)
            else:
                parts[k] = acc
        out = HLaurent()
        out.parts = parts
        return out

    def __neg__(self) -> "HLaurent":
        out = HLaurent()
        out.parts = {k: -v for k, v in self.parts.items()}
        return out

    def __sub__(self, other: "HLaurent") -> "HLaurent":
        return self + (-other)

    def __mul__(self, other: "HLaurent") -> "HLaurent":
        parts: dict = {}
        for k1, v1 in self.parts.items():
            for k2, v2 in other.parts.items():
                k = k1 + k2
                acc = parts.get(k, 0) + v1 * v2
                if acc == 0:
                    parts.pop(k, None)
                else:
                    parts[k] = acc
        out = HLaurent()
        out.parts = parts
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, HLaurent):
            return self.parts == other.parts
        if other == 0:
            return not self.parts
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.parts.items()))

    def __repr__(self) -> str:
        return f"HLaurent({self.parts!r})"


def lax_matrix(point: TodaPoint | KMPoint, values=None):
    """The n x n Lax operator as a matrix of HLaurent scalars.

    `values` may override the (a, b) entries (e.g. with MultiPoly
    variables) while keeping the shape of the given point."""
    if isinstance(point, KMPoint):
        point = point.embed()
    n = point.n
    a, b = (values if values is not None else (point.a, point.b))
    zero = HLaurent()
    mat = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        mat[i][i] = HLaurent.of(b[i])
        if i + 1 < n:
            mat[i][i + 1] = HLaurent.of(a[i])
            mat[i + 1][i] = HLaurent.of(Fraction(1))
    mat[0][n - 1] = mat[0][n - 1] + HLaurent({-1: Fraction(1)})
    mat[n - 1][0] = mat[n - 1][0] + HLaurent({1: a[n - 1]})
    return mat


def mat_mul(A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = HLaurent()
            for k in range(n):
                if A[i][k].is_zero() or B[k][j].is_zero():
                    continue
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_trace(A) -> HLaurent:
    acc = HLaurent()
    for i in range(len(A)):
        acc = acc + A[i][i]
    return acc


def _powers(L, top: int):
    powers = [None, L]
    for _ in range(2, top + 1):
        powers.append(mat_mul(powers[-1], L))
    return powers


# ---------------------------------------------------------------------------
# spectral invariants
# ---------------------------------------------------------------------------

def toda_integrals(point: TodaPoint) -> list[Fraction]:
    """I_0..I_{n-1}; raises if any h-dependence survives (which would
    signal an implementation bug, not bad input)."""
    n = point.n
    powers = _powers(lax_matrix(point), n)
    out = []
    for i in range(n - 1):
        tr = mat_trace(powers[i + 1])
        if not tr.h_free():
            raise InvariantError("h-free", f"tr L^{i + 1} kept h-terms {tr.h_exponents()}")
        out.append(Fraction(tr.coefficient(0)) / (i + 1))
    tr = mat_trace(powers[n])
    top = {k: Fraction(v) / n for k, v in tr.parts.items()}
    if not (top.get(1, 0) == 1 and top.get(-1, 0) == 1 and set(top) <= {-1, 0, 1}):
        raise InvariantError("h-free", f"tr L^n / n has h-profile {sorted(top)}")
    out.append(Fraction(top.get(0, 0)))
    return out


def toda_coordinate_names(n: int) -> list[str]:
    return [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(1, n + 1)]


def toda_point_values(point: TodaPoint) -> list[Fraction]:
    return list(point.a) + list(point.b)


def toda_integrals_symbolic(n: int) -> list[MultiPoly]:
    """The I_i as polynomials in (a_1..a_n, b_1..b_n).

    For I_{n-1} the h^{+-1} coefficients (equal to prod a off the
    constraint) are dropped; this fixes one extension of I_{n-1} off the
    phase space, which is harmless because prod a is a Casimir of the
    whole bracket pencil."""
    nv = 2 * n
    a = [MultiPoly.var(nv, i) for i in range(n)]
    b = [MultiPoly.var(nv, n + i) for i in range(n)]
    dummy = TodaPoint((Fraction(1),) * n, (Fraction(0),) * n)
    L = lax_matrix(dummy, values=(a, b))
    powers = _powers(L, n)
    out = []
    for i in range(n):
        tr = mat_trace(powers[i + 1])
        coeff = tr.coefficient(0)
        if isinstance(coeff, int):
            coeff = MultiPoly.const(nv, coeff)
        out.append(coeff * Fraction(1, i + 1))
    return out


def char_poly(point: TodaPoint) -> Poly:
    """K(x) with det(x Id - L(h)) = -h - 1/h + K(x)/2, asserted exactly."""
    n = point.n
    spec = toda_tridiag(point)
    delta = tridiag_minor_det(spec)
    delta_1n = tridiag_minor_det(spec, [1, n])
    half_k = delta - point.a[n - 1] * delta_1n
    det = _charpoly_det(point)
    expected = HLaurent({-1: Poly([Fraction(-1)]), 1: Poly([Fraction(-1)]), 0: half_k})
    if det != expected:
        raise InvariantError("char-poly", "h-expansion of det(x Id - L) is off")
    return 2 * half_k


def toda_tridiag(point: TodaPoint) -> TridiagSpec:
    """x Id - L(h) with the two h corners removed."""
    x = Poly([Fraction(0), Fraction(1)])
    diag = [x - Poly([bi]) for bi in point.b]
    sup = [-ai for ai in point.a[:-1]]
    sub = [Fraction(-1)] * (point.n - 1)
    return TridiagSpec.build(diag, sup, sub)


def _charpoly_det(point: TodaPoint) -> HLaurent:
    """det(x Id - L(h)) by sparse Laplace expansion (entries h-Laurent
    polynomials in x); independent of the tridiagonal-minor route."""
    n = point.n
    L = lax_matrix(point)
    M = [[HLaurent() for _ in range(n)] for _ in range(n)]
    x = Poly([Fraction(0), Fraction(1)])
    for i in range(n):
        for j in range(n):
            entry = HLaurent()
            entry.parts = {k: -Poly([v]) if not isinstance(v, Poly) else -v
                           for k, v in L[i][j].parts.items()}
            if i == j:
                entry = entry + HLaurent.of(x)
            M[i][j] = entry

    cols_used = [False] * n

    def expand(row: int) -> HLaurent:
        if row == n:
            return HLaurent.of(Poly([Fraction(1)]))
        acc = HLaurent()
        sign = 1
        for col in range(n):
            if cols_used[col]:
                continue
            entry = M[row][col]
            if not entry.is_zero():
                cols_used[col] = True
                sub = expand(row + 1)
                term = entry * sub
                acc = acc + (term if sign > 0 else -term)
                cols_used[col] = False
            sign = -sign
        return acc

    return expand(0)


# ---------------------------------------------------------------------------
# brackets
# ---------------------------------------------------------------------------

def _d(i: int, j: int, n: int) -> bool:
    return (i - j) % n == 0


def toda_bracket(kind: str, i: int, j: int, which: str, point: TodaPoint | KMPoint) -> Fraction:
    """Exact value of {x_i, y_j} at a point, x/y named by `which` (aa|ab|bb)."""
    if isinstance(point, KMPoint):
        point = point.embed()
    n = point.n
    a, b = point.a, point.b
    ai, aj = a[(i - 1) % n], a[(j - 1) % n]
    bj = b[(j - 1) % n]
    if which == "ab":
        if kind == "linear":
            return ai * ((1 if _d(i, j, n) else 0) - (1 if _d(i + 1, j, n) else 0))
        if kind == "quadratic":
            return ai * bj * ((1 if _d(i, j, n) else 0) - (1 if _d(i + 1, j, n) else 0))
        if kind == "km":
            raise InvariantError("bracket-kind", "the km bracket has no b coordinates")
    if which == "aa":
        if kind == "linear":
            return Fraction(0)
        return ai * aj * ((1 if _d(i, j + 1, n) else 0) - (1 if _d(i + 1, j, n) else 0))
    if which == "bb":
        if kind == "linear":
            return Fraction(0)
        if kind == "quadratic":
            return aj * (1 if _d(i, j + 1, n) else 0) - ai * (1 if _d(i + 1, j, n) else 0)
        raise InvariantError("bracket-kind", "the km bracket has no b coordinates")
    raise InvariantError("bracket-kind", f"unknown bracket request {kind}/{which}")


def toda_bracket_table(kind: str, n: int) -> BracketTable:
    """Symbolic coordinate table of a lattice bracket."""
    if kind == "km":
        names = [f"a{i}" for i in range(1, n + 1)]
        a = MultiPoly.variables(n)
        zero = MultiPoly(n)
        entries = [[zero for _ in range(n)] for _ in range(n)]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                val = zero
                if _d(i, j + 1, n):
                    val = val + a[i - 1] * a[j - 1]
                if _d(i + 1, j, n):
                    val = val - a[i - 1] * a[j - 1]
                entries[i - 1][j - 1] = val
        return BracketTable(names, entries)
    if kind not in ("linear", "quadratic"):
        raise InvariantError("bracket-kind", f"unknown bracket kind {kind!r}")
    names = toda_coordinate_names(n)
    nv = 2 * n
    a = [MultiPoly.var(nv, i) for i in range(n)]
    b = [MultiPoly.var(nv, n + i) for i in range(n)]
    zero = MultiPoly(nv)
    entries = [[zero for _ in range(nv)] for _ in range(nv)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ai, aj, bj = a[i - 1], a[j - 1], b[j - 1]
            # {a_i, a_j} and {b_i, b_j}
            if kind == "quadratic":
                aa = zero
                if _d(i, j + 1, n):
                    aa = aa + ai * aj
                if _d(i + 1, j, n):
                    aa = aa - ai * aj
                entries[i - 1][j - 1] = aa
                bb = zero
                if _d(i, j + 1, n):
                    bb = bb + aj
                if _d(i + 1, j, n):
                    bb = bb - ai
                entries[n + i - 1][n + j - 1] = bb
            # {a_i, b_j}
            ab = zero
            if _d(i, j, n):
                ab = ab + (ai if kind == "linear" else ai * bj)
            if _d(i + 1, j, n):
                ab = ab - (ai if kind == "linear" else ai * bj)
            entries[i - 1][n + j - 1] = ab
            entries[n + j - 1][i - 1] = -ab
    return BracketTable(names, entries)


def toda_pencil_table(phi: Poly, n: int) -> BracketTable:
    """{.,.}^phi = phi_1 {.,.}^x + phi_0 {.,.}^1 for deg phi <= 1."""
    if phi.degree > 1:
        raise InvariantError("phi-degree", "the lattice pencil needs deg phi <= 1")
    lin = toda_bracket_table("linear", n).scale(Fraction(phi.coeff(0)))
    quad = toda_bracket_table("quadratic", n).scale(Fraction(phi.coeff(1)))
    return lin.add(quad)


# ---------------------------------------------------------------------------
# Lax flows
# ---------------------------------------------------------------------------

def _plus_projection(M):
    """Keep all h^{>0} parts plus the strictly upper triangular h^0 part."""
    n = len(M)
    out = [[HLaurent() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            parts = {k: v for k, v in M[i][j].parts.items()
                     if k > 0 or (k == 0 and j > i)}
            cell = HLaurent()
            cell.parts = dict(parts)
            out[i][j] = cell
    return out


def toda_flow(point: TodaPoint, i: int) -> tuple[list[Fraction], list[Fraction]]:
    """Tangent (da, db) of the hierarchy field X_i L = [L, (L^i)_+].

    X_i is the {., I_i}^1 Hamiltonian field; the fields with even i are
    the ones tangent to the KM slice b = 0 (X_2 restricts to the basic
    KM equation there)."""
    n = point.n
    if not 1 <= i <= n - 1:
        raise InvariantError("hierarchy-index", f"need 1 <= i <= {n - 1}")
    L = lax_matrix(point)
    P = _plus_projection(_powers(L, i)[i])
    C = [[HLaurent() for _ in range(n)] for _ in range(n)]
    LP, PL = mat_mul(L, P), mat_mul(P, L)
    for r in range(n):
        for c in range(n):
            C[r][c] = LP[r][c] - PL[r][c]
    da = [Fraction(0)] * n
    db = [Fraction(0)] * n
    for r in range(n):
        db[r] = Fraction(C[r][r].coefficient(0))
    for r in range(n - 1):
        da[r] = Fraction(C[r][r + 1].coefficient(0))
    da[n - 1] = Fraction(C[n - 1][0].coefficient(1))
    # everything else must cancel for the Lax shape to be preserved
    for r in range(n):
        for c in range(n):
            for k, v in C[r][c].parts.items():
                expected = ((k == 0 and (c == r or c == r + 1))
                            or (k == 1 and (r, c) == (n - 1, 0)))
                if not expected and not (v == 0):
                    raise InvariantError("lax-shape",
                                         f"commutator leaks into entry ({r + 1},{c + 1}) h^{k}")
    return da, db


def km_field(a) -> list[Fraction]:
    """The basic Volterra field da_i/dt = a_i (a_{i-1} - a_{i+1})."""
    seq = [Fraction(x) for x in a]
    n = len(seq)
    return [seq[i] * (seq[(i - 1) % n] - seq[(i + 1) % n]) for i in range(n)]


def km_field_symbolic(n: int) -> list[MultiPoly]:
    a = MultiPoly.variables(n)
    return [a[i] * (a[(i - 1) % n] - a[(i + 1) % n]) for i in range(n)]


def km_even_split(point: KMPoint) -> tuple[Fraction, Fraction]:
    """(a_1 a_3 ... a_{n-1}, a_2 a_4 ... a_n) for even n; both factors are
    first integrals of the KM field and multiply to 1."""
    if point.n % 2:
        raise InvariantError("even-n", "the alternating products need even n")
    odd = _prod(point.a[0::2])
    even = _prod(point.a[1::2])
    return odd, even


def km_even_split_symbolic(n: int) -> tuple[MultiPoly, MultiPoly]:
    if n % 2:
        raise InvariantError("even-n", "the alternating products need even n")
    a = MultiPoly.variables(n)
    odd = MultiPoly.const(n, 1)
    for x in a[0::2]:
        odd = odd * x
    even = MultiPoly.const(n, 1)
    for x in a[1::2]:
        even = even * x
    return odd, even
