"""The minor-determinant embedding of the periodic Toda lattice into an
even Mumford space, its inverse reconstruction, and the quadratic bracket
family that makes it a Poisson map.

With Delta_{i_1..i_k} the minors of the h-stripped part of x Id - L(h),
the map into M'_{n-1} indexed by m in Z/n is

    u = Delta_m
    v = a_{m-1} Delta_{m-1,m} - a_m Delta_{m,m+1}
    w = (x-b_m)^2 Delta_m
        - 2 (x-b_m) (a_{m-1} Delta_{m-1,m} + a_m Delta_{m,m+1})
        + 4 a_m a_{m-1} Delta_{m-1,m,m+1}

and it satisfies u w + v^2 = p^2 - 4 exactly, where p = K/2 is the half
characteristic polynomial.  Note the MINUS sign on the middle term of w:
with minors taken of x Id - L(h), the tridiagonal determinant identity
Delta_1 Delta_k - Delta Delta_{1,k} = prod(alpha_i gamma_i) applied to the
minor with row/column m removed forces that sign; the identity fails with
a plus sign there.

On the Mumford side, splitting u w + v^2 = p^2 + r (p monic of degree n)
defines for each phi of degree <= 1 a quadratic bracket family

    {u(x), v(x')}_q = {u(x), v(x')}^{p phi} + A(x+x') u(x) u(x')
    {u(x), w(x')}_q = {u(x), w(x')}^{p phi} - 2 A(x+x') u(x) v(x')
    {v(x), w(x')}_q = {v(x), w(x')}^{p phi} + A(x+x') u(x) w(x')
    {w(x), w(x')}_q = {w(x), w(x')}^{p phi} + 2 A(x+x') (w(x)v(x') - w(x')v(x))

with A(t) = phi(alpha(2t)/2) and {.,.}^{p phi} the linear family evaluated
at the phase-dependent polynomial p(x) phi(x).  The coefficients of r are
Casimirs and the derived bracket {u(x), p(y)}_q equals
phi(y) (u(x)v(y) - u(y)v(x)) / (x - y).

Sign convention note: with the lattice pencil {.,.}^phi = phi_1 {.,.}^x
+ phi_0 {.,.}^1 and the family above, the map intertwines the brackets up
to one global sign,

    {F o Phi, G o Phi}^phi  =  ({F, G}_q^{-phi}) o Phi,

exactly (tested symbolically and at random points).  Both one-sided
conventions are pinned by their own Lax hierarchies (X_i = {., I_i}^1 on
the lattice, X_y = {., 2p(y)}_q^1 on the Mumford side), so the sign
cannot be removed without breaking one of those identities; this library
keeps both and states the intertwining with the sign explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (BiPoly, Poly, TridiagSpec, divided_difference,
                      format_poly, pr_split_from, tridiag_minor_det)
from .errors import InvariantError, NotInImageError
from .mumford import (EVEN_MUMFORD, EVEN_PRYM, ODD_PRYM, MumfordTriple,
                      _coord_layout, _lift_phi, phase_coordinates,
                      table_from_generators)
from .symbolic import BracketTable, MultiPoly
from .toda import TodaPoint, toda_tridiag

# ---------------------------------------------------------------------------
# the forward map
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiImage:
    """Image point plus the source index m and the half spectral polynomial;
    carries the exact fiber identity u w + v^2 = p^2 - 4."""

    triple: MumfordTriple
    m: int
    p: Poly

    def __post_init__(self):
        t = self.triple
        lhs = t.u * t.w + t.v * t.v
        if lhs != self.p * self.p - Poly([Fraction(4)]):
            raise InvariantError("fiber-identity", "u w + v^2 != p^2 - 4")

    def to_json(self) -> dict:
        payload = self.triple.to_json()
        payload.update({"m": self.m, "p": format_poly(self.p)})
        return payload


def _phi_polys(spec, a, b, m: int, n: int):
    """The (u, v, w) polynomials of the image; generic over the scalar ring."""
    minor = lambda *idx: tridiag_minor_det(spec, idx)
    am = a[(m - 1) % n]
    am1 = a[(m - 2) % n]
    bm = b[(m - 1) % n]
    d_m = minor(m)
    d_prev = minor(m - 1, m)
    d_next = minor(m, m + 1)
    d_both = minor(m - 1, m, m + 1)
    u = d_m
    v = am1 * d_prev - am * d_next
    x_minus_bm = Poly([-bm, Fraction(1)]) if isinstance(bm, Fraction) else Poly([-bm, MultiPoly.const(bm.nvars, 1)])
    w = (x_minus_bm * x_minus_bm) * d_m \
        - 2 * x_minus_bm * (am1 * d_prev + am * d_next) \
        + (4 * (am * am1)) * d_both
    return u, v, w


def phi(point: TodaPoint, m: int) -> PhiImage:
    """Map a Toda point into M'_{n-1} (prym flavors on the b = 0 slice).

    The index-m map is the index-n map after the cyclic relabeling that
    puts m in the last position: the minors in the defining formulas are
    taken of the band matrix with the h corners stripped AT m, not of the
    fixed matrix (taking them literally breaks the fiber identity for
    interior m, because deleting an interior row decouples the band and
    the determinant-lemma cross term degenerates to zero).
    """
    n = point.n
    if n < 3:
        raise InvariantError("size", "the morphism needs n >= 3")
    shifted = point.shift(m % n)
    spec = toda_tridiag(shifted)
    u, v, w = _phi_polys(spec, shifted.a, shifted.b, n, n)
    p = tridiag_minor_det(spec) - shifted.a[n - 1] * tridiag_minor_det(spec, [1, n])
    if all(x == 0 for x in point.b):
        flavor = ODD_PRYM if n % 2 == 1 else EVEN_PRYM
    else:
        flavor = EVEN_MUMFORD
    return PhiImage(MumfordTriple(u, v, w, flavor), (m - 1) % n + 1, p)


def phi_symbolic(n: int, m: int) -> list[MultiPoly]:
    """Image coordinates (even Mumford layout, g = n-1) as exact polynomials
    in (a_1..a_n, b_1..b_n)."""
    nv = 2 * n
    a = [MultiPoly.var(nv, (i + m) % n) for i in range(n)]
    b = [MultiPoly.var(nv, n + (i + m) % n) for i in range(n)]
    x = Poly([MultiPoly(nv), MultiPoly.const(nv, 1)])
    diag = [x - Poly([bi]) for bi in b]
    spec = TridiagSpec.build(diag, [-ai for ai in a[:-1]], [MultiPoly.const(nv, -1)] * (n - 1))
    u, v, w = _phi_polys(spec, a, b, n, n)
    g = n - 1
    u_slots, v_slots, w_slots = _coord_layout(EVEN_MUMFORD, g)
    zero = MultiPoly(nv)
    grab = lambda poly, k: poly.coeff(k) if not isinstance(poly.coeff(k), int) else zero
    return ([grab(u, k) for k in u_slots] + [grab(v, k) for k in v_slots]
            + [grab(w, k) for k in w_slots])


# ---------------------------------------------------------------------------
# inverse reconstruction
# ---------------------------------------------------------------------------

def _subleading_sum(s: Poly) -> Fraction:
    """For monic S of degree d, return sum of the b's it encodes,
    i.e. -coefficient of x^{d-1}."""
    return -Fraction(s.coeff(s.degree - 1)) if s.degree >= 1 else Fraction(0)


def _monic_separation(product: Poly, expected_degree: int, label: str):
    """Split c * S with S monic of expected_degree into (c, S)."""
    if product.degree != expected_degree:
        raise NotInImageError(f"{label}: expected degree {expected_degree}, "
                              f"got {product.degree}")
    c = Fraction(product.leading())
    return c, Poly([Fraction(x) / c for x in product.coeffs])


def phi_inverse(triple: MumfordTriple, n: int) -> TodaPoint:
    """Invert the m = n map: reconstruct the unique Toda preimage.

    Proceeds by induction on the trailing minors S_j = Delta_{j..n}
    (monic of degree j-1) using the three-term recursion
    S_{j+1} = (x - b_j) S_j - a_{j-1} S_{j-1}; each step separates the
    scalar a_{j-1} from the monic S_{j-1} and reads b off subleading
    coefficients.  Raises NotInImageError when any separation fails.
    """
    u, v, w = triple.u, triple.v, triple.w
    if u.degree != n - 1:
        raise NotInImageError(f"deg u = {u.degree}, expected {n - 1}")
    f = u * w + v * v
    try:
        p, r = pr_split_from(f, n)
    except ValueError as exc:
        raise NotInImageError(str(exc)) from exc
    if r != Poly([Fraction(-4)]):
        raise NotInImageError("u w + v^2 + 4 is not a perfect square")

    b = [Fraction(0)] * (n + 1)  # 1-based
    a = [Fraction(0)] * (n + 1)
    sum_all = -Fraction(p.coeff(n - 1))
    sigma_n = _subleading_sum(u)  # b_1 + ... + b_{n-1}
    b[n] = sum_all - sigma_n

    # split a_{n-1} Delta_{n-1,n} and a_n Delta_{1,n} out of the linear system
    s = Poly([-b[n], Fraction(1)]) * u - p
    a_n1_prod = Fraction(1, 2) * (s + v)
    a_n_prod = Fraction(1, 2) * (s - v)
    a[n - 1], s_prev = _monic_separation(a_n1_prod, n - 2, "a_{n-1} Delta_{n-1,n}")
    a[n], _ = _monic_separation(a_n_prod, n - 2, "a_n Delta_{1,n}")

    s_cur = u  # S_n
    # downward induction: j = n-1 .. 2 yields a_{j-1}, S_{j-1}, b_j
    for j in range(n - 1, 1, -1):
        b[j] = _subleading_sum(s_cur) - _subleading_sum(s_prev)
        prod = Poly([-b[j], Fraction(1)]) * s_prev - s_cur
        a[j - 1], s_next = _monic_separation(prod, j - 2, f"a_{j - 1} Delta_{j - 1}..n")
        s_cur, s_prev = s_prev, s_next
    if s_prev != Poly([Fraction(1)]):
        raise NotInImageError("trailing minor did not terminate at 1")
    b[1] = _subleading_sum(s_cur)

    try:
        return TodaPoint(tuple(a[1:]), tuple(b[1:]))
    except InvariantError as exc:
        raise NotInImageError(f"reconstructed point invalid: {exc}") from exc


# ---------------------------------------------------------------------------
# quadratic bracket family on the even Mumford space
# ---------------------------------------------------------------------------

def quad_bracket_generators(g: int, phi: Poly) -> dict:
    """Generating functions of the quadratic family on M'_g, deg phi <= 1."""
    if phi.is_zero():
        raise InvariantError("phi", "phi must be nonzero")
    if phi.degree > 1:
        raise InvariantError("phi-degree", "the quadratic family needs deg phi <= 1")
    coords = phase_coordinates(EVEN_MUMFORD, g)
    nv = coords.nvars
    u, v, w = coords.u, coords.v, coords.w
    n = g + 1
    p, _r = pr_split_from(u * w + v * v, n)
    phim = _lift_phi(phi, nv)
    p_phi = p * phim
    # A(t) = phi(alpha(2t)/2) = phi_1 t + (phi_1 (w_{g+1}-u_{g-1})/2 + phi_0)
    c = coords.alpha.coeff(0)
    a_phi = Poly([Fraction(phi.coeff(1)) * c * Fraction(1, 2)
                  + MultiPoly.const(nv, phi.coeff(0)),
                  MultiPoly.const(nv, phi.coeff(1))])
    afs = BiPoly.of_sum(a_phi)
    alpha_sum = BiPoly.of_sum(coords.alpha)
    return {
        ("u", "v"): divided_difference(u, p_phi) + afs * BiPoly.outer(u, u),
        ("u", "w"): Fraction(-2) * divided_difference(v, p_phi)
                    - Fraction(2) * afs * BiPoly.outer(u, v),
        ("v", "w"): divided_difference(w, p_phi) - alpha_sum * BiPoly.outer(u, p_phi)
                    + afs * BiPoly.outer(u, w),
        ("w", "w"): Fraction(2) * alpha_sum
                    * (BiPoly.outer(v, p_phi) - BiPoly.outer(p_phi, v))
                    + Fraction(2) * afs
                    * (BiPoly.outer(w, v) - BiPoly.outer(v, w)),
    }


def quad_mumford_table(g: int, phi: Poly) -> BracketTable:
    coords = phase_coordinates(EVEN_MUMFORD, g)
    return table_from_generators(coords, quad_bracket_generators(g, phi))


def pr_symbolic(g: int) -> tuple[Poly, Poly]:
    """(p, r) of the splitting u w + v^2 = p^2 + r with MultiPoly coefficients."""
    coords = phase_coordinates(EVEN_MUMFORD, g)
    return pr_split_from(coords.u * coords.w + coords.v * coords.v, g + 1)
