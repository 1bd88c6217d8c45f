"""Parity involutions of even Mumford spaces and the reduced structures
on their fixed loci (the hyperelliptic Prym systems).

The involution on an even Mumford space M'_g acts on Lax matrices by
    j: (u, v, w)(x)  |->  (u(-x), -v(-x), w(-x)),
and -j is its composition with the sign flip of the whole matrix.  For g
even the fixed points of j are exactly the odd-prym triples; for g odd
the fixed points of -j are the even-prym triples.  When phi is even
(resp. odd) the involution is an automorphism of the bracket {.,.}^phi,
and the fixed locus inherits a unique Poisson structure characterized by
restriction of brackets of invariant extensions (Dirac reduction).

Both routes to the reduced brackets are implemented and compared:

  * dirac_reduce: generic reduction of any coordinate table through a
    linear involution given by coordinate signs (the parity projector
    realizes the invariant-extension choice);
  * prym_bracket_table: the closed-form generating functions

        {u(x), v(x')} = x' (u(x)phi(x') - u(x')phi(x)) / (x^2 - x'^2)
        {u(x), w(x')} = -2 (x v(x)phi(x') - x' v(x')phi(x)) / (x^2 - x'^2)
        {v(x), w(x')} = x (w(x)phi(x') - w(x')phi(x)) / (x^2 - x'^2)
                        - x u(x) phi(x')
        {w(x), w(x')} = 2 (x v(x)phi(x') - x' v(x')phi(x))

    which are formally the same for both flavors (phi even on odd-prym,
    phi odd on even-prym).

The reduced integrable fields are the Lax fields

    X_y L(x) = [L(x), M(x,y)] / (x^2 - y^2),
    M(x,y) = [[y v(y), x w(y) + x (x^2-y^2) u(y)], [x u(y), -y v(y)]].
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (BiPoly, Poly, exact_divide_x2_minus,
                      exact_divide_x2_minus_xp2)
from .errors import InvariantError
from .mumford import (EVEN_MUMFORD, EVEN_PRYM, ODD_PRYM, CoordSystem,
                      MumfordTriple, _lift_phi, flow_values,
                      mumford_bracket_table, phase_coordinates)
from .symbolic import BracketTable, MultiPoly

# ---------------------------------------------------------------------------
# the involution
# ---------------------------------------------------------------------------

def involution_j(triple: MumfordTriple, sign: int = 1) -> MumfordTriple:
    """Apply j (sign=+1) or -j (sign=-1) to an even Mumford triple.

    Monicity of the image forces deg u even for j and odd for -j.
    """
    if triple.flavor not in (EVEN_MUMFORD, ODD_PRYM, EVEN_PRYM):
        raise InvariantError("flavor", "the involution lives on even Mumford spaces")
    if sign not in (1, -1):
        raise InvariantError("sign", "sign must be +1 or -1")
    need_parity = 0 if sign == 1 else 1
    if triple.g % 2 != need_parity:
        raise InvariantError("degree-parity",
                             "j needs deg u even, -j needs deg u odd")
    u = triple.u.reflect()
    v = -triple.v.reflect()
    w = triple.w.reflect()
    if sign == -1:
        u, v, w = -u, -v, -w
    return MumfordTriple(u, v, w, EVEN_MUMFORD)


def is_fixed_point(triple: MumfordTriple, sign: int = 1) -> bool:
    img = involution_j(triple.ambient(), sign)
    amb = triple.ambient()
    return img.u == amb.u and img.v == amb.v and img.w == amb.w


def involution_signs(g: int, sign: int = 1) -> list[int]:
    """Pullback signs of the even Mumford coordinates under j or -j."""
    u_sgn = lambda k: (-1) ** k if sign == 1 else -((-1) ** k)
    v_sgn = lambda k: -((-1) ** k) if sign == 1 else (-1) ** k
    w_sgn = u_sgn
    return ([u_sgn(k) for k in range(g)] + [v_sgn(k) for k in range(g)]
            + [w_sgn(k) for k in range(g + 2)])


# ---------------------------------------------------------------------------
# generic Dirac reduction through a linear involution
# ---------------------------------------------------------------------------

def is_poisson_involution(table: BracketTable, signs: list[int]) -> bool:
    """Check e_i e_j {c_i, c_j}(c) == {c_i, c_j}(e c) for all pairs."""
    n = table.dim
    if len(signs) != n:
        raise ValueError("one sign per coordinate required")
    nvars = n
    reps = [MultiPoly.var(nvars, k) * signs[k] for k in range(nvars)]
    for i in range(n):
        for j in range(i + 1, n):
            entry = table.entry(i, j)
            if entry.is_zero():
                continue
            if not (signs[i] * signs[j] * entry == entry.subs(reps)):
                return False
    return True


def dirac_reduce(table: BracketTable, signs: list[int]) -> BracketTable:
    """Poisson structure induced on the fixed locus of a linear involution.

    The invariant coordinates are their own invariant extensions, so the
    reduced bracket of two of them is the original entry restricted to the
    fixed locus (anti-invariant coordinates set to zero).  Refuses to
    reduce when the involution is not a Poisson map for the given table.
    """
    if not is_poisson_involution(table, signs):
        raise InvariantError("poisson-involution",
                             "the involution is not a Poisson map for this bracket")
    fixed = [k for k, s in enumerate(signs) if s == 1]
    names = [table.names[k] for k in fixed]
    m = len(fixed)
    position = {k: i for i, k in enumerate(fixed)}
    reps = [MultiPoly.var(m, position[k]) if s == 1 else MultiPoly(m)
            for k, s in enumerate(signs)]
    entries = [[table.entry(a, b).subs(reps) for b in fixed] for a in fixed]
    return BracketTable(names, entries)


def reduce_mumford_table(flavor: str, n: int, phi: Poly) -> BracketTable:
    """Generic route: reduce the ambient even Mumford table through j / -j."""
    if flavor == ODD_PRYM:
        g, sign = 2 * n, 1
    elif flavor == EVEN_PRYM:
        g, sign = 2 * n + 1, -1
    else:
        raise InvariantError("flavor", "expected a prym flavor")
    ambient = mumford_bracket_table(EVEN_MUMFORD, g, phi)
    return dirac_reduce(ambient, involution_signs(g, sign))


# ---------------------------------------------------------------------------
# closed-form reduced brackets
# ---------------------------------------------------------------------------

def _shift_x(bp: BiPoly) -> BiPoly:
    return BiPoly([[0] * len(bp.grid[0])] + [list(r) for r in bp.grid]) if bp.grid else bp


def _shift_xp(bp: BiPoly) -> BiPoly:
    return BiPoly([[0] + list(r) for r in bp.grid]) if bp.grid else bp


def prym_bracket_generators(flavor: str, n: int, phi: Poly) -> dict:
    """Closed-form generating functions of the reduced bracket.

    The same four expressions serve both flavors; only the parity demanded
    of phi differs (even on odd-prym, odd on even-prym).
    """
    coords = phase_coordinates(flavor, n)
    ambient_g = 2 * n if flavor == ODD_PRYM else 2 * n + 1
    if phi.is_zero():
        raise InvariantError("phi", "phi must be nonzero")
    if phi.degree > ambient_g:
        raise InvariantError("phi-degree", f"deg phi must be <= {ambient_g}")
    want_even = flavor == ODD_PRYM
    if want_even and not phi.is_even():
        raise InvariantError("phi-parity", "odd-prym reduction needs phi even")
    if not want_even and not phi.is_odd():
        raise InvariantError("phi-parity", "even-prym reduction needs phi odd")
    phim = _lift_phi(phi, coords.nvars)
    u, v, w = coords.u, coords.v, coords.w

    def cross(p: Poly, q: Poly) -> BiPoly:
        return BiPoly.outer(p, q) - BiPoly.outer(q, p)

    x_cross_v = _shift_x(BiPoly.outer(v, phim)) - _shift_xp(BiPoly.outer(phim, v))
    return {
        ("u", "v"): _shift_xp(exact_divide_x2_minus_xp2(cross(u, phim))),
        ("u", "w"): Fraction(-2) * exact_divide_x2_minus_xp2(x_cross_v),
        ("v", "w"): _shift_x(exact_divide_x2_minus_xp2(cross(w, phim)))
                    - _shift_x(BiPoly.outer(u, phim)),
        ("w", "w"): Fraction(2) * x_cross_v,
    }


def prym_bracket_table(flavor: str, n: int, phi: Poly) -> BracketTable:
    """Closed-form reduced bracket table on a prym phase space."""
    from .mumford import table_from_generators
    coords = phase_coordinates(flavor, n)
    return table_from_generators(coords, prym_bracket_generators(flavor, n, phi))


def tables_equal(a: BracketTable, b: BracketTable) -> bool:
    return (a.names == b.names
            and all((a.entry(i, j) - b.entry(i, j)).is_zero()
                    for i in range(a.dim) for j in range(a.dim)))


# ---------------------------------------------------------------------------
# reduced Lax flows
# ---------------------------------------------------------------------------

def _x_times(p: Poly) -> Poly:
    return Poly([0] + list(p.coeffs))


def prym_flow(triple: MumfordTriple, y: Fraction) -> tuple[Poly, Poly, Poly]:
    """Tangent of the reduced field X_y at a prym point.

    From the Lax form, with exact division by (x - y)(x + y):
        du = 2 (y v(y) u(x) - x u(y) v(x)) / (x^2 - y^2)
        dv = (x u(y) w(x) - x w(y) u(x)) / (x^2 - y^2) - x u(x) u(y)
        dw = 2 (x w(y) v(x) - y v(y) w(x)) / (x^2 - y^2) + 2 x v(x) u(y)
    """
    if triple.flavor not in (ODD_PRYM, EVEN_PRYM):
        raise InvariantError("flavor", "prym_flow needs a prym point")
    y = Fraction(y)
    u, v, w = triple.u, triple.v, triple.w
    uy, vy, wy = u.evaluate(y), v.evaluate(y), w.evaluate(y)
    du = 2 * exact_divide_x2_minus((y * vy) * u - uy * _x_times(v), y)
    dv = exact_divide_x2_minus(uy * _x_times(w) - wy * _x_times(u), y) - uy * _x_times(u)
    dw = 2 * exact_divide_x2_minus(wy * _x_times(v) - (y * vy) * w, y) + 2 * uy * _x_times(v)
    return du, dv, dw


def prym_flow_symbolic(flavor: str, n: int, y: Fraction) -> list[MultiPoly]:
    """Components of the reduced X_y as polynomials in the prym coordinates.

    Raises InvariantError("tangent-shape") if any forbidden-parity or fixed
    coefficient of the tangent fails to vanish identically.
    """
    coords = phase_coordinates(flavor, n)
    y = Fraction(y)
    u, v, w = coords.u, coords.v, coords.w
    uy, vy, wy = u.evaluate(y), v.evaluate(y), w.evaluate(y)
    yvy = vy * y
    du = 2 * exact_divide_x2_minus(yvy * u - uy * _x_times(v), y)
    dv = exact_divide_x2_minus(uy * _x_times(w) - wy * _x_times(u), y) - uy * _x_times(u)
    dw = 2 * exact_divide_x2_minus(wy * _x_times(v) - yvy * w, y) + 2 * uy * _x_times(v)
    return flow_values(flavor, n, du, dv, dw)
