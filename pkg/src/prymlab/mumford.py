"""Odd and even Mumford systems.

Phase points are triples of polynomials (u, v, w), thought of as the Lax
matrix L(x) = [[v, w], [u, -v]].  The degree table:

    flavor          dim     u                v          w
    odd-mumford    3g+1    monic, deg g     deg < g    monic, deg g+1
    even-mumford   3g+2    monic, deg g     deg < g    monic, deg g+2

and the parity-constrained subspaces sitting inside even spaces:

    odd-prym(n)    3n+1    even monic 2n    odd <2n    even monic 2n+2
    even-prym(n)   3n+2    odd monic 2n+1   even<2n+1  odd monic 2n+3

The whole polynomial family of compatible Poisson brackets is generated by

    {u(x), u(x')} = {v(x), v(x')} = 0
    {u(x), v(x')} = (u(x)phi(x') - u(x')phi(x)) / (x - x')
    {u(x), w(x')} = -2 (v(x)phi(x') - v(x')phi(x)) / (x - x')
    {v(x), w(x')} = (w(x)phi(x') - w(x')phi(x)) / (x - x')
                    - alpha(x+x') u(x) phi(x')
    {w(x), w(x')} = 2 alpha(x+x') (v(x)phi(x') - v(x')phi(x))

for any phi of degree <= g, with alpha = 1 on odd spaces and
alpha(t) = t + w_{g+1} - u_{g-1} on even spaces.  The momentum map is
H(x) = u(x)w(x) + v(x)^2 = -det L(x); its coefficients are in involution
for every member of the family, and the multi-Hamiltonian vector fields
admit the Lax form

    X_y L(x) = [L(x), L(y) + (x-y) B(x,y)] / (x - y),
    B(x,y)   = [[0, alpha(x+y) u(y)], [0, 0]].

Bracket tables are materialized as exact polynomials in the phase-space
coordinates (see symbolic.BracketTable) so that Jacobi identities and
involutivity are verified symbolically, with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (BiPoly, Poly, divided_difference, exact_divide_linear,
                      format_poly, parse_poly)
from .errors import InvariantError, ParseError
from .symbolic import BracketTable, MultiPoly

ODD_MUMFORD = "odd-mumford"
EVEN_MUMFORD = "even-mumford"
ODD_PRYM = "odd-prym"
EVEN_PRYM = "even-prym"

MUMFORD_FLAVORS = (ODD_MUMFORD, EVEN_MUMFORD)
PRYM_FLAVORS = (ODD_PRYM, EVEN_PRYM)
FLAVORS = MUMFORD_FLAVORS + PRYM_FLAVORS


def _require(cond: bool, invariant: str, message: str) -> None:
    if not cond:
        raise InvariantError(invariant, message)


@dataclass(frozen=True)
class MumfordTriple:
    """A point of one of the four phase spaces, validated on construction."""

    u: Poly
    v: Poly
    w: Poly
    flavor: str

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise InvariantError("flavor", f"unknown flavor {self.flavor!r}")
        u, v, w = self.u, self.v, self.w
        _require(u.is_monic(), "u-monic", "u must be monic")
        _require(w.is_monic(), "w-monic", "w must be monic")
        if self.flavor == ODD_MUMFORD:
            g = u.degree
            _require(v.degree < g, "v-degree", f"deg v must be < {g}")
            _require(w.degree == g + 1, "w-degree", f"deg w must be {g + 1}")
        elif self.flavor == EVEN_MUMFORD:
            g = u.degree
            _require(v.degree < g, "v-degree", f"deg v must be < {g}")
            _require(w.degree == g + 2, "w-degree", f"deg w must be {g + 2}")
        elif self.flavor == ODD_PRYM:
            n = self.prym_index
            _require(u.degree == 2 * n, "u-degree", "deg u must be even")
            _require(v.degree < 2 * n, "v-degree", f"deg v must be < {2 * n}")
            _require(w.degree == 2 * n + 2, "w-degree", f"deg w must be {2 * n + 2}")
            _require(u.is_even() and w.is_even() and v.is_odd(), "parity",
                     "odd-prym triples need u, w even and v odd")
        else:
            n = self.prym_index
            _require(u.degree == 2 * n + 1, "u-degree", "deg u must be odd")
            _require(v.degree < 2 * n + 1, "v-degree", f"deg v must be < {2 * n + 1}")
            _require(w.degree == 2 * n + 3, "w-degree", f"deg w must be {2 * n + 3}")
            _require(u.is_odd() and w.is_odd() and v.is_even(), "parity",
                     "even-prym triples need u, w odd and v even")

    @property
    def g(self) -> int:
        """Genus parameter of the (ambient) Mumford space, deg u."""
        return self.u.degree

    @property
    def prym_index(self) -> int:
        if self.flavor == ODD_PRYM:
            return self.u.degree // 2
        if self.flavor == EVEN_PRYM:
            return (self.u.degree - 1) // 2
        raise InvariantError("flavor", "prym_index is only defined for prym flavors")

    def ambient(self) -> "MumfordTriple":
        """Forget parity constraints: the same point in the even Mumford space."""
        if self.flavor in MUMFORD_FLAVORS:
            return self
        return MumfordTriple(self.u, self.v, self.w, EVEN_MUMFORD)

    def to_json(self) -> dict:
        return {"flavor": self.flavor, "u": format_poly(self.u),
                "v": format_poly(self.v), "w": format_poly(self.w)}

    @classmethod
    def from_json(cls, payload: dict) -> "MumfordTriple":
        try:
            flavor = payload["flavor"]
            u = parse_poly(payload["u"])
            v = parse_poly(payload["v"])
            w = parse_poly(payload["w"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed triple payload: {exc}") from exc
        return cls(u, v, w, flavor)


# ---------------------------------------------------------------------------
# coordinates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoordSystem:
    """Named coordinates of a phase space plus symbolic u(x), v(x), w(x)
    whose coefficients are MultiPoly variables (monic slots are constants)."""

    flavor: str
    g: int
    names: tuple
    u: Poly
    v: Poly
    w: Poly
    alpha: Poly  # one-variable polynomial alpha(t) with MultiPoly coefficients

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


def _coord_layout(flavor: str, g: int) -> tuple[list, list, list]:
    """Lists of coefficient exponents that are free coordinates, per family."""
    if flavor == ODD_MUMFORD:
        return list(range(g)), list(range(g)), list(range(g + 1))
    if flavor == EVEN_MUMFORD:
        return list(range(g)), list(range(g)), list(range(g + 2))
    if flavor == ODD_PRYM:
        n = g
        return (list(range(0, 2 * n, 2)), list(range(1, 2 * n, 2)),
                list(range(0, 2 * n + 2, 2)))
    if flavor == EVEN_PRYM:
        n = g
        return (list(range(1, 2 * n + 1, 2)), list(range(0, 2 * n + 1, 2)),
                list(range(1, 2 * n + 3, 2)))
    raise InvariantError("flavor", f"unknown flavor {flavor!r}")


def _poly_degree(flavor: str, g: int) -> tuple[int, int]:
    """(deg u, deg w) for a flavor; g is the prym index for prym flavors."""
    return {ODD_MUMFORD: (g, g + 1), EVEN_MUMFORD: (g, g + 2),
            ODD_PRYM: (2 * g, 2 * g + 2), EVEN_PRYM: (2 * g + 1, 2 * g + 3)}[flavor]


def phase_coordinates(flavor: str, g: int) -> CoordSystem:
    """Coordinate system of a phase space; g is the genus for Mumford
    flavors and the index n for prym flavors."""
    u_slots, v_slots, w_slots = _coord_layout(flavor, g)
    names = ([f"u{k}" for k in u_slots] + [f"v{k}" for k in v_slots]
             + [f"w{k}" for k in w_slots])
    nvars = len(names)
    index = {name: i for i, name in enumerate(names)}

    def build(prefix: str, slots: list, degree: int) -> Poly:
        coeffs = [MultiPoly.const(nvars, 0)] * (degree + 1)
        for k in slots:
            coeffs[k] = MultiPoly.var(nvars, index[f"{prefix}{k}"])
        coeffs[degree] = MultiPoly.const(nvars, 1)
        return Poly(coeffs)

    deg_u, deg_w = _poly_degree(flavor, g)
    u = build("u", u_slots, deg_u)
    v_coeffs = [MultiPoly.const(nvars, 0)] * (deg_u if v_slots else 0)
    for k in v_slots:
        v_coeffs[k] = MultiPoly.var(nvars, index[f"v{k}"])
    v = Poly(v_coeffs)
    w = build("w", w_slots, deg_w)

    if flavor == ODD_MUMFORD:
        alpha = Poly([MultiPoly.const(nvars, 1)])
    elif flavor == EVEN_MUMFORD:
        c0 = (MultiPoly.var(nvars, index[f"w{g + 1}"])
              - MultiPoly.var(nvars, index[f"u{g - 1}"]))
        alpha = Poly([c0, MultiPoly.const(nvars, 1)])
    elif flavor == ODD_PRYM:
        # restriction of the ambient even alpha: the w_{2n+1}, u_{2n-1}
        # coefficients vanish on the parity locus, leaving alpha(t) = t
        alpha = Poly([MultiPoly.const(nvars, 0), MultiPoly.const(nvars, 1)])
    else:
        alpha = Poly([MultiPoly.const(nvars, 0), MultiPoly.const(nvars, 1)])
    return CoordSystem(flavor, g, tuple(names), u, v, w, alpha)


def point_values(triple: MumfordTriple) -> list[Fraction]:
    """Coordinate values of a triple, aligned with phase_coordinates."""
    g = triple.g if triple.flavor in MUMFORD_FLAVORS else triple.prym_index
    u_slots, v_slots, w_slots = _coord_layout(triple.flavor, g)
    vals = [Fraction(triple.u.coeff(k)) for k in u_slots]
    vals += [Fraction(triple.v.coeff(k)) for k in v_slots]
    vals += [Fraction(triple.w.coeff(k)) for k in w_slots]
    return vals


def triple_from_values(flavor: str, g: int, values) -> MumfordTriple:
    """Inverse of point_values."""
    u_slots, v_slots, w_slots = _coord_layout(flavor, g)
    deg_u, deg_w = _poly_degree(flavor, g)
    vals = list(values)
    u_coeffs = [Fraction(0)] * (deg_u + 1)
    for k in u_slots:
        u_coeffs[k] = vals.pop(0)
    u_coeffs[deg_u] = Fraction(1)
    v_coeffs = [Fraction(0)] * deg_u
    for k in v_slots:
        v_coeffs[k] = vals.pop(0)
    w_coeffs = [Fraction(0)] * (deg_w + 1)
    for k in w_slots:
        w_coeffs[k] = vals.pop(0)
    w_coeffs[deg_w] = Fraction(1)
    return MumfordTriple(Poly(u_coeffs), Poly(v_coeffs), Poly(w_coeffs), flavor)


# ---------------------------------------------------------------------------
# bracket family
# ---------------------------------------------------------------------------

def _lift_phi(phi: Poly, nvars: int) -> Poly:
    return Poly([MultiPoly.const(nvars, c) for c in phi.coeffs])


def bracket_generators(flavor: str, g: int, phi: Poly) -> dict:
    """The five generating bivariate polynomials, coefficients symbolic.

    Keys ("u","v"), ("u","w"), ("v","w"), ("w","w"); the ("u","u") and
    ("v","v") generators vanish identically and are omitted.
    """
    if flavor not in MUMFORD_FLAVORS:
        raise InvariantError("flavor", "bracket generators live on Mumford spaces")
    if phi.is_zero():
        raise InvariantError("phi", "phi must be nonzero")
    if phi.degree > g:
        raise InvariantError("phi-degree", f"deg phi must be <= {g}")
    coords = phase_coordinates(flavor, g)
    phim = _lift_phi(phi, coords.nvars)
    alpha_sum = BiPoly.of_sum(coords.alpha)
    return {
        ("u", "v"): divided_difference(coords.u, phim),
        ("u", "w"): Fraction(-2) * divided_difference(coords.v, phim),
        ("v", "w"): divided_difference(coords.w, phim)
                    - alpha_sum * BiPoly.outer(coords.u, phim),
        ("w", "w"): Fraction(2) * alpha_sum
                    * (BiPoly.outer(coords.v, phim) - BiPoly.outer(phim, coords.v)),
    }


def table_from_generators(coords: CoordSystem, generators: dict) -> BracketTable:
    """Read coordinate brackets out of generating functions.

    The generating function for families (A, B) is sum {A_i, B_j} x^i x'^j,
    so each table entry is a plain coefficient lookup.
    """
    nvars = coords.nvars
    zero = MultiPoly(nvars)
    entries = [[zero for _ in range(nvars)] for _ in range(nvars)]
    slot_lists = dict(zip("uvw", _coord_layout(coords.flavor, coords.g)))

    def place(fam_a: str, fam_b: str, table: BiPoly) -> None:
        # entries at fixed (monic) or forbidden-parity exponents must have
        # cancelled identically, else the generating functions are wrong
        dx, dy = table.degrees()
        for i in range(dx + 1):
            for j in range(dy + 1):
                if i in slot_lists[fam_a] and j in slot_lists[fam_b]:
                    continue
                if not (table.coeff(i, j) == 0):
                    raise InvariantError(
                        "generator-slots",
                        f"{{{fam_a}(x), {fam_b}(x')}} has residue at x^{i} x'^{j}")
        for i in slot_lists[fam_a]:
            ia = coords.index(f"{fam_a}{i}")
            for j in slot_lists[fam_b]:
                jb = coords.index(f"{fam_b}{j}")
                val = table.coeff(i, j)
                if val == 0:
                    continue
                entries[ia][jb] = entries[ia][jb] + val
                if ia != jb:
                    entries[jb][ia] = entries[jb][ia] - val

    place("u", "v", generators[("u", "v")])
    place("u", "w", generators[("u", "w")])
    place("v", "w", generators[("v", "w")])
    # {w_i, w_j}: the generator is already antisymmetric; fill the upper
    # triangle only so each unordered pair is placed once
    gww = generators[("w", "w")]
    w_slots = slot_lists["w"]
    for pos, i in enumerate(w_slots):
        for j in w_slots[pos + 1:]:
            ia, jb = coords.index(f"w{i}"), coords.index(f"w{j}")
            val = gww.coeff(i, j)
            if val == 0:
                continue
            entries[ia][jb] = entries[ia][jb] + val
            entries[jb][ia] = entries[jb][ia] - val
    return BracketTable(coords.names, entries)


def mumford_bracket_table(flavor: str, g: int, phi: Poly) -> BracketTable:
    """Exact coordinate table of the bracket {.,.}^phi on a Mumford space."""
    coords = phase_coordinates(flavor, g)
    return table_from_generators(coords, bracket_generators(flavor, g, phi))


# ---------------------------------------------------------------------------
# momentum map and flows
# ---------------------------------------------------------------------------

def momentum(triple: MumfordTriple) -> Poly:
    """H(x) = u w + v^2 = -det L(x).  Even in x on prym flavors."""
    return triple.u * triple.w + triple.v * triple.v


def momentum_symbolic(coords: CoordSystem) -> Poly:
    return coords.u * coords.w + coords.v * coords.v


def _alpha_at(triple: MumfordTriple, y: Fraction) -> Poly:
    """alpha(x + y) as a polynomial in x, at a numeric Lax parameter y."""
    if triple.flavor == ODD_MUMFORD:
        return Poly([Fraction(1)])
    g = triple.g
    const = Fraction(y) + triple.w.coeff(g + 1) - triple.u.coeff(g - 1)
    return Poly([const, Fraction(1)])


def mumford_flow(triple: MumfordTriple, y: Fraction) -> tuple[Poly, Poly, Poly]:
    """Tangent (du, dv, dw) of the multi-Hamiltonian field X_y.

    Spelled out from the Lax form, with all divisions by (x - y) exact:
        du = 2 (u(x)v(y) - v(x)u(y)) / (x-y)
        dv = (w(x)u(y) - u(x)w(y)) / (x-y) - alpha(x+y) u(x) u(y)
        dw = 2 (v(x)w(y) - w(x)v(y)) / (x-y) + 2 alpha(x+y) v(x) u(y)
    """
    y = Fraction(y)
    u, v, w = triple.u, triple.v, triple.w
    uy, vy, wy = u.evaluate(y), v.evaluate(y), w.evaluate(y)
    alpha_xy = _alpha_at(triple, y)
    du = 2 * exact_divide_linear(u * vy - v * uy, y)
    dv = exact_divide_linear(w * uy - u * wy, y) - alpha_xy * u * uy
    dw = 2 * exact_divide_linear(v * wy - w * vy, y) + 2 * alpha_xy * v * uy
    return du, dv, dw


def flow_values(flavor: str, g: int, du: Poly, dv: Poly, dw: Poly) -> list:
    """Tangent vector in coordinate order; insists the fixed (monic) slots
    carry zero velocity."""
    u_slots, v_slots, w_slots = _coord_layout(flavor, g)
    free = {("u", k) for k in u_slots} | {("v", k) for k in v_slots} | {("w", k) for k in w_slots}
    for fam, dp in (("u", du), ("v", dv), ("w", dw)):
        for k in range(dp.degree + 1):
            if not (dp.coeff(k) == 0) and (fam, k) not in free:
                raise InvariantError("tangent-shape",
                                     f"flow moves the fixed coefficient {fam}{k}")
    vals = [du.coeff(k) for k in u_slots]
    vals += [dv.coeff(k) for k in v_slots]
    vals += [dw.coeff(k) for k in w_slots]
    return vals


def mumford_flow_symbolic(flavor: str, g: int, y: Fraction) -> list[MultiPoly]:
    """Components of X_y as exact polynomials in the coordinates."""
    coords = phase_coordinates(flavor, g)
    y = Fraction(y)
    u, v, w = coords.u, coords.v, coords.w
    uy, vy, wy = u.evaluate(y), v.evaluate(y), w.evaluate(y)
    # alpha(x + y): substitute t -> x + y in alpha(t)
    alpha_xy = coords.alpha.compose(Poly([MultiPoly.const(coords.nvars, y),
                                          MultiPoly.const(coords.nvars, 1)]))
    du = 2 * exact_divide_linear(u * vy - v * uy, y)
    dv = exact_divide_linear(w * uy - u * wy, y) - alpha_xy * u * uy
    dw = 2 * exact_divide_linear(v * wy - w * vy, y) + 2 * alpha_xy * v * uy
    return flow_values(flavor, g, du, dv, dw)


def flow_commutator_symbolic(flavor: str, g: int, y1: Fraction, y2: Fraction) -> list[MultiPoly]:
    """[X_{y1}, X_{y2}] componentwise, as polynomials in the coordinates."""
    X = mumford_flow_symbolic(flavor, g, y1)
    Y = mumford_flow_symbolic(flavor, g, y2)
    n = len(X)
    out = []
    for k in range(n):
        acc = MultiPoly(X[0].nvars)
        for l in range(n):
            acc = acc + Y[k].diff(l) * X[l] - X[k].diff(l) * Y[l]
        out.append(acc)
    return out
