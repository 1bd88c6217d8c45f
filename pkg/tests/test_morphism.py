"""The lattice-to-Mumford morphism, its inverse, and the quadratic family."""

from fractions import Fraction as F

import pytest

from prymlab.algebra import BiPoly, Poly, divided_difference, parse_poly
from prymlab.errors import InvariantError, NotInImageError
from prymlab.morphism import (PhiImage, phi, phi_inverse, phi_symbolic,
                              pr_symbolic, quad_mumford_table)
from prymlab.mumford import (EVEN_MUMFORD, EVEN_PRYM, ODD_PRYM, MumfordTriple,
                             _lift_phi, flow_values, mumford_flow,
                             phase_coordinates, point_values)
from prymlab.sampling import km_point, toda_point
from prymlab.symbolic import MultiPoly
from prymlab.toda import KMPoint, char_poly, toda_pencil_table, toda_point_values


def _as_mp(value, nvars):
    return value if isinstance(value, MultiPoly) else MultiPoly.const(nvars, value)


# ---------------------------------------------------------------------------
# the forward map
# ---------------------------------------------------------------------------

def test_phi_worked_example_n3():
    image = phi(KMPoint((F(1), F(1), F(1))).embed(), 3)
    assert image.triple.u == parse_poly("-1,0,1")
    assert image.triple.v.is_zero()
    assert image.triple.w == parse_poly("4,0,-5,0,1")
    assert image.p == parse_poly("0,-3,0,1")
    assert image.triple.flavor == ODD_PRYM
    assert (image.triple.u * image.triple.w
            == image.p * image.p - Poly([F(4)]))


def test_fiber_identity_all_m(rng):
    for n in (3, 5, 7):
        point = toda_point(rng, n)
        for m in range(1, n + 1):
            phi(point, m)  # PhiImage validates u w + v^2 = p^2 - 4


def test_phi_image_validation():
    with pytest.raises(InvariantError):
        PhiImage(MumfordTriple(parse_poly("0,0,1"), Poly(),
                               parse_poly("0,0,0,0,1"), EVEN_MUMFORD),
                 3, parse_poly("0,0,0,1"))


def test_km_images_have_prym_flavors(rng):
    for n, flavor in ((3, ODD_PRYM), (4, EVEN_PRYM), (5, ODD_PRYM), (6, EVEN_PRYM)):
        image = phi(km_point(rng, n).embed(), 1)
        assert image.triple.flavor == flavor


def test_equivariance(rng):
    point = toda_point(rng, 5)
    for m in range(1, 6):
        lhs = phi(point.shift(1), m).triple
        rhs = phi(point, m + 1).triple
        assert (lhs.u, lhs.v, lhs.w) == (rhs.u, rhs.v, rhs.w)


def test_commuting_diagram(rng):
    point = toda_point(rng, 4)
    half_k = Poly([F(c, 2) for c in char_poly(point).coeffs])
    image = phi(point, 2)
    h = image.triple.u * image.triple.w + image.triple.v * image.triple.v
    assert h == half_k * half_k - Poly([F(4)])
    assert image.p == half_k


def test_injectivity_sampling(rng):
    for n in (3, 6):
        points = [toda_point(rng, n) for _ in range(12)]
        images = [phi(p, n).triple for p in points]
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                if points[i] != points[j]:
                    assert (images[i].u, images[i].v, images[i].w) \
                        != (images[j].u, images[j].v, images[j].w)


# ---------------------------------------------------------------------------
# inverse reconstruction
# ---------------------------------------------------------------------------

def test_round_trip(rng):
    for n in (3, 4, 5, 6):
        point = toda_point(rng, n)
        back = phi_inverse(phi(point, n).triple, n)
        assert back == point


def test_inverse_worked_example():
    triple = MumfordTriple(parse_poly("-1,0,1"), Poly(), parse_poly("4,0,-5,0,1"),
                           ODD_PRYM)
    point = phi_inverse(triple, 3)
    assert point.a == (1, 1, 1) and point.b == (0, 0, 0)


def test_inverse_bn_extraction(rng):
    # b_n is the difference of the coefficient sums read off p and u
    point = toda_point(rng, 4)
    image = phi(point, 4)
    sum_all = -image.p.coeff(3)
    sum_head = -image.triple.u.coeff(2)
    assert sum_all - sum_head == point.b[3]


def test_not_in_image_errors():
    with pytest.raises(NotInImageError):
        phi_inverse(MumfordTriple(parse_poly("0,0,1"), Poly(),
                                  parse_poly("1,0,0,0,1"), EVEN_MUMFORD), 3)
    # right fiber shape but monic separation fails (v too big a mess):
    with pytest.raises(NotInImageError):
        phi_inverse(MumfordTriple(parse_poly("0,0,1"), parse_poly("5,7"),
                                  parse_poly("4,0,0,0,1"), EVEN_MUMFORD), 3)


# ---------------------------------------------------------------------------
# quadratic bracket family
# ---------------------------------------------------------------------------

def test_quad_table_antisymmetry_and_jacobi():
    for phi_text in ("1", "0,1"):
        table = quad_mumford_table(2, parse_poly(phi_text))
        assert not table.antisymmetry_defects()
        assert table.jacobi_holds()
    with pytest.raises(InvariantError):
        quad_mumford_table(2, parse_poly("0,0,1"))


def test_quad_bracket_with_p_displayed_formula():
    g = 2
    coords = phase_coordinates(EVEN_MUMFORD, g)
    nv = coords.nvars
    p_sym, _ = pr_symbolic(g)
    phi_poly = parse_poly("1,2")
    table = quad_mumford_table(g, phi_poly)
    dd_uv = divided_difference(coords.u, coords.v)
    rhs_bp = dd_uv * BiPoly.outer(Poly([MultiPoly.const(nv, 1)]),
                                  _lift_phi(phi_poly, nv))
    for i in range(g):
        ui = coords.index(f"u{i}")
        for j in range(p_sym.degree + 1):
            pj = _as_mp(p_sym.coeff(j), nv)
            lhs = MultiPoly(nv)
            for l in range(nv):
                d = pj.diff(l)
                if not d.is_zero():
                    lhs = lhs + table.entry(ui, l) * d
            assert (lhs - _as_mp(rhs_bp.coeff(i, j), nv)).is_zero(), (i, j)


def test_r_coefficients_are_casimirs():
    g = 2
    coords = phase_coordinates(EVEN_MUMFORD, g)
    nv = coords.nvars
    _, r_sym = pr_symbolic(g)
    table = quad_mumford_table(g, parse_poly("1,2"))
    for j in range(r_sym.degree + 1):
        rj = _as_mp(r_sym.coeff(j), nv)
        for c in range(nv):
            assert table.poisson_bracket(rj, MultiPoly.var(nv, c)).is_zero()


def test_lax_field_is_quad_hamiltonian(rng):
    # X_y = {., 2 p(y)}_q^1 on the even Mumford space
    from prymlab.sampling import mumford_triple
    g = 2
    point = mumford_triple(rng, EVEN_MUMFORD, g)
    values = point_values(point)
    coords = phase_coordinates(EVEN_MUMFORD, g)
    p_sym, _ = pr_symbolic(g)
    y = F(3, 2)
    two_p_y = 2 * p_sym.evaluate(y)
    table = quad_mumford_table(g, Poly([F(1)]))
    field = table.hamiltonian_field(_as_mp(two_p_y, coords.nvars), values)
    du, dv, dw = mumford_flow(point, y)
    assert field == [F(c) for c in flow_values(EVEN_MUMFORD, g, du, dv, dw)]


def test_phi_intertwines_the_pencils_up_to_sign(rng):
    # {F o Phi, G o Phi}^phi = ({F, G}_q^{-phi}) o Phi, exactly.  Both
    # one-sided conventions are pinned by their Lax hierarchies, so the
    # sign is intrinsic; see the module docstring.
    n = 3
    g = n - 1
    image_coords = phi_symbolic(n, n)
    for phi_text in ("1", "0,1", "1,2"):
        phi_poly = parse_poly(phi_text)
        q_table = quad_mumford_table(g, phi_poly)
        t_table = toda_pencil_table(phi_poly, n)
        for _ in range(2):
            point = toda_point(rng, n)
            values_t = toda_point_values(point)
            values_m = point_values(phi(point, n).triple)
            lattice = t_table.at(values_t)
            grads = [[c.diff(k).eval(values_t) for k in range(2 * n)]
                     for c in image_coords]
            dim = len(image_coords)
            for a in range(dim):
                for b in range(a + 1, dim):
                    lhs = sum(grads[a][k] * grads[b][l] * lattice[k][l]
                              for k in range(2 * n) for l in range(2 * n))
                    rhs = q_table.entry(a, b).eval(values_m)
                    assert lhs == -rhs, (phi_text, a, b)


def test_phi_maps_flows_up_to_sign(rng):
    # push the lattice Hamiltonian field of 2p(y) o Phi through dPhi: it is
    # the negative of the Mumford Lax field X_y at the image
    n = 3
    image_coords = phi_symbolic(n, n)
    point = toda_point(rng, n)
    values_t = toda_point_values(point)
    image = phi(point, n)
    y = F(2)
    # 2 p(y) as a function on the lattice, via the symbolic image coordinates
    coords = phase_coordinates(EVEN_MUMFORD, n - 1)
    p_sym, _ = pr_symbolic(n - 1)
    two_p_y = 2 * p_sym.evaluate(y)
    hamiltonian = _as_mp(two_p_y, coords.nvars).subs(image_coords)
    t_table = toda_pencil_table(Poly([F(1)]), n)
    lattice_field = t_table.hamiltonian_field(hamiltonian, values_t)
    pushed = [sum(c.diff(k).eval(values_t) * lattice_field[k]
                  for k in range(2 * n)) for c in image_coords]
    du, dv, dw = mumford_flow(image.triple.ambient(), y)
    target = [F(c) for c in flow_values(EVEN_MUMFORD, n - 1, du, dv, dw)]
    assert pushed == [-x for x in target]


def test_quad_family_compatible_with_linear_pencil():
    # the quadratic family and the linear family with deg psi <= 1 are
    # compatible: any sum of the two tables still satisfies Jacobi
    from prymlab.mumford import mumford_bracket_table
    quad = quad_mumford_table(2, parse_poly("1,1"))
    for psi_text in ("1", "0,1"):
        linear = mumford_bracket_table(EVEN_MUMFORD, 2, parse_poly(psi_text))
        assert quad.add(linear).jacobi_holds(), psi_text
