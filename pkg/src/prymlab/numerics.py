"""Floating-point integration of the implemented flows, with first
integrals monitored along every trajectory.

All exact data is converted to floats once, at trajectory start; the
conservation baselines are the float values at t = 0, so reported drift
isolates integrator error from representation error.  The integrator is
the classical fixed-step fourth-order one-step method; runs are short and
deterministic reproducibility of the drift numbers matters more than
adaptivity.  Trajectories that leave the overflow guard are truncated and
flagged (expected behaviour near the Painleve poles of the lattice
fields).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvariantError
from .mumford import (MUMFORD_FLAVORS, MumfordTriple, _coord_layout,
                      _poly_degree, point_values)
from .toda import KMPoint, TodaPoint

BLOWUP_GUARD = 1e12


@dataclass
class Trajectory:
    system: str
    times: list = field(default_factory=list)
    states: list = field(default_factory=list)
    conserved: dict = field(default_factory=dict)
    drift: dict = field(default_factory=dict)
    truncated: bool = False
    note: str = ""

    def endpoint(self) -> list:
        return self.states[-1]

    def csv(self) -> str:
        names = list(self.conserved)
        width = len(self.states[0]) if self.states else 0
        header = ["t"] + [f"x{i}" for i in range(width)] + names
        lines = [",".join(header)]
        for idx, t in enumerate(self.times):
            row = [repr(t)] + [repr(x) for x in self.states[idx]]
            row += [repr(self.conserved[n][idx]) for n in names]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def drift_summary(self) -> dict:
        return {"system": self.system, "steps": len(self.times) - 1,
                "truncated": self.truncated,
                "drift": {k: v for k, v in self.drift.items()}}


def _rk4_step(f, x, h):
    k1 = f(x)
    k2 = f([xi + 0.5 * h * ki for xi, ki in zip(x, k1)])
    k3 = f([xi + 0.5 * h * ki for xi, ki in zip(x, k2)])
    k4 = f([xi + h * ki for xi, ki in zip(x, k3)])
    return [xi + h / 6.0 * (a + 2 * b + 2 * c + d)
            for xi, a, b, c, d in zip(x, k1, k2, k3, k4)]


# ---------------------------------------------------------------------------
# float polynomial helpers (dense lists, ascending degree)
# ---------------------------------------------------------------------------

def _fmul(p, q):
    if not p or not q:
        return []
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _fadd(p, q):
    out = list(p) + [0.0] * (len(q) - len(p))
    for i, b in enumerate(q):
        out[i] += b
    return out


def _fsub(p, q):
    out = list(p) + [0.0] * (len(q) - len(p))
    for i, b in enumerate(q):
        out[i] -= b
    return out


def _fscale(p, c):
    return [c * x for x in p]


def _feval(p, x):
    acc = 0.0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _fdeflate(p, y):
    """Quotient of p by (x - y); the remainder is discarded (it vanishes
    identically for the flow numerators)."""
    if len(p) <= 1:
        return []
    q = [0.0] * (len(p) - 1)
    acc = p[-1]
    for k in range(len(p) - 2, -1, -1):
        q[k] = acc
        acc = p[k] + acc * y
    return q


# ---------------------------------------------------------------------------
# vector fields
# ---------------------------------------------------------------------------

def km_rhs(a):
    n = len(a)
    return [a[i] * (a[(i - 1) % n] - a[(i + 1) % n]) for i in range(n)]


def _toda_rhs(state, n, index):
    """[L, (L^i)_+] in float arithmetic; h-graded matrices as dicts."""
    a, b = state[:n], state[n:]

    def zeros():
        return [[0.0] * n for _ in range(n)]

    L = {0: zeros(), 1: zeros(), -1: zeros()}
    for i in range(n):
        L[0][i][i] = b[i]
        if i + 1 < n:
            L[0][i][i + 1] = a[i]
            L[0][i + 1][i] = 1.0
    L[-1][0][n - 1] = 1.0
    L[1][n - 1][0] = a[n - 1]

    def hmul(A, B):
        out = {}
        for ka, MA in A.items():
            for kb, MB in B.items():
                k = ka + kb
                tgt = out.setdefault(k, zeros())
                for i in range(n):
                    rowA = MA[i]
                    for l in range(n):
                        if rowA[l] == 0.0:
                            continue
                        rowB = MB[l]
                        trow = tgt[i]
                        for j in range(n):
                            trow[j] += rowA[l] * rowB[j]
        return out

    P = dict(L)
    for _ in range(index - 1):
        P = hmul(P, L)
    plus = {}
    for k, M in P.items():
        if k > 0:
            plus[k] = [row[:] for row in M]
        elif k == 0:
            keep = zeros()
            for i in range(n):
                for j in range(i + 1, n):
                    keep[i][j] = M[i][j]
            plus[k] = keep
    C = hmul(L, plus)
    D = hmul(plus, L)
    comm = {}
    for k in set(C) | set(D):
        comm[k] = [[C.get(k, zeros())[i][j] - D.get(k, zeros())[i][j]
                    for j in range(n)] for i in range(n)]
    da = [comm.get(0, zeros())[i][i + 1] for i in range(n - 1)]
    da.append(comm.get(1, zeros())[n - 1][0])
    db = [comm.get(0, zeros())[i][i] for i in range(n)]
    return da + db


def _mumford_rhs(state, flavor, g, y):
    u, v, w = _decode_triple(state, flavor, g)
    uy, vy, wy = _feval(u, y), _feval(v, y), _feval(w, y)
    if flavor == "even-mumford":
        alpha = [y + w[-2] - u[-2], 1.0]  # alpha(x+y), x-ascending
    else:
        alpha = [1.0]
    du = _fscale(_fdeflate(_fsub(_fscale(u, vy), _fscale(v, uy)), y), 2.0)
    dv = _fsub(_fdeflate(_fsub(_fscale(w, uy), _fscale(u, wy)), y),
               _fscale(_fmul(alpha, u), uy))
    dw = _fadd(_fscale(_fdeflate(_fsub(_fscale(v, wy), _fscale(w, vy)), y), 2.0),
               _fscale(_fmul(alpha, v), 2.0 * uy))
    return _encode_tangent(du, dv, dw, flavor, g)


def _prym_rhs(state, flavor, n, y):
    u, v, w = _decode_triple(state, flavor, n)
    uy, vy, wy = _feval(u, y), _feval(v, y), _feval(w, y)
    xv, xu, xw = [0.0] + v, [0.0] + u, [0.0] + w

    def div2(p):
        return _fdeflate(_fdeflate(p, y), -y)

    du = _fscale(div2(_fsub(_fscale(u, y * vy), _fscale(xv, uy))), 2.0)
    dv = _fsub(div2(_fsub(_fscale(xw, uy), _fscale(xu, wy))), _fscale(xu, uy))
    dw = _fadd(_fscale(div2(_fsub(_fscale(xv, wy), _fscale(w, y * vy))), 2.0),
               _fscale(xv, 2.0 * uy))
    return _encode_tangent(du, dv, dw, flavor, n)


def _decode_triple(state, flavor, g):
    u_slots, v_slots, w_slots = _coord_layout(flavor, g)
    deg_u, deg_w = _poly_degree(flavor, g)
    u = [0.0] * (deg_u + 1)
    v = [0.0] * deg_u
    w = [0.0] * (deg_w + 1)
    vals = list(state)
    for k in u_slots:
        u[k] = vals.pop(0)
    u[deg_u] = 1.0
    for k in v_slots:
        v[k] = vals.pop(0)
    for k in w_slots:
        w[k] = vals.pop(0)
    w[deg_w] = 1.0
    return u, v, w


def _encode_tangent(du, dv, dw, flavor, g):
    u_slots, v_slots, w_slots = _coord_layout(flavor, g)
    pick = lambda p, k: p[k] if k < len(p) else 0.0
    return ([pick(du, k) for k in u_slots] + [pick(dv, k) for k in v_slots]
            + [pick(dw, k) for k in w_slots])


# ---------------------------------------------------------------------------
# conserved quantities
# ---------------------------------------------------------------------------

def _char_coeffs_float(a, b):
    """Coefficients of K(x) = 2(Delta - a_n Delta_{1,n}) in floats, via the
    same three-term minor recursion as the exact route."""
    n = len(a)

    def block(lo, hi):  # determinant on 1-based indices lo..hi
        prev2, prev = [1.0], [1.0]
        for k in range(lo, hi + 1):
            cur = _fmul([-b[k - 1], 1.0], prev)
            if k > lo:
                cur = _fsub(cur, _fscale(prev2, a[k - 2]))
            prev2, prev = prev, cur
        return prev

    delta = block(1, n)
    d1n = block(2, n - 1)
    full = _fsub(delta, _fscale(d1n, a[n - 1]))
    out = _fscale(full, 2.0)
    return out + [0.0] * (n + 1 - len(out))


def _lattice_invariants(state, n, km=False):
    a = state[:n]
    b = [0.0] * n if km else state[n:]
    coeffs = _char_coeffs_float(a, b)
    out = {}
    for j in range(n):
        out[f"K{j}"] = coeffs[j]
    prod = 1.0
    for x in a:
        prod *= x
    out["prod_a"] = prod
    if km and n == 5:
        out["K"] = sum(a)
        out["L"] = (a[0] * a[2] + a[1] * a[3] + a[2] * a[4]
                    + a[3] * a[0] + a[4] * a[1])
    if km and n % 2 == 0:
        p_odd = p_even = 1.0
        for x in a[0::2]:
            p_odd *= x
        for x in a[1::2]:
            p_even *= x
        out["P_odd"] = p_odd
        out["P_even"] = p_even
    return out


def _momentum_invariants(state, flavor, g):
    u, v, w = _decode_triple(state, flavor, g)
    H = _fadd(_fmul(u, w), _fmul(v, v))
    return {f"H{j}": c for j, c in enumerate(H)}


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

def integrate(system: str, point, selector, t_end: float, step: float) -> Trajectory:
    """Integrate a named flow with the classical fourth-order method.

    system: "km" (basic Volterra field; selector ignored), "toda"
    (selector = hierarchy index), "mumford" or "prym" (selector = the Lax
    parameter y).  Conserved quantities are sampled at every step and the
    drift against t = 0 is reported per integral.
    """
    if step <= 0 or t_end <= 0:
        raise InvariantError("integration", "step and t_end must be positive")
    if system == "km":
        if not isinstance(point, KMPoint):
            point = KMPoint(tuple(point))
        n = point.n
        state = [float(x) for x in point.a]
        rhs = km_rhs
        invariants = lambda s: _lattice_invariants(s, n, km=True)
    elif system == "toda":
        if not isinstance(point, TodaPoint):
            raise InvariantError("point-type", "toda integration needs a TodaPoint")
        n = point.n
        index = int(selector)
        state = [float(x) for x in point.a] + [float(x) for x in point.b]
        rhs = lambda s: _toda_rhs(s, n, index)
        invariants = lambda s: _lattice_invariants(s, n)
    elif system in ("mumford", "prym"):
        if not isinstance(point, MumfordTriple):
            raise InvariantError("point-type", "flow needs a MumfordTriple")
        flavor = point.flavor
        g = point.g if flavor in MUMFORD_FLAVORS else point.prym_index
        y = float(selector)
        state = [float(x) for x in point_values(point)]
        if system == "prym":
            if flavor not in ("odd-prym", "even-prym"):
                raise InvariantError("flavor", "prym integration needs a prym point")
            rhs = lambda s: _prym_rhs(s, flavor, g, y)
        else:
            if flavor not in MUMFORD_FLAVORS:
                raise InvariantError(
                    "flavor", "the ambient flow is not tangent to the parity"
                    " locus; use system='prym' for prym points")
            rhs = lambda s: _mumford_rhs(s, flavor, g, y)
        invariants = lambda s: _momentum_invariants(s, flavor, g)
    else:
        raise InvariantError("system", f"unknown system {system!r}")

    traj = Trajectory(system=system)
    base = invariants(state)
    names = list(base)
    traj.conserved = {k: [base[k]] for k in names}
    traj.drift = {k: 0.0 for k in names}
    traj.times.append(0.0)
    traj.states.append(list(state))
    nsteps = int(round(t_end / step))
    for i in range(1, nsteps + 1):
        state = _rk4_step(rhs, state, step)
        if any(abs(x) > BLOWUP_GUARD for x in state):
            traj.truncated = True
            traj.note = f"state exceeded overflow guard at step {i}"
            break
        traj.times.append(i * step)
        traj.states.append(list(state))
        vals = invariants(state)
        for k in names:
            traj.conserved[k].append(vals[k])
            d = abs(vals[k] - base[k])
            if d > traj.drift[k]:
                traj.drift[k] = d
    return traj
