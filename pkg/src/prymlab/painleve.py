"""Painleve analysis of the periodic Volterra field
da_i/dt = a_i (a_{i-1} - a_{i+1}), indices in Z/n.

Pole ansatz: a_i(t) = t^{-1} sum_{j>=0} a_i^(j) t^j (poles are at most
simple).  The leading coefficients alpha_i = a_i^(0) obey the indicial
equation -alpha_i = alpha_i (alpha_{i-1} - alpha_{i+1}); its solutions are
indexed by the set

    Sigma_n = { A subset Z/n : every maximal cyclic run of A has even length }

via: on a run of length 2l the leading coefficients are the unique pattern
(-l, 1, 1-l, 2, ..., -1, l), zero off A.  The full circle A = Z/n (even n)
belongs to Sigma_n but supports no Laurent solution (the all-poles linear
system is inconsistent), so indicial_solutions excludes it while
sigma_enum keeps it.  Pole orders are r_i = alpha_{i+1} - alpha_{i-1}.

Higher coefficients solve (M - k I) a^(k) = (lower-order data), where M is
the Kowalevski matrix  M_ij = dF_i/da_j(alpha) + delta_ij:

    M_ij = (1 - r_i) delta_ij                  if alpha_i = 0,
    M_ij = alpha_i (delta_{j,i-1} - delta_{j,i+1})   otherwise.

After rotating a run to the front, M is block upper triangular with
tridiagonal blocks C_i of size 2 l_i on the runs (eigenvalues
+-1..+-l_i, via the Vandermonde-type basis f_j = [1^{j-1},...,l^{j-1}])
and diagonal blocks on the gaps with entries 1 - r_j; hence the spectrum
is integral and the count of non-negative eigenvalues is n - #A/2, the
number of free parameters of the Laurent family.  Free parameters enter
the recursion exactly at the non-pivot columns of M - k I and are
addressed by slot names "a<i>.<k>".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import LaurentSeries, format_rational
from .errors import InvariantError, ResonanceError
from .symbolic import solve_affine

# ---------------------------------------------------------------------------
# Sigma_n combinatorics
# ---------------------------------------------------------------------------

def cyclic_runs(A: Iterable[int], n: int) -> list[list[int]]:
    """Maximal runs of consecutive elements of A in Z/n (1-based cells).

    The full circle comes back as a single run [1..n]."""
    cells = sorted({(i - 1) % n + 1 for i in A})
    if not cells:
        return []
    if len(cells) == n:
        return [list(range(1, n + 1))]
    present = set(cells)
    runs = []
    for c in cells:
        if (c - 2) % n + 1 in present:
            continue  # not a run start
        run = [c]
        while (run[-1] % n) + 1 in present:
            run.append((run[-1] % n) + 1)
        runs.append(run)
    return runs


def in_sigma(A: Iterable[int], n: int) -> bool:
    return all(len(run) % 2 == 0 for run in cyclic_runs(A, n))


def sigma_enum_brute(n: int) -> list[tuple[int, ...]]:
    """Filter all 2^n subsets; the test oracle route."""
    out = []
    for mask in range(1 << n):
        subset = tuple(i + 1 for i in range(n) if mask >> i & 1)
        if in_sigma(subset, n):
            out.append(subset)
    return sorted(out, key=lambda s: (len(s), s))


def _even_run_line_subsets(m: int) -> list[tuple[int, ...]]:
    """Subsets of the line 1..m whose maximal runs all have even length."""
    memo: dict[int, list[tuple[int, ...]]] = {}

    def gen(k: int) -> list[tuple[int, ...]]:
        if k <= 0:
            return [()]
        if k in memo:
            return memo[k]
        out = list(gen(k - 1))  # cell k empty
        for l in range(2, k, 2):  # run k-l+1..k, gap at k-l
            tail = tuple(range(k - l + 1, k + 1))
            out.extend(s + tail for s in gen(k - l - 1))
        if k % 2 == 0:
            out.append(tuple(range(1, k + 1)))  # run covers the whole line
        memo[k] = out
        return out

    return gen(m)


def sigma_enum(n: int) -> list[tuple[int, ...]]:
    """All of Sigma_n, built constructively from even-run placements.

    Proper nonempty subsets are enumerated once each by the position g of
    their largest missing cell: cells g+1..n all belong to A (possibly
    wrapping into a head 1..j), and the rest of A lives on the line
    strictly between the wrap run and g.
    """
    if n < 2:
        raise InvariantError("size", "Sigma_n needs n >= 2")
    out: list[tuple[int, ...]] = [()]
    if n % 2 == 0:
        out.append(tuple(range(1, n + 1)))
    # g = n: no wrap; nonempty even-run subsets of the line 1..n-1
    out.extend(s for s in _even_run_line_subsets(n - 1) if s)
    # g < n: wrap run (g+1..n) + (1..j), gap at j+1 <= g, middle on j+2..g-1
    for g in range(1, n):
        tail = tuple(range(g + 1, n + 1))
        for j in range(0, g):
            if (n - g + j) % 2:
                continue
            head = tuple(range(1, j + 1))
            mid_len = g - j - 2
            for s in _even_run_line_subsets(mid_len) if mid_len > 0 else [()]:
                shifted = tuple(c + j + 1 for c in s)
                out.append(tuple(sorted(head + shifted + tail)))
    return sorted(set(out), key=lambda s: (len(s), s))


# ---------------------------------------------------------------------------
# indicial solutions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Balance:
    """One solution of the indicial equation: pole set A, leading
    coefficients alpha and pole orders r (r_i > 0 pole, < 0 zero)."""

    n: int
    A: tuple
    alpha: tuple
    r: tuple

    @property
    def order(self) -> int:
        return len(self.A) // 2

    def to_json(self) -> dict:
        return {"n": self.n, "A": list(self.A),
                "alpha": [format_rational(x) for x in self.alpha],
                "r": list(self.r)}


def _alpha_for(A: Sequence[int], n: int) -> list[Fraction]:
    alpha = [Fraction(0)] * (n + 1)  # 1-based
    for run in cyclic_runs(A, n):
        if len(run) % 2:
            raise InvariantError("sigma", f"run {run} has odd length")
        l = len(run) // 2
        for pos, cell in enumerate(run, start=1):
            alpha[cell] = Fraction((pos - 1) // 2 - l if pos % 2 else pos // 2)
    return alpha[1:]


def make_balance(n: int, A: Iterable[int]) -> Balance:
    """Balance for an admissible pole set; validates the indicial equation."""
    A = tuple(sorted({(i - 1) % n + 1 for i in A}))
    if not in_sigma(A, n):
        raise InvariantError("sigma", f"{A} is not in Sigma_{n}")
    if len(A) == n:
        raise InvariantError("all-poles",
                             "the all-poles set supports no Laurent solution")
    alpha = _alpha_for(A, n)
    for i in range(n):
        lhs = -alpha[i]
        rhs = alpha[i] * (alpha[(i - 1) % n] - alpha[(i + 1) % n])
        if lhs != rhs and alpha[i] != 0:
            raise InvariantError("indicial", f"alpha fails the indicial equation at {i + 1}")
    r = tuple(int(alpha[i % n] - alpha[(i - 2) % n]) for i in range(1, n + 1))
    return Balance(n, A, tuple(alpha), r)


def indicial_solutions(n: int) -> list[Balance]:
    """One balance per admissible A in Sigma_n (the full circle excluded)."""
    if n < 3:
        raise InvariantError("size", "indicial analysis needs n >= 3")
    out = []
    for A in sigma_enum(n):
        if len(A) == n:
            continue
        out.append(make_balance(n, A))
    return out


# ---------------------------------------------------------------------------
# Kowalevski matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KowalevskiReport:
    n: int
    A: tuple
    alpha: tuple            # leading coefficients of the balance
    r: tuple                # pole orders
    matrix: tuple           # exact entries, natural indexing
    run_cells: tuple        # the C_i blocks, as cell lists
    gap_entries: tuple      # diagonal entries 1 - r_j on the gap cells
    spectrum: tuple         # sorted integer eigenvalues with multiplicity
    nonneg_count: int

    def to_json(self) -> dict:
        return {"n": self.n, "A": list(self.A),
                "alpha": [format_rational(x) for x in self.alpha],
                "r": list(self.r),
                "spectrum": list(self.spectrum),
                "nonneg_count": self.nonneg_count,
                "runs": [list(r) for r in self.run_cells],
                "gap_entries": list(self.gap_entries)}


def kowalevski_matrix(balance: Balance) -> list[list[Fraction]]:
    n = balance.n
    alpha = balance.alpha
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if alpha[i] == 0:
            M[i][i] = 1 - balance.r[i]
        else:
            M[i][(i - 1) % n] = alpha[i]
            M[i][(i + 1) % n] = -alpha[i]
    return M


def kowalevski(n: int, A: Iterable[int]) -> KowalevskiReport:
    """Exact structural spectrum of the Kowalevski matrix of a balance.

    The spectrum is read off the block decomposition: each run of order l
    contributes {-l..-1, 1..l}, each gap cell j contributes 1 - r_j; the
    non-negative count is therefore n - ord A.
    """
    balance = make_balance(n, A)
    M = kowalevski_matrix(balance)
    runs = cyclic_runs(balance.A, n)
    spectrum: list[int] = []
    for run in runs:
        l = len(run) // 2
        spectrum.extend(range(-l, 0))
        spectrum.extend(range(1, l + 1))
    gap_entries = []
    in_A = set(balance.A)
    for j in range(1, n + 1):
        if j not in in_A:
            entry = 1 - balance.r[j - 1]
            gap_entries.append(entry)
            spectrum.append(entry)
    spectrum.sort()
    nonneg = sum(1 for e in spectrum if e >= 0)
    return KowalevskiReport(n, balance.A, balance.alpha, balance.r,
                            tuple(tuple(row) for row in M),
                            tuple(tuple(r) for r in runs), tuple(gap_entries),
                            tuple(spectrum), nonneg)


def c_block(l: int) -> list[list[Fraction]]:
    """The 2l x 2l run block in its own indices (alpha pattern on one run)."""
    balance = make_balance(2 * l + 1, range(1, 2 * l + 1))
    M = kowalevski_matrix(balance)
    return [row[:2 * l] for row in M[:2 * l]]


def c_block_triangularization(l: int) -> list[list[Fraction]]:
    """Exact check data for the run-block spectrum: expresses the odd/even
    interleaved half-block operator in the basis f_j = [1^{j-1},..,l^{j-1}];
    returns that matrix, which must be upper triangular with diagonal
    1, -2, 3, ..., (-1)^{l-1} l."""
    C = c_block(l)
    odd = [2 * k for k in range(l)]           # e_1, e_3, ... (0-based rows)
    even = [2 * l - 1 - 2 * k for k in range(l)]  # e_{2l}, e_{2l-2}, ...
    # in the reordered basis C = [[0, A], [A, 0]] with A the transpose of
    # the operator Lambda that the f-basis triangularizes
    Amat = [[C[r][c] for c in even] for r in odd]
    Lam = [[Amat[j][i] for j in range(l)] for i in range(l)]
    # pass to the f-basis: solve F X = Lambda F where F columns are f_j
    F = [[Fraction(k + 1) ** j for j in range(l)] for k in range(l)]
    AF = [[sum(Lam[r][k] * F[k][j] for k in range(l)) for j in range(l)]
          for r in range(l)]
    X = []
    for j in range(l):
        sol = solve_affine(F, [AF[r][j] for r in range(l)])
        if not sol.consistent or sol.kernel_basis:
            raise InvariantError("c-block", "f-basis is not a basis")
        X.append(sol.particular)
    return [[X[j][i] for j in range(l)] for i in range(l)]


# ---------------------------------------------------------------------------
# Laurent solutions
# ---------------------------------------------------------------------------

def slot_name(i: int, k: int) -> str:
    return f"a{i}.{k}"


def free_slots(n: int, balance: Balance, through_order: int) -> list[str]:
    """Names of the free coefficients the recursion leaves open, in order."""
    M = kowalevski_matrix(balance)
    names = []
    for k in range(1, through_order + 1):
        system = [[(k if i == j else 0) - M[i][j] for j in range(n)] for i in range(n)]
        sol = solve_affine(system, [Fraction(0)] * n)
        names.extend(slot_name(c + 1, k) for c in sol.free_columns)
    return names


def laurent_balance(n: int, balance: Balance, free_params: dict,
                    order: int) -> list[LaurentSeries]:
    """Laurent solution attached to a balance, coefficients through t^(order-1).

    free_params maps slot names "a<i>.<k>" to exact rationals, one per
    non-pivot column of M - k I; supplying the wrong set of slots raises,
    as does an inconsistent resonance.  The returned series satisfy the
    Volterra equations exactly through their validity window.
    """
    if balance.n != n:
        raise InvariantError("size", "balance does not match n")
    params = {k: Fraction(v) for k, v in free_params.items()}
    M = kowalevski_matrix(balance)
    coeffs = [list(balance.alpha)]  # a^(0) = alpha
    for k in range(1, order + 1):
        rhs = []
        for i in range(n):
            acc = Fraction(0)
            for j in range(1, k):
                acc += coeffs[j][i] * (coeffs[k - j][(i - 1) % n]
                                       - coeffs[k - j][(i + 1) % n])
            rhs.append(acc)
        system = [[(k if i == j else Fraction(0)) - M[i][j] for j in range(n)]
                  for i in range(n)]
        sol = solve_affine(system, rhs)
        if not sol.consistent:
            raise ResonanceError(f"inconsistent resonance at order k={k}")
        vec = list(sol.particular)
        for basis_vec, col in zip(sol.kernel_basis, sol.free_columns):
            name = slot_name(col + 1, k)
            if name not in params:
                expected = free_slots(n, balance, order)
                raise InvariantError(
                    "free-parameters",
                    f"missing value for free slot {name}; expected slots {expected}")
            value = params.pop(name)
            vec = [x + value * y for x, y in zip(vec, basis_vec)]
        coeffs.append(vec)
    if params:
        raise InvariantError("free-parameters",
                             f"unused parameters {sorted(params)}")
    return [LaurentSeries(-1, [coeffs[k][i] for k in range(order + 1)],
                          hi=order - 1)
            for i in range(n)]


def km_residual(series: list[LaurentSeries]) -> list[LaurentSeries]:
    """da_i/dt - a_i (a_{i-1} - a_{i+1}) for a candidate solution."""
    n = len(series)
    return [series[i].derivative()
            - series[i] * (series[(i - 1) % n] - series[(i + 1) % n])
            for i in range(n)]
