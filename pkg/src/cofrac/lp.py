"""Exact rational simplex for covering LPs.

Solves ``min 1.x  s.t.  A x >= 1, x >= 0`` where every column of ``A`` is
the 0/1 indicator of a vertex set. The optimal basis also yields the dual
packing solution ``y`` (``A^T y <= 1, y >= 0``) with ``1.y == 1.x``.

The engine is a revised primal simplex keeping an explicit, exact inverse
of the ``m x m`` basis. Pricing uses
Bland's rule (smallest eligible variable enters, ties in the ratio test go
to the smallest basic variable), so the method cannot cycle.

Columns can be appended between solves without losing the current basis,
which is what column generation relies on.
"""

from dataclasses import dataclass, field
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"

# variable ids: structural column j -> (0, j); surplus of row i -> (1, i);
# artificial of row i -> (2, i). Tuple order is Bland's order.
STRUCT, SURPLUS, ARTIFICIAL = 0, 1, 2


@dataclass
class CoveringLP:
    num_rows: int
    columns: list = field(default_factory=list)

    def __post_init__(self):
        self.columns = [tuple(sorted(set(c))) for c in self.columns]
        for c in self.columns:
            if any(not 0 <= i < self.num_rows for i in c):
                raise ValueError(f"column {c} references a row outside 0..{self.num_rows - 1}")

    def uncovered_rows(self):
        covered = set()
        for c in self.columns:
            covered.update(c)
        return [i for i in range(self.num_rows) if i not in covered]


@dataclass
class LPSolution:
    status: str
    value: Fraction = None
    primal: dict = field(default_factory=dict)
    dual: list = field(default_factory=list)
    pivots: int = 0
    max_bits: int = 0

    @property
    def primal_weight(self):
        return sum(self.primal.values(), ZERO)

    @property
    def dual_weight(self):
        return sum(self.dual, ZERO)


class RevisedSimplex:
    """Warm-startable solver state for one covering LP.

    The basis inverse is held fraction-free: ``B^-1 = M / D`` with ``M`` an
    integer matrix and ``D > 0`` equal to ``|det B|``. A pivot replaces
    ``D`` by the pivot entry of ``M a`` and updates the other rows with one
    exact integer division by the old ``D`` (the Bareiss identity), so no
    gcd work happens inside the loop.
    """

    def __init__(self, num_rows, columns=()):
        self.m = num_rows
        self.columns = []
        self.pivots = 0
        self.max_bits = 0
        self._singleton = {}
        for c in columns:
            self.add_column(c)
        # start from singleton columns where available, artificials elsewhere
        self.basis = []
        for i in range(self.m):
            j = self._singleton.get(i)
            self.basis.append((STRUCT, j) if j is not None else (ARTIFICIAL, i))
        self.M = [[1 if r == c else 0 for c in range(self.m)] for r in range(self.m)]
        self.D = 1
        self.xb = [1] * self.m  # basic values times D

    def add_column(self, members):
        col = tuple(sorted(set(members)))
        if any(not 0 <= i < self.m for i in col):
            raise ValueError(f"column {col} references a row outside 0..{self.m - 1}")
        self.columns.append(col)
        if len(col) == 1:
            self._singleton.setdefault(col[0], len(self.columns) - 1)
        return len(self.columns) - 1

    # -- linear algebra on the current basis ----------------------------------

    def _ftran(self, var):
        """``D * B^-1 a`` for the column of ``var``."""
        kind, j = var
        if kind == STRUCT:
            rows = self.columns[j]
            return [sum(row[i] for i in rows) for row in self.M]
        if kind == SURPLUS:
            return [-row[j] for row in self.M]
        return [row[j] for row in self.M]

    def _duals(self, phase):
        """Dual vector times ``D``."""
        want = ARTIFICIAL if phase == 1 else STRUCT
        y = [0] * self.m
        for r, var in enumerate(self.basis):
            if var[0] == want:
                row = self.M[r]
                for i in range(self.m):
                    y[i] += row[i]
        return y

    def _entering(self, y, phase):
        """Bland: first nonbasic variable (in id order) with negative reduced cost."""
        basic = set(self.basis)
        cost = self.D if phase == 2 else 0
        for j, col in enumerate(self.columns):
            if sum(y[i] for i in col) > cost and (STRUCT, j) not in basic:
                return (STRUCT, j)
        for i in range(self.m):
            if y[i] < 0 and (SURPLUS, i) not in basic:
                return (SURPLUS, i)
        return None

    def _leaving(self, d):
        """Minimum ratio ``xb[r] / d[r]`` over ``d[r] > 0``; ties to the smallest basic id."""
        best = None
        for r in range(self.m):
            if d[r] > 0:
                if best is None:
                    best = r
                    continue
                lhs = self.xb[r] * d[best]
                rhs = self.xb[best] * d[r]
                if lhs < rhs or (lhs == rhs and self.basis[r] < self.basis[best]):
                    best = r
        return best

    def _pivot(self, r, var, d):
        piv = d[r]
        D = self.D
        M = self.M
        prow = M[r]
        px = self.xb[r]
        for k in range(self.m):
            if k == r:
                continue
            f = d[k]
            row = M[k]
            if f:
                M[k] = [(piv * a - f * b) // D for a, b in zip(row, prow)]
                self.xb[k] = (piv * self.xb[k] - f * px) // D
            elif piv != D:
                M[k] = [(piv * a) // D for a in row]
                self.xb[k] = (piv * self.xb[k]) // D
        self.D = piv
        if piv < 0:
            # only reachable from a degenerate drive-out pivot; keep D positive
            self.M = [[-a for a in row] for row in M]
            self.xb = [-x for x in self.xb]
            self.D = -piv
        self.basis[r] = var
        self.pivots += 1
        bits = piv.bit_length()
        if bits > self.max_bits:
            self.max_bits = bits

    def _run(self, phase):
        while True:
            y = self._duals(phase)
            var = self._entering(y, phase)
            if var is None:
                return y
            d = self._ftran(var)
            r = self._leaving(d)
            if r is None:
                # covering objectives are bounded below by 0
                raise AssertionError("unbounded direction in a covering LP")
            self._pivot(r, var, d)

    def _drive_out_artificials(self):
        for r in range(self.m):
            if self.basis[r][0] != ARTIFICIAL:
                continue
            basic = set(self.basis)
            candidates = [(STRUCT, j) for j in range(len(self.columns))]
            candidates += [(SURPLUS, i) for i in range(self.m)]
            for var in candidates:
                if var in basic:
                    continue
                d = self._ftran(var)
                # the artificial sits at zero, so any nonzero entry is a safe pivot
                if d[r]:
                    self._pivot(r, var, d)
                    break

    def solve(self):
        if any(v[0] == ARTIFICIAL for v in self.basis):
            self._run(1)
            if any(x > 0 for x, v in zip(self.xb, self.basis) if v[0] == ARTIFICIAL):
                return LPSolution(INFEASIBLE, pivots=self.pivots, max_bits=self.max_bits)
            self._drive_out_artificials()
        y = self._run(2)
        D = self.D
        primal = {}
        for x, (kind, j) in zip(self.xb, self.basis):
            if kind == STRUCT and x > 0:
                primal[j] = primal.get(j, ZERO) + Fraction(x, D)
        value = sum(primal.values(), ZERO)
        dual = [Fraction(v, D) for v in y]
        return LPSolution(OPTIMAL, value, dict(sorted(primal.items())), dual, self.pivots, self.max_bits)


def solve_covering(lp):
    """Exact optimum of ``lp`` with primal weights and dual labeling."""
    if lp.uncovered_rows():
        return LPSolution(INFEASIBLE)
    return RevisedSimplex(lp.num_rows, lp.columns).solve()


def check_duality(sol, lp):
    """Primal feasibility, dual feasibility and exact equality of weights."""
    if sol.status != OPTIMAL:
        return False
    if any(x < 0 for x in sol.primal.values()) or any(y < 0 for y in sol.dual):
        return False
    if len(sol.dual) != lp.num_rows:
        return False
    if any(not 0 <= j < len(lp.columns) for j in sol.primal):
        return False
    cover = [ZERO] * lp.num_rows
    for j, x in sol.primal.items():
        for i in lp.columns[j]:
            cover[i] += x
    if any(c < 1 for c in cover):
        return False
    for col in lp.columns:
        if sum((sol.dual[i] for i in col), ZERO) > 1:
            return False
    return sol.primal_weight == sol.dual_weight
