"""Exact rational linear algebra and linear feasibility.

Everything here is exact: scalars are integers or ``fractions.Fraction``,
rank decisions use fraction-free cross-multiplication, and the feasibility
decider is Fourier-Motzkin elimination with strict/weak flags carried
through each elimination step.  There is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import ScaleBoundError

# Entries this large trigger a gcd renormalisation of the row; keeps the
# fraction-free elimination from growing integers without bound.
_GROWTH_LIMIT = 1 << 64


def _as_rows(matrix):
    """Accept a RationalMatrix or any sequence of row sequences."""
    if isinstance(matrix, RationalMatrix):
        return matrix.rows
    return [list(row) for row in matrix]


def _integerize(row):
    """Scale a rational row to integers (rank and span are scale-invariant)."""
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    if denom == 1:
        return [int(x) for x in row]
    return [int(x * denom) for x in row]


class RowSpace:
    """Incrementally built row space with exact elimination.

    Rows are reduced against the stored echelon by cross-multiplication, so
    integer rows stay integer.  ``add`` appends a new pivot row when the rank
    grows and supports ``pop`` for depth-first backtracking; ``express``
    returns exact rational coordinates of a vector over the inserted rows
    when coefficient tracking is enabled.
    """

    def __init__(self, ncols, track_coefficients=False):
        self.ncols = ncols
        self.track = track_coefficients
        self._rows = []
        self._pivots = []
        self._coeffs = []  # row of the pivot vector over the inserted rows
        self._inserted = 0

    @property
    def rank(self):
        return len(self._rows)

    def _reduce(self, row, coeff=None):
        row = list(row)
        for idx, (r, p) in enumerate(zip(self._rows, self._pivots)):
            c = row[p]
            if c:
                a = r[p]
                row = [a * x - c * y for x, y in zip(row, r)]
                if coeff is not None:
                    rc = self._coeffs[idx]
                    coeff = [a * x - c * y for x, y in zip(coeff, rc)]
        big = max((abs(x) for x in row if x), default=0)
        if big > _GROWTH_LIMIT and all(isinstance(x, int) for x in row):
            g = 0
            for x in row:
                g = gcd(g, x)
            if g > 1 and (coeff is None or all(isinstance(x, int) and x % g == 0 for x in coeff)):
                row = [x // g for x in row]
                if coeff is not None:
                    coeff = [x // g for x in coeff]
        return (row, coeff) if coeff is not None else row

    def contains(self, row):
        return not any(self._reduce(row))

    def add(self, row):
        """Insert a row; returns True when it enlarged the span."""
        if self.track:
            coeff = [0] * self._inserted + [1]
            for c in self._coeffs:
                c.append(0)
            self._inserted += 1
            row, coeff = self._reduce(row, coeff)
        else:
            row = self._reduce(row)
        for p, x in enumerate(row):
            if x:
                self._rows.append(row)
                self._pivots.append(p)
                if self.track:
                    self._coeffs.append(coeff)
                return True
        return False

    def pop(self):
        """Drop the most recently added pivot row (for DFS backtracking)."""
        self._rows.pop()
        self._pivots.pop()
        if self.track:
            self._coeffs.pop()

    def express(self, target):
        """Coordinates of ``target`` over the inserted rows, or None.

        Requires coefficient tracking and that every inserted row became a
        pivot (full row rank).
        """
        if not self.track:
            raise ValueError("RowSpace built without coefficient tracking")
        res = list(target)
        out = [Fraction(0)] * self._inserted
        for idx, (r, p) in enumerate(zip(self._rows, self._pivots)):
            c = res[p]
            if c:
                f = Fraction(c) / Fraction(r[p])
                res = [x - f * y for x, y in zip(res, r)]
                rc = self._coeffs[idx]
                out = [x + f * y for x, y in zip(out, rc)]
        if any(res):
            return None
        return tuple(out)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense exact matrix; entries are ints or Fractions, row-major."""

    rows: tuple

    def __init__(self, rows):
        normalized = tuple(tuple(x for x in row) for row in rows)
        if normalized:
            width = len(normalized[0])
            if any(len(r) != width for r in normalized):
                raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", normalized)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def transpose(self):
        return RationalMatrix(list(zip(*self.rows))) if self.rows else RationalMatrix(())

    def rank(self):
        return rank(self)

    def kernel_basis(self):
        return kernel_basis(self)


def rank(matrix):
    """Exact rank via fraction-free elimination."""
    rows = _as_rows(matrix)
    if not rows:
        return 0
    space = RowSpace(len(rows[0]))
    for row in rows:
        space.add(_integerize(row))
    return space.rank


def solve_coordinates(basis_rows, target):
    """Express ``target`` as the unique combination of ``basis_rows``.

    Returns the coefficient tuple, or None when the target is outside the
    span.  Raises ValueError when the given rows are not independent, since
    then no unique expression exists and the caller holds a bug.
    """
    rows = _as_rows(basis_rows)
    if not rows:
        return None if any(target) else ()
    space = RowSpace(len(rows[0]), track_coefficients=True)
    for row in rows:
        if not space.add(row):
            raise ValueError("basis rows are rank-deficient")
    return space.express(target)


def kernel_basis(matrix):
    """Basis of the right null space {x : Mx = 0}, as Fraction tuples."""
    rows = [[Fraction(x) for x in row] for row in _as_rows(matrix)]
    if not rows:
        return []
    ncols = len(rows[0])
    # reduced row echelon form
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, col in enumerate(pivots):
            vec[col] = -rows[i][free]
        basis.append(tuple(vec))
    return basis


@dataclass(frozen=True)
class LinearSystem:
    """Conjunction of exact linear constraints over one variable vector.

    equalities:          row . x == rhs
    weak_inequalities:   row . x >= rhs
    strict_inequalities: row . x >  rhs
    """

    equalities: tuple = field(default=())
    strict_inequalities: tuple = field(default=())
    weak_inequalities: tuple = field(default=())

    def __init__(self, equalities=(), strict_inequalities=(), weak_inequalities=()):
        def norm(constraints):
            return tuple((tuple(Fraction(c) for c in row), Fraction(rhs)) for row, rhs in constraints)

        object.__setattr__(self, "equalities", norm(equalities))
        object.__setattr__(self, "strict_inequalities", norm(strict_inequalities))
        object.__setattr__(self, "weak_inequalities", norm(weak_inequalities))
        widths = {len(row) for row, _ in self.equalities + self.strict_inequalities + self.weak_inequalities}
        if len(widths) > 1:
            raise ValueError("constraints disagree on variable count")

    @property
    def nvars(self):
        for row, _ in self.equalities + self.strict_inequalities + self.weak_inequalities:
            return len(row)
        return 0


def _normalize_ineq(row, rhs, strict):
    """Scale so the first nonzero coefficient is +-1; canonical for dedup."""
    lead = next((c for c in row if c), None)
    if lead is None:
        return row, rhs, strict
    scale = abs(lead)
    if scale != 1:
        row = tuple(c / scale for c in row)
        rhs = rhs / scale
    return row, rhs, strict


def feasible(system, max_variables=24):
    """Exact decision of whether the system has a solution over the rationals.

    Equalities are eliminated first by substitution; the remaining variables
    are eliminated in ascending index order by Fourier-Motzkin, combining a
    lower and an upper bound into a strict inequality whenever either side
    is strict.
    """
    nvars = system.nvars
    if nvars > max_variables:
        raise ScaleBoundError(f"{nvars} variables exceeds the bound of {max_variables}")

    ineqs = [(list(row), rhs, True) for row, rhs in system.strict_inequalities]
    ineqs += [(list(row), rhs, False) for row, rhs in system.weak_inequalities]

    # Reduce the equalities to reduced row echelon form [row | rhs].
    aug = [list(row) + [rhs] for row, rhs in system.equalities]
    pivot_cols = []
    r = 0
    for col in range(nvars):
        pivot_row = next((i for i in range(r, len(aug)) if aug[i][col]), None)
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                c = aug[i][col]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(aug):
            break
    if any(row[-1] for row in aug[r:]):
        return False

    # Substitute each pivot variable out of the inequalities.
    for i, col in enumerate(pivot_cols):
        prow, prhs = aug[i][:-1], aug[i][-1]
        new_ineqs = []
        for row, rhs, strict in ineqs:
            c = row[col]
            if c:
                row = [x - c * y for x, y in zip(row, prow)]
                rhs = rhs - c * prhs
            new_ineqs.append((row, rhs, strict))
        ineqs = new_ineqs

    # Fourier-Motzkin on the remaining variables.
    remaining = [v for v in range(nvars) if v not in set(pivot_cols)]
    for var in remaining:
        lowers, uppers, others = [], [], []
        for row, rhs, strict in ineqs:
            c = row[var]
            if c > 0:
                lowers.append((row, rhs, strict, c))   # x_var >= (rhs - rest)/c
            elif c < 0:
                uppers.append((row, rhs, strict, c))
            else:
                others.append((row, rhs, strict))
        new_ineqs = {}
        for row, rhs, strict in others:
            key = _normalize_ineq(tuple(row), rhs, strict)
            prev = new_ineqs.get(key[:2])
            new_ineqs[key[:2]] = (key[2] or prev) if prev is not None else key[2]
        for lrow, lrhs, lstrict, lc in lowers:
            for urow, urhs, ustrict, uc in uppers:
                # lc > 0 >= uc: combine to eliminate var exactly
                row = [lc * u - uc * l for l, u in zip(lrow, urow)]
                rhs = lc * urhs - uc * lrhs
                row[var] = Fraction(0)
                strict = lstrict or ustrict
                key = _normalize_ineq(tuple(row), rhs, strict)
                prev = new_ineqs.get(key[:2])
                new_ineqs[key[:2]] = (key[2] or prev) if prev is not None else key[2]
        ineqs = []
        for (row, rhs), strict in new_ineqs.items():
            if any(row):
                ineqs.append((list(row), rhs, strict))
            else:
                if rhs > 0 or (strict and rhs == 0):
                    return False
    for row, rhs, strict in ineqs:
        if any(row):
            continue
        if rhs > 0 or (strict and rhs == 0):
            return False
    return True
