"""Exact linear algebra over the rationals.

Dense Gaussian elimination for the small solve/nullspace systems that
come up when validating coset setups, plus an incremental sparse echelon
form keyed by arbitrary hashable column labels (used for rank and span
computations over spaces indexed by exponent vectors). Everything is
Fraction-exact; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

Vec = list[Fraction]
Mat = list[list[Fraction]]


def fr(x) -> Fraction:
    """Coerce to Fraction, rejecting floats (exactness is a hard requirement)."""
    if isinstance(x, float):
        raise TypeError("float coefficients are not allowed; use Fraction or 'p/q' strings")
    return Fraction(x)


def vec(entries: Iterable) -> Vec:
    return [fr(e) for e in entries]


def zeros(n: int) -> Vec:
    return [Fraction(0)] * n


def unit(n: int, i: int) -> Vec:
    v = zeros(n)
    v[i] = Fraction(1)
    return v


def add_scaled(u: Sequence[Fraction], v: Sequence[Fraction], c: Fraction) -> Vec:
    return [a + c * b for a, b in zip(u, v)]


def scale(u: Sequence[Fraction], c: Fraction) -> Vec:
    return [c * a for a in u]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def matvec(a: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vec:
    return [dot(row, x) for row in a]


def matmul(a: Mat, b: Mat) -> Mat:
    cols = list(zip(*b))
    return [[dot(row, col) for col in cols] for row in a]


def identity(n: int) -> Mat:
    return [unit(n, i) for i in range(n)]


def transpose(a: Mat) -> Mat:
    return [list(row) for row in zip(*a)]


def columns_to_rows(cols: Sequence[Sequence[Fraction]]) -> Mat:
    """Matrix whose j-th column is cols[j], as a row-major list."""
    if not cols:
        return []
    return [list(row) for row in zip(*cols)]


def rref(rows: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form. Returns (R, pivot_columns); zero rows dropped."""
    m = [list(row) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        piv = None
        for i in range(pr, len(m)):
            if m[i][pc] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        inv = Fraction(1) / m[pr][pc]
        m[pr] = [e * inv for e in m[pr]]
        for i in range(len(m)):
            if i != pr and m[i][pc] != 0:
                m[i] = add_scaled(m[i], m[pr], -m[i][pc])
        pivots.append(pc)
        pr += 1
        if pr == len(m):
            break
    return m[:pr], pivots


def rank(rows: Mat) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Mat, ncols: int) -> list[Vec]:
    """Canonical nullspace basis of the row system: one vector per free
    column, with that free variable set to 1 and pivots back-solved."""
    r, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = zeros(ncols)
        v[free] = Fraction(1)
        for row, pc in zip(r, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def invert(a: Mat) -> Mat:
    n = len(a)
    aug = [list(a[i]) + unit(n, i) for i in range(n)]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def solve_columns(cols: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Vec | None:
    """Solve sum_j c_j * cols[j] = target; None if target is outside the span."""
    if not cols:
        return [] if all(t == 0 for t in target) else None
    aug = [list(row) + [t] for row, t in zip(zip(*cols), target)]
    r, pivots = rref(aug)
    k = len(cols)
    if k in pivots:
        return None
    sol = zeros(k)
    for row, pc in zip(r, pivots):
        sol[pc] = row[k]
    return sol


@dataclass
class Infeasibility:
    """Proof that a linear system has no solution: a row combination of the
    original equations whose left side vanishes but whose right side does not."""

    multipliers: Vec
    rhs: Fraction


def solve_affine(a: Mat, b: Vec) -> tuple[Vec | None, Infeasibility | None]:
    """Solve a x = b exactly.

    Returns (x, None) with free variables set to 0 on success, or
    (None, cert) when inconsistent. The certificate multipliers m satisfy
    m . a = 0 and m . b = cert.rhs != 0, so they name an inconsistent
    consequence of the input equations.
    """
    nrows = len(a)
    if nrows == 0:
        return [], None
    ncols = len(a[0])
    # carry the multiplier block so every reduced row stays expressed in
    # terms of the original equations
    work = [list(a[i]) + unit(nrows, i) + [b[i]] for i in range(nrows)]
    pr = 0
    pivots: list[int] = []
    for pc in range(ncols):
        piv = None
        for i in range(pr, nrows):
            if work[i][pc] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[pr], work[piv] = work[piv], work[pr]
        inv = Fraction(1) / work[pr][pc]
        work[pr] = [e * inv for e in work[pr]]
        for i in range(nrows):
            if i != pr and work[i][pc] != 0:
                work[i] = add_scaled(work[i], work[pr], -work[i][pc])
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    for i in range(pr, nrows):
        if work[i][-1] != 0:
            return None, Infeasibility(multipliers=work[i][ncols:-1], rhs=work[i][-1])
    sol = zeros(ncols)
    for row, pc in zip(work[:pr], pivots):
        sol[pc] = row[-1]
    return sol, None


class Echelon:
    """Incremental echelon form over sparse vectors with hashable keys.

    Rows are dicts mapping column labels to nonzero Fractions. The pivot of
    a row is its maximal label under `order_key`, and stored rows are
    normalized to pivot coefficient 1, so rank and membership queries do
    not depend on insertion order.
    """

    def __init__(self, order_key: Callable[[Hashable], object] | None = None):
        self._key = order_key if order_key is not None else lambda c: c
        self._rows: dict[Hashable, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, v: dict) -> dict:
        """Residue of v after elimination against the stored rows."""
        v = {c: x for c, x in v.items() if x != 0}
        while v:
            p = max(v, key=self._key)
            row = self._rows.get(p)
            if row is None:
                return v
            coeff = v[p]
            for c, x in row.items():
                nv = v.get(c, Fraction(0)) - coeff * x
                if nv:
                    v[c] = nv
                else:
                    v.pop(c, None)
        return v

    def add(self, v: dict) -> bool:
        """Insert v; True if it enlarged the span."""
        res = self.reduce(v)
        if not res:
            return False
        p = max(res, key=self._key)
        inv = Fraction(1) / res[p]
        self._rows[p] = {c: x * inv for c, x in res.items()}
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def grlex_key(exps: tuple[int, ...]) -> tuple:
    """Graded-lexicographic sort key for exponent vectors."""
    return (sum(exps), exps)


def span_rank(vectors: Iterable[dict], order_key=None) -> int:
    ech = Echelon(order_key)
    for v in vectors:
        ech.add(v)
    return ech.rank


def spans_equal(us: Sequence[dict], vs: Sequence[dict], order_key=None) -> bool:
    """Exact equality of the spans of two families of sparse vectors."""
    eu = Echelon(order_key)
    for u in us:
        eu.add(u)
    ev = Echelon(order_key)
    for v in vs:
        ev.add(v)
    if eu.rank != ev.rank:
        return False
    return all(eu.contains(v) for v in vs) and all(ev.contains(u) for u in us)
