"""Lie algebras from rational structure constants, subspaces, characters,
and validated coset setups with an adapted (complement-first) basis.

A coset setup fixes a subalgebra h, a complementary subspace m, the
differential of a character on h, and optionally a finite list of
automorphisms standing in for the non-identity components of the subgroup.
All downstream normal-form and reduction machinery works in the adapted
basis: the m-vectors come first, the h-vectors last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .linalg import Mat, Vec, fr


class LieError(ValueError):
    """Base class for structural validation failures."""


class NotASubalgebraError(LieError):
    pass


class NotComplementaryError(LieError):
    pass


class InvalidCharacterError(LieError):
    pass


class InvalidAutomorphismError(LieError):
    pass


class LieAlgebra:
    """A finite-dimensional Lie algebra presented by structure constants.

    Only pairs (i, j) with i < j are stored; antisymmetry holds by
    construction. The Jacobi identity is *not* checked here, see
    `check_structure`.
    """

    def __init__(self, names, brackets):
        names = tuple(str(s) for s in names)
        if len(set(names)) != len(names):
            raise LieError("basis names must be distinct")
        if not names:
            raise LieError("dimension must be positive")
        self.names = names
        n = len(names)
        table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for (i, j), v in brackets.items():
            if not (0 <= i < j < n):
                raise LieError(f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < dim")
            w = tuple(fr(e) for e in v)
            if len(w) != n:
                raise LieError(f"bracket value for ({i}, {j}) has wrong length")
            if any(w):
                table[(i, j)] = w
        self.table = table

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise LieError(f"unknown basis name {name!r}") from None

    def bracket_basis(self, i: int, j: int) -> Vec:
        n = self.dim
        if i == j:
            return linalg.zeros(n)
        if i < j:
            v = self.table.get((i, j))
            return list(v) if v else linalg.zeros(n)
        v = self.table.get((j, i))
        return [-e for e in v] if v else linalg.zeros(n)

    def bracket(self, x, y) -> Vec:
        """[x, y] by bilinear extension of the structure constants."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise LieError("vector length does not match the algebra dimension")
        out = linalg.zeros(n)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0 or i == j:
                    continue
                c = xi * yj
                for k, e in enumerate(self.bracket_basis(i, j)):
                    if e:
                        out[k] += c * e
        return out


@dataclass
class JacobiViolation:
    triple: tuple[str, str, str]
    residual: Vec


@dataclass
class StructureReport:
    violations: list[JacobiViolation]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_structure(alg: LieAlgebra) -> StructureReport:
    """Check the Jacobi identity on every basis triple i < j < k.

    The report lists each violated triple together with the residual
    vector of the cyclic sum; an empty report means the constants present
    a genuine Lie algebra.
    """
    n = alg.dim
    violations = []
    basis = [linalg.unit(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            bij = alg.bracket_basis(i, j)
            for k in range(j + 1, n):
                res = alg.bracket(bij, basis[k])
                res = linalg.add_scaled(res, alg.bracket(alg.bracket_basis(j, k), basis[i]), Fraction(1))
                res = linalg.add_scaled(res, alg.bracket(alg.bracket_basis(k, i), basis[j]), Fraction(1))
                if any(res):
                    violations.append(JacobiViolation((alg.names[i], alg.names[j], alg.names[k]), res))
    return StructureReport(violations)


class Subspace:
    """A subspace of g given by a rational coordinate basis.

    Vectors must be linearly independent. Optional per-vector names feed
    the adapted basis of a coset setup (and the polynomial variables built
    on top of it).
    """

    def __init__(self, algebra: LieAlgebra, vectors, names=None):
        self.algebra = algebra
        n = algebra.dim
        vecs = []
        for v in vectors:
            w = tuple(fr(e) for e in v)
            if len(w) != n:
                raise LieError("subspace vector length does not match the algebra dimension")
            vecs.append(w)
        self.vectors: tuple[tuple[Fraction, ...], ...] = tuple(vecs)
        if vecs and linalg.rank([list(v) for v in vecs]) != len(vecs):
            raise LieError("subspace vectors are linearly dependent")
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != len(vecs):
                raise LieError("number of names does not match number of vectors")
            if len(set(names)) != len(names):
                raise LieError("subspace vector names must be distinct")
        self.names = names

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def coords(self, x) -> Vec | None:
        """Coordinates of x in this basis, or None if x lies outside."""
        return linalg.solve_columns(self.vectors, x)

    def contains(self, x) -> bool:
        return self.coords(x) is not None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.vectors == other.vectors
            and self.names == other.names
        )

    __hash__ = None


@dataclass(frozen=True)
class Character:
    """Differential of a character of the subgroup: one rational value per
    h-basis vector. Must vanish on [h, h]; validated by `make_setup`."""

    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, values) -> "Character":
        return cls(tuple(fr(v) for v in values))

    @classmethod
    def zero(cls, dim: int) -> "Character":
        return cls((Fraction(0),) * dim)


def is_subalgebra(alg: LieAlgebra, s: Subspace) -> bool:
    """True iff [s, s] is contained in s (checked on basis pairs)."""
    for i in range(s.dim):
        for j in range(i + 1, s.dim):
            if not s.contains(alg.bracket(s.vectors[i], s.vectors[j])):
                return False
    return True


def character_kills_commutators(alg: LieAlgebra, h: Subspace, chi: Character) -> bool:
    """True iff chi([X, Y]) = 0 for all h-basis pairs X, Y."""
    for i in range(h.dim):
        for j in range(i + 1, h.dim):
            c = h.coords(alg.bracket(h.vectors[i], h.vectors[j]))
            if c is None:
                return False  # not even a subalgebra
            if linalg.dot(chi.values, c) != 0:
                return False
    return True


def _is_automorphism(alg: LieAlgebra, a: Mat) -> bool:
    n = alg.dim
    cols = [linalg.matvec(a, linalg.unit(n, j)) for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = linalg.matvec(a, alg.bracket_basis(i, j))
            rhs = alg.bracket(cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


class CosetSetup:
    """A validated coset-space presentation: g = m + h with named adapted
    basis (m first, h last), a character differential on h, and component
    representative automorphisms for a disconnected subgroup.

    Immutable after construction; the normal-form caches hung off it are
    write-once. Build through `make_setup`.
    """

    def __init__(self, algebra, h, m, chi, component_reps, adapted_names, name=None):
        self.algebra = algebra
        self.h = h
        self.m = m
        self.chi = chi
        self.component_reps = component_reps
        self.name = name
        self.r = m.dim
        self.n = algebra.dim
        self.adapted_names = adapted_names
        self.adapted_vectors = tuple(m.vectors) + tuple(h.vectors)
        cols = linalg.columns_to_rows(self.adapted_vectors)
        self._from_adapted_mat = cols
        self._to_adapted_mat = linalg.invert(cols)
        self.g_frame = Subspace(algebra, self.adapted_vectors, adapted_names)
        self.m_frame = Subspace(algebra, m.vectors, adapted_names[: self.r])
        self._adapted_table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        # caches shared by the enveloping-algebra layer; all writers
        # compute identical values, so last-write-equivalence holds
        self._word_cache: dict = {}
        self._sym_cache: dict = {}

    def to_adapted(self, x) -> Vec:
        """Coordinates of a g-vector in the adapted basis."""
        if len(x) != self.n:
            raise LieError("vector length does not match the algebra dimension")
        return linalg.matvec(self._to_adapted_mat, [fr(e) for e in x])

    def from_adapted(self, c) -> Vec:
        return linalg.matvec(self._from_adapted_mat, [fr(e) for e in c])

    def adapted_bracket(self, i: int, j: int) -> tuple[Fraction, ...]:
        """[v_i, v_j] of adapted basis vectors, in adapted coordinates."""
        if i == j:
            return (Fraction(0),) * self.n
        if i > j:
            return tuple(-e for e in self.adapted_bracket(j, i))
        got = self._adapted_table.get((i, j))
        if got is None:
            b = self.algebra.bracket(self.adapted_vectors[i], self.adapted_vectors[j])
            got = tuple(self.to_adapted(b))
            self._adapted_table[(i, j)] = got
        return got

    def chi_adapted(self, j: int) -> Fraction:
        """Character value of the adapted basis vector j (must be an h slot)."""
        if j < self.r:
            raise LieError("adapted index lies in the complement, not in h")
        return self.chi.values[j - self.r]

    def complement_part(self, x) -> Vec:
        """m-coordinates of the m-component of x in g = m + h."""
        return self.to_adapted(x)[: self.r]

    def h_part(self, x) -> Vec:
        return self.to_adapted(x)[self.r :]

    def embed_complement(self, xm) -> Vec:
        """g-coordinates of an m-coordinate vector."""
        if len(xm) != self.r:
            raise LieError("m-coordinate vector has wrong length")
        return self.from_adapted(list(xm) + [Fraction(0)] * (self.n - self.r))


def _auto_names(alg: LieAlgebra, sub: Subspace, prefix: str, taken: set[str]) -> tuple[str, ...]:
    n = alg.dim
    std = {tuple(linalg.unit(n, i)): alg.names[i] for i in range(n)}
    out = []
    for k, v in enumerate(sub.vectors):
        name = std.get(tuple(v))
        if name is None or name in taken:
            name = f"{prefix}{k + 1}"
            while name in taken:
                name += "_"
        out.append(name)
        taken.add(name)
    return tuple(out)


def auto_complement(alg: LieAlgebra, h: Subspace) -> Subspace:
    """Complement of h spanned by standard basis vectors, chosen by greedy
    column pivoting. Makes no invariance promise."""
    ech = linalg.Echelon()
    for v in h.vectors:
        ech.add({i: e for i, e in enumerate(v) if e})
    picked = []
    for j in range(alg.dim):
        if ech.add({j: Fraction(1)}):
            picked.append(j)
    return Subspace(alg, [linalg.unit(alg.dim, j) for j in picked],
                    names=[alg.names[j] for j in picked])


def make_setup(alg, h, m=None, chi=None, component_reps=(), name=None) -> CosetSetup:
    """Validate and assemble a coset setup.

    h must be a subalgebra; m, when given, a complement of h; chi must
    vanish on [h, h]; every component representative must be a bracket
    automorphism of g mapping h into h and fixing chi. When m is omitted a
    complement is picked by column pivoting over the standard basis.
    """
    if not is_subalgebra(alg, h):
        raise NotASubalgebraError("h is not closed under the bracket")
    if m is None:
        m = auto_complement(alg, h)
    if m.dim + h.dim != alg.dim:
        raise NotComplementaryError(
            f"dim m + dim h = {m.dim} + {h.dim} != {alg.dim} = dim g")
    concat = [list(v) for v in m.vectors] + [list(v) for v in h.vectors]
    if linalg.rank(concat) != alg.dim:
        raise NotComplementaryError("m and h overlap; their union does not span g")
    if chi is None:
        chi = Character.zero(h.dim)
    elif not isinstance(chi, Character):
        chi = Character.of(chi)
    if len(chi.values) != h.dim:
        raise InvalidCharacterError("character length does not match dim h")
    if not character_kills_commutators(alg, h, chi):
        raise InvalidCharacterError("character does not vanish on [h, h]")

    reps = []
    for k, a in enumerate(component_reps):
        a = [[fr(e) for e in row] for row in a]
        if len(a) != alg.dim or any(len(row) != alg.dim for row in a):
            raise InvalidAutomorphismError(f"component rep {k} is not {alg.dim}x{alg.dim}")
        try:
            linalg.invert(a)
        except ValueError:
            raise InvalidAutomorphismError(f"component rep {k} is singular") from None
        if not _is_automorphism(alg, a):
            raise InvalidAutomorphismError(f"component rep {k} does not preserve brackets")
        for i, v in enumerate(h.vectors):
            img = linalg.matvec(a, list(v))
            c = h.coords(img)
            if c is None:
                raise InvalidAutomorphismError(f"component rep {k} does not map h into h")
            if linalg.dot(chi.values, c) != linalg.dot(chi.values, h.coords(list(v))):
                raise InvalidAutomorphismError(f"component rep {k} does not fix the character")
        reps.append(tuple(tuple(row) for row in a))

    taken: set[str] = set()
    m_names = m.names if m.names is not None else _auto_names(alg, m, "m", taken)
    taken.update(m_names)
    h_names = h.names if h.names is not None else _auto_names(alg, h, "h", taken)
    adapted_names = tuple(m_names) + tuple(h_names)
    if len(set(adapted_names)) != len(adapted_names):
        raise LieError("adapted basis names collide between m and h")
    # a reused g-basis name must keep its meaning, else expressions become ambiguous
    std = {nm: linalg.unit(alg.dim, i) for i, nm in enumerate(alg.names)}
    vectors = tuple(m.vectors) + tuple(h.vectors)
    for nm, v in zip(adapted_names, vectors):
        if nm in std and list(v) != std[nm]:
            raise LieError(f"adapted name {nm!r} collides with a different g basis vector")
    return CosetSetup(alg, h, m, chi, tuple(reps), adapted_names, name=name)


def check_character(setup: CosetSetup) -> bool:
    """True iff the setup's character kills all h-basis commutators."""
    return character_kills_commutators(setup.algebra, setup.h, setup.chi)


@dataclass
class ComplementSearch:
    """Outcome of the invariant-complement feasibility test."""

    feasible: bool
    complement: Subspace | None = None
    certificate: str | None = None


def invariant_complement(alg: LieAlgebra, h: Subspace, component_reps=()) -> ComplementSearch:
    """Search for an ad(h)-invariant complement to h in g.

    Looks for a linear section s of the quotient map g -> g/h that
    intertwines the induced h-action (and is preserved by every component
    representative). The image of a feasible section is the invariant
    complement; infeasibility comes with an inconsistent-equation
    certificate. Feasibility is exactly the reductivity of the coset space
    under connected-subgroup-plus-reps semantics.
    """
    n = alg.dim
    s = h.dim
    if s == n:
        return ComplementSearch(True, Subspace(alg, []))
    ech = linalg.Echelon()
    for v in h.vectors:
        ech.add({i: e for i, e in enumerate(v) if e})
    picked = [j for j in range(n) if ech.add({j: Fraction(1)})]
    r = len(picked)
    reps_u = [linalg.unit(n, j) for j in picked]
    hvecs = [list(v) for v in h.vectors]
    if s == 0:
        return ComplementSearch(True, Subspace(alg, reps_u, names=[alg.names[j] for j in picked]))

    basis_mat = linalg.invert(linalg.columns_to_rows(reps_u + hvecs))

    def quotient_coords(x: Vec) -> Vec:
        return linalg.matvec(basis_mat, x)[:r]

    nunk = r * s
    rows: list[Vec] = []
    rhs: Vec = []
    labels: list[str] = []

    def emit(const: Vec, coeff: dict[int, Vec], label: str) -> None:
        # one scalar equation per g-coordinate: coeff(alpha) + const = 0
        for t in range(n):
            row = linalg.zeros(nunk)
            for idx, v in coeff.items():
                row[idx] = v[t]
            if any(row) or const[t] != 0:
                rows.append(row)
                rhs.append(-const[t])
                labels.append(f"{label}, coordinate {alg.names[t]}")

    for a_idx, w in enumerate(hvecs):
        bw = [alg.bracket(w, hv) for hv in hvecs]  # [w, h_l], all in h
        for k in range(r):
            bu = alg.bracket(w, reps_u[k])
            beta = quotient_coords(bu)
            const = list(bu)
            for i in range(r):
                const = linalg.add_scaled(const, reps_u[i], -beta[i])
            coeff: dict[int, Vec] = {}
            for l in range(s):
                cvec = list(bw[l])
                coeff[k * s + l] = cvec
            for i in range(r):
                if beta[i] == 0:
                    continue
                for l in range(s):
                    key = i * s + l
                    add = linalg.scale(hvecs[l], -beta[i])
                    coeff[key] = linalg.add_scaled(coeff[key], add, Fraction(1)) if key in coeff else add
            emit(const, coeff, f"section condition for ad({h.names[a_idx] if h.names else f'h{a_idx + 1}'}) on slot {k + 1}")

    for rep_idx, a in enumerate(component_reps):
        a = [[fr(e) for e in row] for row in a]
        aw = [linalg.matvec(a, hv) for hv in hvecs]
        for k in range(r):
            au = linalg.matvec(a, reps_u[k])
            gamma = quotient_coords(au)
            const = list(au)
            for i in range(r):
                const = linalg.add_scaled(const, reps_u[i], -gamma[i])
            coeff = {}
            for l in range(s):
                coeff[k * s + l] = list(aw[l])
            for i in range(r):
                if gamma[i] == 0:
                    continue
                for l in range(s):
                    key = i * s + l
                    add = linalg.scale(hvecs[l], -gamma[i])
                    coeff[key] = linalg.add_scaled(coeff[key], add, Fraction(1)) if key in coeff else add
            emit(const, coeff, f"stability condition for component rep {rep_idx + 1} on slot {k + 1}")

    sol, cert = linalg.solve_affine(rows, rhs)
    if sol is None:
        parts = [
            f"{m}*[{labels[i]}]"
            for i, m in enumerate(cert.multipliers)
            if m != 0
        ]
        text = ("no invariant complement: combining " + " + ".join(parts)
                + f" forces 0 = {cert.rhs}")
        return ComplementSearch(False, None, text)
    wvecs = []
    for k in range(r):
        v = list(reps_u[k])
        for l in range(s):
            v = linalg.add_scaled(v, hvecs[l], sol[k * s + l])
        wvecs.append(v)
    return ComplementSearch(True, Subspace(alg, wvecs))
