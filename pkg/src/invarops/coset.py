"""Everything modulo the covariance ideal of a coset setup.

The left ideal is generated by {Y + chi(Y) : Y in h}. Because the PBW
order puts the h-variables last, reduction modulo the ideal is a one-pass
strip: a normal monomial ending in h-factors is congruent to its pure
complement part times a product of -chi values. On top of the reduction
sit the stable subalgebra test (operators fixed modulo the ideal by the
connected subgroup action plus component representatives), the degreewise
computation of the invariant polynomial algebra, the direct-sum dimension
checks, the quotient algebra, and the commutativity and generation
checks. Every subgroup-quantified condition is imposed infinitesimally on
the h-basis plus the finitely many component representatives
(connected-H semantics); this is recorded in the reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .lie import CosetSetup
from .linalg import fr
from .pbw import (
    PBWElement,
    ad_commutator,
    group_transform,
    symmetrize,
    u_mul,
)
from .sympoly import (
    SymPoly,
    ad_derivation,
    ad_group,
    complement_poly,
    embed_poly,
    monomial_basis,
)


class NotStableError(ValueError):
    """Raised when a quotient class is requested for an operator that the
    subgroup action does not fix modulo the ideal."""


class GeneratorNotStableError(ValueError):
    pass


def project_mod_ideal(setup: CosetSetup, u: PBWElement) -> PBWElement:
    """Canonical representative of u modulo the left ideal.

    Each trailing h-factor Y strips off against the relation
    u.Y = -chi(Y).u (mod ideal), so a monomial with h-exponents f_j
    collapses to its complement part scaled by prod (-chi_j)^{f_j}.
    Linear, idempotent, and the identity on complement-only input.
    """
    r, n = setup.r, setup.n
    out: dict[tuple[int, ...], Fraction] = {}
    for e, c in u.terms.items():
        scalar = c
        for j in range(r, n):
            if e[j] == 0:
                continue
            chi = -setup.chi_adapted(j)
            if chi == 0:
                scalar = Fraction(0)
                break
            scalar *= chi ** e[j]
        if scalar == 0:
            continue
        key = e[:r] + (0,) * (n - r)
        out[key] = out.get(key, Fraction(0)) + scalar
    return PBWElement(setup, out)


def in_ideal(setup: CosetSetup, u: PBWElement) -> bool:
    """Membership in the left ideal: the canonical representative is zero."""
    return not project_mod_ideal(setup, u).terms


def is_stable(setup: CosetSetup, u: PBWElement, cap: int = 6) -> bool:
    """Membership in the stable subalgebra: the operators whose class
    modulo the ideal is fixed by the subgroup action.

    Checked infinitesimally ([X, u] in the ideal for every h-basis X) plus
    one group-level condition per component representative. Connected-H
    semantics; valid because the ideal is stable under the h-action.
    """
    for x in setup.h.vectors:
        if not in_ideal(setup, ad_commutator(setup, list(x), u)):
            return False
    for a in setup.component_reps:
        if not in_ideal(setup, group_transform(setup, a, u, cap=cap) - u):
            return False
    return True


@dataclass
class InvariantBasis:
    """Echelonized basis of the degree-d invariants in S(m): polynomials
    fixed by the projected subgroup action on the complement."""

    setup: CosetSetup
    degree: int
    polys: list[SymPoly]

    @property
    def dimension(self) -> int:
        return len(self.polys)

    def recheck(self) -> bool:
        """Re-verify the defining conditions on every basis element."""
        return all(_invariance_conditions_hold(self.setup, p) for p in self.polys)


def _invariance_conditions_hold(setup: CosetSetup, p: SymPoly) -> bool:
    emb = embed_poly(setup, p)
    for x in setup.h.vectors:
        if not complement_poly(setup, ad_derivation(list(x), emb)).is_zero():
            return False
    for a in setup.component_reps:
        if complement_poly(setup, ad_group(a, emb)) != p:
            return False
    return True


def invariants_basis(setup: CosetSetup, degree: int) -> InvariantBasis:
    """Solve the homogeneous degree-d invariance conditions on S(m).

    The conditions (projected derivation by each h-basis vector vanishes;
    projected substitution by each component representative fixes the
    polynomial) preserve homogeneous degree, so degreewise solving is
    exact. The basis is the canonical nullspace of the condition matrix
    over the graded-lex monomial list.
    """
    r = setup.r
    monos = monomial_basis(r, degree, "homogeneous")
    ncols = len(monos)
    if ncols == 0:
        return InvariantBasis(setup, degree, [])
    col_of = {e: i for i, e in enumerate(monos)}

    rows: list[list[Fraction]] = []

    def add_condition(images: list[SymPoly], subtract_identity: bool) -> None:
        # one row per target monomial appearing in any image
        targets: dict[tuple[int, ...], list[Fraction]] = {}
        for col, img in enumerate(images):
            terms = dict(img.terms)
            if subtract_identity:
                e = monos[col]
                terms[e] = terms.get(e, Fraction(0)) - 1
            for e, c in terms.items():
                if c == 0:
                    continue
                row = targets.setdefault(e, linalg.zeros(ncols))
                row[col] += c
        for e in sorted(targets, key=linalg.grlex_key, reverse=True):
            rows.append(targets[e])

    for x in setup.h.vectors:
        images = []
        for e in monos:
            mono = SymPoly(setup.m_frame, {e: Fraction(1)})
            images.append(complement_poly(setup, ad_derivation(list(x), embed_poly(setup, mono))))
        add_condition(images, subtract_identity=False)
    for a in setup.component_reps:
        images = []
        for e in monos:
            mono = SymPoly(setup.m_frame, {e: Fraction(1)})
            images.append(complement_poly(setup, ad_group(a, embed_poly(setup, mono))))
        add_condition(images, subtract_identity=True)

    basis = linalg.nullspace(rows, ncols)
    polys = [
        SymPoly(setup.m_frame, {monos[i]: c for i, c in enumerate(v) if c})
        for v in basis
    ]
    return InvariantBasis(setup, degree, polys)


@dataclass
class DirectSumReport:
    """Degreewise dimension check of the filtered decomposition of the
    enveloping algebra into the ideal part and the symmetrized
    complement polynomials."""

    degree: int
    total_dim: int
    ideal_rank: int
    complement_dim: int
    union_rank: int

    @property
    def ok(self) -> bool:
        return (
            self.total_dim == self.ideal_rank + self.complement_dim
            and self.union_rank == self.total_dim
        )


def verify_direct_sum(setup: CosetSetup, degree: int, cap: int = 6) -> DirectSumReport:
    """Check, by exact rank computations in the PBW coordinate space, that
    the filtered piece of the enveloping algebra splits as
    (lower filtration times ideal generators) + (symmetrized S(m)), with
    zero intersection and matching binomial dimensions.
    """
    n, r = setup.n, setup.r
    cap = max(cap, degree)

    total = linalg.Echelon(linalg.grlex_key)
    for e in monomial_basis(n, degree, "upto"):
        p = SymPoly(setup.g_frame, {e: Fraction(1)})
        total.add(dict(symmetrize(setup, p, cap=cap).terms))

    ideal = linalg.Echelon(linalg.grlex_key)
    gens = []
    for j in range(r, n):
        g = PBWElement.generator(setup, j) + setup.chi_adapted(j)
        gens.append(g)
    ideal_vectors = []
    if degree >= 1:
        for e in monomial_basis(n, degree - 1, "upto"):
            lam = symmetrize(setup, SymPoly(setup.g_frame, {e: Fraction(1)}), cap=cap)
            for g in gens:
                v = dict(u_mul(lam, g).terms)
                ideal_vectors.append(v)
                ideal.add(v)

    comp = linalg.Echelon(linalg.grlex_key)
    union = linalg.Echelon(linalg.grlex_key)
    for v in ideal_vectors:
        union.add(v)
    for e in monomial_basis(r, degree, "upto"):
        p = embed_poly(setup, SymPoly(setup.m_frame, {e: Fraction(1)}))
        v = dict(symmetrize(setup, p, cap=cap).terms)
        comp.add(v)
        union.add(v)

    return DirectSumReport(
        degree=degree,
        total_dim=total.rank,
        ideal_rank=ideal.rank,
        complement_dim=comp.rank,
        union_rank=union.rank,
    )


@dataclass
class QuotientClass:
    """Class of a stable operator modulo the ideal, held by its canonical
    complement-monomial representative."""

    setup: CosetSetup
    rep: PBWElement

    def __eq__(self, other):
        if not isinstance(other, QuotientClass):
            return NotImplemented
        return self.setup is other.setup and self.rep == other.rep

    __hash__ = None


def quotient_class(setup: CosetSetup, u: PBWElement, cap: int = 6) -> QuotientClass:
    """Canonical quotient class of u; u must be stable, since the quotient
    is an algebra only on the stable subalgebra."""
    if not is_stable(setup, u, cap=cap):
        raise NotStableError("operator is not fixed modulo the ideal by the subgroup action")
    return QuotientClass(setup, project_mod_ideal(setup, u))


def quotient_mul(a: QuotientClass, b: QuotientClass) -> QuotientClass:
    """Product in the quotient algebra; representative-independent because
    the ideal is two-sided inside the stable subalgebra."""
    if a.setup is not b.setup:
        raise ValueError("classes live over different setups")
    return QuotientClass(a.setup, project_mod_ideal(a.setup, u_mul(a.rep, b.rep)))


def _symmetrized_invariants(setup: CosetSetup, max_degree: int, cap: int = 6):
    """All (degree, polynomial, symmetrized image) triples for the
    invariant bases at degrees 1..max_degree."""
    out = []
    for d in range(1, max_degree + 1):
        for p in invariants_basis(setup, d).polys:
            out.append((d, p, symmetrize(setup, embed_poly(setup, p), cap=max(cap, d))))
    return out


def check_symmetrized_invariants_stable(setup: CosetSetup, max_degree: int, cap: int = 6) -> bool:
    """True iff the symmetrized image of every invariant-basis element of
    degree <= max_degree lies in the stable subalgebra."""
    return all(
        is_stable(setup, lam, cap=max(cap, d))
        for d, _, lam in _symmetrized_invariants(setup, max_degree, cap)
    )


def stable_complement_basis(setup: CosetSetup, degree: int, cap: int = 6) -> list[PBWElement]:
    """Basis of the stable part of the symmetrized complement polynomials
    of degree <= d: solve the linear stability conditions on the span of
    the symmetrized complement monomials."""
    cap = max(cap, degree)
    monos = monomial_basis(setup.r, degree, "upto")
    lams = [
        symmetrize(setup, embed_poly(setup, SymPoly(setup.m_frame, {e: Fraction(1)})), cap=cap)
        for e in monos
    ]
    ncols = len(lams)

    rows: list[list[Fraction]] = []

    def add_rows(images: list[PBWElement]) -> None:
        targets: dict[tuple[int, ...], list[Fraction]] = {}
        for col, img in enumerate(images):
            for e, c in img.terms.items():
                row = targets.setdefault(e, linalg.zeros(ncols))
                row[col] += c
        for e in sorted(targets, key=linalg.grlex_key, reverse=True):
            rows.append(targets[e])

    for x in setup.h.vectors:
        add_rows([project_mod_ideal(setup, ad_commutator(setup, list(x), lam)) for lam in lams])
    for a in setup.component_reps:
        add_rows([
            project_mod_ideal(setup, group_transform(setup, a, lam, cap=cap) - lam)
            for lam in lams
        ])

    basis = linalg.nullspace(rows, ncols)
    out = []
    for v in basis:
        u = PBWElement.zero(setup)
        for i, c in enumerate(v):
            if c:
                u = u + c * lams[i]
        out.append(u)
    return out


def check_stable_span_equality(setup: CosetSetup, max_degree: int, cap: int = 6) -> bool | None:
    """Degree-by-degree equality of two subspaces of the enveloping
    algebra: the span of the symmetrized invariant bases, and the stable
    part of the symmetrized complement polynomials.

    Returns None (not applicable) when the symmetrized invariants fail to
    be stable in the first place, since then the right side is not known
    to contain the left.
    """
    if not check_symmetrized_invariants_stable(setup, max_degree, cap):
        return None
    triples = _symmetrized_invariants(setup, max_degree, cap)
    unit = PBWElement.one(setup)
    for d in range(max_degree + 1):
        lhs = [dict(unit.terms)] + [dict(lam.terms) for e, _, lam in triples if e <= d]
        rhs = [dict(u.terms) for u in stable_complement_basis(setup, d, cap)]
        if not linalg.spans_equal(lhs, rhs, linalg.grlex_key):
            return False
    return True


def check_commutativity(setup: CosetSetup, max_degree: int, cap: int = 6) -> bool:
    """All pairwise commutators of symmetrized invariant-basis elements of
    degree <= max_degree lie in the ideal."""
    lams = [lam for _, _, lam in _symmetrized_invariants(setup, max_degree, cap)]
    for i in range(len(lams)):
        for j in range(i + 1, len(lams)):
            if not in_ideal(setup, u_mul(lams[i], lams[j]) - u_mul(lams[j], lams[i])):
                return False
    return True


def check_generation(setup: CosetSetup, generators, max_degree: int, cap: int = 6) -> bool:
    """Degreewise generation test for the quotient algebra.

    The canonical representatives of all quotient products of the
    generators' symmetrized classes must span, at every degree
    d <= max_degree, the same space as the representatives of the
    symmetrized invariant bases up to d. Generators are polynomials on the
    complement; each symmetrized generator must be stable.
    """
    gens = list(generators)
    classes = []
    degs = []
    for q in gens:
        if q.parent != setup.m_frame:
            raise ValueError("generators must be polynomials over the complement frame")
        if q.is_zero():
            continue
        d = int(q.degree)
        lam = symmetrize(setup, embed_poly(setup, q), cap=max(cap, d))
        if not is_stable(setup, lam, cap=max(cap, d)):
            raise GeneratorNotStableError(
                "a generator's symmetrized image is not stable modulo the ideal")
        classes.append(quotient_class(setup, lam, cap=max(cap, d)))
        degs.append(d)

    unit = QuotientClass(setup, PBWElement.one(setup))
    products: list[tuple[int, PBWElement]] = [(0, unit.rep)]

    def extend(idx: int, current: QuotientClass, nominal: int) -> None:
        if idx == len(classes):
            return
        extend(idx + 1, current, nominal)
        nxt, deg = current, nominal
        while deg + degs[idx] <= max_degree:
            nxt = quotient_mul(nxt, classes[idx])
            deg += degs[idx]
            products.append((deg, nxt.rep))
            extend(idx + 1, nxt, deg)

    extend(0, unit, 0)

    targets: list[tuple[int, PBWElement]] = [(0, unit.rep)]
    for d, _, lam in _symmetrized_invariants(setup, max_degree, cap):
        targets.append((d, project_mod_ideal(setup, lam)))

    for d in range(max_degree + 1):
        lhs = [dict(rep.terms) for nd, rep in products if nd <= d]
        rhs = [dict(rep.terms) for nd, rep in targets if nd <= d]
        if not linalg.spans_equal(lhs, rhs, linalg.grlex_key):
            return False
    return True


def check_laplace_generation(setup: CosetSetup, signature, max_degree: int, cap: int = 6) -> bool:
    """Generation test with the single quadratic generator
    sum_i eps_i x_i^2 built from a signature of +-1 over the complement
    variables (the algebraic shadow of generation by the Laplace-Beltrami
    operator of the corresponding invariant metric)."""
    eps = [fr(e) for e in signature]
    if len(eps) != setup.r:
        raise ValueError(f"signature length {len(eps)} != dim m = {setup.r}")
    if any(e * e != 1 for e in eps):
        raise ValueError("signature entries must be +1 or -1")
    terms = {}
    for i, e in enumerate(eps):
        key = tuple(2 if j == i else 0 for j in range(setup.r))
        terms[key] = e
    q = SymPoly(setup.m_frame, terms)
    return check_generation(setup, [q], max_degree, cap=cap)
