"""Sparse commutative polynomials over a named basis of vectors in g.

A polynomial's parent is a `Subspace` whose vectors name the variables:
the full adapted frame of a setup for elements of S(g), the complement
frame for elements of S(m). Exponent vectors are dense tuples keyed in a
dict; graded-lex ordering fixes all rendered and enumerated output.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import linalg
from .lie import CosetSetup, LieAlgebra, Subspace
from .linalg import fr

NEG_INF = float("-inf")


def standard_frame(alg: LieAlgebra) -> Subspace:
    """The full frame of standard basis vectors, named after the algebra."""
    return Subspace(alg, [linalg.unit(alg.dim, i) for i in range(alg.dim)], names=alg.names)


class SymPoly:
    """Element of the symmetric algebra over a frame of vectors."""

    def __init__(self, parent: Subspace, terms: dict | None = None):
        self.parent = parent
        nv = parent.dim
        clean: dict[tuple[int, ...], Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nv or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {nv} variables")
            c = fr(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, parent: Subspace) -> "SymPoly":
        return cls(parent, {})

    @classmethod
    def one(cls, parent: Subspace) -> "SymPoly":
        return cls(parent, {(0,) * parent.dim: Fraction(1)})

    @classmethod
    def variable(cls, parent: Subspace, i: int) -> "SymPoly":
        e = [0] * parent.dim
        e[i] = 1
        return cls(parent, {tuple(e): Fraction(1)})

    @classmethod
    def linear(cls, parent: Subspace, coords) -> "SymPoly":
        """Degree-1 polynomial with the given frame coordinates."""
        terms = {}
        for i, c in enumerate(coords):
            if c:
                e = [0] * parent.dim
                e[i] = 1
                terms[tuple(e)] = fr(c)
        return cls(parent, terms)

    # ring structure ----------------------------------------------------
    def _check(self, other: "SymPoly") -> None:
        if self.parent != other.parent:
            raise ValueError("polynomials live over different frames")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly(self.parent, {(0,) * self.parent.dim: fr(other)})
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return SymPoly(self.parent, out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.parent, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-fr(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = fr(other)
            return SymPoly(self.parent, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return SymPoly(self.parent, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = SymPoly.one(self.parent)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.parent == other.parent and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        """Max total degree; -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def homogeneous_part(self, d: int) -> "SymPoly":
        return SymPoly(self.parent, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # rendering ----------------------------------------------------------
    def render(self) -> str:
        """Canonical text form, graded-lex descending: `1/2*H^2 + H`."""
        if not self.terms:
            return "0"
        names = self.parent.names or tuple(f"v{i + 1}" for i in range(self.parent.dim))
        parts = []
        for e in sorted(self.terms, key=linalg.grlex_key, reverse=True):
            c = self.terms[e]
            factors = []
            for nm, k in zip(names, e):
                if k == 1:
                    factors.append(nm)
                elif k > 1:
                    factors.append(f"{nm}^{k}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = str(abs(c)) + "*" + "*".join(factors)
            parts.append((c < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"SymPoly({self.render()})"


def monomial_basis(nvars: int, degree: int, mode: str = "homogeneous") -> list[tuple[int, ...]]:
    """Deterministic monomial enumeration.

    Homogeneous mode lists the degree-d exponent vectors in descending lex
    order; up-to mode concatenates the homogeneous blocks for degrees
    0..d. Counts are C(nvars+d-1, d) and C(nvars+d, d).
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if mode not in ("homogeneous", "upto"):
        raise ValueError("mode must be 'homogeneous' or 'upto'")

    def homog(d: int) -> list[tuple[int, ...]]:
        if nvars == 0:
            return [()] if d == 0 else []
        out = []

        def rec(prefix, remaining, slots):
            if slots == 1:
                out.append(prefix + (remaining,))
                return
            for first in range(remaining, -1, -1):
                rec(prefix + (first,), remaining - first, slots - 1)

        rec((), d, nvars)
        return out

    if mode == "homogeneous":
        return homog(degree)
    out = []
    for d in range(degree + 1):
        out.extend(homog(d))
    return out


def ad_derivation(x, p: SymPoly) -> SymPoly:
    """The derivation of the symmetric algebra extending v -> [x, v].

    x is a g-coordinate vector; the bracket images of the frame vectors
    must lie back in the frame's span (always true for a full frame).
    """
    frame = p.parent
    alg = frame.algebra
    images = []
    for v in frame.vectors:
        img = alg.bracket(list(x), list(v))
        c = frame.coords(img)
        if c is None:
            raise ValueError("derivation image leaves the frame span; use a full frame")
        images.append(SymPoly.linear(frame, c))
    out = SymPoly.zero(frame)
    for e, coeff in p.terms.items():
        for i, k in enumerate(e):
            if k == 0:
                continue
            rest = list(e)
            rest[i] -= 1
            mono = SymPoly(frame, {tuple(rest): coeff * k})
            out = out + mono * images[i]
    return out


def ad_group(a, p: SymPoly) -> SymPoly:
    """Algebra-automorphism extension of an invertible matrix on g:
    substitute every frame variable by its image in frame coordinates."""
    frame = p.parent
    n = frame.algebra.dim
    amat = [[fr(e) for e in row] for row in a]
    linalg.invert(amat)  # singular matrices are rejected up front
    images = []
    for v in frame.vectors:
        img = linalg.matvec(amat, list(v))
        c = frame.coords(img)
        if c is None:
            raise ValueError("matrix image leaves the frame span; use a full frame")
        images.append(SymPoly.linear(frame, c))
    out = SymPoly.zero(frame)
    for e, coeff in p.terms.items():
        term = SymPoly(frame, {(0,) * frame.dim: coeff})
        for i, k in enumerate(e):
            for _ in range(k):
                term = term * images[i]
        out = out + term
    return out


def change_frame(p: SymPoly, new_frame: Subspace) -> SymPoly:
    """Rewrite p in the variables of another full frame of the same algebra."""
    images = []
    for v in p.parent.vectors:
        c = new_frame.coords(list(v))
        if c is None:
            raise ValueError("old frame vector is outside the new frame's span")
        images.append(SymPoly.linear(new_frame, c))
    out = SymPoly.zero(new_frame)
    for e, coeff in p.terms.items():
        term = SymPoly(new_frame, {(0,) * new_frame.dim: coeff})
        for i, k in enumerate(e):
            for _ in range(k):
                term = term * images[i]
        out = out + term
    return out


def embed_poly(setup: CosetSetup, p: SymPoly) -> SymPoly:
    """S(m) -> S(g): extend exponent vectors by zero h-exponents."""
    if p.parent != setup.m_frame:
        raise ValueError("polynomial is not over the setup's complement frame")
    pad = (0,) * (setup.n - setup.r)
    return SymPoly(setup.g_frame, {e + pad: c for e, c in p.terms.items()})


def complement_poly(setup: CosetSetup, p: SymPoly) -> SymPoly:
    """Algebra-homomorphism extension of the projection g = m + h -> m.

    In adapted variables this kills every term carrying an h-exponent and
    restricts the rest to the m-variables; degree never increases.
    """
    if p.parent != setup.g_frame:
        raise ValueError("polynomial is not over the setup's adapted frame")
    r = setup.r
    out = {}
    for e, c in p.terms.items():
        if any(e[r:]):
            continue
        out[e[:r]] = c
    return SymPoly(setup.m_frame, out)
