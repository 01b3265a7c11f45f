"""The universal enveloping algebra in the adapted PBW basis.

Elements are sparse maps from exponent vectors over the setup's adapted
basis (complement variables first, subalgebra variables last) to rational
coefficients; the exponent vector (e_1, ..., e_n) stands for the ordered
monomial v_1^{e_1} ... v_n^{e_n}.

Normalization rewrites an out-of-order adjacent pair v_b v_a into
v_a v_b + [v_b, v_a] and recurses on the lower-degree bracket remainder;
the measure (total degree, inversion count) drops lexicographically at
every step, so the rewriting terminates. Confluence of the two built-in
strategies is asserted by the test suite rather than assumed.

Symmetrization averages the ordered words of each commutative monomial
(weighted by letter multiplicities) and is memoized per monomial; its
inverse proceeds by degreewise triangular back-substitution.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import linalg
from .lie import CosetSetup
from .linalg import fr
from .sympoly import SymPoly, change_frame


class DegreeCapError(ValueError):
    """Raised when symmetrization is asked for a degree above its cap."""


class PBWElement:
    """Element of the enveloping algebra in the setup's adapted PBW basis."""

    def __init__(self, setup: CosetSetup, terms: dict | None = None):
        self.setup = setup
        n = setup.n
        clean: dict[tuple[int, ...], Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e}")
            c = fr(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, setup) -> "PBWElement":
        return cls(setup, {})

    @classmethod
    def one(cls, setup) -> "PBWElement":
        return cls(setup, {(0,) * setup.n: Fraction(1)})

    @classmethod
    def generator(cls, setup, i: int) -> "PBWElement":
        e = [0] * setup.n
        e[i] = 1
        return cls(setup, {tuple(e): Fraction(1)})

    @classmethod
    def from_vector(cls, setup, x) -> "PBWElement":
        """Degree-1 element for a g-coordinate vector."""
        coords = setup.to_adapted(x)
        terms = {}
        for i, c in enumerate(coords):
            if c:
                e = [0] * setup.n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(setup, terms)

    def _check(self, other: "PBWElement") -> None:
        if self.setup is not other.setup:
            raise ValueError("elements live over different setups")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PBWElement(self.setup, {(0,) * self.setup.n: fr(other)})
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return PBWElement(self.setup, out)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.setup, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-fr(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = fr(other)
            return PBWElement(self.setup, {e: c * v for e, v in self.terms.items()})
        return u_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.setup is other.setup and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        """Filtration degree; -inf for zero."""
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def render(self) -> str:
        """Canonical text form with explicit coefficients and exponents,
        graded-lex descending: `1*K^1*E^1 + 1*H^1`."""
        if not self.terms:
            return "0"
        names = self.setup.adapted_names
        parts = []
        for e in sorted(self.terms, key=linalg.grlex_key, reverse=True):
            c = self.terms[e]
            factors = [f"{nm}^{k}" for nm, k in zip(names, e) if k]
            body = str(abs(c)) if not factors else str(abs(c)) + "*" + "*".join(factors)
            parts.append((c < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"PBWElement({self.render()})"


def _exps_of_word(n: int, word: tuple[int, ...]) -> tuple[int, ...]:
    e = [0] * n
    for i in word:
        e[i] += 1
    return tuple(e)


def _normalize_word(setup: CosetSetup, word: tuple[int, ...], strategy: str) -> dict:
    """Normal form of an ordered word of adapted basis indices, as a
    cached exponent->coefficient map. Cached dicts are never mutated."""
    cache = setup._word_cache
    key = (word, strategy)
    got = cache.get(key)
    if got is not None:
        return got

    pos = -1
    if strategy == "leftmost":
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                pos = i
                break
    else:
        for i in range(len(word) - 2, -1, -1):
            if word[i] > word[i + 1]:
                pos = i
                break
    if pos < 0:
        result = {_exps_of_word(setup.n, word): Fraction(1)}
        cache[key] = result
        return result

    b, a = word[pos], word[pos + 1]
    swapped = word[:pos] + (a, b) + word[pos + 2 :]
    result: dict[tuple[int, ...], Fraction] = {}
    for e, c in _normalize_word(setup, swapped, strategy).items():
        result[e] = result.get(e, Fraction(0)) + c
    for k, coeff in enumerate(setup.adapted_bracket(b, a)):
        if coeff == 0:
            continue
        shorter = word[:pos] + (k,) + word[pos + 2 :]
        for e, c in _normalize_word(setup, shorter, strategy).items():
            result[e] = result.get(e, Fraction(0)) + coeff * c
    result = {e: c for e, c in result.items() if c}
    cache[key] = result
    return result


def pbw_normalize(setup: CosetSetup, words, strategy: str = "leftmost") -> PBWElement:
    """Normal form of a linear combination of ordered words.

    `words` is an iterable of (coefficient, index-sequence) pairs over the
    adapted basis. The result is independent of the rewrite strategy; both
    'leftmost' and 'rightmost' are exposed so the confluence tests can say
    so with evidence.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError("strategy must be 'leftmost' or 'rightmost'")
    n = setup.n
    out: dict[tuple[int, ...], Fraction] = {}
    for coeff, word in words:
        coeff = fr(coeff)
        word = tuple(int(i) for i in word)
        for i in word:
            if not 0 <= i < n:
                raise IndexError(f"basis index {i} out of range 0..{n - 1}")
        for e, c in _normalize_word(setup, word, strategy).items():
            out[e] = out.get(e, Fraction(0)) + coeff * c
    return PBWElement(setup, out)


def pbw_from_vector_words(setup: CosetSetup, items, strategy: str = "leftmost") -> PBWElement:
    """Normal form of words whose letters are arbitrary g-vectors,
    expanded multilinearly over the adapted basis."""
    expanded = []
    for coeff, letters in items:
        coords = [setup.to_adapted(x) for x in letters]
        supports = [[i for i, c in enumerate(cv) if c] for cv in coords]
        for choice in itertools.product(*supports):
            c = fr(coeff)
            for cv, i in zip(coords, choice):
                c *= cv[i]
            expanded.append((c, choice))
    return pbw_normalize(setup, expanded, strategy)


def u_mul(a: PBWElement, b: PBWElement) -> PBWElement:
    """Product in the enveloping algebra: concatenate, normalize, sum."""
    a._check(b)
    setup = a.setup
    out: dict[tuple[int, ...], Fraction] = {}
    for ea, ca in a.terms.items():
        word_a = tuple(i for i, k in enumerate(ea) for _ in range(k))
        for eb, cb in b.terms.items():
            word = word_a + tuple(i for i, k in enumerate(eb) for _ in range(k))
            c = ca * cb
            for e, v in _normalize_word(setup, word, "leftmost").items():
                out[e] = out.get(e, Fraction(0)) + c * v
    return PBWElement(setup, out)


def _symmetrize_monomial(setup: CosetSetup, exps: tuple[int, ...]) -> dict:
    """Symmetrized image of one commutative monomial over the adapted
    variables, as a cached exponent map."""
    got = setup._sym_cache.get(exps)
    if got is not None:
        return got
    word = tuple(i for i, k in enumerate(exps) for _ in range(k))
    m = len(word)
    if m == 0:
        result = {(0,) * setup.n: Fraction(1)}
        setup._sym_cache[exps] = result
        return result
    mult = Fraction(1)
    for k in exps:
        mult *= math.factorial(k)
    weight = mult / math.factorial(m)
    result: dict[tuple[int, ...], Fraction] = {}
    for arrangement in sorted(set(itertools.permutations(word))):
        for e, c in _normalize_word(setup, arrangement, "leftmost").items():
            result[e] = result.get(e, Fraction(0)) + weight * c
    result = {e: c for e, c in result.items() if c}
    setup._sym_cache[exps] = result
    return result


def symmetrize(setup: CosetSetup, p: SymPoly, cap: int = 6) -> PBWElement:
    """The symmetrization map from S(g) into the enveloping algebra.

    Averages all orderings of each monomial's letters and normalizes.
    Polynomials over any full frame are accepted (the map does not depend
    on the basis); elements of S(m) should be embedded first. The degree
    cap guards the factorial blow-up of the word enumeration.
    """
    if p.parent != setup.g_frame:
        p = change_frame(p, setup.g_frame)
    if p.terms and p.degree > cap:
        raise DegreeCapError(
            f"symmetrization degree {p.degree} exceeds cap {cap}; pass a larger cap")
    out: dict[tuple[int, ...], Fraction] = {}
    for exps, coeff in p.terms.items():
        for e, c in _symmetrize_monomial(setup, exps).items():
            out[e] = out.get(e, Fraction(0)) + coeff * c
    return PBWElement(setup, out)


def symmetrize_inverse(setup: CosetSetup, u: PBWElement, cap: int = 6) -> SymPoly:
    """The unique polynomial P with symmetrize(P) = u.

    Degreewise triangular descent: the top filtration layer of u equals
    the top layer of its preimage read off verbatim, so subtracting the
    symmetrized top part strictly lowers the degree.
    """
    if u.setup is not setup:
        raise ValueError("element lives over a different setup")
    frame = setup.g_frame
    remainder = u
    result = SymPoly.zero(frame)
    while remainder.terms:
        d = remainder.degree
        top = SymPoly(frame, {e: c for e, c in remainder.terms.items() if sum(e) == d})
        result = result + top
        remainder = remainder - symmetrize(setup, top, cap=max(cap, d))
        if remainder.terms and remainder.degree >= d:
            raise AssertionError("triangular descent failed to lower the degree")
    return result


def ad_commutator(setup: CosetSetup, x, u: PBWElement) -> PBWElement:
    """Adjoint action of a g-vector on the enveloping algebra: [x, u]."""
    xe = PBWElement.from_vector(setup, x)
    return u_mul(xe, u) - u_mul(u, xe)


def group_transform(setup: CosetSetup, a, u: PBWElement, cap: int = 6) -> PBWElement:
    """Automorphism action of an invertible matrix on the enveloping
    algebra, transported through symmetrization (which intertwines the
    two extensions of a linear map)."""
    from .sympoly import ad_group

    p = symmetrize_inverse(setup, u, cap=cap)
    if p.terms:
        cap = max(cap, int(p.degree))
    return symmetrize(setup, ad_group(a, p), cap=cap)
