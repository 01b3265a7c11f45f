from fractions import Fraction

import pytest

from invarops import linalg


def M(rows):
    return [[Fraction(e) for e in row] for row in rows]


def test_rref_identity():
    r, pivots = linalg.rref(M([[2, 0], [0, 3]]))
    assert r == M([[1, 0], [0, 1]])
    assert pivots == [0, 1]


def test_rref_dependent_rows():
    r, pivots = linalg.rref(M([[1, 2, 3], [2, 4, 6], [0, 1, 1]]))
    assert pivots == [0, 1]
    assert len(r) == 2


def test_rank():
    assert linalg.rank(M([[1, 2], [2, 4]])) == 1
    assert linalg.rank(M([[1, 0], [0, 1]])) == 2
    assert linalg.rank([]) == 0


def test_nullspace_canonical():
    # x + y + z = 0 has the canonical two-vector basis with free vars y, z
    ns = linalg.nullspace(M([[1, 1, 1]]), 3)
    assert ns == [M([[-1, 1, 0]])[0], M([[-1, 0, 1]])[0]]
    for v in ns:
        assert sum(v) == 0


def test_nullspace_full_rank_is_empty():
    assert linalg.nullspace(M([[1, 0], [0, 1]]), 2) == []


def test_nullspace_no_rows_is_identity():
    ns = linalg.nullspace([], 2)
    assert ns == [M([[1, 0]])[0], M([[0, 1]])[0]]


def test_invert_roundtrip():
    a = M([[1, 2], [3, 5]])
    inv = linalg.invert(a)
    assert linalg.matmul(a, inv) == linalg.identity(2)


def test_invert_singular():
    with pytest.raises(ValueError):
        linalg.invert(M([[1, 2], [2, 4]]))


def test_solve_columns():
    cols = [M([[1, 0, 1]])[0], M([[0, 1, 1]])[0]]
    sol = linalg.solve_columns(cols, M([[2, 3, 5]])[0])
    assert sol == [Fraction(2), Fraction(3)]
    assert linalg.solve_columns(cols, M([[1, 0, 0]])[0]) is None
    assert linalg.solve_columns([], [Fraction(0)]) == []
    assert linalg.solve_columns([], [Fraction(1)]) is None


def test_solve_affine_feasible():
    sol, cert = linalg.solve_affine(M([[1, 1], [0, 1]]), [Fraction(3), Fraction(1)])
    assert cert is None
    assert sol == [Fraction(2), Fraction(1)]


def test_solve_affine_certificate():
    # x + y = 1 and x + y = 2 cannot both hold
    sol, cert = linalg.solve_affine(M([[1, 1], [1, 1]]), [Fraction(1), Fraction(2)])
    assert sol is None
    assert cert.rhs != 0
    # the multipliers really combine the rows to 0 = rhs
    combo = [cert.multipliers[0] * Fraction(1) + cert.multipliers[1] * Fraction(1)] * 2
    assert combo == [Fraction(0), Fraction(0)]
    assert cert.multipliers[0] * 1 + cert.multipliers[1] * 2 == cert.rhs


def test_echelon_rank_and_membership():
    ech = linalg.Echelon()
    assert ech.add({0: Fraction(1), 1: Fraction(1)})
    assert ech.add({1: Fraction(1)})
    assert not ech.add({0: Fraction(2), 1: Fraction(5)})
    assert ech.rank == 2
    assert ech.contains({0: Fraction(7)})
    assert not ech.contains({2: Fraction(1)})


def test_echelon_insertion_order_irrelevant_for_rank():
    vs = [{0: Fraction(1), 2: Fraction(1)}, {1: Fraction(1)}, {0: Fraction(1), 1: Fraction(1), 2: Fraction(1)}]
    e1 = linalg.Echelon()
    e2 = linalg.Echelon()
    for v in vs:
        e1.add(dict(v))
    for v in reversed(vs):
        e2.add(dict(v))
    assert e1.rank == e2.rank == 2


def test_spans_equal():
    u = [{0: Fraction(1)}, {1: Fraction(1)}]
    v = [{0: Fraction(1), 1: Fraction(1)}, {0: Fraction(1), 1: Fraction(-1)}]
    w = [{0: Fraction(1)}]
    assert linalg.spans_equal(u, v)
    assert not linalg.spans_equal(u, w)
    assert linalg.spans_equal([], [])


def test_grlex_key_ordering():
    assert linalg.grlex_key((2, 0)) > linalg.grlex_key((1, 1)) > linalg.grlex_key((0, 2))
    assert linalg.grlex_key((0, 2)) > linalg.grlex_key((1, 0))


def test_fr_rejects_floats():
    with pytest.raises(TypeError):
        linalg.fr(0.5)
