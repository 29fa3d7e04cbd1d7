from itertools import product

import pytest
from hypothesis import given, strategies as st

from qschur.decompose import generator_actions
from qschur.hecke import HeckeElement, basis, generator, h_of, y_T
from qschur.permutations import Permutation, all_permutations
from qschur.scalars import ONE, Q
from qschur.superspace import (
    CartanElement,
    RootData,
    TensorVector,
    act_E,
    act_F,
    act_qh,
    basis_tuples,
    hecke_act,
    parse_tensor,
    place_permutation,
    r_j_apply,
    rcheck_matrix,
    weight_of,
)
from qschur.tableaux import enumerate_standard
from qschur.verify import braid_relations, defining_relations, quadratic_relation

Q2 = Q * Q
D11 = RootData(1, 1)
D22 = RootData(2, 2)


def vec(*tup):
    return TensorVector.basis(tup)


def test_root_data():
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 3), (3, 2)]:
        data = RootData(m, n)
        A = data.cartan
        r = data.rank
        assert [data.d(i) for i in range(1, r + 1)] == [1 if i <= m else -1 for i in range(1, r + 1)]
        assert A[m - 1][m - 1] == 0
        assert all(A[i][i] == 2 for i in range(r) if i != m - 1)
        DA = [[data.d(i + 1) * A[i][j] for j in range(r)] for i in range(r)]
        assert all(DA[i][j] == DA[j][i] for i in range(r) for j in range(r))
        assert [data.op_parity(i) for i in range(1, r + 1)] == [int(i == m) for i in range(1, r + 1)]
    assert D22.H(2).coeffs == (0, 1, 1, 0)
    with pytest.raises(ValueError):
        RootData(0, 1)


def test_rcheck_examples():
    assert r_j_apply(D11, vec(1, 1), 1) == vec(1, 1).scale(Q2)
    assert r_j_apply(D11, vec(2, 2), 1) == -vec(2, 2)
    data = RootData(1, 2)
    assert r_j_apply(data, vec(2, 3), 1) == vec(3, 2).scale(-Q) + vec(2, 3).scale(Q2 - 1)
    assert r_j_apply(data, vec(3, 2), 1) == vec(2, 3).scale(-Q)


def test_rcheck_closed_form():
    """Ř(b_i b_j) = (-1)^{p_i p_j} q b_j b_i + [i<j](q^2-1) b_i b_j for i != j."""
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        data = RootData(m, n)
        for i, j in product(range(1, data.dim + 1), repeat=2):
            got = r_j_apply(data, vec(i, j), 1)
            if i == j:
                want = vec(i, i).scale(Q2 if i <= m else -ONE)
            else:
                sign = -1 if data.parity(i) and data.parity(j) else 1
                want = vec(j, i).scale(Q * sign)
                if i < j:
                    want = want + vec(i, j).scale(Q2 - 1)
            assert got == want


def test_rcheck_matrix_layout():
    mat = rcheck_matrix(D11)
    assert len(mat) == 4
    assert mat[0][0] == Q2 and mat[3][3] == -ONE
    # column of t1 (x) u1: q u1 (x) t1 + (q^2-1) t1 (x) u1
    assert mat[2][1] == Q and mat[1][1] == Q2 - 1


def test_r_j_range():
    with pytest.raises(ValueError):
        r_j_apply(D11, vec(1, 2), 2)


def test_quadratic_and_braid():
    for m, n in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        assert quadratic_relation(m, n).passed
        assert braid_relations(m, n, 3).passed


def test_hecke_act_examples():
    v = vec(1, 2, 2)
    assert hecke_act(D11, HeckeElement.one(3), v) == v
    assert hecke_act(D11, generator(1, 2), vec(1, 2)) == vec(2, 1).scale(Q) + vec(1, 2).scale(Q2 - 1)
    h = generator(1, 2)
    w = vec(2, 1)
    assert hecke_act(D11, h * h, w) == hecke_act(D11, h, w).scale(Q2 - 1) + w.scale(Q2)
    with pytest.raises(ValueError):
        hecke_act(D11, h, vec(1, 2, 1))


def test_hecke_act_is_an_algebra_action():
    data = RootData(2, 1)
    for t in enumerate_standard([2, 1]):
        y = y_T(t)
        for tup in basis_tuples(data, 3):
            v = vec(*tup)
            for s in all_permutations(3):
                assert hecke_act(data, h_of(s) * y, v) == hecke_act(data, h_of(s), hecke_act(data, y, v))


def test_generators_on_one_slot():
    data = RootData(2, 1)
    for i in range(1, data.rank + 1):
        for l in range(1, data.dim + 1):
            e, f = act_E(data, i, vec(l)), act_F(data, i, vec(l))
            assert e == (vec(i) if l == i + 1 else TensorVector(1))
            assert f == (vec(i + 1) if l == i else TensorVector(1))
    with pytest.raises(ValueError):
        act_E(data, 3, vec(1))


def test_worked_highest_weight_vector_is_killed():
    v = vec(1, 2) - vec(2, 1).scale(Q)
    assert not act_E(D11, 1, v)
    assert weight_of(D11, v).coords == (1, 1)


def test_odd_generator_sign():
    # E_1 = E_m is odd: passing the odd u1 in slot 1 costs a sign
    # and k_1^{-1} acts on u1 by q^{-1}
    assert act_E(D11, 1, vec(2, 2)) == vec(1, 2).scale(Q ** -1) - vec(2, 1)


def test_act_qh():
    h = D11.E_diag(1)
    assert act_qh(D11, h, vec(1, 1)) == vec(1, 1).scale(Q2)
    zero = CartanElement((0, 0))
    v = vec(1, 2) + vec(2, 2).scale(Q)
    assert act_qh(D11, zero, v) == v
    h = CartanElement((2, -3))
    assert act_qh(D11, h, vec(1, 2, 2)) == vec(1, 2, 2).scale(Q ** (2 - 6))


def test_weight_of():
    assert weight_of(D11, vec(1, 1)).coords == (2, 0)
    with pytest.raises(ValueError, match="differ"):
        weight_of(D11, vec(1, 1) + vec(1, 2))
    with pytest.raises(ValueError):
        weight_of(D11, TensorVector(2))


def test_weight_is_the_q_h_eigenvalue():
    data = RootData(2, 1)
    for tup in basis_tuples(data, 3):
        v = vec(*tup)
        wt = weight_of(data, v).coords
        for l in range(1, data.dim + 1):
            h = data.E_diag(l)
            assert act_qh(data, h, v) == v.scale(Q ** h.pair(wt))


def test_centralizer_commutation_small():
    for m, n in [(1, 1), (2, 1)]:
        data = RootData(m, n)
        for k in (2, 3):
            for tup in basis_tuples(data, k):
                v = vec(*tup)
                for j in range(1, k):
                    for _, op in generator_actions(data):
                        assert r_j_apply(data, op(v), j) == op(r_j_apply(data, v, j))


def test_defining_relations_gl22():
    for k in (1, 2):
        report = defining_relations(2, 2, k)
        assert report.passed, [c.name for c in report.failures()]


def test_F_at_one_is_the_classical_lowering():
    data = RootData(2, 1)
    for tup in basis_tuples(data, 3):
        v = vec(*tup)
        for i in range(1, data.rank + 1):
            assert act_F(data, i, v).specialize(1) == act_F(data, i, v, classical=True).specialize(1)


def test_place_permutation_matches_T_w_at_one():
    data = RootData(1, 2)
    for s in all_permutations(3):
        for tup in basis_tuples(data, 3):
            v = vec(*tup)
            assert hecke_act(data, basis(s), v).specialize(1) == place_permutation(data, s, v).specialize(1)


def test_place_permutation_signs():
    s = Permutation.simple(1, 2)
    assert place_permutation(D11, s, vec(2, 2)) == -vec(2, 2)
    assert place_permutation(D11, s, vec(1, 2)) == vec(2, 1)


def test_text_and_json():
    v = parse_tensor("(1) * 1⊗1~ + (-q) * 1~*1", D11)
    assert v == vec(1, 2) - vec(2, 1).scale(Q)
    assert parse_tensor(v.to_text(1), D11) == v
    assert TensorVector.from_json(2, v.to_json()) == v
    with pytest.raises(ValueError, match="position"):
        parse_tensor("1⊗3~", D11)


@given(st.lists(st.integers(min_value=1, max_value=4), min_size=3, max_size=3),
       st.permutations(range(1, 4)), st.permutations(range(1, 4)))
def test_place_permutation_is_a_homomorphism(tup, a, b):
    a, b = Permutation(a), Permutation(b)
    v = vec(*tup)
    assert place_permutation(D22, a * b, v) == place_permutation(D22, a, place_permutation(D22, b, v))


def test_symmetric_coproduct_would_break_commutation():
    """E -> E (x) k^-1 + k (x) E does not commute with r_1; the adopted
    E -> E (x) k^-1 + 1 (x) E does."""
    kel = D11.k_element(1)

    def symmetric_E(v):
        out = TensorVector(2)
        for (a, b), c in v.terms.items():
            if a == 2:
                out = out + vec(1, b).scale(c * Q ** (-kel.coeffs[b - 1]))
            if b == 2:
                sign = -1 if D11.parity(a) else 1
                out = out + vec(a, 1).scale(c * sign * Q ** kel.coeffs[a - 1])
        return out

    v = vec(2, 1)
    assert r_j_apply(D11, symmetric_E(v), 1) != symmetric_E(r_j_apply(D11, v, 1))
    assert r_j_apply(D11, act_E(D11, 1, v), 1) == act_E(D11, 1, r_j_apply(D11, v, 1))
