import pytest

from trideco.braided import YDModule, braiding, dual_yd, to_double_module, \
    yd_from_qt
from trideco.cyclotomic import Cyclotomic, root_of_unity
from trideco.hopf import drinfeld_double, group_algebra
from trideco.linalg import Matrix
from trideco.nichols import (build_nichols, quantum_symmetrizer, top_data)

from oracles import oracle_symmetrizer
from util import cyclic_table, s3_table, s3_transposition_module

ONE = Cyclotomic.one(1)


def character_module(N, power=1):
    """1-dim YD module over the double of Z/N: g.x = zeta^power x, x -> g."""
    K = group_algebra(cyclic_table(N))
    Q = drinfeld_double(K)
    z = root_of_unity(N, power)
    action_K = [Matrix(1, 1, [z ** j]) for j in range(N)]
    coaction_K = [[(1 % N, 0, ONE)]]
    mats = to_double_module(K, action_K, coaction_K, 1, Q)
    return Q, yd_from_qt(Q, mats)


def _fk3_module():
    table, _ = s3_table()
    K = group_algebra(table)
    Q = drinfeld_double(K)
    a, co, d = s3_transposition_module()
    mats = to_double_module(K, a, co, d, Q)
    return Q, yd_from_qt(Q, mats)


@pytest.fixture(scope="module")
def fk3():
    Q, V = _fk3_module()
    return Q, V, build_nichols(V, 6)


def test_symmetrizer_degree_one_is_identity():
    Q, V = character_module(3)
    assert quantum_symmetrizer(braiding(V, V), 1, 1) == Matrix.identity(1)


def test_symmetrizer_one_dim_degree_two():
    Q, V = character_module(2)  # q = -1
    s2 = quantum_symmetrizer(braiding(V, V), 2, 1)
    assert s2 == Matrix(1, 1, [ONE + root_of_unity(2, 1)])  # 1 + q = 0
    assert s2.rank() == 0


def test_symmetrizer_q_factorial_vanishes_at_zeta3():
    Q, V = character_module(3)
    c = braiding(V, V)
    s3 = quantum_symmetrizer(c, 3, 1)
    # (1+q)(1+q+q^2) = 0 at a primitive cube root
    assert s3.rank() == 0
    assert s3.kernel_basis().cols == 1


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_shuffle_recursion_matches_permutation_sum_one_dim(N):
    Q, V = character_module(N)
    c = braiding(V, V)
    for n in range(2, N + 1):
        assert quantum_symmetrizer(c, n, 1) == oracle_symmetrizer(c, n, 1)


def test_shuffle_recursion_matches_permutation_sum_fk3(fk3):
    Q, V, B = fk3
    c = braiding(V, V)
    for n in range(2, 5):
        assert quantum_symmetrizer(c, n, 3) == oracle_symmetrizer(c, n, 3)


def test_zero_module_nichols():
    K = group_algebra(cyclic_table(2))
    Q = drinfeld_double(K)
    V = YDModule(Q.hopf, 0, [Matrix.zero(0, 0)] * 4, [])
    B = build_nichols(V, 3)
    assert B.hilbert == [1]
    assert B.n_top == 0


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_taft_hilbert_series(N):
    Q, V = character_module(N)
    B = build_nichols(V, N + 1)
    assert B.hilbert == [1] * N
    assert B.n_top == N - 1
    # independent oracle on the ranks
    c = braiding(V, V)
    for n in range(2, N):
        assert oracle_symmetrizer(c, n, 1).rank() == 1
    assert oracle_symmetrizer(c, N, 1).rank() == 0


def test_fk3_hilbert_series(fk3):
    Q, V, B = fk3
    assert B.hilbert == [1, 3, 4, 3, 1]
    assert B.total_dim == 12
    assert B.n_top == 4
    assert B.hilbert_is_palindromic()


def test_fk3_oracle_ranks(fk3):
    Q, V, B = fk3
    c = braiding(V, V)
    assert oracle_symmetrizer(c, 2, 3).rank() == 4
    assert oracle_symmetrizer(c, 3, 3).rank() == 3
    assert oracle_symmetrizer(c, 4, 3).rank() == 1
    assert oracle_symmetrizer(c, 5, 3).rank() == 0


def test_top_data_q_minus_one():
    Q, V = character_module(2)
    B = build_nichols(V, 3)
    n_top, x_top, g_vec, lam = top_data(B)
    assert n_top == 1
    # the top line is V itself
    for h in range(Q.hopf.dim):
        assert lam[h][0, 0] == V.action[h][0, 0]


def test_top_data_q_zeta3_character_squares():
    Q, V = character_module(3)
    B = build_nichols(V, 4)
    n_top, x_top, g_vec, lam = top_data(B)
    assert n_top == 2
    for h in range(Q.hopf.dim):
        expected = Cyclotomic.zero(1)
        for (a, b, s) in Q.hopf.comult[h]:
            expected = expected + s * V.action[a][0, 0] * V.action[b][0, 0]
        assert lam[h][0, 0] == expected


def test_fk3_top_is_one_dimensional(fk3):
    Q, V, B = fk3
    n_top, x_top, g_vec, lam = top_data(B)
    assert n_top == 4
    # top coaction leg is group-like (asserted inside top_data)
    assert Q.hopf.counit_elem(g_vec).is_one()


def test_component_multiplication_associative_fk3(fk3):
    Q, V, B = fk3
    for p in range(0, 4):
        for q in range(0, 4 - p):
            for r in range(0, 4 - p - q):
                left = B.mult_matrix(p + q, r) * \
                    B.mult_matrix(p, q).kron(Matrix.identity(B.hilbert[r]))
                right = B.mult_matrix(p, q + r) * \
                    Matrix.identity(B.hilbert[p]).kron(B.mult_matrix(q, r))
                assert left == right


def test_kernel_ideal_property_fk3(fk3):
    Q, V, B = fk3
    c = braiding(V, V)
    for p, q in [(2, 1), (1, 2), (2, 2), (3, 1), (1, 3)]:
        sp = quantum_symmetrizer(c, p, 3)
        stot = quantum_symmetrizer(c, p + q, 3)
        kp = sp.kernel_basis()
        if kp.cols == 0:
            continue
        left = stot * kp.kron(Matrix.identity(3 ** q))
        assert left.is_zero()
        right = stot * Matrix.identity(3 ** q).kron(kp)
        assert right.is_zero()


def test_direct_sum_dims_are_convolutions():
    # V (+) oV for the q = -1 character module: dims must be the convolution
    # of (1,1) with (1,1)
    Q, V = character_module(2)
    oV = dual_yd(Q, V)
    H = Q.hopf
    both = YDModule(
        H, 2,
        [Matrix.from_rows([
            [V.action[h][0, 0], Cyclotomic.zero(1)],
            [Cyclotomic.zero(1), oV.action[h][0, 0]]]) for h in range(H.dim)],
        [[(h, 0, s) for (h, m, s) in V.coaction[0]],
         [(h, 1, s) for (h, m, s) in oV.coaction[0]]])
    B = build_nichols(both, 4)
    assert B.hilbert == [1, 2, 1]


def test_comult_component_edge_cases(fk3):
    Q, V, B = fk3
    for n in range(0, 4):
        d = B.hilbert[n]
        assert B.comult_component(n, 0) == Matrix.identity(d)
        assert B.comult_component(0, n) == Matrix.identity(d)


def test_comult_one_one_q_binomial():
    Q, V = character_module(5)
    B = build_nichols(V, 6)
    q = braiding(V, V)[0, 0]
    assert B.comult_component(1, 1) == Matrix(1, 1, [ONE + q])


def test_comult_coassociative_fk3(fk3):
    Q, V, B = fk3
    n = 3
    for p, q, r in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)]:
        if p + q + r > 4:
            continue
        dp, dq, dr = B.hilbert[p], B.hilbert[q], B.hilbert[r]
        left = B.comult_component(p, q).kron(Matrix.identity(dr)) * \
            B.comult_component(p + q, r)
        right = Matrix.identity(dp).kron(B.comult_component(q, r)) * \
            B.comult_component(p, q + r)
        assert left == right


def test_character_duality_sweedler():
    Q, V = character_module(2)
    oV = dual_yd(Q, V)
    B = build_nichols(V, 3)
    Bo = build_nichols(oV, 3)
    H = Q.hopf
    for n in range(0, 2):
        ch_o = Bo.h_character(n)
        ch_dual = []
        for h in range(H.dim):
            sh = H.antipode_elem({h: ONE})
            tr = Cyclotomic.zero(1)
            for g, c in sh.items():
                tr = tr + c * B.act_on_component(g, n).trace()
            ch_dual.append(tr)
        assert ch_o == ch_dual


def test_top_characters_multiply_to_counit():
    Q, V = character_module(3)
    oV = dual_yd(Q, V)
    B = build_nichols(V, 4)
    Bo = build_nichols(oV, 4)
    H = Q.hopf
    _, _, _, lam_v = top_data(B)
    _, _, _, lam_ov = top_data(Bo)
    for h in range(H.dim):
        acc = Cyclotomic.zero(1)
        for (a, b, s) in H.comult[h]:
            acc = acc + s * lam_v[a][0, 0] * lam_ov[b][0, 0]
        assert acc == H.counit[h]
