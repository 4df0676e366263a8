from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from trideco.cyclotomic import Cyclotomic, root_of_unity
from trideco.linalg import Matrix, mat_mul_packed


def _m(rows):
    return Matrix.from_rows([[Cyclotomic._coerce(e) for e in row]
                             for row in rows])


def test_kernel_of_identity_is_trivial():
    assert Matrix.identity(3).kernel_basis().cols == 0


def test_kernel_of_zero_is_everything():
    assert Matrix.zero(2, 2).kernel_basis().cols == 2


def test_kernel_of_one_plus_q_at_minus_one():
    q = root_of_unity(2, 1)
    m = Matrix(1, 1, [Cyclotomic.one(2) + q])
    assert m.kernel_basis().cols == 1


def test_solve_identity():
    b = _m([[1], [2], [3]])
    x = Matrix.identity(3).solve(b)
    assert x == b


def test_solve_zero_against_nonzero_has_no_solution():
    assert Matrix.zero(2, 2).solve(_m([[1], [0]])) is None


def test_solve_consistent_system():
    m = _m([[1, 2], [2, 4]])
    v = _m([[5], [7]])
    b = m * v
    x = m.solve(b)
    assert x is not None
    assert m * x == b


def test_rank_with_cyclotomic_entries():
    z = root_of_unity(3, 1)
    # second row is z times the first: rank 1
    m = Matrix.from_rows([
        [Cyclotomic.one(3), z],
        [z, z * z],
    ])
    assert m.rank() == 1
    assert m.kernel_basis().cols == 1


def test_inverse():
    z = root_of_unity(4, 1)
    m = Matrix.from_rows([[Cyclotomic.one(4), z],
                          [Cyclotomic.zero(4), Cyclotomic.one(4)]])
    inv = m.inverse()
    assert inv is not None
    assert m * inv == Matrix.identity(2, m.order)
    assert _m([[1, 1], [1, 1]]).inverse() is None


def test_kron_shape_and_values():
    a = _m([[1, 2]])
    b = _m([[3], [4]])
    k = a.kron(b)
    assert (k.rows, k.cols) == (2, 2)
    assert k[0, 0] == Cyclotomic.rational(3)
    assert k[1, 1] == Cyclotomic.rational(8)


small_entries = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def small_matrices(draw, max_dim=4):
    r = draw(st.integers(min_value=1, max_value=max_dim))
    c = draw(st.integers(min_value=1, max_value=max_dim))
    n = draw(st.sampled_from([1, 2, 3, 4]))
    phi = {1: 1, 2: 1, 3: 2, 4: 2}[n]
    ents = []
    for _ in range(r * c):
        coeffs = draw(st.lists(small_entries, min_size=phi, max_size=phi))
        ents.append(Cyclotomic(n, coeffs))
    return Matrix(r, c, ents)


@settings(max_examples=50, deadline=None)
@given(small_matrices())
def test_kernel_columns_are_annihilated_and_independent(m):
    k = m.kernel_basis()
    assert m.rank() + k.cols == m.cols
    if k.cols:
        assert (m * k).is_zero()
        assert k.rank() == k.cols


@settings(max_examples=30, deadline=None)
@given(small_matrices())
def test_rank_invariant_under_row_permutation_and_scaling(m):
    rows = [m.row(r) for r in range(m.rows)]
    rows = rows[::-1]
    z = root_of_unity(3, 1) + Cyclotomic.rational(2)  # nonzero scalar
    rows[0] = [z * e for e in rows[0]]
    m2 = Matrix.from_rows(rows)
    assert m2.rank() == m.rank()


@settings(max_examples=30, deadline=None)
@given(small_matrices(max_dim=3), small_matrices(max_dim=3))
def test_packed_matmul_agrees_with_sparse_matmul(a, b):
    if a.cols != b.rows:
        b = Matrix(a.cols, b.cols, [
            Cyclotomic.rational(Fraction(i, 2)) for i in range(a.cols * b.cols)
        ])
    assert mat_mul_packed(a, b) == a * b


def test_solve_multiple_right_hand_sides():
    m = _m([[2, 0], [0, 3]])
    b = _m([[4, 2], [9, 3]])
    x = m.solve(b)
    assert x == _m([[2, 1], [3, 1]])
