import pytest

from trideco.cyclotomic import Cyclotomic
from trideco.errors import NotSemisimple
from trideco.hopf import drinfeld_double, group_algebra
from trideco.linalg import Matrix
from trideco import repr_theory as rt
from trideco.triangular import build_u

from test_triangular import sweedler_tower, taft_tower, uqsl2_tower
from util import cyclic_table, s3_table

ONE = Cyclotomic.one(1)


@pytest.fixture(scope="module")
def sweedler():
    K, Q, V = sweedler_tower()
    A = build_u(Q, V, 6)
    weights = rt.enumerate_weights(A.H, field_order=2)
    return K, A, weights


@pytest.fixture(scope="module")
def taft3():
    K, Q, V = taft_tower(3)
    A = build_u(Q, V, 6)
    weights = rt.enumerate_weights(A.H, field_order=3)
    return K, A, weights


@pytest.fixture(scope="module")
def sweedler_tables(sweedler):
    K, A, weights = sweedler
    return rt.character_tables(A, weights)


@pytest.fixture(scope="module")
def taft3_tables(taft3):
    K, A, weights = taft3
    return rt.character_tables(A, weights)


def test_weights_of_trivial_hopf():
    H = group_algebra([[0]])
    weights = rt.enumerate_weights(H, 1)
    assert len(weights) == 1 and weights[0].dim == 1


def test_weights_of_z2_double(sweedler):
    K, A, weights = sweedler
    assert len(weights) == 4
    assert all(w.dim == 1 for w in weights)


def test_weights_of_z3_double(taft3):
    K, A, weights = taft3
    assert len(weights) == 9
    assert all(w.dim == 1 for w in weights)


def test_weights_of_s3_double():
    table, _ = s3_table()
    Q = drinfeld_double(group_algebra(table))
    weights = rt.enumerate_weights(Q.hopf, field_order=6)
    dims = sorted(w.dim for w in weights)
    assert dims == [1, 1, 2, 2, 2, 2, 3, 3]
    assert sum(d * d for d in dims) == 36


def test_group_algebra_weights_are_characters():
    H = group_algebra(cyclic_table(3))
    weights = rt.enumerate_weights(H, field_order=3)
    assert len(weights) == 3
    assert all(w.dim == 1 for w in weights)


def test_verma_shapes_sweedler(sweedler):
    K, A, weights = sweedler
    for w in weights:
        M = rt.verma(A, w)
        assert M.components == {0: 1, -1: 1}
        rt.check_graded_module(M)


def test_verma_shape_taft3(taft3):
    K, A, weights = taft3
    M = rt.verma(A, weights[0])
    assert M.components == {0: 1, -1: 1, -2: 1}
    rt.check_graded_module(M)


def test_coverma_shapes(sweedler):
    K, A, weights = sweedler
    for w in weights:
        W = rt.coverma(A, w)
        assert W.components == {0: 1, 1: 1}
        rt.check_graded_module(W)


def test_highest_weight_property(sweedler):
    K, A, weights = sweedler
    for w in weights:
        M = rt.verma(A, w)
        # (B+)_{>0} kills the degree-0 component: y-action from degree 0
        for j in range(A.oV.dim):
            assert M.act_y(j, 0).is_zero() or M.dim_at(1) == 0


def test_heads_and_dimension_count_sweedler(sweedler, sweedler_tables):
    K, A, weights = sweedler
    m_table, l_table, m_modules, l_modules = sweedler_tables
    dims_l = {}
    for w in weights:
        L = l_modules[w.label]
        rt.check_graded_module(L)
        dims_l[w.label] = L.total_dim
    # simple heads are pairwise distinct
    chars = [tuple(sorted(l_table[w.label].data.items())) for w in weights]
    assert len(set(chars)) == len(weights)
    # two rigid one-dim heads, two simple (projective) standard modules
    assert sorted(dims_l.values()) == [1, 1, 2, 2]


def test_simple_vermas_equal_their_heads(sweedler, sweedler_tables):
    K, A, weights = sweedler
    m_table, l_table, m_modules, l_modules = sweedler_tables
    for w in weights:
        M, L = m_modules[w.label], l_modules[w.label]
        if m_table[w.label] == l_table[w.label]:
            assert M.total_dim == L.total_dim


def test_head_matches_radical_quotient_oracle(sweedler, sweedler_tables):
    K, A, weights = sweedler
    m_table, l_table, m_modules, l_modules = sweedler_tables
    for w in weights:
        oracle = rt.module_head_by_radical(A, m_modules[w.label])
        assert oracle.graded_character(weights) == l_table[w.label]


def test_lowest_weight_bar_bijection(sweedler, sweedler_tables):
    K, A, weights = sweedler
    _, _, _, l_modules = sweedler_tables
    bars = {}
    for w in weights:
        wbar, deg = rt.lowest_weight(A, l_modules[w.label], weights)
        assert deg <= 0
        bars[w.label] = wbar.label
    assert sorted(bars.values()) == sorted(bars.keys())


def test_lowest_weight_bar_bijection_taft3(taft3, taft3_tables):
    K, A, weights = taft3
    _, _, _, l_modules = taft3_tables
    bars = {}
    for w in weights:
        wbar, deg = rt.lowest_weight(A, l_modules[w.label], weights)
        bars[w.label] = wbar.label
    assert sorted(bars.values()) == sorted(bars.keys())


def test_graded_character_of_weight_concentrated(sweedler):
    K, A, weights = sweedler
    w = weights[0]
    M = rt.inflate_weight(A, w, degree=2)
    ch = M.graded_character(weights)
    assert ch.data == {(w.label, 2): 1}


def test_verma_character_total_dimension(sweedler, taft3):
    for K, A, weights in (sweedler, taft3):
        by_label = {w.label: w for w in weights}
        for w in weights:
            M = rt.verma(A, w)
            ch = M.graded_character(weights)
            assert ch.total_dim(by_label) == A.BV.total_dim * w.dim


def test_decompose_delta_on_simple_character(sweedler, sweedler_tables):
    K, A, weights = sweedler
    _, l_table, _, _ = sweedler_tables
    for w in weights:
        for shift in (-1, 0, 2):
            ch = l_table[w.label].shifted(shift)
            p = rt.decompose_in_basis(ch, l_table, top=True)
            assert p.polys == {w.label: {shift: 1}}


def test_verma_decomposition_nonnegative(sweedler_tables, sweedler):
    K, A, weights = sweedler
    m_table, l_table, _, _ = sweedler_tables
    for w in weights:
        p = rt.decompose_in_basis(m_table[w.label], l_table, top=True)
        assert p.all_nonnegative()


def test_composition_series_oracle_sweedler(sweedler, sweedler_tables):
    # radical layers + graded Hom counts must reproduce the decomposition
    # polynomials of the standard modules
    K, A, weights = sweedler
    m_table, l_table, m_modules, l_modules = sweedler_tables
    alg = rt.u_struct_algebra(A)
    rad_elems = rt.u_radical_homogeneous(A, alg)
    for w in weights:
        p = rt.decompose_in_basis(m_table[w.label], l_table, top=True)
        layers = _radical_layers(A, m_modules[w.label], rad_elems, alg)
        counted = {}
        for layer in layers:
            for w2 in weights:
                L2 = l_modules[w2.label]
                for shift in range(-4, 5):
                    m = rt.graded_hom_dim(A, L2.shift(shift), layer)
                    if m:
                        counted[(w2.label, shift)] = \
                            counted.get((w2.label, shift), 0) + m
        expect = {(lab, s): c for lab, poly in p.polys.items()
                  for s, c in poly.items()}
        assert counted == expect


def _radical_layers(A, M, rad_elems, alg):
    layers = []
    current = M
    for _ in range(10):
        hd = rt.module_head_by_radical(A, current, rad_elems, alg)
        layers.append(hd)
        nxt = _radical_submodule(A, current, rad_elems)
        if nxt is None:
            break
        current = nxt
    return layers


def _radical_submodule(A, M, rad_elems):
    from trideco.semisimple import _col_reduce
    bases = {}
    comps = {}
    for d in M.degrees():
        cols = []
        for u in rad_elems:
            mat, deg = M.act_u_elem(u, d)
            if mat is None:
                continue
            for c in range(mat.cols):
                col = mat.col(c)
                if any(not v.is_zero() for v in col):
                    cols.append((deg, col))
        for deg, col in cols:
            bases.setdefault(deg, []).append(col)
    real = {}
    for d, cols in bases.items():
        dim = M.dim_at(d)
        span = Matrix(dim, len(cols), [cols[j][r] for r in range(dim)
                                       for j in range(len(cols))])
        span, _ = _col_reduce(span)
        if span.cols:
            real[d] = span
    if not real:
        return None
    x_act, y_act, h_act = {}, {}, {}
    comps = {d: b.cols for d, b in real.items()}
    for d, b in real.items():
        for i in range(A.V.dim):
            if (d - 1) in real:
                sol = real[d - 1].solve(M.act_x(i, d) * b)
                x_act[(i, d)] = sol
        for j in range(A.oV.dim):
            if (d + 1) in real:
                sol = real[d + 1].solve(M.act_y(j, d) * b)
                y_act[(j, d)] = sol
        for h in range(A.H.dim):
            h_act[(h, d)] = real[d].solve(M.act_h(h, d) * b)
    return rt.GradedModule(A, comps, x_act, y_act, h_act, label="rad")


def test_bgg_reciprocity_sweedler(sweedler, sweedler_tables):
    K, A, weights = sweedler
    m_table, l_table, _, _ = sweedler_tables
    chars, p_table = rt.bgg_projective_characters(A, weights, m_table,
                                                  l_table)
    by_label = {w.label: w for w in weights}
    total = 0
    for w in weights:
        dim_p = chars[w.label].total_dim(by_label)
        dim_l = l_table[w.label].total_dim(by_label)
        total += dim_p * dim_l
    assert total == A.dim == 16


def test_bgg_matches_explicit_covers_sweedler(sweedler, sweedler_tables):
    K, A, weights = sweedler
    m_table, l_table, _, _ = sweedler_tables
    chars, p_table = rt.bgg_projective_characters(A, weights, m_table,
                                                  l_table)
    for w in weights:
        cover = rt.projective_cover(A, w, weights, l_table)
        assert cover.graded_character(weights) == chars[w.label]


def test_standard_projective_iff_simple(sweedler, sweedler_tables):
    K, A, weights = sweedler
    m_table, l_table, _, _ = sweedler_tables
    chars, _ = rt.bgg_projective_characters(A, weights, m_table, l_table)
    for w in weights:
        simple = m_table[w.label] == l_table[w.label]
        projective = chars[w.label] == m_table[w.label]
        assert simple == projective


def test_dual_verma_lemma_sweedler(sweedler, sweedler_tables):
    K, A, weights = sweedler
    m_table, l_table, m_modules, _ = sweedler_tables
    from trideco.nichols import top_data
    _, _, _, lam_v_mats = top_data(A.BV)
    for w in weights:
        dual = rt.dual_module(A, m_modules[w.label])
        rt.check_graded_module(dual)
        # lambda_V (x) w, then the dual weight
        prod = rt.weight_tensor(A.H, rt.Weight("lv", lam_v_mats), w)
        dual_mats = rt.weight_dual(
            A.H, rt.Weight("t", prod))
        target = rt.weight_module_of_matrices(weights, dual_mats)
        assert target is not None
        assert dual.graded_character(weights) == m_table[target.label]
        iso = rt.find_graded_isomorphism(A, dual,
                                         rt.verma(A, target))
        assert iso is not None


def test_tensor_lemma_sweedler(sweedler, sweedler_tables):
    K, A, weights = sweedler
    _, _, m_modules, _ = sweedler_tables
    tensor_table = rt.build_tensor_table(A.H, weights)
    by_label = {w.label: w for w in weights}
    for wl in weights[:2]:
        W = rt.coverma(A, wl)
        for wm in weights[:2]:
            M = m_modules[wm.label]
            T = rt.tensor_module(A, W, M)
            rt.check_graded_module(T)
            prod_mats = rt.weight_tensor(A.H, wl, wm)
            mults = rt.decompose_h_module(weights, prod_mats)
            expect = rt.GradedCharacter()
            for lab, m in mults.items():
                ind_ch = rt.induced_module(A, by_label[lab]) \
                    .graded_character(weights)
                for key, v in ind_ch.data.items():
                    expect.add(key[0], key[1], v * m)
            assert T.graded_character(weights) == expect


def test_rigid_modules_sweedler(sweedler, sweedler_tables):
    K, A, weights = sweedler
    _, _, _, l_modules = sweedler_tables
    crit = rt.rigid_weights_by_criterion(A, K, weights, field_order=2)
    scan = rt.rigid_weights_by_head_scan(A, weights, l_modules)
    assert sorted(w.label for w in crit) == sorted(w.label for w in scan)
    assert len(crit) == 2


def test_rigid_modules_taft3(taft3, taft3_tables):
    K, A, weights = taft3
    _, _, _, l_modules = taft3_tables
    crit = rt.rigid_weights_by_criterion(A, K, weights, field_order=3)
    scan = rt.rigid_weights_by_head_scan(A, weights, l_modules)
    assert sorted(w.label for w in crit) == sorted(w.label for w in scan)
    assert len(crit) == 3


def test_trivial_weight_is_rigid(sweedler, sweedler_tables):
    K, A, weights = sweedler
    _, _, _, l_modules = sweedler_tables
    triv = rt.trivial_weight(weights, A.H)
    scan = rt.rigid_weights_by_head_scan(A, weights, l_modules)
    assert triv.label in [w.label for w in scan]


def test_grouplikes_of_group_algebra():
    K = group_algebra(cyclic_table(3))
    gl = rt.grouplikes(K, field_order=3)
    assert len(gl) == 3
    # each group-like is a single group basis element
    for g in gl:
        assert len(g) == 1 and list(g.values())[0].is_one()


def test_grouplikes_of_dual_z2():
    from trideco.hopf import dual_hopf
    K = group_algebra(cyclic_table(2))
    gl = rt.grouplikes(dual_hopf(K), field_order=2)
    assert len(gl) == 2


def test_not_semisimple_detected():
    # the 4-dim bosonization of the sign module over kZ/2 is not semisimple
    K, Q, V = sweedler_tower()
    A = build_u(Q, V, 6)
    from trideco.bosonization import bosonization
    boson = bosonization(A.BV, group_algebra(cyclic_table(2)))
    with pytest.raises(NotSemisimple):
        rt.normalized_integral(boson)
