"""Graded representation theory of the triangular Hopf algebra.

Weights are the simple modules of the (semisimple, split) middle Hopf
algebra; Verma modules are induced from weights inflated through the positive
part, their simple heads are cut out by exact kernels of the positive action
into the top component, and graded characters live in the free Z[t,t^-1]
module over the weight set.  Decomposition polynomials are obtained by
unitriangular elimination against the character tables of the simples or the
standard modules; projective characters follow from the graded reciprocity
rule for doubles or from the socle of one explicitly split projective cover.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .braided import YDModule
from .cyclotomic import Cyclotomic
from .errors import (BottomNotSimple, BudgetExceeded, FieldNotSplitting,
                     MathInvariantViolation, NotAStable, NotInLattice,
                     NotSemisimple)
from .hopf import FDHopf, is_central
from .linalg import Matrix
from .semisimple import (StructAlgebra, _col_reduce, commutator_ideal,
                         factor_poly, lift_idempotents, min_poly,
                         primitive_idempotents, quotient_algebra,
                         radical_basis, eval_poly)
from .sparsevec import vadd_into, vequal
from .triangular import MirrorEngine, TriangularHopf

ONE = Cyclotomic.one(1)
ZERO = Cyclotomic.zero(1)


class Weight:
    """A simple module over the middle Hopf algebra."""

    def __init__(self, label, matrices, field_order=1):
        self.label = label
        self.matrices = matrices
        self.dim = matrices[0].rows if matrices else 1
        self.field_order = field_order
        self.character = tuple(m.trace() for m in matrices)

    def __repr__(self):
        return f"Weight({self.label}, dim={self.dim})"


def _character_key(traces):
    key = []
    for t in traces:
        c = t.canonical()
        key.append((c.order, tuple((q.numerator, q.denominator)
                                   for q in c.coeffs)))
    return tuple(key)


# -- integrals and semisimplicity ----------------------------------------


def normalized_integral(H: FDHopf):
    """Two-sided-normalizable left integral with counit one.

    NotSemisimple when the counit kills the integral space (Maschke).
    """
    rows = []
    for h in range(H.dim):
        lh = H.left_mult_matrix({h: ONE})
        eh = Matrix.identity(H.dim).scale(H.counit[h])
        diff = lh - eh
        for r in range(H.dim):
            rows.append(diff.row(r))
    m = Matrix.from_rows(rows)
    kern = m.kernel_basis()
    if kern.cols != 1:
        raise MathInvariantViolation("left integral space is not a line")
    t = {i: kern[i, 0] for i in range(H.dim) if not kern[i, 0].is_zero()}
    eps = H.counit_elem(t)
    if eps.is_zero():
        raise NotSemisimple("counit vanishes on the integral")
    inv = eps.inverse()
    return {i: inv * c for i, c in t.items()}


# -- module splitting ------------------------------------------------------


class _SubModule:
    """A submodule of the regular module, by a column-span basis."""

    def __init__(self, H, basis: Matrix):
        self.H = H
        self.basis = basis
        self.dim = basis.cols
        self._acts = None

    def action(self, h):
        if self._acts is None:
            self._acts = {}
        if h not in self._acts:
            lh = self.H.left_mult_matrix({h: ONE})
            img = lh * self.basis
            coords = self.basis.solve(img)
            if coords is None:
                raise MathInvariantViolation("submodule is not stable")
            self._acts[h] = coords
        return self._acts[h]


def _end_basis(H, sub: _SubModule):
    """Degreeless endomorphism algebra of a submodule, as matrices."""
    m = sub.dim
    rows = []
    acts = [sub.action(h) for h in range(H.dim)]
    for act in acts:
        # X act = act X: rows indexed by (r, c) of the commutator
        for r in range(m):
            for c in range(m):
                row = [ZERO] * (m * m)
                for k in range(m):
                    row[r * m + k] = row[r * m + k] + act[k, c]
                    row[k * m + c] = row[k * m + c] - act[r, k]
                rows.append(row)
    kern = Matrix.from_rows(rows).kernel_basis()
    out = []
    for j in range(kern.cols):
        out.append(Matrix(m, m, [kern[r * m + c, j]
                                 for r in range(m) for c in range(m)]))
    return out


def _split_by_operator(H, sub: _SubModule, op: Matrix, field_order):
    mp = min_poly(op)
    if len(mp) <= 2:
        return None
    factors = factor_poly(mp, field_order)
    if len(factors) < 2:
        return None
    pieces = []
    for f, mult in factors:
        power = [ONE]
        for _ in range(mult):
            power = _poly_mul(power, f)
        mat = eval_poly(power, op)
        kern = mat.kernel_basis()
        pieces.append(sub.basis * kern)
    return [ _SubModule(H, p) for p in pieces ]


def _poly_mul(a, b):
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return out


def split_into_simples(H: FDHopf, field_order: int):
    """Exact decomposition of the left regular module into simples."""
    work = [_SubModule(H, Matrix.identity(H.dim))]
    simples = []
    while work:
        sub = work.pop()
        if sub.dim == 1:
            simples.append(sub)
            continue
        split = None
        # candidates: restrictions of right multiplications
        for h in range(H.dim):
            rh = _right_mult_matrix(H, h)
            img = rh * sub.basis
            coords = sub.basis.solve(img)
            if coords is None:
                continue
            split = _split_by_operator(H, sub, coords, field_order)
            if split:
                break
        if split is None:
            ends = _end_basis(H, sub)
            if len(ends) == 1:
                simples.append(sub)
                continue
            candidates = list(ends)
            for e1 in ends:
                for e2 in ends:
                    candidates.append(e1 * e2)
                    candidates.append(e1 + e2)
            for e in candidates:
                split = _split_by_operator(H, sub, e, field_order)
                if split:
                    break
            if split is None:
                raise FieldNotSplitting(
                    "endomorphisms refuse to split over the working field")
        work.extend(split)
    return simples


def _right_mult_matrix(H, h):
    cols = [H.multiply({j: ONE}, {h: ONE}) for j in range(H.dim)]
    return Matrix(H.dim, H.dim, [cols[j].get(i, ZERO)
                                 for i in range(H.dim) for j in range(H.dim)])


def enumerate_weights(H: FDHopf, field_order: int = 1):
    """Pairwise non-isomorphic simple H-modules with sum of dim^2 = dim H."""
    normalized_integral(H)  # semisimplicity gate
    simples = split_into_simples(H, field_order)
    seen = {}
    for sub in simples:
        mats = [sub.action(h) for h in range(H.dim)]
        key = _character_key([m.trace() for m in mats])
        if key not in seen:
            seen[key] = mats
    ordered = sorted(seen.items(), key=lambda kv: (kv[1][0].rows, kv[0]))
    weights = [Weight(f"w{idx}", mats, field_order)
               for idx, (_, mats) in enumerate(ordered)]
    if sum(w.dim * w.dim for w in weights) != H.dim:
        raise FieldNotSplitting(
            "squared dimensions do not add up to dim H")
    return weights


def trivial_weight(weights, H):
    for w in weights:
        if w.dim == 1 and all(w.matrices[h][0, 0] == H.counit[h]
                              for h in range(H.dim)):
            return w
    raise MathInvariantViolation("counit weight is missing")


def weight_module_of_matrices(weights, mats):
    """Identify the weight isomorphic to a simple module via its character."""
    key = _character_key([m.trace() for m in mats])
    for w in weights:
        if _character_key(list(w.character)) == key:
            return w
    return None


def decompose_h_module(weights, mats):
    """Multiplicities of each weight in an H-module, by character solve."""
    dim = mats[0].rows if mats else 0
    if dim == 0:
        return {}
    traces = [m.trace() for m in mats]
    cols = len(weights)
    ents = []
    for h in range(len(mats)):
        for w in weights:
            ents.append(w.character[h])
    system = Matrix(len(mats), cols, ents)
    rhs = Matrix.column(traces)
    sol = system.solve(rhs)
    if sol is None:
        raise MathInvariantViolation("module character outside weight span")
    out = {}
    for j, w in enumerate(weights):
        c = sol[j, 0]
        if not c.is_zero():
            assert c.is_rational() and c.rational_value.denominator == 1
            out[w.label] = int(c.rational_value)
    return out


# -- graded modules ---------------------------------------------------------


class GradedModule:
    """Graded module over the triangular algebra with generator actions.

    components: dict degree -> dimension; the actions are x_full[i][d]
    (degree d -> d-1), y_full[j][d] (d -> d+1), h_full[h][d] (d -> d).
    """

    def __init__(self, A: TriangularHopf, components, x_act, y_act, h_act,
                 label=""):
        self.A = A
        self.components = dict(components)
        self.x_act = x_act
        self.y_act = y_act
        self.h_act = h_act
        self.label = label

    def degrees(self):
        return sorted(d for d, dim in self.components.items() if dim > 0)

    def dim_at(self, d):
        return self.components.get(d, 0)

    @property
    def total_dim(self):
        return sum(self.components.values())

    def act_x(self, i, d):
        return self.x_act.get((i, d)) or Matrix.zero(self.dim_at(d - 1),
                                                     self.dim_at(d))

    def act_y(self, j, d):
        return self.y_act.get((j, d)) or Matrix.zero(self.dim_at(d + 1),
                                                     self.dim_at(d))

    def act_h(self, h, d):
        return self.h_act.get((h, d)) or Matrix.zero(self.dim_at(d),
                                                     self.dim_at(d))

    def act_h_elem(self, h_sparse, d):
        out = Matrix.zero(self.dim_at(d), self.dim_at(d))
        for h, c in h_sparse.items():
            out = out + self.act_h(h, d).scale(c)
        return out

    def h_matrices_at(self, d):
        return [self.act_h(h, d) for h in range(self.A.H.dim)]

    def act_triple(self, t, d):
        """Action of a basis triple of u from degree d; (matrix, out_degree)."""
        A = self.A
        bm, h, bp = A.triple_of(t)
        xw = A._bv_word(bm)
        yw = A._bov_word(bp)
        cur = Matrix.identity(self.dim_at(d))
        deg = d
        for j in reversed(yw):
            cur = self.act_y(j, deg) * cur
            deg += 1
        cur = self.act_h(h, deg) * cur
        for i in reversed(xw):
            cur = self.act_x(i, deg) * cur
            deg -= 1
        return cur, deg

    def act_u_elem(self, u, d):
        """Action of a homogeneous element of u from degree d."""
        out = None
        deg_out = None
        for t, c in u.items():
            mat, deg = self.act_triple(t, d)
            if out is None:
                out = mat.scale(c)
                deg_out = deg
            else:
                assert deg == deg_out, "inhomogeneous element"
                out = out + mat.scale(c)
        return out, deg_out

    def graded_character(self, weights):
        ch = GradedCharacter()
        for d in self.degrees():
            mults = decompose_h_module(weights, self.h_matrices_at(d))
            for label, m in mults.items():
                ch.add(label, d, m)
        return ch

    def shift(self, i):
        """The same module with grading shifted: (M[i])_n = M_{n-i}."""
        comps = {d + i: dim for d, dim in self.components.items()}
        x_act = {(g, d + i): m for (g, d), m in self.x_act.items()}
        y_act = {(g, d + i): m for (g, d), m in self.y_act.items()}
        h_act = {(g, d + i): m for (g, d), m in self.h_act.items()}
        return GradedModule(self.A, comps, x_act, y_act, h_act,
                            label=f"{self.label}[{i}]")


def check_graded_module(M: GradedModule):
    """All defining relations of the algebra hold on every component."""
    A = M.A
    H = A.H
    degrees = M.degrees()
    for d in degrees:
        dim = M.dim_at(d)
        ident = Matrix.identity(dim)
        unit_act = M.act_h_elem(H.unit, d)
        if unit_act != ident:
            raise MathInvariantViolation("unit acts incorrectly")
        for h1 in range(H.dim):
            for h2 in range(H.dim):
                lhs = M.act_h(h1, d) * M.act_h(h2, d)
                rhs = M.act_h_elem(H.mult[h1][h2], d)
                if lhs != rhs:
                    raise MathInvariantViolation("H-action not multiplicative")
    for d in degrees:
        for h in range(H.dim):
            for i in range(A.V.dim):
                lhs = M.act_h(h, d - 1) * M.act_x(i, d)
                rhs = Matrix.zero(M.dim_at(d - 1), M.dim_at(d))
                for (xw, b, _), c in A._hx_rule(h, i).items():
                    rhs = rhs + (M.act_x(xw[0], d) *
                                 M.act_h(b, d)).scale(c)
                if lhs != rhs:
                    raise MathInvariantViolation("h-x commutation fails")
            for j in range(A.oV.dim):
                lhs = M.act_h(h, d + 1) * M.act_y(j, d)
                rhs = Matrix.zero(M.dim_at(d + 1), M.dim_at(d))
                for (a, b, s) in H.comult[h]:
                    col = A.oV.action[a].col(j)
                    for k, v in enumerate(col):
                        if not v.is_zero():
                            rhs = rhs + (M.act_y(k, d) *
                                         M.act_h(b, d)).scale(s * v)
                if lhs != rhs:
                    raise MathInvariantViolation("h-y commutation fails")
        for j in range(A.oV.dim):
            for i in range(A.V.dim):
                lhs = M.act_y(j, d - 1) * M.act_x(i, d)
                rhs = Matrix.zero(M.dim_at(d), M.dim_at(d))
                for (xw, h, yw), c in A._xy_rule(j, i).items():
                    cur = Matrix.identity(M.dim_at(d))
                    deg = d
                    for jj in reversed(yw):
                        cur = M.act_y(jj, deg) * cur
                        deg += 1
                    cur = M.act_h(h, deg) * cur
                    for ii in reversed(xw):
                        cur = M.act_x(ii, deg) * cur
                        deg -= 1
                    rhs = rhs + cur.scale(c)
                if lhs != rhs:
                    raise MathInvariantViolation("straightening fails")
    # Nichols relations: kernel words act as zero
    _check_nichols_relations(M, negative=True)
    _check_nichols_relations(M, negative=False)
    return True


def _check_nichols_relations(M: GradedModule, negative: bool):
    A = M.A
    B = A.BV if negative else A.BoV
    V = A.V if negative else A.oV
    from .nichols import _unflatten, quantum_symmetrizer
    for p in range(2, B.max_degree() + 2):
        c = B.c
        s = quantum_symmetrizer(c, p, V.dim)
        kern = s.kernel_basis()
        if kern.cols == 0:
            continue
        for d in M.degrees():
            for col in range(kern.cols):
                acc = None
                for flat in range(kern.rows):
                    coeff = kern[flat, col]
                    if coeff.is_zero():
                        continue
                    word = _unflatten(flat, V.dim, p)
                    cur = Matrix.identity(M.dim_at(d))
                    deg = d
                    for letter in reversed(word):
                        if negative:
                            cur = M.act_x(letter, deg) * cur
                            deg -= 1
                        else:
                            cur = M.act_y(letter, deg) * cur
                            deg += 1
                    acc = cur.scale(coeff) if acc is None else \
                        acc + cur.scale(coeff)
                if acc is not None and not acc.is_zero():
                    raise MathInvariantViolation(
                        "Nichols relation does not annihilate the module")


class GradedCharacter:
    """Finitely supported map (weight label, degree) -> integer."""

    def __init__(self, data=None):
        self.data = dict(data or {})

    def add(self, label, degree, mult):
        key = (label, degree)
        self.data[key] = self.data.get(key, 0) + mult
        if self.data[key] == 0:
            del self.data[key]

    def __eq__(self, other):
        return self.data == other.data

    def copy(self):
        return GradedCharacter(self.data)

    def is_zero(self):
        return not self.data

    def max_degree(self):
        return max(d for (_, d) in self.data)

    def min_degree(self):
        return min(d for (_, d) in self.data)

    def at_degree(self, d):
        return {lab: m for (lab, dd), m in self.data.items() if dd == d}

    def subtract_shifted(self, other: "GradedCharacter", shift, coeff):
        for (lab, d), m in other.data.items():
            self.add(lab, d + shift, -coeff * m)

    def total_dim(self, weights_by_label):
        return sum(m * weights_by_label[lab].dim
                   for (lab, _), m in self.data.items())

    def shifted(self, i):
        return GradedCharacter({(lab, d + i): m
                                for (lab, d), m in self.data.items()})

    def plus(self, other, coeff=1):
        out = self.copy()
        for (lab, d), m in other.data.items():
            out.add(lab, d, coeff * m)
        return out

    def mul_weights(self, other: "GradedCharacter", tensor_table):
        """Product in the weight-ring Laurent polynomials."""
        out = GradedCharacter()
        for (la, da), ma in self.data.items():
            for (lb, db), mb in other.data.items():
                for lc, mc in tensor_table[(la, lb)].items():
                    out.add(lc, da + db, ma * mb * mc)
        return out


class DecompPolynomial:
    """Map weight label -> {shift: integer coefficient}."""

    def __init__(self):
        self.polys = {}

    def add(self, label, shift, coeff):
        p = self.polys.setdefault(label, {})
        p[shift] = p.get(shift, 0) + coeff
        if p[shift] == 0:
            del p[shift]
            if not p:
                del self.polys[label]

    def coefficient(self, label, shift):
        return self.polys.get(label, {}).get(shift, 0)

    def bar(self):
        """t -> t^{-1} on every polynomial."""
        out = DecompPolynomial()
        for lab, p in self.polys.items():
            for s, c in p.items():
                out.add(lab, -s, c)
        return out

    def value_at_one(self, label):
        return sum(self.polys.get(label, {}).values())

    def all_nonnegative(self):
        return all(c >= 0 for p in self.polys.values() for c in p.values())

    def __eq__(self, other):
        return self.polys == other.polys

    def __repr__(self):
        return f"DecompPolynomial({self.polys})"


def decompose_in_basis(ch: GradedCharacter, table, top=True):
    """Unitriangular elimination of a character against a basis table.

    table: dict label -> GradedCharacter whose extreme degree (top or bottom)
    is the pure weight (label, 0).  Raises NotInLattice if elimination leaves
    anything the table cannot reach.
    """
    rest = ch.copy()
    out = DecompPolynomial()
    while not rest.is_zero():
        d = rest.max_degree() if top else rest.min_degree()
        layer = rest.at_degree(d)
        progressed = False
        for lab, mult in sorted(layer.items()):
            if lab not in table:
                raise NotInLattice(f"no basis character for weight {lab}")
            rest.subtract_shifted(table[lab], d, mult)
            out.add(lab, d, mult)
            progressed = True
        if not progressed:
            raise NotInLattice("elimination made no progress")
    return out


# -- standard modules -------------------------------------------------------


def verma(A: TriangularHopf, lam: Weight) -> GradedModule:
    """Standard module induced through the positive part: B(V) (x) lam."""
    H = A.H
    n_top = A.BV.n_top
    comps = {-p: A.BV.hilbert[p] * lam.dim for p in range(n_top + 1)}
    x_act, y_act, h_act = {}, {}, {}
    for p in range(n_top + 1):
        d = -p
        dim_b = A.BV.hilbert[p]
        for h in range(H.dim):
            acc = Matrix.zero(comps[d], comps[d])
            for (a, b, s) in H.comult[h]:
                acc = acc + (A.BV.act_on_component(a, p)
                             .kron(lam.matrices[b])).scale(s)
            h_act[(h, d)] = acc
        if p + 1 <= n_top:
            mm = A.BV.mult_matrix(1, p)
            for i in range(A.V.dim):
                dim_q = A.BV.hilbert[p + 1]
                ents = [ZERO] * (dim_q * dim_b)
                for k in range(dim_q):
                    for b in range(dim_b):
                        ents[k * dim_b + b] = mm[k, i * dim_b + b]
                x_act[(i, d)] = Matrix(dim_q, dim_b, ents) \
                    .kron(Matrix.identity(lam.dim))
        if p >= 1:
            for j in range(A.oV.dim):
                dim_out = A.BV.hilbert[p - 1] * lam.dim
                ents = [ZERO] * (dim_out * comps[d])
                for b in range(dim_b):
                    bg = _bv_global(A, p, b)
                    prod = A.multiply(A.y_elem(j),
                                      {A.triple_index(bg, hh, 0): c
                                       for hh, c in H.unit.items()})
                    for t, c in prod.items():
                        bm, hh, bp = A.triple_of(t)
                        if bp != 0:
                            continue
                        deg_b, loc = A.bv_index[bm]
                        assert deg_b == p - 1
                        lm = lam.matrices[hh]
                        for l2 in range(lam.dim):
                            for l1 in range(lam.dim):
                                v = lm[l2, l1]
                                if not v.is_zero():
                                    r = loc * lam.dim + l2
                                    cc = b * lam.dim + l1
                                    ents[r * comps[d] + cc] = \
                                        ents[r * comps[d] + cc] + c * v
                y_act[(j, d)] = Matrix(dim_out, comps[d], ents)
    return GradedModule(A, comps, x_act, y_act, h_act,
                        label=f"M({lam.label})")


def _bv_global(A, deg, local):
    off = 0
    for dd in range(deg):
        off += A.BV.components[dd].dim
    return off + local


def _bov_global(A, deg, local):
    off = 0
    for dd in range(deg):
        off += A.BoV.components[dd].dim
    return off + local


def coverma(A: TriangularHopf, lam: Weight) -> GradedModule:
    """Costandard-side induction through the negative part: B(oV) (x) lam."""
    H = A.H
    mirror = MirrorEngine(A)
    n_top = A.BoV.n_top
    comps = {q: A.BoV.hilbert[q] * lam.dim for q in range(n_top + 1)}
    x_act, y_act, h_act = {}, {}, {}
    for q in range(n_top + 1):
        d = q
        dim_b = A.BoV.hilbert[q]
        for h in range(H.dim):
            acc = Matrix.zero(comps[d], comps[d])
            for (a, b, s) in H.comult[h]:
                acc = acc + (A.BoV.act_on_component(a, q)
                             .kron(lam.matrices[b])).scale(s)
            h_act[(h, d)] = acc
        if q + 1 <= n_top:
            mm = A.BoV.mult_matrix(1, q)
            for j in range(A.oV.dim):
                dim_out = A.BoV.hilbert[q + 1]
                ents = [ZERO] * (dim_out * dim_b)
                for k in range(dim_out):
                    for b in range(dim_b):
                        ents[k * dim_b + b] = mm[k, j * dim_b + b]
                y_act[(j, d)] = Matrix(dim_out, dim_b, ents) \
                    .kron(Matrix.identity(lam.dim))
        if q >= 1:
            comp = A.BoV.component(q - 1)
            from .nichols import _flatten
            for i in range(A.V.dim):
                dim_out = A.BoV.hilbert[q - 1] * lam.dim
                ents = [ZERO] * (dim_out * comps[d])
                for b in range(dim_b):
                    word = _bov_word_of(A, q, b)
                    for hu, cu in H.unit.items():
                        for hu2, cu2 in H.unit.items():
                            prod = mirror.mono_mul(((), hu, (i,)),
                                                   (word, hu2, ()))
                            for (yw, hh, xw), c in prod.items():
                                if xw:
                                    continue
                                fy = _flatten(yw, A.oV.dim)
                                for loc in range(comp.dim):
                                    pc = comp.projection[loc, fy]
                                    if pc.is_zero():
                                        continue
                                    lm = lam.matrices[hh]
                                    for l2 in range(lam.dim):
                                        for l1 in range(lam.dim):
                                            v = lm[l2, l1]
                                            if v.is_zero():
                                                continue
                                            r = loc * lam.dim + l2
                                            ccol = b * lam.dim + l1
                                            ents[r * comps[d] + ccol] = \
                                                ents[r * comps[d] + ccol] + \
                                                cu * cu2 * c * pc * v
                x_act[(i, d)] = Matrix(dim_out, comps[d], ents)
    return GradedModule(A, comps, x_act, y_act, h_act,
                        label=f"W({lam.label})")


def _bov_word_of(A, deg, local):
    from .nichols import _unflatten
    return _unflatten(A.BoV.component(deg).words[local], A.oV.dim, deg)


def inflate_weight(A: TriangularHopf, lam: Weight, degree=0) -> GradedModule:
    """The weight as a graded module concentrated in one degree."""
    comps = {degree: lam.dim}
    h_act = {(h, degree): lam.matrices[h] for h in range(A.H.dim)}
    return GradedModule(A, comps, {}, {}, h_act, label=f"{lam.label}")


def head(A: TriangularHopf, M: GradedModule, check_stable=True):
    """The simple head: quotient by the kernel of the positive action into
    the top component."""
    degrees = M.degrees()
    top = max(degrees)
    sub_bases = {}
    for d in degrees:
        if d == top:
            continue
        p = top - d
        rows = []
        words = _words(A.oV.dim, p)
        for word in words:
            cur = Matrix.identity(M.dim_at(d))
            deg = d
            for j in reversed(word):
                cur = M.act_y(j, deg) * cur
                deg += 1
            rows.extend(cur.row(r) for r in range(cur.rows))
        stacked = Matrix.from_rows(rows) if rows else \
            Matrix.zero(0, M.dim_at(d))
        sub_bases[d] = stacked.kernel_basis()
    if check_stable:
        _assert_stable(A, M, sub_bases)
    comps = {}
    projs = {}
    secs = {}
    for d in degrees:
        kern = sub_bases.get(d)
        if kern is None or kern.cols == 0:
            dim = M.dim_at(d)
            comps[d] = dim
            projs[d] = Matrix.identity(dim)
            secs[d] = Matrix.identity(dim)
            continue
        proj, sec, dim = _quotient_maps(kern, M.dim_at(d))
        if dim:
            comps[d] = dim
            projs[d] = proj
            secs[d] = sec
    x_act, y_act, h_act = {}, {}, {}
    for d in comps:
        for i in range(A.V.dim):
            if (d - 1) in comps:
                x_act[(i, d)] = projs[d - 1] * M.act_x(i, d) * secs[d]
        for j in range(A.oV.dim):
            if (d + 1) in comps:
                y_act[(j, d)] = projs[d + 1] * M.act_y(j, d) * secs[d]
        for h in range(A.H.dim):
            h_act[(h, d)] = projs[d] * M.act_h(h, d) * secs[d]
    return GradedModule(A, comps, x_act, y_act, h_act,
                        label=f"L{M.label[1:]}" if M.label else "L")


def _words(alphabet, length):
    if length == 0:
        return [()]
    shorter = _words(alphabet, length - 1)
    return [w + (a,) for w in shorter for a in range(alphabet)]


def _assert_stable(A, M, sub_bases):
    degrees = M.degrees()
    top = max(degrees)
    for d, kern in sub_bases.items():
        if kern.cols == 0:
            continue
        for i in range(A.V.dim):
            img = M.act_x(i, d) * kern
            tgt = sub_bases.get(d - 1)
            if d - 1 < min(degrees):
                if not img.is_zero():
                    raise NotAStable("x pushes the submodule below the module")
                continue
            if tgt is None or (tgt.cols == 0 and not img.is_zero()):
                raise NotAStable("maximal submodule is not x-stable")
            if tgt.cols and tgt.solve(img) is None:
                raise NotAStable("maximal submodule is not x-stable")
        for j in range(A.oV.dim):
            img = M.act_y(j, d) * kern
            if d + 1 > top:
                if not img.is_zero():
                    raise NotAStable("y pushes above the top")
                continue
            tgt = sub_bases.get(d + 1)
            if d + 1 == top:
                if not img.is_zero():
                    raise NotAStable("maximal submodule hits the top")
                continue
            if tgt is None or (tgt.cols == 0 and not img.is_zero()):
                raise NotAStable("maximal submodule is not y-stable")
            if tgt.cols and tgt.solve(img) is None:
                raise NotAStable("maximal submodule is not y-stable")
        for h in range(A.H.dim):
            img = M.act_h(h, d) * kern
            if kern.solve(img) is None:
                raise NotAStable("maximal submodule is not H-stable")


def _quotient_maps(kern: Matrix, dim):
    reduced, pivots = kern.transpose().rref()
    pivset = set(pivots)
    free = [c for c in range(dim) if c not in pivset]
    m = len(free)
    proj = [ZERO] * (m * dim)
    for jj, fc in enumerate(free):
        proj[jj * dim + fc] = ONE
        for r, pc in enumerate(pivots):
            c = reduced[r, fc]
            if not c.is_zero():
                proj[jj * dim + pc] = -c
    sec = [ZERO] * (dim * m)
    for jj, fc in enumerate(free):
        sec[fc * m + jj] = ONE
    return Matrix(m, dim, proj), Matrix(dim, m, sec), m


def lowest_weight(A: TriangularHopf, L: GradedModule, weights):
    """The weight of the bottom component and its degree."""
    bottom = min(L.degrees())
    mats = L.h_matrices_at(bottom)
    w = weight_module_of_matrices(weights, mats)
    if w is None or w.dim != L.dim_at(bottom):
        raise BottomNotSimple(
            "bottom component is not a simple weight")
    return w, bottom


# -- duality and tensor products ---------------------------------------------


def dual_module(A: TriangularHopf, M: GradedModule,
                recenter=True) -> GradedModule:
    """Contragredient module with the grading reversed.

    With recenter the reversed grading is translated back onto the support
    of M ((M*)_n = (M_{s-n})* with s = min + max degree), which makes the
    duality exactly involutive and gives the graded form of the standard
    module duality without an extra shift; recenter=False is the plain
    reversal (M*)_n = (M_{-n})*.
    """
    sx, sy = A.antipode_generators()
    degs = M.degrees()
    s = (min(degs) + max(degs)) if (recenter and degs) else 0
    comps = {s - d: dim for d, dim in M.components.items()}
    x_act, y_act, h_act = {}, {}, {}
    for d in M.degrees():
        for i in range(A.V.dim):
            mat, deg = M.act_u_elem(sx[i], d)
            if mat is not None and mat.rows and mat.cols:
                # transpose of M_{d} -> M_{d-1} acts (M*)_{s-d+1} -> (M*)_{s-d}
                assert deg == d - 1
                x_act[(i, s - deg)] = mat.transpose()
        for j in range(A.oV.dim):
            mat, deg = M.act_u_elem(sy[j], d)
            if mat is not None and mat.rows and mat.cols:
                assert deg == d + 1
                y_act[(j, s - deg)] = mat.transpose()
        for h in range(A.H.dim):
            sh = A.H.antipode_elem({h: ONE})
            h_act[(h, s - d)] = M.act_h_elem(sh, d).transpose()
    return GradedModule(A, comps, x_act, y_act, h_act,
                        label=f"({M.label})*")


def tensor_module(A: TriangularHopf, M: GradedModule,
                  N: GradedModule) -> GradedModule:
    """Diagonal action through the coproduct on generators."""
    pairs = [(a, b) for a in M.degrees() for b in N.degrees()]
    comps = {}
    offsets = {}
    for a, b in pairs:
        d = a + b
        offsets[(a, b)] = comps.get(d, 0)
        comps[d] = comps.get(d, 0) + M.dim_at(a) * N.dim_at(b)
    x_act, y_act, h_act = {}, {}, {}

    def _add_block(store, key, d_src, d_tgt, a_src, b_src, a_tgt, b_tgt, mat):
        if mat.is_zero():
            return
        big = store.get(key)
        if big is None:
            big = Matrix.zero(comps.get(d_tgt, 0), comps.get(d_src, 0))
        ro = offsets[(a_tgt, b_tgt)]
        co = offsets[(a_src, b_src)]
        ents = big.entries
        for r, c, v in mat.nonzero_items():
            idx = (ro + r) * big.cols + (co + c)
            ents[idx] = ents[idx] + v
        store[key] = Matrix(big.rows, big.cols, ents)
        return

    for a, b in pairs:
        d = a + b
        dm, dn = M.dim_at(a), N.dim_at(b)
        eye_m, eye_n = Matrix.identity(dm), Matrix.identity(dn)
        for h in range(A.H.dim):
            acc = Matrix.zero(dm * dn, dm * dn)
            for (p, q, s) in A.H.comult[h]:
                acc = acc + (M.act_h(p, a).kron(N.act_h(q, b))).scale(s)
            _add_block(h_act, (h, d), d, d, a, b, a, b, acc)
        for i in range(A.V.dim):
            # x (x) 1 part
            if (a - 1) in M.components:
                _add_block(x_act, (i, d), d, d - 1, a, b, a - 1, b,
                           M.act_x(i, a).kron(eye_n))
            # x_{-1} (x) x_0 part
            for (f, i0, s) in A.V.coaction[i]:
                if (b - 1) in N.components:
                    _add_block(x_act, (i, d), d, d - 1, a, b, a, b - 1,
                               (M.act_h(f, a).kron(N.act_x(i0, b))).scale(s))
        for j in range(A.oV.dim):
            if (a + 1) in M.components:
                _add_block(y_act, (j, d), d, d + 1, a, b, a + 1, b,
                           M.act_y(j, a).kron(eye_n))
            for (g, j0, s) in A.oV.coaction[j]:
                if (b + 1) in N.components:
                    _add_block(y_act, (j, d), d, d + 1, a, b, a, b + 1,
                               (M.act_h(g, a).kron(N.act_y(j0, b))).scale(s))
    return GradedModule(A, comps, x_act, y_act, h_act,
                        label=f"{M.label}(x){N.label}")


def induced_module(A: TriangularHopf, lam: Weight) -> GradedModule:
    """Ind(lam) = A (x)_H lam on the basis B(V) (x) B(oV) (x) lam."""
    H = A.H
    nv, no = A.BV.n_top, A.BoV.n_top
    index = []
    offsets = {}
    comps = {}
    for p in range(nv + 1):
        for q in range(no + 1):
            d = q - p
            for lb in range(A.BV.hilbert[p]):
                for lo in range(A.BoV.hilbert[q]):
                    for lv in range(lam.dim):
                        key = (p, lb, q, lo, lv)
                        offsets[key] = comps.get(d, 0)
                        index.append(key)
                        comps[d] = comps.get(d, 0) + 1

    def reduce_to_basis(uelem, lvec_idx, acc, scale, d_target):
        # class of (b-, h, b+) (x) v: move h right past b+ and into lam
        for t, c in uelem.items():
            bm, h, bp = A.triple_of(t)
            p, lb = A.bv_index[bm]
            q, lo = A.bov_index[bp]
            # h * b+ = sum (h_1 . b+) h_2
            for (h1, h2, s) in H.comult[h]:
                moved = A.BoV.act_on_component(h1, q)
                lm = lam.matrices[h2]
                for lo2 in range(A.BoV.hilbert[q]):
                    mv = moved[lo2, lo]
                    if mv.is_zero():
                        continue
                    for l2 in range(lam.dim):
                        v = lm[l2, lvec_idx]
                        if v.is_zero():
                            continue
                        key = (p, lb, q, lo2, l2)
                        row = offsets[key]
                        vadd_into(acc, {(q - p, row): scale * c * s * mv * v})

    x_act, y_act, h_act = {}, {}, {}
    gens = [("x", i, A.x_elem(i), -1) for i in range(A.V.dim)]
    gens += [("y", j, A.y_elem(j), +1) for j in range(A.oV.dim)]
    gens += [("h", h, {A.triple_index(0, h, 0): ONE}, 0)
             for h in range(H.dim)]
    mats = {}
    for kind, gidx, gelem, shift in gens:
        for key in index:
            p, lb, q, lo, lv = key
            d = q - p
            src = offsets[key]
            base = {A.triple_index(_bv_global(A, p, lb), hh,
                                   _bov_global(A, q, lo)): cc
                    for hh, cc in H.unit.items()}
            prod = A.multiply(gelem, base)
            acc = {}
            reduce_to_basis(prod, lv, acc, ONE, d + shift)
            for (dd, row), c in acc.items():
                assert dd == d + shift
                mats.setdefault((kind, gidx, d), {})[(row, src)] = c
    for (kind, gidx, d), entries in mats.items():
        tgt = d + {"x": -1, "y": 1, "h": 0}[kind]
        m = Matrix.zero(comps.get(tgt, 0), comps.get(d, 0))
        ents = m.entries
        for (r, c), v in entries.items():
            ents[r * m.cols + c] = v
        m = Matrix(m.rows, m.cols, ents)
        store = {"x": x_act, "y": y_act, "h": h_act}[kind]
        store[(gidx, d)] = m
    return GradedModule(A, comps, x_act, y_act, h_act,
                        label=f"Ind({lam.label})")


# -- algebra-of-u utilities and projective covers ------------------------


def u_struct_algebra(A: TriangularHopf) -> StructAlgebra:
    """The triangular algebra as bare structure constants."""
    mult = [[A.pair_product(i, j) for j in range(A.dim)]
            for i in range(A.dim)]
    return StructAlgebra(A.dim, mult, A.unit(),
                         field_order=_field_order_of(A))


def _field_order_of(A):
    order = A.H.antipode.order
    for row in A.H.mult:
        for cell in row:
            for c in cell.values():
                order = order * c.order // math.gcd(order, c.order)
    for mats in (A.V.action, A.oV.action):
        for m in mats:
            order = order * m.order // math.gcd(order, m.order)
    return order


def u_radical_homogeneous(A: TriangularHopf, alg: StructAlgebra):
    """Radical of u split into homogeneous elements (graded ideal)."""
    rad = radical_basis(alg)
    out = []
    for j in range(rad.cols):
        by_degree = {}
        for t in range(A.dim):
            c = rad[t, j]
            if not c.is_zero():
                by_degree.setdefault(A.degree(t), {})[t] = c
        out.extend(by_degree.values())
    # column-reduce the homogeneous pieces to drop duplicates
    if not out:
        return []
    m = Matrix(A.dim, len(out), [out[j].get(r, ZERO)
                                 for r in range(A.dim)
                                 for j in range(len(out))])
    reduced, _ = _col_reduce(m)
    return [{r: reduced[r, j] for r in range(A.dim)
             if not reduced[r, j].is_zero()}
            for j in range(reduced.cols)]


def graded_end_basis(M: GradedModule):
    """Degree-preserving endomorphisms commuting with all generators."""
    A = M.A
    degrees = M.degrees()
    slots = [(d, M.dim_at(d)) for d in degrees]
    offsets = {}
    total = 0
    for d, dim in slots:
        offsets[d] = total
        total += dim * dim
    rows = []

    def add_commutator_rows(src, tgt, act):
        # act X_src = X_tgt act
        dim_s = M.dim_at(src)
        dim_t = M.dim_at(tgt)
        if dim_s == 0 or dim_t == 0:
            return
        for r in range(dim_t):
            for c in range(dim_s):
                row = [ZERO] * total
                for k in range(dim_s):
                    row[offsets[src] + k * dim_s + c] = \
                        row[offsets[src] + k * dim_s + c] + act[r, k]
                for k in range(dim_t):
                    row[offsets[tgt] + r * dim_t + k] = \
                        row[offsets[tgt] + r * dim_t + k] - act[k, c]
                rows.append(row)

    for d in degrees:
        for i in range(A.V.dim):
            if (d - 1) in M.components:
                add_commutator_rows(d, d - 1, M.act_x(i, d))
        for j in range(A.oV.dim):
            if (d + 1) in M.components:
                add_commutator_rows(d, d + 1, M.act_y(j, d))
        for h in range(A.H.dim):
            add_commutator_rows(d, d, M.act_h(h, d))
    kern = Matrix.from_rows(rows).kernel_basis() if rows else \
        Matrix.identity(total)
    out = []
    for j in range(kern.cols):
        blocks = {}
        for d, dim in slots:
            ents = [kern[offsets[d] + r * dim + c, j]
                    for r in range(dim) for c in range(dim)]
            blocks[d] = Matrix(dim, dim, ents)
        out.append(blocks)
    return out


def _end_struct_algebra(M: GradedModule, blocks_list, field_order):
    """Composition algebra of graded endomorphisms as structure constants."""
    n = len(blocks_list)
    degrees = M.degrees()
    total = sum(M.dim_at(d) ** 2 for d in degrees)

    def flatten(blocks):
        out = []
        for d in degrees:
            out.extend(blocks[d].entries)
        return out

    flat_cols = [flatten(b) for b in blocks_list]
    span = Matrix(total, n, [flat_cols[j][r] for r in range(total)
                             for j in range(n)])
    from .hopf import SpanCoords
    coords = SpanCoords(span, "graded endomorphisms")
    mult = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            comp = {d: blocks_list[a][d] * blocks_list[b][d]
                    for d in degrees}
            vec = {r: v for r, v in enumerate(_flatten_blocks(comp, degrees))
                   if not v.is_zero()}
            cs = coords.coords(vec)
            mult[a][b] = {k: c for k, c in enumerate(cs) if not c.is_zero()}
    ident = {d: Matrix.identity(M.dim_at(d)) for d in degrees}
    vec = {r: v for r, v in enumerate(_flatten_blocks(ident, degrees))
           if not v.is_zero()}
    unit = {k: c for k, c in enumerate(coords.coords(vec))
            if not c.is_zero()}
    return StructAlgebra(n, mult, unit, field_order)


def _flatten_blocks(blocks, degrees):
    out = []
    for d in degrees:
        out.extend(blocks[d].entries)
    return out


def split_indecomposable_summands(M: GradedModule, field_order):
    """Graded direct summands from a primitive idempotent system of End."""
    ends = graded_end_basis(M)
    if len(ends) == 1:
        return [M]
    E = _end_struct_algebra(M, ends, field_order)
    rad = radical_basis(E)
    Ebar, proj, section = quotient_algebra(E, rad)
    idems_bar = primitive_idempotents(Ebar)
    idems = lift_idempotents(E, rad, idems_bar, proj, section)
    out = []
    for e in idems:
        blocks = {}
        for d in M.degrees():
            dim = M.dim_at(d)
            acc = Matrix.zero(dim, dim)
            for k, c in e.items():
                acc = acc + ends[k][d].scale(c)
            blocks[d] = acc
        out.append(_image_submodule(M, blocks))
    return out


def _image_submodule(M: GradedModule, proj_blocks):
    """The image of an idempotent endomorphism as a graded module."""
    A = M.A
    bases = {}
    comps = {}
    for d in M.degrees():
        img, _ = _col_reduce(proj_blocks[d])
        if img.cols:
            bases[d] = img
            comps[d] = img.cols
    x_act, y_act, h_act = {}, {}, {}
    for d in comps:
        for i in range(A.V.dim):
            if (d - 1) in comps:
                sol = bases[d - 1].solve(M.act_x(i, d) * bases[d])
                assert sol is not None
                x_act[(i, d)] = sol
            elif not (M.act_x(i, d) * bases[d]).is_zero():
                raise MathInvariantViolation("summand is not x-stable")
        for j in range(A.oV.dim):
            if (d + 1) in comps:
                sol = bases[d + 1].solve(M.act_y(j, d) * bases[d])
                assert sol is not None
                y_act[(j, d)] = sol
            elif not (M.act_y(j, d) * bases[d]).is_zero():
                raise MathInvariantViolation("summand is not y-stable")
        for h in range(A.H.dim):
            sol = bases[d].solve(M.act_h(h, d) * bases[d])
            assert sol is not None
            h_act[(h, d)] = sol
    return GradedModule(A, comps, x_act, y_act, h_act,
                        label=f"{M.label}|e")


def module_head_by_radical(A: TriangularHopf, M: GradedModule,
                           rad_elems=None, alg=None):
    """Head M / rad(u) M using homogeneous radical elements of u."""
    if alg is None:
        alg = u_struct_algebra(A)
    if rad_elems is None:
        rad_elems = u_radical_homogeneous(A, alg)
    img_cols = {d: [] for d in M.degrees()}
    for u in rad_elems:
        deg_u = A.degree(next(iter(u)))
        for d in M.degrees():
            mat, deg = M.act_u_elem(u, d)
            if mat is None or deg not in img_cols:
                continue
            for c in range(mat.cols):
                col = mat.col(c)
                if any(not v.is_zero() for v in col):
                    img_cols[deg].append(col)
    comps, projs, secs = {}, {}, {}
    for d in M.degrees():
        cols = img_cols[d]
        dim = M.dim_at(d)
        if cols:
            span = Matrix(dim, len(cols), [cols[j][r] for r in range(dim)
                                           for j in range(len(cols))])
            span, _ = _col_reduce(span)
        else:
            span = Matrix.zero(dim, 0)
        if span.cols == dim:
            continue
        proj, sec, qdim = _quotient_maps(span, dim) if span.cols else \
            (Matrix.identity(dim), Matrix.identity(dim), dim)
        comps[d] = qdim
        projs[d] = proj
        secs[d] = sec
    x_act, y_act, h_act = {}, {}, {}
    for d in comps:
        for i in range(A.V.dim):
            if (d - 1) in comps:
                x_act[(i, d)] = projs[d - 1] * M.act_x(i, d) * secs[d]
        for j in range(A.oV.dim):
            if (d + 1) in comps:
                y_act[(j, d)] = projs[d + 1] * M.act_y(j, d) * secs[d]
        for h in range(A.H.dim):
            h_act[(h, d)] = projs[d] * M.act_h(h, d) * secs[d]
    return GradedModule(A, comps, x_act, y_act, h_act,
                        label=f"head({M.label})")


def module_socle(A: TriangularHopf, M: GradedModule, rad_elems=None,
                 alg=None):
    """Socle: joint kernel of the homogeneous radical action."""
    if alg is None:
        alg = u_struct_algebra(A)
    if rad_elems is None:
        rad_elems = u_radical_homogeneous(A, alg)
    bases = {}
    comps = {}
    for d in M.degrees():
        rows = []
        for u in rad_elems:
            mat, deg = M.act_u_elem(u, d)
            if mat is not None:
                rows.extend(mat.row(r) for r in range(mat.rows))
        if rows:
            kern = Matrix.from_rows(rows).kernel_basis()
        else:
            kern = Matrix.identity(M.dim_at(d))
        if kern.cols:
            bases[d] = kern
            comps[d] = kern.cols
    x_act, y_act, h_act = {}, {}, {}
    for d in comps:
        for i in range(A.V.dim):
            if (d - 1) in comps:
                sol = bases[d - 1].solve(M.act_x(i, d) * bases[d])
                assert sol is not None, "socle is not stable"
                x_act[(i, d)] = sol
        for j in range(A.oV.dim):
            if (d + 1) in comps:
                sol = bases[d + 1].solve(M.act_y(j, d) * bases[d])
                assert sol is not None, "socle is not stable"
                y_act[(j, d)] = sol
        for h in range(A.H.dim):
            sol = bases[d].solve(M.act_h(h, d) * bases[d])
            assert sol is not None
            h_act[(h, d)] = sol
    return GradedModule(A, comps, x_act, y_act, h_act,
                        label=f"soc({M.label})")


def projective_cover(A: TriangularHopf, lam: Weight, weights,
                     l_table, dim_budget=4096):
    """Indecomposable summand of Ind(lam) with head L(lam) at shift zero."""
    ind = induced_module(A, lam)
    if ind.total_dim > dim_budget:
        raise BudgetExceeded(
            f"induced module dimension {ind.total_dim} over budget")
    field_order = _field_order_of(A)
    alg = u_struct_algebra(A)
    rad_elems = u_radical_homogeneous(A, alg)
    for summand in split_indecomposable_summands(ind, field_order):
        hd = module_head_by_radical(A, summand, rad_elems, alg)
        ch = hd.graded_character(weights)
        if ch == l_table[lam.label]:
            return summand
    raise MathInvariantViolation("no summand has the requested head")


def match_simple_character(ch: "GradedCharacter", l_table):
    """Identify ch as ch L(label) shifted by some degree, or None."""
    for lab, base in l_table.items():
        if not base.data:
            continue
        top = max(d for (_, d) in base.data)
        for (lab2, d) in ch.data:
            shift = d - top
            if ch == base.shifted(shift):
                return lab, shift
        if ch == base:
            return lab, 0
    return None


def head_label_of_projective(A, summand, weights, l_table,
                             rad_elems=None, alg=None):
    hd = module_head_by_radical(A, summand, rad_elems, alg)
    ch = hd.graded_character(weights)
    match = match_simple_character(ch, l_table)
    if match is None:
        raise MathInvariantViolation("head of a summand is not simple")
    return match


# -- bgg machinery ---------------------------------------------------------


def character_tables(A: TriangularHopf, weights):
    """Characters of the Verma modules and their simple heads."""
    m_table = {}
    l_table = {}
    l_modules = {}
    m_modules = {}
    for w in weights:
        M = verma(A, w)
        L = head(A, M)
        m_modules[w.label] = M
        l_modules[w.label] = L
        m_table[w.label] = M.graded_character(weights)
        l_table[w.label] = L.graded_character(weights)
    return m_table, l_table, m_modules, l_modules


def bgg_projective_characters(A: TriangularHopf, weights, m_table, l_table,
                              hat=None):
    """ch P(mu) = sum_lam t^s bar(p_{M(lam), L(mu-hat)}) ch M(lam).

    hat maps mu -> (mu_hat label, shift); the double case uses the identity
    with shift zero.
    """
    if hat is None:
        hat = {w.label: (w.label, 0) for w in weights}
    p_ml = {w.label: decompose_in_basis(m_table[w.label], l_table, top=True)
            for w in weights}
    p_table = {}
    characters = {}
    for mu in weights:
        mh, s = hat[mu.label]
        poly = DecompPolynomial()
        ch = GradedCharacter()
        for lam in weights:
            src = p_ml[lam.label].polys.get(mh, {})
            for shift, coeff in src.items():
                poly.add(lam.label, s - shift, coeff)
                for (lab, d), m in m_table[lam.label].data.items():
                    ch.add(lab, d + s - shift, coeff * m)
        p_table[mu.label] = poly
        characters[mu.label] = ch
    return characters, p_table


def socle_hat_map(A: TriangularHopf, weights, l_table):
    """mu -> (label, shift) of the socle of an explicit projective cover."""
    out = {}
    alg = u_struct_algebra(A)
    rad_elems = u_radical_homogeneous(A, alg)
    field_order = _field_order_of(A)
    for mu in weights:
        cover = projective_cover(A, mu, weights, l_table)
        soc = module_socle(A, cover, rad_elems, alg)
        ch = soc.graded_character(weights)
        match = match_simple_character(ch, l_table)
        if match is None:
            raise MathInvariantViolation("projective socle is not simple")
        out[mu.label] = match
    return out


# -- rigid modules ----------------------------------------------------------


def one_dim_reps_of_algebra(alg: StructAlgebra):
    """All algebra characters over the working field, as value vectors."""
    rad = radical_basis(alg)
    cur, proj, _ = quotient_algebra(alg, rad)
    maps = proj
    while True:
        comm = commutator_ideal(cur)
        if comm.cols:
            cur, proj2, _ = quotient_algebra(cur, comm)
            maps = proj2 * maps
            continue
        rad2 = radical_basis(cur)
        if rad2.cols:
            cur, proj2, _ = quotient_algebra(cur, rad2)
            maps = proj2 * maps
            continue
        break
    idems = primitive_idempotents(cur)
    chars = []
    for e in idems:
        # character through the one-dimensional corner spanned by e
        le = cur.left_matrix(e)
        pick = next(r for r in range(cur.dim) if not e.get(r, ZERO).is_zero())
        values = []
        denom = e[pick]
        for i in range(alg.dim):
            img = {}
            for q in range(cur.dim):
                c = maps[q, i]
                if not c.is_zero():
                    vadd_into(img, {q: c})
            prod = cur.multiply(img, e)
            values.append(prod.get(pick, ZERO) * denom.inverse())
        chars.append(values)
    return chars


def grouplikes(K: FDHopf, field_order=1):
    """Group-like elements: algebra characters of the dual, pulled back."""
    from .hopf import dual_hopf
    dual = dual_hopf(K)
    alg = StructAlgebra(dual.dim, dual.mult, dual.unit, field_order)
    chars = one_dim_reps_of_algebra(alg)
    out = []
    for values in chars:
        g = {i: values[i] for i in range(K.dim) if not values[i].is_zero()}
        # certify group-likeness
        pairs = K.comult_elem(g)
        expect = {}
        for a, x in g.items():
            for b, y in g.items():
                vadd_into(expect, {(a, b): x * y})
        if not vequal(pairs, expect) or not K.counit_elem(g).is_one():
            raise MathInvariantViolation("character pullback not group-like")
        out.append(g)
    return out


def rigid_weights_by_criterion(A: TriangularHopf, K: FDHopf, weights,
                               field_order=1):
    """1-dim weights eta (x) g with g (x) eta central and trivial on V.

    The base of A must be the double of K with the standard basis order
    (K tensor its dual).
    """
    from .hopf import dual_hopf
    D = A.H
    gl_K = grouplikes(K, field_order)
    gl_Kdual = grouplikes(dual_hopf(K), field_order)
    out = []
    for g in gl_K:
        for eta in gl_Kdual:
            z = {}
            for i, ci in g.items():
                for j, cj in eta.items():
                    vadd_into(z, {i * K.dim + j: ci * cj})
            if not is_central(D, z):
                continue
            act = Matrix.zero(A.V.dim, A.V.dim)
            for t, c in z.items():
                act = act + A.V.action[t].scale(c)
            if act != Matrix.identity(A.V.dim, act.order):
                continue
            # lambda = eta (x) g as a character of the double
            mats = []
            for i in range(K.dim):
                for j in range(K.dim):
                    val = eta.get(i, ZERO) * g_coeff(g, j, K)
                    mats.append(Matrix(1, 1, [val]))
            w = weight_module_of_matrices(weights, mats)
            if w is None:
                raise MathInvariantViolation(
                    "rigid character is not a weight")
            out.append(w)
    labels = sorted(set(w.label for w in out))
    return [w for w in weights if w.label in labels]


def g_coeff(g, j, K):
    """Evaluation of the dual basis element f_j on the group-like g."""
    return g.get(j, ZERO)


def rigid_weights_by_head_scan(A: TriangularHopf, weights, l_modules):
    out = []
    for w in weights:
        if w.dim != 1:
            continue
        L = l_modules[w.label]
        if L.total_dim == w.dim and L.degrees() == [0]:
            out.append(w)
    return out


def build_tensor_table(H: FDHopf, weights):
    table = {}
    for a in weights:
        for b in weights:
            mats = []
            for h in range(H.dim):
                acc = Matrix.zero(a.dim * b.dim, a.dim * b.dim)
                for (p, q, s) in H.comult[h]:
                    acc = acc + (a.matrices[p].kron(b.matrices[q])).scale(s)
                mats.append(acc)
            table[(a.label, b.label)] = decompose_h_module(weights, mats)
    return table


def weight_tensor(H: FDHopf, a: Weight, b: Weight):
    mats = []
    for h in range(H.dim):
        acc = Matrix.zero(a.dim * b.dim, a.dim * b.dim)
        for (p, q, s) in H.comult[h]:
            acc = acc + (a.matrices[p].kron(b.matrices[q])).scale(s)
        mats.append(acc)
    return mats


def weight_dual(H: FDHopf, a: Weight):
    mats = []
    for h in range(H.dim):
        sh = H.antipode_elem({h: ONE})
        acc = Matrix.zero(a.dim, a.dim)
        for m, c in sh.items():
            acc = acc + a.matrices[m].scale(c)
        mats.append(acc.transpose())
    return mats


def graded_hom_basis(A: TriangularHopf, M: GradedModule, N: GradedModule):
    """Degree-preserving module maps M -> N as per-degree block matrices."""
    degrees = sorted(set(M.degrees()) | set(N.degrees()))
    offsets = {}
    total = 0
    for d in degrees:
        offsets[d] = total
        total += N.dim_at(d) * M.dim_at(d)
    if total == 0:
        return []
    rows = []

    def add_rows(src, tgt, act_m, act_n):
        # X_tgt act_m = act_n X_src
        dim_ms, dim_mt = M.dim_at(src), M.dim_at(tgt)
        dim_ns, dim_nt = N.dim_at(src), N.dim_at(tgt)
        for r in range(dim_nt):
            for c in range(dim_ms):
                row = [ZERO] * total
                if dim_mt:
                    for k in range(dim_mt):
                        row[offsets[tgt] + r * dim_mt + k] = \
                            row[offsets[tgt] + r * dim_mt + k] + act_m[k, c]
                if dim_ns:
                    for k in range(dim_ns):
                        row[offsets[src] + k * M.dim_at(src) + c] = \
                            row[offsets[src] + k * M.dim_at(src) + c] - \
                            act_n[r, k]
                if any(not v.is_zero() for v in row):
                    rows.append(row)

    for d in degrees:
        if M.dim_at(d) == 0:
            continue
        for i in range(A.V.dim):
            add_rows(d, d - 1, M.act_x(i, d), N.act_x(i, d))
        for j in range(A.oV.dim):
            add_rows(d, d + 1, M.act_y(j, d), N.act_y(j, d))
        for h in range(A.H.dim):
            add_rows(d, d, M.act_h(h, d), N.act_h(h, d))
    kern = Matrix.from_rows(rows).kernel_basis() if rows else \
        Matrix.identity(total)
    out = []
    for jcol in range(kern.cols):
        blocks = {}
        for d in degrees:
            dm, dn = M.dim_at(d), N.dim_at(d)
            ents = [kern[offsets[d] + r * dm + c, jcol]
                    for r in range(dn) for c in range(dm)]
            blocks[d] = Matrix(dn, dm, ents)
        out.append(blocks)
    return out


def graded_hom_dim(A, M, N):
    return len(graded_hom_basis(A, M, N))


def find_graded_isomorphism(A, M, N, tries=12):
    """An invertible graded module map M -> N, or None.

    Searches integer combinations of a Hom-space basis; existence of one
    invertible combination certifies the isomorphism.
    """
    if sorted(M.components.items()) != sorted(N.components.items()):
        return None
    homs = graded_hom_basis(A, M, N)
    if not homs:
        return None
    candidates = list(homs)
    for t in range(1, tries):
        combo = {}
        for k, blocks in enumerate(homs):
            for d, mat in blocks.items():
                scaled = mat.scale(Cyclotomic.rational((t ** k) % 251))
                combo[d] = scaled if d not in combo else combo[d] + scaled
        candidates.append(combo)
    for blocks in candidates:
        ok = True
        for d in M.degrees():
            if blocks[d].inverse() is None:
                ok = False
                break
        if ok:
            return blocks
    return None
