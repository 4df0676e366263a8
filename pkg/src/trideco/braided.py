"""Yetter-Drinfeld modules over a Hopf algebra and their braidings.

A YDModule carries an action (one matrix per H basis element) and a coaction
(Sweedler triples per module basis vector) satisfying the compatibility

    delta(h.m) = h_1 m_{-1} S(h_3) (x) h_2 . m_0.

Coactions are produced from an R-matrix: the forward variant uses
delta(x) = R2 (x) R1 x, the inverse variant S(R1) (x) R2 x; the dual module
of V uses the S-transposed action together with the inverse-variant coaction.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic
from .errors import MathInvariantViolation, NotAModule
from .hopf import FDHopf, QuasitriangularHopf
from .linalg import Matrix
from .sparsevec import vadd_into, vequal


class YDModule:
    def __init__(self, H: FDHopf, dim: int, action, coaction, check=True):
        self.H = H
        self.dim = dim
        self.action = action
        self.coaction = [[(h, m, s) for (h, m, s) in triples
                          if not s.is_zero()] for triples in coaction]
        if check:
            check_module(H, action, dim)
            self._check_comodule()
            self._check_yd()

    def act(self, h_elem: dict, mat: Matrix) -> Matrix:
        """Apply a (sparse) H-element to the columns of mat."""
        out = Matrix.zero(self.dim, mat.cols)
        for h, c in h_elem.items():
            out = out + (self.action[h] * mat).scale(c)
        return out

    def coact_columns(self):
        """Per basis vector, the coaction as {(h, m): scalar}."""
        return [{(h, m): s for (h, m, s) in triples}
                for triples in self.coaction]

    def _check_comodule(self):
        H = self.H
        for i in range(self.dim):
            lhs = {}
            rhs = {}
            for (h, m, s) in self.coaction[i]:
                for a, b, t in H.comult[h]:
                    vadd_into(lhs, {(a, b, m): s * t})
                for (g, m2, t) in self.coaction[m]:
                    vadd_into(rhs, {(h, g, m2): s * t})
            if not vequal(lhs, rhs):
                raise MathInvariantViolation(
                    f"coaction not coassociative at basis {i}")
            counit_leg = {}
            for (h, m, s) in self.coaction[i]:
                vadd_into(counit_leg, {m: s * H.counit[h]})
            if not vequal(counit_leg, {i: Cyclotomic.one(1)}):
                raise MathInvariantViolation(
                    f"coaction counit law fails at basis {i}")

    def _check_yd(self):
        H = self.H
        for h in range(H.dim):
            mat = self.action[h]
            for i in range(self.dim):
                lhs = {}
                for j in range(self.dim):
                    c = mat[j, i]
                    if c.is_zero():
                        continue
                    for (g, m, s) in self.coaction[j]:
                        vadd_into(lhs, {(g, m): c * s})
                rhs = {}
                for (h1, h2, h3, t) in H.sweedler2(h):
                    for (g, m, s) in self.coaction[i]:
                        left = H.multiply(H.multiply({h1: t}, {g: s}),
                                          H.antipode_elem(
                                              {h3: Cyclotomic.one(1)}))
                        col = self.action[h2].col(m)
                        for hh, cc in left.items():
                            for m2, v in enumerate(col):
                                if not v.is_zero():
                                    vadd_into(rhs, {(hh, m2): cc * v})
                if not vequal(lhs, rhs):
                    raise MathInvariantViolation(
                        f"Yetter-Drinfeld condition fails at (h={h}, m={i})")


def check_module(H: FDHopf, action, dim):
    """Module axioms for per-basis action matrices; NotAModule on failure."""
    for i, m in enumerate(action):
        if (m.rows, m.cols) != (dim, dim):
            raise NotAModule(f"action matrix {i} has wrong shape")
    unit_mat = Matrix.zero(dim, dim)
    for i, c in H.unit.items():
        unit_mat = unit_mat + action[i].scale(c)
    if unit_mat != Matrix.identity(dim, unit_mat.order):
        raise NotAModule("unit does not act as the identity")
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = action[i] * action[j]
            rhs = Matrix.zero(dim, dim)
            for k, c in H.mult[i][j].items():
                rhs = rhs + action[k].scale(c)
            if lhs != rhs:
                raise NotAModule(f"action not multiplicative at ({i},{j})")


def yd_from_qt(Q: QuasitriangularHopf, action, variant="c",
               check=True) -> YDModule:
    """YD module over H from an H-module, with coaction induced by R.

    variant "c" gives delta(x) = R2 (x) R1 x; variant "c_inverse" gives
    delta(x) = S(R1) (x) R2 x.
    """
    H = Q.hopf
    dim = action[0].rows if action else 0
    if check:
        check_module(H, action, dim)
    coaction = [[] for _ in range(dim)]
    for i in range(dim):
        acc = {}
        for (a, b, s) in Q.R:
            if variant == "c":
                col = action[a].col(i)
                for j, v in enumerate(col):
                    if not v.is_zero():
                        vadd_into(acc, {(b, j): s * v})
            elif variant == "c_inverse":
                col = action[b].col(i)
                sa = H.antipode_elem({a: s})
                for h, c in sa.items():
                    for j, v in enumerate(col):
                        if not v.is_zero():
                            vadd_into(acc, {(h, j): c * v})
            else:
                raise ValueError(f"unknown variant {variant!r}")
        coaction[i] = [(h, m, s) for (h, m), s in acc.items()]
    return YDModule(H, dim, action, coaction, check=check)


def dual_yd(Q: QuasitriangularHopf, V: YDModule, check=True) -> YDModule:
    """The dual braided vector space oV: S-transposed action, inverse coaction.

    The evaluation pairing is the identity in dual bases: <y_j, x_i> = d_ij.
    """
    H = Q.hopf
    dual_action = []
    for h in range(H.dim):
        sh = H.antipode_elem({h: Cyclotomic.one(1)})
        m = Matrix.zero(V.dim, V.dim)
        for g, c in sh.items():
            m = m + V.action[g].scale(c)
        dual_action.append(m.transpose())
    oV = yd_from_qt(QuasitriangularHopf(H, Q.R), dual_action,
                    variant="c_inverse", check=check)
    if check:
        _check_coaction_compatibility(Q, V, oV)
    return oV


def _check_coaction_compatibility(Q, V, oV):
    """<x_{-1}.y, x_0> = <y_0, S^{-1}(y_{-1}).x> on all basis pairs."""
    H = Q.hopf
    for i in range(V.dim):
        for j in range(oV.dim):
            lhs = Cyclotomic.zero(1)
            for (g, i0, s) in V.coaction[i]:
                lhs = lhs + s * oV.action[g][i0, j]
            rhs = Cyclotomic.zero(1)
            for (g, j0, s) in oV.coaction[j]:
                sg = H.antipode_elem({g: s}, inverse=True)
                for h, c in sg.items():
                    rhs = rhs + c * V.action[h][j0, i]
            if lhs != rhs:
                raise MathInvariantViolation(
                    f"dual coaction incompatibility at (x={i}, y={j})")


def braiding(V: YDModule, W: YDModule) -> Matrix:
    """c(v (x) w) = v_{-1}.w (x) v_0 as a matrix from V(x)W to W(x)V."""
    assert V.H is W.H
    rows, cols = W.dim * V.dim, V.dim * W.dim
    zero = Cyclotomic.zero(1)
    ents = [zero] * (rows * cols)
    for i in range(V.dim):
        for (h, i0, s) in V.coaction[i]:
            act = W.action[h]
            for j in range(W.dim):
                src = i * W.dim + j
                for j2 in range(W.dim):
                    c = act[j2, j]
                    if not c.is_zero():
                        dst = j2 * V.dim + i0
                        ents[dst * cols + src] = ents[dst * cols + src] + s * c
    return Matrix(rows, cols, ents)


def to_double_module(K: FDHopf, action, coaction, dim,
                     double: QuasitriangularHopf):
    """Transport a YD module over K to a module over the double of K.

    action/coaction are the K-structures; returns per-basis matrices over
    D(K) via (a (x) f) . m = <f, m_{-1}> (a . m_0).
    """
    D = double.hopf
    n = K.dim
    zero = Cyclotomic.zero(1)
    mats = []
    for a in range(n):
        for f in range(n):
            ents = [zero] * (dim * dim)
            for m in range(dim):
                for (g, m0, s) in coaction[m]:
                    if g != f:
                        continue
                    col = action[a].col(m0)
                    for j, v in enumerate(col):
                        if not v.is_zero():
                            ents[j * dim + m] = ents[j * dim + m] + s * v
            mats.append(Matrix(dim, dim, ents))
    check_module(D, mats, dim)
    return mats
