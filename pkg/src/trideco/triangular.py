"""The Hopf algebra u built on the normal-form basis B(V) (x) H (x) B(oV).

Multiplication is a straightening procedure on mixed words in the letters
x_i (degree -1), H basis elements (degree 0) and y_j (degree +1):

  * h x  ->  (h_1 . x) h_2           (smash commutation)
  * y h  ->  h_2 (S^{-1}(h_1) . y)   (inverse smash commutation)
  * y x  ->  (y_{-1} . x) y_0  +  <y, x>
             -  <y_{-2}, x_{-3}> <y_0, S(x_{-1}) . x_0>  y_{-1} x_{-2}

where <.,.> on H-legs is the pairing between the spans of the R-matrix legs
and <y, x> is the evaluation pairing (the identity in dual bases).  Every
application of the third rule strictly decreases the number of (y, x)
inversions, so normalization terminates; pure x- and y-words are reduced
through the Nichols projections at the end.

A mirrored normal form with B(oV) on the left is available for building
modules induced from the negative side; its straightening rule is obtained
from the same data through the inverse braiding.
"""

from __future__ import annotations

from .braided import YDModule, dual_yd
from .cyclotomic import Cyclotomic
from .errors import (MathInvariantViolation, PairingLegOutsideRlRr)
from .hopf import (FDHopf, QuasitriangularHopf, SpanCoords, compute_pairing,
                   group_algebra)
from .linalg import Matrix
from .nichols import NicholsAlgebra, build_nichols, _flatten, _unflatten
from .sparsevec import vadd_into, vequal, vscale

ONE = Cyclotomic.one(1)
ZERO = Cyclotomic.zero(1)


class TriangularHopf:
    """u on the basis of triples (B(V) word, H basis element, B(oV) word)."""

    def __init__(self, Q: QuasitriangularHopf, V: YDModule, oV: YDModule,
                 BV: NicholsAlgebra, BoV: NicholsAlgebra):
        self.Q = Q
        self.H = Q.hopf
        self.V = V
        self.oV = oV
        self.BV = BV
        self.BoV = BoV
        self.pairing = compute_pairing(Q)
        self._rl = SpanCoords(self.pairing.rl_basis, "R_l")
        self._rr = SpanCoords(self.pairing.rr_basis, "R_r")
        self._rl_coords = [self._rl.coords_unchecked({h: ONE})
                           for h in range(self.H.dim)]
        self._rr_coords = [self._rr.coords_unchecked({h: ONE})
                           for h in range(self.H.dim)]
        self._certify_coaction_legs()
        # global Nichols bases: (degree, local) pairs and word tuples
        self.bv_index = _component_index(BV)
        self.bov_index = _component_index(BoV)
        self.dim = len(self.bv_index) * self.H.dim * len(self.bov_index)
        self._xy_cache = {}
        self._hx_cache = {}
        self._yh_cache = {}
        self._mono_cache = {}
        self._pair_cache = {}
        self._unit_triples = None
        self._comult_cache = {}
        self._antipode_cache = {}
        self._s_gen_cache = None

    # -- bookkeeping ----------------------------------------------------

    def triple_index(self, bm, h, bp):
        nb, nh = len(self.bv_index), self.H.dim
        return (bm * nh + h) * len(self.bov_index) + bp

    def triple_of(self, t):
        nbo = len(self.bov_index)
        nh = self.H.dim
        bp = t % nbo
        t //= nbo
        return t // nh, t % nh, bp

    def degree(self, t):
        bm, _, bp = self.triple_of(t)
        return self.bov_index[bp][0] - self.bv_index[bm][0]

    def unit(self):
        if self._unit_triples is None:
            self._unit_triples = {self.triple_index(0, h, 0): c
                                  for h, c in self.H.unit.items()}
        return dict(self._unit_triples)

    def x_elem(self, i):
        """The generator x_i as an element (degree -1)."""
        bm = _local_to_global(self.BV, 1, i)
        return {self.triple_index(bm, h, 0): c
                for h, c in self.H.unit.items()}

    def y_elem(self, j):
        bp = _local_to_global(self.BoV, 1, j)
        return {self.triple_index(0, h, bp): c
                for h, c in self.H.unit.items()}

    def h_elem(self, h_sparse):
        return {self.triple_index(0, h, 0): c for h, c in h_sparse.items()}

    def counit(self, u):
        t = ZERO
        for idx, c in u.items():
            bm, h, bp = self.triple_of(idx)
            if bm == 0 and bp == 0:
                t = t + c * self.H.counit[h]
        return t

    # -- leg pairing -----------------------------------------------------

    def _certify_coaction_legs(self):
        for j in range(self.oV.dim):
            groups = {}
            for (g, j0, s) in self.oV.coaction[j]:
                vadd_into(groups.setdefault(j0, {}), {g: s})
            for j0, elem in groups.items():
                self._rl.coords(elem)  # raises PairingLegOutsideRlRr
        for i in range(self.V.dim):
            groups = {}
            for (f, i0, s) in self.V.coaction[i]:
                vadd_into(groups.setdefault(i0, {}), {f: s})
            for i0, elem in groups.items():
                self._rr.coords(elem)

    def pair_h(self, g, f):
        """<e_g, e_f> through the R-span pairing, extended linearly."""
        a = self._rl_coords[g]
        b = self._rr_coords[f]
        t = ZERO
        for al in range(len(a)):
            if a[al].is_zero():
                continue
            for be in range(len(b)):
                if not b[be].is_zero():
                    t = t + a[al] * self.pairing.pairing[al, be] * b[be]
        return t

    # -- rewriting rules ---------------------------------------------------

    def _hx_rule(self, h, i):
        """e_h x_i as a sum of (x-letter, h-index) monomials."""
        key = (h, i)
        if key not in self._hx_cache:
            acc = {}
            for (a, b, s) in self.H.comult[h]:
                col = self.V.action[a].col(i)
                for k, v in enumerate(col):
                    if not v.is_zero():
                        vadd_into(acc, {((k,), b, ()): s * v})
            self._hx_cache[key] = acc
        return self._hx_cache[key]

    def _yh_rule(self, j, h):
        """y_j e_h as a sum of (h-index, y-letter) monomials."""
        key = (j, h)
        if key not in self._yh_cache:
            acc = {}
            for (a, b, s) in self.H.comult[h]:
                sa = self.H.antipode_elem({a: s}, inverse=True)
                for m, c in sa.items():
                    col = self.oV.action[m].col(j)
                    for k, v in enumerate(col):
                        if not v.is_zero():
                            vadd_into(acc, {((), b, (k,)): c * v})
            self._yh_cache[key] = acc
        return self._yh_cache[key]

    def _xy_rule(self, j, i):
        """y_j x_i straightened into normal-order monomials."""
        key = (j, i)
        if key not in self._xy_cache:
            acc = {}
            # (y_{-1} . x) y_0
            for (g, j0, s) in self.oV.coaction[j]:
                col = self.V.action[g].col(i)
                for k, v in enumerate(col):
                    if not v.is_zero():
                        for hu, cu in self.H.unit.items():
                            vadd_into(acc, {((k,), hu, (j0,)): s * v * cu})
            # evaluation pairing <y_j, x_i> = delta_{ji}
            if j == i:
                for hu, cu in self.H.unit.items():
                    vadd_into(acc, {((), hu, ()): cu})
            # - <y_{-2}, x_{-3}> <y_0, S(x_{-1}) x_0> y_{-1} x_{-2}
            for (g, j0, s) in self.oV.coaction[j]:
                for (g1, g2, t) in self.H.comult[g]:
                    for (f, i0, u) in self.V.coaction[i]:
                        for (f1, f2, f3, w) in self.H.sweedler2(f):
                            p1 = self.pair_h(g1, f1)
                            if p1.is_zero():
                                continue
                            sx = self.H.antipode_elem({f3: ONE})
                            ev = ZERO
                            for m, c in sx.items():
                                ev = ev + c * self.V.action[m][j0, i0]
                            if ev.is_zero():
                                continue
                            coeff = -(s * t * u * w * p1 * ev)
                            prod = self.H.multiply({g2: ONE}, {f2: ONE})
                            for hh, cc in prod.items():
                                vadd_into(acc, {((), hh, ()): coeff * cc})
            self._xy_cache[key] = acc
        return self._xy_cache[key]

    # -- monomial engine -----------------------------------------------------

    def mono_mul(self, m1, m2):
        """Product of two normal-order monomials as a monomial element."""
        key = (m1, m2)
        cached = self._mono_cache.get(key)
        if cached is not None:
            return cached
        xw1, h1, yw1 = m1
        xw2, h2, yw2 = m2
        if not yw1:
            if not xw2:
                out = {}
                for k, c in self.H.mult[h1][h2].items():
                    vadd_into(out, {(xw1, k, yw2): c})
            else:
                out = {}
                for (xk, b, _), c in self._hx_rule(h1, xw2[0]).items():
                    sub = self.mono_mul((xw1 + xk, b, ()),
                                        (xw2[1:], h2, yw2))
                    vadd_into(out, sub, c)
        else:
            j = yw1[-1]
            if not xw2:
                out = {}
                for (_, b, yk), c in self._yh_rule(j, h2).items():
                    sub = self.mono_mul((xw1, h1, yw1[:-1]),
                                        ((), b, yk + yw2))
                    vadd_into(out, sub, c)
            else:
                i = xw2[0]
                out = {}
                left = (xw1, h1, yw1[:-1])
                right = (xw2[1:], h2, yw2)
                for mono, c in self._xy_rule(j, i).items():
                    first = self.mono_mul(left, mono)
                    for m, cc in first.items():
                        sub = self.mono_mul(m, right)
                        vadd_into(out, sub, c * cc)
        self._mono_cache[key] = out
        return out

    def project_monomial(self, mono, coeff, acc):
        """Reduce a normal-order word monomial into basis-triple coordinates."""
        xw, h, yw = mono
        p, q = len(xw), len(yw)
        if p > self.BV.max_degree() or q > self.BoV.max_degree():
            return
        compx = self.BV.component(p)
        compy = self.BoV.component(q)
        fx = _flatten(xw, self.V.dim)
        fy = _flatten(yw, self.oV.dim)
        for bx in range(compx.dim):
            cx = compx.projection[bx, fx]
            if cx.is_zero():
                continue
            gx = _local_to_global(self.BV, p, bx)
            for by in range(compy.dim):
                cy = compy.projection[by, fy]
                if cy.is_zero():
                    continue
                gy = _local_to_global(self.BoV, q, by)
                idx = self.triple_index(gx, h, gy)
                vadd_into(acc, {idx: coeff * cx * cy})

    def pair_product(self, t1, t2):
        """Product of two basis triples as a canonical element."""
        key = (t1, t2)
        cached = self._pair_cache.get(key)
        if cached is not None:
            return cached
        bm1, h1, bp1 = self.triple_of(t1)
        bm2, h2, bp2 = self.triple_of(t2)
        m1 = (self._bv_word(bm1), h1, self._bov_word(bp1))
        m2 = (self._bv_word(bm2), h2, self._bov_word(bp2))
        acc = {}
        for mono, c in self.mono_mul(m1, m2).items():
            self.project_monomial(mono, c, acc)
        self._pair_cache[key] = acc
        return acc

    def multiply(self, u1, u2):
        acc = {}
        for t1, c1 in u1.items():
            for t2, c2 in u2.items():
                prod = self.pair_product(t1, t2)
                if prod:
                    vadd_into(acc, prod, c1 * c2)
        return acc

    def _bv_word(self, g):
        deg, local = self.bv_index[g]
        return _unflatten(self.BV.component(deg).words[local], self.V.dim,
                          deg)

    def _bov_word(self, g):
        deg, local = self.bov_index[g]
        return _unflatten(self.BoV.component(deg).words[local], self.oV.dim,
                          deg)

    # -- coalgebra structure ---------------------------------------------

    def comult_generator_x(self, i):
        """Delta(x_i) = x_i (x) 1 + (x_i)_{-1} (x) (x_i)_0 in u (x) u."""
        acc = {}
        for t, c in self.x_elem(i).items():
            for s, d in self.unit().items():
                vadd_into(acc, {(t, s): c * d})
        for (f, i0, s) in self.V.coaction[i]:
            for t, c in self.h_elem({f: s}).items():
                for t2, d in self.x_elem(i0).items():
                    vadd_into(acc, {(t, t2): c * d})
        return acc

    def comult_generator_y(self, j):
        acc = {}
        for t, c in self.y_elem(j).items():
            for s, d in self.unit().items():
                vadd_into(acc, {(t, s): c * d})
        for (g, j0, s) in self.oV.coaction[j]:
            for t, c in self.h_elem({g: s}).items():
                for t2, d in self.y_elem(j0).items():
                    vadd_into(acc, {(t, t2): c * d})
        return acc

    def comult_generator_h(self, h):
        acc = {}
        for (a, b, s) in self.H.comult[h]:
            t1 = self.triple_index(0, a, 0)
            t2 = self.triple_index(0, b, 0)
            vadd_into(acc, {(t1, t2): s})
        return acc

    def tensor_multiply(self, u, v):
        """Product in u (x) u of sparse pair-indexed elements."""
        acc = {}
        for (a1, b1), c1 in u.items():
            for (a2, b2), c2 in v.items():
                left = self.pair_product(a1, a2)
                if not left:
                    continue
                right = self.pair_product(b1, b2)
                if not right:
                    continue
                coeff = c1 * c2
                for ta, ca in left.items():
                    for tb, cb in right.items():
                        vadd_into(acc, {(ta, tb): coeff * ca * cb})
        return acc

    def comult_basis(self, t):
        """Delta on a basis triple, cached; algebra-map extension."""
        cached = self._comult_cache.get(t)
        if cached is not None:
            return cached
        bm, h, bp = self.triple_of(t)
        xw = self._bv_word(bm)
        yw = self._bov_word(bp)
        acc = None
        for i in xw:
            factor = self.comult_generator_x(i)
            acc = factor if acc is None else self.tensor_multiply(acc, factor)
        factor = self.comult_generator_h(h)
        acc = factor if acc is None else self.tensor_multiply(acc, factor)
        for j in yw:
            factor = self.comult_generator_y(j)
            acc = self.tensor_multiply(acc, factor)
        self._comult_cache[t] = acc
        return acc

    def comult_elem(self, u):
        acc = {}
        for t, c in u.items():
            vadd_into(acc, self.comult_basis(t), c)
        return acc

    def antipode_generators(self):
        """S on x_i, y_j (from the coproduct shape) and on H."""
        if self._s_gen_cache is None:
            sx = []
            for i in range(self.V.dim):
                acc = {}
                for (f, i0, s) in self.V.coaction[i]:
                    sh = self.H.antipode_elem({f: s})
                    term = self.multiply(self.h_elem(sh), self.x_elem(i0))
                    vadd_into(acc, term, Cyclotomic.rational(-1))
                sx.append(acc)
            sy = []
            for j in range(self.oV.dim):
                acc = {}
                for (g, j0, s) in self.oV.coaction[j]:
                    sh = self.H.antipode_elem({g: s})
                    term = self.multiply(self.h_elem(sh), self.y_elem(j0))
                    vadd_into(acc, term, Cyclotomic.rational(-1))
                sy.append(acc)
            self._s_gen_cache = (sx, sy)
        return self._s_gen_cache

    def antipode_basis(self, t):
        """S on a basis triple by antimultiplicative extension."""
        cached = self._antipode_cache.get(t)
        if cached is not None:
            return cached
        sx, sy = self.antipode_generators()
        bm, h, bp = self.triple_of(t)
        xw = self._bv_word(bm)
        yw = self._bov_word(bp)
        acc = self.unit()
        for j in reversed(yw):
            acc = self.multiply(acc, sy[j])
        acc = self.multiply(acc, self.h_elem(
            self.H.antipode_elem({h: ONE})))
        for i in reversed(xw):
            acc = self.multiply(acc, sx[i])
        self._antipode_cache[t] = acc
        return acc

    def antipode_elem(self, u):
        acc = {}
        for t, c in u.items():
            vadd_into(acc, self.antipode_basis(t), c)
        return acc

    # -- structural checks -------------------------------------------------

    def check_counit_and_antipode(self):
        """Antipode axiom m (S (x) id) Delta = unit * counit on every triple."""
        for t in range(self.dim):
            lhs = {}
            rhs = {}
            for (a, b), c in self.comult_basis(t).items():
                sa = self.antipode_basis(a)
                term = self.multiply(vscale(sa, c), {b: ONE})
                vadd_into(lhs, term)
                sb = self.antipode_basis(b)
                term = self.multiply({a: c}, sb)
                vadd_into(rhs, term)
            target = vscale(self.unit(), self.counit({t: ONE}))
            if not vequal(lhs, target) or not vequal(rhs, target):
                raise MathInvariantViolation(
                    f"antipode axiom fails on triple {t}")
        return True

    def check_comult_algebra_map(self, generators_only=True):
        """Delta(g u) = Delta(g) Delta(u) for generators g and basis u."""
        gens = [self.x_elem(i) for i in range(self.V.dim)]
        gens += [self.y_elem(j) for j in range(self.oV.dim)]
        gens += [{self.triple_index(0, h, 0): ONE}
                 for h in range(self.H.dim)]
        gen_com = [self.comult_generator_x(i) for i in range(self.V.dim)]
        gen_com += [self.comult_generator_y(j) for j in range(self.oV.dim)]
        gen_com += [self.comult_generator_h(h) for h in range(self.H.dim)]
        for g, dg in zip(gens, gen_com):
            for t in range(self.dim):
                prod = self.multiply(g, {t: ONE})
                lhs = self.comult_elem(prod)
                rhs = self.tensor_multiply(dg, self.comult_basis(t))
                if not vequal(lhs, rhs):
                    raise MathInvariantViolation(
                        "coproduct is not an algebra map")
        return True


class MirrorEngine:
    """Products in u written in the mirrored normal form B(oV) H B(V).

    Monomials are (y-word, h, x-word).  The mirrored straightening rule is
    derived from the standard one through the braiding V (x) oV -> oV (x) V,
    using that the two braidings compose to the identity.
    """

    def __init__(self, A: TriangularHopf):
        self.A = A
        self._hy_cache = {}
        self._xh_cache = {}
        self._xy_cache = {}
        self._mono_cache = {}

    def _hy_rule(self, h, j):
        key = (h, j)
        if key not in self._hy_cache:
            acc = {}
            for (a, b, s) in self.A.H.comult[h]:
                col = self.A.oV.action[a].col(j)
                for k, v in enumerate(col):
                    if not v.is_zero():
                        vadd_into(acc, {((k,), b, ()): s * v})
            self._hy_cache[key] = acc
        return self._hy_cache[key]

    def _xh_rule(self, i, h):
        key = (i, h)
        if key not in self._xh_cache:
            acc = {}
            for (a, b, s) in self.A.H.comult[h]:
                sa = self.A.H.antipode_elem({a: s}, inverse=True)
                for m, c in sa.items():
                    col = self.A.V.action[m].col(i)
                    for k, v in enumerate(col):
                        if not v.is_zero():
                            vadd_into(acc, {((), b, (k,)): c * v})
            self._xh_cache[key] = acc
        return self._xh_cache[key]

    def _s_part(self, j, i):
        """Scalar and H terms of the standard straightening of y_j x_i."""
        A = self.A
        acc = {}
        if j == i:
            vadd_into(acc, dict(A.H.unit))
        for (g, j0, s) in A.oV.coaction[j]:
            for (g1, g2, t) in A.H.comult[g]:
                for (f, i0, u) in A.V.coaction[i]:
                    for (f1, f2, f3, w) in A.H.sweedler2(f):
                        p1 = A.pair_h(g1, f1)
                        if p1.is_zero():
                            continue
                        sx = A.H.antipode_elem({f3: ONE})
                        ev = ZERO
                        for m, c in sx.items():
                            ev = ev + c * A.V.action[m][j0, i0]
                        if ev.is_zero():
                            continue
                        coeff = -(s * t * u * w * p1 * ev)
                        prod = A.H.multiply({g2: ONE}, {f2: ONE})
                        for hh, cc in prod.items():
                            vadd_into(acc, {hh: coeff * cc})
        return acc

    def _mirror_xy_rule(self, i, j):
        """x_i y_j rewritten with y-letters first."""
        key = (i, j)
        if key not in self._xy_cache:
            A = self.A
            acc = {}
            for (f, i0, u) in A.V.coaction[i]:
                col = A.oV.action[f].col(j)
                for k, v in enumerate(col):
                    if v.is_zero():
                        continue
                    for hu, cu in A.H.unit.items():
                        vadd_into(acc, {((k,), hu, (i0,)): u * v * cu})
                    spart = self._s_part(k, i0)
                    for hh, cc in spart.items():
                        vadd_into(acc, {((), hh, ()): -(u * v * cc)})
            self._xy_cache[key] = acc
        return self._xy_cache[key]

    def mono_mul(self, m1, m2):
        key = (m1, m2)
        cached = self._mono_cache.get(key)
        if cached is not None:
            return cached
        yw1, h1, xw1 = m1
        yw2, h2, xw2 = m2
        if not xw1:
            if not yw2:
                out = {}
                for k, c in self.A.H.mult[h1][h2].items():
                    vadd_into(out, {(yw1, k, xw2): c})
            else:
                out = {}
                for (yk, b, _), c in self._hy_rule(h1, yw2[0]).items():
                    sub = self.mono_mul((yw1 + yk, b, ()),
                                        (yw2[1:], h2, xw2))
                    vadd_into(out, sub, c)
        else:
            i = xw1[-1]
            if not yw2:
                out = {}
                for (_, b, xk), c in self._xh_rule(i, h2).items():
                    sub = self.mono_mul((yw1, h1, xw1[:-1]),
                                        ((), b, xk + xw2))
                    vadd_into(out, sub, c)
            else:
                j = yw2[0]
                out = {}
                left = (yw1, h1, xw1[:-1])
                right = (yw2[1:], h2, xw2)
                for mono, c in self._mirror_xy_rule(i, j).items():
                    first = self.mono_mul(left, mono)
                    for m, cc in first.items():
                        sub = self.mono_mul(m, right)
                        vadd_into(out, sub, c * cc)
        self._mono_cache[key] = out
        return out

    def to_standard(self, elem):
        """Convert a mirror element into standard basis coordinates."""
        A = self.A
        acc = {}
        for (yw, h, xw), c in elem.items():
            term = A.unit()
            for j in yw:
                term = A.multiply(term, A.y_elem(j))
            term = A.multiply(term, {A.triple_index(0, h, 0): ONE})
            for i in xw:
                term = A.multiply(term, A.x_elem(i))
            vadd_into(acc, term, c)
        return acc


def _component_index(B: NicholsAlgebra):
    out = []
    for deg, comp in enumerate(B.components):
        for local in range(comp.dim):
            out.append((deg, local))
    return out


def _local_to_global(B: NicholsAlgebra, deg, local):
    offset = 0
    for d in range(deg):
        offset += B.components[d].dim
    return offset + local


def build_u(Q: QuasitriangularHopf, V: YDModule, max_degree=12,
            oV: YDModule = None) -> TriangularHopf:
    """Assemble u from the base and the braided vector space.

    Both Nichols algebras must reach their top within the degree budget
    (DegreeBudgetExceeded otherwise).
    """
    if oV is None:
        oV = dual_yd(Q, V)
    BV = build_nichols(V, max_degree, require_finite=True)
    BoV = build_nichols(oV, max_degree, require_finite=True)
    return TriangularHopf(Q, V, oV, BV, BoV)


def qt_abelian(q_exponents, N: int) -> QuasitriangularHopf:
    """The group algebra of (Z/N)^theta with the diagonal-type R-matrix.

    q_exponents is the theta x theta integer matrix with chi_i(g_j) =
    zeta_N^{q_exponents[i][j]}; the R-matrix is the normalized double sum
    of chi_g(h^{-1}) g (x) h.
    """
    theta = len(q_exponents)
    size = N ** theta

    def decode(n):
        out = []
        for _ in range(theta):
            out.append(n % N)
            n //= N
        return tuple(out)

    def encode(t):
        n = 0
        for x in reversed(t):
            n = n * N + x
        return n

    elems = [decode(n) for n in range(size)]
    cayley = [[encode(tuple((a + b) % N for a, b in zip(g, h)))
               for h in elems] for g in elems]
    H = group_algebra(cayley)
    inv_size = Cyclotomic.rational(1) / Cyclotomic.rational(size)
    from .cyclotomic import root_of_unity
    triples = []
    for gi, g in enumerate(elems):
        for hi, h in enumerate(elems):
            expo = 0
            for a in range(theta):
                for b in range(theta):
                    expo += g[a] * h[b] * q_exponents[a][b]
            scalar = root_of_unity(N, -expo) * inv_size
            triples.append((gi, hi, scalar))
    return QuasitriangularHopf(H, triples)
