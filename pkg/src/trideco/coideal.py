"""Coideal identity check in the length-two truncation of T(V + oV) # H.

The straightening element

    [[y, x]] = yx - (y_{-1}.x) y_0 - <y,x> + <y_{-2},x_{-3}><y_0,S(x_{-1})x_0> y_{-1}x_{-2}

lives in words of length at most two, and so does its coproduct; the check

    Delta([[y,x]]) = [[y,x]] (x) 1 + y_{-1} x_{-1} (x) [[y_0, x_0]]

together with the auxiliary identity

    y x_{-1} (x) x_0 = y_{-3} x_{-1} S(y_{-1}) y_0 (x) y_{-2}.x_0

is therefore verified exactly inside a finite-dimensional truncation of the
free smash product, one basis pair (y, x) at a time.  Elements of the
truncation are sparse over keys (word, h) with words of letters
('x', i) / ('y', j) of length at most two.
"""

from __future__ import annotations

from .braided import YDModule
from .cyclotomic import Cyclotomic
from .hopf import QuasitriangularHopf, SpanCoords, compute_pairing
from .sparsevec import vadd_into, vequal

ONE = Cyclotomic.one(1)
ZERO = Cyclotomic.zero(1)


class FreeSmashTruncation:
    """Words of length <= 2 in x/y letters smashed with H."""

    def __init__(self, Q: QuasitriangularHopf, V: YDModule, oV: YDModule):
        self.H = Q.hopf
        self.V = V
        self.oV = oV
        P = compute_pairing(Q)
        self._rl = SpanCoords(P.rl_basis, "R_l")
        self._rr = SpanCoords(P.rr_basis, "R_r")
        self._P = P
        self._rl_coords = [self._rl.coords_unchecked({h: ONE})
                           for h in range(self.H.dim)]
        self._rr_coords = [self._rr.coords_unchecked({h: ONE})
                           for h in range(self.H.dim)]

    def pair_h(self, g, f):
        a = self._rl_coords[g]
        b = self._rr_coords[f]
        t = ZERO
        for al, av in enumerate(a):
            if av.is_zero():
                continue
            for be, bv in enumerate(b):
                if not bv.is_zero():
                    t = t + av * self._P.pairing[al, be] * bv
        return t

    def letter_action(self, h_idx, letter):
        """e_h . letter as a sparse dict over letters."""
        kind, idx = letter
        mod = self.V if kind == "x" else self.oV
        col = mod.action[h_idx].col(idx)
        return {(kind, k): v for k, v in enumerate(col) if not v.is_zero()}

    def smash_mul(self, u, v):
        """Product of truncation elements; word lengths must stay <= 2."""
        acc = {}
        for (w1, h1), c1 in u.items():
            for (w2, h2), c2 in v.items():
                assert len(w1) + len(w2) <= 2, "left the truncation"
                coeff = c1 * c2
                legs = len(w2) + 1
                for key, s in self.H.sweedler_n(h1, legs):
                    words = [({}, s * coeff)]
                    built = [((), s * coeff)]
                    for slot, letter in enumerate(w2):
                        moved = self.letter_action(key[slot], letter)
                        built = [(wrd + (lt,), cc * vv)
                                 for wrd, cc in built
                                 for lt, vv in moved.items()]
                    last = key[legs - 1]
                    for hh, hv in self.H.mult[last][h2].items():
                        for wrd, cc in built:
                            vadd_into(acc, {(w1 + wrd, hh): cc * hv})
        return acc

    def from_h(self, h_sparse):
        return {((), h): c for h, c in h_sparse.items()}

    def x_letter(self, i):
        return {((("x", i),), h): c for h, c in self.H.unit.items()}

    def y_letter(self, j):
        return {((("y", j),), h): c for h, c in self.H.unit.items()}

    def comult(self, u):
        """Coproduct into the tensor square, algebra-map extension."""
        acc = {}
        for (w, h), c in u.items():
            term = None
            for letter in w:
                dl = self._comult_letter(letter)
                term = dl if term is None else self._tensor_mul(term, dl)
            dh = {}
            for (a, b, s) in self.H.comult[h]:
                vadd_into(dh, {(((), a), ((), b)): s})
            term = dh if term is None else self._tensor_mul(term, dh)
            vadd_into(acc, term, c)
        return acc

    def _comult_letter(self, letter):
        kind, idx = letter
        mod = self.V if kind == "x" else self.oV
        acc = {}
        for hu, cu in self.H.unit.items():
            for hu2, cu2 in self.H.unit.items():
                vadd_into(acc, {(((letter,), hu), ((), hu2)): cu * cu2})
        for (g, m0, s) in mod.coaction[idx]:
            for hu, cu in self.H.unit.items():
                vadd_into(acc, {((((), g)), (((kind, m0),), hu)): s * cu})
        return acc

    def _tensor_mul(self, u, v):
        acc = {}
        for (a1, b1), c1 in u.items():
            for (a2, b2), c2 in v.items():
                left = self.smash_mul({a1: ONE}, {a2: ONE})
                right = self.smash_mul({b1: ONE}, {b2: ONE})
                coeff = c1 * c2
                for ka, ca in left.items():
                    for kb, cb in right.items():
                        vadd_into(acc, {(ka, kb): coeff * ca * cb})
        return acc

    def straightening_element(self, j, i):
        """[[y_j, x_i]] inside the truncation."""
        acc = {}
        yx = self.smash_mul(self.y_letter(j), self.x_letter(i))
        vadd_into(acc, yx)
        for (g, j0, s) in self.oV.coaction[j]:
            moved = self.letter_action(g, ("x", i))
            for lt, v in moved.items():
                term = self.smash_mul({((lt,), h): c for h, c in
                                       self.H.unit.items()},
                                      self.y_letter(j0))
                vadd_into(acc, term, -(s * v))
        if j == i:
            for h, c in self.H.unit.items():
                vadd_into(acc, {((), h): -c})
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
                        coeff = s * t * u * w * p1 * ev
                        prod = self.H.multiply({g2: ONE}, {f2: ONE})
                        for hh, cc in prod.items():
                            vadd_into(acc, {((), hh): coeff * cc})
        return acc


def coideal_check(Q: QuasitriangularHopf, V: YDModule, oV: YDModule):
    """Exact residual report of the coideal and auxiliary identities."""
    T = FreeSmashTruncation(Q, V, oV)
    H = Q.hopf
    report = []
    ok_coideal = True
    ok_aux = True
    witness = None
    for j in range(oV.dim):
        for i in range(V.dim):
            el = T.straightening_element(j, i)
            lhs = T.comult(el)
            rhs = {}
            for key, c in el.items():
                for hu, cu in H.unit.items():
                    vadd_into(rhs, {(key, ((), hu)): c * cu})
            for (g, j0, s) in oV.coaction[j]:
                for (f, i0, u) in V.coaction[i]:
                    prod = H.multiply({g: s}, {f: u})
                    inner = T.straightening_element(j0, i0)
                    for hh, cc in prod.items():
                        for key, c in inner.items():
                            vadd_into(rhs, {(((), hh), key): cc * c})
            if not vequal(lhs, rhs):
                ok_coideal = False
                witness = witness or f"(y{j}, x{i})"
    for j in range(oV.dim):
        for i in range(V.dim):
            # y x_{-1} (x) x_0 = y_{-3} x_{-1} S(y_{-1}) y_0 (x) y_{-2}.x_0
            lhs = {}
            for (f, i0, u) in V.coaction[i]:
                prod = T.smash_mul(T.y_letter(j), T.from_h({f: u}))
                for key, c in prod.items():
                    vadd_into(lhs, {(key, i0): c})
            rhs = {}
            for (g1, g2, g3, j0, s) in _coact3(H, oV, j):
                for (f, i0, u) in V.coaction[i]:
                    sg = H.antipode_elem({g3: ONE})
                    hpart = H.multiply({g1: s * u}, {f: ONE})
                    hpart = H.multiply(hpart, sg)
                    smash = T.smash_mul(T.from_h(hpart), T.y_letter(j0))
                    col = V.action[g2].col(i0)
                    for m2, v in enumerate(col):
                        if v.is_zero():
                            continue
                        for key, c in smash.items():
                            vadd_into(rhs, {(key, m2): c * v})
            if not vequal(lhs, rhs):
                ok_aux = False
                witness = witness or f"aux (y{j}, x{i})"
    report.append(("coideal_identity", ok_coideal, witness))
    report.append(("coaction_swap_identity", ok_aux, witness))
    return report


def _coact3(H, mod, j):
    """Fourfold legs (g1, g2, g3, j0, scalar): three H legs of delta^3."""
    out = []
    for (g, j0, s) in mod.coaction[j]:
        for (g1, g2, g3, t) in H.sweedler2(g):
            out.append((g1, g2, g3, j0, s * t))
    return out
