"""Smash-product Hopf algebra B # H of a Nichols algebra by its base.

Multiplication is (x # h)(x' # h') = x (h_1 . x') # h_2 h'; the coproduct of
x # h couples the braided coproduct of B with the coaction of its second leg.
The braided antipode of B is computed degreewise from the recursion
S_B(x) = -x - sum S_B(x^(1)) x^(2) over the strictly-mixed coproduct parts,
and the smash antipode is S(x # h) = (1 # S_H(x_{-1} h)) (S_B(x_0) # 1).
All Hopf axioms are verified on the result.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic
from .hopf import FDHopf
from .linalg import Matrix
from .nichols import NicholsAlgebra
from .sparsevec import vadd_into

ONE = Cyclotomic.one(1)
ZERO = Cyclotomic.zero(1)


def _global_index(B: NicholsAlgebra):
    out = []
    for deg, comp in enumerate(B.components):
        for local in range(comp.dim):
            out.append((deg, local))
    return out


def braided_antipode(B: NicholsAlgebra):
    """Matrices B^n -> B^n of the braided antipode, one per degree."""
    mats = [Matrix.identity(1)]
    for n in range(1, B.max_degree() + 1):
        d = B.hilbert[n]
        out = Matrix.zero(d, d).scale(ONE) - Matrix.identity(d)
        for p in range(1, n):
            q = n - p
            # - S_B on the left leg, then multiply the legs back together
            split = B.comult_component(p, q)
            smat = mats[p]
            dp, dq = B.hilbert[p], B.hilbert[q]
            corrected = smat.kron(Matrix.identity(dq)) * split
            out = out - B.mult_matrix(p, q) * corrected
        mats.append(out)
    return mats


def bosonization(B: NicholsAlgebra, H: FDHopf) -> FDHopf:
    """The smash product B # H as structure tensors, axioms verified."""
    index = _global_index(B)
    nb = len(index)
    nh = H.dim
    dim = nb * nh

    def gi(b, h):
        return b * nh + h

    offsets = []
    off = 0
    for comp in B.components:
        offsets.append(off)
        off += comp.dim

    # H action on components, coactions, multiplication between components
    act = {}
    for deg in range(B.max_degree() + 1):
        for h in range(nh):
            act[(h, deg)] = B.act_on_component(h, deg)
    coact = {deg: B.coact_component(deg) for deg in range(B.max_degree() + 1)}

    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    for b1, (p, l1) in enumerate(index):
        for h1 in range(nh):
            row = gi(b1, h1)
            for b2, (q, l2) in enumerate(index):
                if p + q > B.max_degree():
                    continue
                mm = B.mult_matrix(p, q)
                for h2 in range(nh):
                    acc = mult[row][gi(b2, h2)]
                    for (a, b, s) in H.comult[h1]:
                        moved = act[(a, q)].col(l2)
                        for l2m, v in enumerate(moved):
                            if v.is_zero():
                                continue
                            for k in range(B.hilbert[p + q]):
                                c = mm[k, l1 * B.hilbert[q] + l2m]
                                if c.is_zero():
                                    continue
                                tgt = offsets[p + q] + k
                                for hh, hv in H.mult[b][h2].items():
                                    vadd_into(acc,
                                              {gi(tgt, hh): s * v * c * hv})
    comult = []
    for b1, (n, l1) in enumerate(index):
        for h1 in range(nh):
            acc = {}
            for p in range(0, n + 1):
                q = n - p
                split = B.comult_component(p, q)
                for (h1a, h1b, s) in H.comult[h1]:
                    for kp in range(B.hilbert[p]):
                        for kq in range(B.hilbert[q]):
                            c = split[kp * B.hilbert[q] + kq, l1]
                            if c.is_zero():
                                continue
                            # left leg: x^(1) # (x^(2))_{-1} h_1
                            for (g, kq2, t) in coact[q][kq]:
                                for hh, hv in H.mult[g][h1a].items():
                                    key = (gi(offsets[p] + kp, hh),
                                           gi(offsets[q] + kq2, h1b))
                                    vadd_into(acc,
                                              {key: s * c * t * hv})
            comult.append([(a, b, v) for (a, b), v in acc.items()])
    counit = [ (H.counit[h1] if index[b1][0] == 0 else ZERO)
               for b1 in range(nb) for h1 in range(nh)]
    unit = {gi(0, h): c for h, c in H.unit.items()}

    sb = braided_antipode(B)
    ents = [ZERO] * (dim * dim)
    labels = [f"b{b}.{H.labels[h]}" for b in range(nb) for h in range(nh)]
    boson = FDHopf(dim, labels, mult, unit, comult, counit,
                   Matrix.zero(dim, dim), Matrix.zero(dim, dim))
    for b1, (n, l1) in enumerate(index):
        for h1 in range(nh):
            # S(x # h) = (1 # S_H(x_{-1} h)) (S_B(x_0) # 1)
            acc = {}
            for (g, l0, t) in coact[n][l1]:
                for hh, hv in H.mult[g][h1].items():
                    shh = H.antipode_elem({hh: hv * t})
                    for m, c in shh.items():
                        col = sb[n].col(l0)
                        for l2, v in enumerate(col):
                            if v.is_zero():
                                continue
                            term = boson.multiply(
                                {gi(0, m): c},
                                _embed_b(boson, offsets[n] + l2, H, nh))
                            vadd_into(acc, term, v)
            for key, c in acc.items():
                ents[key * dim + gi(b1, h1)] = \
                    ents[key * dim + gi(b1, h1)] + c
    boson.antipode = Matrix(dim, dim, ents)
    inv = boson.antipode.inverse()
    if inv is None:
        raise ValueError("smash antipode is not invertible")
    boson.antipode_inv = inv
    boson.check_all()
    return boson


def _embed_b(boson, b_global, H, nh):
    return {b_global * nh + h: c for h, c in H.unit.items()}
