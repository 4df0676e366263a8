"""Nichols algebras computed degreewise from quantum symmetrizer kernels.

Degree n of the algebra is realized as the quotient of the n-th tensor power
by the kernel of the quantum symmetrizer S_n, built with the shuffle
recursion S_n = (id (x) S_{n-1}) (1 + c_1 + c_1 c_2 + ... + c_1...c_{n-1}).
The quotient is presented by a projection/section pair chosen from the pivot
structure of the kernel, so multiplication is concatenation followed by
projection and sections are coordinate inclusions.
"""

from __future__ import annotations

from .braided import YDModule, braiding
from .cyclotomic import Cyclotomic
from .errors import (BraidRelationFailed, DegreeBudgetExceeded,
                     MathInvariantViolation, TopNotOneDimensional)
from .linalg import Matrix
from .sparsevec import vadd_into, vequal


class NicholsComponent:
    def __init__(self, dim, projection, section, words=None):
        self.dim = dim
        self.projection = projection  # V^(x)n -> B^n
        self.section = section        # B^n -> V^(x)n, projection*section = 1
        # flat tensor-word index represented by each quotient basis vector
        # (sections are coordinate inclusions, so each basis vector is a word)
        if words is None:
            words = [next(r for r in range(section.rows)
                          if not section[r, j].is_zero())
                     for j in range(dim)]
        self.words = words


class NicholsAlgebra:
    """Degreewise quotient realization of the Nichols algebra of V."""

    def __init__(self, V: YDModule, components, n_top, bounded):
        self.V = V
        self.components = components
        self.n_top = n_top      # None when no zero component was reached
        self.bounded = bounded
        self.hilbert = [c.dim for c in components]
        self.c = braiding(V, V)
        self._mult_cache = {}
        self._h_action_cache = {}
        self._coact_cache = {}
        self._comult_cache = {}
        self._free_comult_cache = {}

    # -- dimensions -----------------------------------------------------

    @property
    def total_dim(self):
        return sum(self.hilbert)

    def max_degree(self):
        return len(self.components) - 1

    def component(self, n) -> NicholsComponent:
        if n > self.max_degree():
            raise DegreeBudgetExceeded(f"degree {n} was not computed")
        return self.components[n]

    def hilbert_is_palindromic(self) -> bool:
        """Reported only; symmetry of the Hilbert coefficients."""
        return self.hilbert == self.hilbert[::-1]

    # -- multiplication ---------------------------------------------------

    def mult_matrix(self, p, q) -> Matrix:
        """B^p (x) B^q -> B^{p+q} induced by concatenation."""
        key = (p, q)
        if key not in self._mult_cache:
            cp, cq, cn = (self.component(p), self.component(q),
                          self.component(p + q))
            self._mult_cache[key] = cn.projection * \
                cp.section.kron(cq.section)
        return self._mult_cache[key]

    # -- H-structure on components ---------------------------------------

    def act_on_component(self, h_idx: int, n: int) -> Matrix:
        """Action matrix of the H basis element h_idx on B^n."""
        key = (h_idx, n)
        if key not in self._h_action_cache:
            comp = self.component(n)
            moved = self._apply_h_tensor({h_idx: Cyclotomic.one(1)}, n,
                                         comp.section)
            self._h_action_cache[key] = comp.projection * moved
        return self._h_action_cache[key]

    def act_elem_on_component(self, h_elem: dict, n: int) -> Matrix:
        d = self.component(n).dim
        out = Matrix.zero(d, d)
        for h, c in h_elem.items():
            out = out + self.act_on_component(h, n).scale(c)
        return out

    def _apply_h_tensor(self, h_elem: dict, n: int, mat: Matrix) -> Matrix:
        """Apply an H-element to columns of a matrix living on V^(x)n."""
        H = self.V.H
        if n == 0:
            out = Matrix.zero(1, mat.cols)
            for h, c in h_elem.items():
                out = out + mat.scale(c * H.counit[h])
            return out
        m = self.V.dim
        out = Matrix.zero(mat.rows, mat.cols)
        for h, c in h_elem.items():
            for legs, s in H.sweedler_n(h, n):
                term = mat
                for slot, leg in enumerate(legs):
                    term = _apply_slot(self.V.action[leg], term, slot, m, n)
                out = out + term.scale(c * s)
        return out

    def coact_component(self, n: int):
        """Coaction on B^n as triples (h, target, scalar) per basis vector."""
        if n not in self._coact_cache:
            comp = self.component(n)
            H = self.V.H
            out = []
            m = self.V.dim
            for j in range(comp.dim):
                col = comp.section.col(j)
                acc = {}
                for flat, coeff in enumerate(col):
                    if coeff.is_zero():
                        continue
                    word = _unflatten(flat, m, n)
                    # fold the slotwise coactions, multiplying H legs in order
                    terms = [((), word, coeff)]
                    for slot in range(n):
                        new_terms = []
                        for hword, wrd, s in terms:
                            for (g, m0, t) in self.V.coaction[wrd[slot]]:
                                w2 = wrd[:slot] + (m0,) + wrd[slot + 1:]
                                new_terms.append((hword + (g,), w2, s * t))
                        terms = new_terms
                    for hword, wrd, s in terms:
                        if hword:
                            helem = {hword[0]: Cyclotomic.one(1)}
                            for g in hword[1:]:
                                helem = H.multiply(helem,
                                                   {g: Cyclotomic.one(1)})
                        else:
                            helem = dict(H.unit)
                        for h, c in helem.items():
                            vadd_into(acc, {(h, _flatten(wrd, m)): s * c})
                projected = {}
                for (h, flat), s in acc.items():
                    for k in range(comp.dim):
                        e = comp.projection[k, flat]
                        if not e.is_zero():
                            vadd_into(projected, {(h, k): s * e})
                out.append([(h, k, s) for (h, k), s in projected.items()])
            self._coact_cache[n] = out
        return self._coact_cache[n]

    def h_character(self, n: int):
        """Trace vector of the H basis acting on B^n."""
        H = self.V.H
        return [self.act_on_component(h, n).trace() for h in range(H.dim)]

    # -- braided comultiplication ----------------------------------------

    def free_comult(self, p, q) -> Matrix:
        """Component V^(x)(p+q) -> V^(x)p (x) V^(x)q of the shuffle coproduct."""
        key = (p, q)
        if key in self._free_comult_cache:
            return self._free_comult_cache[key]
        m = self.V.dim
        n = p + q
        if p == 0 or q == 0:
            out = Matrix.identity(m ** n)
        else:
            left = _slot_identity_kron(m, self.free_comult(p - 1, q))
            mover = Matrix.identity(m ** n)
            for i in range(1, p + 1):
                mover = _c_slot(self.c, m, n, i) * mover
            right = mover * _slot_identity_kron(m, self.free_comult(p, q - 1))
            out = left + right
        self._free_comult_cache[key] = out
        return out

    def comult_component(self, p, q) -> Matrix:
        """B^{p+q} -> B^p (x) B^q."""
        key = (p, q)
        if key not in self._comult_cache:
            cp, cq, cn = (self.component(p), self.component(q),
                          self.component(p + q))
            self._comult_cache[key] = cp.projection.kron(cq.projection) * \
                self.free_comult(p, q) * cn.section
        return self._comult_cache[key]


def _apply_slot(mat_v: Matrix, mat: Matrix, slot: int, m: int, n: int):
    """Apply a V-endomorphism on one tensor slot of columns of mat."""
    rows = mat.rows
    out = Matrix.zero(rows, mat.cols)
    stride = m ** (n - slot - 1)
    block = m ** (n - slot)
    for r, c, v in mat.nonzero_items():
        base = (r // block) * block
        inner = r % stride
        letter = (r // stride) % m
        col_v = mat_v.col(letter)
        for letter2, w in enumerate(col_v):
            if not w.is_zero():
                r2 = base + letter2 * stride + inner
                out.entries[r2 * out.cols + c] = \
                    out.entries[r2 * out.cols + c] + v * w
    return out


def _flatten(word, m):
    flat = 0
    for x in word:
        flat = flat * m + x
    return flat


def _unflatten(flat, m, n):
    word = []
    for _ in range(n):
        word.append(flat % m)
        flat //= m
    return tuple(reversed(word))


def _c_slot(c: Matrix, m: int, n: int, i: int) -> Matrix:
    """The braiding acting on slots (i, i+1) of V^(x)n, 1-based."""
    left = Matrix.identity(m ** (i - 1))
    right = Matrix.identity(m ** (n - i - 1))
    return left.kron(c).kron(right)


def _slot_identity_kron(m, mat):
    return Matrix.identity(m).kron(mat)


def check_braid_relation(c: Matrix, m: int):
    c1 = c.kron(Matrix.identity(m))
    c2 = Matrix.identity(m).kron(c)
    if c1 * c2 * c1 != c2 * c1 * c2:
        raise BraidRelationFailed("braiding fails the braid relation")


def quantum_symmetrizer(c: Matrix, n: int, m: int = None,
                        _checked=set()) -> Matrix:
    """The degree-n quantum symmetrizer of a braiding on V (x) V.

    Built by the shuffle recursion; the braid relation is verified once per
    braiding matrix.
    """
    if m is None:
        m = _int_sqrt(c.rows)
    key = id(c)
    if key not in _checked:
        check_braid_relation(c, m)
        _checked.add(key)
    if n <= 1:
        return Matrix.identity(m ** n)
    lower = quantum_symmetrizer(c, n - 1, m)
    total = Matrix.identity(m ** n)
    partial = Matrix.identity(m ** n)
    for i in range(1, n):
        partial = partial * _c_slot(c, m, n, i)
        total = total + partial
    return _slot_identity_kron(m, lower) * total


def _int_sqrt(k):
    m = int(round(k ** 0.5))
    assert m * m == k
    return m


def build_nichols(V: YDModule, max_degree: int,
                  require_finite: bool = False) -> NicholsAlgebra:
    """Compute components up to max_degree or until a zero component appears.

    DegreeBudgetExceeded is raised when require_finite is set and no zero
    component shows up within the budget.
    """
    assert max_degree >= 1
    m = V.dim
    c = braiding(V, V)
    one = Cyclotomic.one(1)
    components = [NicholsComponent(1, Matrix.identity(1), Matrix.identity(1))]
    if m == 0:
        return NicholsAlgebra(V, components, 0, True)
    components.append(NicholsComponent(m, Matrix.identity(m),
                                       Matrix.identity(m)))
    n_top = None
    for n in range(2, max_degree + 1):
        s = quantum_symmetrizer(c, n, m)
        proj, sec, dim = _quotient_by_kernel(s)
        if dim == 0:
            n_top = n - 1
            break
        components.append(NicholsComponent(dim, proj, sec))
    else:
        if require_finite:
            raise DegreeBudgetExceeded(
                f"no zero component up to degree {max_degree}")
    if n_top is None and components[-1].dim == 0:
        n_top = len(components) - 2
    B = NicholsAlgebra(V, components, n_top, n_top is not None)
    _check_degree_one_and_zero(B)
    return B


def _quotient_by_kernel(s: Matrix):
    """Projection/section presentation of source/ker(s)."""
    kernel = s.kernel_basis()
    n = s.cols
    dim = n - kernel.cols
    zero = Cyclotomic.zero(1)
    one = Cyclotomic.one(1)
    if kernel.cols == 0:
        eye = Matrix.identity(n)
        return eye, eye, n
    reduced, pivots = kernel.transpose().rref()
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    proj = [zero] * (dim * n)
    for j, fc in enumerate(free):
        proj[j * n + fc] = one
        for r, pc in enumerate(pivots):
            c = reduced[r, fc]
            if not c.is_zero():
                proj[j * n + pc] = -c
    sec = [zero] * (n * dim)
    for j, fc in enumerate(free):
        sec[fc * dim + j] = one
    return Matrix(dim, n, proj), Matrix(n, dim, sec), dim


def _check_degree_one_and_zero(B: NicholsAlgebra):
    if B.hilbert[0] != 1:
        raise MathInvariantViolation("degree zero is not a line")
    if len(B.hilbert) > 1 and B.hilbert[1] != B.V.dim:
        raise MathInvariantViolation("degree one does not match V")


def top_data(B: NicholsAlgebra):
    """(n_top, x_top, g_top, one-dim action matrices of the top line)."""
    if B.n_top is None:
        raise DegreeBudgetExceeded("top degree was not reached")
    comp = B.component(B.n_top)
    if comp.dim != 1:
        raise TopNotOneDimensional(
            f"top component has dimension {comp.dim}")
    H = B.V.H
    x_top = comp.section.col(0)
    g_vec = {}
    for (h, k, s) in B.coact_component(B.n_top)[0]:
        assert k == 0
        vadd_into(g_vec, {h: s})
    # group-likeness of the coaction leg, checked directly
    pairs = H.comult_elem(g_vec)
    expect = {}
    for a, x in g_vec.items():
        for b, y in g_vec.items():
            vadd_into(expect, {(a, b): x * y})
    if not vequal(pairs, expect) or not H.counit_elem(g_vec).is_one():
        raise MathInvariantViolation("top coaction leg is not group-like")
    lam = [B.act_on_component(h, B.n_top) for h in range(H.dim)]
    return B.n_top, x_top, g_vec, lam
