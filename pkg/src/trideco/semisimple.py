"""Exact splitting machinery for finite-dimensional algebras and modules.

Contains the generic tools used by weight enumeration, group-like search and
projective-cover computation: Jacobson radicals through the regular trace
form (valid in characteristic zero), minimal polynomials, factorization over
the working cyclotomic field (delegated to sympy's exact algebraic-number
factorization), CRT idempotents, corner recursion for primitive idempotent
systems, and Newton lifting of idempotents modulo the radical.

Everything operates on a plain structure-constant view of the algebra, so
Hopf algebras, endomorphism rings and quotients all go through the same code.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclotomic import Cyclotomic, euler_phi
from .errors import FieldNotSplitting, MathInvariantViolation
from .linalg import Matrix
from .sparsevec import vadd_into, vequal


class StructAlgebra:
    """A unital algebra given by sparse structure constants on a basis.

    field_order fixes the cyclotomic field the algebra is allowed to split
    over; eigenvalue hunting never leaves Q(zeta_field_order).
    """

    def __init__(self, dim, mult, unit, field_order=1):
        self.dim = dim
        self.mult = mult
        self.unit = unit
        self.field_order = field_order

    def multiply(self, u, v):
        acc = {}
        for i, a in u.items():
            mi = self.mult[i]
            for j, b in v.items():
                prod = mi[j]
                if prod:
                    vadd_into(acc, prod, a * b)
        return acc

    def left_matrix(self, u):
        zero = Cyclotomic.zero(1)
        cols = [self.multiply(u, {j: Cyclotomic.one(1)})
                for j in range(self.dim)]
        return Matrix(self.dim, self.dim,
                      [cols[j].get(i, zero)
                       for i in range(self.dim) for j in range(self.dim)])

    def elem_from_column(self, col: Matrix, j=0):
        return {i: col[i, j] for i in range(self.dim)
                if not col[i, j].is_zero()}


def radical_basis(alg: StructAlgebra) -> Matrix:
    """Columns span the Jacobson radical (trace-form kernel, char 0)."""
    n = alg.dim
    traces = [alg.left_matrix({i: Cyclotomic.one(1)}).trace()
              for i in range(n)]
    gram = []
    for i in range(n):
        for j in range(n):
            t = Cyclotomic.zero(1)
            for k, c in alg.mult[i][j].items():
                t = t + c * traces[k]
            gram.append(t)
    return Matrix(n, n, gram).kernel_basis()


def quotient_algebra(alg: StructAlgebra, ideal: Matrix):
    """Quotient by a two-sided ideal; returns (algebra, projection, section).

    projection maps old coordinates to quotient coordinates; section picks
    coset representatives (projection * section = id).
    """
    n = alg.dim
    if ideal.cols == 0:
        proj = Matrix.identity(n)
        return alg, proj, proj
    reduced, pivots = ideal.transpose().rref()
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    zero = Cyclotomic.zero(1)
    one = Cyclotomic.one(1)
    m = len(free)
    proj_ents = [zero] * (m * n)
    for j, fc in enumerate(free):
        proj_ents[j * n + fc] = one
        for r, pc in enumerate(pivots):
            c = reduced[r, fc]
            if not c.is_zero():
                proj_ents[j * n + pc] = -c
    proj = Matrix(m, n, proj_ents)
    sec_ents = [zero] * (n * m)
    for j, fc in enumerate(free):
        sec_ents[fc * m + j] = one
    section = Matrix(n, m, sec_ents)

    def project_elem(u):
        acc = {}
        for i, c in u.items():
            for q in range(m):
                e = proj[q, i]
                if not e.is_zero():
                    vadd_into(acc, {q: c * e})
        return acc

    mult = [[None] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            prod = alg.multiply({free[a]: one}, {free[b]: one})
            mult[a][b] = project_elem(prod)
    unit = project_elem(alg.unit)
    return StructAlgebra(m, mult, unit, alg.field_order), proj, section


def commutator_ideal(alg: StructAlgebra) -> Matrix:
    """Two-sided ideal generated by all commutators of basis elements."""
    n = alg.dim
    one = Cyclotomic.one(1)
    zero = Cyclotomic.zero(1)
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            c = dict(alg.mult[i][j])
            vadd_into(c, alg.mult[j][i], Cyclotomic.rational(-1))
            if c:
                gens.append(c)
    # close under left and right multiplication
    span = Matrix(n, len(gens),
                  [g.get(r, zero) for r in range(n) for g in gens]) \
        if gens else Matrix.zero(n, 0)
    span, _ = _col_reduce(span)
    changed = True
    while changed:
        changed = False
        cols = [span.col(c) for c in range(span.cols)]
        extra = []
        for col in cols:
            elem = {i: v for i, v in enumerate(col) if not v.is_zero()}
            for b in range(n):
                eb = {b: one}
                for prod in (alg.multiply(eb, elem), alg.multiply(elem, eb)):
                    extra.append(prod)
        if extra:
            add = Matrix(n, len(extra),
                         [e.get(r, zero) for r in range(n) for e in extra])
            bigger, _ = _col_reduce(span.hstack(add))
            if bigger.cols > span.cols:
                span = bigger
                changed = True
    return span


def _col_reduce(m: Matrix):
    """Independent columns spanning the same column space."""
    _, pivots = m.rref()
    cols = [m.col(p) for p in pivots]
    zero = Cyclotomic.zero(1)
    ents = [cols[j][i] if cols else zero
            for i in range(m.rows) for j in range(len(cols))]
    return Matrix(m.rows, len(cols), ents), pivots


def min_poly(op: Matrix, order_hint=1):
    """Monic minimal polynomial of a square matrix, ascending coefficients."""
    n = op.rows
    powers = [Matrix.identity(n, op.order)]
    flat = [list(powers[0].entries)]
    while True:
        powers.append(powers[-1] * op)
        flat.append(list(powers[-1].entries))
        k = len(flat) - 1
        stacked = Matrix(n * n, k, [flat[j][e] for e in range(n * n)
                                    for j in range(k)])
        target = Matrix.column(flat[k])
        sol = stacked.solve(target)
        if sol is not None:
            coeffs = [-sol[j, 0] for j in range(k)] + [Cyclotomic.one(1)]
            return coeffs
        assert k <= n, "minimal polynomial degree exceeded dimension"


@lru_cache(maxsize=None)
def _sympy_field(order: int):
    import sympy as sp
    from sympy.polys.domains import QQ

    if order <= 2:
        return QQ, None
    zeta = sp.exp(2 * sp.pi * sp.I / order)
    return QQ.algebraic_field(zeta), zeta


def _to_sympy_coeff(K, order, c: Cyclotomic):
    c = c.promote(order) if c.order != order else c
    if order <= 2:
        return K.from_sympy(_frac_to_sympy(c.coeffs[0]))
    phi = euler_phi(order)
    # ANP wants descending power-basis coordinates
    return K([_frac_to_sympy(c.coeffs[i]) for i in range(phi - 1, -1, -1)])


def _frac_to_sympy(f: Fraction):
    import sympy as sp

    return sp.Rational(f.numerator, f.denominator)


def _from_sympy_coeff(order, a) -> Cyclotomic:
    if order <= 2:
        return Cyclotomic.rational(Fraction(a.numerator, a.denominator))
    rep = a.rep.to_list() if hasattr(a.rep, "to_list") else list(a.rep)
    phi = euler_phi(order)
    coeffs = [Fraction(0)] * phi
    for pw, q in enumerate(reversed(rep)):
        coeffs[pw] = Fraction(q.numerator, q.denominator)
    return Cyclotomic(order, coeffs)


def factor_poly(coeffs, order: int):
    """Factor a monic polynomial over Q(zeta_order).

    coeffs are ascending Cyclotomic coefficients.  Returns a deterministic
    sorted list of (ascending coefficient list, multiplicity) with monic
    factors.
    """
    import math

    import sympy as sp

    for c in coeffs:
        cc = c.canonical()
        order = order * cc.order // math.gcd(order, cc.order)
    K, _ = _sympy_field(order)
    t = sp.symbols("t")
    sym = [_to_sympy_coeff(K, order, c) for c in reversed(coeffs)]
    poly = sp.Poly(sym, t, domain=K)
    _, factors = poly.factor_list()
    out = []
    for f, mult in factors:
        lst = f.rep.to_list() if hasattr(f.rep, "to_list") else f.all_coeffs()
        asc = [_from_sympy_coeff(order, a) for a in reversed(lst)]
        lead = asc[-1]
        if not lead.is_one():
            inv = lead.inverse()
            asc = [inv * a for a in asc]
        out.append((asc, mult))
    out.sort(key=lambda fm: (len(fm[0]), _poly_key(fm[0])))
    return out


def _poly_key(coeffs):
    key = []
    for c in coeffs:
        cc = c.canonical()
        key.append((cc.order,
                    tuple((q.numerator, q.denominator) for q in cc.coeffs)))
    return tuple(key)


def eval_poly(coeffs, op: Matrix) -> Matrix:
    acc = Matrix.zero(op.rows, op.rows, op.order)
    for c in reversed(coeffs):
        acc = acc * op
        if not c.is_zero():
            for i in range(op.rows):
                acc.entries[i * op.rows + i] = \
                    acc.entries[i * op.rows + i] + c
    return acc


def _power_list(f, m):
    out = [Cyclotomic.one(1)]
    for _ in range(m):
        out = _poly_mul_c(out, f)
    return out


def _poly_mul_c(a, b):
    out = [Cyclotomic.zero(1)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return out


def _poly_divmod_c(a, b):
    a = list(a)
    while a and a[-1].is_zero():
        a.pop()
    q = [Cyclotomic.zero(1)] * max(0, len(a) - len(b) + 1)
    inv = b[-1].inverse()
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if not c.is_zero():
            for i, bc in enumerate(b):
                a[k + i] = a[k + i] - c * bc
    while a and a[-1].is_zero():
        a.pop()
    return q, a


def _poly_ext_gcd_c(a, b):
    """(g, s, t) with s a + t b = g over the cyclotomic field."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Cyclotomic.one(1)], []
    t0, t1 = [], [Cyclotomic.one(1)]
    while r1:
        q, r = _poly_divmod_c(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_c(s0, _poly_mul_c(q, s1) if q else [])
        t0, t1 = t1, _poly_sub_c(t0, _poly_mul_c(q, t1) if q else [])
    return r0, s0, t0


def _poly_sub_c(a, b):
    out = [Cyclotomic.zero(1)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = out[i] + c
    for i, c in enumerate(b):
        out[i] = out[i] - c
    while out and out[-1].is_zero():
        out.pop()
    return out


def _partial_fraction_idempotents(alg: StructAlgebra, z: dict, factors):
    """e_k = h_k(z) with h_k = 1 mod p_k^{m_k} and 0 mod the others."""
    lz = alg.left_matrix(z)
    unit_col = Matrix.column([alg.unit.get(i, Cyclotomic.zero(1))
                              for i in range(alg.dim)])
    idems = []
    for k, (f, m) in enumerate(factors):
        pk = _power_list(f, m)
        rest = [Cyclotomic.one(1)]
        for j, (g, mj) in enumerate(factors):
            if j != k:
                rest = _poly_mul_c(rest, _power_list(g, mj))
        g, s, t = _poly_ext_gcd_c(rest, pk)
        assert len(g) == 1, "factors are not coprime"
        ginv = g[0].inverse()
        h = _poly_mul_c([c * ginv for c in s], rest)
        ecol = eval_poly(h, lz) * unit_col
        idems.append(alg.elem_from_column(ecol))
    return idems


def is_idempotent(alg: StructAlgebra, e: dict) -> bool:
    return vequal(alg.multiply(e, e), e)


def primitive_idempotents(alg: StructAlgebra, max_combo=8):
    """Complete orthogonal primitive idempotent system of a split semisimple
    algebra.  Raises FieldNotSplitting when factorizations refuse to split."""
    one = Cyclotomic.one(1)
    system = []

    def refine(e, sub_basis):
        # sub_basis: columns spanning e*alg*e
        dim = sub_basis.cols
        if dim == 1:
            system.append(e)
            return
        corner_elems = [alg.elem_from_column(sub_basis, j)
                        for j in range(dim)]
        z = _find_splitter(alg, e, corner_elems, max_combo)
        if z is None:
            raise FieldNotSplitting(
                "corner algebra does not split over the working field")
        kind, data = z
        if kind == "crt":
            zz, factors = data
            parts = _partial_fraction_idempotents_corner(alg, e, zz, factors)
        else:
            parts = data
        for part in parts:
            refine(part, _corner_basis(alg, part))

    unit = alg.unit
    refine(unit, _corner_basis(alg, unit))
    return system


def _corner_basis(alg: StructAlgebra, e: dict) -> Matrix:
    n = alg.dim
    zero = Cyclotomic.zero(1)
    cols = []
    for i in range(n):
        v = alg.multiply(alg.multiply(e, {i: Cyclotomic.one(1)}), e)
        cols.append(v)
    m = Matrix(n, n, [cols[j].get(i, zero)
                      for i in range(n) for j in range(n)])
    reduced, _ = _col_reduce(m)
    return reduced


def _find_splitter(alg, e, corner_elems, max_combo):
    """A way to split the corner: CRT data or a two-piece idempotent split."""
    candidates = list(corner_elems)
    base = [c for c in corner_elems]
    for c1 in base[:max_combo]:
        for c2 in base[:max_combo]:
            if c1 is not c2:
                combo = dict(c1)
                vadd_into(combo, alg.multiply(c1, c2))
                candidates.append(combo)
    for z in candidates:
        res = _try_split_corner(alg, e, z)
        if res is not None:
            return res
    return None


def _try_split_corner(alg, e, z):
    # work inside the corner: restrict left-multiplication to e*A*e
    basis = _corner_basis(alg, e)
    if basis.cols <= 1:
        return None
    restricted = _restrict_left_mult(alg, z, basis)
    mp = min_poly(restricted)
    if len(mp) <= 2:
        return None  # scalar on the corner
    factors = factor_poly(mp, alg.field_order)
    if len(factors) >= 2:
        return ("crt", (z, factors))
    f, m = factors[0]
    if len(f) == 2 and m >= 2:
        # z = lam*e + nilpotent: use the nilpotent part's left ideal
        lam = -f[0]
        nil = dict(z)
        vadd_into(nil, e, -lam)
        idem = _left_ideal_identity(alg, e, nil, basis)
        if idem is None:
            return None
        rest = dict(e)
        vadd_into(rest, idem, Cyclotomic.rational(-1))
        return ("split", [idem, rest])
    return None


def _restrict_left_mult(alg, z, basis: Matrix):
    lz = alg.left_matrix(z)
    img = lz * basis
    coords = basis.solve(img)
    if coords is None:
        raise MathInvariantViolation("corner is not invariant")
    return coords


def _left_ideal_identity(alg, e, z, corner_basis: Matrix):
    """Right identity of the left ideal (corner)*z inside the corner."""
    n = alg.dim
    zero = Cyclotomic.zero(1)
    gens = []
    for j in range(corner_basis.cols):
        c = alg.elem_from_column(corner_basis, j)
        gens.append(alg.multiply(c, z))
    span = Matrix(n, len(gens), [g.get(i, zero)
                                 for i in range(n) for g in gens])
    span, _ = _col_reduce(span)
    if span.cols == 0:
        return None
    # unknown f in the ideal with x*f = x for every ideal basis element x
    cols = [alg.elem_from_column(span, j) for j in range(span.cols)]
    prods = [[alg.multiply(x, f) for f in cols] for x in cols]
    m = span.cols
    sys_rows = []
    rhs_rows = []
    for i, x in enumerate(cols):
        for coord in range(n):
            sys_rows.append([prods[i][j].get(coord, zero) for j in range(m)])
            rhs_rows.append([x.get(coord, zero)])
    sys = Matrix.from_rows(sys_rows) if sys_rows else Matrix.zero(0, m)
    rhs_m = Matrix.from_rows(rhs_rows) if rhs_rows else Matrix.zero(0, 1)
    sol = sys.solve(rhs_m)
    if sol is None:
        return None
    f = {}
    for j in range(m):
        if not sol[j, 0].is_zero():
            vadd_into(f, cols[j], sol[j, 0])
    if not is_idempotent(alg, f) or not f:
        return None
    return f


def _partial_fraction_idempotents_corner(alg, e, z, factors):
    """CRT idempotents refining e: polynomials in z relative to the unit e."""
    idems = []
    for k, (f, mk) in enumerate(factors):
        pk = _power_list(f, mk)
        rest = [Cyclotomic.one(1)]
        for j, (g, mj) in enumerate(factors):
            if j != k:
                rest = _poly_mul_c(rest, _power_list(g, mj))
        g, s, t = _poly_ext_gcd_c(rest, pk)
        assert len(g) == 1, "factors are not coprime"
        ginv = g[0].inverse()
        h = _poly_mul_c([c * ginv for c in s], rest)
        # evaluate h at z with unit e: h(z) = sum h_i z^i, z^0 := e
        acc = {}
        power = dict(e)
        for c in h:
            if not c.is_zero():
                vadd_into(acc, power, c)
            power = alg.multiply(power, z)
        idems.append(acc)
    total = {}
    for i in idems:
        vadd_into(total, i)
    assert vequal(total, e), "CRT idempotents do not sum to the corner unit"
    return idems


def lift_idempotents(alg: StructAlgebra, rad: Matrix, quotient_idems,
                     proj, section):
    """Lift an orthogonal idempotent system of alg/rad back into alg."""
    lifted = []
    f_total = {}
    one = Cyclotomic.one(1)
    for ebar in quotient_idems:
        # preimage via the section
        x = {}
        for q, c in ebar.items():
            for i in range(alg.dim):
                s = section[i, q]
                if not s.is_zero():
                    vadd_into(x, {i: c * s})
        # squeeze into the corner of (1 - sum of lifted)
        rest = dict(alg.unit)
        vadd_into(rest, f_total, Cyclotomic.rational(-1))
        x = alg.multiply(alg.multiply(rest, x), rest)
        for _ in range(64):
            if is_idempotent(alg, x):
                break
            x2 = alg.multiply(x, x)
            x3 = alg.multiply(x2, x)
            new = {}
            vadd_into(new, x2, Cyclotomic.rational(3))
            vadd_into(new, x3, Cyclotomic.rational(-2))
            x = new
        else:
            raise MathInvariantViolation("idempotent lifting did not converge")
        lifted.append(x)
        vadd_into(f_total, x)
    if not vequal(f_total, alg.unit):
        raise MathInvariantViolation("lifted idempotents do not sum to 1")
    return lifted
