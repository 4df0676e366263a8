"""Dense exact matrices over cyclotomic fields.

A ``Matrix`` stores its entries row-major as ``Cyclotomic`` values promoted to
a common order.  Rank, kernel, solving and row reduction go through the packed
integer kernels (``trideco.kernels``); everything is exact, no floating point
is involved anywhere.  ``solve`` returns ``None`` to signal an inconsistent
system (the no-solution outcome is an expected value, not an error).
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import kernels
from .cyclotomic import Cyclotomic, euler_phi, power_table


class Matrix:
    __slots__ = ("rows", "cols", "order", "entries")

    def __init__(self, rows: int, cols: int, entries, order: int | None = None):
        assert rows >= 0 and cols >= 0
        entries = [Cyclotomic._coerce(e) for e in entries]
        assert len(entries) == rows * cols
        if order is None:
            order = 1
            for e in entries:
                order = order * e.order // math.gcd(order, e.order)
        self.rows = rows
        self.cols = cols
        self.order = order
        self.entries = [e.promote(order) if e.order != order else e
                        for e in entries]

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rows(rows_of_entries, order=None):
        r = len(rows_of_entries)
        c = len(rows_of_entries[0]) if r else 0
        flat = [e for row in rows_of_entries for e in row]
        return Matrix(r, c, flat, order)

    @staticmethod
    def zero(rows, cols, order=1):
        z = Cyclotomic.zero(order)
        return Matrix(rows, cols, [z] * (rows * cols), order)

    @staticmethod
    def identity(n, order=1):
        m = Matrix.zero(n, n, order)
        one = Cyclotomic.one(order)
        for i in range(n):
            m.entries[i * n + i] = one
        return m

    @staticmethod
    def column(values, order=None):
        return Matrix(len(values), 1, list(values), order)

    # -- access ----------------------------------------------------------

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r):
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def col(self, c):
        return [self.entries[r * self.cols + c] for r in range(self.rows)]

    def nonzero_items(self):
        for r in range(self.rows):
            base = r * self.cols
            for c in range(self.cols):
                e = self.entries[base + c]
                if not e.is_zero():
                    yield r, c, e

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries)
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, order={self.order})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.entries],
                      self.order)

    def scale(self, scalar):
        scalar = Cyclotomic._coerce(scalar)
        return Matrix(self.rows, self.cols,
                      [scalar * a for a in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        assert self.cols == other.rows, "inner dimensions must agree"
        zero = Cyclotomic.zero(1)
        out = [zero] * (self.rows * other.cols)
        oc = other.cols
        # iterate over nonzeros of the sparser factor
        if _nnz(self) <= _nnz(other):
            for r, k, a in self.nonzero_items():
                obase = k * oc
                rbase = r * oc
                for c in range(oc):
                    b = other.entries[obase + c]
                    if not b.is_zero():
                        out[rbase + c] = out[rbase + c] + a * b
        else:
            for k, c, b in other.nonzero_items():
                for r in range(self.rows):
                    a = self.entries[r * self.cols + k]
                    if not a.is_zero():
                        out[r * oc + c] = out[r * oc + c] + a * b
        return Matrix(self.rows, oc, out)

    def transpose(self):
        out = [self.entries[r * self.cols + c]
               for c in range(self.cols) for r in range(self.rows)]
        return Matrix(self.cols, self.rows, out, self.order)

    def kron(self, other):
        """Tensor (Kronecker) product, row-major index convention."""
        r, c = self.rows * other.rows, self.cols * other.cols
        zero = Cyclotomic.zero(1)
        out = [zero] * (r * c)
        for i1, j1, a in self.nonzero_items():
            for i2, j2, b in other.nonzero_items():
                out[(i1 * other.rows + i2) * c + (j1 * other.cols + j2)] = a * b
        return Matrix(r, c, out)

    def hstack(self, other):
        assert self.rows == other.rows
        out = []
        for r in range(self.rows):
            out.extend(self.row(r))
            out.extend(other.row(r))
        return Matrix(self.rows, self.cols + other.cols, out)

    def vstack(self, other):
        assert self.cols == other.cols
        return Matrix(self.rows + other.rows, self.cols,
                      self.entries + other.entries)

    def trace(self):
        assert self.rows == self.cols
        t = Cyclotomic.zero(self.order)
        for i in range(self.rows):
            t = t + self.entries[i * self.cols + i]
        return t

    # -- packed-kernel operations -----------------------------------------

    def _pack(self):
        """Rows as flat integer lists (per-row denominators cleared)."""
        n = self.order
        phi = euler_phi(n)
        red = power_table(n)
        packed = []
        for r in range(self.rows):
            row = self.row(r)
            den = 1
            for e in row:
                for c in e.coeffs:
                    den = den * c.denominator // math.gcd(den, c.denominator)
            flat = []
            for e in row:
                for c in e.coeffs:
                    flat.append(c.numerator * (den // c.denominator))
            packed.append(flat)
        return packed, phi, red, n

    def _unpack_entry(self, flat, base, phi):
        return Cyclotomic(self.order,
                          [Fraction(flat[base + i]) for i in range(phi)])

    def rref(self):
        """Reduced row echelon form (pivots normalized to 1) and pivot columns."""
        packed, phi, red, n = self._pack()
        pivots = kernels.row_eliminate(packed, self.cols, phi, red, n)
        out = []
        for r, flat in enumerate(packed):
            row = [self._unpack_entry(flat, c * phi, phi)
                   for c in range(self.cols)]
            if r < len(pivots):
                inv = row[pivots[r]].inverse()
                row = [inv * e for e in row]
            out.extend(row)
        return Matrix(self.rows, self.cols, out, self.order), pivots

    def rank(self):
        packed, phi, red, n = self._pack()
        return len(kernels.row_eliminate(packed, self.cols, phi, red, n))

    def kernel_basis(self):
        """Columns form a basis of the right null space; rank + cols(out) = cols."""
        packed, phi, red, n = self._pack()
        pivots = kernels.row_eliminate(packed, self.cols, phi, red, n)
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        zero = Cyclotomic.zero(self.order)
        out = [zero] * (self.cols * len(free))
        for j, fc in enumerate(free):
            out[fc * len(free) + j] = Cyclotomic.one(self.order)
            for r, pc in enumerate(pivots):
                num = self._unpack_entry(packed[r], fc * phi, phi)
                if not num.is_zero():
                    piv = self._unpack_entry(packed[r], pc * phi, phi)
                    out[pc * len(free) + j] = -(num * piv.inverse())
        return Matrix(self.cols, len(free), out, self.order)

    def solve(self, b: "Matrix"):
        """One exact solution of self * X = b, or None if inconsistent."""
        assert self.rows == b.rows
        aug = self.hstack(b)
        packed, phi, red, n = aug._pack()
        pivots = kernels.row_eliminate(packed, aug.cols, phi, red, n)
        if pivots and pivots[-1] >= self.cols:
            return None
        for r in range(len(pivots), self.rows):
            if any(packed[r]):
                return None
        zero = Cyclotomic.zero(aug.order)
        out = [zero] * (self.cols * b.cols)
        for r, pc in enumerate(pivots):
            piv = aug._unpack_entry(packed[r], pc * phi, phi)
            inv = piv.inverse()
            for j in range(b.cols):
                val = aug._unpack_entry(packed[r], (self.cols + j) * phi, phi)
                if not val.is_zero():
                    out[pc * b.cols + j] = inv * val
        return Matrix(self.cols, b.cols, out, aug.order)

    def inverse(self):
        """Exact inverse, or None when singular."""
        assert self.rows == self.cols
        sol = self.solve(Matrix.identity(self.rows, self.order))
        if sol is None:
            return None
        # solve() guarantees M * sol = id on consistent systems; for square M
        # that forces invertibility iff rank was full
        check = self * sol
        return sol if check == Matrix.identity(self.rows, self.order) else None


def _nnz(m: Matrix) -> int:
    return sum(1 for e in m.entries if not e.is_zero())


def mat_mul_packed(a: Matrix, b: Matrix) -> Matrix:
    """Dense product through the packed kernel (used by the benchmark)."""
    assert a.cols == b.rows
    n = a.order * b.order // math.gcd(a.order, b.order)
    a = Matrix(a.rows, a.cols, a.entries, n)
    b = Matrix(b.rows, b.cols, b.entries, n)
    phi = euler_phi(n)
    red = power_table(n)

    def pack_global(m):
        den = 1
        for e in m.entries:
            for c in e.coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
        rows = []
        for r in range(m.rows):
            flat = []
            for e in m.row(r):
                for c in e.coeffs:
                    flat.append(c.numerator * (den // c.denominator))
            rows.append(flat)
        return rows, den

    arows, da = pack_global(a)
    brows, db = pack_global(b)
    crows = kernels.mat_mul(arows, brows, a.cols, b.cols, phi, red, n)
    den = Fraction(1, da * db)
    out = []
    for flat in crows:
        for c in range(b.cols):
            out.append(Cyclotomic(
                n, [Fraction(flat[c * phi + i]) * den for i in range(phi)]))
    return Matrix(a.rows, b.cols, out, n)
