"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) of
Q[x]/(Phi_n(x)) with arbitrary-precision rational coordinates.  Reduction
modulo the cyclotomic polynomial is canonical, so equal field elements of the
same order have identical coordinate tuples.  Mixed orders are supported by
promoting both operands into Q(zeta_lcm); hashing and cross-order equality go
through a minimal-order canonical form.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    assert n >= 1
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, ascending degree, via division of x^n - 1."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_divexact(num, den):
    # Exact division of integer polynomials (ascending coefficients).
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for i, dc in enumerate(den):
            num[k + i] -= q * dc
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def power_table(n: int) -> tuple:
    """x^k mod Phi_n for k = 0..n-1, each an integer vector of length phi(n)."""
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)  # monic, degree phi
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x, reduce the overflow coefficient via Phi_n
        top = cur[phi - 1]
        nxt = [0] + cur[: phi - 1]
        if top:
            for i in range(phi):
                nxt[i] -= top * poly[i]
        cur = nxt
    return tuple(rows)


def _reduce_product(conv, n, phi):
    """Reduce a raw convolution (length <= 2*phi-1) into the power basis."""
    table = power_table(n)
    out = list(conv[:phi]) + [0] * max(0, phi - len(conv))
    out = out[:phi]
    for e in range(phi, len(conv)):
        c = conv[e]
        if c:
            row = table[e % n]
            for i in range(phi):
                out[i] += c * row[i]
    return out


class Cyclotomic:
    """An exact element of Q(zeta_n)."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs):
        assert order >= 1
        phi = euler_phi(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        assert len(coeffs) == phi, "need phi(order) coordinates"
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(order: int = 1) -> "Cyclotomic":
        return Cyclotomic(order, [_ZERO] * euler_phi(order))

    @staticmethod
    def one(order: int = 1) -> "Cyclotomic":
        c = [_ZERO] * euler_phi(order)
        c[0] = _ONE
        return Cyclotomic(order, c)

    @staticmethod
    def rational(q, order: int = 1) -> "Cyclotomic":
        c = [_ZERO] * euler_phi(order)
        c[0] = Fraction(q)
        return Cyclotomic(order, c)

    # -- promotion ----------------------------------------------------

    def promote(self, order: int) -> "Cyclotomic":
        """Image of self under Q(zeta_m) -> Q(zeta_order), m | order."""
        m = self.order
        if m == order:
            return self
        assert order % m == 0
        step = order // m
        phi = euler_phi(order)
        table = power_table(order)
        out = [_ZERO] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[(step * i) % order]
                for k in range(phi):
                    if row[k]:
                        out[k] += c * row[k]
        return Cyclotomic(order, out)

    def _common(self, other):
        n = self.order * other.order // math.gcd(self.order, other.order)
        return self.promote(n), other.promote(n), n

    @staticmethod
    def _coerce(value):
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclotomic.rational(value)
        return NotImplemented

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    @property
    def rational_value(self) -> Fraction:
        assert self.is_rational()
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, n = self._common(other)
        return Cyclotomic(n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, n = self._common(other)
        phi = euler_phi(n)
        if phi == 1:
            return Cyclotomic(n, [a.coeffs[0] * b.coeffs[0]])
        conv = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        return Cyclotomic(n, _reduce_product(conv, n, phi))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Field inverse via the extended Euclid algorithm modulo Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coeffs[0], self.order)
        n = self.order
        mod = [Fraction(c) for c in cyclotomic_polynomial(n)]
        a = list(self.coeffs)
        # extended gcd of a and mod in Q[x]; gcd is a nonzero constant
        r0, r1 = mod, _poly_trim(a)
        s0, s1 = [], [_ONE]
        while _poly_deg(r1) > 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        assert r1, "Phi_n must be coprime to any nonzero residue"
        inv_c = 1 / r1[0]
        coeffs = [c * inv_c for c in s1]
        coeffs += [_ZERO] * (euler_phi(n) - len(coeffs))
        return Cyclotomic(n, coeffs[: euler_phi(n)])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / canonical form ----------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        a, b, _ = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            c = self.canonical()
            self._hash = hash((c.order, c.coeffs))
        return self._hash

    def canonical(self) -> "Cyclotomic":
        """Rewrite in the smallest cyclotomic field containing the element."""
        cur = self
        changed = True
        while changed:
            changed = False
            n = cur.order
            for p in _prime_divisors(n):
                down = _descend(cur, n // p)
                if down is not None:
                    cur = down
                    changed = True
                    break
        return cur

    def conjugates(self):
        """Galois orbit: images of zeta -> zeta^j over gcd(j, n) = 1."""
        n = self.order
        table = power_table(n)
        phi = euler_phi(n)
        out = []
        for j in range(1, n + 1):
            if math.gcd(j, n) != 1:
                continue
            coeffs = [_ZERO] * phi
            for i, c in enumerate(self.coeffs):
                if c:
                    row = table[(i * j) % n]
                    for k in range(phi):
                        if row[k]:
                            coeffs[k] += c * row[k]
            out.append(Cyclotomic(n, coeffs))
        return out

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.coeffs[0]})"
        return f"Cyc(z{self.order}; {list(map(str, self.coeffs))})"


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k as an exact cyclotomic; its multiplicative order is n/gcd(n,k)."""
    assert n >= 1
    k %= n
    phi = euler_phi(n)
    row = power_table(n)[k]
    return Cyclotomic(n, [Fraction(c) for c in row[:phi]])


# -- small rational polynomial helpers (ascending coefficient lists) ---


def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_deg(p):
    return len(p) - 1


def _poly_sub(a, b):
    out = [_ZERO] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    return _poly_trim(q), _poly_trim(a)


@lru_cache(maxsize=None)
def _prime_divisors(n):
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def _descend(value: Cyclotomic, d: int):
    """Express value in Q(zeta_d) if possible (d | order), else None."""
    n = value.order
    step = n // d
    phi_n = euler_phi(n)
    phi_d = euler_phi(d)
    table = power_table(n)
    # columns: images of the Q(zeta_d) power basis inside Q(zeta_n)
    cols = [table[(step * i) % n] for i in range(phi_d)]
    # solve cols * x = value.coeffs by rational Gaussian elimination
    rows = [[Fraction(cols[j][i]) for j in range(phi_d)] + [value.coeffs[i]]
            for i in range(phi_n)]
    piv = 0
    pivots = []
    for col in range(phi_d):
        sel = None
        for r in range(piv, phi_n):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        rows[piv], rows[sel] = rows[sel], rows[piv]
        inv = 1 / rows[piv][col]
        rows[piv] = [c * inv for c in rows[piv]]
        for r in range(phi_n):
            if r != piv and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [c - f * p for c, p in zip(rows[r], rows[piv])]
        pivots.append(col)
        piv += 1
    for r in range(piv, phi_n):
        if rows[r][phi_d] != 0:
            return None
    sol = [_ZERO] * phi_d
    for r, col in enumerate(pivots):
        sol[col] = rows[r][phi_d]
    return Cyclotomic(d, sol)
