# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; semantics identical to trideco._kernels_py.

Coefficients are arbitrary-precision Python integers, so the speedup comes
from removing interpreter loop overhead in row reduction and matrix products,
not from fixed-width arithmetic.
"""

from math import gcd

BACKEND = "compiled"


def vec_mul(a, b, Py_ssize_t phi, red, Py_ssize_t n):
    cdef Py_ssize_t i, j, e
    if phi == 1:
        return [a[0] * b[0]]
    conv = [0] * (2 * phi - 1)
    for i in range(phi):
        x = a[i]
        if x:
            for j in range(phi):
                y = b[j]
                if y:
                    conv[i + j] = conv[i + j] + x * y
    out = conv[:phi]
    for e in range(phi, 2 * phi - 1):
        c = conv[e]
        if c:
            row = red[e % n]
            for i in range(phi):
                if row[i]:
                    out[i] = out[i] + c * row[i]
    return out


cdef bint _is_rational(vec, Py_ssize_t phi):
    cdef Py_ssize_t i
    for i in range(1, phi):
        if vec[i]:
            return False
    return True


cdef bint _any_entry(row, Py_ssize_t base, Py_ssize_t phi):
    cdef Py_ssize_t i
    for i in range(phi):
        if row[base + i]:
            return True
    return False


cdef list _axpy_block(prow, frow, p, f, Py_ssize_t phi, red, Py_ssize_t n,
                      bint p_rat, bint f_rat, Py_ssize_t ncols):
    cdef Py_ssize_t c, i, base
    cdef list out = [0] * (ncols * phi)
    if phi == 1:
        pv = p[0]
        fv = f[0]
        for c in range(ncols):
            out[c] = pv * frow[c] - fv * prow[c]
        return out
    for c in range(ncols):
        base = c * phi
        fe = frow[base:base + phi]
        pe = prow[base:base + phi]
        if p_rat:
            pv = p[0]
            left = [pv * x for x in fe] if pv else [0] * phi
        else:
            left = vec_mul(p, fe, phi, red, n) if _any_entry(frow, base, phi) else [0] * phi
        if f_rat:
            fv = f[0]
            right = [fv * x for x in pe] if fv else [0] * phi
        else:
            right = vec_mul(f, pe, phi, red, n) if _any_entry(prow, base, phi) else [0] * phi
        for i in range(phi):
            out[base + i] = left[i] - right[i]
    return out


cdef list _normalize_row(list row):
    cdef Py_ssize_t k
    g = 0
    for k in range(len(row)):
        x = row[k]
        if x:
            g = gcd(g, x if x > 0 else -x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def row_eliminate(list rows, Py_ssize_t ncols, Py_ssize_t phi, red, Py_ssize_t n):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t piv = 0, col, base, r, sel
    cdef bint p_rat, f_rat
    pivots = []
    for col in range(ncols):
        base = col * phi
        sel = -1
        for r in range(piv, nrows):
            if _any_entry(rows[r], base, phi):
                sel = r
                break
        if sel < 0:
            continue
        if sel != piv:
            rows[piv], rows[sel] = rows[sel], rows[piv]
        prow = rows[piv]
        p = prow[base:base + phi]
        p_rat = _is_rational(p, phi)
        for r in range(nrows):
            if r == piv:
                continue
            frow = rows[r]
            if not _any_entry(frow, base, phi):
                continue
            f = frow[base:base + phi]
            f_rat = _is_rational(f, phi)
            rows[r] = _normalize_row(
                _axpy_block(prow, frow, p, f, phi, red, n, p_rat, f_rat, ncols)
            )
        pivots.append(col)
        piv += 1
        if piv == nrows:
            break
    return pivots


def mat_mul(arows, brows, Py_ssize_t nk, Py_ssize_t ncols, Py_ssize_t phi,
            red, Py_ssize_t n):
    cdef Py_ssize_t k, j, i, abase, bbase
    cdef bint a_rat
    out = []
    for arow in arows:
        crow = [0] * (ncols * phi)
        for k in range(nk):
            abase = k * phi
            if not _any_entry(arow, abase, phi):
                continue
            a = arow[abase:abase + phi]
            brow = brows[k]
            a_rat = _is_rational(a, phi)
            if phi == 1:
                av = a[0]
                for j in range(ncols):
                    bv = brow[j]
                    if bv:
                        crow[j] = crow[j] + av * bv
                continue
            for j in range(ncols):
                bbase = j * phi
                if not _any_entry(brow, bbase, phi):
                    continue
                b = brow[bbase:bbase + phi]
                if a_rat:
                    av = a[0]
                    for i in range(phi):
                        crow[bbase + i] = crow[bbase + i] + av * b[i]
                else:
                    prod = vec_mul(a, b, phi, red, n)
                    for i in range(phi):
                        crow[bbase + i] = crow[bbase + i] + prod[i]
        out.append(crow)
    return out
