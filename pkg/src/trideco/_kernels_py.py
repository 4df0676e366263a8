"""Pure-Python hot kernels for exact dense linear algebra over Q(zeta_n).

All functions work on *packed* data: a matrix row is a flat list of Python
integers of length ``ncols * phi`` (phi consecutive integers per entry are the
power-basis numerators of one cyclotomic entry; denominators are handled by
the caller, since row reduction is insensitive to row scaling).  ``red`` is
the power table of the field: ``red[e]`` gives the integer coordinates of
zeta^e, for e in 0..n-1.

The compiled extension ``trideco._speedups`` implements the same functions
with identical semantics; ``trideco.kernels`` picks one at import time.
"""

from math import gcd

BACKEND = "python"


def vec_mul(a, b, phi, red, n):
    """Product of two packed cyclotomic entries (integer coordinate lists)."""
    if phi == 1:
        return [a[0] * b[0]]
    conv = [0] * (2 * phi - 1)
    for i in range(phi):
        x = a[i]
        if x:
            for j in range(phi):
                y = b[j]
                if y:
                    conv[i + j] += x * y
    out = conv[:phi]
    for e in range(phi, 2 * phi - 1):
        c = conv[e]
        if c:
            row = red[e % n]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return out


def _is_rational(vec, phi):
    for i in range(1, phi):
        if vec[i]:
            return False
    return True


def _axpy_block(prow, frow, p, f, phi, red, n, p_rat, f_rat, ncols):
    """new_row = p * frow - f * prow, blockwise over packed entries."""
    out = [0] * (ncols * phi)
    if phi == 1:
        pv = p[0]
        fv = f[0]
        for idx in range(ncols):
            out[idx] = pv * frow[idx] - fv * prow[idx]
        return out
    for c in range(ncols):
        base = c * phi
        fe = frow[base:base + phi]
        pe = prow[base:base + phi]
        if p_rat:
            pv = p[0]
            left = [pv * x for x in fe] if pv else [0] * phi
        else:
            left = vec_mul(p, fe, phi, red, n) if any(fe) else [0] * phi
        if f_rat:
            fv = f[0]
            right = [fv * x for x in pe] if fv else [0] * phi
        else:
            right = vec_mul(f, pe, phi, red, n) if any(pe) else [0] * phi
        for i in range(phi):
            out[base + i] = left[i] - right[i]
    return out


def _normalize_row(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x if x > 0 else -x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def row_eliminate(rows, ncols, phi, red, n):
    """In-place Gauss-Jordan elimination over Q(zeta_n); returns pivot columns.

    Afterwards each pivot row has the only nonzero entry of its pivot column
    (the pivot itself, an arbitrary nonzero field element); pivot rows are
    ordered by pivot column and come first.
    """
    nrows = len(rows)
    pivots = []
    piv = 0
    for col in range(ncols):
        base = col * phi
        sel = -1
        for r in range(piv, nrows):
            row = rows[r]
            nz = False
            for i in range(phi):
                if row[base + i]:
                    nz = True
                    break
            if nz:
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
            f = frow[base:base + phi]
            if not any(f):
                continue
            f_rat = _is_rational(f, phi)
            rows[r] = _normalize_row(
                _axpy_block(prow, frow, p, f, phi, red, n, p_rat, f_rat, ncols)
            )
        pivots.append(col)
        piv += 1
        if piv == nrows:
            break
    return pivots


def mat_mul(arows, brows, nk, ncols, phi, red, n):
    """Packed matrix product; ``nk`` is the inner dimension."""
    out = []
    for arow in arows:
        crow = [0] * (ncols * phi)
        for k in range(nk):
            abase = k * phi
            a = arow[abase:abase + phi]
            if not any(a):
                continue
            brow = brows[k]
            a_rat = _is_rational(a, phi)
            if phi == 1:
                av = a[0]
                for j in range(ncols):
                    bv = brow[j]
                    if bv:
                        crow[j] += av * bv
                continue
            for j in range(ncols):
                bbase = j * phi
                b = brow[bbase:bbase + phi]
                if not any(b):
                    continue
                if a_rat:
                    av = a[0]
                    for i in range(phi):
                        crow[bbase + i] += av * b[i]
                else:
                    prod = vec_mul(a, b, phi, red, n)
                    for i in range(phi):
                        crow[bbase + i] += prod[i]
        out.append(crow)
    return out
