"""Sparse vectors: dict {basis index: nonzero Cyclotomic}.

Used for algebra elements, tensor legs (tuple-valued keys) and anywhere the
dense dimension would be wasteful.  All helpers keep the no-zero-values
invariant.
"""

from .cyclotomic import Cyclotomic


def vzero():
    return {}


def vadd_into(acc, other, scale=None):
    for k, v in other.items():
        w = v if scale is None else scale * v
        if k in acc:
            s = acc[k] + w
            if s.is_zero():
                del acc[k]
            else:
                acc[k] = s
        elif not w.is_zero():
            acc[k] = w
    return acc


def vscale(v, s):
    if s.is_zero():
        return {}
    return {k: s * x for k, x in v.items()}


def vneg(v):
    return {k: -x for k, x in v.items()}


def vequal(a, b):
    if set(a) != set(b):
        return False
    return all(a[k] == b[k] for k in a)


def vfrom(pairs):
    acc = {}
    for k, v in pairs:
        vadd_into(acc, {k: v} if not v.is_zero() else {})
    return acc


def vdense(v, dim, order=1):
    out = [Cyclotomic.zero(order)] * dim
    for k, x in v.items():
        out[k] = x
    return out
