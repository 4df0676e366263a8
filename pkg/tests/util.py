"""Shared constructions for the test suite: group tables and small doubles."""

from trideco.cyclotomic import Cyclotomic
from trideco.hopf import drinfeld_double, group_algebra


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def s3_table():
    # permutations of {0,1,2} in one-line notation, identity first
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    idx = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p*q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(3))

    return [[idx[compose(p, q)] for q in perms] for p in perms], perms


def double_of_cyclic(n):
    return drinfeld_double(group_algebra(cyclic_table(n)))


def double_of_s3():
    table, _ = s3_table()
    return drinfeld_double(group_algebra(table))


def one():
    return Cyclotomic.one(1)


def sign_of_perm(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p))
              if p[i] > p[j])
    return -1 if inv % 2 else 1


def s3_transposition_module():
    """The 3-dim YD module over kS3 on the transpositions with sign twist.

    Basis x_t for transpositions t; g . x_t = sgn(g) x_{g t g^-1} and the
    coaction is x_t -> t (x) x_t.
    """
    from trideco.linalg import Matrix

    table, perms = s3_table()
    transpositions = [i for i, p in enumerate(perms)
                      if sign_of_perm(p) == -1 and
                      sum(p[k] != k for k in range(3)) == 2]
    pos = {t: a for a, t in enumerate(transpositions)}
    zero = Cyclotomic.zero(1)
    action = []
    for g, p in enumerate(perms):
        sgn = Cyclotomic.rational(sign_of_perm(p))
        ents = [zero] * 9
        ginv = next(h for h in range(6) if table[g][h] == 0)
        for a, t in enumerate(transpositions):
            conj = table[table[g][t]][ginv]
            ents[pos[conj] * 3 + a] = sgn
        action.append(Matrix(3, 3, ents))
    coaction = [[(t, a, Cyclotomic.one(1))]
                for a, t in enumerate(transpositions)]
    return action, coaction, 3


def s3_threecycle_module():
    """The 2-dim YD module over kS3 supported on the 3-cycles."""
    from trideco.linalg import Matrix

    table, perms = s3_table()
    cycles = [i for i, p in enumerate(perms) if all(p[k] != k
                                                    for k in range(3))]
    pos = {c: a for a, c in enumerate(cycles)}
    zero = Cyclotomic.zero(1)
    one_ = Cyclotomic.one(1)
    action = []
    for g in range(6):
        ents = [zero] * 4
        ginv = next(h for h in range(6) if table[g][h] == 0)
        for a, c in enumerate(cycles):
            conj = table[table[g][c]][ginv]
            ents[pos[conj] * 2 + a] = one_
        action.append(Matrix(2, 2, ents))
    coaction = [[(c, a, one_)] for a, c in enumerate(cycles)]
    return action, coaction, 2
