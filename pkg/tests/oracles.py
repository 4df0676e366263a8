"""Independent brute-force oracles used only by the test suite.

The symmetrizer oracle sums positive braid lifts over all permutations
(reduced words from bubble sort), instead of the shuffle recursion used by
the library.  Prefix products are cached so large degrees stay tractable.
"""

from itertools import permutations

from trideco.linalg import Matrix


def reduced_word(perm):
    """Adjacent-transposition word sorting the permutation (1-based slots)."""
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return tuple(reversed(word))


def oracle_symmetrizer(c: Matrix, n: int, m: int) -> Matrix:
    """Sum of braid lifts T_w over all w in S_n."""
    slots = {}
    for i in range(1, n):
        left = Matrix.identity(m ** (i - 1))
        right = Matrix.identity(m ** (n - i - 1))
        slots[i] = left.kron(c).kron(right)
    cache = {(): Matrix.identity(m ** n)}

    def lift(word):
        if word in cache:
            return cache[word]
        head = lift(word[:-1])
        out = head * slots[word[-1]]
        cache[word] = out
        return out

    total = Matrix.zero(m ** n, m ** n)
    for perm in permutations(range(n)):
        total = total + lift(reduced_word(perm))
    return total


def oracle_nichols_dims(V, max_degree):
    """Hilbert dimensions from the permutation-sum symmetrizer ranks."""
    from trideco.braided import braiding

    c = braiding(V, V)
    dims = [1, V.dim]
    for n in range(2, max_degree + 1):
        rank = oracle_symmetrizer(c, n, V.dim).rank()
        dims.append(rank)
        if rank == 0:
            break
    return dims
