"""Cyclic decompositions of subquotients of a finite abelian group.

The additive group of every ring here is Z/m_1 + ... + Z/m_k.  Quotient
rings and unital subrings need a fresh generator basis with independent
cyclic orders before they can be written as structure constants; that is
two Smith normal forms away.
"""
from math import lcm

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp


def _snf(rows, width):
    A = Matrix(rows) if rows else Matrix.zeros(0, width)
    D, U, V = smith_normal_decomp(A, domain=ZZ)
    diag = [int(D[i, i]) for i in range(min(D.shape))]
    return diag, V


class Section:
    """Coordinates on H/K for subgroups K <= H of Z/m_1 + ... + Z/m_k.

    ``orders`` are the cyclic orders of the new basis (all > 1),
    ``generators`` the basis elements as coordinate vectors of the ambient
    group (representatives of H), and ``coords`` maps any ambient vector
    lying in H to its coordinates in the new basis.
    """

    def __init__(self, moduli, sub_gens, kernel_gens=()):
        k = len(moduli)
        rel = [[m if i == j else 0 for j in range(k)] for i, m in enumerate(moduli)]
        d, V = _snf([list(g) for g in sub_gens] + rel, k)
        if len(d) < k or any(x == 0 for x in d[:k]):
            raise ValueError("subgroup lattice is not of full rank")
        d = d[:k]
        Vinv = V.inv()
        big = lcm(*d)
        # y = c V D^-1 gives coordinates of c in the basis D V^-1 of H'
        to_basis = V * Matrix.diag(*[big // x for x in d])
        kern = [list(g) for g in kernel_gens] + rel
        kern_y = []
        for row in kern:
            y = Matrix([row]) * to_basis
            if any(int(v) % big for v in y):
                raise ValueError("kernel is not contained in the subgroup")
            kern_y.append([int(v) // big for v in y])
        e, V2 = _snf(kern_y, k)
        e = e[:k]
        W = to_basis * V2
        self._W = [[int(W[i, j]) for j in range(k)] for i in range(k)]
        self._big = big
        self._moduli = tuple(moduli)
        keep = [j for j in range(k) if e[j] != 1]
        self._keep = keep
        self.orders = tuple(e[j] for j in keep)
        basis = Matrix.diag(*d) * Vinv
        V2inv = V2.inv()
        gens = []
        for j in keep:
            c = V2inv[j, :] * basis
            gens.append(tuple(int(c[t]) % moduli[t] for t in range(k)))
        self.generators = gens

    def coords(self, vec):
        W, big, out = self._W, self._big, []
        for j, o in zip(self._keep, self.orders):
            s = 0
            for i, c in enumerate(vec):
                if c:
                    s += c * W[i][j]
            if s % big:
                raise ValueError(f"{vec} does not lie in the subgroup")
            out.append((s // big) % o)
        return tuple(out)
