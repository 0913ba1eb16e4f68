"""Independent reference implementations used to cross-check the library.

Expected values in the tests are computed (or were frozen from) the
routines here, which deliberately share no algorithmic machinery with the
code under test: partition sets come from raw multiplicity search, counts
from dynamic programming, and lattices from linear algebra over truncated
modules. Agreement is therefore evidence, not tautology.
"""

from itertools import combinations, product

import quasiflags.gfpoly as gf
from quasiflags.roots import GammaVec, interval_to_gamma, positive_coroots


def vectors_with_length_at_most(n, bound):
    """All degree vectors for SL(n) with |gamma| <= bound, lexicographic."""
    out = []
    for coeffs in product(range(bound + 1), repeat=n - 1):
        if sum(coeffs) <= bound:
            out.append(GammaVec(coeffs))
    return out


def brute_force_kappa_sets(n, gamma):
    """Coroot partitions of gamma by exhaustive multiplicity search.

    Tries every multiplicity vector bounded by the coefficients it has to
    fit under and keeps those summing to gamma; returns a set of frozensets
    {(p, q, mult), ...} so the comparison ignores ordering entirely.
    """
    coroots = positive_coroots(n)
    bounds = [min(gamma.coeffs[c.q - 1 : c.p]) for c in coroots]
    supports = [interval_to_gamma(c, n).coeffs for c in coroots]
    found = set()
    for mults in product(*(range(b + 1) for b in bounds)):
        total = [0] * (n - 1)
        for m, sup in zip(mults, supports):
            if m:
                for k, s in enumerate(sup):
                    total[k] += m * s
        if tuple(total) == gamma.coeffs:
            found.add(frozenset((c.p, c.q, m) for c, m in zip(coroots, mults) if m))
    return found


def kostant_count(n, gamma):
    """Number of coroot partitions of gamma, by unbounded-knapsack DP."""
    cells = sorted(product(*(range(a + 1) for a in gamma.coeffs)))
    dp = {cell: 0 for cell in cells}
    dp[(0,) * (n - 1)] = 1
    for c in positive_coroots(n):
        sup = interval_to_gamma(c, n).coeffs
        for cell in cells:
            prev = tuple(a - b for a, b in zip(cell, sup))
            if all(x >= 0 for x in prev):
                dp[cell] += dp[prev]
    return dp[gamma.coeffs]


def integer_partition_count(m):
    """p(m) by the textbook coin DP."""
    dp = [1] + [0] * m
    for part in range(1, m + 1):
        for s in range(part, m + 1):
            dp[s] += dp[s - part]
    return dp[m]


def all_rref(rows, cols, q):
    """All full-rank reduced row echelon forms of shape rows x cols over F_q.

    One matrix per row space, hence one per codimension-`rows` subspace of
    F_q^cols when read as a kernel.
    """
    for pivots in combinations(range(cols), rows):
        free_positions = [
            (r, c)
            for r in range(rows)
            for c in range(cols)
            if c > pivots[r] and c not in pivots
        ]
        for values in product(range(q), repeat=len(free_positions)):
            mat = [[0] * cols for _ in range(rows)]
            for r, pc in enumerate(pivots):
                mat[r][pc] = 1
            for (r, c), v in zip(free_positions, values):
                mat[r][c] = v
            yield mat


def zstable_submodule_membersets(k, c, q):
    """Colength-c lattices of rank k found by pure linear algebra.

    A lattice of colength c contains z^c times the ambient module, so it is
    the same data as a z-stable F_q-subspace of codimension c in
    V = (F_q[z]/z^c)^k. Subspaces are enumerated as kernels of RREF
    matrices, filtered by z-stability, and returned as frozensets of member
    vectors (each member a tuple of k coefficient blocks of length c).
    Nothing here knows about canonical triangular bases.
    """
    if c == 0:
        return {frozenset({((),) * k})}
    dim = k * c

    def zmap(vec):
        out = []
        for b in range(k):
            block = vec[b * c : (b + 1) * c]
            out.extend((0,) + block[:-1])
        return tuple(out)

    found = set()
    for mat in all_rref(c, dim, q):
        members = frozenset(
            vec
            for vec in product(range(q), repeat=dim)
            if all(sum(a * x for a, x in zip(row, vec)) % q == 0 for row in mat)
        )
        if any(zmap(v) not in members for v in members):
            continue
        found.add(
            frozenset(
                tuple(vec[b * c : (b + 1) * c] for b in range(k)) for vec in members
            )
        )
    return found


def lattice_memberset(lat, c):
    """All members of the lattice modulo z^c, in the same block encoding."""
    k, q = lat.rank, lat.q
    if c == 0:
        return frozenset({((),) * k})
    members = set()
    for coeffs in product(product(range(q), repeat=c), repeat=k):
        acc = [[0] * c for _ in range(k)]
        for j, a in enumerate(coeffs):
            ap = gf.trim(a)
            if not ap:
                continue
            for i in range(k):
                entry = lat.cols[j][i]
                if entry:
                    for d, coeff in enumerate(gf.mul(ap, entry, q)[:c]):
                        acc[i][d] = (acc[i][d] + coeff) % q
        members.add(tuple(tuple(row) for row in acc))
    return frozenset(members)
