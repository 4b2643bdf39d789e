"""Independent brute-force oracles the tests check the library against.

Everything here is deliberately naive: permutation search for isomorphism,
exhaustive relation matrices and labelled growth for enumeration, Bell-scan
partition filters for congruences and Dec.  None of it shares code paths
with the algorithms under test beyond the meet/join tables themselves.
"""

from __future__ import annotations

import itertools

from latcheck.core import FiniteLattice


def brute_isomorphic(A: FiniteLattice, B: FiniteLattice) -> bool:
    """Permutation search for an order isomorphism."""
    if A.n != B.n:
        return False
    n = A.n
    degs_a = sorted((A.up[x].bit_count(), A.down[x].bit_count()) for x in range(n))
    degs_b = sorted((B.up[x].bit_count(), B.down[x].bit_count()) for x in range(n))
    if degs_a != degs_b:
        return False
    for perm in itertools.permutations(range(n)):
        if all(
            A.leq(a, b) == B.leq(perm[a], perm[b])
            for a in range(n)
            for b in range(n)
        ):
            return True
    return False


def matrix_lattices(n):
    """Every lattice on n labelled points via direct enumeration of all order
    relations (each unordered pair is <, >, or incomparable), filtered by
    transitivity and the lattice axioms.  Practical for n <= 5."""
    pairs = list(itertools.combinations(range(n), 2))
    results = []
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        lt = [[False] * n for _ in range(n)]
        for (a, b), s in zip(pairs, states):
            if s == 1:
                lt[a][b] = True
            elif s == 2:
                lt[b][a] = True
        ok = True
        for a in range(n):
            for b in range(n):
                if not lt[a][b]:
                    continue
                for c in range(n):
                    if lt[b][c] and not lt[a][c]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        leq = [[a == b or lt[a][b] for b in range(n)] for a in range(n)]
        if _is_lattice_matrix(leq, n):
            up = [sum(1 << b for b in range(n) if leq[a][b]) for a in range(n)]
            results.append(FiniteLattice(tuple(f"m{i}" for i in range(n)), tuple(up)))
    return results


def _is_lattice_matrix(leq, n):
    for a in range(n):
        for b in range(n):
            lowers = [c for c in range(n) if leq[c][a] and leq[c][b]]
            if not _has_unique_extreme(lowers, leq, greatest=True):
                return False
            uppers = [c for c in range(n) if leq[a][c] and leq[b][c]]
            if not _has_unique_extreme(uppers, leq, greatest=False):
                return False
    return True


def _has_unique_extreme(cands, leq, greatest):
    for c in cands:
        if greatest and all(leq[d][c] for d in cands):
            return True
        if not greatest and all(leq[c][d] for d in cands):
            return True
    return False


def grown_lattices(n):
    """Every lattice on n labelled points whose labelling is a linear
    extension with bottom 0, via ideal-by-ideal growth; dedup by the
    permutation oracle gives one representative per isomorphism class.
    Practical for n <= 7."""
    if n == 1:
        return [FiniteLattice(("g0",), (1,))]
    collected = []
    up = [1] + [0] * (n - 1)
    down = [1] + [0] * (n - 1)

    def glb_ok(a, D):
        commons = down[a] & D
        m = commons
        while m:
            c = (m & -m).bit_length() - 1
            if commons & ~down[c] == 0:
                return True
            m &= m - 1
        return False

    def rec(i):
        if i == n:
            if sum(1 for a in range(n) if up[a] == 1 << a) == 1:
                collected.append(FiniteLattice(
                    tuple(f"g{k}" for k in range(n)), tuple(up)))
            return
        for D in range(1, 1 << i, 2):
            good = True
            m = D
            while m:
                x = (m & -m).bit_length() - 1
                if down[x] & ~D:
                    good = False
                    break
                m &= m - 1
            if not good:
                continue
            for a in range(i):
                if not (D >> a) & 1 and not glb_ok(a, D):
                    good = False
                    break
            if not good:
                continue
            down[i] = D | (1 << i)
            up[i] = 1 << i
            touched = []
            m = D
            while m:
                x = (m & -m).bit_length() - 1
                up[x] |= 1 << i
                touched.append(x)
                m &= m - 1
            rec(i + 1)
            for x in touched:
                up[x] &= ~(1 << i)
            down[i] = up[i] = 0

    rec(1)
    reps = []
    for L in collected:
        if not any(brute_isomorphic(L, R) for R in reps):
            reps.append(L)
    return reps


def set_partitions(elems):
    elems = list(elems)
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for sub in set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]
        yield [[first]] + sub


def compatible_partitions(L: FiniteLattice):
    """All congruences by filtering every set partition for meet/join
    compatibility."""
    out = []
    for part in set_partitions(range(L.n)):
        block_of = {}
        for bi, block in enumerate(part):
            for e in block:
                block_of[e] = bi
        ok = True
        for a in range(L.n):
            for b in range(L.n):
                if block_of[a] != block_of[b]:
                    continue
                for c in range(L.n):
                    if block_of[L.join[a][c]] != block_of[L.join[b][c]]:
                        ok = False
                        break
                    if block_of[L.meet[a][c]] != block_of[L.meet[b][c]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(frozenset(frozenset(b) for b in part))
    return out


def _subset_is_sublattice(L, s):
    return all(L.meet[a][b] in s and L.join[a][b] in s for a in s for b in s)


def _subset_is_convex(L, s):
    for a in s:
        for b in s:
            if L.leq(a, b):
                for c in range(L.n):
                    if L.leq(a, c) and L.leq(c, b) and c not in s:
                        return False
    return True


def _subset_is_distributive(L, s):
    elems = sorted(s)
    for a in elems:
        for b in elems:
            for c in elems:
                if L.join[a][L.meet[b][c]] != L.meet[L.join[a][b]][L.join[a][c]]:
                    return False
    return True


def distributive_partition_oracle(L: FiniteLattice, blocks) -> bool:
    """The two defining conditions, written out directly."""
    blocks = [set(b) for b in blocks]
    for b in blocks:
        if not (_subset_is_sublattice(L, b) and _subset_is_convex(L, b)
                and _subset_is_distributive(L, b)):
            return False
    for b1, b2 in itertools.combinations(blocks, 2):
        u = b1 | b2
        if _subset_is_sublattice(L, u) and _subset_is_convex(L, u):
            if not _subset_is_distributive(L, u):
                return False
    return True


def dec_oracle(L: FiniteLattice) -> int:
    """Minimum block count by scanning every set partition."""
    best = L.n
    for part in set_partitions(range(L.n)):
        if len(part) < best and distributive_partition_oracle(L, part):
            best = len(part)
    return best


def sublattice_embeds_oracle(pattern: FiniteLattice, host: FiniteLattice) -> bool:
    """Subset enumeration: a meet/join-closed subset isomorphic to the
    pattern."""
    from latcheck.core import induced

    for sub in itertools.combinations(range(host.n), pattern.n):
        s = set(sub)
        if _subset_is_sublattice(host, s) and brute_isomorphic(
            induced(host, sub), pattern
        ):
            return True
    return False
