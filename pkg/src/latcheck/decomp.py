"""Distributive partitions and the Dec invariant, plus the Galvin-Jonsson
shape classifier for finite distributive lattices.

A set partition is distributive when every block is a convex distributive
sublattice and, for each pair of distinct blocks, the union either fails to
be a sublattice, fails to be convex, or is itself a convex distributive
sublattice.  Dec is the minimum block count over such partitions, computed
exactly by branch and bound over blocks grown from the lowest unassigned
element.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import laws
from .core import FiniteLattice, canonical_form, induced, is_convex_set, is_sublattice_set, iter_bits
from .errors import NotAPartition, NotDistributive, SizeLimit

DEC_CAP = 16


@dataclass(frozen=True)
class DistributivePartition:
    blocks: tuple  # of frozensets, ordered by least member

    @staticmethod
    def from_blocks(blocks) -> "DistributivePartition":
        return DistributivePartition(tuple(sorted((frozenset(b) for b in blocks), key=min)))

    def __len__(self):
        return len(self.blocks)

    def as_label_sets(self, L: FiniteLattice):
        return [sorted(L.labels[e] for e in b) for b in self.blocks]

    def encoding(self):
        return tuple(tuple(sorted(b)) for b in self.blocks)


@dataclass(frozen=True)
class PartitionCheck:
    holds: bool
    clause: str | None = None
    involved: tuple | None = None

    def __bool__(self):
        return self.holds


def _is_distributive_subset(L: FiniteLattice, elems) -> bool:
    # only called on meet/join-closed subsets, where the induced order
    # carries the restricted operations
    return bool(laws.distributive(induced(L, elems)))


def _block_ok(L, block):
    """Clause of the block-level condition that fails, or None."""
    if not is_sublattice_set(L, block):
        return "block is not a sublattice"
    if not is_convex_set(L, block):
        return "block is not convex"
    if not _is_distributive_subset(L, block):
        return "block is not distributive"
    return None


def _pair_ok(L, b1, b2):
    """The pairwise condition: the union is not a sublattice, or not convex,
    or is a convex distributive sublattice."""
    union = set(b1) | set(b2)
    if not is_sublattice_set(L, union):
        return True
    if not is_convex_set(L, union):
        return True
    return _is_distributive_subset(L, union)


def is_distributive_partition(L: FiniteLattice, blocks) -> PartitionCheck:
    """Check both defining conditions exactly, reporting the first violated
    clause and the block (or block pair) responsible."""
    blocks = [frozenset(b) for b in blocks]
    covered = set()
    for b in blocks:
        if not b:
            raise NotAPartition("empty block")
        if covered & b:
            raise NotAPartition("blocks overlap")
        covered |= b
    if covered != set(range(L.n)):
        raise NotAPartition("blocks do not cover the element set")
    blocks = sorted(blocks, key=min)
    for b in blocks:
        clause = _block_ok(L, b)
        if clause is not None:
            return PartitionCheck(False, clause, (tuple(sorted(b)),))
    for i, b1 in enumerate(blocks):
        for b2 in blocks[i + 1:]:
            if not _pair_ok(L, b1, b2):
                return PartitionCheck(
                    False,
                    "union of blocks is a convex sublattice but not distributive",
                    (tuple(sorted(b1)), tuple(sorted(b2))),
                )
    return PartitionCheck(True)


def _cds_closure(L, seed, allowed_mask):
    """Smallest convex meet/join-closed superset of seed, or None if it
    escapes the allowed element set."""
    mask = 0
    for e in seed:
        mask |= 1 << e
    while True:
        new = mask
        members = list(iter_bits(mask))
        for i, a in enumerate(members):
            for b in members[i:]:
                new |= 1 << L.meet[a][b]
                new |= 1 << L.join[a][b]
                if L.leq(a, b):
                    new |= L.up[a] & L.down[b]
                elif L.leq(b, a):
                    new |= L.up[b] & L.down[a]
        if new & ~allowed_mask:
            return None
        if new == mask:
            return mask
        mask = new


def _candidate_blocks(L, e, allowed_mask):
    """All convex distributive sublattices through e inside the allowed set,
    grown by closure; pruned because sublattices of distributive lattices
    stay distributive."""
    start = _cds_closure(L, [e], allowed_mask)
    results = []
    if start is None:
        return results
    seen = set()
    stack = [start]
    while stack:
        mask = stack.pop()
        if mask in seen:
            continue
        seen.add(mask)
        if not _is_distributive_subset(L, list(iter_bits(mask))):
            continue
        results.append(mask)
        rest = allowed_mask & ~mask
        for x in iter_bits(rest):
            bigger = _cds_closure(L, list(iter_bits(mask | (1 << x))), allowed_mask)
            if bigger is not None and bigger not in seen:
                stack.append(bigger)
    results.sort(key=lambda m: (-m.bit_count(), m))
    return results


def _pair_ok_masks(L, m1, m2):
    return _pair_ok(L, list(iter_bits(m1)), list(iter_bits(m2)))


def dec(L: FiniteLattice, cap=DEC_CAP):
    """Exact minimum cardinality of a distributive partition, with one
    minimizing witness (the first found in the deterministic search order)."""
    if L.n > cap:
        raise SizeLimit(L.n, cap, "dec computation")
    best_count = L.n + 1
    best_blocks = None
    full = L.full_mask

    def rec(assigned, blocks):
        nonlocal best_count, best_blocks
        if assigned == full:
            if len(blocks) < best_count:
                best_count = len(blocks)
                best_blocks = list(blocks)
            return
        if len(blocks) + 1 >= best_count:
            return
        e = ((~assigned) & full & -((~assigned) & full)).bit_length() - 1
        for cand in _candidate_blocks(L, e, full & ~assigned):
            if all(_pair_ok_masks(L, cand, b) for b in blocks):
                blocks.append(cand)
                rec(assigned | cand, blocks)
                blocks.pop()

    rec(0, [])
    witness = DistributivePartition.from_blocks(
        [frozenset(iter_bits(m)) for m in best_blocks]
    )
    return best_count, witness


def minimum_distributive_partitions(L: FiniteLattice, cap=DEC_CAP):
    """All minimum-cardinality distributive partitions, in lexicographic
    block-encoding order."""
    k, _ = dec(L, cap)
    full = L.full_mask
    found = []

    def rec(assigned, blocks):
        if assigned == full:
            found.append(DistributivePartition.from_blocks(
                [frozenset(iter_bits(m)) for m in blocks]
            ))
            return
        if len(blocks) >= k:
            return
        e = ((~assigned) & full & -((~assigned) & full)).bit_length() - 1
        for cand in _candidate_blocks(L, e, full & ~assigned):
            if all(_pair_ok_masks(L, cand, b) for b in blocks):
                blocks.append(cand)
                rec(assigned | cand, blocks)
                blocks.pop()

    rec(0, [])
    found.sort(key=lambda p: p.encoding())
    return found


# -- Galvin-Jonsson shape classification -------------------------------------


@dataclass(frozen=True)
class GJDecomposition:
    """Linear-sum decomposition of a finite distributive lattice into blocks
    each shaped like a chain, 2 x chain, or the Boolean cube."""

    blocks: tuple  # of ascending index tuples, listed bottom block first
    shapes: tuple  # tags from {"chain", "two_times_chain", "boolean3"}


def _shape_tag(L, elems):
    elems = sorted(elems)
    if all(not L.incomparable(a, b) for i, a in enumerate(elems) for b in elems[i + 1:]):
        return "chain"
    from . import catalog  # local import to avoid a cycle at module load

    try:
        block = induced(L, elems)
    except Exception:
        return None
    if len(elems) % 2 == 0:
        k = len(elems) // 2
        if canonical_form(block) == canonical_form(catalog.grid(k)):
            return "two_times_chain"
    if len(elems) == 8 and canonical_form(block) == canonical_form(catalog.get("B3")):
        return "boolean3"
    return None


def gj_classify(D: FiniteLattice):
    """A linear-sum decomposition into chain / 2 x chain / Boolean-cube
    blocks, or None when no such decomposition exists.  Coarsest valid
    decomposition is returned.  Requires a distributive input."""
    if not laws.distributive(D):
        raise NotDistributive("gj_classify expects a distributive lattice")
    n = D.n
    # components of the incomparability graph must be linearly ordered
    comp_id = list(range(n))

    def find(x):
        while comp_id[x] != x:
            comp_id[x] = comp_id[comp_id[x]]
            x = comp_id[x]
        return x

    for a in range(n):
        for b in range(a + 1, n):
            if D.incomparable(a, b):
                ra, rb = find(a), find(b)
                if ra != rb:
                    comp_id[max(ra, rb)] = min(ra, rb)
    groups = {}
    for e in range(n):
        groups.setdefault(find(e), []).append(e)
    comps = list(groups.values())
    for i, c1 in enumerate(comps):
        for c2 in comps[i + 1:]:
            below = sum(D.lt(a, b) for a in c1 for b in c2)
            above = sum(D.lt(b, a) for a in c1 for b in c2)
            want = len(c1) * len(c2)
            if below != want and above != want:
                return None
    comps.sort(key=lambda c: D.heights()[c[0]])

    m = len(comps)
    tag = {}

    def range_tag(i, j):
        if (i, j) not in tag:
            elems = [e for c in comps[i:j] for e in c]
            tag[(i, j)] = _shape_tag(D, elems)
        return tag[(i, j)]

    # fewest blocks via shortest path over taggable component ranges
    INF = m + 1
    best = [INF] * (m + 1)
    prev = [None] * (m + 1)
    best[0] = 0
    for j in range(1, m + 1):
        for i in range(j):
            if best[i] + 1 < best[j] and range_tag(i, j) is not None:
                best[j] = best[i] + 1
                prev[j] = i
    if best[m] > m:
        return None
    cuts = []
    j = m
    while j > 0:
        i = prev[j]
        cuts.append((i, j))
        j = i
    cuts.reverse()
    blocks = []
    shapes = []
    for i, j in cuts:
        elems = tuple(sorted(e for c in comps[i:j] for e in c))
        blocks.append(elems)
        shapes.append(range_tag(i, j))
    return GJDecomposition(tuple(blocks), tuple(shapes))
