"""Congruence computation, quotients, subdirect irreducibility, and the exact
membership test for the variety generated by the pentagon.

Membership rests on the congruence-distributivity of lattices: the finite
subdirectly irreducible members of the pentagon's variety are exactly the
two-element chain and the pentagon itself, so a finite lattice belongs to the
variety iff every factor by a meet-irreducible congruence is trivial, the
two-element chain, or the pentagon.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .core import FiniteLattice, canonical_form, induced, iter_bits
from .errors import SizeLimit

CONGRUENCE_CAP = 16


@dataclass(frozen=True)
class Congruence:
    """A meet/join-compatible partition, stored as a block index per element
    (blocks numbered by first occurrence)."""

    block_index: tuple

    @property
    def n(self):
        return len(self.block_index)

    @property
    def block_count(self):
        return max(self.block_index) + 1

    def blocks(self):
        out = [[] for _ in range(self.block_count)]
        for e, b in enumerate(self.block_index):
            out[b].append(e)
        return tuple(frozenset(b) for b in out)

    def same(self, a, b):
        return self.block_index[a] == self.block_index[b]

    def is_identity(self):
        return self.block_count == self.n

    def is_all(self):
        return self.block_count == 1

    def refines(self, other: "Congruence") -> bool:
        """True iff every block of self lies inside a block of other."""
        seen = {}
        for e in range(self.n):
            mine, theirs = self.block_index[e], other.block_index[e]
            if mine in seen:
                if seen[mine] != theirs:
                    return False
            else:
                seen[mine] = theirs
        return True

    def is_compatible(self, L: FiniteLattice) -> bool:
        n = L.n
        for a in range(n):
            for b in range(a + 1, n):
                if not self.same(a, b):
                    continue
                for c in range(n):
                    if not self.same(L.join[a][c], L.join[b][c]):
                        return False
                    if not self.same(L.meet[a][c], L.meet[b][c]):
                        return False
        return True


def _canonical_blocks(parent_find, n):
    index = {}
    out = []
    for e in range(n):
        root = parent_find(e)
        if root not in index:
            index[root] = len(index)
        out.append(index[root])
    return Congruence(tuple(out))


def identity_congruence(n: int) -> Congruence:
    return Congruence(tuple(range(n)))


def all_congruence(n: int) -> Congruence:
    return Congruence((0,) * n)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


def principal_congruence(L: FiniteLattice, a, b) -> Congruence:
    """Smallest congruence identifying a and b: merge, then keep merging
    translated pairs (x v c, y v c) and (x ^ c, y ^ c) until stable."""
    uf = _UnionFind(L.n)
    work = []
    if uf.union(a, b):
        work.append((a, b))
    while work:
        x, y = work.pop()
        for c in range(L.n):
            for u, v in ((L.join[x][c], L.join[y][c]), (L.meet[x][c], L.meet[y][c])):
                if uf.union(u, v):
                    work.append((u, v))
    return _canonical_blocks(uf.find, L.n)


def join_congruences(c1: Congruence, c2: Congruence) -> Congruence:
    """Partition join; for congruences of a common lattice the result is
    again a congruence."""
    n = c1.n
    uf = _UnionFind(n)
    first_of_block1 = {}
    first_of_block2 = {}
    for e in range(n):
        b1, b2 = c1.block_index[e], c2.block_index[e]
        if b1 in first_of_block1:
            uf.union(first_of_block1[b1], e)
        else:
            first_of_block1[b1] = e
        if b2 in first_of_block2:
            uf.union(first_of_block2[b2], e)
        else:
            first_of_block2[b2] = e
    return _canonical_blocks(uf.find, n)


def all_congruences(L: FiniteLattice, cap=CONGRUENCE_CAP) -> list:
    """The full congruence lattice: identity plus the join-closure of all
    principal congruences."""
    if L.n > cap:
        raise SizeLimit(L.n, cap, "congruence computation")
    found = {identity_congruence(L.n)}
    frontier = []
    for a in range(L.n):
        for b in range(a + 1, L.n):
            c = principal_congruence(L, a, b)
            if c not in found:
                found.add(c)
                frontier.append(c)
    while frontier:
        c = frontier.pop()
        for d in list(found):
            j = join_congruences(c, d)
            if j not in found:
                found.add(j)
                frontier.append(j)
    return sorted(found, key=lambda c: (c.n - c.block_count, c.block_index))


def quotient(L: FiniteLattice, c: Congruence) -> FiniteLattice:
    """Lattice of congruence blocks with the induced order."""
    blocks = c.blocks()
    reps = sorted(range(len(blocks)), key=lambda b: min(blocks[b]))
    pos = {b: i for i, b in enumerate(reps)}
    m = len(blocks)
    labels = []
    masks = []
    for b in reps:
        members = sorted(blocks[b])
        labels.append("+".join(L.labels[e] for e in members))
        mask = 0
        for e in members:
            mask |= 1 << e
        masks.append(mask)
    up = [0] * m
    for i in range(m):
        for j in range(m):
            # block order: some member of i lies below some member of j
            if any(L.up[a] & masks[j] for a in iter_bits(masks[i])):
                up[i] |= 1 << j
    return FiniteLattice(tuple(labels), tuple(up))


def is_subdirectly_irreducible(L: FiniteLattice, cap=CONGRUENCE_CAP) -> bool:
    """True iff the congruence lattice has a unique atom (monolith)."""
    if L.n == 1:
        return False
    cons = all_congruences(L, cap)
    nontrivial = [c for c in cons if not c.is_identity()]
    atoms = [
        c for c in nontrivial
        if not any(d is not c and d.refines(c) and not d.is_identity() for d in nontrivial)
    ]
    return len(atoms) == 1


def meet_irreducible_congruences(L: FiniteLattice, cap=CONGRUENCE_CAP) -> list:
    """Congruences with exactly one upper cover in the congruence lattice."""
    cons = all_congruences(L, cap)
    out = []
    for c in cons:
        if c.is_all():
            continue
        above = [d for d in cons if d != c and c.refines(d)]
        covers = [d for d in above if not any(e != d and e.refines(d) for e in above)]
        if len(covers) == 1:
            out.append(c)
    return out


def si_factors(L: FiniteLattice, cap=CONGRUENCE_CAP) -> list:
    """Quotients by all meet-irreducible congruences, deduplicated up to
    isomorphism."""
    seen = {}
    for c in meet_irreducible_congruences(L, cap):
        q = quotient(L, c)
        key = canonical_form(q)
        if key not in seen:
            seen[key] = q
    return [seen[k] for k in sorted(seen)]


@dataclass(frozen=True)
class VarietyDecision:
    member: bool
    factors: tuple
    offending: FiniteLattice | None = None

    def __bool__(self):
        return self.member


def in_n5_variety(L: FiniteLattice, cap=CONGRUENCE_CAP) -> VarietyDecision:
    """Exact membership in the variety generated by the pentagon, with the
    subdirectly irreducible factor list as certificate."""
    allowed = {
        canonical_form(catalog.chain(1)),
        canonical_form(catalog.chain(2)),
        canonical_form(catalog.get("N5")),
    }
    factors = tuple(si_factors(L, cap))
    for q in factors:
        if canonical_form(q) not in allowed:
            return VarietyDecision(False, factors, q)
    return VarietyDecision(True, factors)
