"""Decidable law predicates on finite lattices: Whitman's condition, the
semidistributive laws, distributivity, modularity, doubly reducible elements,
chain length and the finite free-sublattice test.

All predicates are exhaustive tuple loops with early exit; counterexamples
are the lexicographically first in index order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteLattice


@dataclass(frozen=True)
class Check:
    """Predicate outcome with the first counterexample when it fails."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class LawProfile:
    whitman: bool
    sd_join: bool
    sd_meet: bool
    distributive: bool
    modular: bool
    doubly_reducible: tuple
    length: int
    free_sublattice_finite: bool


def whitman(L: FiniteLattice) -> Check:
    """Whenever a^b <= cvd, one of a <= cvd, b <= cvd, a^b <= c, a^b <= d
    must hold; returns the first violating quadruple otherwise."""
    n, meet, join, leq = L.n, L.meet, L.join, L.leq
    for a in range(n):
        for b in range(n):
            m = meet[a][b]
            for c in range(n):
                if leq(m, c):
                    continue
                for d in range(n):
                    if leq(m, d):
                        continue
                    j = join[c][d]
                    if leq(m, j) and not leq(a, j) and not leq(b, j):
                        return Check(False, (a, b, c, d))
    return Check(True)


def semidistributive(L: FiniteLattice) -> tuple[Check, Check]:
    """The join and meet semidistributive laws, each with the first violating
    triple (a, b, c) on failure."""
    n, meet, join = L.n, L.meet, L.join
    sd_join = Check(True)
    for a in range(n):
        for b in range(n):
            d = join[a][b]
            for c in range(n):
                if join[a][c] == d and join[a][meet[b][c]] != d:
                    sd_join = Check(False, (a, b, c))
                    break
            if not sd_join:
                break
        if not sd_join:
            break
    sd_meet = Check(True)
    for a in range(n):
        for b in range(n):
            d = meet[a][b]
            for c in range(n):
                if meet[a][c] == d and meet[a][join[b][c]] != d:
                    sd_meet = Check(False, (a, b, c))
                    break
            if not sd_meet:
                break
        if not sd_meet:
            break
    return sd_join, sd_meet


def distributive(L: FiniteLattice) -> Check:
    n, meet, join = L.n, L.meet, L.join
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if join[a][meet[b][c]] != meet[join[a][b]][join[a][c]]:
                    return Check(False, (a, b, c))
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    return Check(False, (a, b, c))
    return Check(True)


def modular(L: FiniteLattice) -> Check:
    """(a v b) ^ c = a v (b ^ c) whenever a <= c."""
    n, meet, join, leq = L.n, L.meet, L.join, L.leq
    for a in range(n):
        for c in range(n):
            if not leq(a, c):
                continue
            for b in range(n):
                if meet[join[a][b]][c] != join[a][meet[b][c]]:
                    return Check(False, (a, b, c))
    return Check(True)


def doubly_reducible_elements(L: FiniteLattice) -> tuple:
    """Elements that are simultaneously a join of two incomparable elements
    and a meet of two incomparable elements."""
    n = L.n
    join_red = [False] * n
    meet_red = [False] * n
    for a in range(n):
        for b in range(a + 1, n):
            if L.incomparable(a, b):
                join_red[L.join[a][b]] = True
                meet_red[L.meet[a][b]] = True
    return tuple(x for x in range(n) if join_red[x] and meet_red[x])


def length(L: FiniteLattice) -> int:
    """Maximum chain cardinality (longest cover path plus one)."""
    return max(L.heights()) + 1


def dilworth_bound_holds(L: FiniteLattice) -> bool:
    """Semidistributive lattices of length n+1 have at most 2^n elements."""
    sd_join, sd_meet = semidistributive(L)
    if not (sd_join and sd_meet):
        return True
    return L.n <= 2 ** (length(L) - 1)


def is_finite_free_sublattice(L: FiniteLattice) -> bool:
    """A finite lattice embeds in a free lattice iff it satisfies both
    semidistributive laws and Whitman's condition."""
    sd_join, sd_meet = semidistributive(L)
    return bool(sd_join and sd_meet and whitman(L))


def law_profile(L: FiniteLattice) -> LawProfile:
    sd_join, sd_meet = semidistributive(L)
    w = whitman(L)
    return LawProfile(
        whitman=bool(w),
        sd_join=bool(sd_join),
        sd_meet=bool(sd_meet),
        distributive=bool(distributive(L)),
        modular=bool(modular(L)),
        doubly_reducible=doubly_reducible_elements(L),
        length=length(L),
        free_sublattice_finite=bool(w and sd_join and sd_meet),
    )
