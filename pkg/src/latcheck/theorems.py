"""Machine verification of the structural theorems about lattices in the
pentagon variety that embed in free lattices: the L15 lemma with its witness
construction, the atom/coatom cube theorem with its Boolean-cube witness, the
Dec upper bound, the degeneracy lemma, the twelve-element grid lemma, and the
staircase cover theorem with its dual; plus the corollary profiles that swap
the variety hypothesis for forbidden-sublattice conditions.

Hypothesis gating is explicit: a lattice failing a check's hypotheses gets a
skipped report, never a silent pass, and vacuous runs are flagged as such.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from . import catalog, embed, laws, variety
from .core import (
    EmbeddingWitness,
    FiniteLattice,
    canonical_form,
    dual,
    induced,
    is_convex_set,
    is_sublattice_set,
    isomorphism,
)
from .decomp import dec
from .errors import HypothesisViolated, LatcheckError, SizeLimit, UnknownProfile

SUBLATTICE_ENUM_CAP = 12


@dataclass
class TheoremReport:
    theorem: str
    lattice: str
    hypothesis_instances: int = 0
    conclusion_violations: list = field(default_factory=list)
    vacuous: bool = False
    skipped: bool = False
    skip_reason: str | None = None
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def holds(self):
        return not self.skipped and not self.conclusion_violations

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "lattice": self.lattice,
            "hypothesis_instances": self.hypothesis_instances,
            "conclusion_violations": self.conclusion_violations,
            "vacuous": self.vacuous,
            "skipped": self.skipped,
            "skip_reason": self.skip_reason,
            "details": self.details,
        }


def _name_of(L, name):
    return name if name is not None else "sha:" + canonical_form(L).hex()[:16]


def variety_membership(L):
    """Default membership gate: exact pentagon-variety test."""
    d = variety.in_n5_variety(L)
    if d:
        return True, None
    off = d.offending
    return False, f"not in the pentagon variety (SI factor of size {off.n})"


def profile_membership(prof):
    """Gate for corollary profiles: finite free-sublattice laws plus the
    profile's forbidden patterns absent."""

    def gate(L, budget=None):
        if not laws.is_finite_free_sublattice(L):
            return False, "not a finite free-lattice sublattice (SD and W)"
        hits = embed.contains_forbidden(L, prof, budget)
        if hits:
            return False, f"contains forbidden sublattice {hits[0][0]}"
        return True, None

    return gate


def _finish(report, t0):
    report.vacuous = (not report.skipped) and report.hypothesis_instances == 0
    report.elapsed = time.perf_counter() - t0
    return report


def _gate(report, L, t0, needs, membership):
    """Apply the named lattice-level hypotheses; fills in a skip reason and
    returns True when the check must be skipped."""
    if "whitman" in needs and not laws.whitman(L):
        report.skipped, report.skip_reason = True, "fails Whitman's condition"
    elif "no_dr" in needs and laws.doubly_reducible_elements(L):
        report.skipped, report.skip_reason = True, "has doubly reducible elements"
    elif membership is not None:
        ok, reason = membership(L)
        if not ok:
            report.skipped, report.skip_reason = True, reason
    return report.skipped


def _labels(L, elems):
    return tuple(L.labels[e] for e in elems)


# -- L15 lemma ----------------------------------------------------------------


def lemma_l15_check(L: FiniteLattice, name=None, budget=None, membership=None) -> TheoremReport:
    """Every six-tuple satisfying the two-interleaved-chains hypotheses forces
    a sublattice isomorphic to L15."""
    t0 = time.perf_counter()
    rep = TheoremReport("l15_lemma", _name_of(L, name))
    if _gate(rep, L, t0, ("no_dr",), None):
        return _finish(rep, t0)
    n = L.n
    l15_present = None  # computed lazily, once

    def conclusion_holds():
        nonlocal l15_present
        if l15_present is None:
            l15_present = embed.find_embedding(catalog.get("L15"), L, budget) is not None
        return l15_present

    for a2 in range(n):
        for b2 in range(n):
            if not L.incomparable(a2, b2):
                continue
            top, bot = L.join[a2][b2], L.meet[a2][b2]
            a3s = [x for x in range(n) if L.lt(a2, x) and L.incomparable(x, b2)]
            b3s = [y for y in range(n) if L.lt(b2, y) and L.incomparable(y, a2)]
            a1s = [x for x in range(n) if L.lt(x, a2) and L.incomparable(x, b2)]
            b1s = [y for y in range(n) if L.lt(y, b2) and L.incomparable(y, a2)]
            for a3 in a3s:
                for b3 in b3s:
                    if L.join[a3][b3] != top:
                        continue
                    for a1 in a1s:
                        if not L.lt(a1, b3):
                            continue
                        for b1 in b1s:
                            if not L.lt(b1, a3):
                                continue
                            if L.meet[a1][b1] != bot:
                                continue
                            rep.hypothesis_instances += 1
                            if not conclusion_holds():
                                rep.conclusion_violations.append(
                                    _labels(L, (a1, a2, a3, b1, b2, b3))
                                )
    return _finish(rep, t0)


_L15_CLAUSES = (
    ("a1 < a2", lambda L, a1, a2, a3, b1, b2, b3: L.lt(a1, a2)),
    ("a2 < a3", lambda L, a1, a2, a3, b1, b2, b3: L.lt(a2, a3)),
    ("b1 < b2", lambda L, a1, a2, a3, b1, b2, b3: L.lt(b1, b2)),
    ("b2 < b3", lambda L, a1, a2, a3, b1, b2, b3: L.lt(b2, b3)),
    ("a1 < b3", lambda L, a1, a2, a3, b1, b2, b3: L.lt(a1, b3)),
    ("b1 < a3", lambda L, a1, a2, a3, b1, b2, b3: L.lt(b1, a3)),
    ("a2 incomparable to b1", lambda L, a1, a2, a3, b1, b2, b3: L.incomparable(a2, b1)),
    ("a2 incomparable to b2", lambda L, a1, a2, a3, b1, b2, b3: L.incomparable(a2, b2)),
    ("a2 incomparable to b3", lambda L, a1, a2, a3, b1, b2, b3: L.incomparable(a2, b3)),
    ("a1 incomparable to b2", lambda L, a1, a2, a3, b1, b2, b3: L.incomparable(a1, b2)),
    ("a3 incomparable to b2", lambda L, a1, a2, a3, b1, b2, b3: L.incomparable(a3, b2)),
    ("a2 v b2 = a3 v b3", lambda L, a1, a2, a3, b1, b2, b3: L.join[a2][b2] == L.join[a3][b3]),
    ("a2 ^ b2 = a1 ^ b1", lambda L, a1, a2, a3, b1, b2, b3: L.meet[a2][b2] == L.meet[a1][b1]),
)


def lemma_l15_witness(L: FiniteLattice, tup) -> EmbeddingWitness:
    """The explicit ten-element construction from a hypothesis tuple
    (a1, a2, a3, b1, b2, b3): derived corners a1' = a2 ^ b3, b1' = a3 ^ b2,
    a3'' = a2 v b1', b3'' = a1' v b2, their join/meet, the bounding join and
    meet, and a2, b2 themselves form a sublattice isomorphic to L15."""
    if len(tup) != 6 or len(set(tup)) != 6:
        raise HypothesisViolated("six distinct elements required", tup)
    a1, a2, a3, b1, b2, b3 = tup
    for clause, pred in _L15_CLAUSES:
        if not pred(L, a1, a2, a3, b1, b2, b3):
            raise HypothesisViolated(clause, tup)
    a1p = L.meet[a2][b3]
    b1p = L.meet[a3][b2]
    a3pp = L.join[a2][b1p]
    b3pp = L.join[a1p][b2]
    ten = {
        L.join[a2][b2], a3pp, b3pp, L.meet[a3pp][b3pp],
        L.join[a1p][b1p], a1p, b1p, L.meet[a2][b2], a2, b2,
    }
    if len(ten) != 10:
        raise LatcheckError("constructed elements are not pairwise distinct")
    if not is_sublattice_set(L, ten):
        raise LatcheckError("constructed set is not meet/join closed")
    elems = sorted(ten)
    block = induced(L, elems)
    l15 = catalog.get("L15")
    iso = isomorphism(l15, block)
    if iso is None:
        raise LatcheckError("constructed sublattice is not isomorphic to L15")
    return EmbeddingWitness(l15, L, tuple(elems[iso[i]] for i in range(10)))


# -- cube theorem -------------------------------------------------------------


def _constant_meet_antichains(L, size, table):
    for Y in itertools.combinations(range(L.n), size):
        if any(not L.incomparable(a, b) for a, b in itertools.combinations(Y, 2)):
            continue
        vals = {table[a][b] for a, b in itertools.combinations(Y, 2)}
        if len(vals) == 1:
            yield Y, vals.pop()


def cube_theorem_check(L: FiniteLattice, name=None, budget=None, membership=None,
                       theorem_id="cube") -> TheoremReport:
    """Antichains with a constant pairwise meet have at most three elements,
    of which at most two fail to cover the meet; dually for joins."""
    t0 = time.perf_counter()
    rep = TheoremReport(theorem_id, _name_of(L, name))
    if membership is None:
        membership = variety_membership
    if _gate(rep, L, t0, ("whitman",), membership):
        return _finish(rep, t0)
    for form, table, covers in (
        ("meet", L.meet, lambda d, a: L.covers(d, a)),
        ("join", L.join, lambda d, a: L.covers(a, d)),
    ):
        for size in (3, 4):
            for Y, d in _constant_meet_antichains(L, size, table):
                rep.hypothesis_instances += 1
                if size == 4:
                    rep.conclusion_violations.append(
                        (f"{form} form: antichain of size 4", _labels(L, Y), L.labels[d])
                    )
                    continue
                missing = [a for a in Y if not covers(d, a)]
                if len(missing) > 2:
                    rep.conclusion_violations.append(
                        (f"{form} form: no element adjacent to the bound",
                         _labels(L, Y), L.labels[d])
                    )
    return _finish(rep, t0)


def _one_sided_cover_check(L, name, membership, form, theorem_id) -> TheoremReport:
    """The single-sided cover property kept by the last two corollary
    profiles: in a 3-antichain with constant pairwise joins (resp. meets), at
    most two elements are not covered by (resp. do not cover) the bound."""
    t0 = time.perf_counter()
    rep = TheoremReport(theorem_id, _name_of(L, name))
    if membership is None:
        membership = variety_membership
    if _gate(rep, L, t0, ("whitman",), membership):
        return _finish(rep, t0)
    table = L.join if form == "join" else L.meet
    for Y, d in _constant_meet_antichains(L, 3, table):
        rep.hypothesis_instances += 1
        if form == "join":
            missing = [a for a in Y if not L.covers(a, d)]
        else:
            missing = [a for a in Y if not L.covers(d, a)]
        if len(missing) > 2:
            rep.conclusion_violations.append(
                (f"{form} form: no element adjacent to the bound",
                 _labels(L, Y), L.labels[d])
            )
    return _finish(rep, t0)


def cube_join_cover_check(L, name=None, budget=None, membership=None):
    return _one_sided_cover_check(L, name, membership, "join", "cube_join_cover")


def cube_meet_cover_check(L, name=None, budget=None, membership=None):
    return _one_sided_cover_check(L, name, membership, "meet", "cube_meet_cover")


def boolean_cube_witness(L: FiniteLattice, triple, d, membership=None) -> EmbeddingWitness:
    """For a 3-antichain with constant pairwise meets d and pairwise distinct
    joins, the elements (a v b) ^ (c v a) and their joins form a sublattice
    isomorphic to the Boolean cube."""
    if membership is None:
        membership = variety_membership
    if not laws.whitman(L):
        raise HypothesisViolated("host fails Whitman's condition")
    ok, reason = membership(L)
    if not ok:
        raise HypothesisViolated(reason or "membership hypothesis fails")
    a, b, c = triple
    if len({a, b, c}) != 3 or not all(
        L.incomparable(x, y) for x, y in itertools.combinations(triple, 2)
    ):
        raise HypothesisViolated("not a 3-antichain", tuple(triple))
    if not (L.meet[a][b] == L.meet[b][c] == L.meet[a][c] == d):
        raise HypothesisViolated("pairwise meets are not constantly d", tuple(triple))
    ab, bc, ca = L.join[a][b], L.join[b][c], L.join[c][a]
    if len({ab, bc, ca}) != 3:
        raise HypothesisViolated("pairwise joins are not distinct", tuple(triple))
    a_s = L.meet[ab][ca]
    b_s = L.meet[ab][bc]
    c_s = L.meet[ca][bc]
    top = L.join[ab][bc]
    if not (L.meet[a_s][b_s] == L.meet[b_s][c_s] == L.meet[a_s][c_s] == d):
        raise LatcheckError("starred elements do not meet pairwise to d")
    cube = catalog.get("B3")
    mapping = {
        "0": d, "a": a_s, "b": b_s, "c": c_s,
        "ab": L.join[a_s][b_s], "ac": L.join[a_s][c_s], "bc": L.join[b_s][c_s],
        "abc": top,
    }
    if len(set(mapping.values())) != 8:
        raise LatcheckError("constructed cube elements are not distinct")
    witness = EmbeddingWitness(cube, L, tuple(mapping[lab] for lab in cube.labels))
    if not witness.is_valid():
        raise LatcheckError("constructed cube is not a sublattice")
    return witness


# -- Dec bound and degeneracy lemma -------------------------------------------


def _all_sublattice_masks(L, convex_only=False):
    if L.n > SUBLATTICE_ENUM_CAP:
        raise SizeLimit(L.n, SUBLATTICE_ENUM_CAP, "sublattice enumeration")
    from .core import iter_bits

    for mask in range(1, 1 << L.n):
        elems = list(iter_bits(mask))
        if not is_sublattice_set(L, elems):
            continue
        if convex_only and not is_convex_set(L, elems):
            continue
        yield mask, elems


def dec_bound_check(L: FiniteLattice, name=None, budget=None, membership=None) -> TheoremReport:
    """For every sublattice K and element a incomparable to all of K, Dec(K)
    is at most the number of join values times the number of meet values of a
    against K."""
    t0 = time.perf_counter()
    rep = TheoremReport("dec_bound", _name_of(L, name))
    if membership is None:
        membership = variety_membership
    if _gate(rep, L, t0, ("whitman",), membership):
        return _finish(rep, t0)
    for mask, elems in _all_sublattice_masks(L):
        loose = [a for a in range(L.n)
                 if not (mask >> a) & 1 and all(L.incomparable(a, b) for b in elems)]
        if not loose:
            continue
        dec_k = dec(induced(L, elems))[0]
        for a in loose:
            rep.hypothesis_instances += 1
            joins = {L.join[a][b] for b in elems}
            meets = {L.meet[a][b] for b in elems}
            if dec_k > len(joins) * len(meets):
                rep.conclusion_violations.append(
                    (L.labels[a], _labels(L, elems), dec_k, len(joins) * len(meets))
                )
    return _finish(rep, t0)


def degeneracy_lemma_check(L: FiniteLattice, name=None, budget=None, membership=None) -> TheoremReport:
    """For every convex sublattice K and a incomparable to all of K: a has at
    least three join values against K, or at least three meet values, or K is
    distributive."""
    t0 = time.perf_counter()
    rep = TheoremReport("degeneracy", _name_of(L, name))
    if membership is None:
        membership = variety_membership
    if _gate(rep, L, t0, ("whitman",), membership):
        return _finish(rep, t0)
    for mask, elems in _all_sublattice_masks(L, convex_only=True):
        loose = [a for a in range(L.n)
                 if not (mask >> a) & 1 and all(L.incomparable(a, b) for b in elems)]
        if not loose:
            continue
        distr = bool(laws.distributive(induced(L, elems)))
        for a in loose:
            rep.hypothesis_instances += 1
            if distr:
                continue
            joins = {L.join[a][b] for b in elems}
            meets = {L.meet[a][b] for b in elems}
            if len(joins) < 3 and len(meets) < 3:
                rep.conclusion_violations.append(
                    (L.labels[a], _labels(L, elems), len(joins), len(meets))
                )
    return _finish(rep, t0)


# -- twelve-element lemma -----------------------------------------------------

_GRID_POS = {
    "w'": "0.0", "w": "0.1", "a": "0.2", "y": "0.3", "y'": "0.4",
    "x'": "1.0", "x": "1.1", "b": "1.2", "z": "1.3", "z'": "1.4",
}


def twelve_element_lemma_check(L: FiniteLattice, name=None, budget=None,
                               membership=None) -> TheoremReport:
    """No 2 x 5 grid sublattice admits both a point strictly inside its
    middle rung and a point strictly inside the rung above, with the exact
    incomparabilities of the twelve-element configuration."""
    t0 = time.perf_counter()
    rep = TheoremReport("twelve_element", _name_of(L, name))
    if membership is None:
        membership = variety_membership
    if _gate(rep, L, t0, ("no_dr",), membership):
        return _finish(rep, t0)
    grid = catalog.grid(5)
    gidx = {k: grid.index_of(v) for k, v in _GRID_POS.items()}
    for w in embed.iter_embeddings(grid, L, budget):
        pos = {k: w.map[i] for k, i in gidx.items()}
        image = set(w.map)
        below_c = [pos[k] for k in ("w'", "w", "a")]
        above_c = [pos[k] for k in ("b", "z", "z'")]
        incomp_c = [pos[k] for k in ("x'", "x", "y", "y'")]
        cs = [
            c for c in range(L.n)
            if c not in image
            and all(L.lt(x, c) for x in below_c)
            and all(L.lt(c, x) for x in above_c)
            and all(L.incomparable(c, x) for x in incomp_c)
        ]
        for c in cs:
            rep.hypothesis_instances += 1
            below_s = [pos[k] for k in ("w'", "w", "a")]
            above_s = [pos[k] for k in ("y", "y'", "z", "z'")]
            incomp_s = [pos[k] for k in ("x'", "x", "b")]
            for s in range(L.n):
                if s in image or s == c:
                    continue
                if (
                    all(L.lt(x, s) for x in below_s)
                    and all(L.lt(s, x) for x in above_s)
                    and all(L.incomparable(s, x) for x in incomp_s)
                    and L.incomparable(s, c)
                ):
                    rep.conclusion_violations.append(
                        ("grid with interior points",
                         _labels(L, w.map), L.labels[c], L.labels[s])
                    )
    return _finish(rep, t0)


# -- staircase cover theorem ----------------------------------------------------


def staircase_cover_check(L: FiniteLattice, name=None, budget=None,
                          membership=None, dual_form=False) -> TheoremReport:
    """Along a five-chain incomparable to a with strictly increasing joins:
    if (a v b4) ^ b5 differs from b4, then (a v b3) ^ b5 is covered by
    a v b3.  The dual form runs the same scan on the dual lattice."""
    t0 = time.perf_counter()
    rep = TheoremReport("staircase_dual" if dual_form else "staircase", _name_of(L, name))
    if membership is None:
        membership = variety_membership
    if _gate(rep, L, t0, ("no_dr",), membership):
        return _finish(rep, t0)
    M = dual(L) if dual_form else L
    n = M.n

    for a in range(n):
        pool = [b for b in range(n) if M.incomparable(a, b)]

        def extend(chain, joins):
            if len(chain) == 5:
                rep.hypothesis_instances += 1
                b4, b5 = chain[3], chain[4]
                j3, j4 = joins[2], joins[3]
                if M.meet[j4][b5] != b4:
                    low = M.meet[j3][b5]
                    if not M.covers(low, j3):
                        rep.conclusion_violations.append(
                            (M.labels[a], _labels(M, chain))
                        )
                return
            for b in pool:
                if chain and not M.lt(chain[-1], b):
                    continue
                j = M.join[a][b]
                if joins and not M.lt(joins[-1], j):
                    continue
                chain.append(b)
                joins.append(j)
                extend(chain, joins)
                chain.pop()
                joins.pop()

        extend([], [])
    return _finish(rep, t0)


# -- corollary profiles -------------------------------------------------------

PROFILE_CHECKS = {
    "N-full": ("variety",
               ("l15_lemma", "cube", "dec_bound", "degeneracy",
                "twelve_element", "staircase", "staircase_dual")),
    "cor62": ("cor62", ("cube", "staircase", "staircase_dual")),
    "cor63": ("cor63", ("cube", "staircase_dual")),
    "cor64": ("cor64", ("cube", "cube_dual", "staircase")),
    "cor65": ("cor65", ("dec_bound", "staircase", "staircase_dual", "cube_join_cover")),
    "cor66": ("cor66", ("dec_bound", "staircase", "staircase_dual", "cube_meet_cover")),
}


def _dispatch(check_id, L, name, budget, membership):
    if check_id == "l15_lemma":
        return lemma_l15_check(L, name, budget, membership)
    if check_id == "cube":
        return cube_theorem_check(L, name, budget, membership)
    if check_id == "cube_dual":
        return cube_theorem_check(dual(L), name, budget, membership,
                                  theorem_id="cube_dual")
    if check_id == "cube_join_cover":
        return cube_join_cover_check(L, name, budget, membership)
    if check_id == "cube_meet_cover":
        return cube_meet_cover_check(L, name, budget, membership)
    if check_id == "dec_bound":
        return dec_bound_check(L, name, budget, membership)
    if check_id == "degeneracy":
        return degeneracy_lemma_check(L, name, budget, membership)
    if check_id == "twelve_element":
        return twelve_element_lemma_check(L, name, budget, membership)
    if check_id == "staircase":
        return staircase_cover_check(L, name, budget, membership)
    if check_id == "staircase_dual":
        return staircase_cover_check(L, name, budget, membership, dual_form=True)
    raise UnknownProfile(check_id)


ALL_CHECK_IDS = ("l15_lemma", "cube", "cube_dual", "cube_join_cover",
                 "cube_meet_cover", "dec_bound", "degeneracy",
                 "twelve_element", "staircase", "staircase_dual")


def run_profile(L: FiniteLattice, profile_id: str, name=None, budget=None) -> list:
    """Run the theorem subset named by a profile, gating on the profile's
    membership condition (computed once per lattice)."""
    if profile_id not in PROFILE_CHECKS:
        raise UnknownProfile(profile_id)
    gate_kind, check_ids = PROFILE_CHECKS[profile_id]
    if gate_kind == "variety":
        verdict = variety_membership(L)
    else:
        verdict = profile_membership(embed.profile(gate_kind))(L, budget)
    membership = lambda _L, _v=verdict: _v
    return [_dispatch(cid, L, name, budget, membership) for cid in check_ids]


def run_check(L: FiniteLattice, check_id: str, name=None, budget=None,
              membership=None) -> TheoremReport:
    """Run a single named theorem check under the default variety gate."""
    if check_id not in ALL_CHECK_IDS:
        raise UnknownProfile(check_id)
    return _dispatch(check_id, L, name, budget, membership)
