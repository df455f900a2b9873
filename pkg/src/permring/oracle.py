"""Brute-force recomputations used as ground truth in tests and ``--oracle``.

None of these go through double cosets or the splitting tower.
"""
from __future__ import annotations

from collections import Counter
from itertools import product as cartesian

from .errors import BudgetExceeded, GroupMismatch, PrimeDoesNotDivideOrder
from .groups import FiniteGroup, Subgroup, _close
from .gsets import GSet, UnionFind
from .perm import Permutation


def _right_cosets(G: FiniteGroup, H: Subgroup) -> list[Permutation]:
    reps, seen = [], set()
    for g in G.elements:
        if g not in seen:
            reps.append(g)
            seen.update(h * g for h in H.elements)
    return reps


def oracle_degree_stable(G: FiniteGroup, H: Subgroup, p: int) -> int:
    """Largest number of distinct right cosets ``Hg_i`` whose conjugates
    ``H^{g_i}`` meet in a subgroup of order divisible by ``p``.

    Depth-first search over coset subsets in increasing index order; a
    branch is cut as soon as the running intersection has order prime to p.
    """
    if G.order % p:
        raise PrimeDoesNotDivideOrder(f"p={p} does not divide |G|={G.order}")
    reps = _right_cosets(G, H)
    conj = [frozenset(g.inverse() * h * g for h in H.elements) for g in reps]
    d = len(reps)
    best = 0

    def search(start: int, meet: frozenset | None, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if best == d:
            return
        for i in range(start, d):
            if size + (d - i) <= best:
                return
            nxt = conj[i] if meet is None else meet & conj[i]
            if len(nxt) % p == 0:
                search(i + 1, nxt, size + 1)

    search(0, None, 0)
    return best


def _all_perms(X: GSet, G: FiniteGroup) -> list[tuple[int, ...]]:
    return [X.permutation(g) for g in G.elements]


def oracle_product_orbits(X: GSet, Y: GSet) -> Counter:
    """Multiset of ``(orbit size, stabilizer order)`` on ``X × Y``.

    Orbits come from union-find over generator moves on pairs; stabilizer
    orders are counted by testing every group element on the orbit's first
    pair.
    """
    if X.group is not Y.group:
        raise GroupMismatch("G-sets are over different groups")
    G = X.group
    m = Y.size
    n = X.size * m
    uf = UnionFind(n)
    for tx, ty in zip(X.tables, Y.tables):
        for x in range(X.size):
            for y in range(m):
                uf.union(x * m + y, tx[x] * m + ty[y])
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)
    px, py = _all_perms(X, G), _all_perms(Y, G)
    out: Counter = Counter()
    for members in groups.values():
        x, y = divmod(members[0], m)
        stab = sum(1 for a, b in zip(px, py) if a[x] == x and b[y] == y)
        out[(len(members), stab)] += 1
    return out


def oracle_gmap_count(Y: GSet, X: GSet, budget: int = 10**6) -> int:
    """Count every set map ``Y → X`` that commutes with each generator."""
    if X.group is not Y.group:
        raise GroupMismatch("G-sets are over different groups")
    total = X.size ** Y.size
    if total > budget:
        raise BudgetExceeded(f"{total} maps exceed the enumeration budget {budget}")
    pairs = list(zip(Y.tables, X.tables))
    count = 0
    for f in cartesian(range(X.size), repeat=Y.size):
        if all(f[ty[y]] == tx[f[y]] for ty, tx in pairs for y in range(Y.size)):
            count += 1
    return count


def _subgroups_of(G: FiniteGroup, elements) -> list[frozenset]:
    # naive: close every subset reachable by adding one element at a time
    identity = G.identity
    start = frozenset([identity])
    found = {start: []}
    frontier = [start]
    pool = sorted(elements)
    while frontier:
        nxt = []
        for S in frontier:
            for x in pool:
                if x in S:
                    continue
                gens = found[S] + [x]
                T = frozenset(_close(gens, identity))
                if T not in found:
                    found[T] = gens
                    nxt.append(T)
        frontier = nxt
    return list(found)


def oracle_normal_core(G: FiniteGroup, H: Subgroup, budget: int = 360) -> Subgroup:
    """Largest subgroup of ``H`` that is normal in ``G``, by enumerating the
    subgroups of ``H``."""
    if G.order > budget:
        raise BudgetExceeded(f"|G|={G.order} exceeds the subgroup enumeration budget {budget}")
    best = frozenset([G.identity])
    for S in _subgroups_of(G, H.elements):
        if len(S) <= len(best):
            continue
        if all(g.inverse() * s * g in S for g in G.elements for s in S):
            best = S
    return Subgroup(G, best)


def oracle_elementary_abelian_classes(G: FiniteGroup, p: int, budget: int = 360) -> list[frozenset]:
    """Nontrivial elementary abelian p-subgroups bucketed by conjugacy; returns
    the least conjugate (by sorted elements) of each class."""
    if G.order > budget:
        raise BudgetExceeded(f"|G|={G.order} exceeds the subgroup enumeration budget {budget}")
    identity = G.identity
    ea = []
    for S in _subgroups_of(G, G.elements):
        if len(S) == 1:
            continue
        if all(x == identity or x.order() == p for x in S) and \
                all(a * b == b * a for a in S for b in S):
            ea.append(S)
    reps = set()
    for S in ea:
        conj = {frozenset(g.inverse() * s * g for s in S) for g in G.elements}
        reps.add(min(tuple(sorted(c)) for c in conj))
    return sorted((frozenset(r) for r in reps), key=lambda s: (len(s), tuple(sorted(s))))


def oracle_fixed_point_degree(X: GSet, p: int) -> int:
    """Stable degree as the most points fixed by a single element of order p.

    An n-tuple of distinct points has stabilizer of order divisible by p
    exactly when some element of order p fixes all of them (Cauchy).
    """
    G = X.group
    best = 0
    for g in G.elements:
        if g.order() != p:
            continue
        perm = X.permutation(g)
        best = max(best, sum(1 for x in range(X.size) if perm[x] == x))
    return best

