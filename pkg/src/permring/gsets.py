"""Finite G-sets: coset spaces, disjoint unions, products, tuple spaces.

A G-set stores one permutation table per generator of its group.  Arbitrary
group elements act through the generator word recorded when the group was
closed.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import permutations as _ordered_tuples
from math import perm as falling_factorial
from typing import Iterable, Sequence

from .config import DEFAULT_POINT_BUDGET
from .errors import GroupMismatch, SizeBudgetExceeded, TupleLengthOutOfRange
from .groups import (
    FiniteGroup,
    Subgroup,
    are_conjugate,
    left_transversal,
    subgroup_closure,
)
from .perm import Permutation


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


def _check_budget(size: int, budget: int | None) -> None:
    budget = DEFAULT_POINT_BUDGET if budget is None else budget
    if size > budget:
        raise SizeBudgetExceeded(f"G-set of {size} points exceeds the budget of {budget}")


class GSet:
    """Points ``0..size-1`` with ``tables[i][x]`` the image of ``x`` under generator ``i``.

    ``labels`` optionally names each point (a coset representative, a pair of
    point indices, a tuple of base points) and is carried along for reports.
    """

    def __init__(self, group: FiniteGroup, size: int,
                 tables: Sequence[Sequence[int]], labels: Sequence | None = None):
        if len(tables) != len(group.generators):
            raise ValueError("need exactly one action table per group generator")
        self.group = group
        self.size = size
        self.tables = tuple(tuple(t) for t in tables)
        for t in self.tables:
            if len(t) != size or len(set(t)) != size:
                raise ValueError("action table is not a permutation of the points")
        self.labels = tuple(labels) if labels is not None else None
        self._perm_cache: dict[Permutation, tuple[int, ...]] = {}
        self._orbits: list[Orbit] | None = None

    @classmethod
    def trivial(cls, group: FiniteGroup, n: int) -> "GSet":
        """``n`` fixed points."""
        return cls(group, n, [tuple(range(n))] * len(group.generators))

    @classmethod
    def empty(cls, group: FiniteGroup) -> "GSet":
        return cls.trivial(group, 0)

    def __len__(self) -> int:
        return self.size

    def act(self, g: Permutation, x: int) -> int:
        for i in reversed(self.group.word(g)):
            x = self.tables[i][x]
        return x

    def permutation(self, g: Permutation) -> tuple[int, ...]:
        """The image of every point under ``g``."""
        cached = self._perm_cache.get(g)
        if cached is not None:
            return cached
        images = list(range(self.size))
        for i in reversed(self.group.word(g)):
            t = self.tables[i]
            images = [t[x] for x in images]
        out = tuple(images)
        self._perm_cache[g] = out
        return out

    def orbits(self) -> list["Orbit"]:
        if self._orbits is None:
            self._orbits = orbits(self)
        return self._orbits

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def __repr__(self) -> str:
        return f"GSet(size={self.size}, group_order={self.group.order})"


@dataclass(frozen=True)
class Orbit:
    representative: int
    size: int
    stabilizer: Subgroup
    points: tuple[int, ...] = field(repr=False, default=())


def _same_group(X: GSet, Y: GSet) -> None:
    if X.group is not Y.group:
        raise GroupMismatch("G-sets are over different groups")


def coset_gset(G: FiniteGroup, H: Subgroup) -> GSet:
    """Left cosets ``gH`` under left translation; point 0 is ``H`` itself.

    Point ``i`` is labelled by the least element of its coset.
    """
    reps = left_transversal(G, H)
    coset_of = {}
    for i, r in enumerate(reps):
        for h in H.elements:
            coset_of[r * h] = i
    tables = [[coset_of[s * r] for r in reps] for s in G.generators]
    return GSet(G, len(reps), tables, labels=reps)


def disjoint_union(X: GSet, Y: GSet, point_budget: int | None = None) -> GSet:
    _same_group(X, Y)
    _check_budget(X.size + Y.size, point_budget)
    off = X.size
    tables = [tx + tuple(off + y for y in ty) for tx, ty in zip(X.tables, Y.tables)]
    labels = None
    if X.labels is not None and Y.labels is not None:
        labels = X.labels + Y.labels
    return GSet(X.group, X.size + Y.size, tables, labels)


def product(X: GSet, Y: GSet, point_budget: int | None = None) -> GSet:
    """Diagonal action on pairs; point ``(x, y)`` has index ``x * |Y| + y``."""
    _same_group(X, Y)
    m = Y.size
    _check_budget(X.size * m, point_budget)
    tables = []
    for tx, ty in zip(X.tables, Y.tables):
        tables.append([tx[x] * m + ty[y] for x in range(X.size) for y in range(m)])
    labels = [(x, y) for x in range(X.size) for y in range(m)]
    return GSet(X.group, X.size * m, tables, labels)


def _stabilizer(X: GSet, rep: int) -> tuple[Subgroup, list[int]]:
    """Stabilizer of ``rep`` from Schreier generators, plus the orbit in BFS order."""
    G = X.group
    transversal = {rep: G.identity}
    queue = deque([rep])
    order = [rep]
    schreier: set[Permutation] = set()
    while queue:
        y = queue.popleft()
        uy = transversal[y]
        for s, t in zip(G.generators, X.tables):
            z = t[y]
            su = s * uy
            if z not in transversal:
                transversal[z] = su
                queue.append(z)
                order.append(z)
            else:
                gen = transversal[z].inverse() * su
                if gen != G.identity:
                    schreier.add(gen)
    return subgroup_closure(G, sorted(schreier)), order


def orbits(X: GSet) -> list[Orbit]:
    """Orbits in order of their least point, each with its stabilizer."""
    uf = UnionFind(X.size)
    for t in X.tables:
        for x, y in enumerate(t):
            uf.union(x, y)
    members: dict[int, list[int]] = {}
    for x in range(X.size):
        members.setdefault(uf.find(x), []).append(x)
    out = []
    for pts in sorted(members.values(), key=lambda p: p[0]):
        stab, _ = _stabilizer(X, pts[0])
        out.append(Orbit(pts[0], len(pts), stab, tuple(pts)))
    return out


def restrict(X: GSet, points: Sequence[int]) -> GSet:
    """The sub-G-set on an invariant set of points, renumbered in the given order."""
    index = {x: i for i, x in enumerate(points)}
    try:
        tables = [[index[t[x]] for x in points] for t in X.tables]
    except KeyError:
        raise ValueError("points are not invariant under the group") from None
    labels = [X.labels[x] for x in points] if X.labels is not None else None
    return GSet(X.group, len(points), tables, labels)


def distinct_tuples(X: GSet, n: int, point_budget: int | None = None) -> GSet:
    """Ordered ``n``-tuples of pairwise distinct points, with diagonal action.

    ``n = 0`` gives one point (the empty tuple) and ``n = |X| + 1`` the empty
    G-set.
    """
    if not 0 <= n <= X.size + 1:
        raise TupleLengthOutOfRange(f"tuple length {n} outside 0..{X.size + 1}")
    _check_budget(falling_factorial(X.size, n) if n <= X.size else 0, point_budget)
    tuples = list(_ordered_tuples(range(X.size), n)) if n <= X.size else []
    index = {tup: i for i, tup in enumerate(tuples)}
    tables = [[index[tuple(t[a] for a in tup)] for tup in tuples] for t in X.tables]
    return GSet(X.group, len(tuples), tables, labels=tuples)


def fixed_points(X: GSet, S: Subgroup) -> list[int]:
    """Points of ``X`` fixed by every element of ``S``."""
    perms = [X.permutation(s) for s in S.generators]
    return [x for x in range(X.size) if all(p[x] == x for p in perms)]


def subgroup_orbits(X: GSet, S: Subgroup, points: Iterable[int] | None = None) -> list[list[int]]:
    """Orbits of the subgroup ``S`` on ``points`` (default: all of ``X``).

    ``points`` must be ``S``-invariant.  Each orbit is sorted, and orbits are
    listed by least point.
    """
    perms = [X.permutation(s) for s in S.generators]
    pts = range(X.size) if points is None else sorted(points)
    seen: set[int] = set()
    out = []
    for x in pts:
        if x in seen:
            continue
        orb = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for p in perms:
                z = p[y]
                if z not in orb:
                    orb.add(z)
                    stack.append(z)
        seen |= orb
        out.append(sorted(orb))
    return out


def count_equivariant_maps(Y: GSet, X: GSet) -> int:
    """Number of G-maps ``Y → X``: a G-map is fixed by where it sends each
    orbit representative, which may be any point fixed by that orbit's
    stabilizer."""
    _same_group(X, Y)
    total = 1
    for orb in Y.orbits():
        total *= len(fixed_points(X, orb.stabilizer))
    return total


def stabilizer_signature(X: GSet) -> Counter:
    return Counter((o.size, o.stabilizer.order) for o in X.orbits())


def gsets_isomorphic(X: GSet, Y: GSet) -> bool:
    """Decide ``X ≅ Y`` by matching orbit stabilizers up to conjugacy."""
    _same_group(X, Y)
    if X.size != Y.size or stabilizer_signature(X) != stabilizer_signature(Y):
        return False
    G = X.group
    unmatched = [o.stabilizer for o in Y.orbits()]
    for orb in X.orbits():
        for i, K in enumerate(unmatched):
            if K.order == orb.stabilizer.order and are_conjugate(G, orb.stabilizer, K):
                del unmatched[i]
                break
        else:
            return False
    return True
