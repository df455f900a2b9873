"""Finite permutation groups held as fully enumerated element sets.

Groups up to a configurable order bound (default 10 080) are closed
exhaustively; there is no base-and-strong-generating-set machinery.  Every
representative choice takes the least element in the canonical order
(lexicographic on image sequences), so all outputs are deterministic.

Conjugation follows ``H^g = g⁻¹ H g``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import default_order_bound
from .errors import (
    DegreeMismatch,
    NotAnElement,
    NotPrime,
    OrderBoundExceeded,
    ParentMismatch,
)
from .perm import Permutation, format_cycles


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class FiniteGroup:
    """A permutation group with its complete, sorted element list.

    Besides the elements, the closure records for every element a word in
    the generators; G-sets use it to act by arbitrary elements while only
    storing generator tables.
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: int | None = None,
        order_bound: int | None = None,
    ):
        generators = [Permutation(g) for g in generators]
        if degree is None:
            degree = generators[0].degree if generators else 1
        if degree < 1:
            raise DegreeMismatch("degree must be at least 1")
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator {g.to_cycle_string()} has degree {g.degree}, expected {degree}"
                )
        if order_bound is None:
            order_bound = default_order_bound()
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self.degree = degree
        self.order_bound = order_bound

        identity = Permutation.identity(degree)
        # parent[e] = (generator index, previous element) with e = gens[i] * prev
        parent: dict[Permutation, tuple[int, Permutation] | None] = {identity: None}
        queue = deque([identity])
        while queue:
            e = queue.popleft()
            for i, s in enumerate(self.generators):
                n = s * e
                if n not in parent:
                    parent[n] = (i, e)
                    if len(parent) > order_bound:
                        raise OrderBoundExceeded(
                            f"group order exceeds the bound {order_bound}"
                        )
                    queue.append(n)
        self._parent = parent
        self.elements: tuple[Permutation, ...] = tuple(sorted(parent))
        self._index = {g: i for i, g in enumerate(self.elements)}
        self.identity = identity

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def __iter__(self):
        return iter(self.elements)

    def index(self, g: Permutation) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise NotAnElement(f"{g!r} is not in the group") from None

    def word(self, g: Permutation) -> list[int]:
        """Generator indices ``[i1, ..., ik]`` with ``g = s_i1 * ... * s_ik``."""
        if g not in self._parent:
            raise NotAnElement(f"{g!r} is not in the group")
        out = []
        step = self._parent[g]
        while step is not None:
            i, prev = step
            out.append(i)
            step = self._parent[prev]
        return out

    def whole(self) -> "Subgroup":
        return Subgroup(self, self.elements)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, (self.identity,))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, degree={self.degree}, gens={format_cycles(self.generators)!r})"


class Subgroup:
    """A subgroup of ``parent`` stored as a sorted tuple of elements."""

    __slots__ = ("parent", "elements", "_set", "_generators", "__weakref__")

    def __init__(self, parent: FiniteGroup, elements: Iterable[Permutation]):
        self.parent = parent
        self._set = frozenset(elements)
        self.elements: tuple[Permutation, ...] = tuple(sorted(self._set))
        self._generators: tuple[Permutation, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._set

    def __iter__(self):
        return iter(self.elements)

    @property
    def element_set(self) -> frozenset:
        return self._set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __le__(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def __lt__(self, other: "Subgroup") -> bool:
        return self._set < other._set

    @property
    def generators(self) -> tuple[Permutation, ...]:
        """A small generating set, chosen greedily in element order."""
        if self._generators is None:
            gens: list[Permutation] = []
            span = {self.parent.identity}
            for g in self.elements:
                if g not in span:
                    gens.append(g)
                    span = _close(gens, self.parent.identity)
            self._generators = tuple(gens)
        return self._generators

    def is_normal(self) -> bool:
        return all(
            s.conjugate_by(g) in self._set
            for g in self.parent.generators
            for s in self.generators
        )

    def as_group(self) -> FiniteGroup:
        return FiniteGroup(self.generators, degree=self.parent.degree,
                           order_bound=max(self.parent.order_bound, self.order))

    def describe(self) -> str:
        return format_cycles(self.generators) if self.generators else "()"

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, gens={self.describe()!r})"


def _close(gens: Sequence[Permutation], identity: Permutation) -> set[Permutation]:
    span = {identity}
    queue = deque([identity])
    while queue:
        e = queue.popleft()
        for s in gens:
            n = s * e
            if n not in span:
                span.add(n)
                queue.append(n)
    return span


def _check_parent(*subgroups: Subgroup) -> None:
    parent = subgroups[0].parent
    for H in subgroups[1:]:
        if H.parent is not parent:
            raise ParentMismatch("subgroups belong to different groups")


def generate_group(generators: Sequence[Permutation], degree: int | None = None,
                   order_bound: int | None = None) -> FiniteGroup:
    return FiniteGroup(generators, degree=degree, order_bound=order_bound)


def subgroup_closure(G: FiniteGroup, gens: Iterable[Permutation]) -> Subgroup:
    gens = list(gens)
    for g in gens:
        if g not in G:
            raise NotAnElement(f"{g!r} is not an element of the group")
    return Subgroup(G, _close(gens, G.identity))


def conjugate_subgroup(G: FiniteGroup, H: Subgroup, g: Permutation) -> Subgroup:
    """``H^g = g⁻¹ H g``."""
    if g not in G:
        raise NotAnElement(f"{g!r} is not an element of the group")
    ginv = g.inverse()
    return Subgroup(G, (ginv * h * g for h in H.elements))


def intersect_subgroups(H: Subgroup, K: Subgroup) -> Subgroup:
    _check_parent(H, K)
    return Subgroup(H.parent, H.element_set & K.element_set)


def right_transversal(G: FiniteGroup, H: Subgroup) -> list[Permutation]:
    """Least representative of each right coset ``Hg``, in element order."""
    seen: set[Permutation] = set()
    reps = []
    for g in G.elements:
        if g in seen:
            continue
        reps.append(g)
        seen.update(h * g for h in H.elements)
    return reps


def left_transversal(G: FiniteGroup, H: Subgroup) -> list[Permutation]:
    """Least representative of each left coset ``gH``, in element order."""
    seen: set[Permutation] = set()
    reps = []
    for g in G.elements:
        if g in seen:
            continue
        reps.append(g)
        seen.update(g * h for h in H.elements)
    return reps


def normal_core(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """Intersection of all conjugates of ``H``; the largest normal subgroup inside it."""
    core = set(H.elements)
    Hset = H.element_set
    for g in right_transversal(G, H):
        ginv = g.inverse()
        # c lies in H^g exactly when g c g⁻¹ lies in H
        core = {c for c in core if g * c * ginv in Hset}
        if len(core) == 1:
            break
    return Subgroup(G, core)


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    gens = H.generators
    Hset = H.element_set
    return Subgroup(G, (g for g in G.elements
                        if all(h.conjugate_by(g) in Hset for h in gens)))


def centralizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    gens = H.generators
    return Subgroup(G, (g for g in G.elements if all(g * h == h * g for h in gens)))


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    left: Subgroup
    right: Subgroup
    representatives: tuple[Permutation, ...]
    class_sizes: tuple[int, ...]
    classes: tuple[frozenset, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.representatives)


def double_cosets(G: FiniteGroup, K: Subgroup, H: Subgroup) -> DoubleCosetDecomposition:
    """Partition ``G`` into classes ``KgH``, each represented by its least element."""
    _check_parent(K, H)
    assigned: set[Permutation] = set()
    reps, sizes, classes = [], [], []
    for g in G.elements:
        if g in assigned:
            continue
        kg = {k * g for k in K.elements}
        cls = frozenset(x * h for x in kg for h in H.elements)
        assigned |= cls
        reps.append(g)
        sizes.append(len(cls))
        classes.append(cls)
    return DoubleCosetDecomposition(K, H, tuple(reps), tuple(sizes), tuple(classes))


def conjugacy_orbit(G: FiniteGroup, H: Subgroup) -> set[frozenset]:
    """All conjugates of ``H`` as element sets, found by closing under the generators."""
    start = H.element_set
    orbit = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for s in G.generators:
            sinv = s.inverse()
            nxt = frozenset(sinv * x * s for x in cur)
            if nxt not in orbit:
                orbit.add(nxt)
                queue.append(nxt)
    return orbit


def are_conjugate(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    _check_parent(H, K)
    if H.order != K.order:
        return False
    return K.element_set in conjugacy_orbit(G, H)


def is_subconjugate(G: FiniteGroup, K: Subgroup, H: Subgroup) -> bool:
    """True iff ``K^g ⊆ H`` for some ``g`` in ``G``."""
    _check_parent(K, H)
    if H.order % K.order:
        return False
    Hset = H.element_set
    gens = K.generators
    for g in G.elements:
        ginv = g.inverse()
        if all(ginv * k * g in Hset for k in gens):
            return True
    return False


def _canonical_conjugate(orbit: Iterable[frozenset]) -> tuple[Permutation, ...]:
    return min(tuple(sorted(c)) for c in orbit)


@dataclass(frozen=True)
class ElementaryAbelianClassList:
    prime: int
    classes: tuple[Subgroup, ...]
    include_trivial: bool = False

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def ranks(self) -> list[int]:
        out = []
        for E in self.classes:
            r, n = 0, E.order
            while n > 1:
                n //= self.prime
                r += 1
            out.append(r)
        return out


def elementary_abelian_classes(G: FiniteGroup, p: int,
                               include_trivial: bool = False) -> ElementaryAbelianClassList:
    """One representative per conjugacy class of elementary abelian p-subgroups.

    Rank r+1 classes are reached by adjoining a central order-p element to a
    rank r representative; candidates already covered by a known class are
    discarded before any further work.  Each representative is the conjugate
    with the least sorted element tuple.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    identity = G.identity
    order_p = [g for g in G.elements if g != identity and g.order() == p]

    covered: set[frozenset] = set()
    reps: list[Subgroup] = []

    def admit(elements: set[Permutation]) -> Subgroup | None:
        key = frozenset(elements)
        if key in covered:
            return None
        orbit = conjugacy_orbit(G, Subgroup(G, key))
        covered.update(orbit)
        rep = Subgroup(G, _canonical_conjugate(orbit))
        reps.append(rep)
        return rep

    level = []
    for x in order_p:
        rep = admit(_close([x], identity))
        if rep is not None:
            level.append(rep)
    while level:
        nxt = []
        for E in level:
            C = centralizer(G, E)
            for x in C.elements:
                if x in E or x == identity or x.order() != p:
                    continue
                F = _close(list(E.generators) + [x], identity)
                rep = admit(F)
                if rep is not None:
                    nxt.append(rep)
        level = nxt

    reps.sort(key=lambda E: (E.order, E.elements))
    if include_trivial:
        reps.insert(0, G.trivial())
    return ElementaryAbelianClassList(p, tuple(reps), include_trivial)


def is_p_group_order(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown one factor of p at a time inside normalizers."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    target = 1
    while G.order % (target * p) == 0:
        target *= p
    P = G.trivial()
    while P.order < target:
        N = normalizer(G, P)
        for x in N.elements:
            if x in P:
                continue
            if x.order() % p == 0 and is_p_group_order(x.order(), p):
                # x^p must land in P for <P, x> to have order p|P|
                xp = x
                for _ in range(p - 1):
                    xp = xp * x
                if xp in P:
                    P = subgroup_closure(G, list(P.generators) + [x])
                    break
        else:  # pragma: no cover - Sylow's theorem guarantees progress
            raise RuntimeError("failed to extend p-subgroup")
    return P


def is_strongly_p_embedded(K: Subgroup, L: Subgroup, p: int) -> bool:
    """Whether ``L ≤ K`` has ``p | |L|`` and ``p ∤ |L ∩ L^k|`` for all ``k ∈ K∖L``."""
    _check_parent(K, L)
    if L.order % p:
        return False
    Lset = L.element_set
    for k in K.elements:
        if k in Lset:
            continue
        kinv = k.inverse()
        # |L ∩ L^k| counts l in L with k l k⁻¹ in L
        meet = sum(1 for l in L.elements if k * l * kinv in Lset)
        if meet % p == 0:
            return False
    return True


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup of ``G``, sorted by (order, elements).

    Built as joins of cyclic subgroups; meant for small groups only.
    """
    identity = G.identity
    cyclic: dict[frozenset, Permutation] = {}
    for g in G.elements:
        c = frozenset(_close([g], identity))
        cyclic.setdefault(c, g)
    cyc_gens = list(cyclic.values())

    found: dict[frozenset, list[Permutation]] = {frozenset([identity]): []}
    frontier = [frozenset([identity])]
    while frontier:
        nxt = []
        for S in frontier:
            gens = found[S]
            for x in cyc_gens:
                if x in S:
                    continue
                T = frozenset(_close(gens + [x], identity))
                if T not in found:
                    found[T] = gens + [x]
                    nxt.append(T)
        frontier = nxt
    subs = [Subgroup(G, s) for s in found]
    subs.sort(key=lambda H: (H.order, H.elements))
    return subs
