"""The separable rings ``A_X = k(X)`` in mod G, D^b(G) and stab G.

A ring is a category tag plus its carrier G-set.  Everything else is read
off finite combinatorics:

* the ring is zero in stab G exactly on orbits whose stabilizer has order
  prime to p, and such orbits are dropped everywhere;
* the splitting tower ``A^[n]`` is the G-set of n-tuples of pairwise
  distinct points, and the degree is the last level that is nonzero;
* ring morphisms ``A_X → A_Y`` in mod G and D^b(G) are G-maps ``Y → X``;
* the support is the set of conjugacy classes of elementary abelian
  p-subgroups that conjugate into some nonzero orbit stabilizer.
"""
from __future__ import annotations

import enum
import weakref
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .config import DEFAULT_POINT_BUDGET
from .errors import (
    GroupMismatch,
    InternalInconsistency,
    MissingPrime,
    NonConjugateClosures,
    NotPrime,
    NotTransitive,
    PrimeDoesNotDivideOrder,
    SizeBudgetExceeded,
    UnsupportedCategory,
    ZeroRing,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    are_conjugate,
    double_cosets,
    elementary_abelian_classes,
    intersect_subgroups,
    is_prime,
    is_strongly_p_embedded,
    is_subconjugate,
    conjugate_subgroup,
)
from .gsets import GSet, Orbit, count_equivariant_maps, coset_gset, disjoint_union, restrict
from .perm import Permutation


class Kind(enum.Enum):
    MOD = "mod"
    DERIVED = "derived"
    STABLE = "stable"


@dataclass(frozen=True)
class Category:
    """Which ambient category the ring lives in, with the characteristic p.

    ``prime`` is mandatory for the stable category and optional otherwise,
    where it is only needed for supports.
    """

    kind: Kind
    prime: int | None = None

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        if self.prime is not None and not is_prime(self.prime):
            raise NotPrime(f"{self.prime} is not prime")
        if self.kind is Kind.STABLE and self.prime is None:
            raise MissingPrime("the stable category needs a prime")

    @classmethod
    def mod(cls, prime: int | None = None) -> "Category":
        return cls(Kind.MOD, prime)

    @classmethod
    def derived(cls, prime: int | None = None) -> "Category":
        return cls(Kind.DERIVED, prime)

    @classmethod
    def stable(cls, prime: int) -> "Category":
        return cls(Kind.STABLE, prime)

    @property
    def is_stable(self) -> bool:
        return self.kind is Kind.STABLE

    def nonzero_stabilizer(self, stabilizer: Subgroup) -> bool:
        """Whether an orbit with this stabilizer survives in the category."""
        return not self.is_stable or stabilizer.order % self.prime == 0

    def __str__(self) -> str:
        return self.kind.value if self.prime is None else f"{self.kind.value}(p={self.prime})"


@dataclass(frozen=True, eq=False)
class PermRing:
    category: Category
    carrier: GSet

    @property
    def group(self) -> FiniteGroup:
        return self.carrier.group

    def nonzero_orbits(self) -> list[Orbit]:
        return [o for o in self.carrier.orbits()
                if self.category.nonzero_stabilizer(o.stabilizer)]

    def __repr__(self) -> str:
        return f"PermRing({self.category}, {self.carrier!r})"


def perm_ring(category: Category, X: GSet) -> PermRing:
    p = category.prime
    if category.is_stable and X.group.order % p:
        raise PrimeDoesNotDivideOrder(f"p={p} does not divide |G|={X.group.order}")
    return PermRing(category, X)


def coset_ring(category: Category, G: FiniteGroup, H: Subgroup) -> PermRing:
    """``A_H = k(G/H)``."""
    if H.parent is not G:
        raise GroupMismatch("subgroup is not a subgroup of this group")
    return perm_ring(category, coset_gset(G, H))


def is_zero(R: PermRing) -> bool:
    return not R.nonzero_orbits()


def _transitive_stabilizer(R: PermRing) -> Subgroup:
    orbs = R.carrier.orbits()
    if len(orbs) != 1:
        raise NotTransitive(f"carrier has {len(orbs)} orbits")
    return orbs[0].stabilizer


def is_unit(R: PermRing) -> bool:
    """Whether ``R ≅ 𝟙``; in stab G this means the stabilizer is strongly p-embedded."""
    H = _transitive_stabilizer(R)
    if is_zero(R):
        return False
    if not R.category.is_stable:
        return R.carrier.size == 1
    return is_strongly_p_embedded(R.group.whole(), H, R.category.prime)


def indecomposable_factors(R: PermRing) -> list[PermRing]:
    """One transitive factor per orbit that is nonzero in the category."""
    return [PermRing(R.category, restrict(R.carrier, o.points)) for o in R.nonzero_orbits()]


# --- splitting tower -------------------------------------------------------

@dataclass(frozen=True)
class TowerOrbit:
    """``multiplicity`` G-orbits of tuples, all with exactly this stabilizer.

    ``representative`` is the least tuple among them.  Several orbits are
    folded into one entry only once the stabilizer fixes every unused point,
    from where on every extension keeps the same stabilizer.
    """

    representative: tuple[int, ...]
    stabilizer: Subgroup
    multiplicity: int = 1
    settled: bool = False

    @property
    def orbit_size(self) -> int:
        return self.stabilizer.parent.order // self.stabilizer.order


@dataclass(frozen=True)
class TowerLevel:
    n: int
    orbits: tuple[TowerOrbit, ...]

    @property
    def orbit_count(self) -> int:
        return sum(o.multiplicity for o in self.orbits)

    @property
    def point_count(self) -> int:
        return sum(o.multiplicity * o.orbit_size for o in self.orbits)

    @property
    def is_zero(self) -> bool:
        return not self.orbits

    def stabilizers(self) -> list[Subgroup]:
        return [o.stabilizer for o in self.orbits]

    def summary(self) -> dict:
        """Orbit and point counts plus ``[orbit size, stabilizer order, count]`` rows."""
        shapes: Counter = Counter()
        for o in self.orbits:
            shapes[(o.orbit_size, o.stabilizer.order)] += o.multiplicity
        return {
            "n": self.n,
            "orbit_count": self.orbit_count,
            "point_count": self.point_count,
            "orbits": [[size, stab, count] for (size, stab), count in sorted(shapes.items())],
        }

    def gset(self, point_budget: int | None = None) -> GSet:
        """A G-set isomorphic to this level: one coset space per orbit."""
        if not self.orbits:
            raise ValueError("level is zero")
        budget = DEFAULT_POINT_BUDGET if point_budget is None else point_budget
        if self.point_count > budget:
            raise SizeBudgetExceeded(f"level {self.n} has {self.point_count} points")
        G = self.orbits[0].stabilizer.parent
        out = GSet.empty(G)
        for o in self.orbits:
            block = coset_gset(G, o.stabilizer)
            for _ in range(o.multiplicity):
                out = disjoint_union(out, block, point_budget=budget)
        return out


@dataclass(frozen=True)
class TowerReport:
    ring: PermRing
    levels: tuple[TowerLevel, ...]

    @property
    def degree(self) -> int:
        # the last level is always the first zero one
        return len(self.levels) - 2

    @property
    def top(self) -> TowerLevel:
        return self.levels[self.degree]


def _stabilizer_of_point(X: GSet, S: Subgroup, y: int) -> Subgroup:
    return Subgroup(S.parent, (s for s in S.elements if X.permutation(s)[y] == y))


def _extend(R: PermRing, node: TowerOrbit, budget: int) -> list[TowerOrbit]:
    X = R.carrier
    used = set(node.representative)
    free = [x for x in range(X.size) if x not in used]
    if not free:
        return []
    if node.settled:
        return [TowerOrbit(node.representative + (free[0],), node.stabilizer,
                           node.multiplicity * len(free), True)]
    S = node.stabilizer
    perms = [X.permutation(s) for s in S.generators]
    out = []
    seen: set[int] = set()
    for y in free:
        if y in seen:
            continue
        # S-orbit of y: these tuples extend the node inside one G-orbit
        orb = {y}
        stack = [y]
        while stack:
            a = stack.pop()
            for p in perms:
                b = p[a]
                if b not in orb:
                    orb.add(b)
                    stack.append(b)
        seen |= orb
        T = _stabilizer_of_point(X, S, y)
        if not R.category.nonzero_stabilizer(T):
            continue
        rest = [x for x in free if x != y]
        tperms = [X.permutation(t) for t in T.generators]
        settled = all(p[x] == x for p in tperms for x in rest)
        out.append(TowerOrbit(node.representative + (y,), T, node.multiplicity, settled))
    return out


def _merge_settled(nodes: Iterable[TowerOrbit]) -> list[TowerOrbit]:
    merged: dict[frozenset, TowerOrbit] = {}
    out: list[TowerOrbit] = []
    for node in nodes:
        if not node.settled:
            out.append(node)
            continue
        key = node.stabilizer.element_set
        prev = merged.get(key)
        if prev is None:
            merged[key] = node
        else:
            merged[key] = TowerOrbit(min(prev.representative, node.representative),
                                     node.stabilizer,
                                     prev.multiplicity + node.multiplicity, True)
    out.extend(merged.values())
    out.sort(key=lambda o: o.representative)
    return out


_TOWERS: "weakref.WeakKeyDictionary[PermRing, TowerReport]" = weakref.WeakKeyDictionary()


def splitting_tower(R: PermRing, point_budget: int | None = None) -> TowerReport:
    """Levels ``0..deg+1`` of the tower, zero orbits removed.

    Level ``n+1`` is grown from the orbit representatives of level ``n``:
    the orbits over a tuple with stabilizer S correspond to the S-orbits on
    the unused points, and the new stabilizer is the point stabilizer in S.
    """
    if point_budget is None:
        cached = _TOWERS.get(R)
        if cached is None:
            cached = _TOWERS[R] = _build_tower(R, DEFAULT_POINT_BUDGET)
        return cached
    return _build_tower(R, point_budget)


def _build_tower(R: PermRing, budget: int) -> TowerReport:
    G = R.group
    X = R.carrier
    root_settled = all(t[x] == x for t in X.tables for x in range(X.size))
    level = [TowerOrbit((), G.whole(), 1, root_settled)]
    levels = [TowerLevel(0, tuple(level))]
    while level:
        nxt = []
        for node in level:
            nxt.extend(_extend(R, node, budget))
            if sum(1 for o in nxt if not o.settled) > budget:
                raise SizeBudgetExceeded(
                    f"tower level {len(levels)} needs more than {budget} orbit representatives")
        level = _merge_settled(nxt)
        levels.append(TowerLevel(len(levels), tuple(level)))
    return TowerReport(R, tuple(levels))


def degree(R: PermRing) -> int:
    return splitting_tower(R).degree


# --- morphisms and quasi-Galois tests -------------------------------------

def count_ring_endomorphisms(R: PermRing) -> int:
    if R.category.is_stable:
        raise UnsupportedCategory("ring morphisms in stab G are not G-maps")
    return count_equivariant_maps(R.carrier, R.carrier)


@dataclass(frozen=True)
class GaloisReport:
    is_quasi_galois: bool
    degree: int
    endo_count: int | None = None
    witness: tuple[Permutation, Permutation] | None = None


def _require_transitive_nonzero(R: PermRing) -> Subgroup:
    H = _transitive_stabilizer(R)
    if is_zero(R):
        raise ZeroRing("the ring is zero in this category")
    return H


def stable_galois_witness(G: FiniteGroup, H: Subgroup, p: int):
    """First ``(g, h)`` with ``g ∉ H``, ``h ∈ H∖H^g`` and ``p | |H ∩ H^g ∩ H^{gh}|``.

    Returns None when no such pair exists.
    """
    Hset = H.element_set
    for g in G.elements:
        if g in Hset:
            continue
        ginv = g.inverse()
        meet = [x for x in H.elements if g * x * ginv in Hset]  # H ∩ H^g
        if len(meet) % p:
            continue
        Hg = {ginv * x * g for x in H.elements}
        for h in H.elements:
            if h in Hg:
                continue
            gh = g * h
            ghinv = gh.inverse()
            count = sum(1 for x in meet if gh * x * ghinv in Hset)
            if count % p == 0:
                return g, h
    return None


def is_quasi_galois(R: PermRing) -> GaloisReport:
    H = _require_transitive_nonzero(R)
    d = degree(R)
    if R.category.is_stable:
        witness = stable_galois_witness(R.group, H, R.category.prime)
        return GaloisReport(witness is None, d, None, witness)
    normal = H.is_normal()
    endos = count_ring_endomorphisms(R)
    if (endos == d) != normal:
        raise InternalInconsistency(
            f"endomorphism count {endos} vs degree {d} disagrees with normality={normal}")
    return GaloisReport(normal, d, endos, None)


# --- supports and closures -------------------------------------------------

@lru_cache(maxsize=64)
def _ea_classes(G: FiniteGroup, p: int):
    return elementary_abelian_classes(G, p)


@dataclass(frozen=True)
class SupportDescriptor:
    prime: int
    classes: tuple[Subgroup, ...]
    includes_trivial: bool = False

    def keys(self) -> frozenset:
        keys = {E.element_set for E in self.classes}
        return frozenset(keys)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SupportDescriptor):
            return NotImplemented
        return (self.prime == other.prime and self.includes_trivial == other.includes_trivial
                and self.keys() == other.keys())

    def __le__(self, other: "SupportDescriptor") -> bool:
        return self.keys() <= other.keys() and (other.includes_trivial or not self.includes_trivial)

    def __hash__(self) -> int:
        return hash((self.prime, self.includes_trivial, self.keys()))

    def is_empty(self) -> bool:
        return not self.classes and not self.includes_trivial


def _support_of_stabilizers(G: FiniteGroup, category: Category,
                            stabilizers: Sequence[Subgroup]) -> SupportDescriptor:
    p = category.prime
    if p is None:
        raise MissingPrime("supports need a prime")
    stabilizers = [S for S in stabilizers if category.nonzero_stabilizer(S)]
    classes = tuple(E for E in _ea_classes(G, p)
                    if any(is_subconjugate(G, E, S) for S in stabilizers))
    trivial = not category.is_stable and bool(stabilizers)
    if trivial:
        classes = (G.trivial(),) + classes
    return SupportDescriptor(p, classes, trivial)


def support(R: PermRing) -> SupportDescriptor:
    """Classes of elementary abelian p-subgroups conjugate into a nonzero orbit stabilizer.

    The trivial class is part of the support in mod G and D^b(G) (for a
    nonzero ring) and never in stab G.
    """
    return _support_of_stabilizers(R.group, R.category,
                                   [o.stabilizer for o in R.carrier.orbits()])


def level_support(R: PermRing, level: TowerLevel) -> SupportDescriptor:
    return _support_of_stabilizers(R.group, R.category, level.stabilizers())


def has_constant_degree(R: PermRing) -> bool:
    """Whether the top of the tower has the same support as the ring."""
    if is_zero(R):
        return True
    return _top_support_matches(R, splitting_tower(R).top)


def _top_support_matches(R: PermRing, top: TowerLevel) -> bool:
    # without a prime only the trivial class can be seen, as for p not dividing |G|
    if R.category.prime is None:
        return True
    return level_support(R, top) == support(R)


@dataclass(frozen=True)
class ClosureReport:
    constant_degree: bool
    closure: PermRing | None = None
    stabilizer: Subgroup | None = None
    tuple_witness: tuple[Permutation, ...] = field(default=())


def _witness_elements(R: PermRing, H: Subgroup, points: Sequence[int]) -> tuple[Permutation, ...]:
    """Turn points of the carrier into ``g`` with point stabilizer ``H^g``."""
    X = R.carrier
    G = R.group
    out = []
    for x in points:
        # least element u with u·x0 = x; the stabilizer of x is u H u⁻¹ = H^{u⁻¹}
        u = next(g for g in G.elements if X.permutation(g)[0] == x)
        out.append(u.inverse())
    return tuple(out)


def quasi_galois_closure(R: PermRing) -> ClosureReport:
    """The quasi-Galois closure of a transitive ring of constant degree.

    The closure is the coset ring of the stabilizer of the least valid tuple
    at the top of the tower.  All top-level stabilizers are checked to be
    conjugate; a failure raises :class:`NonConjugateClosures`.
    """
    H = _require_transitive_nonzero(R)
    tower = splitting_tower(R)
    top = tower.top
    if not _top_support_matches(R, top):
        return ClosureReport(False)
    first = top.orbits[0]
    G = R.group
    for o in top.orbits[1:]:
        if not are_conjugate(G, first.stabilizer, o.stabilizer):
            raise NonConjugateClosures(
                f"top-level stabilizers of orders {first.stabilizer.order} and "
                f"{o.stabilizer.order} are not conjugate")
    S = first.stabilizer
    closure = PermRing(R.category, coset_gset(G, S))
    witness = _witness_elements(R, H, first.representative)
    return ClosureReport(True, closure, S, witness)


def mackey_stabilizers(G: FiniteGroup, K: Subgroup, H: Subgroup) -> list[Subgroup]:
    """``K ∩ xHx⁻¹`` for each double coset ``KxH``: the orbit stabilizers of
    ``G/K × G/H`` through ``(K, xH)``."""
    dc = double_cosets(G, K, H)
    return [intersect_subgroups(K, conjugate_subgroup(G, H, x.inverse()))
            for x in dc.representatives]


def splits(B: PermRing, R: PermRing) -> bool:
    """Whether ``B ⊗ R`` is ``deg(R)`` copies of ``B`` over ``B``.

    For ``B = A_K`` this restricts ``R`` to K: it splits when every Mackey
    factor ``A^K_L`` is zero or the unit in the category over K, with
    exactly ``deg(R)`` units.
    """
    if B.category != R.category:
        raise GroupMismatch("rings live in different categories")
    K = _transitive_stabilizer(B)
    if is_zero(B):
        return False
    G = R.group
    p = R.category.prime
    units = 0
    for orb in R.carrier.orbits():
        for L in mackey_stabilizers(G, K, orb.stabilizer):
            if not R.category.is_stable:
                if L.order != K.order:
                    return False
                units += 1
            elif L.order % p == 0:
                if not is_strongly_p_embedded(K, L, p):
                    return False
                units += 1
    return units == degree(R)


def splitting_rings(R: PermRing) -> list[PermRing]:
    """Indecomposable factors of the top tower level, one per conjugacy class."""
    if is_zero(R):
        raise ZeroRing("the ring is zero in this category")
    G = R.group
    reps: list[Subgroup] = []
    for o in splitting_tower(R).top.orbits:
        if not any(S.order == o.stabilizer.order and are_conjugate(G, S, o.stabilizer)
                   for S in reps):
            reps.append(o.stabilizer)
    out = []
    for S in reps:
        B = PermRing(R.category, coset_gset(G, S))
        if not splits(B, R):
            raise InternalInconsistency(f"top-level factor of order {S.order} does not split the ring")
        out.append(B)
    return out
