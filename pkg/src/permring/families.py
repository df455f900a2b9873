"""Named permutation groups: S_n, A_n, C_n, D_n and direct products."""
from __future__ import annotations

from .groups import FiniteGroup
from .perm import Permutation


def _cycle(points, degree: int) -> Permutation:
    return Permutation.from_cycles([tuple(points)], degree)


def symmetric_generators(n: int) -> list[Permutation]:
    if n < 2:
        return []
    if n == 2:
        return [_cycle((0, 1), 2)]
    return [_cycle(range(n), n), _cycle((0, 1), n)]


def alternating_generators(n: int) -> list[Permutation]:
    return [_cycle((0, 1, k), n) for k in range(2, n)]


def cyclic_generators(n: int) -> list[Permutation]:
    return [_cycle(range(n), n)] if n > 1 else []


def dihedral_generators(n: int) -> tuple[list[Permutation], int]:
    """Generators of the dihedral group of order ``2n`` and their degree.

    For ``n ≥ 3`` this is the symmetry group of an n-gon; ``D1`` is C2 on
    two points and ``D2`` is the Klein four-group on four points.
    """
    if n == 1:
        return [_cycle((0, 1), 2)], 2
    if n == 2:
        return [_cycle((0, 1), 4), _cycle((2, 3), 4)], 4
    rotation = _cycle(range(n), n)
    reflection = Permutation([(-i) % n for i in range(n)])
    return [rotation, reflection], n


def direct_product_generators(factors: list[tuple[list[Permutation], int]]):
    """Generators of the product acting on the disjoint union of the points."""
    total = sum(deg for _, deg in factors)
    gens = []
    offset = 0
    for fgens, deg in factors:
        for g in fgens:
            images = list(range(total))
            for i in range(deg):
                images[offset + i] = offset + g[i]
            gens.append(Permutation(images))
        offset += deg
    return gens, total


def symmetric(n: int, order_bound: int | None = None) -> FiniteGroup:
    return FiniteGroup(symmetric_generators(n), degree=max(n, 1), order_bound=order_bound)


def alternating(n: int, order_bound: int | None = None) -> FiniteGroup:
    return FiniteGroup(alternating_generators(n), degree=max(n, 1), order_bound=order_bound)


def cyclic(n: int, order_bound: int | None = None) -> FiniteGroup:
    return FiniteGroup(cyclic_generators(n), degree=max(n, 1), order_bound=order_bound)


def dihedral(n: int, order_bound: int | None = None) -> FiniteGroup:
    gens, deg = dihedral_generators(n)
    return FiniteGroup(gens, degree=deg, order_bound=order_bound)
