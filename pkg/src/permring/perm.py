"""Permutations of {0..n-1} and their cycle notation.

A permutation is stored as its image sequence.  Products compose as
functions: ``(a * b)[i] == a[b[i]]``, so ``b`` acts first.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import ParseError


class Permutation(tuple):
    """Immutable bijection of ``range(len(self))`` given by its images.

    Being a tuple, permutations hash, compare and sort lexicographically on
    their image sequences, which is the canonical element order used
    throughout the package.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images: Iterable[int]) -> "Permutation":
        # unchecked constructor for hot paths
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return tuple.__new__(cls, range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 0-based cycles, e.g. ``[(0, 1, 2), (3, 4)]``."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for a in cycle:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} outside 0..{degree - 1}")
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycles")
                seen.add(a)
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[a] = b
        return tuple.__new__(cls, images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        return tuple.__new__(Permutation, [self[i] for i in other])

    __rmul__ = None  # tuple repetition must not leak through

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return tuple.__new__(Permutation, inv)

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """Return ``g⁻¹ · self · g``."""
        ginv = g.inverse()
        return ginv * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self[j]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        from math import lcm

        result = 1
        for c in self.cycles():
            result = lcm(result, len(c))
        return result

    def to_cycle_string(self) -> str:
        """Cycle notation on 1-based points; the identity prints as ``()``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(a + 1) for a in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycle_string()!s}, degree={len(self)})"


_CYCLE_TOKEN = re.compile(r"\s*(\(|\)|,|\d+)")


def parse_cycles(text: str, degree: int | None = None, offset: int = 0) -> list[Permutation]:
    """Parse comma-separated generators written as 1-based cycles.

    ``"(1 2 3),(1 2)"`` gives two permutations of degree 3.  Inside a cycle
    points may be separated by spaces or commas.  When ``degree`` is None it
    is the largest point mentioned.  ``offset`` only shifts reported error
    positions.
    """
    gens: list[list[list[int]]] = []
    current: list[list[int]] = []
    cycle: list[int] | None = None
    pos = 0
    expect_gen = True
    while pos < len(text):
        m = _CYCLE_TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError("unexpected character", text, offset + bad)
        tok = m.group(1)
        tok_pos = m.start(1)
        pos = m.end()
        if tok == "(":
            if cycle is not None:
                raise ParseError("nested '('", text, offset + tok_pos)
            cycle = []
            expect_gen = False
        elif tok == ")":
            if cycle is None:
                raise ParseError("unmatched ')'", text, offset + tok_pos)
            if len(set(cycle)) != len(cycle):
                raise ParseError("repeated point in cycle", text, offset + tok_pos)
            current.append(cycle)
            cycle = None
        elif tok == ",":
            if cycle is not None:
                continue
            if expect_gen:
                raise ParseError("empty generator", text, offset + tok_pos)
            gens.append(current)
            current = []
            expect_gen = True
        else:
            if cycle is None:
                raise ParseError("point outside a cycle", text, offset + tok_pos)
            point = int(tok)
            if point < 1:
                raise ParseError("points are 1-based", text, offset + tok_pos)
            cycle.append(point - 1)
    if cycle is not None:
        raise ParseError("unclosed '('", text, offset + len(text))
    if expect_gen and gens:
        raise ParseError("trailing ','", text, offset + len(text))
    if not expect_gen:
        gens.append(current)

    largest = max((a for g in gens for c in g for a in c), default=-1) + 1
    if degree is None:
        degree = max(largest, 1)
    elif largest > degree:
        raise ParseError(f"point {largest} exceeds degree {degree}", text, offset)
    perms = []
    for g in gens:
        seen = [a for c in g for a in c]
        if len(set(seen)) != len(seen):
            raise ParseError("cycles of one generator must be disjoint", text, offset)
        perms.append(Permutation.from_cycles(g, degree))
    return perms


def format_cycles(perms: Iterable[Permutation]) -> str:
    return ",".join(p.to_cycle_string() for p in perms)
