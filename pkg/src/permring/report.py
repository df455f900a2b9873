"""Group/subgroup spec parsing and the analysis report behind the CLI.

Group grammar::

    S<n> | A<n> | C<n> | D<n>     symmetric, alternating, cyclic, dihedral (order 2n)
    F1xF2x...                     direct product of the above on disjoint points
    perm:(1 2 3),(1 2)            generators in 1-based cycle notation

Subgroup grammar::

    gens:<cycles>   stab:<k>[,<k>...]   sylow:<p>   core:<subgroup spec>
    trivial         whole
"""
from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass
from typing import Any

from . import families
from .errors import ParseError, PermRingError, UnsupportedFamily
from .groups import (
    FiniteGroup,
    Subgroup,
    normal_core,
    subgroup_closure,
    sylow_subgroup,
)
from .oracle import oracle_degree_stable, oracle_gmap_count, oracle_normal_core
from .perm import Permutation, format_cycles, parse_cycles
from .rings import (
    Category,
    Kind,
    PermRing,
    coset_ring,
    count_ring_endomorphisms,
    is_quasi_galois,
    is_unit,
    is_zero,
    quasi_galois_closure,
    splitting_tower,
    support,
)

_FAMILY = re.compile(r"([SACD])(\d+)")
_BUILDERS = {
    "S": lambda n: (families.symmetric_generators(n), max(n, 1)),
    "A": lambda n: (families.alternating_generators(n), max(n, 1)),
    "C": lambda n: (families.cyclic_generators(n), max(n, 1)),
    "D": families.dihedral_generators,
}


@dataclass(frozen=True)
class GroupSpec:
    text: str
    group: FiniteGroup
    canonical: str

    def format(self) -> str:
        return self.canonical


def parse_group_spec(text: str, order_bound: int | None = None) -> GroupSpec:
    """Resolve a group spec; ``"S4"`` is the symmetric group on points 0..3."""
    src = text.strip()
    if not src:
        raise ParseError("empty group spec", text, 0)
    if src.startswith("perm:"):
        gens = parse_cycles(src[5:], offset=5)
        degree = max((g.degree for g in gens), default=1)
        gens = [_pad(g, degree) for g in gens]
        group = FiniteGroup(gens, degree=degree, order_bound=order_bound)
        canonical = "perm:" + (format_cycles(gens) if gens else "()")
        return GroupSpec(text, group, canonical)

    factors = []
    names = []
    pos = 0
    for part in src.split("x"):
        m = _FAMILY.fullmatch(part)
        if m is None:
            if part and part[0].isalpha() and part[0] not in "SACD":
                raise UnsupportedFamily(f"unknown family {part[0]!r}", text, pos)
            raise ParseError("expected a family like S4, A5, C3 or D4", text, pos)
        n = int(m.group(2))
        if n < 1:
            raise ParseError("family index must be positive", text, pos + 1)
        factors.append(_BUILDERS[m.group(1)](n))
        names.append(f"{m.group(1)}{n}")
        pos += len(part) + 1
    if len(factors) == 1:
        gens, degree = factors[0]
    else:
        gens, degree = families.direct_product_generators(factors)
    group = FiniteGroup(gens, degree=degree, order_bound=order_bound)
    return GroupSpec(text, group, "x".join(names))


def _pad(g: Permutation, degree: int) -> Permutation:
    if g.degree == degree:
        return g
    return Permutation(tuple(g) + tuple(range(g.degree, degree)))


def parse_subgroup_spec(text: str, G: FiniteGroup) -> Subgroup:
    src = text.strip()
    head, sep, rest = src.partition(":")
    if head == "trivial" and not sep:
        return G.trivial()
    if head == "whole" and not sep:
        return G.whole()
    if not sep:
        raise ParseError("expected gens:, stab:, sylow:, core:, trivial or whole", text, 0)
    offset = len(head) + 1
    if head == "gens":
        gens = parse_cycles(rest, degree=G.degree, offset=offset)
        return subgroup_closure(G, gens)
    if head == "stab":
        try:
            points = [int(tok) - 1 for tok in rest.split(",")]
        except ValueError:
            raise ParseError("stab: takes 1-based point numbers", text, offset) from None
        for a in points:
            if not 0 <= a < G.degree:
                raise ParseError(f"point {a + 1} outside 1..{G.degree}", text, offset)
        return Subgroup(G, (g for g in G.elements if all(g[a] == a for a in points)))
    if head == "sylow":
        try:
            p = int(rest)
        except ValueError:
            raise ParseError("sylow: takes a prime", text, offset) from None
        return sylow_subgroup(G, p)
    if head == "core":
        return normal_core(G, parse_subgroup_spec(rest, G))
    raise ParseError(f"unknown subgroup form {head!r}", text, 0)


def parse_category(name: str, prime: int | None) -> Category:
    return Category(Kind(name), prime)


def _subgroup_json(H: Subgroup) -> dict:
    return {"order": H.order, "generators": [g.to_cycle_string() for g in H.generators]}


@dataclass
class AnalysisReport:
    group: str
    group_order: int
    subgroup: dict
    index: int
    prime: int | None
    category: str
    is_zero: bool
    is_unit: bool | None
    degree: int
    tower: list
    endo_count: int | None
    quasi_galois: bool | None
    witness: list | None
    constant_degree: bool
    closure: dict | None
    support: list | None
    oracle: dict | None = None
    timing: float = 0.0

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def run_report(group: GroupSpec, subgroup: Subgroup, prime: int | None,
               category: str | Kind, with_oracle: bool = False) -> AnalysisReport:
    """Run every ring analysis on ``A_H`` and collect the results."""
    start = time.perf_counter()
    G = group.group
    kind = Kind(category) if not isinstance(category, Kind) else category
    cat = Category(kind, prime)
    R = coset_ring(cat, G, subgroup)
    zero = is_zero(R)
    tower = splitting_tower(R)

    endo = None if cat.is_stable else count_ring_endomorphisms(R)
    qg = witness = None
    closure = None
    unit = None
    constant = True
    if not zero:
        unit = is_unit(R)
        gal = is_quasi_galois(R)
        qg = gal.is_quasi_galois
        if gal.witness is not None:
            witness = [g.to_cycle_string() for g in gal.witness]
        cl = quasi_galois_closure(R)
        constant = cl.constant_degree
        if cl.closure is not None:
            closure = _subgroup_json(cl.stabilizer)
            closure["witness"] = [g.to_cycle_string() for g in cl.tuple_witness]
    supp = None
    if prime is not None:
        supp = [_subgroup_json(E) for E in support(R).classes]

    oracle = None
    if with_oracle:
        oracle = _oracle_checks(R, subgroup, tower.degree, endo)

    return AnalysisReport(
        group=group.canonical,
        group_order=G.order,
        subgroup=_subgroup_json(subgroup),
        index=G.order // subgroup.order,
        prime=prime,
        category=kind.value,
        is_zero=zero,
        is_unit=unit,
        degree=tower.degree,
        tower=[level.summary() for level in tower.levels],
        endo_count=endo,
        quasi_galois=qg,
        witness=witness,
        constant_degree=constant,
        closure=closure,
        support=supp,
        oracle=oracle,
        timing=round(time.perf_counter() - start, 6),
    )


def _oracle_checks(R: PermRing, H: Subgroup, degree: int, endo: int | None) -> dict:
    G = R.group
    out: dict[str, Any] = {}
    if R.category.is_stable:
        value = oracle_degree_stable(G, H, R.category.prime)
        out["degree"] = {"value": value, "agrees": value == degree}
    else:
        out["degree"] = {"value": R.carrier.size, "agrees": R.carrier.size == degree}
    if endo is not None:
        try:
            value = oracle_gmap_count(R.carrier, R.carrier)
            out["endo_count"] = {"value": value, "agrees": value == endo}
        except PermRingError:
            out["endo_count"] = None
    try:
        core = oracle_normal_core(G, H)
        out["normal_core_order"] = {"value": core.order,
                                    "agrees": core == normal_core(G, H)}
    except PermRingError:
        out["normal_core_order"] = None
    out["all_agree"] = all(v["agrees"] for v in out.values() if isinstance(v, dict))
    return out


SUBCOMMAND_FIELDS = {
    "analyze": None,
    "degree": ["degree", "is_zero", "is_unit"],
    "tower": ["degree", "tower"],
    "closure": ["degree", "quasi_galois", "witness", "constant_degree", "closure"],
    "support": ["is_zero", "support"],
    "endos": ["degree", "endo_count", "quasi_galois"],
}
_HEADER = ["group", "group_order", "subgroup", "index", "prime", "category"]


def select(report: AnalysisReport, command: str) -> dict:
    data = report.to_dict()
    keys = SUBCOMMAND_FIELDS.get(command)
    if keys is None:
        return data
    chosen = _HEADER + keys + ["oracle", "timing"]
    return {k: data[k] for k in chosen}


def to_json(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _fmt(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def to_text(data: dict) -> str:
    lines = []
    for key in data:
        value = data[key]
        if key == "subgroup":
            lines.append(f"subgroup: order {value['order']} gens {','.join(value['generators']) or '()'}")
        elif key == "tower":
            lines.append("tower:")
            lines.append("  n  orbits  points  [size, stab, count]")
            for level in value:
                lines.append(f"  {level['n']:<2} {level['orbit_count']:<7} {level['point_count']:<7} {level['orbits']}")
        elif key == "closure":
            if value is None:
                lines.append("closure: null")
            else:
                lines.append(f"closure: order {value['order']}")
                lines.append(f"closure_generators: {','.join(value['generators']) or '()'}")
                lines.append(f"closure_witness: {' '.join(value['witness'])}")
        elif key == "support":
            if value is None:
                lines.append("support: null")
            else:
                classes = "; ".join(f"order {c['order']} <{','.join(c['generators']) or '()'}>" for c in value)
                lines.append(f"support: {classes or 'empty'}")
        elif key == "witness":
            lines.append(f"witness: {'null' if value is None else ' '.join(value)}")
        elif key == "oracle":
            if value is None:
                continue
            for name, check in value.items():
                lines.append(f"oracle.{name}: {_fmt(check) if not isinstance(check, dict) else _fmt(check['value']) + (' ok' if check['agrees'] else ' MISMATCH')}")
        else:
            lines.append(f"{key}: {_fmt(value)}")
    return "\n".join(lines) + "\n"


def emit(report: AnalysisReport | dict, fmt: str = "text") -> str:
    data = report.to_dict() if isinstance(report, AnalysisReport) else report
    if fmt == "json":
        return to_json(data)
    if fmt == "text":
        return to_text(data)
    raise ValueError(f"unknown format {fmt!r}")
