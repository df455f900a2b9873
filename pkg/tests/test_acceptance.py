"""Acceptance criteria, each checked at exact equality.

Every criterion prints one ``PASS``/``FAIL`` line (collected in the pytest
terminal summary, or printed directly with ``python tests/test_acceptance.py``).
"""
from __future__ import annotations

from collections import Counter
from math import factorial

import pytest

import test_properties as props
from conftest import ACCEPTANCE_LINES, BATTERY, battery_pairs, group
from permring import (
    Category,
    GSet,
    all_subgroups,
    coset_gset,
    coset_ring,
    count_ring_endomorphisms,
    degree,
    has_constant_degree,
    is_quasi_galois,
    is_unit,
    is_zero,
    mackey_stabilizers,
    normal_core,
    normalizer,
    orbits,
    perm_ring,
    product,
    quasi_galois_closure,
    splitting_rings,
    splitting_tower,
)
from permring.errors import BudgetExceeded
from permring.oracle import oracle_degree_stable, oracle_gmap_count, oracle_product_orbits
from permring.report import parse_subgroup_spec


def _class_key(G, S):
    return min(tuple(sorted(x.conjugate_by(g) for x in S)) for g in G.elements)


def _strongly_embedded(G, H, p):
    # written out from the definition, independent of the library helper
    if H.order % p:
        return False
    for g in G.elements:
        if g in H:
            continue
        Hg = {h.conjugate_by(g) for h in H}
        if len(H.element_set & Hg) % p == 0:
            return False
    return True


def criterion_1():
    G = group("S4")
    H = parse_subgroup_spec("stab:4", G)
    R = coset_ring(Category.stable(2), G, H)
    found = {
        "degree": degree(R),
        "constant_degree": has_constant_degree(R),
        "quasi_galois": is_quasi_galois(R).is_quasi_galois,
    }
    cl = quasi_galois_closure(R)
    S = cl.stabilizer
    moved = [x for x in S if not x.is_identity()]
    closure_ok = (S is not None and S.order == 2 and S <= H and len(moved) == 1
                  and [len(c) for c in moved[0].cycles()] == [2])
    expected = {"degree": 2, "constant_degree": True, "quasi_galois": False}
    bad = [f"{k}={found[k]} (want {v})" for k, v in expected.items() if found[k] != v]
    if not closure_ok:
        bad.append("closure is not A_S2 inside H")
    return not bad, "; ".join(bad) or "degree 2, constant, closure A_S2"


def criterion_2():
    bad = []
    for name, G, H in battery_pairs():
        for cat in (Category.derived(2), Category.mod()):
            if degree(coset_ring(cat, G, H)) != G.order // H.order:
                bad.append(f"{name}/|H|={H.order}")
    return not bad, ", ".join(bad) or "degree = [G:H] for every subgroup"


def criterion_3():
    bad = []
    for name, G, H in battery_pairs():
        R = coset_ring(Category.derived(2), G, H)
        if is_quasi_galois(R).is_quasi_galois != H.is_normal():
            bad.append(f"{name}/|H|={H.order} quasi-Galois")
        if has_constant_degree(R):
            if quasi_galois_closure(R).stabilizer != normal_core(G, H):
                bad.append(f"{name}/|H|={H.order} closure")
    return not bad, ", ".join(bad) or "quasi-Galois iff normal; closure is the core"


def criterion_4():
    bad, checked = [], 0
    for name, G, H in battery_pairs():
        if G.order > 60:
            continue
        d = G.order // H.order
        core = normal_core(G, H)
        top = splitting_tower(coset_ring(Category.mod(), G, H)).levels[d]
        checked += 1
        if top.orbit_count != factorial(d) // (G.order // core.order):
            bad.append(f"{name}/|H|={H.order} count")
        if any(S != core for S in top.stabilizers()):
            bad.append(f"{name}/|H|={H.order} stabilizer")
    return not bad, ", ".join(bad) or f"{checked} coset spaces"


def criterion_5():
    bad = []
    for name in ("S3", "C2xC2"):
        G = group(name)
        for n in range(1, 6):
            tower = splitting_tower(perm_ring(Category.mod(), GSet.trivial(G, n)))
            top = tower.top
            if tower.degree != n or top.point_count != factorial(n) \
                    or top.orbit_count != factorial(n) \
                    or any(S.order != G.order for S in top.stabilizers()):
                bad.append(f"{name}/n={n}")
    return not bad, ", ".join(bad) or "degree n, n! fixed points"


def criterion_6():
    bad = []
    for name, G, H in battery_pairs():
        for p in (2, 3):
            if G.order % p:
                continue
            R = coset_ring(Category.stable(p), G, H)
            zero = is_zero(R)
            if zero != (H.order % p != 0):
                bad.append(f"{name}/|H|={H.order}/p={p} zero")
            if not zero and is_unit(R) != _strongly_embedded(G, H, p):
                bad.append(f"{name}/|H|={H.order}/p={p} unit")
    S3 = group("S3")
    C2 = parse_subgroup_spec("gens:(1 2)", S3)
    if not is_zero(coset_ring(Category.stable(3), S3, C2)):
        bad.append("(S3,C2,3) not zero")
    if not is_unit(coset_ring(Category.stable(2), S3, C2)):
        bad.append("(S3,C2,2) not unit")
    return not bad, ", ".join(bad) or "zero iff p prime to |H|; unit iff strongly p-embedded"


def criterion_7():
    bad, checked = [], 0
    for name, G, H in battery_pairs():
        for p in (2, 3):
            if G.order % p:
                continue
            checked += 1
            if degree(coset_ring(Category.stable(p), G, H)) != oracle_degree_stable(G, H, p):
                bad.append(f"{name}/|H|={H.order}/p={p}")
    return not bad, ", ".join(bad) or f"{checked} (G, H, p) instances"


def criterion_8():
    G = group("S4")
    subs = all_subgroups(G)
    bad = 0
    for K in subs:
        XK = coset_gset(G, K)
        for H in subs:
            XH = coset_gset(G, H)
            P = product(XK, XH)
            found = Counter(_class_key(G, o.stabilizer) for o in orbits(P))
            mackey = Counter(_class_key(G, L) for L in mackey_stabilizers(G, K, H))
            shapes = Counter((o.size, o.stabilizer.order) for o in orbits(P))
            if found != mackey or shapes != oracle_product_orbits(XK, XH):
                bad += 1
    return bad == 0, f"{len(subs) ** 2} pairs, {bad} mismatches"


def criterion_9():
    bad, crossed = [], 0
    for name, G, H in battery_pairs():
        R = coset_ring(Category.mod(), G, H)
        e, d = count_ring_endomorphisms(R), degree(R)
        if e > d or (e == d) != H.is_normal():
            bad.append(f"{name}/|H|={H.order} bound")
        if e != normalizer(G, H).order // H.order:
            bad.append(f"{name}/|H|={H.order} normalizer")
        try:
            if oracle_gmap_count(R.carrier, R.carrier) != e:
                bad.append(f"{name}/|H|={H.order} oracle")
            crossed += 1
        except BudgetExceeded:
            pass
    return not bad, ", ".join(bad) or f"bounds hold; {crossed} cross-checked by enumeration"


def criterion_10():
    bad, count = [], 0
    for name, G, H in battery_pairs():
        cats = [Category.mod(), Category.derived(2)]
        cats += [Category.stable(p) for p in (2, 3) if G.order % p == 0]
        for cat in cats:
            R = coset_ring(cat, G, H)
            if is_zero(R):
                continue
            for B in splitting_rings(R):
                count += 1
                if not is_quasi_galois(B).is_quasi_galois:
                    bad.append(f"{name}/|H|={H.order}/{cat}")
    return not bad, ", ".join(bad) or f"{count} splitting rings, all quasi-Galois"


def criterion_11():
    checks = [props.test_lagrange, props.test_double_coset_partition,
              props.test_orbit_stabilizer, props.test_falling_factorial_tuples,
              props.test_support_monotone, props.test_stable_degree_at_most_derived]
    failed = []
    for check in checks:
        try:
            check()
        except Exception as exc:  # hypothesis re-raises the falsifying example
            failed.append(f"{check.__name__}: {type(exc).__name__}")
    return not failed, ", ".join(failed) or f"{len(checks)} invariants hold"


CRITERIA = {
    1: ("closure of the point stabilizer in stab S4 at p=2", criterion_1),
    2: ("derived and module degree equals the index", criterion_2),
    3: ("derived quasi-Galois iff normal; closure from the core", criterion_3),
    4: ("top tower level of G/H is built from the core", criterion_4),
    5: ("trivial G-sets of size n have degree n", criterion_5),
    6: ("stable zero and unit criteria", criterion_6),
    7: ("stable degree agrees with coset subset search", criterion_7),
    8: ("Mackey decomposition of products in S4", criterion_8),
    9: ("endomorphism bound and normalizer count", criterion_9),
    10: ("splitting rings are quasi-Galois", criterion_10),
    11: ("randomized invariant suite", criterion_11),
}


def _line(n: int, ok: bool, title: str, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {n}: {title} ({detail})"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    title, check = CRITERIA[n]
    ok, detail = check()
    line = _line(n, ok, title, detail)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = []
    for n in sorted(CRITERIA):
        title, check = CRITERIA[n]
        ok, detail = check()
        results.append(ok)
        print(_line(n, ok, title, detail))
    print(f"{sum(results)}/{len(results)} criteria passed (battery: {', '.join(BATTERY)})")
    sys.exit(0 if all(results) else 1)
