"""Structural properties checked on every corpus case.

Each check returns :class:`PropertyResult` records rather than raising, so the
CLI can report every failure in one run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .base import base_size, q_exact, regular_orbit_count, verify_certificate
from .corpus import Case
from .cosets import coset_space, fpr, fpr_via_class
from .perm import (
    PermutationGroup,
    SubgroupHandle,
    core,
    derived_subgroup,
    fitting_subgroup,
    is_hall,
    is_solvable,
    o_p,
    prime_factors,
    subgroup,
    sylow_subgroup,
    trivial_subgroup,
    whole_group,
)
from .probability import conjugacy_classes, class_mass_bound, prime_order_profile, q_hat

ABELIAN_SAMPLES = 20
C_RANGE = range(1, 6)


@dataclass(frozen=True)
class PropertyResult:
    prop: str
    subject: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{mark}  {self.prop:<22} {self.subject}{tail}"


def check_hall(case: Case) -> list[PropertyResult]:
    if case.pi is None:
        return []
    G, H = case.group, case.subgroup
    hall, solv = is_hall(G, H, case.pi), is_solvable(H)
    return [PropertyResult("hall-declaration", case.name, hall and solv,
                           f"pi={{{case.pi}}} hall={hall} solvable={solv}")]


def normal_subgroups_found(G: PermutationGroup, extra: Iterable[SubgroupHandle] = ()) -> list[SubgroupHandle]:
    """Normal subgroups reachable by the constructions in this package."""
    found = [trivial_subgroup(G), whole_group(G), fitting_subgroup(G)]
    found += [o_p(G, p) for p in prime_factors(G.order)]
    found += [core(G, H) for H in extra]
    K = G
    while K.order > 1:
        D = derived_subgroup(K)
        if D.order == K.order:
            break
        found.append(SubgroupHandle(G, D.elements))
        K = D
    unique, seen = [], set()
    for N in found:
        if N.elements not in seen:
            seen.add(N.elements)
            unique.append(N)
    return sorted(unique, key=lambda N: N.key)


def check_hall_heredity(case: Case) -> list[PropertyResult]:
    """``H ∩ A`` is a pi-Hall subgroup of every normal subgroup ``A``."""
    G, H, pi = case.group, case.subgroup, case.pi
    if pi is None or not is_hall(G, H, pi):
        return []
    bad = []
    normals = normal_subgroups_found(G, [H])
    for A in normals:
        inter = A.elements & H.elements
        if not is_hall(A, SubgroupHandle(G, inter), pi):
            bad.append(A.order)
    return [PropertyResult("hall-heredity", case.name, not bad,
                           f"{len(normals)} normal subgroups" + (f", failing orders {bad}" if bad else ""))]


def sample_abelian_subgroups(G: PermutationGroup, count: int = ABELIAN_SAMPLES, seed: int = 0) -> list[SubgroupHandle]:
    """Cyclic subgroups and subgroups generated by two commuting elements."""
    rng = random.Random(seed)
    els = G.sorted_elements
    out = []
    for _ in range(count):
        g = rng.choice(els)
        gens = [g]
        if rng.random() < 0.5:
            for _ in range(50):
                h = rng.choice(els)
                if g * h == h * g:
                    gens.append(h)
                    break
        out.append(subgroup(G, gens))
    return out


def abelian_witness(G: PermutationGroup, A: SubgroupHandle, F: frozenset):
    """First ``x`` (in element order) with ``A ∩ A^x`` inside ``F``, or ``None``."""
    for x in G.sorted_elements:
        xi = x.inverse()
        # b lies in A^x iff x b x^-1 lies in A
        if all(b in F or x * b * xi not in A.elements for b in A.elements):
            return x
    return None


def check_abelian_intersections(G: PermutationGroup, name: str,
                                count: int = ABELIAN_SAMPLES, seed: int = 0) -> list[PropertyResult]:
    F = fitting_subgroup(G).elements
    missing = []
    samples = sample_abelian_subgroups(G, count, seed)
    for A in samples:
        x = abelian_witness(G, A, F)
        if x is None:
            missing.append(A.order)
    return [PropertyResult("abelian-intersection", name, not missing,
                           f"{len(samples)} abelian subgroups, |F(G)|={len(F)}"
                           + (f", no witness for orders {missing}" if missing else ""))]


def check_three_sylow(G: PermutationGroup, name: str) -> list[PropertyResult]:
    """Three Sylow p-subgroups intersect in ``O_p(G)``, for every prime p."""
    out = []
    for p in prime_factors(G.order):
        P = sylow_subgroup(G, p)
        cert = base_size(G, P)
        ok = cert.base <= 3 and verify_certificate(G, P, cert)
        out.append(PropertyResult("three-sylow", f"{name} p={p}", ok,
                                  f"|O_p|={core(G, P).order}, conjugates needed={cert.base}"))
    return out


def check_fpr_identity(case: Case) -> list[PropertyResult]:
    G, H = case.group, case.subgroup
    space = coset_space(G, H)
    bad = [str(c.representative) for c in conjugacy_classes(G)
           if fpr(space, c.representative) != fpr_via_class(G, H, c.representative)]
    return [PropertyResult("fpr-identity", case.name, not bad,
                           f"{len(conjugacy_classes(G))} classes" + (f", mismatch at {bad}" if bad else ""))]


def check_probability_chain(case: Case, cs: Iterable[int] = C_RANGE) -> list[PropertyResult]:
    G, H = case.group, case.subgroup
    profile = prime_order_profile(G, H)
    A, B = profile.hall_mass, profile.min_class_size
    base = base_size(G, H).base
    out = []
    for c in cs:
        qe, qh, lb = q_exact(G, H, c), q_hat(G, H, c), class_mass_bound(A, B, c)
        ok = qe <= qh <= lb and (qh >= 1 or base <= c)
        out.append(PropertyResult("probability-chain", f"{case.name} c={c}", ok,
                                  f"Q={qe} Qhat={qh} B(A/B)^c={lb}"))
    return out


def check_hall_mass(case: Case) -> list[PropertyResult]:
    G, H = case.group, case.subgroup
    if H.order == 1:
        return []
    A = prime_order_profile(G, H).hall_mass
    return [PropertyResult("hall-mass", case.name, A < H.order, f"sum |x^G ∩ H| = {A} < |H| = {H.order}")]


def check_base_certificate(case: Case) -> list[PropertyResult]:
    G, H = case.group, case.subgroup
    cert = base_size(G, H)
    return [PropertyResult("base-certificate", case.name, verify_certificate(G, H, cert), f"base={cert.base}")]


def check_reg5_from_base(case: Case) -> list[PropertyResult]:
    """``Base <= 4`` forces at least five regular orbits on 5-tuples."""
    G, H = case.group, case.subgroup
    base = base_size(G, H).base
    if base > 4:
        return []
    reg5 = regular_orbit_count(G, H, 5)
    return [PropertyResult("reg5-from-base", case.name, reg5 >= 5, f"base={base} Reg_5={reg5}")]


CASE_CHECKS = (
    check_hall,
    check_hall_heredity,
    check_base_certificate,
    check_fpr_identity,
    check_probability_chain,
    check_hall_mass,
    check_reg5_from_base,
)


def run_properties(cases: list[Case]) -> list[PropertyResult]:
    results: list[PropertyResult] = []
    groups: dict[int, tuple[PermutationGroup, str]] = {}
    for case in cases:
        groups.setdefault(id(case.group), (case.group, case.group_name or case.name))
        for check in CASE_CHECKS:
            results.extend(check(case))
    for G, name in groups.values():
        results.extend(check_abelian_intersections(G, name))
        results.extend(check_three_sylow(G, name))
    return results


def fpr_table(G: PermutationGroup, H: SubgroupHandle) -> list[dict]:
    space = coset_space(G, H)
    rows = []
    for c in conjugacy_classes(G):
        geo, cls = fpr(space, c.representative), fpr_via_class(G, H, c.representative)
        rows.append({
            "rep": str(c.representative),
            "order": c.element_order,
            "size": c.size,
            "fpr": str(geo),
            "fpr_via_class": str(cls),
            "equal": geo == cls,
        })
    return rows

