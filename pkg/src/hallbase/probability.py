"""Conjugacy classes and the fixed-point-ratio majorants of the base size.

For a transitive action with point stabilizer ``H``, a ``c``-tuple fails to be
regular only if some element of prime order fixes it, which gives

    Q(G, c) <= sum_i |x_i^G| * fpr(x_i)**c =: q_hat(G, H, c)

over representatives ``x_i`` of the classes of prime-order elements.  With
``A = sum_i |x_i^G ∩ H|`` and ``B = min_i |x_i^G|`` this is at most
``B * (A/B)**c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .base import DEFAULT_BUDGET, q_exact
from .cosets import fpr_via_class
from .perm import Permutation, PermutationGroup, SubgroupHandle, class_partition, is_prime


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    element_order: int
    members: frozenset = field(repr=False, compare=False)


@dataclass(frozen=True)
class PrimeOrderProfile:
    classes: tuple[ConjugacyClass, ...]
    hall_hits: tuple[int, ...]

    @property
    def hall_mass(self) -> int:
        """``A``: total number of prime-order elements of ``H``."""
        return sum(self.hall_hits)

    @property
    def min_class_size(self) -> int:
        """``B``: the smallest prime-order class (1 when there are none)."""
        return min((c.size for c in self.classes), default=1)


def conjugacy_classes(G: PermutationGroup) -> list[ConjugacyClass]:
    """Classes sorted by element order, then by least representative."""
    classes, _ = class_partition(G)
    out = []
    for members in classes:
        rep = min(members)
        out.append(ConjugacyClass(rep, len(members), rep.order(), members))
    out.sort(key=lambda c: (c.element_order, c.representative))
    return out


def prime_order_profile(G: PermutationGroup, H: SubgroupHandle) -> PrimeOrderProfile:
    classes = tuple(c for c in conjugacy_classes(G) if is_prime(c.element_order))
    hits = tuple(len(c.members & H.elements) for c in classes)
    return PrimeOrderProfile(classes, hits)


def q_hat(G: PermutationGroup, H: SubgroupHandle, c: int) -> Fraction:
    if c < 1:
        raise ValueError("c must be positive")
    total = Fraction(0)
    for cls in prime_order_profile(G, H).classes:
        total += cls.size * fpr_via_class(G, H, cls.representative) ** c
    return total


def class_mass_bound(A: int, B: int, c: int) -> Fraction:
    """``B * (A/B)**c`` as an exact rational."""
    if A < 0 or B < 1 or c < 1:
        raise ValueError("need A >= 0, B >= 1, c >= 1")
    return B * Fraction(A, B) ** c


def conclude_base_bound(G: PermutationGroup, H: SubgroupHandle, c: int) -> int | None:
    """``c`` when ``q_hat(G, H, c) < 1`` (so the base is at most ``c``), else ``None``."""
    return c if q_hat(G, H, c) < 1 else None


def probability_report(G: PermutationGroup, H: SubgroupHandle, max_c: int = 5,
                       budget: int = DEFAULT_BUDGET, include_exact: bool = False) -> dict:
    profile = prime_order_profile(G, H)
    A, B = profile.hall_mass, profile.min_class_size
    cs = range(1, max_c + 1)
    q_hats = {c: q_hat(G, H, c) for c in cs}
    report = {
        "classes": [
            {
                "rep": str(cls.representative),
                "order": cls.element_order,
                "size": cls.size,
                "hall_hits": hits,
                "fpr": str(Fraction(hits, cls.size)),
            }
            for cls, hits in zip(profile.classes, profile.hall_hits)
        ],
        "hall_mass": A,
        "min_class_size": B,
        "q_hat_by_c": {str(c): str(v) for c, v in q_hats.items()},
        "class_mass_bound_by_c": {str(c): str(class_mass_bound(A, B, c)) for c in cs},
        "concluded_c": next((c for c in cs if q_hats[c] < 1), None),
    }
    if include_exact:
        report["q_exact_by_c"] = {str(c): str(q_exact(G, H, c, budget)) for c in cs}
    return report
