"""Exact base sizes, regular-orbit counts and non-regularity probabilities.

``base_size`` searches breadth-first over the distinct subgroups of the form
``H ∩ H^x2 ∩ ... ∩ H^xk``.  The tuple counter used by ``regular_orbit_count``
and ``q_exact`` works in the coset action instead and never looks at those
intersections, which makes it a usable independent check on certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cosets import CosetSpace, coset_space
from .errors import WorkBudgetExceeded
from .perm import Permutation, PermutationGroup, SubgroupHandle, core, right_transversal

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class BaseCertificate:
    """``H ∩ H^w1 ∩ ... ∩ H^w(k-1)`` equals the core, and no shorter product does.

    ``min_order_below`` is the least order of an intersection of ``base - 1``
    conjugates (``|G|`` when ``base == 1``); it exceeds the core order.
    """

    base: int
    witnesses: tuple[Permutation, ...]
    min_order_below: int

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "witnesses": [str(w) for w in self.witnesses],
            "min_order_below": self.min_order_below,
        }


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, n: int) -> None:
        self.used += n
        if self.used > self.limit:
            raise WorkBudgetExceeded(f"work budget of {self.limit} steps exhausted")


def _conjugate_elements(H: SubgroupHandle, g: Permutation) -> frozenset:
    gi = g.inverse()
    return frozenset(gi * h * g for h in H.elements)


def base_size(G: PermutationGroup, H: SubgroupHandle, budget: int = DEFAULT_BUDGET) -> BaseCertificate:
    """Minimal number of conjugates of ``H`` intersecting to the core of ``H``."""
    kernel = core(G, H).elements
    if H.elements == kernel:
        return BaseCertificate(1, (), G.order)
    work = _Budget(budget)

    conjugates = []
    distinct = set()
    for r in right_transversal(G, H):
        E = _conjugate_elements(H, r)
        if E not in distinct:
            distinct.add(E)
            conjugates.append((r, E))

    seen = {H.elements}
    frontier = [(H.elements, ())]
    level = 1
    while frontier:
        level += 1
        smallest = min(len(S) for S in seen)
        fresh = []
        for S, wit in frontier:
            for r, E in conjugates:
                work.spend(len(S))
                T = S & E
                if T in seen:
                    continue
                seen.add(T)
                if T == kernel:
                    return BaseCertificate(level, wit + (r,), smallest)
                fresh.append((T, wit + (r,)))
        # smaller intersections first, ties broken by sorted element list
        fresh.sort(key=lambda item: (len(item[0]), sorted(item[0])))
        frontier = fresh
    raise AssertionError("intersection over all conjugates must reach the core")


@lru_cache(maxsize=256)
def _tuple_search(space: CosetSpace, m: int, budget: int) -> tuple[int, int]:
    """Count regular ``m``-tuples and find the least pointwise stabilizer.

    Depth-first over tuple prefixes carrying the prefix stabilizer.  Points in
    one orbit of the current stabilizer give conjugate subtrees, so only one
    point per orbit is expanded; once the stabilizer is trivial every
    extension is regular and is counted in bulk.  Orders refer to ``G/H_G``.
    """
    n = space.size
    work = _Budget(budget)

    def visit(stab: list, depth: int) -> tuple[int, int]:
        if len(stab) == 1:
            return n ** (m - depth), 1
        if depth == m:
            return 0, len(stab)
        count, smallest = 0, len(stab)
        seen = [False] * n
        for w in range(n):
            if seen[w]:
                continue
            work.spend(2 * len(stab))
            orbit = {s[w] for s in stab}
            for o in orbit:
                seen[o] = True
            sub = [s for s in stab if s[w] == w]
            c, low = visit(sub, depth + 1)
            count += c * len(orbit)
            smallest = min(smallest, low)
        return count, smallest

    # the action is transitive, so depth 0 has one orbit and the stabilizer of
    # point 0 is the image of H; this avoids enumerating all of G/H_G
    whole = space.quotient_order
    if m == 0:
        return (1 if whole == 1 else 0), whole
    point_stab = list({space.action(h) for h in space.stabilizer.elements})
    count, smallest = visit(point_stab, 1)
    return count * n, min(whole, smallest)


def regular_tuple_count(G: PermutationGroup, H: SubgroupHandle, m: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of points of ``Ω^m`` with trivial stabilizer in ``G/H_G``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _tuple_search(coset_space(G, H), m, budget)[0]


def regular_orbit_count(G: PermutationGroup, H: SubgroupHandle, m: int, budget: int = DEFAULT_BUDGET) -> int:
    """``Reg_H(G, m)``: regular orbits of ``G/H_G`` on ``Ω^m``."""
    if m < 1:
        raise ValueError("m must be positive")
    space = coset_space(G, H)
    count = _tuple_search(space, m, budget)[0]
    quotient = space.quotient_order
    assert count % quotient == 0
    return count // quotient


def q_exact(G: PermutationGroup, H: SubgroupHandle, c: int, budget: int = DEFAULT_BUDGET) -> Fraction:
    """Probability that a uniform ``c``-tuple of cosets is not a regular point."""
    if c < 1:
        raise ValueError("c must be positive")
    space = coset_space(G, H)
    count = _tuple_search(space, c, budget)[0]
    return 1 - Fraction(count, space.size**c)


def min_intersection_order(G: PermutationGroup, H: SubgroupHandle, j: int, budget: int = DEFAULT_BUDGET) -> int:
    """Least order of an intersection of ``j`` conjugates of ``H`` (``|G|`` for ``j = 0``)."""
    space = coset_space(G, H)
    return _tuple_search(space, j, budget)[1] * space.kernel.order


def verify_certificate(G: PermutationGroup, H: SubgroupHandle, cert: BaseCertificate,
                       budget: int = DEFAULT_BUDGET) -> bool:
    """Re-check a certificate without reusing the breadth-first search."""
    if cert.base < 1 or len(cert.witnesses) != cert.base - 1:
        return False
    if any(w not in G.elements for w in cert.witnesses):
        return False
    kernel = core(G, H).elements
    inter = H.elements
    for w in cert.witnesses:
        inter = inter & _conjugate_elements(H, w)
    if inter != kernel:
        return False
    below = min_intersection_order(G, H, cert.base - 1, budget)
    if cert.min_order_below != below:
        return False
    return cert.base == 1 or below > len(kernel)
