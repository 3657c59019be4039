"""The action of a group on the right cosets of a subgroup.

Points are numbered by sorting the cosets on their lexicographically least
element, so point 0 is always ``H`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import ElementNotInAmbient
from .perm import (
    Permutation,
    PermutationGroup,
    SubgroupHandle,
    class_partition,
    core,
    generate_elements,
    right_transversal,
    _check_ambient,
)


@dataclass(frozen=True, eq=False, repr=False)
class CosetSpace:
    ambient: PermutationGroup
    stabilizer: SubgroupHandle
    kernel: SubgroupHandle
    representatives: tuple[Permutation, ...]
    coset_index: dict

    @property
    def size(self) -> int:
        return len(self.representatives)

    @property
    def points(self) -> range:
        return range(len(self.representatives))

    def action(self, g: Permutation) -> Permutation:
        """The permutation of coset indices induced by ``g``: ``Hx -> Hxg``."""
        if g not in self.ambient.elements:
            raise ElementNotInAmbient(f"{g} is not an element of the ambient group")
        index = self.coset_index
        return Permutation(index[r * g] for r in self.representatives)

    @property
    def quotient_order(self) -> int:
        """``|G / H_G|``."""
        return self.ambient.order // self.kernel.order

    @cached_property
    def image(self) -> PermutationGroup:
        """``G / H_G`` as a permutation group on the coset indices."""
        gens = [self.action(g) for g in self.ambient.generators]
        return generate_elements(self.size, gens, cap=max(self.ambient.order, 1))

    def __repr__(self) -> str:
        return (
            f"<CosetSpace points={self.size} group order={self.ambient.order} "
            f"kernel order={self.kernel.order}>"
        )


def build_coset_space(G: PermutationGroup, H: SubgroupHandle) -> CosetSpace:
    _check_ambient(G, H)
    reps = right_transversal(G, H)
    index = {}
    for i, r in enumerate(reps):
        for h in H.elements:
            index[h * r] = i
    return CosetSpace(G, H, core(G, H), tuple(reps), index)


@lru_cache(maxsize=32)
def coset_space(G: PermutationGroup, H: SubgroupHandle) -> CosetSpace:
    """Memoized :func:`build_coset_space`."""
    return build_coset_space(G, H)


def fix_count(space: CosetSpace, x: Permutation) -> int:
    """Number of cosets ``Hr`` with ``Hrx = Hr``."""
    if x not in space.ambient.elements:
        raise ElementNotInAmbient(f"{x} is not an element of the ambient group")
    index = space.coset_index
    return sum(1 for i, r in enumerate(space.representatives) if index[r * x] == i)


def fpr(space: CosetSpace, x: Permutation) -> Fraction:
    return Fraction(fix_count(space, x), space.size)


def fpr_via_class(G: PermutationGroup, H: SubgroupHandle, x: Permutation) -> Fraction:
    """``|x^G ∩ H| / |x^G|``, read off the conjugacy class of ``x``."""
    if x not in G.elements:
        raise ElementNotInAmbient(f"{x} is not an element of the group")
    classes, index = class_partition(G)
    cls = classes[index[x]]
    return Fraction(len(cls & H.elements), len(cls))
