"""Permutations and fully enumerated permutation groups.

Permutations act on the right: ``p * q`` applies ``p`` first, then ``q``, and
``x.conjugate(g)`` is ``g**-1 * x * g``.  Points are stored 0-based; cycle
notation and :attr:`Permutation.images` are 1-based.

Every group here is small enough to enumerate, so subgroups are plain element
sets and all the usual constructions (cores, normalizers, Sylow and Fitting
subgroups) are computed by direct scans rather than stabilizer chains.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Union

from .errors import (
    AmbientMismatch,
    BadPermutation,
    CapExceeded,
    ElementNotInAmbient,
    NotHall,
)

DEFAULT_CAP = 2**21

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation(tuple):
    """A permutation of ``{0, ..., n-1}`` stored as its tuple of images."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        return tuple.__new__(cls, images)

    @classmethod
    def from_images(cls, images: Iterable[int], *, one_based: bool = True) -> "Permutation":
        """Validated constructor from an image list (1-based by default)."""
        shift = 1 if one_based else 0
        imgs = [int(i) - shift for i in images]
        if sorted(imgs) != list(range(len(imgs))):
            raise BadPermutation(f"images {list(images)!r} are not a bijection")
        return cls(imgs)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Build from disjoint 1-based cycles; fixed points may be omitted."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            pts = [int(c) - 1 for c in cycle]
            for a in pts:
                if not 0 <= a < degree:
                    raise BadPermutation(f"point {a + 1} outside 1..{degree}")
                if a in seen:
                    raise BadPermutation(f"point {a + 1} repeated in cycles")
                seen.add(a)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation such as ``(1 2)(3 4 5)`` or ``()``."""
        stripped = text.strip()
        if _CYCLE_RE.sub("", stripped).strip():
            raise BadPermutation(f"cannot parse {text!r} as cycles")
        cycles = []
        for body in _CYCLE_RE.findall(stripped):
            tokens = body.replace(",", " ").split()
            if not all(t.isdigit() for t in tokens):
                raise BadPermutation(f"cannot parse {text!r} as cycles")
            if tokens:
                cycles.append([int(t) for t in tokens])
        return cls.from_cycles(degree, cycles)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return tuple.__new__(Permutation, map(other.__getitem__, self))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return tuple.__new__(Permutation, inv)

    __invert__ = inverse

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(len(self))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """``g**-1 * self * g``."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i] or self[i] == i:
                continue
            cycle = [i]
            seen[i] = True
            j = self[i]
            while j != i:
                seen[j] = True
                cycle.append(j)
                j = self[j]
            out.append(tuple(c + 1 for c in cycle))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {len(self)})"


def _closure(identity: Permutation, gens: Iterable[Permutation], cap: int = DEFAULT_CAP) -> frozenset:
    gens = [g for g in gens if g != identity]
    elements = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    fresh.append(y)
            if len(elements) > cap:
                raise CapExceeded(f"group closure exceeded cap of {cap} elements")
        frontier = fresh
    return frozenset(elements)


def generating_set(elements: frozenset, degree: int) -> tuple[Permutation, ...]:
    """A small generating set for a subgroup given by its elements."""
    identity = Permutation.identity(degree)
    gens: list[Permutation] = []
    current = frozenset([identity])
    # high-order elements first keeps the list short
    for e in sorted(elements, key=lambda x: (-x.order(), x)):
        if len(current) == len(elements):
            break
        if e not in current:
            gens.append(e)
            current = _closure(identity, gens)
    return tuple(gens)


@dataclass(frozen=True, eq=False, repr=False)
class PermutationGroup:
    """A permutation group together with its full element set."""

    degree: int
    generators: tuple[Permutation, ...]
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @cached_property
    def sorted_elements(self) -> tuple[Permutation, ...]:
        return tuple(sorted(self.elements))

    def __contains__(self, g) -> bool:
        return g in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.sorted_elements)

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.generators)) or "()"
        return f"<PermutationGroup degree={self.degree} order={self.order} gens=[{gens}]>"


def generate_elements(degree: int, generators: Iterable, cap: int = DEFAULT_CAP) -> PermutationGroup:
    """Enumerate the group generated by ``generators`` on ``degree`` points."""
    if degree < 1:
        raise BadPermutation("degree must be positive")
    gens = []
    for g in generators:
        if not isinstance(g, Permutation):
            g = Permutation.from_images(g, one_based=False)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise BadPermutation(f"{g!r} is not a permutation of degree {degree}")
        gens.append(g)
    identity = Permutation.identity(degree)
    return PermutationGroup(degree, tuple(gens), _closure(identity, gens, cap))


@dataclass(frozen=True, eq=False, repr=False)
class SubgroupHandle:
    """A subgroup of ``ambient`` held as its element set."""

    ambient: PermutationGroup
    elements: frozenset
    _gens: tuple | None = field(default=None)

    @cached_property
    def generators(self) -> tuple[Permutation, ...]:
        if self._gens is not None:
            return tuple(g for g in self._gens if not g.is_identity())
        return generating_set(self.elements, self.ambient.degree)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.ambient.degree

    @cached_property
    def key(self) -> tuple:
        """Canonical identity: order, then the sorted element list."""
        return (len(self.elements), tuple(sorted(self.elements)))

    def as_group(self) -> PermutationGroup:
        return PermutationGroup(self.ambient.degree, self.generators, self.elements)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __contains__(self, g) -> bool:
        return g in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgroupHandle):
            return NotImplemented
        return self.ambient is other.ambient and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((id(self.ambient), self.elements))

    def __repr__(self) -> str:
        return f"<SubgroupHandle order={self.order} of group order={self.ambient.order}>"


GroupLike = Union[PermutationGroup, SubgroupHandle]


def _as_group(K: GroupLike) -> PermutationGroup:
    return K.as_group() if isinstance(K, SubgroupHandle) else K


def whole_group(G: PermutationGroup) -> SubgroupHandle:
    return SubgroupHandle(G, G.elements, G.generators)


def trivial_subgroup(G: PermutationGroup) -> SubgroupHandle:
    return SubgroupHandle(G, frozenset([G.identity]), ())


def subgroup(G: PermutationGroup, generators: Iterable[Permutation]) -> SubgroupHandle:
    """The subgroup of ``G`` generated by ``generators``."""
    gens = tuple(generators)
    for g in gens:
        if g not in G.elements:
            raise ElementNotInAmbient(f"{g} is not an element of the ambient group")
    return SubgroupHandle(G, _closure(G.identity, gens), gens)


def subgroup_intersection(A: SubgroupHandle, B: SubgroupHandle) -> SubgroupHandle:
    if A.ambient is not B.ambient:
        raise AmbientMismatch("subgroups live in different ambient groups")
    return SubgroupHandle(A.ambient, A.elements & B.elements)


def conjugate_subgroup(H: SubgroupHandle, g: Permutation) -> SubgroupHandle:
    """``H^g = {g**-1 h g : h in H}``."""
    if g not in H.ambient.elements:
        raise ElementNotInAmbient(f"{g} is not an element of the ambient group")
    gi = g.inverse()
    elements = frozenset(gi * h * g for h in H.elements)
    gens = tuple(gi * h * g for h in H.generators)
    return SubgroupHandle(H.ambient, elements, gens)


def right_transversal(G: PermutationGroup, H: SubgroupHandle) -> list[Permutation]:
    """Lexicographically least representative of each right coset ``Hg``, sorted."""
    covered: set = set()
    reps = []
    for g in G.sorted_elements:
        if g in covered:
            continue
        # every smaller element is already covered, so g is least in Hg
        reps.append(g)
        covered.update(h * g for h in H.elements)
    return reps


def _check_ambient(G: PermutationGroup, H: SubgroupHandle) -> None:
    if H.ambient is not G and not H.elements <= G.elements:
        raise AmbientMismatch("subgroup is not contained in the given group")


def core(G: PermutationGroup, H: SubgroupHandle) -> SubgroupHandle:
    """The normal core ``H_G``, the largest normal subgroup of ``G`` inside ``H``.

    Shrinks ``C <- C ∩ C^g`` over the generators of ``G`` until stable; a fixed
    point is normal and every step still contains the core.
    """
    _check_ambient(G, H)
    current = H.elements
    inverses = [(g.inverse(), g) for g in G.generators]
    while True:
        nxt = current
        for gi, g in inverses:
            nxt = nxt & frozenset(gi * h * g for h in nxt)
        if nxt == current:
            return SubgroupHandle(G, current)
        current = nxt


def core_by_transversal(G: PermutationGroup, H: SubgroupHandle) -> SubgroupHandle:
    """Reference core: intersect ``H^g`` over a right transversal of ``H``."""
    result = H.elements
    for g in right_transversal(G, H):
        gi = g.inverse()
        result = result & frozenset(gi * h * g for h in H.elements)
    return SubgroupHandle(G, result)


def normalizes(g: Permutation, K: GroupLike) -> bool:
    gi = g.inverse()
    return all(gi * x * g in K.elements for x in K.generators)


def normalizer(G: PermutationGroup, K: GroupLike) -> SubgroupHandle:
    return SubgroupHandle(G, frozenset(g for g in G.elements if normalizes(g, K)))


def is_normal(G: GroupLike, K: GroupLike) -> bool:
    return all(normalizes(g, K) for g in _as_group(G).generators)


def normal_closure(G: GroupLike, gens: Iterable[Permutation]) -> frozenset:
    """Element set of the smallest normal subgroup of ``G`` containing ``gens``."""
    G = _as_group(G)
    gens = [g for g in gens if not g.is_identity()]
    elements = _closure(G.identity, gens)
    changed = True
    while changed:
        changed = False
        for x in list(gens):
            for g in G.generators:
                y = x.conjugate(g)
                if y not in elements:
                    gens.append(y)
                    elements = _closure(G.identity, gens)
                    changed = True
    return elements


def derived_subgroup(K: GroupLike) -> PermutationGroup:
    K = _as_group(K)
    gens = K.generators
    comms = [a.inverse() * b.inverse() * a * b for a in gens for b in gens]
    elements = normal_closure(K, comms)
    return PermutationGroup(K.degree, generating_set(elements, K.degree), elements)


def is_abelian(K: GroupLike) -> bool:
    gens = K.generators
    return all(a * b == b * a for a in gens for b in gens)


def is_solvable(H: GroupLike) -> bool:
    """True iff the derived series reaches the trivial group."""
    K = _as_group(H)
    while K.order > 1:
        D = derived_subgroup(K)
        if D.order == K.order:
            return False
        K = D
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes (the ``pi`` of a pi-Hall subgroup)."""

    primes: tuple[int, ...]

    def __post_init__(self):
        ps = tuple(sorted(set(int(p) for p in self.primes)))
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    @classmethod
    def parse(cls, text: str) -> "PrimeSet":
        parts = [t for t in re.split(r"[,\s]+", text.strip()) if t]
        try:
            return cls(tuple(int(t) for t in parts))
        except ValueError as exc:
            raise ValueError(f"bad prime set {text!r}: {exc}") from None

    def __contains__(self, p) -> bool:
        return p in self.primes

    def __iter__(self):
        return iter(self.primes)

    def __str__(self) -> str:
        return ",".join(map(str, self.primes))


def is_hall(G: GroupLike, H: GroupLike, pi: PrimeSet) -> bool:
    """True iff ``|H|`` is a pi-number and ``|G:H|`` is a pi'-number."""
    order, sub = len(G.elements), len(H.elements)
    if order % sub:
        return False
    if any(p not in pi for p in prime_factors(sub)):
        return False
    return not any(p in pi for p in prime_factors(order // sub))


def _is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


def sylow_subgroup(G: PermutationGroup, p: int) -> SubgroupHandle:
    """A Sylow ``p``-subgroup, grown from a cyclic p-subgroup of maximal order.

    While ``P`` is not Sylow, ``p`` divides ``|N(P):P|``, so some ``g`` in
    ``N(P) - P`` has ``g**p`` in ``P``; adjoining it multiplies ``|P|`` by ``p``.
    """
    target = p_part(G.order, p)
    if target == 1:
        return trivial_subgroup(G)
    best, best_order = G.identity, 1
    for g in G.sorted_elements:
        o = g.order()
        if o > best_order and _is_p_power(o, p):
            best, best_order = g, o
    P = subgroup(G, [best])
    while P.order < target:
        for g in G.sorted_elements:
            if g in P.elements or (g ** p) not in P.elements:
                continue
            if normalizes(g, P):
                P = subgroup(G, P.generators + (g,))
                break
        else:  # pragma: no cover - would contradict Sylow's theorem
            raise RuntimeError("Sylow extension failed")
    return P


def o_p(G: PermutationGroup, p: int) -> SubgroupHandle:
    """The p-radical: the core of a Sylow p-subgroup."""
    return core(G, sylow_subgroup(G, p))


def fitting_subgroup(G: PermutationGroup) -> SubgroupHandle:
    gens: list[Permutation] = []
    for p in prime_factors(G.order):
        gens.extend(o_p(G, p).generators)
    return subgroup(G, gens)


def is_nilpotent(K: GroupLike) -> bool:
    """A finite group is nilpotent iff each of its Sylow subgroups is normal."""
    K = _as_group(K)
    return all(is_normal(K, sylow_subgroup(K, p)) for p in prime_factors(K.order))


def o_pi(G: PermutationGroup, H: SubgroupHandle, pi: PrimeSet) -> SubgroupHandle:
    """``O_pi(G)``, computed as the core of the pi-Hall subgroup ``H``."""
    if not is_hall(G, H, pi):
        raise NotHall(f"subgroup of order {H.order} is not a {{{pi}}}-Hall subgroup")
    return core(G, H)


def conjugacy_class(G: PermutationGroup, x: Permutation) -> frozenset:
    """The orbit of ``x`` under conjugation by the generators of ``G``."""
    if x not in G.elements:
        raise ElementNotInAmbient(f"{x} is not an element of the group")
    pairs = [(g.inverse(), g) for g in G.generators]
    seen = {x}
    frontier = [x]
    while frontier:
        fresh = []
        for y in frontier:
            for gi, g in pairs:
                z = gi * y * g
                if z not in seen:
                    seen.add(z)
                    fresh.append(z)
        frontier = fresh
    return frozenset(seen)


@lru_cache(maxsize=64)
def class_partition(G: PermutationGroup) -> tuple[tuple[frozenset, ...], dict]:
    """All conjugacy classes ordered by representative, plus element -> index."""
    index: dict = {}
    classes = []
    for g in G.sorted_elements:
        if g in index:
            continue
        cls = conjugacy_class(G, g)
        for y in cls:
            index[y] = len(classes)
        classes.append(cls)
    return tuple(classes), index
