"""Line-based text format for groups and subgroups.

::

    # comment
    degree 7
    gen (1 2 3 4 5 6 7)
    gen (2 3)(4 7)

A subgroup file has the same layout and must declare the ambient degree.
"""

from __future__ import annotations

from pathlib import Path

from .errors import BadPermutation, NotSubgroup, ParseError
from .perm import (
    DEFAULT_CAP,
    Permutation,
    PermutationGroup,
    SubgroupHandle,
    generate_elements,
    subgroup,
)


def parse_group_text(text: str, source: str = "<string>") -> tuple[int, list[Permutation]]:
    degree = None
    raw_gens: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "degree":
            if degree is not None:
                raise ParseError(f"{source}:{lineno}: duplicate degree line")
            if not rest.isdigit() or int(rest) < 1:
                raise ParseError(f"{source}:{lineno}: bad degree {rest!r}")
            degree = int(rest)
        elif keyword == "gen":
            raw_gens.append((lineno, rest))
        else:
            raise ParseError(f"{source}:{lineno}: unknown directive {keyword!r}")
    if degree is None:
        raise ParseError(f"{source}: missing degree line")
    gens = []
    for lineno, body in raw_gens:
        try:
            gens.append(Permutation.parse(body, degree))
        except BadPermutation as exc:
            raise ParseError(f"{source}:{lineno}: {exc}") from None
    return degree, gens


def format_group_text(degree: int, generators, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" if c else "#" for c in comment.splitlines())
    lines.append(f"degree {degree}")
    lines.extend(f"gen {g}" for g in generators)
    return "\n".join(lines) + "\n"


def load_group(path, cap: int = DEFAULT_CAP) -> PermutationGroup:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    degree, gens = parse_group_text(text, str(path))
    return generate_elements(degree, gens, cap)


def load_subgroup(path, G: PermutationGroup) -> SubgroupHandle:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    degree, gens = parse_group_text(text, str(path))
    if degree != G.degree:
        raise ParseError(f"{path}: degree {degree} does not match group degree {G.degree}")
    for g in gens:
        if g not in G.elements:
            raise NotSubgroup(f"{path}: generator {g} is not in the group")
    return subgroup(G, gens)
