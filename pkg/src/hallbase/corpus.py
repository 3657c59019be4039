"""Corpus manifests: named (group, subgroup, pi) triples backed by group files."""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ParseError
from .groupfile import load_group, load_subgroup
from .perm import DEFAULT_CAP, PermutationGroup, PrimeSet, SubgroupHandle

MANIFEST = "manifest.txt"


def bundled_corpus_dir() -> Path:
    return Path(str(resources.files("hallbase") / "corpus"))


@dataclass(frozen=True)
class CaseSpec:
    name: str
    group_file: Path
    subgroup_file: Path
    pi: PrimeSet | None


@dataclass(frozen=True, eq=False)
class Case:
    name: str
    group: PermutationGroup
    subgroup: SubgroupHandle
    pi: PrimeSet | None
    group_name: str = ""


def parse_manifest(path) -> list[CaseSpec]:
    path = Path(path)
    root = path.parent
    specs = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] != "case" or len(tokens) < 2:
            raise ParseError(f"{path}:{lineno}: expected 'case <name> key=value ...'")
        fields = {}
        for tok in tokens[2:]:
            key, sep, value = tok.partition("=")
            if not sep or key not in ("group", "subgroup", "pi"):
                raise ParseError(f"{path}:{lineno}: bad field {tok!r}")
            fields[key] = value
        if "group" not in fields or "subgroup" not in fields:
            raise ParseError(f"{path}:{lineno}: case needs group= and subgroup=")
        pi = None
        if fields.get("pi"):
            try:
                pi = PrimeSet.parse(fields["pi"])
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
        specs.append(CaseSpec(tokens[1], root / fields["group"], root / fields["subgroup"], pi))
    return specs


def load_corpus(directory=None, cap: int = DEFAULT_CAP, names=None) -> list[Case]:
    """Load every case of a corpus directory, sharing one group object per file."""
    directory = Path(directory) if directory is not None else bundled_corpus_dir()
    manifest = directory / MANIFEST
    if not manifest.exists():
        raise ParseError(f"{directory}: no {MANIFEST}")
    groups: dict[Path, PermutationGroup] = {}
    cases = []
    for entry in parse_manifest(manifest):
        if names is not None and entry.name not in names:
            continue
        key = entry.group_file.resolve()
        if key not in groups:
            groups[key] = load_group(entry.group_file, cap)
        G = groups[key]
        cases.append(Case(entry.name, G, load_subgroup(entry.subgroup_file, G), entry.pi, entry.group_file.stem))
    return cases


_cache: dict = {}


def bundled_cases() -> dict[str, Case]:
    """The bundled corpus, loaded once per process."""
    if "cases" not in _cache:
        _cache["cases"] = {c.name: c for c in load_corpus()}
    return _cache["cases"]


def natural_order(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]
