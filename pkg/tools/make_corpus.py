"""Regenerate the bundled corpus under src/hallbase/corpus/.

SL(n, p) is built from elementary transvections acting on projective points
(or on nonzero vectors when p = 2); subspace stabilizers are set stabilizers
of the corresponding point sets.  Every file is written with its order in a
comment and the orders are asserted here and in the test suite.

    python tools/make_corpus.py
"""

from __future__ import annotations

import itertools
from pathlib import Path

from hallbase.groupfile import format_group_text
from hallbase.perm import (
    Permutation,
    SubgroupHandle,
    generate_elements,
    generating_set,
    sylow_subgroup,
)

OUT = Path(__file__).resolve().parent.parent / "src" / "hallbase" / "corpus"


def projective_points(n, p):
    pts = []
    for v in itertools.product(range(p), repeat=n):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def normalize(v, p):
    for x in v:
        if x:
            inv = pow(x, -1, p)
            return tuple((y * inv) % p for y in v)
    raise ValueError("zero vector")


def matrix_perm(M, pts, p):
    """Row vectors times M, as a permutation of ``pts``."""
    n = len(M)
    index = {v: i for i, v in enumerate(pts)}
    imgs = []
    for v in pts:
        w = tuple(sum(v[k] * M[k][j] for k in range(n)) % p for j in range(n))
        imgs.append(index[normalize(w, p)])
    return Permutation(imgs)


def transvections(n, p):
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                M = [[int(a == b) for b in range(n)] for a in range(n)]
                M[i][j] = 1
                out.append(M)
    return out


def span(vectors, p, n):
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(vectors)):
        w = tuple(sum(c * v[k] for c, v in zip(coeffs, vectors)) % p for k in range(n))
        if any(w):
            out.add(normalize(w, p))
    return out


def set_stabilizer(G, points):
    pts = frozenset(points)
    els = frozenset(g for g in G.elements if frozenset(g[i] for i in pts) == pts)
    return SubgroupHandle(G, els)


def write(name, degree, gens, comment):
    (OUT / name).write_text(format_group_text(degree, gens, comment), encoding="utf-8")


def sl(n, p):
    pts = projective_points(n, p)
    gens = [matrix_perm(M, pts, p) for M in transvections(n, p)]
    G = generate_elements(len(pts), gens)
    small = generating_set(G.elements, G.degree)
    return generate_elements(len(pts), small), pts


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    P = Permutation.parse

    write("sym3.grp", 3, [P("(1 2)", 3), P("(1 2 3)", 3)], "Sym_3, order 6")
    write("sym3_s2.grp", 3, [P("(1 2)", 3)], "<(1 2)> in Sym_3, order 2")
    write("sym3_a3.grp", 3, [P("(1 2 3)", 3)], "<(1 2 3)> in Sym_3, order 3")
    write("sym4.grp", 4, [P("(1 2)", 4), P("(1 2 3 4)", 4)], "Sym_4, order 24")
    write("sym4_d8.grp", 4, [P("(1 2 3 4)", 4), P("(1 3)", 4)], "Sylow 2-subgroup of Sym_4 (Dih_8), order 8")
    write("sym4_c3.grp", 4, [P("(1 2 3)", 4)], "Sylow 3-subgroup of Sym_4, order 3")
    write("dih8.grp", 4, [P("(1 2 3 4)", 4), P("(1 3)", 4)], "Dih_8 on the square's corners, order 8")
    write("dih8_refl.grp", 4, [P("(1 3)", 4)], "a diagonal reflection in Dih_8, order 2 (not normal)")

    # SL(3,2) in its degree-7 representation
    G = generate_elements(7, [P("(1 2 3 4 5 6 7)", 7), P("(2 3)(4 7)", 7)])
    assert G.order == 168
    write("sl32.grp", 7, G.generators, "SL(3,2) acting on the 7 points of the Fano plane, order 168")
    pt = SubgroupHandle(G, frozenset(g for g in G.elements if g[0] == 0))
    assert pt.order == 24
    write("sl32_point.grp", 7, pt.generators, "stabilizer of the point 1 (a 1-space), order 24")
    line = None
    for triple in itertools.combinations(range(7), 3):
        S = set_stabilizer(G, triple)
        if S.order == 24:
            line = (triple, S)
            break
    triple, S = line
    write("sl32_line.grp", 7, S.generators,
          f"stabilizer of the line {{{', '.join(str(t + 1) for t in triple)}}} (a 2-space), order 24")

    # SL(3,3) on the 13 projective points of PG(2,3)
    G, pts = sl(3, 3)
    assert G.order == 5616
    write("sl33.grp", 13, G.generators, "SL(3,3) acting on the 13 points of PG(2,3), order 5616")
    e1, e2 = (1, 0, 0), (0, 1, 0)
    index = {v: i for i, v in enumerate(pts)}
    pstab = SubgroupHandle(G, frozenset(g for g in G.elements if g[index[e1]] == index[e1]))
    assert pstab.order == 432
    write("sl33_point.grp", 13, pstab.generators, "stabilizer of the 1-space <e1>, order 432")
    line_pts = [index[v] for v in span([e1, e2], 3, 3)]
    lstab = set_stabilizer(G, line_pts)
    assert lstab.order == 432
    write("sl33_line.grp", 13, lstab.generators, "stabilizer of the 2-space <e1, e2>, order 432")
    borel = SubgroupHandle(G, pstab.elements & lstab.elements)
    assert borel.order == 108
    write("sl33_borel.grp", 13, borel.generators, "Borel subgroup: stabilizer of the flag <e1> < <e1, e2>, order 108")
    U = sylow_subgroup(borel.as_group(), 3)
    assert U.order == 27
    write("sl33_unipotent.grp", 13, generating_set(U.elements, 13),
          "unipotent radical of the Borel subgroup (Sylow 3-subgroup), order 27")

    # SL(4,2) on the 15 nonzero vectors of F_2^4
    G, pts = sl(4, 2)
    assert G.order == 20160
    write("sl42.grp", 15, G.generators, "SL(4,2) acting on the 15 nonzero vectors of F_2^4, order 20160")
    index = {v: i for i, v in enumerate(pts)}
    plane = [index[v] for v in span([(1, 0, 0, 0), (0, 1, 0, 0)], 2, 4)]
    S = set_stabilizer(G, plane)
    assert S.order == 576
    write("sl42_plane.grp", 15, S.generators, "stabilizer of the 2-space <e1, e2>, order 576")


if __name__ == "__main__":
    main()
