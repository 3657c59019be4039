import random
from fractions import Fraction

from hallbase.cosets import build_coset_space, coset_space, fix_count, fpr, fpr_via_class
from hallbase.perm import Permutation, conjugacy_class, whole_group


def P(text, n):
    return Permutation.parse(text, n)


def test_sym3_point_action(sym3, s3_point):
    space = build_coset_space(sym3, s3_point)
    assert space.size == 3
    assert space.image.order == 6
    assert space.representatives[0] in s3_point.elements


def test_line_stabilizer_has_seven_cosets(cases):
    case = cases["sl32_line"]
    assert coset_space(case.group, case.subgroup).size == 7


def test_whole_group_gives_one_point(sym3):
    space = build_coset_space(sym3, whole_group(sym3))
    assert space.size == 1
    assert space.kernel == whole_group(sym3)
    assert space.quotient_order == 1


def test_fix_count_and_fpr_examples(sym3, s3_point):
    space = coset_space(sym3, s3_point)
    e, t, c = sym3.identity, P("(1 2)", 3), P("(1 2 3)", 3)
    assert fix_count(space, e) == 3
    assert fix_count(space, c) == 0
    assert fix_count(space, t) == 1
    assert fpr(space, e) == 1
    assert fpr(space, t) == Fraction(1, 3)
    assert fpr(space, c) == 0
    assert fpr_via_class(sym3, s3_point, t) == Fraction(1, 3)
    assert fpr_via_class(sym3, s3_point, c) == 0


def test_action_is_homomorphism_faithful_and_transitive(cases):
    rng = random.Random(7)
    for case in cases.values():
        G, H = case.group, case.subgroup
        space = coset_space(G, H)
        els = G.sorted_elements
        for _ in range(10):
            g, h = rng.choice(els), rng.choice(els)
            assert space.action(g * h) == space.action(g) * space.action(h)
        for g in rng.sample(els, min(40, len(els))) + list(space.kernel.elements)[:5]:
            assert space.action(g).is_identity() == (g in space.kernel.elements)
        orbit, frontier = {0}, [0]
        gens = [space.action(g) for g in G.generators]
        while frontier:
            frontier = [g[x] for x in frontier for g in gens if g[x] not in orbit]
            orbit.update(frontier)
        assert orbit == set(space.points)


def test_fpr_identity_on_every_element_of_small_groups(cases):
    for name in ("sym3_s2", "sym4_d8", "sym4_c3", "dih8_refl", "sl32_line"):
        G, H = cases[name].group, cases[name].subgroup
        space = coset_space(G, H)
        for x in G.elements:
            assert fpr(space, x) == fpr_via_class(G, H, x)


def test_fpr_independent_of_class_representative(cases):
    G, H = cases["sl32_point"].group, cases["sl32_point"].subgroup
    x = next(g for g in G.sorted_elements if g.order() == 2)
    values = {fpr_via_class(G, H, y) for y in conjugacy_class(G, x)}
    assert len(values) == 1


def test_class_disjoint_from_subgroup_has_zero_fpr(cases):
    G, H = cases["sl32_point"].group, cases["sl32_point"].subgroup
    seven = next(g for g in G.sorted_elements if g.order() == 7)
    assert not conjugacy_class(G, seven) & H.elements
    assert fpr_via_class(G, H, seven) == 0
