import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallbase.errors import AmbientMismatch, BadPermutation, CapExceeded, NotHall
from hallbase.perm import (
    Permutation,
    PrimeSet,
    SubgroupHandle,
    conjugate_subgroup,
    conjugacy_class,
    core,
    core_by_transversal,
    derived_subgroup,
    fitting_subgroup,
    generate_elements,
    generating_set,
    is_abelian,
    is_hall,
    is_nilpotent,
    is_normal,
    is_prime,
    is_solvable,
    normalizer,
    o_p,
    o_pi,
    p_part,
    prime_factors,
    right_transversal,
    subgroup,
    subgroup_intersection,
    sylow_subgroup,
    trivial_subgroup,
    whole_group,
)


def P(text, n):
    return Permutation.parse(text, n)


# --- permutations -----------------------------------------------------------

def test_parse_and_print_round_trip():
    g = P("(1 2 3)(4 5)", 6)
    assert g.images == (2, 3, 1, 5, 4, 6)
    assert str(g) == "(1 2 3)(4 5)"
    assert str(Permutation.identity(4)) == "()"
    assert P("()", 3).is_identity()


def test_product_applies_left_factor_first():
    a, b = P("(1 2)", 3), P("(2 3)", 3)
    # 1 -a-> 2 -b-> 3
    assert (a * b).images[0] == 3
    assert a * b == P("(1 3 2)", 3)


def test_inverse_power_order():
    g = P("(1 2 3 4)(5 6)", 6)
    assert g * g.inverse() == Permutation.identity(6)
    assert g ** 4 == Permutation.identity(6)
    assert g ** -1 == g.inverse()
    assert g.order() == 4


def test_conjugation_is_right_action():
    x, g = P("(1 2)", 3), P("(1 3)", 3)
    assert x.conjugate(g) == g.inverse() * x * g == P("(2 3)", 3)


@pytest.mark.parametrize("text", ["(1 1)", "(1 2)(2 3)", "(0 1)", "(1 9)", "(a b)", "1 2"])
def test_bad_cycle_text(text):
    with pytest.raises(BadPermutation):
        P(text, 3)


def test_from_images_validates():
    assert Permutation.from_images([2, 1, 3]) == P("(1 2)", 3)
    with pytest.raises(BadPermutation):
        Permutation.from_images([1, 1, 2])


perms6 = st.permutations(list(range(6))).map(Permutation)


@given(perms6, perms6, perms6)
def test_multiplication_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms6)
def test_parse_inverts_str(g):
    assert P(str(g), 6) == g


# --- enumeration ----------------------------------------------------------

def test_generate_sym3():
    assert generate_elements(3, [P("(1 2)", 3), P("(1 2 3)", 3)]).order == 6


def test_generate_degree7_representation():
    G = generate_elements(7, [P("(1 2 3 4 5 6 7)", 7), P("(2 3)(4 7)", 7)])
    assert G.order == 168


def test_generate_empty_generating_set():
    G = generate_elements(4, [])
    assert G.order == 1 and G.identity in G


def test_cap_is_enforced():
    with pytest.raises(CapExceeded):
        generate_elements(5, [P("(1 2)", 5), P("(1 2 3 4 5)", 5)], cap=100)


def test_generating_set_regenerates(sym4):
    gens = generating_set(sym4.elements, 4)
    assert generate_elements(4, gens).elements == sym4.elements


# --- subgroups --------------------------------------------------------------

def test_intersection_examples(sym3):
    A = subgroup(sym3, [P("(1 2)", 3)])
    B = subgroup(sym3, [P("(1 3)", 3)])
    assert subgroup_intersection(A, A) == A
    assert subgroup_intersection(A, B).is_trivial()
    H_x = conjugate_subgroup(A, P("(1 2 3)", 3))
    assert subgroup_intersection(A, H_x).is_trivial()


def test_intersection_rejects_other_ambient(sym3, sym4):
    with pytest.raises(AmbientMismatch):
        subgroup_intersection(whole_group(sym3), whole_group(sym4))


def test_conjugate_examples(sym3, cases):
    A = subgroup(sym3, [P("(1 2)", 3)])
    assert conjugate_subgroup(A, sym3.identity) == A
    assert conjugate_subgroup(A, P("(1 3)", 3)) == subgroup(sym3, [P("(2 3)", 3)])
    for case in cases.values():
        for g in case.group.generators:
            assert conjugate_subgroup(case.subgroup, g).order == case.subgroup.order


def test_core_examples(sym3, sym4):
    assert core(sym3, subgroup(sym3, [P("(1 2)", 3)])).is_trivial()
    assert core(sym3, whole_group(sym3)) == whole_group(sym3)
    d8 = sylow_subgroup(sym4, 2)
    v4 = {P(t, 4) for t in ["()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]}
    assert core(sym4, d8).elements == frozenset(v4)


def test_right_transversal_covers_group(sym4):
    H = sylow_subgroup(sym4, 3)
    reps = right_transversal(sym4, H)
    assert len(reps) == 8
    covered = {h * r for r in reps for h in H.elements}
    assert covered == sym4.elements


def test_normalizer_and_normality(sym4):
    v4 = fitting_subgroup(sym4)
    assert is_normal(sym4, v4)
    c3 = sylow_subgroup(sym4, 3)
    assert not is_normal(sym4, c3)
    assert normalizer(sym4, c3).order == 6


def subgroups_of(G):
    """Strategy: subgroups of ``G`` generated by up to two random elements."""
    els = G.sorted_elements
    return st.lists(st.sampled_from(els), max_size=2).map(lambda gens: subgroup(G, gens))


# hypothesis strategies need the group at import time
S5 = generate_elements(5, [P("(1 2)", 5), P("(1 2 3 4 5)", 5)])


@settings(max_examples=40, deadline=None)
@given(subgroups_of(S5), subgroups_of(S5), subgroups_of(S5))
def test_intersection_commutative_associative(A, B, C):
    assert subgroup_intersection(A, B) == subgroup_intersection(B, A)
    left = subgroup_intersection(subgroup_intersection(A, B), C)
    right = subgroup_intersection(A, subgroup_intersection(B, C))
    assert left == right


@settings(max_examples=40, deadline=None)
@given(subgroups_of(S5))
def test_core_is_normal_and_matches_transversal_oracle(H):
    K = core(S5, H)
    for g in S5.generators:
        assert conjugate_subgroup(K, g) == K
    assert K.elements <= H.elements
    assert K == core_by_transversal(S5, H)


def test_core_matches_oracle_on_corpus(cases):
    for case in cases.values():
        assert core(case.group, case.subgroup) == core_by_transversal(case.group, case.subgroup)


# --- solvability, Hall, Sylow -----------------------------------------------

def test_is_hall_examples(sym3, sl32, cases):
    assert is_hall(sym3, subgroup(sym3, [P("(1 2 3)", 3)]), PrimeSet.parse("3"))
    assert not is_hall(sym3, subgroup(sym3, [P("(1 2)", 3)]), PrimeSet.parse("2,3"))
    assert is_hall(sl32, cases["sl32_line"].subgroup, PrimeSet.parse("2,3"))


def test_is_solvable_examples(sym4, sl32, cases):
    assert is_solvable(sym4)
    assert not is_solvable(sl32)
    assert is_solvable(cases["sl32_line"].subgroup)


def test_derived_series_of_sym4(sym4):
    A4 = derived_subgroup(sym4)
    assert A4.order == 12
    assert derived_subgroup(A4).order == 4
    assert is_abelian(derived_subgroup(A4))


def test_sylow_examples(sym3, sym4, sl32):
    assert sylow_subgroup(sym3, 3) == subgroup(sym3, [P("(1 2 3)", 3)])
    assert sylow_subgroup(sym4, 2).order == 8
    assert sylow_subgroup(sl32, 7).order == 7


def test_sylow_orders_on_corpus(cases):
    seen = set()
    for case in cases.values():
        G = case.group
        if id(G) in seen:
            continue
        seen.add(id(G))
        for p in prime_factors(G.order):
            assert sylow_subgroup(G, p).order == p_part(G.order, p)


def test_fitting_examples(sym4, sl32, dih8):
    assert fitting_subgroup(sym4).order == 4
    assert fitting_subgroup(sl32).is_trivial()
    assert fitting_subgroup(dih8) == whole_group(dih8)
    assert is_nilpotent(dih8) and not is_nilpotent(sym4)


def test_o_pi_examples(sym3, sym4):
    c3 = subgroup(sym3, [P("(1 2 3)", 3)])
    assert o_pi(sym3, c3, PrimeSet.parse("3")) == c3
    assert o_pi(sym3, subgroup(sym3, [P("(1 2)", 3)]), PrimeSet.parse("2")).is_trivial()
    assert o_pi(sym4, sylow_subgroup(sym4, 2), PrimeSet.parse("2")) == fitting_subgroup(sym4)
    assert o_p(sym4, 2) == fitting_subgroup(sym4)
    with pytest.raises(NotHall):
        o_pi(sym4, sylow_subgroup(sym4, 3), PrimeSet.parse("2"))


def test_class_sizes_of_degree7_group(sl32):
    sizes = sorted(len(conjugacy_class(sl32, x)) for x in {min(conjugacy_class(sl32, g)) for g in sl32.elements})
    assert sizes == sorted([1, 21, 42, 56, 24, 24])


def test_number_theory_helpers():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_factors(5616) == [2, 3, 13]
    assert p_part(20160, 2) == 64
    assert str(PrimeSet.parse("3, 2")) == "2,3"
    with pytest.raises(ValueError):
        PrimeSet.parse("2,4")


def test_subgroup_handle_identity(sym4):
    a = subgroup(sym4, [P("(1 2)", 4)])
    b = SubgroupHandle(sym4, a.elements)
    assert a == b and hash(a) == hash(b)
    assert trivial_subgroup(sym4).order == 1
