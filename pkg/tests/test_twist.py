import pytest

import flagpieces as fp
from flagpieces import word_str
from flagpieces.oracle import (
    check_class_partition,
    check_orbit_minimality,
    check_shift_reduction,
    check_stabilizer_type,
    check_strong_conjugacy,
    subsets_of,
)
from flagpieces.twist import AutomorphismError, DiagramAutomorphism, delta_on_element


def _delta(group, spec):
    return DiagramAutomorphism.from_spec(group.root_system, spec)


def test_identity_automorphism(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "id")
    for w in g.elements:
        assert tc.delta_apply(w) == w


def test_flip_relabels_generators(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "flip")
    assert tc.delta_apply(g.simple_reflection(1)) == g.simple_reflection(2)
    g3 = group_of("A3")
    tc3 = tc_of("A3", "flip")
    assert tc3.delta_apply(g3.from_word([1, 2])) == g3.from_word([3, 2])


def test_delta_is_group_automorphism(group_of, tc_of):
    g = group_of("A3")
    tc = tc_of("A3", "flip")
    for u in g.elements:
        for v in g.parabolic_elements({1, 2}):
            assert tc.delta_apply(u * v) == tc.delta_apply(u) * tc.delta_apply(v)


def test_non_cartan_preserving_rejected(group_of):
    g = group_of("B2")
    with pytest.raises(AutomorphismError, match="Cartan-preserving"):
        DiagramAutomorphism(g.root_system, (2, 1))
    with pytest.raises(AutomorphismError, match="permutation"):
        DiagramAutomorphism(g.root_system, (1, 1))


def test_flip_specs():
    assert _spec_images("A3", "flip") == (3, 2, 1)
    assert _spec_images("D4", "flip") == (1, 2, 4, 3)
    assert _spec_images("D5", "flip") == (1, 2, 3, 5, 4)
    e6 = fp.root_system("E6")
    assert DiagramAutomorphism.from_spec(e6, "flip").images == (6, 2, 5, 4, 3, 1)


def _spec_images(label, spec):
    rs = fp.root_system(label)
    return DiagramAutomorphism.from_spec(rs, spec).images


def test_triality_specs():
    assert _spec_images("D4", "tri") == (3, 2, 4, 1)
    assert _spec_images("D4", "tri2") == (4, 2, 1, 3)
    rs = fp.root_system("A3")
    with pytest.raises(AutomorphismError, match="D4"):
        DiagramAutomorphism.from_spec(rs, "tri")
    with pytest.raises(AutomorphismError, match="flip"):
        DiagramAutomorphism.from_spec(fp.root_system("G2"), "flip")


def test_explicit_spec(group_of):
    g = group_of("A3")
    d = DiagramAutomorphism.from_spec(g.root_system, "3,2,1")
    assert d.images == (3, 2, 1)
    with pytest.raises(AutomorphismError, match="cannot parse"):
        DiagramAutomorphism.from_spec(g.root_system, "bogus")


def test_twisted_conjugate_examples(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "id")
    s1, s2 = g.simple_reflection(1), g.simple_reflection(2)
    for y in g.elements:
        assert tc.twisted_conjugate(g.identity, y, set()) == y
    assert tc.twisted_conjugate(s1, s2, {1}) == g.from_word([1, 2, 1])
    tcf = tc_of("A2", "flip")
    assert tcf.twisted_conjugate(s1, g.identity, {1}) == g.from_word([2, 1])
    with pytest.raises(ValueError, match="parabolic"):
        tc.twisted_conjugate(s2, s1, {1})


@pytest.mark.parametrize(
    "label,spec,J",
    [
        ("A2", "id", {1, 2}),
        ("A2", "flip", {1, 2}),
        ("B2", "id", {1, 2}),
        ("A3", "flip", {1, 3}),
        ("A3", "id", {1, 2}),
    ],
)
def test_twisted_action_axiom(group_of, tc_of, label, spec, J):
    g = group_of(label)
    tc = tc_of(label, spec)
    J = frozenset(J)
    wj = g.parabolic_elements(J)
    for x1 in wj:
        for x2 in wj:
            for y in g.elements:
                lhs = tc.twisted_conjugate(x1 * x2, y, J)
                rhs = tc.twisted_conjugate(x1, tc.twisted_conjugate(x2, y, J), J)
                assert lhs == rhs


def test_orbit_examples(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "id")
    for y in g.elements:
        assert tc.orbit(y, set()).members == (y,)
    orb = tc.orbit(g.simple_reflection(2), {1})
    assert {word_str(m) for m in orb.members} == {"2", "1,2,1"}
    assert [word_str(m) for m in orb.min_elements] == ["2"]
    orb2 = tc.orbit(g.from_word([1, 2]), {1})
    assert {word_str(m) for m in orb2.members} == {"1,2", "2,1"}
    assert len(orb2.min_elements) == 2


def test_orbit_closed_under_generators(group_of, tc_of):
    g = group_of("B2")
    tc = tc_of("B2", "id")
    for J in subsets_of(g.simple_indices):
        orbits, _ = tc.orbit_partition(J)
        for orbit in orbits:
            members = set(orbit.members)
            for j in J:
                for y in members:
                    assert tc.twisted_conjugate(g.simple_reflection(j), y, J) in members


def test_stabilizer_type_examples(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "id")
    for J in subsets_of(g.simple_indices):
        assert tc.stabilizer_type(J, g.identity) == J
    w = g.from_word([1, 2])
    assert tc.stabilizer_type({1}, w) == frozenset()
    tcf = tc_of("A2", "flip")
    assert tcf.stabilizer_type({1}, w) == frozenset({1})
    with pytest.raises(ValueError, match="minimal coset representative"):
        tc.stabilizer_type({1}, g.simple_reflection(1))


def test_stabilizer_type_identity_is_largest_stable_subset(group_of, tc_of):
    tc = tc_of("A3", "flip")
    # delta swaps 1 and 3: the largest delta-stable subset of {1,2} is {2}
    assert tc.stabilizer_type({1, 2}, tc.group.identity) == frozenset({2})


@pytest.mark.parametrize("label,spec", [("B3", "id"), ("A3", "flip"), ("D4", "tri")])
def test_stabilizer_type_vs_all_subsets_oracle(tc_of, label, spec):
    tc = tc_of(label, spec)
    for J in subsets_of(tc.group.simple_indices):
        report = check_stabilizer_type(tc, J)
        assert report.passed, report.failures


def test_class_decomposition_examples(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "id")
    classes = tc.class_decomposition(frozenset(), verify=True)
    assert all(len(c.members) == 1 for c in classes)
    assert len(classes) == g.order

    classes = tc.class_decomposition({1}, verify=True)
    by_base = {word_str(c.base): {word_str(m) for m in c.members} for c in classes}
    assert by_base == {
        "e": {"e", "1"},
        "2": {"2", "1,2,1"},
        "1,2": {"1,2", "2,1"},
    }

    classes = tc.class_decomposition({1, 2}, verify=True)
    assert len(classes) == 1
    assert len(classes[0].members) == g.order  # conjugation action: one class of e


def test_class_partition_checks(tc_of):
    for label, spec in [("A2", "id"), ("A2", "flip"), ("B2", "id"), ("A3", "flip")]:
        tc = tc_of(label, spec)
        for J in subsets_of(tc.group.simple_indices):
            report = check_class_partition(tc, J)
            assert report.passed, report.failures


def test_shift_step_examples(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "id")
    s2 = g.simple_reflection(2)
    assert tc.shift_step(g.identity, 1, {1}) == g.identity
    assert tc.shift_step(g.from_word([1, 2, 1]), 1, {1, 2}) == s2
    assert tc.shift_step(g.from_word([1, 2]), 1, {1, 2}) == g.from_word([2, 1])
    with pytest.raises(ValueError, match="not in J"):
        tc.shift_step(g.identity, 2, {1})
    # pinned degenerate case: delta(j) != j at the identity has no edge
    tcf = tc_of("A2", "flip")
    assert tcf.shift_step(g.identity, 1, {1}) is None


def test_reduce_to_distinguished_examples(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "id")
    s2 = g.simple_reflection(2)
    red = tc.reduce_to_distinguished(s2, {1})
    assert (red.label, red.tail, red.path) == (s2, g.identity, ())
    red = tc.reduce_to_distinguished(g.simple_reflection(1), {1})
    assert (red.label, red.tail) == (g.identity, g.simple_reflection(1))
    red = tc.reduce_to_distinguished(g.from_word([1, 2, 1]), {1})
    assert g.is_min_left_rep(red.label, {1})
    assert set(red.tail.word) <= tc.stabilizer_type({1}, red.label)


@pytest.mark.parametrize("label,spec", [("A2", "id"), ("B2", "id"), ("A3", "flip")])
def test_reduction_exhaustive(tc_of, label, spec):
    tc = tc_of(label, spec)
    for J in subsets_of(tc.group.simple_indices):
        report = check_shift_reduction(tc, J)
        assert report.passed, report.failures


def test_strong_conjugacy_examples(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "id")
    for w in g.elements:
        assert tc.strongly_conjugate(w, w, {1})
    assert tc.strongly_conjugate(g.from_word([1, 2]), g.from_word([2, 1]), {1})
    # both minimal elements of the orbit {s1 s2, s2 s1} meet W^J: one shift class
    assert tc.same_shift_class(g.from_word([1, 2]), g.from_word([2, 1]), {1})


@pytest.mark.parametrize("label,spec", [("A2", "id"), ("A2", "flip"), ("B2", "id")])
def test_strong_conjugacy_claims(tc_of, label, spec):
    tc = tc_of(label, spec)
    for J in subsets_of(tc.group.simple_indices):
        report = check_strong_conjugacy(tc, J)
        assert report.passed, report.failures


def test_shift_classes_partition_group(group_of, tc_of):
    g = group_of("B2")
    tc = tc_of("B2", "id")
    classes = tc.shift_classes({1, 2})
    seen = [m for cls in classes for m in cls]
    assert len(seen) == g.order
    assert len(set(seen)) == g.order
    # classes are length-homogeneous: cycles cannot strictly drop length
    for cls in classes:
        assert len({m.length for m in cls}) == 1


def test_shift_reachable_contains_self(group_of, tc_of):
    g = group_of("A2")
    tc = tc_of("A2", "id")
    for w in g.elements:
        assert w in tc.shift_reachable(w, {1, 2})


@pytest.mark.parametrize("label,spec", [("A2", "id"), ("B2", "id"), ("A3", "flip"), ("G2", "id")])
def test_orbit_minimality_equivalence(tc_of, label, spec):
    tc = tc_of(label, spec)
    for J in subsets_of(tc.group.simple_indices):
        report = check_orbit_minimality(tc, J)
        assert report.passed, report.failures


def test_support(group_of):
    g = group_of("A3")
    assert fp.support(g.identity) == frozenset()
    for w in g.elements:
        assert fp.support(w) == frozenset(w.word)


def test_stable_support(group_of, tc_of):
    g = group_of("A2")
    flip = tc_of("A2", "flip").delta
    ident = tc_of("A2", "id").delta
    assert fp.stable_support(g.simple_reflection(1), flip) == frozenset({1, 2})
    assert fp.stable_support(g.simple_reflection(1), ident) == frozenset({1})
    assert fp.stable_support(g.from_word([1, 2]), ident) == frozenset({1, 2})


def test_delta_on_element_free_function(group_of):
    g = group_of("A2")
    d = DiagramAutomorphism.from_spec(g.root_system, "flip")
    assert delta_on_element(d, g.simple_reflection(1)) == g.simple_reflection(2)
    other = fp.root_system("A3")
    d3 = DiagramAutomorphism.from_spec(other, "flip")
    with pytest.raises(ValueError, match="different root systems"):
        delta_on_element(d3, g.simple_reflection(1))
