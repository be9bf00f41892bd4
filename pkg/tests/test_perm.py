import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import closure

from semicayley import ConnectionSpec, automorphism_group, build_gp, build_sc_graph, make_group
from semicayley.errors import PreconditionError
from semicayley.graphs import cycle_graph, path_graph
from semicayley.perm import (
    PermGroup,
    Permutation,
    compose,
    contains,
    group_order,
    identity,
    inverse,
    is_normal_subgroup,
    is_semiregular,
    orbits,
    point_stabilizer,
)
from semicayley.theory import build_RG

perms = st.integers(1, 8).flatmap(lambda n: st.permutations(list(range(n)))).map(Permutation)


def cyc(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def test_compose_with_inverse_is_identity():
    p = cyc(5, (0, 3, 1), (2, 4))
    assert compose(p, inverse(p)) == identity(5)
    assert (p * p.inverse()).is_identity()


def test_identity_images():
    assert list(identity(4).images) == [0, 1, 2, 3]
    assert str(identity(4)) == "()"


def test_square_of_four_cycle():
    p = cyc(4, (0, 1, 2, 3))
    assert p * p == cyc(4, (0, 2), (1, 3))
    assert str(p ** 2) == "(0 2)(1 3)"


def test_composition_applies_left_first():
    p, q = cyc(3, (0, 1)), cyc(3, (1, 2))
    assert (p * q)(0) == q(p(0)) == 2


@settings(max_examples=100, deadline=None)
@given(perms)
def test_group_axioms(p):
    e = identity(p.degree)
    assert p * e == p == e * p
    assert p * p.inverse() == e
    assert p ** p.order() == e
    assert p ** -1 == p.inverse()


def test_group_orders():
    assert group_order(PermGroup(5, [cyc(5, (0, 1, 2, 3, 4))])) == 5
    assert automorphism_group(cycle_graph(8)).order() == 16
    assert automorphism_group(build_gp(5, 2)).order() == 120


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetric_group_order(n):
    gens = [cyc(n, tuple(range(n)))] if n > 1 else []
    if n > 2:
        gens.append(cyc(n, (0, 1)))
    assert group_order(PermGroup(n, gens)) == math.factorial(n)


def test_membership_examples():
    assert contains(PermGroup(2, [cyc(2, (0, 1))]), cyc(2, (0, 1)))
    assert not contains(PermGroup(3, [cyc(3, (0, 1, 2))]), cyc(3, (0, 1)))
    assert contains(automorphism_group(cycle_graph(4)), cyc(4, (0, 2)))


def test_orbit_examples():
    assert orbits(PermGroup(3, [])) == [[0], [1], [2]]
    spec = ConnectionSpec.make(make_group([3]), [(1,), (2,)], [(1,), (2,)])
    assert sorted(map(sorted, orbits(build_RG(spec)))) == [[0, 1, 2], [3, 4, 5]]
    assert orbits(PermGroup(5, [cyc(5, (0, 1, 2, 3, 4))])) == [[0, 1, 2, 3, 4]]


def test_semiregular_examples():
    spec = ConnectionSpec.make(make_group([4, 2]), [(1, 0), (3, 0)], [(0, 1)])
    assert is_semiregular(build_RG(spec))
    assert not is_semiregular(automorphism_group(path_graph(3)))
    assert not is_semiregular(PermGroup(3, [cyc(3, (0, 1, 2)), cyc(3, (0, 1))]))


def test_normal_subgroup_examples():
    S3 = PermGroup(3, [cyc(3, (0, 1, 2)), cyc(3, (0, 1))])
    assert is_normal_subgroup(S3, S3)
    assert is_normal_subgroup(PermGroup(3, [cyc(3, (0, 1, 2))]), S3)
    assert not is_normal_subgroup(PermGroup(3, [cyc(3, (0, 1))]), S3)
    spec = ConnectionSpec.make(make_group([2, 2]), [(1, 0), (0, 1)], [(1, 1), (0, 1)])
    assert not is_normal_subgroup(build_RG(spec), automorphism_group(build_sc_graph(spec)))


def test_normal_subgroup_requires_containment():
    with pytest.raises(PreconditionError):
        is_normal_subgroup(PermGroup(4, [cyc(4, (0, 1))]), PermGroup(4, [cyc(4, (0, 1, 2, 3))]))


def test_point_stabilizers():
    C = PermGroup(6, [cyc(6, tuple(range(6)))])
    assert point_stabilizer(C, 3).order() == 1
    for k in (3, 5, 6, 7):
        assert point_stabilizer(automorphism_group(build_gp(k, 1)), 0).order() == 2


def _test_groups():
    yield PermGroup(6, [cyc(6, (0, 1, 2)), cyc(6, (3, 4)), cyc(6, (0, 3), (1, 4), (2, 5))])
    yield automorphism_group(build_gp(5, 2))
    yield automorphism_group(build_gp(4, 1))
    yield automorphism_group(path_graph(5))
    yield PermGroup(7, [cyc(7, (0, 1, 2, 3, 4, 5, 6)), cyc(7, (1, 2, 4), (3, 6, 5))])


@pytest.mark.parametrize("G", list(_test_groups()), ids=repr)
def test_orbit_stabilizer(G):
    for point in range(G.degree):
        assert len(G.orbit(point)) * G.point_stabilizer(point).order() == G.order()


def test_random_products_are_members():
    G = automorphism_group(build_gp(10, 3))
    rng = random.Random(7)
    for _ in range(100):
        p = Permutation.identity(G.degree)
        for _ in range(rng.randint(1, 12)):
            p = p * rng.choice(G.generators)
        assert G.contains(p)
        assert G.contains(G.random_element(rng))


@pytest.mark.parametrize(
    "degree,gens",
    [
        (4, [(0, 1, 2, 3)]),
        (4, [(0, 1, 2, 3), (0, 2)]),
        (5, [(0, 1, 2), (2, 3, 4)]),
        (6, [(0, 1), (2, 3), (4, 5)]),
        (6, [(0, 1, 2, 3, 4, 5), (1, 5)]),
        (6, [(0, 1, 2), (3, 4, 5), (0, 3)]),
    ],
)
def test_membership_matches_exhaustive_listing(degree, gens):
    gens = [cyc(degree, g) for g in gens]
    G = PermGroup(degree, gens)
    members = closure([g.images for g in gens], degree)
    assert G.order() == len(members)
    assert {p.images for p in G.elements()} == members
    for images in itertools.permutations(range(degree)):
        assert G.contains(Permutation(images)) == (images in members)


def _exhaustive_normal(H, G):
    h_elems = {h.images for h in H.elements()}
    return all((g.inverse() * h * g).images in h_elems for g in G.elements() for h in H.elements())


def _sweep_pairs():
    from semicayley.sweep import SweepConfig, enumerate_instances

    for spec in enumerate_instances(SweepConfig(max_group_order=12)):
        A = automorphism_group(build_sc_graph(spec))
        if A.order() <= 2000:
            yield str(spec), build_RG(spec), A


@pytest.mark.slow
def test_normality_matches_exhaustive_definition_on_sweep_groups():
    count = 0
    for _name, RG, A in _sweep_pairs():
        assert is_normal_subgroup(RG, A) == _exhaustive_normal(RG, A), _name
        count += 1
    assert count > 50
