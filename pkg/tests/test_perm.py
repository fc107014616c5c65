import random

import pytest

from altspectra.perm import (
    Permutation,
    alternating_order,
    compose,
    enumerate_alternating,
    from_cycle,
    from_cycles,
    identity,
    inverse,
    parse_cycles,
    parse_generator_list,
    rank,
    sign,
    unrank,
)


def random_perm(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_identity():
    assert identity(3).images == (1, 2, 3)
    assert sign(identity(4)) == 1
    rng = random.Random(1)
    for _ in range(5):
        p = random_perm(rng, 6)
        assert compose(identity(6), p) == p
        assert compose(p, identity(6)) == p


def test_compose_applies_left_argument_first():
    c = from_cycle(3, [1, 2, 3])
    assert compose(c, c).images == (3, 1, 2)
    assert compose(c, c) == from_cycle(3, [1, 3, 2])


def test_compose_dimension_mismatch():
    with pytest.raises(ValueError):
        compose(identity(3), identity(4))


def test_left_multiplication_keeps_or_moves_pinned_value():
    # tau sends n to i; multiplying by (1,2,k) with k < n on the left keeps
    # that pin, while (1,n,2) moves the value i to the image of 1.
    n = 5
    rng = random.Random(7)
    for _ in range(20):
        tau = random_perm(rng, n)
        i = tau.images[n - 1]
        for k in range(3, n):
            assert compose(from_cycle(n, [1, 2, k]), tau).images[n - 1] == i
            assert compose(from_cycle(n, [1, k, 2]), tau).images[n - 1] == i
        assert compose(from_cycle(n, [1, n, 2]), tau).images[0] == i
        assert compose(from_cycle(n, [1, 2, n]), tau).images[1] == i


def test_inverse():
    assert inverse(from_cycle(3, [1, 2, 3])) == from_cycle(3, [1, 3, 2])
    assert inverse(identity(5)) == identity(5)
    rng = random.Random(2)
    for _ in range(10):
        p = random_perm(rng, 7)
        assert compose(p, inverse(p)) == identity(7)
        assert inverse(inverse(p)) == p


def test_from_cycle():
    assert from_cycle(4, [1, 2, 3]).images == (2, 3, 1, 4)
    assert from_cycle(5, [1, 3, 2]).images == (3, 1, 2, 4, 5)
    t = from_cycle(3, [1, 2])
    assert t.images == (2, 1, 3)
    assert sign(t) == -1


def test_from_cycle_rejects_bad_input():
    with pytest.raises(ValueError):
        from_cycle(4, [1, 2, 1])
    with pytest.raises(ValueError):
        from_cycle(4, [1, 5])


def test_sign():
    for n in range(3, 7):
        assert sign(from_cycle(n, [1, 2, 3])) == 1
        assert sign(from_cycle(n, [1, 2])) == -1
    # exactly half of S_4 is even
    from itertools import permutations

    evens = sum(1 for im in permutations(range(1, 5)) if sign(Permutation(im)) == 1)
    assert evens == 12


def test_sign_is_a_homomorphism():
    rng = random.Random(3)
    for _ in range(30):
        a, b = random_perm(rng, 6), random_perm(rng, 6)
        assert sign(compose(a, b)) == sign(a) * sign(b)


def test_compose_is_associative():
    rng = random.Random(4)
    for _ in range(30):
        a, b, c = (random_perm(rng, 8) for _ in range(3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_opposite_cycles_cancel():
    for n in (4, 5, 6):
        for i, j, k in [(1, 2, 3), (1, 2, n), (2, 3, n)]:
            prod = compose(from_cycle(n, [i, j, k]), from_cycle(n, [i, k, j]))
            assert prod == identity(n)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rank_unrank_roundtrip(n):
    perms = enumerate_alternating(n)
    assert len(perms) == alternating_order(n)
    seen = set()
    for v, p in enumerate(perms):
        assert sign(p) == 1
        assert rank(p) == v
        assert unrank(n, v) == p
        seen.add(v)
    assert seen == set(range(alternating_order(n)))


def test_rank_rejects_odd():
    with pytest.raises(ValueError):
        rank(from_cycle(4, [1, 2]))


def test_unrank_rejects_out_of_range():
    with pytest.raises(ValueError):
        unrank(4, 12)
    with pytest.raises(ValueError):
        unrank(4, -1)


def test_enumerate_alternating_small():
    perms = enumerate_alternating(3)
    assert perms == [identity(3), from_cycle(3, [1, 2, 3]), from_cycle(3, [1, 3, 2])]
    assert len(enumerate_alternating(5)) == 60
    with pytest.raises(ValueError):
        enumerate_alternating(2)


def test_enumeration_is_lexicographic():
    images = [p.images for p in enumerate_alternating(5)]
    assert images == sorted(images)


def test_parse_cycles():
    assert parse_cycles("(1,2,3)", 4) == from_cycle(4, [1, 2, 3])
    assert parse_cycles(" ( 1 , 2 , 3 ) ", 4) == from_cycle(4, [1, 2, 3])
    assert parse_cycles("(1,2,3)(4,5,6)", 6) == from_cycles(6, [[1, 2, 3], [4, 5, 6]])
    assert parse_cycles("()", 3) == identity(3)
    # non-disjoint cycles are applied left to right
    assert parse_cycles("(1,2)(1,3)", 3) == compose(from_cycle(3, [1, 2]), from_cycle(3, [1, 3]))


@pytest.mark.parametrize("bad", ["", "(1,2", "1,2,3", "(1,2))", "(a,b)", "(1 2 3)"])
def test_parse_cycles_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_cycles(bad, 5)


def test_parse_generator_list():
    gens = parse_generator_list("(1,2,3),(1,3,2)", 5)
    assert gens == [from_cycle(5, [1, 2, 3]), from_cycle(5, [1, 3, 2])]
    gens = parse_generator_list("(1,2,3)(4,5,3); (1,3,2)", 5)
    assert len(gens) == 2
    with pytest.raises(ValueError):
        parse_generator_list("", 5)
    with pytest.raises(ValueError):
        parse_generator_list("(1,2,3", 5)
