from __future__ import annotations

import random

import pytest

import pfrobenius as pf


def test_primitive_direction():
    assert pf.primitive_direction((4, 0)) == (1, 0)
    assert pf.primitive_direction((6, 4)) == (3, 2)
    assert pf.primitive_direction((0, 7)) == (0, 1)
    with pytest.raises(pf.ValidationError):
        pf.primitive_direction((0, 0))


def test_extremal_rays_example(example_S):
    assert set(pf.extremal_ray_directions(example_S)) == {(1, 0), (0, 1)}


def test_extremal_rays_deficient():
    S = pf.minimalize_generators([(0, 1), (1, 1), (2, 0), (3, 0)])
    assert set(pf.extremal_ray_directions(S)) == {(1, 0), (0, 1)}
    assert not pf.is_fp_finite(S)


def test_single_ray():
    S = pf.Semigroup(2, ((1, 1),))
    assert set(pf.extremal_ray_directions(S)) == {(1, 1)}
    assert not pf.is_fp_finite(S)


def test_finiteness_examples(example_S):
    assert pf.is_fp_finite(example_S)
    assert pf.is_fp_finite(pf.numerical(2, 3))
    assert not pf.is_fp_finite(pf.Semigroup(1, ((2,),)))


def test_rays_come_from_generators(example_S):
    prim = {pf.primitive_direction(g) for g in example_S.generators}
    assert set(pf.extremal_ray_directions(example_S)) <= prim


def test_finiteness_invariance_under_permutation_and_scaling():
    rng = random.Random(3)
    gens = [(3, 0), (4, 0), (0, 5), (0, 6), (1, 1)]
    base = pf.is_fp_finite(pf.minimalize_generators(gens))
    for _ in range(5):
        perm = gens[:]
        rng.shuffle(perm)
        assert pf.is_fp_finite(pf.minimalize_generators(perm)) == base
    scaled = [(3 * a, 3 * b) for a, b in gens]
    assert pf.is_fp_finite(pf.minimalize_generators(scaled)) == base


def test_degenerate_parallel_generators():
    # all generators on one ray: a single extremal ray with >= 2 generators
    S = pf.minimalize_generators([(2, 2), (3, 3)])
    assert set(pf.extremal_ray_directions(S)) == {(1, 1)}
    assert pf.is_fp_finite(S)


def test_finiteness_matches_own_free_multiples():
    # cross-validation: finiteness iff every generator has a multiple
    # expressible without itself
    cases = [
        pf.numerical(2, 3),
        pf.minimalize_generators([(0, 1), (1, 1), (2, 0), (3, 0)]),
        pf.minimalize_generators([(2, 0), (3, 0), (0, 2), (0, 3)]),
    ]
    for S in cases:
        expected = pf.is_fp_finite(S)
        found_all = True
        for k in range(S.h):
            others = pf.Semigroup(S.q, tuple(g for i, g in enumerate(S.generators) if i != k))
            a = S.generators[k]
            if not any(
                pf.contains(others, tuple(lam * c for c in a)) for lam in range(1, 40)
            ):
                found_all = False
        assert found_all == expected
