import random
from itertools import combinations
from math import comb

import pytest

from wsep.subsets import Dihedral, weakly_separated
from wsep.wscoll import (
    WSCollection,
    apply_move,
    base_collection,
    boundary_sets,
    complete_to_maximal,
    component_of_base,
    diagonal_dichotomy_holds,
    dihedral_orbits,
    dihedral_witness,
    enumerate_component,
    find_moves,
    height,
    is_maximal,
    pinch_index,
    reduce_to_base,
    sizes_histogram,
    translate,
    validate,
)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def random_greedy_maximal(k, n, rng):
    """Maximal collection built by greedy insertion in a random order; an
    independent path to maximality used by the purity sweeps."""
    chosen = []
    pool = list(combinations(range(1, n + 1), k))
    rng.shuffle(pool)
    for cand in pool:
        if all(weakly_separated(cand, s) for s in chosen):
            chosen.append(cand)
    return WSCollection.of(k, n, chosen)


class TestValidateComplete:
    def test_crossing_pair_named(self):
        c = WSCollection.of(2, 4, [(1, 3), (2, 4)])
        report = validate(c)
        assert not report.ok
        assert ((1, 3), (2, 4)) in report.crossing_pairs

    def test_greedy_completion_of_empty_square(self):
        done = complete_to_maximal(WSCollection.of(2, 4, []))
        assert done.sets == ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4))

    def test_completion_fixed_point(self):
        for c in sorted(component_of_base(2, 5)):
            assert complete_to_maximal(c) == c

    def test_completion_rejects_invalid(self):
        with pytest.raises(ValueError):
            complete_to_maximal(WSCollection.of(2, 4, [(1, 3), (2, 4)]))


class TestBaseCollection:
    def test_3_6_non_boundary(self):
        assert base_collection(3, 6).non_boundary() == (
            (1, 2, 4),
            (1, 2, 5),
            (1, 3, 4),
            (1, 4, 5),
        )

    def test_size_formula(self):
        for k in (2, 3, 4):
            for n in range(k + 1, 10):
                assert len(base_collection(k, n)) == k * (n - k) + 1

    def test_2_n_is_the_fan(self):
        for n in (4, 5, 6, 7):
            fan = tuple((1, j) for j in range(3, n))
            assert base_collection(2, n).non_boundary() == fan

    def test_is_maximal_and_valid(self):
        for k, n in [(2, 6), (3, 6), (3, 7), (4, 8)]:
            c = base_collection(k, n)
            assert validate(c).ok
            assert is_maximal(c)

    def test_contains_all_boundary(self):
        for k, n in [(2, 7), (3, 7)]:
            member = base_collection(k, n).member_set()
            assert set(boundary_sets(k, n)) <= member


class TestMoves:
    def test_square_flip(self):
        c = WSCollection.of(2, 4, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])
        moves = find_moves(c)
        assert len(moves) == 1
        d = apply_move(c, moves[0])
        assert (2, 4) in d and (1, 3) not in d

    def test_base_6_move_listing(self):
        c = base_collection(3, 6)
        got = {(m.anchor, m.removes, m.adds) for m in find_moves(c)}
        assert ((1,), (1, 2, 4), (1, 3, 5)) in got
        sides = {(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 5)}
        assert sides <= c.member_set()

    def test_move_is_involution(self):
        c = base_collection(3, 6)
        for mv in find_moves(c):
            d = apply_move(c, mv)
            assert apply_move(d, mv.inverse()) == c

    def test_absent_side_rejected(self):
        c = base_collection(2, 5)
        mv = find_moves(c)[0]
        stripped = WSCollection.of(2, 5, [s for s in c.sets if s != mv.sides[0]])
        with pytest.raises(ValueError):
            apply_move(stripped, mv)

    def test_diagonal_dichotomy_on_enumerations(self):
        for c in component_of_base(2, 6):
            assert diagonal_dichotomy_holds(c)
        for c in component_of_base(3, 6):
            assert diagonal_dichotomy_holds(c)

    def test_moves_commute_with_dihedral_action(self):
        rng = random.Random(11)
        cs = sorted(component_of_base(3, 6))
        for _ in range(30):
            c = rng.choice(cs)
            moves = find_moves(c)
            mv = rng.choice(moves)
            g = rng.choice(list(Dihedral.group(6)))
            lhs = translate(apply_move(c, mv), g)
            rhs = apply_move(translate(c, g), mv.translate(g))
            assert lhs == rhs


class TestEnumeration:
    def test_small_counts(self):
        assert len(component_of_base(2, 4)) == 2
        assert len(component_of_base(2, 5)) == 5
        assert len(component_of_base(3, 6)) == 34

    def test_catalan_counts(self):
        for n in range(4, 10):
            assert len(component_of_base(2, n)) == catalan(n - 2)

    def test_every_member_contains_boundary(self):
        for k, n in ((3, 6), (2, 7)):
            for c in component_of_base(k, n):
                assert set(boundary_sets(k, n)) <= c.member_set()
        rng = random.Random(8)
        for _ in range(20):
            c = random_greedy_maximal(3, 7, rng)
            assert set(boundary_sets(3, 7)) <= c.member_set()

    def test_every_k3_member_has_almost_boundary_subset(self):
        from wsep.subsets import diameter

        for n in (6, 7):
            for c in component_of_base(3, n):
                assert any(diameter(s, n) == 4 for s in c.sets)

    def test_seed_choice_does_not_matter(self):
        cs = component_of_base(2, 6)
        other = enumerate_component(max(cs))
        assert frozenset(other) == cs


class TestOrbits:
    def test_w36_has_five_orbits(self):
        orbits = dihedral_orbits(component_of_base(3, 6))
        assert len(orbits) == 5
        assert sorted(len(o) for o in orbits) == [3, 3, 4, 12, 12]

    def test_w24_single_orbit(self):
        assert len(dihedral_orbits(component_of_base(2, 4))) == 1

    def test_base_orbit_contains_base(self):
        orbits = dihedral_orbits(component_of_base(3, 6))
        base = base_collection(3, 6)
        assert any(base in o for o in orbits)


class TestPurity:
    def test_bfs_purity(self):
        for k, nmax in [(2, 9), (3, 7)]:
            for n in range(k + 2, nmax + 1):
                expected = k * (n - k) + 1
                hist = sizes_histogram(component_of_base(k, n))
                assert set(hist) == {expected}

    def test_random_greedy_purity(self):
        rng = random.Random(2024)
        for k, n, reps in [(2, 9, 60), (3, 8, 120)]:
            for _ in range(reps):
                c = random_greedy_maximal(k, n, rng)
                assert len(c) == k * (n - k) + 1

    def test_k4_size_bound(self):
        rng = random.Random(99)
        deficient = []
        for n in (6, 7, 8):
            bound = 4 * (n - 4) + 1
            for _ in range(40):
                c = random_greedy_maximal(4, n, rng)
                assert len(c) <= bound
                if len(c) < bound:
                    deficient.append(c)
        if deficient:  # educational sweep: record, do not fail
            print(f"research finding: {len(deficient)} size-deficient maximal collections")


class TestHeightAndReduction:
    def test_base_has_height_zero(self):
        for n in (5, 6, 7):
            c = base_collection(3, n)
            assert height(c) == 0
            assert (1, 2, n - 1) in c and (1, n - 2, n - 1) in c

    def test_pinch_of_base(self):
        for n in (5, 6, 7):
            assert pinch_index(base_collection(3, n)) == 2

    def test_pinch_requires_marker(self):
        lacking = min(
            c for c in component_of_base(3, 6) if (1, 4, 5) not in c
        )
        with pytest.raises(ValueError):
            pinch_index(lacking)

    def test_reduce_base_is_trivial(self):
        r = reduce_to_base(base_collection(3, 6))
        assert r.moves == ()

    def test_reduce_everything_small(self):
        for k, n in [(2, 6), (3, 6)]:
            target = base_collection(k, n)
            for c in component_of_base(k, n):
                red = reduce_to_base(c)
                assert red.end == target
                assert red.pre_translation.is_identity()

    def test_reduce_dihedral_translates(self):
        for k, n in [(2, 7), (2, 8), (3, 6), (3, 7), (3, 8)]:
            base = base_collection(k, n)
            for g in Dihedral.group(n):
                red = reduce_to_base(translate(base, g))
                assert red.end == base

    def test_reduce_random_collections_at_larger_n(self):
        rng = random.Random(88)
        for k, n, reps in [(3, 8, 10), (2, 9, 10)]:
            target = base_collection(k, n)
            for _ in range(reps):
                c = random_greedy_maximal(k, n, rng)
                assert reduce_to_base(c).end == target

    def test_witness_exists_for_all_w36(self):
        for c in component_of_base(3, 6):
            g = dihedral_witness(c)
            assert (1, 4, 5) in translate(c, g)

    def test_reduction_rejects_non_maximal(self):
        with pytest.raises(ValueError):
            reduce_to_base(WSCollection.of(2, 5, [(1, 2), (2, 3)]))

    def test_reduction_rejects_k4(self):
        with pytest.raises(ValueError):
            reduce_to_base(base_collection(4, 8))


class TestJson:
    def test_round_trip(self):
        c = base_collection(3, 6)
        assert WSCollection.from_json_dict(c.to_json_dict()) == c

    def test_move_json(self):
        mv = find_moves(base_collection(3, 6))[0]
        d = mv.to_json_dict()
        assert d["quad"] == [mv.i, mv.s, mv.j, mv.t]
