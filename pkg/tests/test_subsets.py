import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from wsep.subsets import (
    Dihedral,
    MinorIndex,
    as_subset,
    diameter,
    is_boundary,
    minor_exponent,
    parse_subset,
    plucker_exponent,
    precedes,
    stieffel_subset,
    weakly_separated,
    weakly_separated_by_crossings,
)
from wsep.quantum import quantum_minor, quasi_commutation_exponent

from oracles import (
    diameter_bf,
    maximal_minor,
    staircase_matrix,
    submatrix_minor,
    weakly_separated_bf,
)


def all_subsets(n):
    out = [()]
    for k in range(1, n + 1):
        out.extend(combinations(range(1, n + 1), k))
    return out


class TestPrecedes:
    def test_disjoint_intervals(self):
        assert precedes((1, 2), (3, 5))

    def test_overlap(self):
        assert not precedes((1, 4), (3, 5))

    def test_vacuous(self):
        assert precedes((), (1,))
        assert precedes((1,), ())


class TestWeaklySeparated:
    def test_crossing_pair(self):
        assert weakly_separated_bf((1, 3), (2, 4)) is False
        assert not weakly_separated((1, 3), (2, 4))

    def test_initial_interval_separates_from_everything(self):
        for n in (4, 5, 6):
            for k in (2, 3):
                for K in combinations(range(1, n + 1), k):
                    assert weakly_separated(tuple(range(1, k + 1)), K)

    def test_preceding_pair(self):
        assert weakly_separated((1, 2), (3, 4))

    def test_three_crossings(self):
        assert weakly_separated_bf((1, 3, 5), (2, 4, 6)) is False
        assert not weakly_separated((1, 3, 5), (2, 4, 6))

    def test_exhaustive_against_bruteforce_and_crossings(self):
        # all pairs of subsets of [1..6]: partition search, canonical split,
        # and the crossing criterion must agree
        subsets = all_subsets(6)
        for I in subsets:
            for J in subsets:
                expected = weakly_separated_bf(I, J)
                assert weakly_separated(I, J) == expected, (I, J)
                assert weakly_separated_by_crossings(I, J) == expected, (I, J)

    @given(st.data())
    def test_symmetric_and_reflexive(self, data):
        n = data.draw(st.integers(2, 8))
        I = data.draw(st.sets(st.integers(1, n), max_size=n))
        J = data.draw(st.sets(st.integers(1, n), max_size=n))
        assert weakly_separated(I, I)
        assert weakly_separated(I, J) == weakly_separated(J, I)

    def test_dihedral_invariance_exhaustive(self):
        for n in (4, 5, 6, 7):
            group = list(Dihedral.group(n))
            for k in range(1, n + 1):
                pool = list(combinations(range(1, n + 1), k))
                for I in pool:
                    for J in pool:
                        expected = weakly_separated(I, J)
                        assert all(
                            weakly_separated(g.apply_subset(I), g.apply_subset(J))
                            == expected
                            for g in group
                        ), (I, J, n)


class TestStieffel:
    def test_classical_matrix_oracle(self):
        # the minor of the plain matrix equals (up to sign) the maximal minor
        # of the staircase matrix on the mapped column set
        rng = random.Random(7)
        for k, m in [(2, 2), (2, 3), (3, 3), (3, 4)]:
            x = [[rng.randint(1, 50) for _ in range(m)] for _ in range(k)]
            M = staircase_matrix(x, k, m)
            for l in range(1, min(k, m) + 1):
                for rows in combinations(range(1, k + 1), l):
                    for cols in combinations(range(1, m + 1), l):
                        mi = MinorIndex(rows, cols, k, m)
                        lhs = submatrix_minor(x, rows, cols)
                        rhs = maximal_minor(M, stieffel_subset(mi))
                        assert abs(lhs) == abs(rhs), (rows, cols)

    def test_examples(self):
        assert stieffel_subset(MinorIndex((1,), (2,), 2, 2)) == (1, 4)
        assert stieffel_subset(MinorIndex((1, 2), (1, 2), 2, 2)) == (3, 4)
        assert stieffel_subset(MinorIndex((2,), (3,), 3, 3)) == (1, 3, 6)

    def test_injective_and_k_sized(self):
        for k, m in [(2, 3), (3, 3)]:
            seen = {}
            for l in range(1, min(k, m) + 1):
                for rows in combinations(range(1, k + 1), l):
                    for cols in combinations(range(1, m + 1), l):
                        s = stieffel_subset(MinorIndex(rows, cols, k, m))
                        assert len(s) == k
                        assert s not in seen
                        seen[s] = (rows, cols)


class TestPluckerExponent:
    def test_far_apart(self):
        # derived symbolically: the realized product picks up q^2 on swap
        from wsep.quantum import plucker_realize

        p = plucker_realize((1, 2), 2, 4)
        r = plucker_realize((3, 4), 2, 4)
        assert quasi_commutation_exponent(p, r) == 2
        assert plucker_exponent((1, 2), (3, 4)) == 2

    def test_identical(self):
        assert plucker_exponent((1, 3), (1, 3)) == 0

    def test_crossing_is_none(self):
        assert plucker_exponent((1, 3), (2, 4)) is None

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            plucker_exponent((1, 2), (1, 2, 3))

    def test_initial_interval_always_defined(self):
        for n in (4, 5, 6, 7):
            for k in (2, 3):
                for K in combinations(range(1, n + 1), k):
                    assert plucker_exponent(K, tuple(range(1, k + 1))) is not None

    def test_antisymmetric(self):
        for n in (5, 6):
            for I in combinations(range(1, n + 1), 2):
                for J in combinations(range(1, n + 1), 2):
                    c = plucker_exponent(I, J)
                    d = plucker_exponent(J, I)
                    assert (c is None) == (d is None)
                    if c is not None:
                        assert c == -d


class TestMinorExponent:
    def test_known_small_cases_against_oracle(self):
        cases = [
            (((1,), (1,)), ((1,), (2,)), 1),
            (((1,), (1,)), ((2,), (1,)), 1),
            (((1,), (2,)), ((2,), (1,)), 0),
            (((1,), (1,)), ((2,), (2,)), None),
        ]
        for (a, b), (c, d), expected in cases:
            p = MinorIndex(a, b, 2, 2)
            r = MinorIndex(c, d, 2, 2)
            assert minor_exponent(p, r) == expected
            oracle = quasi_commutation_exponent(quantum_minor(p), quantum_minor(r))
            assert oracle == expected

    def test_antisymmetric(self):
        minors = [
            MinorIndex(rows, cols, 2, 3)
            for l in (1, 2)
            for rows in combinations((1, 2), l)
            for cols in combinations((1, 2, 3), l)
        ]
        for p in minors:
            for r in minors:
                c = minor_exponent(p, r)
                d = minor_exponent(r, p)
                assert (c is None) == (d is None)
                if c is not None:
                    assert c == -d

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            minor_exponent(
                MinorIndex((1,), (1,), 2, 2), MinorIndex((1,), (1,), 2, 3)
            )


class TestDihedral:
    def test_rotation_example(self):
        assert Dihedral.rotation(6).apply_subset((1, 2, 4)) == (2, 3, 5)

    def test_reflection_example(self):
        assert Dihedral.reflection(6).apply_subset((1, 3, 4)) == (2, 5, 6)

    def test_identity(self):
        g = Dihedral.identity(7)
        assert g.apply_subset((1, 4, 6)) == (1, 4, 6)

    def test_group_laws(self):
        for n in (3, 5, 6):
            elems = list(Dihedral.group(n))
            assert len(elems) == 2 * n
            assert len(set(elems)) == 2 * n
            for g in elems:
                gi = g.inverse()
                assert (g * gi).is_identity()
                assert (gi * g).is_identity()
            rng = random.Random(n)
            for _ in range(30):
                g, h = rng.choice(elems), rng.choice(elems)
                x = rng.randint(1, n)
                assert (g * h).apply(x) == g.apply(h.apply(x))

    def test_generators_have_dihedral_relation(self):
        n = 7
        rho = Dihedral.rotation(n)
        sigma = Dihedral.reflection(n)
        assert (sigma * sigma).is_identity()
        lhs = sigma * rho
        rhs = rho.inverse() * sigma
        assert lhs == rhs


class TestDiameter:
    def test_boundary_triple(self):
        assert diameter((1, 2, 3), 6) == 3
        assert is_boundary((1, 2, 3), 6)

    def test_almost_boundary(self):
        assert diameter((1, 3, 4), 6) == 4
        assert not is_boundary((1, 3, 4), 6)

    def test_spread(self):
        assert diameter((1, 3, 5), 6) == 5

    def test_wraparound_boundary(self):
        assert is_boundary((1, 5, 6), 6)
        assert is_boundary((1, 2, 6), 6)

    def test_against_interval_scan(self):
        for n in (4, 6, 7):
            for k in (1, 2, 3):
                for K in combinations(range(1, n + 1), k):
                    assert diameter(K, n) == diameter_bf(K, n), (K, n)


class TestParsing:
    def test_round_trip(self):
        assert parse_subset("1,3,5") == (1, 3, 5)
        assert parse_subset("") == ()

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            as_subset((1, 1, 2))

    def test_minor_index_json_round_trip(self):
        mi = MinorIndex((1, 2), (1, 3), 2, 3)
        assert mi.to_json_dict() == {"A": [1, 2], "B": [1, 3], "k": 2, "m": 3}
        assert MinorIndex.from_json_dict(mi.to_json_dict()) == mi

    def test_minor_index_invariants(self):
        with pytest.raises(ValueError):
            MinorIndex((1, 3), (1, 2), 2, 3)  # row set exceeds k
        with pytest.raises(ValueError):
            MinorIndex((1,), (1, 2), 2, 3)  # unequal sizes
