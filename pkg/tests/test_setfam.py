"""Set-family constructors, characteristic vectors, text format."""

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbfam.setfam import (
    EnumerationCapError,
    Params,
    SetFamily,
    Subset,
    binomial,
    char_vector,
    format_family,
    is_prime,
    make_modq_family,
    make_uniform_family,
    parse_family,
)


def brute_modq_count(n: int, d: int, q: int) -> int:
    # Independent enumeration: walk every subset of [n] and count sizes.
    return sum(
        1
        for k in range(n + 1)
        for _ in combinations(range(1, n + 1), k)
        if k % q == d % q
    )


class TestConstructors:
    def test_uniform_4_2(self):
        fam = make_uniform_family(4, 2)
        assert [s.members for s in fam.sets] == [
            (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        ]

    def test_uniform_empty_set_case(self):
        fam = make_uniform_family(4, 0)
        assert len(fam) == 1
        assert fam.sets[0].members == ()

    def test_uniform_6_3_count(self):
        assert len(make_uniform_family(6, 3)) == 20

    def test_uniform_d_out_of_range(self):
        with pytest.raises(ValueError):
            make_uniform_family(4, 5)
        with pytest.raises(ValueError):
            make_uniform_family(4, -1)

    def test_uniform_cap_exceeded(self):
        with pytest.raises(EnumerationCapError):
            make_uniform_family(6, 3, cap=10)

    def test_modq_4_2_2(self):
        fam = make_modq_family(4, 2, 2)
        assert len(fam) == 8
        assert {len(s) for s in fam.sets} == {0, 2, 4}

    def test_modq_6_3_3(self):
        # 22, frozen from the independent enumeration oracle.
        assert brute_modq_count(6, 3, 3) == 22
        assert len(make_modq_family(6, 3, 3)) == 22

    def test_modq_3_0_5(self):
        fam = make_modq_family(3, 0, 5)
        assert len(fam) == 1
        assert fam.sets[0].members == ()

    def test_modq_cap_checked_before_enumeration(self):
        with pytest.raises(EnumerationCapError):
            make_modq_family(20, 0, 2, cap=100)

    def test_canonical_order_is_lexicographic(self):
        fam = make_modq_family(4, 0, 2)
        members = [s.members for s in fam.sets]
        assert members == sorted(members)

    def test_deterministic_enumeration(self):
        assert make_modq_family(6, 1, 3) == make_modq_family(6, 1, 3)


class TestCharVector:
    def test_examples(self):
        assert char_vector(Subset((1, 3)), 4) == (1, 0, 1, 0)
        assert char_vector(Subset(()), 3) == (0, 0, 0)
        assert char_vector(Subset((1, 2, 3, 4)), 4) == (1, 1, 1, 1)

    def test_member_exceeding_n(self):
        with pytest.raises(ValueError):
            char_vector(Subset((1, 5)), 4)

    @given(st.integers(1, 10).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(1, 10).filter(lambda v: v <= n)))
    ))
    def test_injective_and_weight(self, case):
        n, members = case
        sub = Subset.of(members)
        vec = char_vector(sub, n)
        assert sum(vec) == len(sub)
        assert tuple(i + 1 for i, v in enumerate(vec) if v) == sub.members


class TestBinomial:
    def test_examples(self):
        assert binomial(6, 3) == 20
        assert binomial(20, 10) == 184756
        assert binomial(5, -1) == 0
        assert binomial(5, 6) == 0

    def test_large_exact(self):
        assert binomial(80, 40) == 107507208733336176461620


class TestFamilyInvariants:
    @given(st.integers(1, 8), st.integers(0, 8))
    def test_uniform_size_matches_binomial(self, n, d):
        if d > n:
            return
        assert len(make_uniform_family(n, d)) == binomial(n, d)

    @given(st.integers(1, 8), st.integers(0, 8), st.integers(2, 5))
    def test_modq_size_matches_binomial_sum(self, n, d, q):
        if d > n:
            return
        expected = sum(binomial(n, k) for k in range(n + 1) if k % q == d % q)
        assert len(make_modq_family(n, d, q)) == expected

    @given(st.integers(1, 7), st.integers(0, 7), st.integers(2, 4))
    def test_uniform_contained_in_modq(self, n, d, q):
        if d > n:
            return
        uniform = set(make_uniform_family(n, d).sets)
        modq = set(make_modq_family(n, d, q).sets)
        assert uniform <= modq

    def test_duplicate_subsets_rejected(self):
        with pytest.raises(ValueError):
            SetFamily(3, (Subset((1,)), Subset((1,))))

    def test_subset_must_be_increasing(self):
        with pytest.raises(ValueError):
            Subset((2, 1))
        with pytest.raises(ValueError):
            Subset((1, 1))


class TestParams:
    def test_valid(self):
        params = Params(n=6, p=3, d=3, m=2, q=9)
        assert params.q == 9

    def test_p_must_be_prime(self):
        with pytest.raises(ValueError):
            Params(n=4, p=4, d=2, m=1)

    def test_q_must_be_power_of_p(self):
        with pytest.raises(ValueError):
            Params(n=4, p=2, d=2, m=1, q=6)
        with pytest.raises(ValueError):
            Params(n=4, p=2, d=2, m=1, q=1)

    def test_d_range(self):
        with pytest.raises(ValueError):
            Params(n=4, p=2, d=5, m=1)


class TestPrimality:
    def test_small_values(self):
        primes = [p for p in range(2, 60) if is_prime(p)]
        assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        assert not is_prime(1)
        assert not is_prime(0)
        assert not is_prime(-7)


class TestTextFormat:
    def test_roundtrip(self):
        fam = make_modq_family(4, 0, 2)
        assert parse_family(format_family(fam)) == fam

    def test_empty_line_is_empty_set(self):
        fam = parse_family("n=3\n\n1,2\n")
        assert fam.sets[0].members == ()
        assert fam.sets[1].members == (1, 2)

    def test_header_required(self):
        with pytest.raises(ValueError):
            parse_family("1,2\n")

    def test_bad_member(self):
        with pytest.raises(ValueError):
            parse_family("n=3\n1,x\n")

    def test_members_normalized(self):
        fam = parse_family("n=4\n3,1\n")
        assert fam.sets[0].members == (1, 3)
