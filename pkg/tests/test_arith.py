import pytest
from hypothesis import given, strategies as st

from smoothworld.arith import (
    Factorization,
    PrimeBase,
    ResidueColor,
    color_from_index,
    color_of,
    decompose,
    enumerate_smooth,
    factor_over_base,
    is_prime,
    nth_root_exact,
    nth_root_floor,
    palette_index,
    palette_size,
    power_multiplier,
)
from smoothworld.errors import DomainError, UsageError
from smoothworld.oracles import oracle_smooth_sweep

B235 = PrimeBase((2, 3, 5))
B23 = PrimeBase((2, 3))
B2 = PrimeBase((2,))


def smooth_values(base, limit):
    return st.builds(
        lambda exps: prod_pow(base, exps),
        st.tuples(*(st.integers(0, 6) for _ in base.primes)),
    ).filter(lambda m: m <= limit)


def prod_pow(base, exps):
    out = 1
    for p, e in zip(base.primes, exps):
        out *= p**e
    return out


class TestPrimeBase:
    def test_first_primes(self):
        assert PrimeBase.first(5).primes == (2, 3, 5, 7, 11)

    def test_rejects_nonprime(self):
        with pytest.raises(UsageError):
            PrimeBase((2, 9))

    def test_rejects_unsorted(self):
        with pytest.raises(UsageError):
            PrimeBase((3, 2))

    def test_rejects_empty_and_oversized(self):
        with pytest.raises(UsageError):
            PrimeBase(())
        with pytest.raises(UsageError):
            PrimeBase(tuple(PrimeBase.first(17).primes))

    def test_is_prime_small(self):
        assert [p for p in range(60) if is_prime(p)] == [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
        ]


class TestFactorOverBase:
    def test_72(self):
        assert factor_over_base(72, B235) == Factorization((3, 2, 0), 1)

    def test_one_is_empty_product(self):
        assert factor_over_base(1, B235) == Factorization((0, 0, 0), 1)

    def test_nonsmooth_cofactor(self):
        fact = factor_over_base(14, B235)
        assert fact == Factorization((1, 0, 0), 7)
        assert not fact.is_smooth

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            factor_over_base(0, B235)
        with pytest.raises(DomainError):
            factor_over_base(-5, B235)

    @given(st.integers(1, 10**6))
    def test_reconstruction(self, m):
        fact = factor_over_base(m, B235)
        assert prod_pow(B235, fact.exponents) * fact.cofactor == m
        for p in B235.primes:
            assert fact.cofactor % p != 0


class TestDecompose:
    def test_72_cubefree_split(self):
        d = decompose(72, B235, 3)
        assert (d.q, d.r_part) == (2, 9)
        assert d.color == ResidueColor((0, 2, 0), 3)

    def test_identity(self):
        d = decompose(1, B23, 2)
        assert (d.q, d.r_part, d.color.residues) == (1, 1, (0, 0))

    def test_perfect_cube(self):
        d = decompose(216000, B235, 3)
        assert (d.q, d.r_part, d.color.residues) == (60, 1, (0, 0, 0))

    def test_nonsmooth_is_none(self):
        assert decompose(14, B235, 3) is None

    @given(st.integers(1, 10**6), st.integers(1, 6))
    def test_invariants(self, m, n):
        d = decompose(m, B235, n)
        if d is None:
            assert not factor_over_base(m, B235).is_smooth
        else:
            assert d.q**n * d.r_part == m
            r_fact = factor_over_base(d.r_part, B235)
            assert all(0 <= e < n for e in r_fact.exponents)
            assert d.color.residues == r_fact.exponents


class TestColorOf:
    def test_examples(self):
        assert color_of(72, B235, 3).residues == (0, 2, 0)
        assert color_of(64, B2, 3).residues == (0,)
        assert not color_of(10, B23, 2).is_smooth

    @given(st.integers(1, 400), st.integers(1, 5))
    def test_nth_powers_have_zero_color(self, r, n):
        fact = factor_over_base(r, B235)
        if fact.is_smooth:
            assert color_of(r**n, B235, n).residues == (0, 0, 0)


class TestPowerMultiplier:
    def test_examples(self):
        assert power_multiplier(ResidueColor((0, 2, 0), 3), B235, 3) == 3000
        assert 72 * 3000 == 60**3
        assert power_multiplier(ResidueColor((0,), 2), B2, 2) == 4
        assert power_multiplier(ResidueColor((1,), 2), B2, 2) == 2

    def test_rejects_nonsmooth(self):
        with pytest.raises(DomainError):
            power_multiplier(ResidueColor.non_smooth(2), B2, 2)

    def test_rejects_mismatched_modulus(self):
        with pytest.raises(DomainError):
            power_multiplier(ResidueColor((0, 0), 2), B23, 3)

    def test_soundness_on_pseudorandom_smooth(self):
        # 1000 seeded smooth values: P*m must always be an exact n-th power
        import random

        rng = random.Random(1234)
        for _ in range(1000):
            n = rng.randint(1, 5)
            m = prod_pow(B235, (rng.randint(0, 10), rng.randint(0, 6), rng.randint(0, 4)))
            p_mult = power_multiplier(color_of(m, B235, n), B235, n)
            assert nth_root_exact(p_mult * m, n) is not None


class TestEnumerateSmooth:
    def test_powers_of_two(self):
        assert enumerate_smooth(B2, 10) == [1, 2, 4, 8]

    def test_two_three_20(self):
        assert enumerate_smooth(B23, 20) == [1, 2, 3, 4, 6, 8, 9, 12, 16, 18]

    def test_two_three_100_length(self):
        assert len(enumerate_smooth(B23, 100)) == 20

    @pytest.mark.parametrize("base", [B2, B23, B235])
    def test_matches_naive_sweep(self, base):
        assert enumerate_smooth(base, 10**4) == oracle_smooth_sweep(base.primes, 10**4)

    def test_sorted_unique(self):
        values = enumerate_smooth(B235, 10**5)
        assert values == sorted(set(values))

    def test_limit_cap(self):
        with pytest.raises(UsageError):
            enumerate_smooth(B2, 2**40 + 1)


class TestRoots:
    def test_examples(self):
        assert nth_root_exact(216000, 3) == 60
        assert nth_root_exact(1, 7) == 1
        assert nth_root_exact(50, 2) is None

    @given(st.integers(1, 10**9), st.integers(1, 10))
    def test_floor_root_brackets(self, v, n):
        r = nth_root_floor(v, n)
        assert r**n <= v < (r + 1) ** n

    @given(st.integers(1, 10**4), st.integers(1, 8))
    def test_exact_round_trip(self, r, n):
        assert nth_root_exact(r**n, n) == r

    def test_rejects_bad_args(self):
        with pytest.raises(DomainError):
            nth_root_floor(0, 2)
        with pytest.raises(DomainError):
            nth_root_floor(8, 0)


class TestPalette:
    def test_sizes(self):
        assert palette_size(B235, 3) == 28
        assert palette_size(B2, 1) == 2

    @given(st.integers(1, 1000), st.integers(1, 4))
    def test_index_round_trip(self, m, n):
        color = color_of(m, B235, n)
        idx = palette_index(color, B235)
        assert 0 <= idx < palette_size(B235, n)
        assert color_from_index(idx, B235, n) == color

    def test_exponent_cap(self):
        with pytest.raises(UsageError):
            color_of(5, B2, 17)
