from itertools import product
from math import isqrt

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from girthkiss import number_theory as nt


def sieve(limit):
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return flags


def brute_r3(n):
    """Count (a, b, c) by scanning an (a, b) grid and solving for c."""
    r = isqrt(n)
    a = np.arange(-r, r + 1, dtype=np.int64)
    rest = n - (a[:, None] ** 2 + a[None, :] ** 2)
    rest = rest[rest >= 0]
    c = np.array([isqrt(int(t)) for t in rest], dtype=np.int64)
    hit = c * c == rest
    return int(np.sum(np.where(c[hit] == 0, 1, 2)))


def brute_eq7(p, q, k):
    """Solutions of y0^2 + (2q)^2 (y1^2+y2^2+y3^2) = p^k, y0 > 0, p not dividing every y_i.

    Scans every y0 and every (y1, y2, y3) representing the remainder.
    """
    pk = p**k
    m = 4 * q * q
    total = 0
    for y0 in range(1, isqrt(pk) + 1):
        rest = pk - y0 * y0
        if rest % m:
            continue
        s = rest // m
        r = isqrt(s)
        for y1, y2 in product(range(-r, r + 1), repeat=2):
            t = s - y1 * y1 - y2 * y2
            if t < 0:
                continue
            y3 = isqrt(t)
            if y3 * y3 != t:
                continue
            for z in {y3, -y3}:
                if not all(y % p == 0 for y in (y0, y1, y2, z)):
                    total += 1
    return total


ODD_PRIMES = [3, 5, 7, 11, 13, 17, 29, 37, 101]


class TestPrimality:
    def test_against_sieve(self):
        flags = sieve(20000)
        assert all(nt.is_prime(k) == bool(flags[k]) for k in range(20001))

    @pytest.mark.parametrize("n", [2**61 - 1, 2**64 - 59, 1_000_000_007, 4_294_967_291])
    def test_large_primes(self, n):
        assert nt.is_prime(n)

    @pytest.mark.parametrize("n", [561, 41041, 3_215_031_751, 3_825_123_056_546_413_051, (2**32 + 15) * (2**31 - 1)])
    def test_pseudoprimes_rejected(self, n):
        assert not nt.is_prime(n)

    @pytest.mark.parametrize("n", [-1, 2**64])
    def test_range(self, n):
        with pytest.raises(ValueError):
            nt.is_prime(n)


class TestResidues:
    @pytest.mark.parametrize("p", ODD_PRIMES)
    def test_legendre_against_squares(self, p):
        squares = {x * x % p for x in range(1, p)}
        for a in range(p):
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert nt.legendre_symbol(a, p) == expected

    @pytest.mark.parametrize("p", ODD_PRIMES)
    def test_sqrt_mod(self, p):
        for a in range(p):
            roots = sorted(x for x in range(p) if x * x % p == a)
            if roots:
                assert nt.sqrt_mod(a, p) == roots[0]
            else:
                with pytest.raises(ValueError):
                    nt.sqrt_mod(a, p)

    def test_sqrt_minus_one_large(self):
        q = 1_000_000_009
        r = nt.sqrt_mod(-1, q)
        assert r * r % q == q - 1 and r <= q - r

    @pytest.mark.parametrize("p", [4, 9, 2, 1])
    def test_requires_odd_prime(self, p):
        with pytest.raises(ValueError):
            nt.legendre_symbol(3, p)

    @given(st.integers(2, 50), st.integers(0, 10**12))
    def test_ceil_log(self, base, x):
        e = nt.ceil_log(base, x)
        assert base**e >= x
        assert e == 0 or base ** (e - 1) < x


class TestThreeSquares:
    def test_small_values(self):
        assert (nt.r3(0), nt.r3(1), nt.r3(2), nt.r3(3), nt.r3(7)) == (1, 6, 12, 8, 0)

    def test_against_brute_force(self):
        assert [nt.r3(n) for n in range(400)] == [brute_r3(n) for n in range(400)]

    def test_r2_against_brute_force(self):
        for n in range(500):
            r = isqrt(n)
            expected = sum(1 for a, b in product(range(-r, r + 1), repeat=2) if a * a + b * b == n)
            assert nt.r2(n) == expected

    def test_table_matches_pointwise(self):
        table = nt.r3_table(5000)
        assert [int(t) for t in table[:400]] == [brute_r3(n) for n in range(400)]
        assert [int(table[n]) for n in range(0, 5001, 37)] == [nt.r3(n) for n in range(0, 5001, 37)]

    @pytest.mark.parametrize("n", [10**9, 999_999_937, 456, 2 * 5**8 - 4 * 37**2])
    def test_large_pointwise_positive(self, n):
        assert (nt.r3(n) > 0) == nt.is_sum_of_three_squares(n)

    def test_range(self):
        with pytest.raises(ValueError):
            nt.r3(10**9 + 1)

    def test_legendre_form(self):
        assert not nt.is_sum_of_three_squares(7 * 4**5)
        assert nt.is_sum_of_three_squares(6 * 4**5)


class TestPrimeSearch:
    def test_find_q_5_2(self):
        res = nt.find_q(5, 2)
        assert res.q == 37
        assert res.checks.all()
        # 29 is the only smaller candidate = 1 mod 4 in (25, 50) and 5 is a square mod 29
        assert nt.legendre_symbol(5, 29) == 1

    def test_find_q_exhaustive(self):
        for p in (5, 13, 17):
            for k in (1, 2, 3):
                pk = p**k
                brute = [
                    q
                    for q in range(pk + 1, 2 * pk)
                    if q % 4 == 1 and nt.is_prime(q) and nt.legendre_symbol(p, q) == -1 and (q * q - p) % 16
                ]
                if brute:
                    assert nt.find_q(p, k).q == brute[0]
                else:
                    with pytest.raises(nt.NotFoundError):
                        nt.find_q(p, k)

    def test_not_found_for_5_1(self):
        with pytest.raises(nt.NotFoundError):
            nt.find_q(5, 1)

    @pytest.mark.parametrize("p", [3, 4, 7])
    def test_requires_p_1_mod_4(self, p):
        with pytest.raises(ValueError):
            nt.find_q(p, 2)

    @pytest.mark.parametrize("p,k", [(5, 2), (5, 4), (13, 2), (13, 4), (17, 2), (17, 4)])
    def test_mod16_conditions(self, p, k):
        q = nt.find_q(p, k).q
        assert nt.check_mod16_conditions(p, q, k) == (True, True)

    def test_mod16_example(self):
        # 5^5 - 37^2 = 1756 = 12 mod 16
        assert (5**5 - 37**2) % 16 == 12
        assert nt.check_mod16_conditions(5, 37, 2)[0]


class TestLpsArithmetic:
    @pytest.mark.parametrize("p,q,g,branch", [(5, 13, 8, 1), (5, 17, 8, 1), (13, 37, 8, 2), (5, 37, 10, 2)])
    def test_girth_formula(self, p, q, g, branch):
        assert nt.lps_girth_branch(p, q) == (g, branch)

    def test_girth_formula_rejects(self):
        with pytest.raises(ValueError):
            nt.lps_girth_formula(5, 29)  # (5/29) = +1
        with pytest.raises(ValueError):
            nt.lps_girth_formula(13, 5)

    @pytest.mark.parametrize("p,q,k", [(5, 13, 8), (5, 17, 8), (13, 37, 8), (5, 13, 10), (5, 37, 10), (13, 5, 6)])
    def test_eq7_against_brute_force(self, p, q, k):
        assert nt.count_eq7_solutions(p, q, k) == brute_eq7(p, q, k)

    def test_eq7_overflow(self):
        with pytest.raises(OverflowError):
            nt.count_eq7_solutions(5, 13, 40)

    @pytest.mark.parametrize("p,q,value", [(5, 13, brute_r3(5**4 - 13**2)), (5, 17, brute_r3(5**4 - 17**2))])
    def test_loops_lower_bound_first_branch(self, p, q, value):
        assert nt.loops_id_lower_bound(p, q) == value

    def test_loops_lower_bound_second_branch(self):
        assert nt.loops_id_lower_bound(13, 37) == brute_r3(2 * 13**4 - 4 * 37**2) == 1728


def test_loops_lower_bound_both_readings_below_count():
    # reading the case split on p^(g/2) - q^2 with the actual girth instead of the girth branch
    literal = nt.r3(13**4 - 37**2)
    assert nt.is_sum_of_three_squares(13**4 - 37**2)
    count = nt.count_eq7_solutions(13, 37, 8)
    assert literal <= nt.loops_id_lower_bound(13, 37) <= count
