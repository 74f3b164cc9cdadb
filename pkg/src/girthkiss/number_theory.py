"""Exact integer arithmetic: primality, Legendre symbols, three-square counts,
the prime search for the super-linear LPS subsequence and the closed-geodesic
counting oracle for LPS graphs.

No branch decision anywhere in this module goes through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

UINT64_LIMIT = 1 << 64
INT64_MAX = (1 << 63) - 1
R3_LIMIT = 10**9

# Deterministic for every n < 3.3e24, in particular all 64-bit integers.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotFoundError(LookupError):
    pass


def is_prime(n: int) -> bool:
    if n < 0 or n >= UINT64_LIMIT:
        raise ValueError("is_prime expects 0 <= n < 2**64")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_odd_prime(p: int, name: str = "p") -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{name}={p} must be an odd prime")


def legendre_symbol(a: int, p: int) -> int:
    """Euler's criterion: a^((p-1)/2) mod p, mapped to -1, 0 or 1."""
    _require_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod(a: int, p: int) -> int:
    """Smallest square root of ``a`` modulo the odd prime ``p`` (Tonelli-Shanks)."""
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    if legendre_symbol(a, p) != 1:
        raise ValueError(f"{a} is not a square modulo {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def ceil_log(base: int, x: int) -> int:
    """Smallest e >= 0 with base**e >= x, by integer powers only."""
    if base < 2:
        raise ValueError("base must be >= 2")
    e, power = 0, 1
    while power < x:
        power *= base
        e += 1
    return e


def is_sum_of_three_squares(n: int) -> bool:
    """Legendre: n is a sum of three squares unless n = 4^a (8b + 7)."""
    if n < 0:
        return False
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


@lru_cache(maxsize=None)
def _small_primes(limit: int) -> tuple[int, ...]:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return tuple(int(x) for x in np.flatnonzero(sieve))


def r2(n: int) -> int:
    """Ordered signed representations of n as a sum of two squares.

    Uses r2(n) = 4 * prod over p = 1 mod 4 of (e_p + 1) when every prime
    3 mod 4 divides n to an even power, and 0 otherwise.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    result = 4
    while n % 2 == 0:
        n //= 2
    for p in _small_primes(isqrt(R3_LIMIT) + 1):
        if p == 2:
            continue
        if p * p > n:
            break
        if n % p:
            continue
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if p % 4 == 3:
            if e % 2:
                return 0
        else:
            result *= e + 1
    if n > 1:
        if n % 4 == 3:
            return 0
        result *= 2
    return result


def r3(n: int) -> int:
    """Number of (a, b, c) in Z^3 with a^2 + b^2 + c^2 = n, for 0 <= n <= 10**9."""
    if n < 0 or n > R3_LIMIT:
        raise ValueError(f"r3 argument {n} outside 0..{R3_LIMIT}")
    if not is_sum_of_three_squares(n):
        return 0
    total = r2(n)
    for c in range(1, isqrt(n) + 1):
        total += 2 * r2(n - c * c)
    return total


def r3_table(limit: int) -> np.ndarray:
    """r3(0..limit) in one pass, by convolving the square indicator three times."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    theta = np.zeros(limit + 1, dtype=np.int64)
    roots = np.arange(isqrt(limit) + 1)
    theta[roots * roots] = 2
    theta[0] = 1
    two = np.zeros(limit + 1, dtype=np.int64)
    for c in roots:
        sq = int(c * c)
        two[sq:] += theta[sq] * theta[: limit + 1 - sq]
    three = np.zeros(limit + 1, dtype=np.int64)
    for c in roots:
        sq = int(c * c)
        three[sq:] += theta[sq] * two[: limit + 1 - sq]
    return three


# --------------------------------------------------------------------------
# LPS-specific number theory


def _require_lps_pair(p: int, q: int) -> None:
    for name, x in (("p", p), ("q", q)):
        _require_odd_prime(x, name)
        if x % 4 != 1:
            raise ValueError(f"{name}={x} must be 1 mod 4")
    if p == q:
        raise ValueError("p and q must differ")
    if legendre_symbol(p, q) != -1:
        raise ValueError(f"Legendre symbol ({p}/{q}) must be -1")


@dataclass(frozen=True)
class PrimeSearchChecks:
    q_is_1_mod_4: bool
    legendre_is_minus_1: bool
    q_squared_not_p_mod_16: bool
    in_interval: bool

    def all(self) -> bool:
        return all(self.__dict__.values())


@dataclass(frozen=True)
class PrimeSearchResult:
    p: int
    k: int
    q: int
    checks: PrimeSearchChecks


def prime_search_checks(p: int, k: int, q: int) -> PrimeSearchChecks:
    pk = p**k
    return PrimeSearchChecks(
        q_is_1_mod_4=q % 4 == 1,
        legendre_is_minus_1=legendre_symbol(p, q) == -1,
        q_squared_not_p_mod_16=(q * q - p) % 16 != 0,
        in_interval=pk < q < 2 * pk,
    )


def find_q(p: int, k: int) -> PrimeSearchResult:
    """Smallest prime q = 1 mod 4 with (p/q) = -1, q^2 != p mod 16 and p^k < q < 2p^k."""
    _require_odd_prime(p)
    if p % 4 != 1:
        raise ValueError(f"p={p} must be 1 mod 4")
    if k < 1:
        raise ValueError("k must be positive")
    pk = p**k
    if 2 * pk >= UINT64_LIMIT:
        raise OverflowError("2 p^k does not fit in 64 bits")
    q = pk + 1
    q += (1 - q) % 4
    while q < 2 * pk:
        if (q * q - p) % 16 and is_prime(q) and legendre_symbol(p, q) == -1:
            checks = prime_search_checks(p, k, q)
            if not checks.all():
                raise AssertionError(f"search accepted q={q} failing {checks}")
            return PrimeSearchResult(p, k, q, checks)
        q += 4
    raise NotFoundError(f"no admissible prime q in ({pk}, {2 * pk}) for p={p}, k={k}")


def check_mod16_conditions(p: int, q: int, k: int) -> tuple[bool, bool]:
    """Whether 16 fails to divide p^ceil(log_p q^2) - q^2 and 2p^ceil(log_p 2q^2) - 4q^2."""
    if k % 2:
        raise ValueError("k must be even")
    q2 = q * q
    first = p ** ceil_log(p, q2) - q2
    second = 2 * p ** ceil_log(p, 2 * q2) - 4 * q2
    return first % 16 != 0, second % 16 != 0


def lps_girth_branch(p: int, q: int) -> tuple[int, int]:
    """Return (girth, branch) where branch 1 uses q^2 and branch 2 uses 2q^2."""
    _require_lps_pair(p, q)
    if q <= p:
        raise ValueError("the girth formula is stated for q > p")
    q2 = q * q
    e = ceil_log(p, q2)
    if is_sum_of_three_squares(p**e - q2):
        return 2 * e, 1
    return 2 * ceil_log(p, 2 * q2), 2


def lps_girth_formula(p: int, q: int) -> int:
    return lps_girth_branch(p, q)[0]


def count_eq7_solutions(p: int, q: int, k: int) -> int:
    """Solutions of y0^2 + (2q)^2 (y1^2 + y2^2 + y3^2) = p^k with y0 > 0 and p not dividing all y_i.

    Equals the number of closed walks of length k at the identity of X^{p,q}
    that never backtrack (before closing up).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    pk = p**k
    if pk > INT64_MAX:
        raise OverflowError("p^k does not fit in 64 bits")
    mod = 4 * q * q
    total = 0
    for y0 in range(1, isqrt(pk) + 1):
        rest = pk - y0 * y0
        if rest % mod:
            continue
        m = rest // mod
        count = r3(m)
        if y0 % p == 0 and m % (p * p) == 0:
            count -= r3(m // (p * p))
        total += count
    return total


def loops_id_lower_bound(p: int, q: int) -> int:
    """r3 lower bound on shortest closed geodesics through the identity, matched to the girth branch."""
    g, branch = lps_girth_branch(p, q)
    half = p ** (g // 2)
    if branch == 1:
        return r3(half - q * q)
    return r3(2 * half - 4 * q * q)
