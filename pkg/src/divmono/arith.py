"""Exact integer utilities: factorization, Möbius, CRT, and the two
counting formulas (order of GL2(Z/nZ) and irreducible polynomials over F_p).

Everything here is pure and runs on Python ints, so there is no overflow
to worry about; trial division is plenty at the scale of the scans
(moduli < 1000, group orders around 10^12).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

from .errors import ArithmeticBug, InputError


@dataclass(frozen=True)
class Factorization:
    """A positive integer with its canonical prime factorization.

    ``factors`` is a tuple of (prime, exponent) pairs in strictly
    increasing prime order; empty for value 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        prev = 1
        for p, e in self.factors:
            if e < 1 or p <= prev:
                raise ArithmeticBug(f"malformed factorization of {self.value}")
            prev = p
            prod *= p**e
        if prod != self.value:
            raise ArithmeticBug(f"factorization does not multiply back to {self.value}")


@lru_cache(maxsize=None)
def factorize(m: int) -> Factorization:
    """Trial-division factorization of m >= 1."""
    if m < 1:
        raise InputError(f"factorize requires m >= 1, got {m}")
    value = m
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(value, tuple(factors))


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = factorize(m).factors
    return len(f) == 1 and f[0][1] == 1


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound by sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for d in range(2, math.isqrt(bound) + 1):
        if sieve[d]:
            sieve[d * d :: d] = bytearray(len(sieve[d * d :: d]))
    return [i for i, flag in enumerate(sieve) if flag]


def divisors(m: int) -> list[int]:
    """All positive divisors of m, sorted increasing."""
    divs = [1]
    for p, e in factorize(m).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(m: int) -> int:
    """Möbius function: 0 unless m is squarefree, else (-1)^#prime factors."""
    if m < 1:
        raise InputError(f"mobius requires m >= 1, got {m}")
    fact = factorize(m)
    if any(e > 1 for _, e in fact.factors):
        return 0
    return -1 if len(fact.factors) % 2 else 1


@lru_cache(maxsize=None)
def gl2_order(n: int) -> int:
    """|GL2(Z/nZ)| = prod over p^e || n of p^(4(e-1)) (p^2-1)(p^2-p)."""
    if n < 2:
        raise InputError(f"gl2_order requires n >= 2, got {n}")
    out = 1
    for p, e in factorize(n).factors:
        out *= p ** (4 * (e - 1)) * (p * p - 1) * (p * p - p)
    return out


@lru_cache(maxsize=None)
def irred_count(m: int, p: int) -> int:
    """Number of monic irreducible polynomials of degree m over F_p:
    (1/m) * sum over d | m of p^d * mu(m/d).
    """
    if m < 1:
        raise InputError(f"irred_count requires degree m >= 1, got {m}")
    if not is_prime(p):
        raise InputError(f"irred_count requires p prime, got {p}")
    total = sum(p**d * mobius(m // d) for d in divisors(m))
    if total % m != 0:
        raise ArithmeticBug(f"Möbius sum {total} not divisible by {m}")
    count = total // m
    if count <= 0:
        raise ArithmeticBug(f"irred_count({m}, {p}) came out nonpositive")
    return count


def crt_pairwise(residues: list[tuple[int, int]]) -> tuple[int, int]:
    """Combine (residue, modulus) pairs with pairwise coprime moduli into
    the unique residue modulo their product.
    """
    if not residues:
        return (0, 1)
    if any(m < 1 for _, m in residues):
        raise InputError("moduli must be positive")
    residues = [(r % m, m) for r, m in residues]

    def combine(acc: tuple[int, int], nxt: tuple[int, int]) -> tuple[int, int]:
        r1, m1 = acc
        r2, m2 = nxt
        g, s, _ = _xgcd(m1, m2)
        if g != 1:
            raise InputError(f"moduli {m1} and {m2} are not coprime")
        m = m1 * m2
        # r1 + m1 * s * (r2 - r1) is r1 mod m1 and r2 mod m2
        return ((r1 + m1 * s * (r2 - r1)) % m, m)

    return reduce(combine, residues)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0
