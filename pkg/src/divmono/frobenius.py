"""Frobenius reduction data (p, a_p, b_p) and the integral matrix that
represents the Frobenius class in every prime-to-p torsion field.

The admissible (a_p, b_p) pairs are enumerated arithmetically: a_p runs
over the Hasse range, and b_p over the indices whose square divides
a_p^2 - 4p with quotient a quadratic discriminant (0 or 1 mod 4). Every
such pair is realized by some curve over F_p, so table rows are keyed by
(a_p, b_p) rather than by specific curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import is_prime
from .errors import ArithmeticBug, InputError
from .gl2 import MatModN


@dataclass(frozen=True)
class FrobeniusDatum:
    """Reduction datum (p, a_p, b_p) with derived discriminants.

    delta_pi = a_p^2 - 4p is the discriminant of x^2 - a_p x + p;
    delta_end = delta_pi / b_p^2 is the discriminant of the endomorphism
    order; delta_parity is 0 or 1 according to delta_end mod 4.
    """

    p: int
    a_p: int
    b_p: int
    delta_pi: int
    delta_end: int
    delta_parity: int

    @classmethod
    def create(cls, p: int, a_p: int, b_p: int) -> "FrobeniusDatum":
        if not is_prime(p):
            raise InputError(f"p = {p} is not prime")
        if a_p * a_p > 4 * p:
            raise InputError(f"Hasse bound violated: a_p^2 = {a_p * a_p} > 4p = {4 * p}")
        if b_p < 1:
            raise InputError(f"b_p must be positive, got {b_p}")
        delta_pi = a_p * a_p - 4 * p
        if delta_pi % (b_p * b_p) != 0:
            raise InputError(f"b_p^2 = {b_p * b_p} does not divide {delta_pi}")
        delta_end = delta_pi // (b_p * b_p)
        if delta_end % 4 not in (0, 1):
            raise InputError(
                f"delta_end = {delta_end} is not 0 or 1 mod 4; "
                f"b_p = {b_p} is not an admissible index for (p, a_p) = ({p}, {a_p})"
            )
        return cls(p, a_p, b_p, delta_pi, delta_end, delta_end % 4)

    @property
    def is_supersingular(self) -> bool:
        return self.a_p % self.p == 0


def admissible_traces(p: int) -> list[int]:
    """All traces a with a^2 <= 4p, ascending."""
    if not is_prime(p):
        raise InputError(f"p = {p} is not prime")
    bound = math.isqrt(4 * p)
    return list(range(-bound, bound + 1))


def is_supersingular_trace(p: int, a_p: int) -> bool:
    return a_p % p == 0


def enumerate_b(p: int, a_p: int) -> list[int]:
    """All admissible indices b >= 1 for the trace a_p: b^2 must divide
    a_p^2 - 4p and the quotient must be 0 or 1 mod 4.
    """
    if not is_prime(p) or a_p * a_p > 4 * p:
        raise InputError(f"({p}, {a_p}) is not an admissible reduction datum")
    delta_pi = a_p * a_p - 4 * p
    out = []
    b = 1
    while b * b <= -delta_pi:
        if delta_pi % (b * b) == 0 and (delta_pi // (b * b)) % 4 in (0, 1):
            out.append(b)
        b += 1
    return out


def enumerate_data(p: int) -> list[FrobeniusDatum]:
    """All admissible data for p, in table order: grouped by |a_p|, then
    by b_p ascending, positive trace before negative.
    """
    data = [
        FrobeniusDatum.create(p, a, b)
        for a in admissible_traces(p)
        for b in enumerate_b(p, a)
    ]
    data.sort(key=lambda d: (abs(d.a_p), d.b_p, 0 if d.a_p >= 0 else 1))
    return data


def sigma(datum: FrobeniusDatum) -> tuple[tuple[int, int], tuple[int, int]]:
    """The integral matrix representing the Frobenius class:

        [ (a_p + b_p*delta)/2          b_p             ]
        [ b_p*(delta_end - delta)/4    (a_p - b_p*delta)/2 ]

    with trace a_p and determinant p. All divisions are exact for valid
    data (delta matches the parities of a_p and b_p).
    """
    a, b = datum.a_p, datum.b_p
    delta = datum.delta_parity
    top = a + b * delta
    bot = a - b * delta
    lower_left = b * (datum.delta_end - delta)
    if top % 2 or bot % 2 or lower_left % 4:
        raise ArithmeticBug(f"non-integral Frobenius matrix for {datum}")
    mat = ((top // 2, b), (lower_left // 4, bot // 2))
    tr = mat[0][0] + mat[1][1]
    det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if tr != a or det != datum.p:
        raise ArithmeticBug(f"Frobenius matrix has wrong char poly for {datum}")
    return mat


def sigma_mod(datum: FrobeniusDatum, n: int) -> MatModN:
    """sigma reduced modulo n; requires gcd(n, p) = 1 so the matrix is
    invertible (its determinant is p).
    """
    if n < 2:
        raise InputError(f"modulus must be >= 2, got {n}")
    if math.gcd(n, datum.p) != 1:
        raise InputError(f"n = {n} is not coprime to p = {datum.p}")
    (s11, s12), (s21, s22) = sigma(datum)
    return MatModN(s11, s12, s21, s22, n)
