"""The obstruction engine.

For a reduction datum (p, a_p, b_p) and n coprime to p, the residue degree
of every prime above p in the n-torsion field equals the order of the
Frobenius matrix mod n. Modeling the field degree as |GL2(Z/nZ)| (or half
of it for an index-2 image), p splits into degree/order primes, all of
residue degree ord. If F_p[x] has fewer irreducible polynomials of that
degree than there are primes, p divides the index of every monogenic
order: an essential discriminant divisor.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith import gl2_order, irred_count, primes_up_to
from .curves import WeierstrassCurve, trace_of_frobenius
from .errors import ArithmeticBug, InputError
from .frobenius import FrobeniusDatum, enumerate_b, enumerate_data, sigma_mod
from .gl2 import order_mod


class ImageAssumption(enum.Enum):
    """Which Galois image the degree model assumes: a surjective mod-n
    representation, or the index-2 worst case of a Serre curve."""

    FULL_GL2 = "full"
    INDEX2_SUBGROUP = "index2"


class Classification(enum.Enum):
    OBSTRUCTION = "obstruction"
    OBSTRUCTION_ONLY_FULL_IMAGE = "red"
    NO_OBSTRUCTION = "no_obstruction"


@dataclass(frozen=True)
class Verdict:
    """Outcome of the splitting-versus-supply comparison for one (datum, n)."""

    p: int
    a_p: int
    b_p: int
    n: int
    residue_degree: int
    num_primes: int
    irred_supply: int
    classification: Classification


def test(
    datum: FrobeniusDatum,
    n: int,
    image: ImageAssumption = ImageAssumption.FULL_GL2,
) -> Verdict:
    """Compare the number of primes above p in the n-torsion field with
    the count of irreducible polynomials of the matching degree.

    Under FULL_GL2 the classification is three-way: an entry obstructed
    under the full image but not under an index-2 image is flagged
    OBSTRUCTION_ONLY_FULL_IMAGE (a "red" entry). Under INDEX2_SUBGROUP the
    verdict is binary for that smaller degree.
    """
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    if math.gcd(n, datum.p) != 1:
        raise InputError(f"n = {n} is not coprime to p = {datum.p}")
    ord_sigma = order_mod(sigma_mod(datum, n))
    full_degree = gl2_order(n)
    if full_degree % ord_sigma != 0:
        raise ArithmeticBug(f"order {ord_sigma} does not divide |GL2| for n={n}")
    supply = irred_count(ord_sigma, datum.p)

    # obstruction under full image: supply < |GL2|/ord;
    # under index 2: supply < (|GL2|/2)/ord, compared without dividing
    obstructed_full = supply * ord_sigma < full_degree
    obstructed_half = supply * ord_sigma * 2 < full_degree

    if image is ImageAssumption.FULL_GL2:
        degree = full_degree
        if obstructed_half:
            cls = Classification.OBSTRUCTION
        elif obstructed_full:
            cls = Classification.OBSTRUCTION_ONLY_FULL_IMAGE
        else:
            cls = Classification.NO_OBSTRUCTION
    else:
        degree = full_degree // 2
        if degree % ord_sigma != 0:
            # no index-2 subgroup of GL2(Z/nZ) contains this Frobenius
            # class, so the halved degree model is inconsistent here
            raise InputError(
                f"index-2 image assumption is inconsistent at n={n}: "
                f"order {ord_sigma} does not divide {degree}"
            )
        cls = (
            Classification.OBSTRUCTION
            if obstructed_half
            else Classification.NO_OBSTRUCTION
        )
    return Verdict(
        p=datum.p,
        a_p=datum.a_p,
        b_p=datum.b_p,
        n=n,
        residue_degree=ord_sigma,
        num_primes=degree // ord_sigma,
        irred_supply=supply,
        classification=cls,
    )


@dataclass(frozen=True)
class ScanReport:
    """All obstructed n up to n_max for one datum: one table row."""

    datum: FrobeniusDatum
    n_max: int
    obstructed: tuple[Verdict, ...]

    def entries(self) -> tuple[tuple[int, Classification], ...]:
        return tuple((v.n, v.classification) for v in self.obstructed)


def scan(datum: FrobeniusDatum, n_max: int) -> ScanReport:
    """test() every n in [2, n_max] coprime to p, keeping obstructions."""
    if n_max < 2:
        raise InputError(f"n_max must be >= 2, got {n_max}")
    hits = []
    for n in range(2, n_max + 1):
        if math.gcd(n, datum.p) != 1:
            continue
        verdict = test(datum, n, ImageAssumption.FULL_GL2)
        if verdict.classification is not Classification.NO_OBSTRUCTION:
            hits.append(verdict)
    return ScanReport(datum, n_max, tuple(hits))


def full_table(p: int, n_max: int) -> list[ScanReport]:
    """One ScanReport per admissible (a_p, b_p), in table row order."""
    return [scan(datum, n_max) for datum in enumerate_data(p)]


@dataclass(frozen=True)
class SupersingularCheck:
    """Orders of the supersingular Frobenius matrices mod p+1 and the
    obstruction comparison at n = p + 1."""

    p: int
    orders: tuple[int, ...]  # one per admissible b (b=1, and b=2 if p = 3 mod 4)
    num_primes_full: int
    irred_supply: int
    obstructed: bool


def supersingular_check(p: int) -> SupersingularCheck:
    """For supersingular p > 3, verify that the Frobenius matrix has order
    2 mod p+1 for every admissible b, and compare |GL2(Z/(p+1)Z)|/2
    against the count of irreducible quadratics over F_p.
    """
    if p <= 3:
        raise InputError(f"supersingular check requires p > 3, got {p}")
    bs = enumerate_b(p, 0)
    orders = tuple(
        order_mod(sigma_mod(FrobeniusDatum.create(p, 0, b), p + 1)) for b in bs
    )
    supply = irred_count(2, p)
    num_primes = gl2_order(p + 1) // 2
    return SupersingularCheck(
        p=p,
        orders=orders,
        num_primes_full=num_primes,
        irred_supply=supply,
        obstructed=num_primes > supply,
    )


@dataclass(frozen=True)
class CorollaryThreshold:
    """Least supersingular-style threshold prime for a given adelic index."""

    index: int
    prime: int  # least p > 3 passing the exact group-order criterion
    exact_lhs: int  # |GL2(Z/(p+1)Z)| / (4 * index) at that prime, floor
    irred_supply: int
    bound_prime: int  # least p > 3 satisfying the (3/16 I)(p+1)^4 > p^2 - p bound


def corollary_threshold(index: int) -> CorollaryThreshold:
    """Search primes p > 3 for the first one where an adelic image of
    index `index` still forces more primes above p than irreducible
    quadratics: |GL2(Z/(p+1)Z)| / (2 * index * 2) > irred(2, p).

    The closed-form lower-bound version (3/(16*index))*(p+1)^4 > p^2 - p
    is evaluated alongside for comparison; it can disagree at small p
    where (p+1)^4 overestimates the group order.
    """
    if index < 1:
        raise InputError(f"index must be >= 1, got {index}")
    prime = exact_lhs = supply = None
    bound_prime = None
    p = 3
    while prime is None or bound_prime is None:
        p = _next_prime(p)
        if prime is None and gl2_order(p + 1) > 4 * index * irred_count(2, p):
            prime = p
            exact_lhs = gl2_order(p + 1) // (4 * index)
            supply = irred_count(2, p)
        if bound_prime is None and 3 * (p + 1) ** 4 > 16 * index * (p * p - p):
            bound_prime = p
    return CorollaryThreshold(index, prime, exact_lhs, supply, bound_prime)


def _next_prime(p: int) -> int:
    from .arith import is_prime

    p += 1
    while not is_prime(p):
        p += 1
    return p


class CurvePrimeStatus(enum.Enum):
    CONFIRMED = "confirmed"  # every admissible b yields an obstruction
    CONDITIONAL = "conditional"  # verdicts differ across b or need full image
    NONE = "none"  # no admissible b yields an obstruction
    SKIPPED_BAD_REDUCTION = "skipped_bad_reduction"
    SKIPPED_DIVIDES_N = "skipped_divides_n"


@dataclass(frozen=True)
class CurvePrimeReport:
    p: int
    a_p: int | None
    status: CurvePrimeStatus
    verdicts: tuple[Verdict, ...]  # one per admissible b, empty if skipped


def essential_divisor_scan(
    curve: WeierstrassCurve, n: int, p_max: int
) -> list[CurvePrimeReport]:
    """For each prime p <= p_max of good reduction with p coprime to n,
    count points to get a_p, then test every admissible b_p.

    The endomorphism-order index of the actual curve is not computed, so
    an obstruction is CONFIRMED only when all admissible b agree; mixed
    verdicts (or verdicts that hold only under a surjective image) are
    CONDITIONAL.
    """
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    if p_max < 2:
        raise InputError(f"p_max must be >= 2, got {p_max}")
    reports = []
    for p in primes_up_to(p_max):
        if n % p == 0:
            reports.append(
                CurvePrimeReport(p, None, CurvePrimeStatus.SKIPPED_DIVIDES_N, ())
            )
            continue
        if not curve.has_good_reduction(p):
            reports.append(
                CurvePrimeReport(p, None, CurvePrimeStatus.SKIPPED_BAD_REDUCTION, ())
            )
            continue
        a_p = trace_of_frobenius(curve, p)
        verdicts = tuple(
            test(FrobeniusDatum.create(p, a_p, b), n, ImageAssumption.FULL_GL2)
            for b in enumerate_b(p, a_p)
        )
        classes = {v.classification for v in verdicts}
        if classes == {Classification.OBSTRUCTION}:
            status = CurvePrimeStatus.CONFIRMED
        elif classes == {Classification.NO_OBSTRUCTION}:
            status = CurvePrimeStatus.NONE
        else:
            status = CurvePrimeStatus.CONDITIONAL
        reports.append(CurvePrimeReport(p, a_p, status, verdicts))
    return reports
