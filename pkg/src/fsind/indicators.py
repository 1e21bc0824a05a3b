"""Indicator engines: brute-force evaluation over (group, cocycle) pairs,
closed-form evaluators for the built-in families, derived quantities, and the
divisibility analyzer for the Frobenius property.

The n-th indicator of a pair (Gamma, omega) is

    nu_n = sum over g with g^n = 1 of prod_{k=1}^{n-1} omega(g, g^k, g),

an exact cyclotomic integer.  The brute-force engine accumulates integer
exponent counts per root order and builds a single exact value at the end, so
the hot loop stays in machine arithmetic.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .cyclotomic import (
    CyclotomicInteger,
    divide_by_sqrt_p_and_test,
    divisors,
    factorize,
    root,
    sqrt_int,
)
from .cocycles import c_omega
from .extensions import GTCategory


def b_p(p, n):
    """The p-adic valuation of n."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# brute force


def nu_brute(cat, n, jobs=None):
    """The exact n-th indicator of a GTCategory by direct summation."""
    if n < 1:
        raise ValueError("n must be positive")
    grp = cat.group
    omega = cat.omega
    elements = grp.torsion(n)
    if jobs and jobs > 1 and len(elements) > 1:
        chunks = [elements[i::jobs] for i in range(jobs)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            partials = list(
                pool.map(lambda ch: _exponent_counts(grp, omega, ch, n), chunks)
            )
        counts: dict[int, int] = {}
        for part in partials:
            for e, c in part.items():
                counts[e] = counts.get(e, 0) + c
    else:
        counts = _exponent_counts(grp, omega, elements, n)
    return CyclotomicInteger(omega.value_order, counts)


def _exponent_counts(grp, omega, elements, n):
    m = omega.value_order
    f = omega.exp_fn
    mul = grp.mul
    counts: dict[int, int] = {}
    for g in elements:
        acc = 0
        gk = g
        for _ in range(1, n):
            acc += f(g, gk, g)
            gk = mul(gk, g)
        acc %= m
        counts[acc] = counts.get(acc, 0) + 1
    return counts


def nu_group_algebra(grp, n):
    """|{g : g^n = 1}| as an exact integer value."""
    return CyclotomicInteger.from_int(len(grp.torsion(n)))


# ---------------------------------------------------------------------------
# closed forms


def nu_h2n2_closed(n_param, xi_exp, n):
    """Closed form for the dimension-2N^2 family (always a rational integer)."""
    if n_param < 2:
        raise ValueError("N must be at least 2")
    if n < 1:
        raise ValueError("n must be positive")
    big_n = n_param
    d = math.gcd(big_n, n)
    if n % 2 == 1:
        return CyclotomicInteger.from_int(d * d)
    ord_xi = big_n // math.gcd(big_n, xi_exp % big_n) if xi_exp % big_n else 1
    if b_p(2, big_n) == b_p(2, ord_xi) == b_p(2, n) - 1 and b_p(2, big_n) >= 1:
        return CyclotomicInteger.from_int(d * d)
    return CyclotomicInteger.from_int(d * d + big_n * math.gcd(big_n, n // 2))


def nu_hn3_closed(n_param, xi_exp, zeta_exp, n):
    """Closed form for the dimension-N^3 family (N odd).

    Lies in Z[zeta_3] in the exceptional branch, otherwise a rational integer.
    """
    if n_param % 2 == 0 or n_param < 3:
        raise ValueError("N must be odd and at least 3")
    if n < 1:
        raise ValueError("n must be positive")
    big_n = n_param
    d = math.gcd(big_n, n)
    e1 = big_n * n // (d * d)
    alpha_exp = (xi_exp * e1) % big_n
    ord_alpha = big_n // math.gcd(big_n, alpha_exp) if alpha_exp else 1
    ord_xi = big_n // math.gcd(big_n, xi_exp % big_n) if xi_exp % big_n else 1
    ord_zeta = big_n // math.gcd(big_n, zeta_exp % big_n) if zeta_exp % big_n else 1
    exceptional = (
        b_p(3, n) == b_p(3, big_n) == b_p(3, ord_zeta)
        and b_p(3, n) >= 1
        and b_p(3, ord_xi) <= 1
    )
    if not exceptional:
        return CyclotomicInteger.from_int(d ** 3 // ord_alpha)
    e2 = math.comb(n, 3) * big_n ** 4 // d ** 4
    beta_exp = (zeta_exp * e2) % big_n
    # beta is a primitive third root of unity in this branch
    beta = root(3, beta_exp // (big_n // 3))
    scale = d ** 3 // (9 * ord_alpha)
    if b_p(3, ord_xi) == 0:
        return scale * (5 + 4 * beta)
    return scale * 3 * (5 - 2 * beta)


def _epsilon_suzuki_cyclic(n_param, l, alpha, beta, n):
    sign = 1
    if b_p(2, n) == 1:
        sign *= -alpha
    if b_p(2, n) == b_p(2, n_param) + 1:
        sign *= -1
    if b_p(2, n) == b_p(2, l) + 1:
        sign *= beta
    return sign


def nu_suzuki_cyclic_closed(n_param, l, alpha, beta, n):
    """Closed form for the Suzuki family, cyclic case; a rational integer."""
    if n_param % 2 == 0 and alpha == 1:
        raise ValueError("the cyclic case requires (N, alpha) != (even, +1)")
    if l < 2 or n < 1:
        raise ValueError("need L >= 2 and n >= 1")
    dn = math.gcd(n_param, n)
    dl = math.gcd(l, n)
    total = dn * dl
    if b_p(2, n) - 1 >= b_p(2, n_param):
        total += 2 * l * dn
        if b_p(2, n) - 1 >= b_p(2, l):
            total += _epsilon_suzuki_cyclic(n_param, l, alpha, beta, n) * dn * dl
    return CyclotomicInteger.from_int(total)


def nu_suzuki_noncyclic_closed(n_param, l, beta, n):
    """Closed form for the Suzuki family, non-cyclic case (N even)."""
    if n_param % 2 or n_param < 2:
        raise ValueError("the non-cyclic case requires even N")
    if l < 2 or n < 1:
        raise ValueError("need L >= 2 and n >= 1")
    dn = math.gcd(n_param, n)
    dl = math.gcd(l, n)
    total = dn * dl
    if b_p(2, n) >= 1:
        total += l * dn
    if b_p(2, n) - 1 >= b_p(2, n_param):
        total += l * dn
    if b_p(2, n) - 1 >= max(b_p(2, n_param), b_p(2, l)):
        eps = 1
        if b_p(2, n) == 1:
            eps *= -1
        if b_p(2, n) - 1 == b_p(2, l):
            eps *= beta
        total += eps * dn * dl
    return CyclotomicInteger.from_int(total)


# ---------------------------------------------------------------------------
# derived quantities


def nu_center(value):
    """|value|^2: the value times its complex conjugate."""
    return value * value.conjugate()


def nu_product(a, b):
    """Indicator of a Deligne product: the product of component indicators."""
    return a * b


def nu2_tambara_yamagami(grp, sign_tau):
    """The second indicator of a Tambara-Yamagami type category over an
    abelian group: #{a : a^2 = 1} + sign * sqrt(|A|)."""
    if sign_tau not in (1, -1):
        raise ValueError("sign_tau must be +1 or -1")
    for g in range(grp.order):
        for h in range(g):
            if grp.mul(g, h) != grp.mul(h, g):
                raise ValueError("the underlying group must be abelian")
    involutions = len(grp.torsion(2))
    return involutions + sign_tau * sqrt_int(grp.order)


# ---------------------------------------------------------------------------
# reports and the Frobenius analyzer


@dataclass
class IndicatorReport:
    label: str
    n: int
    value: CyclotomicInteger
    method: str
    elapsed: float


@dataclass
class FrobeniusEntry:
    n: int
    value: CyclotomicInteger
    divisible_by_n: bool
    p: int | None = None  # gcd(n, c(omega)) when informative
    divisible_by_n_over_sqrt_p: bool | None = None
    note: str = ""


@dataclass
class FrobeniusReport:
    label: str
    group_order: int
    c_omega: int
    entries: list[FrobeniusEntry] = field(default_factory=list)

    @property
    def verdict(self):
        return all(e.divisible_by_n for e in self.entries)


def _is_prime(p):
    return p >= 2 and factorize(p) == {p: 1}


def frobenius_check(cat, jobs=None):
    """Divisibility of nu_n by n over every divisor n of the group order.

    When p = gcd(n, c(omega)) is an odd prime, additionally tests the weaker
    divisibility of nu_n * sqrt(p) by n; when p is composite, records that
    the refined test does not apply.
    """
    grp = cat.group
    c = c_omega(cat.omega)
    report = FrobeniusReport(cat.label, grp.order, c)
    for n in divisors(grp.order):
        value = nu_brute(cat, n, jobs=jobs)
        entry = FrobeniusEntry(n, value, value.is_divisible_by_integer(n))
        p = math.gcd(n, c)
        if p > 1:
            entry.p = p
            if p == 2:
                entry.note = "even prime: plain divisibility expected"
            elif _is_prime(p):
                entry.divisible_by_n_over_sqrt_p = divide_by_sqrt_p_and_test(
                    value, n, p
                )
            else:
                entry.note = "refined test inapplicable (gcd with c(omega) composite)"
        report.entries.append(entry)
    return report
