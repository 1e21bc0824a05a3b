"""Indicator engines: brute force vs oracles, closed forms, derived values,
and the Frobenius divisibility analyzer."""

from __future__ import annotations

import math

import pytest

from fsind.cyclotomic import (
    CyclotomicInteger,
    divisors,
    gauss_sum_closed,
    root,
    sqrt_int,
)
from fsind.groups import make_cyclic, make_dihedral, direct_product
from fsind.cocycles import (
    c_omega,
    conjugate_cocycle,
    product_cocycle,
    psi,
    trivial_cocycle,
)
from fsind.extensions import (
    GTCategory,
    family_h2n2,
    family_hn3,
    family_suzuki_cyclic,
    family_suzuki_noncyclic,
    omega_from_extension,
    parse_family_spec,
)
from fsind.indicators import (
    b_p,
    frobenius_check,
    nu2_tambara_yamagami,
    nu_brute,
    nu_center,
    nu_group_algebra,
    nu_h2n2_closed,
    nu_hn3_closed,
    nu_product,
    nu_suzuki_cyclic_closed,
    nu_suzuki_noncyclic_closed,
)


def cyclic_cat(n, r):
    w = psi(n, r)
    return GTCategory(w.group, w, label=f"(Z{n},psi^{r})")


class TestBruteForce:
    def test_nu_1_is_one(self):
        for spec in ("h2n2:3:1", "hn3:3:1:1", "suzuki:1:2:-1:-1", "suzukiP:2:2:-1"):
            assert nu_brute(parse_family_spec(spec), 1) == 1

    def test_trivial_cocycle_counts_torsion(self):
        for grp in (make_cyclic(12), make_dihedral(10)):
            cat = GTCategory(grp, trivial_cocycle(grp))
            for n in range(1, grp.order + 1):
                assert nu_brute(cat, n) == len(grp.torsion(n))
                assert nu_group_algebra(grp, n) == len(grp.torsion(n))

    def test_cyclic_psi_gives_gauss_sums(self):
        # nu_n(Z_N, psi^r) = gcd(N,n)^2/N * S(n*r/d, d) would be fractional in
        # general; the direct statement tested here is the torsion-sum formula
        for big_n in range(1, 11):
            for r in range(big_n):
                cat = cyclic_cat(big_n, r)
                for n in range(1, 2 * big_n + 1):
                    d = math.gcd(big_n, n)
                    expected = gauss_sum_closed(n * r // d, d)
                    assert nu_brute(cat, n) == expected, (big_n, r, n)

    def test_nu_2_is_a_real_integer(self):
        specs = [
            "h2n2:2:1", "h2n2:5:2", "hn3:3:2:1",
            "suzuki:3:2:1:-1", "suzukiP:2:3:-1",
        ]
        for spec in specs:
            v = nu_brute(parse_family_spec(spec), 2)
            assert v.is_rational() and v == v.conjugate(), spec

    def test_jobs_threading_matches_serial(self):
        cat = parse_family_spec("suzuki:3:2:1:-1")
        for n in (2, 3, 4, 6, 12):
            assert nu_brute(cat, n, jobs=4) == nu_brute(cat, n)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            nu_brute(cyclic_cat(3, 1), 0)


class TestClosedFormH2N2:
    def test_matches_brute(self):
        for big_n in range(2, 7):
            for xi_exp in (0, 1):
                cat = omega_from_extension(family_h2n2(big_n, xi_exp), verify=False)
                for n in divisors(2 * big_n) + [8, 12]:
                    closed = nu_h2n2_closed(big_n, xi_exp, n)
                    assert closed == nu_brute(cat, n), (big_n, xi_exp, n)

    def test_odd_n_square(self):
        assert nu_h2n2_closed(6, 1, 3) == 9
        assert nu_h2n2_closed(5, 2, 5) == 25

    def test_exceptional_even_branch(self):
        # the lower branch fires exactly when the 2-adic pattern aligns
        assert nu_h2n2_closed(2, 1, 4) == 4  # b2(N)=b2(ord xi)=1=b2(n)-1
        assert nu_h2n2_closed(2, 0, 4) == 8  # trivial xi escapes the branch


class TestClosedFormHN3:
    def test_matches_brute_n3(self):
        for xi_exp in range(3):
            for zeta_exp in range(3):
                cat = omega_from_extension(
                    family_hn3(3, xi_exp, zeta_exp), verify=False
                )
                for n in (1, 3, 9, 27):
                    closed = nu_hn3_closed(3, xi_exp, zeta_exp, n)
                    assert closed == nu_brute(cat, n), (xi_exp, zeta_exp, n)

    def test_exceptional_value(self):
        # the non-integer value in the dimension-27 family
        assert nu_hn3_closed(3, 0, 1, 3) == 3 * (5 + 4 * root(3, 1))
        assert nu_hn3_closed(3, 0, 2, 3) == 3 * (5 + 4 * root(3, 2))
        assert nu_hn3_closed(3, 1, 1, 3) == 3 * (5 - 2 * root(3, 1))

    def test_generic_branch_is_integer(self):
        for n in (1, 9, 27):
            for xi_exp in range(3):
                for zeta_exp in range(3):
                    v = nu_hn3_closed(3, xi_exp, zeta_exp, n)
                    assert v.is_rational()


class TestClosedFormSuzuki:
    def test_cyclic_matches_brute(self):
        for big_n in (1, 2, 3):
            for l in (2, 3):
                for alpha in (1, -1):
                    for beta in (1, -1):
                        if big_n % 2 == 0 and alpha == 1:
                            continue
                        cat = family_suzuki_cyclic(big_n, l, alpha, beta)
                        for n in divisors(4 * big_n * l):
                            closed = nu_suzuki_cyclic_closed(big_n, l, alpha, beta, n)
                            assert closed == nu_brute(cat, n), (
                                big_n, l, alpha, beta, n,
                            )

    def test_noncyclic_matches_brute(self):
        for big_n in (2, 4):
            for l in (2, 3):
                for beta in (1, -1):
                    cat = family_suzuki_noncyclic(big_n, l, beta)
                    for n in divisors(4 * big_n * l):
                        closed = nu_suzuki_noncyclic_closed(big_n, l, beta, n)
                        assert closed == nu_brute(cat, n), (big_n, l, beta, n)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            nu_suzuki_cyclic_closed(2, 2, 1, 1, 2)
        with pytest.raises(ValueError):
            nu_suzuki_noncyclic_closed(3, 2, 1, 2)


class TestDerivedValues:
    def test_nu_center_matches_double_brute(self):
        # the center construction doubles the group and pairs the cocycle
        # with its conjugate; |nu_n|^2 must equal the brute value there
        for big_n in range(1, 7):
            for r in range(big_n):
                w = psi(big_n, r)
                doubled = product_cocycle(w, conjugate_cocycle(w))
                cat = GTCategory(doubled.group, doubled)
                base = cyclic_cat(big_n, r)
                for n in divisors(big_n):
                    lhs = nu_center(nu_brute(base, n))
                    rhs = nu_brute(cat, n)
                    assert lhs == rhs, (big_n, r, n)

    def test_nu_product(self):
        a = nu_brute(cyclic_cat(3, 1), 3)
        b = nu_brute(cyclic_cat(5, 1), 5)
        w = product_cocycle(psi(3, 1), psi(5, 1))
        cat = GTCategory(w.group, w)
        assert nu_product(a, b) == nu_brute(cat, 15)

    def test_tambara_yamagami(self):
        # Z_2: 2 involutions, nu_2 = 2 +/- sqrt(2)
        assert nu2_tambara_yamagami(make_cyclic(2), 1) == 2 + sqrt_int(2)
        # Z_4: values 2 +/- 2
        assert nu2_tambara_yamagami(make_cyclic(4), -1) == 0
        assert nu2_tambara_yamagami(make_cyclic(4), 1) == 4
        # Z_3 x Z_3: 1 involution, exact sqrt 9 = 3
        g9 = direct_product(make_cyclic(3), make_cyclic(3))
        assert nu2_tambara_yamagami(g9, -1) == -2

    def test_tambara_yamagami_rejects_nonabelian(self):
        with pytest.raises(ValueError):
            nu2_tambara_yamagami(make_dihedral(8), 1)

    def test_b_p(self):
        assert b_p(2, 48) == 4
        assert b_p(3, 48) == 1
        assert b_p(5, 48) == 0


class TestFrobeniusAnalyzer:
    def test_integrality_when_c_small(self):
        # gcd(n, c(omega)) <= 2 for all n forces every nu_n to be rational
        for spec in ("suzuki:1:2:1:-1", "suzuki:3:2:-1:1", "suzukiP:2:2:-1"):
            cat = parse_family_spec(spec)
            c = c_omega(cat.omega)
            assert c <= 2, spec
            report = frobenius_check(cat)
            for e in report.entries:
                assert e.value.conductor == 1, (spec, e.n)

    def test_positive_cases(self):
        for spec in ("h2n2:2:1", "h2n2:3:1", "suzuki:1:2:1:1", "suzukiP:2:2:1"):
            report = frobenius_check(parse_family_spec(spec))
            assert report.verdict, spec

    def test_cyclic_psi_failure_with_refined_pass(self):
        # (Z_5, psi^1): nu_5 is not divisible by 5, but nu_5 * sqrt(5)/5 is
        report = frobenius_check(cyclic_cat(5, 1))
        assert not report.verdict
        assert report.c_omega == 5
        entry = {e.n: e for e in report.entries}[5]
        assert not entry.divisible_by_n
        assert entry.p == 5
        assert entry.divisible_by_n_over_sqrt_p

    def test_composite_gcd_marked_inapplicable(self):
        # (Z_15, psi^1) has c = 15; at n = 15 the gcd is composite
        report = frobenius_check(cyclic_cat(15, 1))
        entry = {e.n: e for e in report.entries}[15]
        assert entry.p == 15
        assert "inapplicable" in entry.note

    def test_even_prime_note(self):
        report = frobenius_check(cyclic_cat(2, 1))
        entry = {e.n: e for e in report.entries}[2]
        assert entry.p == 2
        assert "even prime" in entry.note

    def test_entries_cover_all_divisors(self):
        cat = parse_family_spec("h2n2:3:1")
        report = frobenius_check(cat)
        assert [e.n for e in report.entries] == divisors(18)
