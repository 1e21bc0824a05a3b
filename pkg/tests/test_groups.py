"""Finite group structures: constructors, torsion, conjugacy, table files."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsind.groups import (
    FiniteGroup,
    direct_product,
    group_from_table_file,
    make_cyclic,
    make_dihedral,
    parse_group_spec,
)


def quaternion_table():
    """Q_8 as a multiplication table; index 2u + s encodes (+/-)(1, i, j, k)."""
    units = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
        (1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2),
        (2, 1): (1, 3), (3, 2): (1, 1), (1, 3): (1, 2),
        (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
    }

    def mul(g, h):
        u1, s1 = divmod(g, 2)
        u2, s2 = divmod(h, 2)
        sign, u = units[(u1, u2)]
        return 2 * u + (s1 + s2 + sign) % 2

    return [[mul(g, h) for h in range(8)] for g in range(8)]


@pytest.fixture
def q8():
    rows = quaternion_table()
    return FiniteGroup(8, lambda g, h: rows[g][h], label="Q8")


class TestConstructors:
    def test_cyclic(self):
        z6 = make_cyclic(6)
        assert z6.order == 6
        assert z6.mul(4, 5) == 3
        assert z6.element_order(1) == 6
        assert z6.exponent() == 6

    def test_dihedral(self):
        d8 = make_dihedral(8)
        assert d8.order == 8
        assert d8.exponent() == 4
        # reflections have order 2
        assert all(d8.element_order(2 * i + 1) == 2 for i in range(4))
        # s r s = r^-1
        s = 1
        r = 2
        assert d8.mul(d8.mul(s, r), s) == d8.inv(r)

    def test_direct_product(self):
        g = direct_product(make_cyclic(3), make_cyclic(4))
        assert g.order == 12 and g.exponent() == 12
        assert g.element_order(1 * 4 + 1) == 12

    def test_identity_is_zero(self):
        for g in (make_cyclic(5), make_dihedral(6)):
            assert g.identity == 0
            assert all(g.mul(0, x) == x for x in range(g.order))

    def test_axiom_check_rejects_bad_table(self):
        with pytest.raises(ValueError):
            FiniteGroup(3, lambda g, h: (g + 2 * h) % 3)


class TestElementQueries:
    @given(st.integers(2, 40), st.integers(0, 1000), st.integers(-30, 30))
    @settings(max_examples=80, deadline=None)
    def test_power_matches_repeated_multiplication(self, n, gseed, k):
        grp = make_cyclic(n)
        g = gseed % n
        expected = 0
        step = g if k >= 0 else grp.inv(g)
        for _ in range(abs(k)):
            expected = grp.mul(expected, step)
        assert grp.power(g, k) == expected

    @given(st.integers(2, 20), st.integers(2, 20))
    @settings(max_examples=50, deadline=None)
    def test_power_additivity(self, n, k):
        grp = make_dihedral(2 * (n // 2 + 2))
        for g in range(grp.order):
            assert grp.mul(grp.power(g, k), grp.power(g, 3)) == grp.power(g, k + 3)

    def test_torsion_counts_divisible(self):
        # |{g : g^n = 1}| is divisible by gcd(n, |G|) in any finite group
        groups = [make_cyclic(k) for k in range(1, 30)]
        groups += [make_dihedral(2 * k) for k in range(2, 15)]
        groups += [
            direct_product(make_cyclic(a), make_dihedral(2 * b))
            for a in (2, 3, 5)
            for b in (2, 3, 4)
        ]
        for grp in groups:
            assert grp.order <= 200
            for n in range(1, grp.order + 1):
                count = len(grp.torsion(n))
                assert count % math.gcd(n, grp.order) == 0, (grp.label, n)

    def test_q8_structure(self, q8):
        orders = sorted(q8.element_order(g) for g in range(8))
        assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
        assert len(q8.torsion(2)) == 2
        assert len(q8.conjugacy_classes()) == 5

    def test_conjugacy_partition(self):
        d12 = make_dihedral(12)
        classes = d12.conjugacy_classes()
        assert sorted(x for cls in classes for x in cls) == list(range(12))
        for cls in classes:
            assert d12.order % len(cls) == 0
            o = {d12.element_order(x) for x in cls}
            assert len(o) == 1

    def test_centralizer(self):
        d8 = make_dihedral(8)
        assert len(d8.centralizer(0)) == 8
        for g in range(1, 8):
            cent = d8.centralizer(g)
            assert 0 in cent and g in cent
            assert d8.order % len(cent) == 0

    def test_generated_subgroup_and_subgroup(self):
        d8 = make_dihedral(8)
        rot = d8.generated_subgroup([2])
        assert rot == [0, 2, 4, 6]
        sub, elems = d8.subgroup(rot)
        assert sub.order == 4 and elems == rot
        assert sub.element_order(1) in (2, 4)


class TestTableFiles:
    def test_round_trip(self, tmp_path, q8):
        path = tmp_path / "q8.txt"
        rows = quaternion_table()
        path.write_text(
            "order 8\n" + "\n".join(" ".join(map(str, row)) for row in rows)
        )
        loaded = group_from_table_file(path)
        assert loaded.order == 8
        assert all(
            loaded.mul(g, h) == q8.mul(g, h) for g in range(8) for h in range(8)
        )

    def test_bad_header(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("sizes 2\n0 1\n1 0\n")
        with pytest.raises(ValueError):
            group_from_table_file(path)

    def test_wrong_entry_count(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("order 2\n0 1\n")
        with pytest.raises(ValueError):
            group_from_table_file(path)


class TestSpecParsing:
    def test_simple_specs(self):
        assert parse_group_spec("cyclic:7").order == 7
        assert parse_group_spec("dihedral:10").order == 10
        g = parse_group_spec("product:cyclic:2,cyclic:3")
        assert g.order == 6 and g.exponent() == 6

    def test_nested_product(self):
        g = parse_group_spec("product:cyclic:2,product:cyclic:3,cyclic:5")
        assert g.order == 30 and g.exponent() == 30

    def test_unknown_spec(self):
        with pytest.raises(ValueError):
            parse_group_spec("simple:60")
