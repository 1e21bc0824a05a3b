"""Finite groups as dense multiplication structures on integer indices.

Elements of a group of order n are the integers 0..n-1, with 0 always the
identity.  Multiplication is stored as a dense table for orders up to
DENSE_BOUND, which keeps the indicator loops at O(1) per product.
"""

from __future__ import annotations

import math
import random

DENSE_BOUND = 4096
_SAMPLED_TRIPLES = 100_000
_FULL_ASSOC_BOUND = 300


class FiniteGroup:
    """A finite group on element indices 0..order-1 with identity 0."""

    __slots__ = ("order", "label", "_table", "_mul_fn", "_inv", "_orders")

    def __init__(self, order, mul, label="G", check=True):
        if order < 1:
            raise ValueError("group order must be positive")
        self.order = order
        self.label = label
        if order <= DENSE_BOUND:
            self._table = [[mul(g, h) for h in range(order)] for g in range(order)]
            self._mul_fn = None
        else:
            self._table = None
            self._mul_fn = mul
        if check:
            self._check_axioms()
        if self._table is not None:
            self._inv = self._build_inverses()
            self._orders = [self._element_order(g) for g in range(order)]
        else:
            self._inv = None
            self._orders = None

    # -- structure ----------------------------------------------------------

    def mul(self, g, h):
        if self._table is not None:
            return self._table[g][h]
        return self._mul_fn(g, h)

    @property
    def identity(self):
        return 0

    def inv(self, g):
        if self._inv is not None:
            return self._inv[g]
        # lazy fallback: g^(ord(g)-1)
        return self.power(g, self.element_order(g) - 1)

    def _build_inverses(self):
        inv = [None] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self.mul(g, h) == 0:
                    inv[g] = h
                    break
            if inv[g] is None:
                raise ValueError(f"element {g} has no inverse")
        return inv

    def _check_axioms(self):
        n = self.order
        for g in range(n):
            if self.mul(g, 0) != g or self.mul(0, g) != g:
                raise ValueError(f"element 0 is not a two-sided identity at {g}")
        if n <= _FULL_ASSOC_BOUND:
            triples = (
                (a, b, c) for a in range(n) for b in range(n) for c in range(n)
            )
        else:
            rng = random.Random(0)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_SAMPLED_TRIPLES)
            )
        for a, b, c in triples:
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError(f"multiplication is not associative at {(a, b, c)}")

    # -- element queries ----------------------------------------------------

    def power(self, g, k):
        """g^k by square-and-multiply; negative k via the inverse."""
        if k < 0:
            return self.power(self.inv(g), -k)
        acc = 0
        base = g
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def _element_order(self, g):
        k = 1
        x = g
        while x != 0:
            x = self.mul(x, g)
            k += 1
        return k

    def element_order(self, g):
        if self._orders is not None:
            return self._orders[g]
        return self._element_order(g)

    def torsion(self, n):
        """All g with g^n = identity (equivalently: order of g divides n)."""
        if n < 1:
            raise ValueError("n must be positive")
        return [g for g in range(self.order) if n % self.element_order(g) == 0]

    def exponent(self):
        e = 1
        for g in range(self.order):
            e = math.lcm(e, self.element_order(g))
        return e

    def conjugacy_classes(self):
        """Partition of 0..order-1 into conjugacy classes (each sorted)."""
        seen = [False] * self.order
        classes = []
        for g in range(self.order):
            if seen[g]:
                continue
            cls = set()
            for x in range(self.order):
                cls.add(self.mul(self.mul(x, g), self.inv(x)))
            for h in cls:
                seen[h] = True
            classes.append(sorted(cls))
        return classes

    def centralizer(self, g):
        return [x for x in range(self.order) if self.mul(x, g) == self.mul(g, x)]

    def generated_subgroup(self, generators):
        """Sorted element list of the subgroup generated by the given elements."""
        closure = {0}
        frontier = [0]
        gens = list(generators)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        return sorted(closure)

    def subgroup(self, elements, label=None):
        """The subgroup on a multiplicatively closed element subset, reindexed."""
        elems = sorted(set(elements))
        if not elems or elems[0] != 0:
            raise ValueError("subgroup must contain the identity")
        pos = {g: i for i, g in enumerate(elems)}
        for g in elems:
            for h in elems:
                if self.mul(g, h) not in pos:
                    raise ValueError("element subset is not closed under multiplication")
        sub = FiniteGroup(
            len(elems),
            lambda i, j: pos[self.mul(elems[i], elems[j])],
            label=label or f"{self.label}-sub{len(elems)}",
            check=False,
        )
        return sub, elems

    def __repr__(self):
        return f"FiniteGroup({self.label}, order={self.order})"


# ---------------------------------------------------------------------------
# constructors


def make_cyclic(n):
    """The cyclic group Z_n (addition mod n)."""
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    return FiniteGroup(n, lambda a, b: (a + b) % n, label=f"Z{n}", check=False)


def make_dihedral(two_l):
    """The dihedral group of order two_l; element 2i+j encodes r^i s^j."""
    if two_l < 4 or two_l % 2:
        raise ValueError("dihedral order must be an even integer >= 4")
    half = two_l // 2

    def mul(g, h):
        i1, j1 = divmod(g, 2)
        i2, j2 = divmod(h, 2)
        # r^i1 s^j1 * r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
        i = (i1 + (i2 if j1 == 0 else -i2)) % half
        return 2 * i + (j1 + j2) % 2

    return FiniteGroup(two_l, mul, label=f"D{two_l}", check=False)


def direct_product(a, b):
    """A x B with pair (x, y) encoded as x*|B| + y."""
    nb = b.order

    def mul(g, h):
        x1, y1 = divmod(g, nb)
        x2, y2 = divmod(h, nb)
        return a.mul(x1, x2) * nb + b.mul(y1, y2)

    return FiniteGroup(
        a.order * b.order, mul, label=f"({a.label}x{b.label})", check=False
    )


# ---------------------------------------------------------------------------
# module-level conveniences mirroring the method API


def power(group, g, k):
    return group.power(g, k)


def element_order(group, g):
    return group.element_order(g)


def torsion(group, n):
    return group.torsion(n)


def conjugacy_classes(group):
    return group.conjugacy_classes()


def centralizer(group, g):
    return group.centralizer(g)


def exponent(group):
    return group.exponent()


# ---------------------------------------------------------------------------
# table files and spec strings


def group_from_table_file(path):
    """Load a group from a text table: `order N` then N rows of N indices."""
    with open(path, "r", encoding="utf-8") as fh:
        tokens = fh.read().split()
    if len(tokens) < 2 or tokens[0] != "order":
        raise ValueError("table file must start with 'order N'")
    n = int(tokens[1])
    body = tokens[2:]
    if len(body) != n * n:
        raise ValueError(f"expected {n * n} table entries, found {len(body)}")
    rows = [[int(body[i * n + j]) for j in range(n)] for i in range(n)]
    for row in rows:
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"table entry {v} out of range")
    return FiniteGroup(n, lambda g, h: rows[g][h], label="table", check=True)


def parse_group_spec(spec):
    """Parse `cyclic:N`, `dihedral:M`, `product:<a>,<b>`, `table:<path>`."""
    kind, _, rest = spec.partition(":")
    if kind == "cyclic":
        return make_cyclic(int(rest))
    if kind == "dihedral":
        return make_dihedral(int(rest))
    if kind == "table":
        return group_from_table_file(rest)
    if kind == "product":
        # split at the first comma: the left factor is a simple spec, the
        # right factor absorbs the rest (so nested products nest rightward)
        left, sep, right = rest.partition(",")
        if not sep:
            raise ValueError(f"product spec needs two comma-separated parts: {rest!r}")
        return direct_product(parse_group_spec(left), parse_group_spec(right))
    raise ValueError(f"unknown group spec: {spec!r}")
