"""Normalized 3-cocycles with root-of-unity values.

A cocycle stores its values as exponents of a fixed root of unity: the value
at (g, h, k) is exp(2*pi*i * exp_fn(g, h, k) / value_order).  Keeping the hot
path in machine integers lets indicator sweeps defer all exact cyclotomic
work to a single accumulation step.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from .cyclotomic import CyclotomicInteger, RootOfUnity
from .groups import FiniteGroup, direct_product, make_cyclic

_FULL_VERIFY_BOUND = 40
_DEFAULT_SAMPLES = 1_000_000


@dataclass
class ThreeCocycle:
    """A normalized 3-cocycle on `group` valued in value_order-th roots of unity."""

    group: FiniteGroup
    value_order: int
    exp_fn: Callable[[int, int, int], int]
    label: str = "omega"

    def value(self, g, h, k):
        return RootOfUnity(self.value_order, self.exp_fn(g, h, k))

    def exponent(self, g, h, k):
        return self.exp_fn(g, h, k) % self.value_order


@dataclass
class VerificationReport:
    ok: bool
    mode: str
    checked: int
    failure: tuple | None = None  # (kind, quadruple-or-triple)

    def __str__(self):
        if self.ok:
            return f"cocycle check passed ({self.mode}, {self.checked} cases)"
        kind, where = self.failure
        return f"cocycle check FAILED: {kind} violated at {where}"


def trivial_cocycle(group):
    return ThreeCocycle(group, 1, lambda g, h, k: 0, label="trivial")


def psi(n, r):
    """The standard generator (raised to the r-th power) of H^3 of Z_n.

    Value at (j, k, l) is exp(2*pi*i/n^2 * r * jb*(kb + lb - (k+l)b)) where
    xb is the representative of x in 0..n-1.
    """
    if n < 1:
        raise ValueError("cyclic order must be positive")
    nn = n * n

    def exp_fn(j, k, l):
        return (r * (j % n) * ((k % n) + (l % n) - ((k + l) % n))) % nn

    return ThreeCocycle(make_cyclic_cached(n), nn, exp_fn, label=f"psi_{n}^{r}")


# psi() is often called repeatedly with the same n in sweeps; building the
# cyclic group once keeps those loops cheap.
_cyclic_cache: dict[int, FiniteGroup] = {}


def make_cyclic_cached(n):
    grp = _cyclic_cache.get(n)
    if grp is None:
        grp = make_cyclic(n)
        _cyclic_cache[n] = grp
    return grp


def psi_on(group, r):
    """psi^r regarded as a cocycle on a given cyclic group instance."""
    base = psi(group.order, r)
    return ThreeCocycle(group, base.value_order, base.exp_fn, label=base.label)


def verify_cocycle(cocycle, mode="auto", samples=_DEFAULT_SAMPLES, rng_seed=0):
    """Check normalization and the 3-cocycle identity.

    mode: "full" checks every quadruple; "sampled" checks `samples` random
    quadruples; "auto" picks full for groups of order <= 40.
    Returns a VerificationReport naming the first violation if any.
    """
    grp = cocycle.group
    n = grp.order
    m = cocycle.value_order
    f = cocycle.exp_fn
    mul = grp.mul

    for g in range(n):
        for h in range(n):
            if f(0, g, h) % m or f(g, 0, h) % m or f(g, h, 0) % m:
                return VerificationReport(False, "normalization", n * n, ("normalization", (g, h)))

    if mode == "auto":
        mode = "full" if n <= _FULL_VERIFY_BOUND else "sampled"

    def identity_holds(g, h, k, l):
        lhs = f(h, k, l) + f(g, mul(h, k), l) + f(g, h, k)
        rhs = f(mul(g, h), k, l) + f(g, h, mul(k, l))
        return (lhs - rhs) % m == 0

    if mode == "full":
        checked = 0
        for g in range(n):
            for h in range(n):
                for k in range(n):
                    for l in range(n):
                        checked += 1
                        if not identity_holds(g, h, k, l):
                            return VerificationReport(False, mode, checked, ("cocycle identity", (g, h, k, l)))
        return VerificationReport(True, mode, checked)

    rng = random.Random(rng_seed)
    for i in range(samples):
        g, h, k, l = (rng.randrange(n) for _ in range(4))
        if not identity_holds(g, h, k, l):
            return VerificationReport(False, mode, i + 1, ("cocycle identity", (g, h, k, l)))
    return VerificationReport(True, mode, samples)


# ---------------------------------------------------------------------------
# the omega-tilde kernel


def omega_tilde_root(cocycle, n, g):
    """omega_tilde_n(g) as a RootOfUnity, or None when g^n != identity."""
    grp = cocycle.group
    if grp.power(g, n) != 0:
        return None
    m = cocycle.value_order
    f = cocycle.exp_fn
    mul = grp.mul
    acc = 0
    gk = g
    for _ in range(1, n):
        acc += f(g, gk, g)
        gk = mul(gk, g)
    return RootOfUnity(m, acc % m)

def omega_tilde(cocycle, n, g):
    """omega_tilde_n(g) as an exact cyclotomic value (0 when g^n != 1)."""
    r = omega_tilde_root(cocycle, n, g)
    if r is None:
        return CyclotomicInteger.zero()
    return r.as_cyclotomic()


def cohomological_order_cyclic(cocycle, g):
    """Order of the class of the cocycle restricted to the cyclic group <g>.

    Equal to the multiplicative order of omega_tilde_m(g) with m = ord(g):
    on a cyclic group the class of any cocycle is a power of the standard
    generator, and omega_tilde at a generator detects exactly that power.
    """
    m = cocycle.group.element_order(g)
    r = omega_tilde_root(cocycle, m, g)
    return r.multiplicative_order()


def c_omega(cocycle):
    """lcm of cohomological orders over all cyclic subgroups of the group."""
    grp = cocycle.group
    seen: set[frozenset] = set()
    out = 1
    for g in range(grp.order):
        sub = frozenset(grp.generated_subgroup([g]))
        if sub in seen:
            continue
        seen.add(sub)
        out = math.lcm(out, cohomological_order_cyclic(cocycle, g))
    return out


# ---------------------------------------------------------------------------
# derived cocycles


def restrict(cocycle, elements, label=None):
    """Restriction to a multiplicatively closed subset (as its own group)."""
    sub, elems = cocycle.group.subgroup(elements, label=label)
    f = cocycle.exp_fn

    def exp_fn(g, h, k):
        return f(elems[g], elems[h], elems[k])

    return ThreeCocycle(sub, cocycle.value_order, exp_fn, label=f"{cocycle.label}|H")


def product_cocycle(ca, cb):
    """The componentwise product cocycle on group_A x group_B."""
    grp = direct_product(ca.group, cb.group)
    nb = cb.group.order
    m = math.lcm(ca.value_order, cb.value_order)
    sa = m // ca.value_order
    sb = m // cb.value_order
    fa = ca.exp_fn
    fb = cb.exp_fn

    def exp_fn(g, h, k):
        xa, ya = divmod(g, nb)
        xb, yb = divmod(h, nb)
        xc, yc = divmod(k, nb)
        return sa * fa(xa, xb, xc) + sb * fb(ya, yb, yc)

    return ThreeCocycle(grp, m, exp_fn, label=f"{ca.label}(x){cb.label}")


def conjugate_cocycle(cocycle):
    """The complex-conjugate cocycle (all values inverted)."""
    f = cocycle.exp_fn
    return ThreeCocycle(
        cocycle.group, cocycle.value_order, lambda g, h, k: -f(g, h, k), label=f"conj({cocycle.label})"
    )


# ---------------------------------------------------------------------------
# file-backed cocycles


def cocycle_from_file(group, path, verify=True):
    """Load a cocycle from lines `g h k e` under a header `order M`.

    The value at (g, h, k) is exp(2*pi*i*e/M); absent triples default to 1.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.split() for ln in fh if ln.strip()]
    if not lines or lines[0][0] != "order":
        raise ValueError("cocycle file must start with 'order M'")
    m = int(lines[0][1])
    if m < 1:
        raise ValueError("value order must be positive")
    table: dict[tuple[int, int, int], int] = {}
    for parts in lines[1:]:
        if len(parts) != 4:
            raise ValueError(f"bad cocycle line: {' '.join(parts)!r}")
        g, h, k, e = map(int, parts)
        for v in (g, h, k):
            if not 0 <= v < group.order:
                raise ValueError(f"element index {v} out of range")
        table[(g, h, k)] = e % m

    cocycle = ThreeCocycle(
        group, m, lambda g, h, k: table.get((g, h, k), 0), label="file"
    )
    if verify:
        report = verify_cocycle(cocycle, mode="auto")
        if not report.ok:
            raise ValueError(str(report))
    return cocycle


def parse_cocycle_spec(spec, group):
    """Parse `trivial`, `psi:r` (cyclic groups only), `file:<path>`."""
    if spec == "trivial":
        return trivial_cocycle(group)
    kind, _, rest = spec.partition(":")
    if kind == "psi":
        if not _is_cyclic(group):
            raise ValueError("psi cocycles require a cyclic group")
        return psi_on(group, int(rest))
    if kind == "file":
        return cocycle_from_file(group, rest)
    raise ValueError(f"unknown cocycle spec: {spec!r}")


def _is_cyclic(group):
    return any(group.element_order(g) == group.order for g in range(group.order))
