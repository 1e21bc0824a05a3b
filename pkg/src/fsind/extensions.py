"""Matched pairs, bicrossed products, and the built-in (group, cocycle) families.

A matched pair (F, G) with actions g |> x in F and g <| x in G yields the
bicrossed product group F |><| G on pairs (x, g) with multiplication
(x, g)(y, h) = (x (g |> y), (g <| y) h).  Extension cocycle data (sigma, tau)
on the pair induces a normalized 3-cocycle on the bicrossed product:

    omega(X, Y, Z) = sigma(X_G; Y_F, Y_G |> Z_F) * tau(X_G <| Y_F, Y_G; Z_F)

All concrete families below store cocycle values as integer exponents of a
fixed root of unity (see the cocycles module).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .cocycles import ThreeCocycle, trivial_cocycle, verify_cocycle
from .groups import (
    FiniteGroup,
    direct_product,
    make_cyclic,
    make_dihedral,
    parse_group_spec,
)


@dataclass
class MatchedPair:
    """Groups F, G with right action g <| x on G and left action g |> x in F."""

    F: FiniteGroup
    G: FiniteGroup
    act_right: Callable[[int, int], int]  # (g, x) -> g <| x in G
    act_left: Callable[[int, int], int]  # (g, x) -> g |> x in F

    def __post_init__(self):
        for x in range(self.F.order):
            if self.act_left(0, x) != x:
                raise ValueError("identity of G must act trivially on F")
            if self.act_right(0, x) != 0:
                raise ValueError("1 <| x must be 1")
        for g in range(self.G.order):
            if self.act_right(g, 0) != g:
                raise ValueError("identity of F must act trivially on G")
            if self.act_left(g, 0) != 0:
                raise ValueError("g |> 1 must be 1")


def trivial_pair(f_group, g_group):
    return MatchedPair(f_group, g_group, lambda g, x: g, lambda g, x: x)


def bicrossed_product(pair, label=None, check=True):
    """The group F |><| G on pairs (x, g) encoded as x*|G| + g.

    Construction runs the group associativity check, which is what validates
    the matched-pair compatibility conditions.
    """
    ng = pair.G.order
    f_mul = pair.F.mul
    g_mul = pair.G.mul
    act_l = pair.act_left
    act_r = pair.act_right

    def mul(p, q):
        x, g = divmod(p, ng)
        y, h = divmod(q, ng)
        return f_mul(x, act_l(g, y)) * ng + g_mul(act_r(g, y), h)

    name = label or f"({pair.F.label}|><|{pair.G.label})"
    return FiniteGroup(pair.F.order * ng, mul, label=name, check=check)


def power_iteration(pair, x, g, n):
    """(x_n, g_n) with (x, g)^n = (x_n, g_n) in the bicrossed product."""
    if n < 1:
        raise ValueError("n must be positive")
    xn, gn = x, g
    for _ in range(n - 1):
        xn = pair.F.mul(x, pair.act_left(g, xn))
        gn = pair.G.mul(pair.act_right(gn, x), g)
    return xn, gn


@dataclass
class ExtensionData:
    """Normalized extension cocycle data (sigma, tau) over a matched pair.

    sigma_exp(g; x, y) and tau_exp(g, h; x) give values as integer exponents
    of exp(2*pi*i/value_order).
    """

    pair: MatchedPair
    value_order: int
    sigma_exp: Callable[[int, int, int], int]
    tau_exp: Callable[[int, int, int], int]
    label: str = "extension"


@dataclass
class GTCategory:
    """A finite group together with a normalized 3-cocycle on it."""

    group: FiniteGroup
    omega: ThreeCocycle
    label: str = "C"


def omega_from_extension(data, verify="auto", label=None):
    """Induce the 3-cocycle on the bicrossed product from (sigma, tau)."""
    pair = data.pair
    grp = bicrossed_product(pair)
    ng = pair.G.order
    act_l = pair.act_left
    act_r = pair.act_right
    sigma = data.sigma_exp
    tau = data.tau_exp

    def exp_fn(p, q, r):
        y_f, y_g = divmod(q, ng)
        x_g = p % ng
        z_f = r // ng
        return sigma(x_g, y_f, act_l(y_g, z_f)) + tau(act_r(x_g, y_f), y_g, z_f)

    omega = ThreeCocycle(grp, data.value_order, exp_fn, label=f"omega[{data.label}]")
    if verify:
        report = verify_cocycle(omega, mode="auto" if verify == "auto" else verify)
        if not report.ok:
            raise ValueError(f"inconsistent extension data: {report}")
    return GTCategory(grp, omega, label=label or data.label)


# ---------------------------------------------------------------------------
# family: dimension 2N^2 (F = Z_2 swapping the coordinates of G = Z_N x Z_N)


def h2n2_pair(n):
    g_group = direct_product(make_cyclic(n), make_cyclic(n))

    def act_right(g, x):
        if x % 2 == 0:
            return g
        i, j = divmod(g, n)
        return j * n + i

    return MatchedPair(make_cyclic(2), g_group, act_right, lambda g, x: x)


def family_h2n2(n, xi_exp):
    """Extension data for the dimension-2N^2 family with xi = zeta_N^xi_exp."""
    if n < 2:
        raise ValueError("n must be at least 2")
    pair = h2n2_pair(n)

    def sigma_exp(g, a, b):
        if a % 2 == 1 and b % 2 == 1:
            i, j = divmod(g, n)
            return (xi_exp * i * j) % n
        return 0

    def tau_exp(g, h, a):
        if a % 2 == 1:
            j = g % n
            k = h // n
            return (xi_exp * j * k) % n
        return 0

    return ExtensionData(pair, n, sigma_exp, tau_exp, label=f"H_{2 * n * n}(xi^{xi_exp})")


# ---------------------------------------------------------------------------
# family: dimension N^3 (F = Z_N acting on G = Z_N x Z_N by (i,j) <| a = (i+aj, j))


def hn3_pair(n):
    g_group = direct_product(make_cyclic(n), make_cyclic(n))

    def act_right(g, a):
        i, j = divmod(g, n)
        return ((i + a * j) % n) * n + j

    return MatchedPair(make_cyclic(n), g_group, act_right, lambda g, x: x)


def family_hn3(n, xi_exp, zeta_exp, lambda_exp=None):
    """Extension data for the dimension-N^3 family (N odd).

    xi = zeta_N^xi_exp, zeta = zeta_N^zeta_exp.  lambda is an N-th root of
    xi^(-1); the default is the principal choice zeta_{N^2}^(-xi_exp), and any
    admissible lambda_exp (congruent to -xi_exp mod N) may be supplied to
    exercise choice-independence.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    if lambda_exp is None:
        lambda_exp = (-xi_exp) % (n * n)
    if (lambda_exp + xi_exp) % n != 0:
        raise ValueError("lambda_exp must represent an N-th root of xi^(-1)")
    pair = hn3_pair(n)
    nn = n * n

    def tau_exp(g, h, a):
        j = g % n
        l = h % n
        k = h // n
        a = a % n
        lam = lambda_exp * (((j + l) % n) - j - l)  # lambda_{j+l} / (lambda_j lambda_l)
        zet = n * zeta_exp * (a * j * k + (a * (a - 1) // 2) * j * l)
        return (a * lam + zet) % nn

    return ExtensionData(
        pair, nn, lambda g, x, y: 0, tau_exp, label=f"H_{n ** 3}(xi^{xi_exp},zeta^{zeta_exp})"
    )


# ---------------------------------------------------------------------------
# family: Suzuki Hopf algebras, cyclic case (direct presentation)


def _dihedral_bar(d, half):
    """The flip automorphism on D_2L indices: r^i s^j -> r^(-i-j) s^j."""
    i, j = divmod(d, 2)
    return 2 * ((-i - j) % half) + j


def suzuki_cyclic_group(n, l):
    """The order-4NL group <b, r, s | b^2N = r^L = s^2 = 1, srs = r^-1,
    brb^-1 = r^-1, bsb^-1 = r^-1 s>, encoded as i*2L + (2j+k) for b^i r^j s^k."""
    two_l = 2 * l
    dih = make_dihedral(two_l)

    def mul(p, q):
        i1, d1 = divmod(p, two_l)
        i2, d2 = divmod(q, two_l)
        x1 = _dihedral_bar(d1, l) if i2 % 2 else d1
        return ((i1 + i2) % (2 * n)) * two_l + dih.mul(x1, d2)

    return FiniteGroup(4 * n * l, mul, label=f"Gamma_{n},{l}", check=True)


def family_suzuki_cyclic(n, l, alpha, beta, eta_exp=None):
    """The Suzuki family category in the cyclic case ((N, alpha) != (even, +1)).

    eta is a 2L-th root of beta; the default is the principal choice (1 when
    beta = 1, zeta_{4L} when beta = -1), and any admissible eta_exp (an
    exponent of zeta_{4L} with eta^{2L} = beta) may be supplied to exercise
    choice-independence.  The 2N-th root of unity in the cocycle is principal.
    """
    if alpha not in (1, -1) or beta not in (1, -1):
        raise ValueError("alpha and beta must be +1 or -1")
    if l < 2:
        raise ValueError("l must be at least 2")
    if n % 2 == 0 and alpha == 1:
        raise ValueError("the cyclic case requires (N, alpha) != (even, +1)")
    grp = suzuki_cyclic_group(n, l)
    two_l = 2 * l
    m = math.lcm(4 * l, 2 * n)
    eta_unit = m // (4 * l)  # exponent of the principal 4L-th root
    c_unit = m // (2 * n)  # exponent of zeta_2N
    if eta_exp is None:
        eta_exp = 0 if beta == 1 else eta_unit
    else:
        eta_exp = eta_exp * eta_unit  # given as an exponent of zeta_{4L}
        want = 0 if beta == 1 else m // 2
        if (eta_exp * two_l) % m != want:
            raise ValueError("eta_exp must represent a 2L-th root of beta")
    neg_alpha_zeta = (1 + (n if alpha == 1 else 0)) * c_unit  # -alpha * zeta_2N

    # The cocycle is the extension formula sigma(b^i; y', b^j |> z') transported
    # through the normal form b^i x = x' b^i with x' = bar^i(x): the dihedral
    # part of the third argument gets flipped j+k times in total.
    def exp_fn(p, q, r):
        ly = q % two_l
        if ly % 2 == 0:
            return 0
        i = p // two_l
        j = q // two_l
        k = r // two_l
        lz = r % two_l
        if (j + k) % 2 and lz:
            lz = _dihedral_bar(lz, l)  # ell(bar(z)) = 2L - ell(z)
        acc = 0
        if i % 2:
            acc += 2 * lz * eta_exp
        if lz % 2:
            acc += i * neg_alpha_zeta
        return acc % m

    omega = ThreeCocycle(grp, m, exp_fn, label=f"omega[A_{n},{l}^{alpha},{beta}]")
    return GTCategory(grp, omega, label=f"A_{n},{l}^{alpha},{beta}")


# ---------------------------------------------------------------------------
# family: Suzuki Hopf algebras, non-cyclic case (via the extension machinery)


def suzuki_noncyclic_pair(n, l):
    """Matched pair with G = Z_N x Z_2 (a^i b^j), F = D_2L; b acts by the flip."""
    g_group = direct_product(make_cyclic(n), make_cyclic(2))

    def act_left(g, x):
        return _dihedral_bar(x, l) if g % 2 else x

    return MatchedPair(make_dihedral(2 * l), g_group, lambda g, x: g, act_left)


def family_suzuki_noncyclic(n, l, beta):
    """The Suzuki family in the non-cyclic case (N even, alpha = +1)."""
    if beta not in (1, -1):
        raise ValueError("beta must be +1 or -1")
    if n % 2 or n < 2:
        raise ValueError("the non-cyclic case requires even N")
    if l < 2:
        raise ValueError("l must be at least 2")
    pair = suzuki_noncyclic_pair(n, l)
    m = math.lcm(4 * l, 2 * n)
    eta_unit = m // (4 * l)
    c_unit = m // (2 * n)
    eta_exp = 0 if beta == 1 else eta_unit

    def sigma_exp(g, x, y):
        if x % 2 == 0:  # ell(x) = index in the dihedral encoding
            return 0
        i, j = divmod(g, 2)
        acc = 0
        if j % 2:
            acc += 2 * y * eta_exp
        if y % 2:
            acc += (2 * i + j * n) * c_unit  # (-1)^j * zeta_N^i
        return acc % m

    data = ExtensionData(
        pair, m, sigma_exp, lambda g, h, x: 0, label=f"A_{n},{l}^+1,{beta}"
    )
    return omega_from_extension(data, verify=False)


# ---------------------------------------------------------------------------
# bismash products and spec parsing


def family_bismash(pair, label=None):
    """The bismash product category: trivial sigma and tau, trivial cocycle."""
    grp = bicrossed_product(pair, label=label)
    return GTCategory(grp, trivial_cocycle(grp), label=label or f"bismash[{grp.label}]")


def pair_from_file(path):
    """Load a matched pair from a text file.

    Format:
        F <group spec>
        G <group spec>
        act_left            (optional; |G| rows of |F| entries: g |> x)
        ...rows...
        act_right           (optional; |G| rows of |F| entries: g <| x)
        ...rows...
    Omitted action sections default to the trivial action.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    f_group = g_group = None
    tables = {}
    i = 0
    while i < len(lines):
        head = lines[i].split()
        if head[0] == "F":
            f_group = parse_group_spec(head[1])
            i += 1
        elif head[0] == "G":
            g_group = parse_group_spec(head[1])
            i += 1
        elif head[0] in ("act_left", "act_right"):
            if f_group is None or g_group is None:
                raise ValueError("group specs must precede action tables")
            rows = []
            for r in range(g_group.order):
                rows.append([int(t) for t in lines[i + 1 + r].split()])
                if len(rows[-1]) != f_group.order:
                    raise ValueError(f"{head[0]} row {r} has wrong length")
            tables[head[0]] = rows
            i += 1 + g_group.order
        else:
            raise ValueError(f"unexpected line in pair file: {lines[i]!r}")
    if f_group is None or g_group is None:
        raise ValueError("pair file must declare both F and G")
    left = tables.get("act_left")
    right = tables.get("act_right")
    return MatchedPair(
        f_group,
        g_group,
        (lambda g, x: right[g][x]) if right else (lambda g, x: g),
        (lambda g, x: left[g][x]) if left else (lambda g, x: x),
    )


def parse_family_spec(spec):
    """Parse `h2n2:N:xi`, `hn3:N:xi:zeta`, `suzuki:N:L:alpha:beta`,
    `suzukiP:N:L:beta`, `bismash:<pair-file>` into a GTCategory."""
    kind, _, rest = spec.partition(":")
    if kind == "h2n2":
        n_s, xi_s = rest.split(":")
        return omega_from_extension(family_h2n2(int(n_s), int(xi_s)), verify=False)
    if kind == "hn3":
        n_s, xi_s, zeta_s = rest.split(":")
        return omega_from_extension(
            family_hn3(int(n_s), int(xi_s), int(zeta_s)), verify=False
        )
    if kind == "suzuki":
        n_s, l_s, a_s, b_s = rest.split(":")
        return family_suzuki_cyclic(int(n_s), int(l_s), int(a_s), int(b_s))
    if kind == "suzukiP":
        n_s, l_s, b_s = rest.split(":")
        return family_suzuki_noncyclic(int(n_s), int(l_s), int(b_s))
    if kind == "bismash":
        return family_bismash(pair_from_file(rest))
    raise ValueError(f"unknown family spec: {spec!r}")
