"""Exact arithmetic in rings of cyclotomic integers Z[zeta_M].

Internally an element is stored at a conductor M as an integer combination of
the monomials zeta_M^x.  The canonical support is the CRT-style basis: an
exponent x is kept iff, for every prime power p^e || M, the residue x mod p^e
is below phi(p^e).  Reduction uses the vanishing sums
zeta^x + zeta^{x + M/p} + ... + zeta^{x + (p-1)M/p} = 0, which makes zero
tests, equality and integer-divisibility purely coordinatewise.

The power basis 1, zeta, ..., zeta^{phi(M)-1} (remainder modulo the M-th
cyclotomic polynomial) is used for serialization and text rendering.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------------------
# elementary number theory helpers


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: multiplicity}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors of n."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd n >= 1, via quadratic reciprocity."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol requires positive odd n, got {n}")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m == 1:
        return (-1, 1)
    # divide x^m - 1 by the product of Phi_d for proper divisors d
    poly = [0] * (m + 1)
    poly[0], poly[m] = -1, 1
    for d in divisors(m)[:-1]:
        poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials, den monic."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j, dc in enumerate(den):
                num[i - dn + j] -= c * dc
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def _prime_powers(m: int) -> tuple[tuple[int, int, int], ...]:
    """(p, p^e, phi(p^e)) for each prime power in m."""
    return tuple(
        (p, p**e, (p - 1) * p ** (e - 1)) for p, e in sorted(factorize(m).items())
    )


def _canonicalize(m: int, coeffs: dict[int, int]) -> dict[int, int]:
    """Reduce exponent support onto the canonical CRT basis, drop zeros."""
    for p, pe, phi_pe in _prime_powers(m):
        step = m // p
        for x in [x for x in coeffs if x % pe >= phi_pe]:
            c = coeffs.pop(x)
            if c:
                for j in range(1, p):
                    y = (x + j * step) % m
                    coeffs[y] = coeffs.get(y, 0) - c
    return {x: c for x, c in coeffs.items() if c}


class CyclotomicInteger:
    """An exact element of Z[zeta_M], canonically reduced."""

    __slots__ = ("conductor", "_coeffs")

    def __init__(self, conductor: int, coeffs: dict[int, int], *, _reduced: bool = False):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        if not _reduced:
            coeffs = _canonicalize(conductor, {x % conductor: c for x, c in coeffs.items()})
        self.conductor = conductor
        self._coeffs = coeffs
        self._fast_shrink()

    # -- construction -------------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "CyclotomicInteger":
        return cls(1, {0: n} if n else {})

    @classmethod
    def zero(cls) -> "CyclotomicInteger":
        return cls(1, {})

    # -- internal normal form ----------------------------------------------

    def _fast_shrink(self) -> None:
        """Cheap sound conductor lowering: strip prime powers dividing all exponents."""
        m = self.conductor
        if not self._coeffs:
            if m != 1:
                self.conductor = 1
            return
        for p, pe, _ in _prime_powers(m):
            s = pe
            for x in self._coeffs:
                while s > 1 and x % s:
                    s //= p
                if s == 1:
                    break
            if s > 1:
                m2 = self.conductor // s
                self.conductor = m2
                self._coeffs = _canonicalize(m2, {(x // s) % m2: c for x, c in self._coeffs.items()})
        # conductor 2 means coefficients of (-1)^x; fold into integers
        if self.conductor == 2:
            self.conductor = 1

    def _embed(self, target: int) -> dict[int, int]:
        """Coefficients re-expressed at a conductor that self.conductor divides."""
        k = target // self.conductor
        if target % self.conductor:
            raise ValueError("embedding target must be a multiple of the conductor")
        if k == 1:
            return dict(self._coeffs)
        return _canonicalize(target, {x * k: c for x, c in self._coeffs.items()})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "CyclotomicInteger":
        other = _coerce(other)
        m = _lcm(self.conductor, other.conductor)
        a = self._embed(m)
        for x, c in other._embed(m).items():
            a[x] = a.get(x, 0) + c
        return CyclotomicInteger(m, {x: c for x, c in a.items() if c}, _reduced=True)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(
            self.conductor, {x: -c for x, c in self._coeffs.items()}, _reduced=True
        )

    def __sub__(self, other) -> "CyclotomicInteger":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "CyclotomicInteger":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "CyclotomicInteger":
        other = _coerce(other)
        m = _lcm(self.conductor, other.conductor)
        a, b = self._embed(m), other._embed(m)
        out: dict[int, int] = {}
        for x1, c1 in a.items():
            for x2, c2 in b.items():
                x = (x1 + x2) % m
                out[x] = out.get(x, 0) + c1 * c2
        return CyclotomicInteger(m, _canonicalize(m, out), _reduced=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CyclotomicInteger":
        if k < 0:
            raise ValueError("negative powers are not defined in Z[zeta]")
        out = CyclotomicInteger.from_int(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "CyclotomicInteger":
        m = self.conductor
        return CyclotomicInteger(m, {(-x) % m: c for x, c in self._coeffs.items()})

    def galois(self, a: int) -> "CyclotomicInteger":
        """Apply the automorphism zeta_M -> zeta_M^a (a coprime to M)."""
        m = self.conductor
        if math.gcd(a, m) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        return CyclotomicInteger(m, {(a * x) % m: c for x, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, CyclotomicInteger)):
            other = _coerce(other)
        else:
            return NotImplemented
        m = _lcm(self.conductor, other.conductor)
        return self._embed(m) == other._embed(m)

    __hash__ = None  # mutable-free but conductor-relative; use == in sets via lists

    def is_zero(self) -> bool:
        return not self._coeffs

    # -- rationality, minimization, divisibility ----------------------------

    def is_rational(self) -> bool:
        return all(x == 0 for x in self._coeffs)

    def as_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self._coeffs.get(0, 0)

    def minimize(self) -> "CyclotomicInteger":
        """Equal value at the smallest conductor dividing the current one."""
        if self.is_rational():
            return CyclotomicInteger(1, {0: self._coeffs.get(0, 0)}, _reduced=True)
        m = self.conductor
        for d in divisors(m)[:-1]:
            if d % 4 == 2:
                continue
            if self._fixed_by_subgroup(d):
                return self._rewrite_at(d)
        return self

    def _fixed_by_subgroup(self, d: int) -> bool:
        """True iff self is fixed by every zeta -> zeta^a with a = 1 mod d."""
        m = self.conductor
        for a in range(1 + d, m, d):
            if math.gcd(a, m) == 1 and self.galois(a) != self:
                return False
        return True

    def _rewrite_at(self, d: int) -> "CyclotomicInteger":
        """Express self (known to lie in Z[zeta_d]) at conductor d."""
        m = self.conductor
        basis = _subfield_basis(m, d)
        coords = _solve_integer(basis, self._coeffs)
        return CyclotomicInteger(d, {x: c for x, c in zip(_canonical_exponents(d), coords) if c})

    def is_divisible_by_integer(self, n: int) -> bool:
        """True iff self / n is an algebraic integer (n >= 1)."""
        if n < 1:
            raise ValueError("divisor must be a positive integer")
        return all(c % n == 0 for c in self._coeffs.values())

    # -- presentation -------------------------------------------------------

    def power_basis_coeffs(self) -> tuple[int, list[int]]:
        """(minimal conductor M, coordinates in the basis 1, zeta_M, ...)."""
        x = self.minimize()
        m = x.conductor
        phi = euler_phi(m)
        poly = [0] * m
        for e, c in x._coeffs.items():
            poly[e] = c
        rem = _poly_mod(poly, cyclotomic_polynomial(m))
        return m, (rem + [0] * phi)[:phi]

    def to_complex(self) -> complex:
        m = self.conductor
        return sum(
            c * cmath.exp(2j * cmath.pi * x / m) for x, c in self._coeffs.items()
        ) or complex(0)

    def render_text(self) -> str:
        m, coeffs = self.power_basis_coeffs()
        if m == 1:
            return str(coeffs[0])
        parts: list[str] = []
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            term = str(abs(c)) if k == 0 else f"{abs(c)}*z{m}^{k}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts) if parts else "0"

    def to_json_dict(self) -> dict:
        m, coeffs = self.power_basis_coeffs()
        z = self.to_complex()
        return {
            "conductor": m,
            "coeffs": coeffs,
            "approx": {"re": z.real, "im": z.imag},
        }

    def __repr__(self) -> str:
        return f"CyclotomicInteger({self.render_text()!r})"


def _coerce(x) -> CyclotomicInteger:
    if isinstance(x, CyclotomicInteger):
        return x
    if isinstance(x, int):
        return CyclotomicInteger.from_int(x)
    raise TypeError(f"cannot interpret {x!r} as a cyclotomic integer")


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _poly_mod(poly: list[int], mod: tuple[int, ...]) -> list[int]:
    """Remainder of poly modulo a monic integer polynomial, ascending coeffs."""
    poly = list(poly)
    dn = len(mod) - 1
    for i in range(len(poly) - 1, dn - 1, -1):
        c = poly[i]
        if c:
            poly[i] = 0
            for j in range(dn):
                poly[i - dn + j] -= c * mod[j]
    out = poly[:dn]
    while out and out[-1] == 0:
        out.pop()
    return out


@lru_cache(maxsize=None)
def _canonical_exponents(m: int) -> tuple[int, ...]:
    pps = _prime_powers(m)
    return tuple(
        x for x in range(m) if all(x % pe < phi_pe for _, pe, phi_pe in pps)
    )


@lru_cache(maxsize=None)
def _subfield_basis(m: int, d: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Canonical basis monomials of Z[zeta_d] re-reduced at conductor m."""
    k = m // d
    out = []
    for e in _canonical_exponents(d):
        out.append(tuple(sorted(_canonicalize(m, {(e * k) % m: 1}).items())))
    return tuple(out)


def _solve_integer(basis, target: dict[int, int]) -> list[int]:
    """Solve sum_j y_j * basis_j = target with integer y, via exact elimination."""
    rows = sorted({x for vec in basis for x, _ in vec} | set(target))
    idx = {x: i for i, x in enumerate(rows)}
    ncols = len(basis)
    mat = [[Fraction(0)] * (ncols + 1) for _ in rows]
    for j, vec in enumerate(basis):
        for x, c in vec:
            mat[idx[x]][j] = Fraction(c)
    for x, c in target.items():
        mat[idx[x]][ncols] = Fraction(c)
    # Gaussian elimination
    pivots = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pr is None:
            raise ArithmeticError("subfield basis is degenerate")
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][col]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(mat)):
        if mat[i][ncols]:
            raise ArithmeticError("element does not lie in the claimed subfield")
    sol = [mat[i][ncols] for i in range(ncols)]
    if any(v.denominator != 1 for v in sol):
        raise ArithmeticError("non-integral subfield coordinates")
    return [int(v) for v in sol]


# ---------------------------------------------------------------------------
# roots of unity


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2*pi*i*exponent/order), stored with order/exponent in lowest terms."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        k = self.exponent % self.order
        g = math.gcd(k, self.order) if k else self.order
        object.__setattr__(self, "order", self.order // g)
        object.__setattr__(self, "exponent", k // g)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        m = _lcm(self.order, other.order)
        return RootOfUnity(m, self.exponent * (m // self.order) + other.exponent * (m // other.order))

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def multiplicative_order(self) -> int:
        return self.order

    def as_cyclotomic(self) -> CyclotomicInteger:
        return CyclotomicInteger(self.order, {self.exponent: 1})

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.exponent / self.order)


def root(order: int, exponent: int) -> CyclotomicInteger:
    """zeta_order^exponent as an exact cyclotomic integer."""
    if order < 1:
        raise ValueError("order must be positive")
    return CyclotomicInteger(order, {exponent % order: 1})


ONE = CyclotomicInteger.from_int(1)
I_UNIT = root(4, 1)


# ---------------------------------------------------------------------------
# quadratic Gauss sums


def gauss_sum_direct(a: int, m: int) -> CyclotomicInteger:
    """S(a, m) = sum_{i<m} exp(2*pi*i*a*i^2/m), summed literally."""
    if m < 1:
        raise ValueError("modulus must be positive")
    counts: dict[int, int] = {}
    for i in range(m):
        x = (a * i * i) % m
        counts[x] = counts.get(x, 0) + 1
    return CyclotomicInteger(m, counts)


def sqrt_int(n: int) -> CyclotomicInteger:
    """Exact sqrt(n) for n >= 1, as a cyclotomic integer."""
    if n < 1:
        raise ValueError("sqrt_int requires n >= 1")
    out = CyclotomicInteger.from_int(1)
    for p, e in factorize(n).items():
        out = out * (p ** (e // 2))
        if e % 2:
            out = out * _sqrt_prime(p)
    return out


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CyclotomicInteger:
    if p == 2:
        return root(8, 1) + root(8, 7)
    s = gauss_sum_direct(1, p)  # = sqrt(p) or i*sqrt(p)
    if p % 4 == 1:
        return s
    return (-I_UNIT) * s


def gauss_sum_closed(a: int, m: int) -> CyclotomicInteger:
    """S(a, m) by the classical closed forms (quadratic reciprocity case split)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    a %= m
    if m == 1:
        return CyclotomicInteger.from_int(1)
    if a == 0:
        return CyclotomicInteger.from_int(m)
    d = math.gcd(a, m)
    if d > 1:
        return d * gauss_sum_closed(a // d, m // d)
    if m % 2 == 1:
        val = jacobi_symbol(a, m) * sqrt_int(m)
        return val if m % 4 == 1 else I_UNIT * val
    if m % 4 == 0:
        unit = ONE + (I_UNIT if a % 4 == 1 else -I_UNIT)
        return jacobi_symbol(m, a) * sqrt_int(m) * unit
    return CyclotomicInteger.zero()  # m = 2 mod 4


def is_divisible_by_integer(x: CyclotomicInteger, n: int) -> bool:
    return x.is_divisible_by_integer(n)


def divide_by_sqrt_p_and_test(x: CyclotomicInteger, n: int, p: int) -> bool:
    """True iff x * sqrt(p) / n is an algebraic integer; p a prime dividing n."""
    if n < 1 or n % p != 0:
        raise ValueError("p must divide n")
    if factorize(p) != {p: 1}:
        raise ValueError(f"{p} is not prime")
    return (x * sqrt_int(p)).is_divisible_by_integer(n)
