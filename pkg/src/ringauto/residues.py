"""Exact arithmetic in the residue ring Z_n.

Residues are kept as least nonnegative representatives.  Most of the
library works on plain ``int`` values together with a modulus ``n``; the
:class:`Residue` wrapper is the typed surface for callers who want the
modulus carried along with the value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .errors import BadInput, ModulusMismatch, NotAUnit

MAX_MODULUS = 2**63 - 1


def check_modulus(n: int) -> int:
    """Validate a modulus and return it as an ``int``."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise BadInput(f"modulus must be an integer, got {n!r}")
    if n < 2:
        raise BadInput(f"modulus must be at least 2, got {n}")
    if n > MAX_MODULUS:
        raise BadInput(f"modulus {n} exceeds the 64-bit bound")
    return n


@dataclass(frozen=True, order=True)
class Residue:
    """An element of Z_n stored as its least nonnegative representative."""

    value: int
    n: int

    def __post_init__(self) -> None:
        check_modulus(self.n)
        object.__setattr__(self, "value", self.value % self.n)

    def _coerce(self, other: Residue | int) -> int:
        if isinstance(other, Residue):
            if other.n != self.n:
                raise ModulusMismatch(f"Z_{self.n} vs Z_{other.n}")
            return other.value
        return other

    def __add__(self, other: Residue | int) -> Residue:
        return Residue(self.value + self._coerce(other), self.n)

    __radd__ = __add__

    def __sub__(self, other: Residue | int) -> Residue:
        return Residue(self.value - self._coerce(other), self.n)

    def __rsub__(self, other: int) -> Residue:
        return Residue(other - self.value, self.n)

    def __mul__(self, other: Residue | int) -> Residue:
        return Residue(self.value * self._coerce(other), self.n)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.n)

    def __pow__(self, k: int) -> Residue:
        if k < 0:
            return inverse(self) ** (-k)
        return Residue(pow(self.value, k, self.n), self.n)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def gcd_all(xs, n: int) -> int:
    """Return gcd(xs ∪ {n}); always a positive divisor of ``n``."""
    return reduce(math.gcd, (int(x) for x in xs), check_modulus(n))


def is_unit(r: Residue) -> bool:
    return math.gcd(r.value, r.n) == 1


def inverse(r: Residue) -> Residue:
    """Multiplicative inverse of a unit of Z_n."""
    if not is_unit(r):
        raise NotAUnit(f"{r.value} is not a unit mod {r.n}")
    return Residue(pow(r.value, -1, r.n), r.n)


def inv_mod(a: int, n: int) -> int:
    """Integer-level inverse of ``a`` modulo ``n``."""
    try:
        return pow(a, -1, n)
    except ValueError:
        raise NotAUnit(f"{a} is not a unit mod {n}") from None


def is_nilpotent(r: Residue) -> bool:
    # every prime exponent of n is at most log2(n) <= bit_length(n)
    return pow(r.value, r.n.bit_length(), r.n) == 0


def solve_linear(a: Residue, b: Residue) -> list[Residue]:
    """All ``c`` in Z_n with ``a*c = b``, ascending.

    The list is empty when gcd(a, n) does not divide b; otherwise it has
    exactly gcd(a, n) entries.
    """
    if a.n != b.n:
        raise ModulusMismatch(f"Z_{a.n} vs Z_{b.n}")
    n = a.n
    g = math.gcd(a.value, n)
    if b.value % g:
        return []
    step = n // g
    c0 = (b.value // g) * pow(a.value // g, -1, step) % step if step > 1 else 0
    return [Residue(c0 + t * step, n) for t in range(g)]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, primes ascending."""
    m = check_modulus(n)
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def radical(n: int) -> int:
    return math.prod(p for p, _ in factorize(n))


def nilpotency_index(n: int) -> int:
    """Largest prime exponent of ``n``: N(Z_n)^e = 0 for this e."""
    return max(e for _, e in factorize(n))


def euler_phi(n: int) -> int:
    return math.prod((p - 1) * p ** (e - 1) for p, e in factorize(n))


def units(n: int) -> list[int]:
    return [u for u in range(1, n) if math.gcd(u, n) == 1] if n > 1 else []


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def unit_in_progression(a: int, b: int, n: int) -> int:
    """Return ``k >= 0`` with gcd(a + k*b, n) = 1.

    Let r be the product of the primes of n that do not divide b.  Then
    k = (1 - a) * b^{-1} mod r makes a + k*b = 1 (mod r), and every prime
    of n that divides b cannot divide a + k*b because gcd(a, b) = 1.
    The least nonnegative k of that residue class is returned.
    """
    check_modulus(n)
    if a <= 0 or b <= 0:
        raise BadInput(f"a and b must be positive, got a={a}, b={b}")
    if math.gcd(a, b) != 1:
        raise BadInput(f"gcd({a}, {b}) != 1")
    r = math.prod(p for p, _ in factorize(n) if b % p)
    if r == 1:
        return 0
    return (1 - a) * pow(b, -1, r) % r
