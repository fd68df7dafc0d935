"""Dense univariate polynomials over Z_n.

A :class:`Poly` is an immutable, normalized coefficient tuple in ascending
degree order.  Calling a polynomial on another polynomial substitutes it
for ``x``; calling it on an ``int`` evaluates in Z_n.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import total_ordering

from .errors import BadDivisor, InternalCheckFailed, ModulusMismatch, ZeroInput
from .residues import Residue, check_modulus, inv_mod


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares below every integer but refuses arithmetic, so a degree of zero
    can never leak into a sum of degrees by accident.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        check_modulus(self.n)
        object.__setattr__(self, "coeffs", _strip([int(c) % self.n for c in self.coeffs]))

    # -- constructors -----------------------------------------------------
    @classmethod
    def x(cls, n: int) -> Poly:
        return cls((0, 1), n)

    @classmethod
    def const(cls, c: int, n: int) -> Poly:
        return cls((c,), n)

    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls((), n)

    @classmethod
    def monomial(cls, c: int, k: int, n: int) -> Poly:
        return cls((0,) * k + (c,), n)

    # -- inspection -------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def residue(self, k: int) -> Residue:
        return Residue(self.coeff(k), self.n)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def padded(self, length: int) -> list[int]:
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} slots")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: Poly) -> None:
        if self.n != other.n:
            raise ModulusMismatch(f"Z_{self.n}[x] vs Z_{other.n}[x]")

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, Residue):
            if other.n != self.n:
                raise ModulusMismatch(f"Z_{self.n} vs Z_{other.n}")
            return Poly((other.value,), self.n)
        if isinstance(other, int):
            return Poly((other,), self.n)
        return NotImplemented

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(tuple(out), self.n)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs), self.n)

    def __sub__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.n)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(tuple(out), self.n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly((1,), self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, s):
        """Substitute ``s`` for ``x``: a polynomial if ``s`` is one, else a value."""
        if isinstance(s, Poly):
            return compose(self, s)
        v = int(s) % self.n
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * v + c) % self.n
        return acc

    def scale(self, c: int) -> Poly:
        return Poly(tuple(c * a for a in self.coeffs), self.n)

    def shift(self, k: int) -> Poly:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs, self.n)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def compose(g: Poly, s: Poly) -> Poly:
    """Return g(s(x)) by Horner's rule."""
    g._check(s)
    acc = Poly((), g.n)
    for c in reversed(g.coeffs):
        acc = acc * s + c
    return acc


def is_nilpotent_poly(f: Poly) -> bool:
    e = f.n.bit_length()
    return all(pow(c, e, f.n) == 0 for c in f.coeffs)


def is_unit_poly(f: Poly) -> bool:
    e = f.n.bit_length()
    return math.gcd(f.coeff(0), f.n) == 1 and all(pow(c, e, f.n) == 0 for c in f.coeffs[1:])


def divmod_unit_lead(g: Poly, f: Poly) -> tuple[Poly, Poly]:
    """Euclidean division by a polynomial whose leading coefficient is a unit."""
    g._check(f)
    if f.is_zero() or math.gcd(f.lead, f.n) != 1:
        raise BadDivisor(f"leading coefficient of {f} is not a unit mod {f.n}")
    n, d = f.n, len(f.coeffs) - 1
    inv = inv_mod(f.lead, n)
    rem = list(g.coeffs)
    quot = [0] * max(len(rem) - d, 0)
    for k in range(len(rem) - 1, d - 1, -1):
        c = rem[k] * inv % n
        if c:
            quot[k - d] = c
            for i, fi in enumerate(f.coeffs):
                rem[k - d + i] = (rem[k - d + i] - c * fi) % n
    return Poly(tuple(quot), n), Poly(tuple(rem[:d]), n)


def f_adic_expand(g: Poly, f: Poly) -> list[Poly]:
    """Digits (g_0, ..., g_m) of ``g`` in base ``f``.

    ``g = sum(g_k * f**k)`` with every digit zero or of degree below
    ``deg f`` and ``g_m != 0``.  The leading coefficient of ``f`` only has to
    be a unit, not 1.  The expansion is reassembled and checked before it
    is returned.
    """
    g._check(f)
    if g.is_zero():
        raise ZeroInput("the zero polynomial has no f-adic expansion")
    if f.is_zero() or f.degree < 1 or math.gcd(f.lead, f.n) != 1:
        raise BadDivisor(f"{f} needs degree >= 1 and a unit leading coefficient")
    digits = []
    rest = g
    while not rest.is_zero():
        rest, digit = divmod_unit_lead(rest, f)
        digits.append(digit)
    while digits and digits[-1].is_zero():
        digits.pop()
    if reassemble(digits, f) != g:
        raise InternalCheckFailed(f"f-adic expansion of {g} in base {f} does not reassemble")
    return digits


def reassemble(digits: list[Poly], f: Poly) -> Poly:
    acc = Poly((), f.n)
    for d in reversed(digits):
        acc = acc * f + d
    return acc


def in_subring(g: Poly, f: Poly) -> bool:
    """Decide g ∈ Z_n[f] exactly."""
    g._check(f)
    if f.is_constant():
        return g.is_constant()
    if g.is_zero():
        return True
    return all(d.is_constant() for d in f_adic_expand(g, f))


def generates_polynomial_ring(f: Poly) -> bool:
    """True iff Z_n[f] is a polynomial ring over Z_n.

    That happens exactly when the ideal of positive-degree coefficients has
    zero annihilator, i.e. when those coefficients together with ``n`` are
    coprime.
    """
    return math.gcd(f.n, *f.coeffs[1:]) == 1


def parse_poly(text: str, n: int) -> Poly:
    """Parse an ascending JSON-style integer array such as ``[1,2,3]``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed polynomial literal {text!r}: {exc.msg}") from None
    if not isinstance(data, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in data
    ):
        raise ValueError(f"polynomial literal must be an array of integers, got {text!r}")
    return Poly(tuple(data), n)
