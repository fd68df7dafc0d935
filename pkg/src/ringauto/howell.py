"""Howell normal form of submodules of (Z_n)^k.

Z_n is not a field, so plain Gaussian elimination loses information: a row
with pivot ``g`` also contributes ``(n/g) * row``, which vanishes in the pivot
column but not necessarily further right.  The Howell form keeps those
multiples, which buys two properties used throughout the package:

* for every column index ``j``, the rows whose pivot lies at or after ``j``
  span exactly the vectors of the module that vanish before ``j``;
* with pivots dividing ``n`` and entries above each pivot reduced into
  ``[0, pivot)``, the nonzero rows are unique for the module.
"""

from __future__ import annotations

import math

from .residues import unit_in_progression

Row = list[int]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def _normalizing_unit(a: int, n: int) -> int:
    """A unit ``w`` of Z_n with ``w*a ≡ gcd(a, n)``."""
    g = math.gcd(a, n)
    m = n // g
    if m == 1:
        return 1
    w0 = pow(a // g, -1, m)
    return (w0 + unit_in_progression(w0, m, n) * m) % n


def pivot_of(row: Row) -> int | None:
    return next((j for j, v in enumerate(row) if v), None)


def howell_form(rows: list[Row], n: int, ncols: int | None = None) -> list[Row]:
    """Howell basis (nonzero rows only) of the row span of ``rows`` over Z_n."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    work = [[v % n for v in r] for r in rows]
    work = [r for r in work if any(r)]
    basis: list[Row] = []
    for col in range(ncols):
        live = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        if not live:
            continue
        piv = live[0]
        for other in live[1:]:
            g, s, t = _xgcd(piv[col], other[col])
            p_a, o_a = piv[col] // g, other[col] // g
            new_piv = [(s * x + t * y) % n for x, y in zip(piv, other)]
            new_other = [(-o_a * x + p_a * y) % n for x, y in zip(piv, other)]
            piv = new_piv
            if any(new_other):
                rest.append(new_other)
        w = _normalizing_unit(piv[col], n)
        piv = [w * v % n for v in piv]
        ann = [(n // piv[col]) * v % n for v in piv]
        if any(ann):
            rest.append(ann)
        basis.append(piv)
        work = rest
    # reduce entries above each pivot into [0, pivot); going left to right,
    # a later row never touches a column that is already reduced
    for i in range(len(basis)):
        col = pivot_of(basis[i])
        g = basis[i][col]
        for k in range(i):
            q = basis[k][col] // g
            if q:
                basis[k] = [(x - q * y) % n for x, y in zip(basis[k], basis[i])]
    return basis


def reduce_vector(vec: Row, basis: list[Row], n: int) -> Row:
    """Remainder of ``vec`` against a Howell basis; zero iff ``vec`` is in the span."""
    v = [x % n for x in vec]
    for row in basis:
        col = pivot_of(row)
        g = row[col]
        q = v[col] // g
        if q:
            v = [(x - q * y) % n for x, y in zip(v, row)]
    return v


def contains(basis: list[Row], vec: Row, n: int) -> bool:
    return not any(reduce_vector(vec, basis, n))


def kernel(images: list[Row], n: int) -> list[Row]:
    """Howell basis of ``{c : sum(c_i * images[i]) = 0}`` over Z_n."""
    k = len(images)
    width = len(images[0]) if images else 0
    aug = [list(img) + [1 if j == i else 0 for j in range(k)] for i, img in enumerate(images)]
    hf = howell_form(aug, n, width + k)
    ker = [r[width:] for r in hf if not any(r[:width])]
    return howell_form(ker, n, k)
