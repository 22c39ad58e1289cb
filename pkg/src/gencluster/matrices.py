"""Tiny exact matrix helpers on tuples of row tuples.

Everything in this package works with matrices small enough (rank <= 8)
that plain tuples plus Fraction arithmetic beat pulling in a numeric
dependency, and exactness is non-negotiable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations


def freeze(rows):
    return tuple(tuple(r) for r in rows)


def identity(n, one=1):
    return tuple(tuple(one if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                 for row in a)


def scale_columns(a, d):
    """a * diag(d)"""
    return tuple(tuple(x * dj for x, dj in zip(row, d)) for row in a)


def scale_rows(d, a):
    """diag(d) * a"""
    return tuple(tuple(di * x for x in row) for di, row in zip(d, a))


def is_skew_symmetric(a):
    n = len(a)
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(n))


def det(a):
    """Exact determinant by signed permutation expansion (fine for n <= 5)."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # count inversions for the parity
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        prod = Fraction(1)
        for i in range(n):
            prod *= Fraction(a[i][perm[i]])
        total += sign * prod
    return total
