"""Deterministic height-ordered enumeration of coefficient vectors.

Sampled searches must report the first witness in a fixed order, independent
of any internal parallelism, so the enumeration order is part of the
contract: scalars are listed by increasing height (max of |numerator| and
denominator over Q, the residue value over F_p), and vectors by the height
of their largest entry, lexicographically within a height level.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import FieldSpec


def scalars_at_height(field: FieldSpec, h: int) -> list:
    """Canonically ordered scalars of height exactly h."""
    if field.is_rationals:
        if h == 0:
            return [Fraction(0)]
        out = []
        for den in range(1, h + 1):
            for num in range(-h, h + 1):
                if gcd(abs(num), den) != 1:
                    continue
                if max(abs(num), den) != h:
                    continue
                out.append(Fraction(num, den))
        return out
    if h == 0:
        return [0]
    return [h] if h < field.p else []


def scalar_pool(field: FieldSpec, max_height: int) -> list:
    pool = []
    for h in range(max_height + 1):
        pool.extend(scalars_at_height(field, h))
    return pool


def vectors(field: FieldSpec, n: int, max_height: int, max_count: int):
    """Yield nonzero coefficient vectors in canonical height order.

    A vector's height is the max height of its entries; at height level h
    every yielded vector has at least one entry of height exactly h.  The
    zero vector is never yielded.  Stops after max_count vectors.
    """
    if n == 0:
        return
    count = 0
    lower: list = scalars_at_height(field, 0)
    for h in range(1, max_height + 1):
        exact = scalars_at_height(field, h)
        if not exact:
            break
        full = lower + exact
        for vec in _vectors_with_level(lower, exact, full, n):
            yield vec
            count += 1
            if count >= max_count:
                return
        lower = full


def _vectors_with_level(lower, exact, full, n):
    """Vectors whose first entry of maximal level sits at position i."""
    for i in range(n):
        for prefix in _tuples(lower, i):
            for v in exact:
                for suffix in _tuples(full, n - 1 - i):
                    yield prefix + (v,) + suffix


def _tuples(pool, k):
    if k == 0:
        yield ()
        return
    for head in pool:
        for tail in _tuples(pool, k - 1):
            yield (head,) + tail


def vector_pairs(field: FieldSpec, n: int, max_height: int, max_count: int):
    """Deterministic pairs (x, y) of sampled vectors, for subalgebra searches.

    Enumerates an m x m triangle over the first m single vectors, m chosen
    so the pair count stays within max_count.
    """
    m = max(2, int(max_count ** 0.5))
    singles = list(vectors(field, n, max_height, m))
    count = 0
    for i in range(len(singles)):
        for j in range(i + 1, len(singles)):
            yield singles[i], singles[j]
            count += 1
            if count >= max_count:
                return
