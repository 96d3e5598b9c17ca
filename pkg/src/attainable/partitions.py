"""Integer partitions, the cyclicity index and attainability.

A partition ``(n_1, ..., n_r)`` with ``n_1 >= ... >= n_r >= 1`` has
cyclicity index ``sum((3 - 2*i) * n_i)`` (1-based ``i``); it is attainable
when that index is non-negative.
"""

from fractions import Fraction
from math import isqrt

from .errors import PreconditionError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    The constructor canonicalizes: parts are sorted in decreasing order and
    non-positive parts are rejected.  ``Partition()`` is the empty partition
    of 0, used only by the counting conventions ``a(0) = z0(0) = 1``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = [int(x) for x in parts]
        for x in parts:
            if x < 1:
                raise PreconditionError(f"partition parts must be positive, got {x}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def _trusted(cls, parts):
        # caller guarantees canonical order and positivity
        return super().__new__(cls, parts)

    @property
    def n(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def multiplicities(self):
        """Return ``[(part, count), ...]`` over distinct parts, largest first."""
        out = []
        for x in self:
            if out and out[-1][0] == x:
                out[-1][1] += 1
            else:
                out.append([x, 1])
        return [(x, m) for x, m in out]

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


def as_partition(parts):
    if isinstance(parts, Partition):
        return parts
    return Partition(parts)


def _nonempty(lam):
    lam = as_partition(lam)
    if not lam:
        raise PreconditionError("operation requires a non-empty partition")
    return lam


def cyclicity_index(lam):
    """Return ``sum((3 - 2i) n_i)``; an exact, signed Python int."""
    lam = _nonempty(lam)
    return sum((3 - 2 * i) * x for i, x in enumerate(lam, start=1))


def is_attainable(lam):
    return cyclicity_index(lam) >= 0


def primary_addition(lam):
    """``(n_1 + 1, n_2, ..., n_r)``; raises the cyclicity index by one."""
    lam = _nonempty(lam)
    return Partition._trusted((lam[0] + 1,) + lam[1:])


def secondary_addition(lam):
    """``(n_1, n_2 + 1, n_3, ..., n_r)``; lowers the cyclicity index by one.

    Only defined when there are at least two parts and ``n_1 != n_2``.
    """
    lam = _nonempty(lam)
    if len(lam) < 2:
        raise PreconditionError("secondary addition needs at least two parts")
    if lam[0] == lam[1]:
        raise PreconditionError(f"secondary addition undefined when n_1 == n_2 for {lam}")
    return Partition._trusted((lam[0], lam[1] + 1) + lam[2:])


def _positive(n, name="n"):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise PreconditionError(f"{name} must be a positive integer, got {n!r}")
    return int(n)


def max_attainable_length(n):
    """Greatest ``r`` with ``r(r - 1) <= n``, i.e. ``floor((sqrt(4n+1) + 1)/2)``.

    Uses :func:`math.isqrt` so the floor is exact at every boundary.
    """
    n = _positive(n)
    return (isqrt(4 * n + 1) + 1) // 2


def extremal_long_partition(n):
    """The attainable partition ``(n - r + 1, 1, ..., 1)`` of maximal length."""
    r = max_attainable_length(n)
    return Partition._trusted((n - r + 1,) + (1,) * (r - 1))


def min_cyclicity_partition(n):
    """``(m, m)`` for ``n = 2m`` and ``(m + 1, m)`` for ``n = 2m + 1``."""
    n = _positive(n)
    m, odd = divmod(n, 2)
    if odd:
        return Partition._trusted((m + 1, m) if m else (1,))
    return Partition._trusted((m, m))


def part_bound(n, k):
    """Upper bound ``n / (k(k-1))`` on the k-th part of an attainable partition of n."""
    n = _positive(n)
    if int(k) != k or k < 2:
        raise PreconditionError(f"k must be an integer >= 2, got {k!r}")
    return Fraction(n, k * (k - 1))
