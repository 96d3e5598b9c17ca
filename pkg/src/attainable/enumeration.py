"""Brute-force enumeration of partitions and the counts a(n), z0(n), z(m).

Everything here is computed by walking every partition of n, so it serves
as the reference against which the generating functions are checked.
"""

from dataclasses import dataclass

from .errors import PreconditionError
from .partitions import Partition, cyclicity_index


def _nonnegative(n):
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise PreconditionError(f"expected a non-negative integer, got {n!r}")
    return int(n)


def _descending(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def partitions(n):
    """Yield every partition of ``n`` once, in reverse lexicographic order.

    >>> [tuple(p) for p in partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    n = _nonnegative(n)
    for parts in _descending(n, n):
        yield Partition._trusted(parts)


def attainable_partitions(n):
    return [lam for lam in partitions(n) if lam and cyclicity_index(lam) >= 0]


def zero_cyclicity_partitions(n):
    return [lam for lam in partitions(n) if lam and cyclicity_index(lam) == 0]


def count_attainable(n):
    n = _nonnegative(n)
    if n == 0:
        return 1
    return sum(1 for lam in partitions(n) if cyclicity_index(lam) >= 0)


def count_zero_cyclicity(n):
    n = _nonnegative(n)
    if n == 0:
        return 1
    # odd n is enumerated too rather than short-circuited by parity
    return sum(1 for lam in partitions(n) if cyclicity_index(lam) == 0)


def z(m):
    """Number of partitions of ``2m`` with cyclicity index zero."""
    return count_zero_cyclicity(2 * _nonnegative(m))


@dataclass(frozen=True)
class CountsTable:
    upto: int
    a: tuple
    z0: tuple

    @property
    def z(self):
        return self.z0[::2]


def counts_table(upto):
    """Tabulate ``a(0..upto)`` and ``z0(0..upto)`` in a single pass per n."""
    upto = _nonnegative(upto)
    a, z0 = [1], [1]
    for n in range(1, upto + 1):
        na = nz = 0
        for lam in partitions(n):
            c = cyclicity_index(lam)
            if c >= 0:
                na += 1
                if c == 0:
                    nz += 1
        a.append(na)
        z0.append(nz)
    return CountsTable(upto, tuple(a), tuple(z0))
