"""Partitions of 2m with cyclicity index 0 <-> partitions of m into triangular numbers.

For ``lam = (n_1, ..., n_r)`` with ``c(lam) = 0`` we have
``n_1 = n_2 + 3 n_3 + ... + (2r - 3) n_r``, hence
``2m = sum_{i=2}^{r} 2 t_{i-1} (n_i - n_{i+1})`` with ``n_{r+1} = 0``
and ``t_j = j(j+1)/2``.  The multiplicity of ``t_{i-1}`` is ``n_i - n_{i+1}``.
"""

from dataclasses import dataclass
from math import isqrt

from .errors import PreconditionError
from .partitions import Partition, as_partition, cyclicity_index


def triangular(i):
    return i * (i + 1) // 2


def triangular_index(t):
    """Return ``i`` with ``t == i(i+1)/2``, or raise if ``t`` is not triangular."""
    if t < 1:
        raise PreconditionError(f"{t} is not a positive triangular number")
    i = (isqrt(8 * t + 1) - 1) // 2
    if triangular(i) != t:
        raise PreconditionError(f"{t} is not a triangular number")
    return i


@dataclass(frozen=True)
class TriangularMultiset:
    """Multiset of triangular numbers, keyed by triangular index.

    ``multiplicities`` is a tuple of ``(i, c_i)`` pairs, increasing in ``i``,
    with every ``c_i > 0``; it stands for ``sum(c_i * t_i)``.
    """

    multiplicities: tuple = ()

    def __post_init__(self):
        merged = {}
        for i, c in self.multiplicities:
            if i < 1 or c < 0:
                raise PreconditionError(f"bad multiplicity entry ({i}, {c})")
            if c:
                merged[i] = merged.get(i, 0) + c
        object.__setattr__(self, "multiplicities", tuple(sorted(merged.items())))

    @classmethod
    def from_parts(cls, values):
        counts = {}
        for t in values:
            i = triangular_index(int(t))
            counts[i] = counts.get(i, 0) + 1
        return cls(tuple(counts.items()))

    @property
    def total(self):
        return sum(c * triangular(i) for i, c in self.multiplicities)

    def parts(self):
        """Triangular values, largest first."""
        out = []
        for i, c in reversed(self.multiplicities):
            out.extend([triangular(i)] * c)
        return tuple(out)

    def as_dict(self):
        return dict(self.multiplicities)

    def __bool__(self):
        return bool(self.multiplicities)

    def __str__(self):
        return ",".join(map(str, self.parts()))


def zero_to_triangular(lam):
    """Map a cyclicity-0 partition of ``2m`` to a triangular partition of ``m``."""
    lam = as_partition(lam)
    if not lam or cyclicity_index(lam) != 0:
        raise PreconditionError(f"{lam} does not have cyclicity index 0")
    parts = tuple(lam) + (0,)
    return TriangularMultiset(
        tuple((i - 1, parts[i - 1] - parts[i]) for i in range(2, len(lam) + 1))
    )


def triangular_to_zero(T):
    """Inverse of :func:`zero_to_triangular`."""
    if not isinstance(T, TriangularMultiset):
        T = TriangularMultiset.from_parts(T)
    if not T:
        raise PreconditionError("the empty multiset has no preimage")
    c = T.as_dict()
    top = max(c)  # r - 1
    r = top + 1
    tail = [0] * (r + 2)  # tail[i] = n_i for 2 <= i <= r
    for i in range(r, 1, -1):
        tail[i] = tail[i + 1] + c.get(i - 1, 0)
    n1 = sum((2 * i - 3) * tail[i] for i in range(2, r + 1))
    return Partition._trusted((n1,) + tuple(tail[2 : r + 1]))


def _triangular_descending(m, idx):
    # parts t_idx, t_{idx-1}, ..., t_1 in non-increasing order
    if m == 0:
        yield ()
        return
    for i in range(idx, 0, -1):
        t = triangular(i)
        if t <= m:
            for rest in _triangular_descending(m - t, i):
                yield (t,) + rest


def triangular_partitions(m):
    """Every partition of ``m`` into triangular numbers.

    Ordered reverse-lexicographically on the descending part sequence, so
    the largest first part comes first.
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise PreconditionError(f"m must be a positive integer, got {m!r}")
    top = triangular_index_floor(m)
    return [TriangularMultiset.from_parts(p) for p in _triangular_descending(m, top)]


def triangular_index_floor(m):
    """Largest ``i`` with ``t_i <= m``."""
    return (isqrt(8 * m + 1) - 1) // 2
