"""Automorphism orders, Cohen-Lenstra weights and heuristic class-group counts
for the abelian p-groups ``G_lam(p) = Z/p^n_1 x ... x Z/p^n_r``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .enumeration import partitions
from .errors import PreconditionError
from .partitions import Partition, as_partition, cyclicity_index

#: Constant in the predicted asymptotics; override with ``ATTAINABLE_CONSTANT`` in the CLI.
DEFAULT_CONSTANT = 11.317


def is_prime(p):
    """Deterministic trial division; intended for small inputs."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_odd_prime(p):
    if isinstance(p, bool) or int(p) != p or p < 3 or not is_prime(int(p)):
        raise PreconditionError(f"p must be an odd prime, got {p!r}")
    return int(p)


@dataclass(frozen=True)
class PGroupShape:
    """The group ``G_lam(p)``, of order ``p**n`` with ``n = |lam|``."""

    p: int
    lam: Partition

    def __post_init__(self):
        object.__setattr__(self, "p", _check_odd_prime(self.p))
        lam = as_partition(self.lam)
        if not lam:
            raise PreconditionError("G_lam(p) needs a non-empty partition")
        object.__setattr__(self, "lam", lam)

    @property
    def n(self):
        return self.lam.n

    @property
    def order(self):
        return self.p**self.n


@dataclass(frozen=True)
class AutOrderFactored:
    """``p**exponent * prod_(part, m) prod_{j=1..m} (1 - p**-j)``."""

    p: int
    exponent: int
    unit_factors: tuple  # ((part, multiplicity), ...)

    @property
    def value(self):
        shift = sum(m * (m + 1) // 2 for _, m in self.unit_factors)
        out = self.p ** (self.exponent - shift)
        for _, m in self.unit_factors:
            for j in range(1, m + 1):
                out *= self.p**j - 1
        return out

    def rational_value(self):
        out = Fraction(self.p**self.exponent)
        for _, m in self.unit_factors:
            for j in range(1, m + 1):
                out *= 1 - Fraction(1, self.p**j)
        return out


def _shape(shape_or_p, lam=None):
    if isinstance(shape_or_p, PGroupShape):
        return shape_or_p
    return PGroupShape(shape_or_p, lam)


def aut_order_factored(shape, lam=None):
    shape = _shape(shape, lam)
    return AutOrderFactored(
        shape.p, 2 * shape.n - cyclicity_index(shape.lam), tuple(shape.lam.multiplicities())
    )


def aut_order(shape, lam=None):
    """Exact ``|Aut(G_lam(p))|``.

    Accepts either a :class:`PGroupShape` or ``(p, lam)``.

    >>> aut_order(3, (1, 1))
    48
    """
    return aut_order_factored(shape, lam).value


@lru_cache(maxsize=256)
def _inverse_aut_total(p, n):
    return sum(Fraction(1, aut_order(p, lam)) for lam in partitions(n))


def cohen_lenstra_weight(shape, lam=None):
    """``(1/|Aut G|) / sum_{G'} 1/|Aut G'|`` over abelian groups of order ``|G|``."""
    shape = _shape(shape, lam)
    return Fraction(1, aut_order(shape)) / _inverse_aut_total(shape.p, shape.n)


def weight_asymptotic_exponent(lam):
    """``c(lam) - n``: the weight behaves like ``p**(c - n)`` for large p."""
    lam = as_partition(lam)
    return cyclicity_index(lam) - lam.n


@dataclass(frozen=True)
class Prediction:
    """Heuristic count of imaginary quadratic fields with a given p-part.

    ``kind`` is ``"pointwise"`` (c > 0: count for one prime), ``"cumulative"``
    (c = 0: sum over primes up to x) or ``"finite"`` (c < 0: no number, only
    finitely many primes expected).
    """

    c: int
    n: int
    constant: float
    kind: str
    value: float | None = None


def _kind(c):
    if c > 0:
        return "pointwise"
    if c == 0:
        return "cumulative"
    return "finite"


def predicted_count(shape, lam=None, constant=DEFAULT_CONSTANT):
    """``(constant / n) * p**c / log p`` for c > 0; the ``finite`` marker for c < 0."""
    shape = _shape(shape, lam)
    c, n = cyclicity_index(shape.lam), shape.n
    if c == 0:
        raise PreconditionError("c(lam) = 0: use predicted_cumulative for a sum over primes")
    if c < 0:
        return Prediction(c, n, constant, "finite")
    value = constant / n * shape.p**c / math.log(shape.p)
    return Prediction(c, n, constant, "pointwise", value)


def predicted_cumulative(lam, x, constant=DEFAULT_CONSTANT):
    """``(constant / n) * x / (log x)**2``, the predicted sum over primes p <= x for c = 0."""
    lam = as_partition(lam)
    c, n = cyclicity_index(lam), lam.n
    if c != 0:
        raise PreconditionError(f"cumulative prediction needs c(lam) = 0, got {c}")
    if not x > 1:
        raise PreconditionError(f"x must exceed 1, got {x!r}")
    return Prediction(c, n, constant, "cumulative", constant / n * x / math.log(x) ** 2)


def prediction_kind(lam):
    return _kind(cyclicity_index(lam))
