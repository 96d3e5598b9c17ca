"""Truncated power series with exact integer coefficients.

Three products are provided:

* ``attainable_series(N)``: ``1/(1-q) * prod_i 1/(1 - q^(i(i+1)))``, counting
  attainable partitions;
* ``zero_cyclicity_series(N)``: ``prod_i 1/(1 - q^(i(i+1)))``, counting
  partitions of cyclicity index zero;
* ``triangular_series(N)``: ``prod_i 1/(1 - q^(i(i+1)/2))``, counting
  partitions into triangular numbers.
"""

from .errors import PreconditionError


class PowerSeries:
    """Coefficients ``c_0, ..., c_N`` of a series truncated after ``q^N``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, N=None):
        coeffs = [int(c) for c in coeffs]
        if N is None:
            N = len(coeffs) - 1
        if N < 0:
            raise PreconditionError("truncation order must be >= 0")
        coeffs = coeffs[: N + 1] + [0] * (N + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, N):
        return cls([1], N)

    @property
    def N(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r}, N={self.N})"

    def __mul__(self, other):
        return multiply(self, other)

    def __sub__(self, other):
        _check_same(self, other)
        return PowerSeries([x - y for x, y in zip(self, other)], self.N)

    def truncate(self, N):
        if N > self.N:
            raise PreconditionError(f"cannot extend a series truncated at {self.N} to {N}")
        return PowerSeries(self.coeffs[: N + 1], N)

    def substitute_power(self, k, N=None):
        """Series in ``q^k`` in place of ``q``, truncated at ``N`` (default: same N)."""
        N = self.N if N is None else N
        out = [0] * (N + 1)
        for i, c in enumerate(self.coeffs):
            if i * k > N:
                break
            out[i * k] = c
        return PowerSeries(out, N)


def _check_same(f, g):
    if f.N != g.N:
        raise PreconditionError(f"truncation mismatch: {f.N} vs {g.N}")


def multiply(f, g):
    """Cauchy product of two series sharing a truncation order."""
    _check_same(f, g)
    N = f.N
    out = [0] * (N + 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j in range(N + 1 - i):
                out[i + j] += a * g.coeffs[j]
    return PowerSeries(out, N)


def _divide_one_minus_qk(coeffs, k):
    # in place: coeffs <- coeffs / (1 - q^k)
    for j in range(k, len(coeffs)):
        coeffs[j] += coeffs[j - k]


def inverse_one_minus_qk(k, N):
    """``1/(1 - q^k)``: ones at multiples of ``k``."""
    if k < 1:
        raise PreconditionError("k must be positive")
    if N < 0:
        raise PreconditionError("truncation order must be >= 0")
    return PowerSeries([1 if j % k == 0 else 0 for j in range(N + 1)], N)


def _product(exponents, N, extra=()):
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for k in list(extra) + list(exponents):
        _divide_one_minus_qk(coeffs, k)
    return PowerSeries(coeffs, N)


def oblong_numbers(N):
    """``i(i+1)`` for ``i >= 1`` while ``<= N``."""
    out, i = [], 1
    while i * (i + 1) <= N:
        out.append(i * (i + 1))
        i += 1
    return out


def triangular_numbers(N):
    """``i(i+1)/2`` for ``i >= 1`` while ``<= N``."""
    out, i = [], 1
    while i * (i + 1) // 2 <= N:
        out.append(i * (i + 1) // 2)
        i += 1
    return out


def _order(N):
    if isinstance(N, bool) or int(N) != N or N < 0:
        raise PreconditionError(f"truncation order must be a non-negative integer, got {N!r}")
    return int(N)


def attainable_series(N):
    N = _order(N)
    return _product(oblong_numbers(N), N, extra=(1,))


def zero_cyclicity_series(N):
    N = _order(N)
    return _product(oblong_numbers(N), N)


def triangular_series(N):
    N = _order(N)
    return _product(triangular_numbers(N), N)
