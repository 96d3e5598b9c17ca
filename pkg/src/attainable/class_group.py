"""Class groups of imaginary quadratic fields via reduced binary quadratic forms.

Forms are positive definite ``(a, b, c)`` with discriminant ``D = b^2 - 4ac < 0``.
The class group is listed through its reduced representatives and multiplied
by Dirichlet composition followed by reduction.  Its p-parts are read off by
counting, for each k, the classes killed by ``p^k``.
"""

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import NamedTuple

import numpy as np

from .errors import PreconditionError
from .partitions import Partition


class QuadForm(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self):
        a, b, c = self
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def reduce(self):
        return reduce_form(self)

    def opposite(self):
        return reduce_form(QuadForm(self.a, -self.b, self.c))

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


def reduce_form(f):
    """Reduced representative of the class of a positive definite form."""
    a, b, c = f
    if a <= 0 or b * b - 4 * a * c >= 0:
        raise PreconditionError(f"{tuple(f)} is not positive definite")
    while True:
        # normalize so that -a < b <= a
        if not (-a < b <= a):
            q, r = divmod(b, 2 * a)
            if r > a:
                r -= 2 * a
                q += 1
            c -= (b + r) * q // 2
            b = r
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return QuadForm(a, b, c)


def principal_form(D):
    k = D % 2
    return QuadForm(1, k, (k - D) // 4)


def _squarefree(m):
    m = abs(m)
    if m % 4 == 0:
        return False
    if m % 2 == 0:
        m //= 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return False
        d += 2
    return True


def is_fundamental_discriminant(D):
    """True for ``D = 1 mod 4`` squarefree, or ``D = 4m`` with ``m = 2, 3 mod 4`` squarefree."""
    D = int(D)
    if D >= 0:
        raise PreconditionError(f"expected a negative discriminant, got {D}")
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _check_discriminant(D, fundamental):
    D = int(D)
    if D >= 0:
        raise PreconditionError(f"expected a negative discriminant, got {D}")
    if D % 4 not in (0, 1):
        raise PreconditionError(f"{D} is not a discriminant (must be 0 or 1 mod 4)")
    if fundamental and not is_fundamental_discriminant(D):
        raise PreconditionError(f"{D} is not a fundamental discriminant")
    return D


def reduced_forms(D, fundamental=True):
    """All primitive reduced forms of discriminant ``D``, principal form first.

    With ``fundamental=False`` any negative discriminant is accepted and only
    primitive forms are returned.  Uses int64 arithmetic: ``|D| < 10**12``.
    """
    D = _check_discriminant(D, fundamental)
    if -D >= 10**12:
        raise PreconditionError(f"|D| = {-D} exceeds the supported range")
    forms = []
    bmax = isqrt(-D // 3)
    for b in range(D % 2, bmax + 1, 2):
        N = (b * b - D) // 4
        hi = isqrt(N)
        lo = max(b, 1)
        if lo > hi:
            continue
        a = np.arange(lo, hi + 1, dtype=np.int64)
        for a_ in a[N % a == 0].tolist():
            c_ = N // a_
            if not fundamental and gcd(gcd(a_, b), c_) != 1:
                continue
            forms.append(QuadForm(a_, b, c_))
            if 0 < b < a_ < c_:
                forms.append(QuadForm(a_, -b, c_))
    forms.sort(key=lambda f: (f.a, abs(f.b), -f.b))
    return forms


def class_number(D, fundamental=True):
    return len(reduced_forms(D, fundamental))


def _xgcd(a, b):
    # returns (g, x, y) with a*x + b*y == g >= 0
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def compose(f, g):
    """Reduced representative of the product of the classes of ``f`` and ``g``."""
    D = f.discriminant
    if g.discriminant != D:
        raise PreconditionError(f"discriminant mismatch: {D} vs {g.discriminant}")
    a1, b1, c1 = f
    a2, b2, c2 = g
    if a1 > a2:
        a1, b1, c1, a2, b2, c2 = a2, b2, c2, a1, b1, c1
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, y1, _ = _xgcd(a2, a1)
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, x2, y2 = _xgcd(s, d)
        y2 = -y2
    v1, v2 = a1 // d1, a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - D) // (4 * a3)
    return reduce_form(QuadForm(a3, b3, c3))


def power(f, k):
    """``f**k`` in the class group (``k >= 0``) by square-and-multiply."""
    if k < 0:
        return power(f.opposite(), -k)
    result = principal_form(f.discriminant)
    base = reduce_form(f)
    while k:
        if k & 1:
            result = compose(result, base)
        k >>= 1
        if k:
            base = compose(base, base)
    return result


def factorize(n):
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _exact_log(x, q):
    e = 0
    while x > 1:
        if x % q:
            raise ArithmeticError(f"{x} is not a power of {q}")
        x //= q
        e += 1
    return e


@dataclass(frozen=True)
class ClassGroupStructure:
    """Class group of discriminant ``D``: order ``h`` and the partition of each Sylow subgroup."""

    D: int
    h: int
    sylow: dict = field(default_factory=dict)

    def p_part(self, p):
        return self.sylow.get(p, Partition())

    def invariants(self):
        """Elementary divisors as prime powers, e.g. ``[125, 5, 5, 2]``."""
        return [q**e for q in sorted(self.sylow) for e in self.sylow[q]]


def sylow_partition(forms, q, e):
    """Partition of the q-Sylow subgroup (order ``q**e``) of the group listed by ``forms``."""
    if e == 0:
        return Partition()
    identity = principal_form(forms[0].discriminant)
    current = list(forms)
    killed = [1]
    while killed[-1] < q**e:
        current = [power(f, q) for f in current]
        killed.append(sum(1 for f in current if f == identity))
    # at_least[k-1] = number of cyclic factors of order >= q^k
    at_least = [_exact_log(killed[k] // killed[k - 1], q) for k in range(1, len(killed))]
    return Partition(sum(1 for d in at_least if d >= j) for j in range(1, at_least[0] + 1))


def class_group_structure(D, fundamental=True):
    forms = reduced_forms(D, fundamental)
    h = len(forms)
    sylow = {q: sylow_partition(forms, q, e) for q, e in sorted(factorize(h).items())}
    return ClassGroupStructure(int(D), h, sylow)


@dataclass
class SurveyReport:
    """Tallies over the fundamental discriminants in ``[D_min, D_max]``.

    ``tallies[(p, lam)]`` counts fields whose p-Sylow subgroup is ``G_lam(p)``
    for ``1 <= |lam| <= n_max``; fields with trivial p-part or ``|lam| > n_max``
    go to ``trivial[p]`` and ``beyond[p]`` so every prime's counts add up to
    ``scanned``.
    """

    D_min: int
    D_max: int
    primes: tuple
    n_max: int
    scanned: int = 0
    tallies: Counter = field(default_factory=Counter)
    trivial: Counter = field(default_factory=Counter)
    beyond: Counter = field(default_factory=Counter)
    class_numbers: Counter = field(default_factory=Counter)

    def add(self, structure):
        self.scanned += 1
        self.class_numbers[structure.h] += 1
        for p in self.primes:
            lam = structure.p_part(p)
            if not lam:
                self.trivial[p] += 1
            elif lam.n > self.n_max:
                self.beyond[p] += 1
            else:
                self.tallies[(p, lam)] += 1

    def sorted_tallies(self):
        return sorted(self.tallies.items(), key=lambda kv: (kv[0][0], kv[0][1].n, [-x for x in kv[0][1]]))

    def to_json(self):
        """Structured document; integers are rendered as decimal strings."""
        return {
            "range": [str(self.D_min), str(self.D_max)],
            "primes": [str(p) for p in self.primes],
            "n_max": str(self.n_max),
            "scanned": str(self.scanned),
            "tallies": [
                {"p": str(p), "lambda": ",".join(map(str, lam)), "count": str(count)}
                for (p, lam), count in self.sorted_tallies()
            ],
            "untallied": {
                str(p): {"trivial": str(self.trivial[p]), "beyond_n_max": str(self.beyond[p])}
                for p in self.primes
            },
            "class_number_histogram": {str(h): str(k) for h, k in sorted(self.class_numbers.items())},
        }

    def to_tsv(self):
        lines = [
            f"# range\t{self.D_min}\t{self.D_max}",
            f"# scanned\t{self.scanned}",
            "record\tkey\tlambda\tcount",
        ]
        for (p, lam), count in self.sorted_tallies():
            lines.append(f"tally\t{p}\t{','.join(map(str, lam))}\t{count}")
        for p in self.primes:
            lines.append(f"trivial\t{p}\t\t{self.trivial[p]}")
            lines.append(f"beyond_n_max\t{p}\t\t{self.beyond[p]}")
        for h, k in sorted(self.class_numbers.items()):
            lines.append(f"class_number\t{h}\t\t{k}")
        return "\n".join(lines) + "\n"


def _structure_or_none(D):
    if not is_fundamental_discriminant(D):
        return None
    return class_group_structure(D)


def survey(D_min, D_max, primes=(3,), n_max=6, jobs=1):
    """Class-group statistics over every fundamental discriminant in ``[D_min, D_max]``.

    ``jobs > 1`` spreads discriminants over worker processes; the merged
    report does not depend on it.
    """
    D_min, D_max = int(D_min), int(D_max)
    if D_max >= 0:
        raise PreconditionError("survey range must consist of negative discriminants")
    if D_min > D_max:
        raise PreconditionError(f"empty or inverted range [{D_min}, {D_max}]")
    report = SurveyReport(D_min, D_max, tuple(int(p) for p in primes), int(n_max))
    discriminants = range(D_min, D_max + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_structure_or_none, discriminants, chunksize=64))
    else:
        results = map(_structure_or_none, discriminants)
    for structure in results:
        if structure is not None:
            report.add(structure)
    return report


def class_number_upper_bound(D):
    """Coarse ``sqrt|D| (log|D| + 2)`` ceiling, used as a sanity check only."""
    return math.sqrt(-D) * (math.log(-D) + 2)
