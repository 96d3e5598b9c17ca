"""Reference computations that share no code path with the library.

Each function here recomputes a quantity from first principles so tests can
compare the library against it rather than against itself.
"""

from itertools import product
from math import gcd, isqrt, lcm


def partition_numbers(upto):
    """p(0..upto) by Euler's pentagonal number recurrence."""
    p = [1] + [0] * upto
    for n in range(1, upto + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def gl_order(n, p):
    """|GL_n(F_p)| = prod_{i<n} (p^n - p^i)."""
    out = 1
    for i in range(n):
        out *= p**n - p**i
    return out


def count_automorphisms(p, parts):
    """Exhaustively count automorphisms of Z/p^n_1 x ... x Z/p^n_r.

    A homomorphism is fixed by the images x_1..x_r of the standard
    generators, subject to p^{n_i} x_i = 0.  It is bijective iff, for every k,
    the images x_1..x_k generate a subgroup of order p^{n_1 + ... + n_k}.
    The number of valid continuations only depends on the subgroup generated
    so far, which is memoized; every candidate image is still tested.
    """
    moduli = [p**e for e in parts]
    elements = list(product(*[range(m) for m in moduli]))

    def add(x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, moduli))

    def scale(x, k):
        return tuple((a * k) % m for a, m in zip(x, moduli))

    zero = tuple(0 for _ in moduli)

    def closure(gens):
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    memo = {}

    def extend(k, subgroup):
        if k == len(parts):
            return 1
        key = (k, subgroup)
        if key in memo:
            return memo[key]
        want = len(subgroup) * moduli[k]
        total = 0
        for x in elements:
            if scale(x, moduli[k]) != zero:
                continue
            grown = closure(list(subgroup) + [x]) if x not in subgroup else subgroup
            if len(grown) == want:
                total += extend(k + 1, grown)
        memo[key] = total
        return total

    return extend(0, frozenset([zero]))


def is_squarefree(m):
    m = abs(m)
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


def fundamental_discriminants(lo):
    """All negative fundamental discriminants >= lo, built from squarefree d < 0."""
    out = set()
    for d in range(-1, lo - 1, -1):
        if not is_squarefree(d):
            continue
        D = d if d % 4 == 1 else 4 * d
        if D >= lo:
            out.add(D)
    return sorted(out)


def kronecker(D, n):
    """Kronecker symbol (D/n) for n >= 1."""
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    # Jacobi symbol (D/n), n odd
    a = D % n if n > 1 else 0
    if n == 1:
        return result
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def analytic_class_number(D):
    """h(D) = -(w / 2|D|) * sum_{a=1}^{|D|} chi(a) a for fundamental D < 0."""
    w = {-3: 6, -4: 4}.get(D, 2)
    s = sum(kronecker(D, a) * a for a in range(1, -D))
    h, rem = divmod(-w * s, 2 * -D)
    assert rem == 0
    return h


def brute_reduced_forms(D):
    out = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if a > c:
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            out.append((a, b, c))
    return sorted(out)


def order_histogram(elements, op, identity):
    """Map element order -> number of elements, using naive repeated multiplication."""
    hist = {}
    for g in elements:
        k, x = 1, g
        while x != identity:
            x = op(x, g)
            k += 1
        hist[k] = hist.get(k, 0) + 1
    return hist


def cyclic_product_histogram(moduli):
    """Element-order histogram of Z/m_1 x ... x Z/m_r, by enumeration."""
    hist = {}
    for x in product(*[range(m) for m in moduli]):
        order = 1
        for a, m in zip(x, moduli):
            order = lcm(order, m // gcd(a, m))
        hist[order] = hist.get(order, 0) + 1
    return hist
