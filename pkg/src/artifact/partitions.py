"""Integer partition arithmetic: enumeration, orders, and closed-form counts.

Partitions are plain tuples of weakly decreasing positive ints; the empty
tuple is the partition of 0.  Everything downstream (tableaux, characters,
Kronecker and plethysm coefficients) consumes these helpers.
"""

from functools import cache
from math import factorial


class SizeMismatchError(ValueError):
    """Two partitions were expected to have equal size but do not."""


def check_partition(parts):
    """Validate a sequence as a partition and return it as a tuple."""
    p = tuple(parts)
    for i, a in enumerate(p):
        if not isinstance(a, int) or a < 1:
            raise ValueError(f"parts must be positive integers, got {a!r}")
        if i and p[i - 1] < a:
            raise ValueError(f"parts must be weakly decreasing, got {p}")
    return p


def parse_partition(text):
    """Parse '5,4,2' or '2^3,1' into a partition tuple; '-' or '' is empty."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    parts = []
    for term in text.split(","):
        term = term.strip()
        if "^" in term:
            base, _, exp = term.partition("^")
            try:
                a, k = int(base), int(exp)
            except ValueError:
                raise ValueError(f"bad partition term {term!r}") from None
            if k < 1:
                raise ValueError(f"exponent must be >= 1 in {term!r}")
            parts.extend([a] * k)
        else:
            try:
                parts.append(int(term))
            except ValueError:
                raise ValueError(f"bad partition term {term!r}") from None
    return check_partition(parts)


def format_partition(p):
    """Inverse of parse_partition, with exponent form for repeated parts."""
    if not p:
        return "-"
    out = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        out.append(f"{p[i]}^{j - i}" if j - i > 1 else str(p[i]))
        i = j
    return ",".join(out)


def enumerate_partitions(n, max_part=None, max_len=None):
    """All partitions of n (optionally bounded) in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = n if max_part is None else min(max_part, n)
    b = n if max_len is None else max_len
    out = []

    def rec(rem, biggest, room, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        if room == 0:
            return
        for part in range(min(rem, biggest), 0, -1):
            prefix.append(part)
            rec(rem - part, part, room - 1, prefix)
            prefix.pop()

    rec(n, a, b, [])
    return out


@cache
def partition_count(n):
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def conjugate(p):
    """Transpose of the Young diagram."""
    if not p:
        return ()
    return tuple(sum(1 for a in p if a > j) for j in range(p[0]))


def dominance_leq(p, q):
    """True iff p is dominated by q (every prefix sum of p <= that of q)."""
    if sum(p) != sum(q):
        raise SizeMismatchError(f"|{p}| != |{q}|")
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp > sq:
            return False
    return True


def durfee(p):
    """Largest i with p_i >= i (side of the Durfee square)."""
    d = 0
    for i, a in enumerate(p, start=1):
        if a >= i:
            d = i
        else:
            break
    return d


def is_self_conjugate(p):
    return tuple(p) == conjugate(p)


def principal_hooks(p):
    """Diagonal hook lengths (2p_i - (2i-1)) of a self-conjugate partition."""
    p = tuple(p)
    if not is_self_conjugate(p):
        raise ValueError(f"{p} is not self-conjugate")
    return tuple(2 * p[i] - (2 * i + 1) for i in range(durfee(p)))


def cycle_counts(alpha):
    """Map part -> multiplicity for a cycle type."""
    counts = {}
    for a in alpha:
        counts[a] = counts.get(a, 0) + 1
    return counts


def centralizer_order(alpha):
    """z_alpha = prod i^{c_i} c_i! — order of the centralizer of the class."""
    z = 1
    for i, c in cycle_counts(alpha).items():
        z *= i**c * factorial(c)
    return z


def class_size(alpha):
    """Number of permutations of cycle type alpha: n!/z_alpha."""
    return factorial(sum(alpha)) // centralizer_order(alpha)


def hook_lengths(p):
    """Hook length of every cell, as a row-by-row list of lists."""
    conj = conjugate(p)
    return [
        [p[i] - j + conj[j] - i - 1 for j in range(p[i])] for i in range(len(p))
    ]


def dimension_hlf(p):
    """Number of standard Young tableaux of shape p (hook-length formula)."""
    n = sum(p)
    prod = 1
    for row in hook_lengths(p):
        for h in row:
            prod *= h
    return factorial(n) // prod


@cache
def count_bounded(r, a, b):
    """Partitions of r with largest part <= a and at most b parts (p_r(a,b))."""
    if r < 0:
        return 0
    if r == 0:
        return 1
    if a <= 0 or b <= 0:
        return 0
    return count_bounded(r, a - 1, b) + count_bounded(r - a, a, b - 1)


def contains(inner, outer):
    """True iff the diagram of inner fits inside outer cellwise."""
    return all(
        (inner[i] if i < len(inner) else 0) <= (outer[i] if i < len(outer) else 0)
        for i in range(len(inner))
    )


def pad(p, n):
    """p[n] = (n - |p|, p_1, p_2, ...); requires n - |p| >= p_1."""
    p = tuple(p)
    head = n - sum(p)
    if head < (p[0] if p else 0):
        raise ValueError(f"cannot pad {p} to size {n}: first row too short")
    return (head, *p) if head > 0 else p


def add(p, q):
    """Componentwise sum of two partitions."""
    return tuple(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
        for i in range(max(len(p), len(q)))
    )


def stretch(p, n):
    """Multiply every part by n."""
    if n == 0:
        return ()
    return tuple(a * n for a in p)


def remove_horizontal_strips(p, size=None):
    """Sub-partitions T of p with p/T a horizontal strip (optionally of given size).

    A horizontal strip has at most one cell per column, i.e. the rows of T
    interlace those of p: p_{i+1} <= T_i <= p_i.
    """
    p = tuple(p)
    results = []

    def rec(i, prefix, removed):
        if size is not None and removed > size:
            return
        if i == len(p):
            if size is None or removed == size:
                results.append(tuple(x for x in prefix if x > 0))
            return
        lo = p[i + 1] if i + 1 < len(p) else 0
        for t in range(p[i], lo - 1, -1):
            prefix.append(t)
            rec(i + 1, prefix, removed + p[i] - t)
            prefix.pop()

    rec(0, [], 0)
    return results


def add_horizontal_strips(p, size):
    """Partitions q of |p|+size with q/p a horizontal strip."""
    p = tuple(p)
    results = []
    rows = len(p) + 1

    def rec(i, prefix, left):
        if i == rows:
            if left == 0:
                results.append(tuple(x for x in prefix if x > 0))
            return
        cur = p[i] if i < len(p) else 0
        # at most one new cell per column: q_i <= p_{i-1}
        hi = min(cur + left, p[i - 1]) if i else cur + left
        for q in range(hi, cur - 1, -1):
            prefix.append(q)
            rec(i + 1, prefix, left - (q - cur))
            prefix.pop()

    rec(0, [], size)
    return results


def subdiagrams(p):
    """All partitions whose diagram fits inside p, in increasing size order."""
    p = tuple(p)
    out = [()]

    def build(i, prefix):
        if i == len(p):
            return
        top = min(p[i], prefix[-1]) if prefix else p[i]
        for v in range(top, 0, -1):
            cand = (*prefix, v)
            out.append(cand)
            build(i + 1, cand)

    build(0, ())
    out.sort(key=lambda q: (sum(q), q))
    return out
