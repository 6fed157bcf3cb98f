"""Kronecker coefficients, their two-row closed form, and reduced variants.

Two independent computation routes exist on purpose.  kron_char contracts
three character rows against the class sizes and divides by n! exactly;
kron_schur_oracle expands a Schur polynomial at pairwise-product variables
and strips the Kostka unitriangularity from both alphabets.  They share no
algorithmic machinery, so their agreement on a corpus is a real check.

Reduced (stable) coefficients use the padded definition with an n0/n0+1
stability check when the padded size stays small, and otherwise an exact
inversion over subdiagrams of the smallest argument: summing ghat over
horizontal-strip predecessors of a shape U equals a class sum that couples
ordinary Kroneckers at |U| with skew Littlewood-Richardson data of the two
big arguments, so ghat is recovered bottom-up in exact integers.
"""

import math
from functools import cache
from multiprocessing import get_context

from .characters import character, character_table
from .partitions import (
    SizeMismatchError,
    add_horizontal_strips,
    check_partition,
    class_size,
    count_bounded,
    enumerate_partitions,
    pad,
    remove_horizontal_strips,
    subdiagrams,
)
from .tableaux import kostka, skew_schur_expansion


class InternalConsistencyError(Exception):
    """An exactness assertion failed; results upstream cannot be trusted."""


def kron_char(lam, mu, nu):
    """g(lam, mu, nu) by the character contraction, exact.

    Accumulates classSize * chi * chi * chi over all classes and divides by
    n! once at the end.  A nonzero remainder or a negative result is not a
    user error but a broken character table, hence the hard failure.
    """
    check_partition(lam)
    check_partition(mu)
    check_partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise SizeMismatchError(
            "Kronecker arguments must share a size, got %d, %d, %d"
            % (n, sum(mu), sum(nu))
        )
    total = 0
    for alpha in enumerate_partitions(n):
        total += (
            class_size(alpha)
            * character(lam, alpha)
            * character(mu, alpha)
            * character(nu, alpha)
        )
    value, rem = divmod(total, math.factorial(n))
    if rem or value < 0:
        raise InternalConsistencyError(
            "character contraction gave %d remainder %d for %r,%r,%r"
            % (value, rem, lam, mu, nu)
        )
    return value


def _contingency_sum(lam, rows, cols):
    """Sum of kostka(lam, entries) over matrices with given row/col sums."""
    nrows, ncols = len(rows), len(cols)
    total = 0
    matrix = []

    def fill_row(i, remaining_cols):
        nonlocal total
        if i == nrows:
            if all(r == 0 for r in remaining_cols):
                entries = tuple(
                    sorted((e for row in matrix for e in row if e), reverse=True)
                )
                total += kostka(lam, entries)
            return
        # enumerate compositions of rows[i] bounded by the column budgets
        comp = [0] * ncols

        def place(j, left):
            if j == ncols:
                if left == 0:
                    matrix.append(tuple(comp))
                    fill_row(
                        i + 1,
                        tuple(
                            remaining_cols[t] - comp[t] for t in range(ncols)
                        ),
                    )
                    matrix.pop()
                return
            for v in range(min(left, remaining_cols[j]) + 1):
                comp[j] = v
                place(j + 1, left - v)
            comp[j] = 0

        place(0, rows[i])

    fill_row(0, tuple(cols))
    return total


@cache
def _schur_weyl_table(lam, rows_mu, rows_nu):
    """All g(lam, *, *) for shapes within the two row bounds.

    Inverts the double-Kostka system C[a][b] = sum g * K_{rho a} K_{sigma b}
    by processing pairs in lexicographically decreasing order (dominance
    refines it, so every dominating pair is handled first).
    """
    n = sum(lam)
    parts_mu = sorted(
        (p for p in enumerate_partitions(n) if len(p) <= rows_mu), reverse=True
    )
    parts_nu = sorted(
        (p for p in enumerate_partitions(n) if len(p) <= rows_nu), reverse=True
    )
    g = {}
    for a in parts_mu:
        for b in parts_nu:
            val = _contingency_sum(
                lam,
                a + (0,) * (rows_mu - len(a)),
                b + (0,) * (rows_nu - len(b)),
            )
            for (rho, sigma), known in g.items():
                if not known:
                    continue
                k1 = kostka(rho, a)
                if not k1:
                    continue
                k2 = kostka(sigma, b)
                if k2:
                    val -= known * k1 * k2
            g[(a, b)] = val
    return g


def kron_schur_oracle(lam, mu, nu, rows_mu=None, rows_nu=None, size_cap=6):
    """g(lam, mu, nu) from the product-variable Schur expansion.

    Exists for cross-validation of kron_char; the variable count is
    rows_mu * rows_nu, so sizes beyond the cap are refused by default.
    """
    check_partition(lam)
    check_partition(mu)
    check_partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise SizeMismatchError("Kronecker arguments must share a size")
    if n > size_cap:
        raise ValueError(
            "Schur-Weyl oracle capped at size %d (got %d); raise size_cap "
            "to override" % (size_cap, n)
        )
    if rows_mu is None:
        rows_mu = max(len(mu), 1)
    if rows_nu is None:
        rows_nu = max(len(nu), 1)
    if rows_mu < len(mu) or rows_nu < len(nu):
        raise ValueError("row bounds smaller than the target partitions")
    table = _schur_weyl_table(lam, rows_mu, rows_nu)
    return table[(mu, nu)]


def kron_tworow(n, d, k):
    """g((nd-k, k), n^d, n^d) via bounded-partition counts."""
    if k < 0 or 2 * k > n * d:
        raise ValueError("need 0 <= k <= nd/2, got k=%d" % k)
    return count_bounded(k, n, d) - count_bounded(k - 1, n, d)


# -- reduced (stable) coefficients ---------------------------------------------

PADDED_ROUTE_CAP = 22


def _padded_value(alpha, beta, gamma, n):
    return kron_char(pad(alpha, n), pad(beta, n), pad(gamma, n))


def padding_threshold(alpha, beta, gamma):
    """Smallest padding size at which the stable value is certainly reached."""
    heads = sum(p[0] for p in (alpha, beta, gamma) if p)
    return sum(map(sum, (alpha, beta, gamma))) + heads + 1


def reduced_kron(alpha, beta, gamma, cap=PADDED_ROUTE_CAP):
    """Stable Kronecker coefficient gbar(alpha, beta, gamma).

    When the padding size n0 = total size + first rows + 1 is small enough,
    pads all three arguments and checks stability by recomputing at n0+1;
    disagreement is a hard failure because the chosen n0 is believed
    sufficient.  Larger instances go through the subdiagram inversion,
    which never pads.
    """
    check_partition(alpha)
    check_partition(beta)
    check_partition(gamma)
    n0 = padding_threshold(alpha, beta, gamma)
    if n0 <= cap:
        first = _padded_value(alpha, beta, gamma, n0)
        again = _padded_value(alpha, beta, gamma, n0 + 1)
        if first != again:
            raise InternalConsistencyError(
                "padded values disagree at %d/%d: %d vs %d for %r,%r,%r"
                % (n0, n0 + 1, first, again, alpha, beta, gamma)
            )
        return first
    return _stable_engine(alpha, beta, gamma)


@cache
def _hstrip_closure(shape, t, cls):
    """Sum of chi^eps(cls) over eps obtained by adding a strip up to size t."""
    total = 0
    for eps in add_horizontal_strips(shape, t - sum(shape)):
        total += character(eps, cls)
    return total


@cache
def _skew_constituents(outer, inner):
    """Sorted items of the skew Schur expansion (cached tuple form)."""
    return tuple(sorted(skew_schur_expansion(outer, inner).items()))


def _phi(big, delta, t, cls):
    """Sum over constituents rho of big/delta of c * (strip-closure chi)."""
    total = 0
    for rho, c in _skew_constituents(big, delta):
        if sum(rho) <= t:
            total += c * _hstrip_closure(rho, t, cls)
    return total


def _stable_engine(alpha, beta, gamma):
    """gbar by exact inversion over subdiagrams of the smallest argument.

    For every subdiagram U of the unraveled argument, the sum of gbar over
    horizontal-strip predecessors of U equals an ordinary class sum at
    size |U| whose class function couples the two remaining arguments
    through their skew constituents; peeling strip predecessors bottom-up
    isolates each gbar.  Every level divides exactly by |U|! and every
    recovered value is a genuine reduced coefficient, so nonnegativity and
    exact division are asserted, not assumed.
    """
    trio = sorted((alpha, beta, gamma), key=lambda p: (sum(p), p))
    small, big1, big2 = trio
    return _engine_value(small, big1, big2)


@cache
def _engine_value(alpha, beta, gamma):
    nb, ng = sum(beta), sum(gamma)
    meet = tuple(min(x, y) for x, y in zip(beta, gamma))
    deltas = subdiagrams(meet)
    ghat = {}
    for u in subdiagrams(alpha):
        t = sum(u)
        level = _level_sum(u, t, beta, gamma, deltas, nb, ng)
        for s in range(1, t + 1):
            for prev in remove_horizontal_strips(u, s):
                level -= ghat[prev]
        if level < 0:
            raise InternalConsistencyError(
                "negative reduced coefficient %d at %r for %r,%r,%r"
                % (level, u, alpha, beta, gamma)
            )
        ghat[u] = level
    return ghat[alpha]


def _level_sum(u, t, beta, gamma, deltas, nb, ng):
    """The class sum producing sum of gbar over strip predecessors of u."""
    lo = max(nb, ng) - t
    window = [d for d in deltas if sum(d) >= lo]
    if not window:
        return 0
    total = 0
    for cls in enumerate_partitions(t):
        psi = 0
        for d in window:
            fb = _phi(beta, d, t, cls)
            if not fb:
                continue
            fg = fb if beta == gamma else _phi(gamma, d, t, cls)
            psi += fb * fg
        if psi:
            total += class_size(cls) * character(u, cls) * psi
    value, rem = divmod(total, math.factorial(t))
    if rem:
        raise InternalConsistencyError(
            "level sum at %r not divisible by %d! (remainder %d)"
            % (u, t, rem)
        )
    return value


# -- batch export -----------------------------------------------------------------


def _table_entry(trip):
    lam, mu, nu = trip
    return (lam, mu, nu, kron_char(lam, mu, nu))


def kron_table(n, limit=22, jobs=1):
    """All g on canonical triples lam <= mu <= nu (enumeration order).

    Returns a list of (lam, mu, nu, value); by the full S3 symmetry this
    determines every ordered triple at size n.  With jobs > 1 the triples
    are farmed out to forked workers; the parent fills the character memo
    first so every child inherits it, and an ordered map keeps the result
    independent of the worker count.
    """
    character_table(n, limit=limit)
    parts = list(enumerate_partitions(n))
    trips = [
        (parts[i], parts[j], parts[k])
        for i in range(len(parts))
        for j in range(i, len(parts))
        for k in range(j, len(parts))
    ]
    if jobs > 1:
        chunk = max(1, len(trips) // (jobs * 4))
        with get_context("fork").Pool(jobs) as pool:
            return pool.map(_table_entry, trips, chunksize=chunk)
    return [_table_entry(t) for t in trips]
