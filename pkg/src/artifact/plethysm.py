"""Plethysm coefficients.

The general coefficient a^lam_{mu,nu} is the multiplicity of s_lam in the
composition s_nu[s_mu].  Rather than filling composite tableaux directly
(symfunc.compose_schur does that, and serves as the brute-force cross-check),
this module works through the power-sum recurrence

    m * h_m[g] = sum_{k=1}^{m} p_k[g] * h_{m-k}[g]

which needs nothing more than exponent scaling and exact polynomial
arithmetic, followed by a Jacobi-Trudi determinant to assemble s_nu[g] from
the h_m[g].  Every division in the recurrence must come out exact; a nonzero
remainder would mean corrupted arithmetic and raises immediately.

The family h_d[h_n] (symmetric powers of symmetric powers) gets a dedicated
entry point that works in exactly d variables, which is what keeps the larger
comparison instances affordable: every constituent of h_d[h_n] has at most d
rows, so nothing is lost to truncation.
"""

from functools import cache
from itertools import permutations
from math import comb

from .partitions import (
    SizeMismatchError,
    check_partition,
    enumerate_partitions,
    hook_lengths,
)
from .symfunc import (
    SchurVector,
    SymPoly,
    complete_homogeneous,
    multiply,
    schur_in_monomials,
    to_schur_basis,
)

DEGREE_CAP = 16


def _power_pleth(k, g):
    # p_k[g] just raises every monomial of g to the k-th power, so the orbit
    # representation maps key -> k*key with the same coefficient.
    return SymPoly(
        g.nvars, {tuple(k * e for e in key): c for key, c in g.terms.items()}
    )


def _exact_div(f, m):
    out = {}
    for key, c in f.terms.items():
        q, r = divmod(c, m)
        if r:
            raise ArithmeticError(
                f"inexact division by {m} in the plethysm recurrence"
            )
        out[key] = q
    return SymPoly(f.nvars, out)


@cache
def _h_pleth(m, g):
    """h_m evaluated at the alphabet of monomials of ``g``."""
    if m == 0:
        return SymPoly.one(g.nvars)
    acc = SymPoly.zero(g.nvars)
    for k in range(1, m + 1):
        acc = acc + multiply(_power_pleth(k, g), _h_pleth(m - k, g))
    return _exact_div(acc, m)


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def schur_pleth(outer, g):
    """s_outer evaluated at the alphabet of monomials of ``g``.

    Expands the Jacobi-Trudi determinant det(h_{outer_i - i + j}) over
    permutations; entries with negative index vanish, h_0 = 1.
    """
    check_partition(outer)
    if not isinstance(g, SymPoly):
        raise TypeError("inner argument must be a SymPoly")
    ell = len(outer)
    if ell == 0:
        return SymPoly.one(g.nvars)
    total = SymPoly.zero(g.nvars)
    for perm in permutations(range(ell)):
        degrees = [outer[i] - i + perm[i] for i in range(ell)]
        if any(d < 0 for d in degrees):
            continue
        term = SymPoly.one(g.nvars)
        for d in sorted(degrees, reverse=True):
            term = multiply(term, _h_pleth(d, g))
        total = total + term if _perm_sign(perm) > 0 else total - term
    return total


@cache
def _schur_pleth_expansion(inner, outer, nvars):
    g = schur_in_monomials(inner, nvars)
    return to_schur_basis(schur_pleth(outer, g))


def pleth_coefficient(target, inner, outer, cap=DEGREE_CAP):
    """Multiplicity of s_target in s_outer[s_inner].

    The computation runs in len(outer)'s-worth of copies of the inner
    alphabet: |outer| * len(inner) variables bound the number of rows of any
    constituent, so the requested coefficient is exact.  Degrees above
    ``cap`` cells are refused rather than attempted.
    """
    check_partition(target)
    check_partition(inner)
    check_partition(outer)
    degree = sum(inner) * sum(outer)
    if sum(target) != degree:
        raise SizeMismatchError(
            f"target has {sum(target)} cells, expected {degree}"
        )
    if degree > cap:
        raise ValueError(f"degree {degree} exceeds the cap of {cap} cells")
    nvars = max(1, sum(outer) * len(inner))
    if len(target) > nvars:
        return 0
    return _schur_pleth_expansion(inner, outer, nvars).coeffs.get(target, 0)


def pleth_hn_expansion(d, n, cap=DEGREE_CAP):
    """Full Schur expansion of h_d[h_n], computed in exactly d variables."""
    if d < 1 or n < 1:
        raise ValueError("both indices must be at least 1")
    if d * n > cap:
        raise ValueError(f"degree {d * n} exceeds the cap of {cap} cells")
    if n == 1:
        # the inner alphabet is the variable alphabet itself
        return to_schur_basis(complete_homogeneous(d, d))
    return to_schur_basis(_h_pleth(d, complete_homogeneous(n, d)))


def sym_power_dimension(d, n):
    """dim Sym^d(Sym^n V) for dim V = d, counted directly as multisets.

    Sym^n V has binomial(n+d-1, n) monomial basis elements, and the d-th
    symmetric power picks an unordered multiset of d of those.  This is what
    evaluating h_d[h_n] at x_1 = ... = x_d = 1 must reproduce.
    """
    inner = comb(n + d - 1, n)
    return comb(inner + d - 1, d)


def gl_dimension(lam, nvars):
    """Number of column-strict fillings of lam with entries at most nvars.

    Evaluated by the hook-content formula; the product quotient is exact or
    the formula has been transcribed wrong.
    """
    check_partition(lam)
    if len(lam) > nvars:
        return 0
    num = den = 1
    for i, row in enumerate(hook_lengths(lam)):
        for j, hook in enumerate(row):
            num *= nvars - i + j
            den *= hook
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("hook-content quotient came out inexact")
    return q


def foulkes_violations(d, n, cap=DEGREE_CAP):
    """Coefficientwise failures of h_d[h_n] >= h_n[h_d], for d >= n.

    Returns a list of (lam, coeff_in_h_d_of_h_n, coeff_in_h_n_of_h_d) for
    every lam where the first is strictly smaller.  Empty means the
    inequality held at this size.
    """
    if d < n:
        raise ValueError("expected d >= n; swap the arguments")
    big = pleth_hn_expansion(d, n, cap=cap).coeffs
    small = pleth_hn_expansion(n, d, cap=cap).coeffs
    bad = []
    for lam in enumerate_partitions(d * n):
        a, b = big.get(lam, 0), small.get(lam, 0)
        if a < b:
            bad.append((lam, a, b))
    return bad


def hn_expansion_json(d, n, cap=DEGREE_CAP):
    """JSON-ready dict for h_d[h_n], every number rendered as a decimal string."""
    vec = pleth_hn_expansion(d, n, cap=cap)
    coeffs = [
        {"lambda": [str(part) for part in lam], "a": str(vec.coeffs[lam])}
        for lam in enumerate_partitions(d * n)
        if lam in vec.coeffs
    ]
    return {"d": str(d), "n": str(n), "coeffs": coeffs}
