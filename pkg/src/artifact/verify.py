"""Machine checks for the identities and conjectures the library is built on.

Every named property sweeps an exhaustive (or, for the semigroup spot check,
deterministically sampled) range and returns a Report.  A Report never lies:
"pass" means every instance in the declared range was checked and held;
"fail" carries the first counterexample in canonical order, fully
serialized, so it can be re-verified without rerunning the sweep.  The
saturation search is different in kind — there a positive stretched value is
the sought-after outcome ("counterexample-confirmed" refutes saturation for
reduced coefficients), and running out of budget is recorded as
"inconclusive-within-range" rather than dressed up as a result.

Sweeps fan out over a forked worker pool when jobs > 1.  Items are mapped in
canonical order and the pool map preserves it, so status, witness and
checked_count are identical for every worker count; only elapsed time varies.
"""

import random
import time
from dataclasses import dataclass
from math import factorial
from multiprocessing import get_context

from .characters import character, character_table
from .kronecker import kron_char, kron_tworow, padding_threshold, reduced_kron
from .partitions import (
    add,
    centralizer_order,
    conjugate,
    dimension_hlf,
    enumerate_partitions,
    is_self_conjugate,
    pad,
    principal_hooks,
    stretch,
)
from .plethysm import foulkes_violations
from .symfunc import schur_in_monomials
from .tableaux import lr_coefficient

CHAR_TABLE_CAP = 22
SATURATION_SIZE_CAP = 35
SEMIGROUP_SEED = 20260814

PASS = "pass"
FAIL = "fail"
CONFIRMED = "counterexample-confirmed"
INCONCLUSIVE = "inconclusive-within-range"


@dataclass
class Report:
    property: str
    params: dict
    status: str
    witness: object
    checked_count: int
    elapsed: float

    def to_json(self):
        """Schema-stable dict; every number rendered as a decimal string."""
        return {
            "property": self.property,
            "params": {k: _stringify(v) for k, v in sorted(self.params.items())},
            "status": self.status,
            "witness": _stringify(self.witness),
            "checked_count": str(self.checked_count),
            "elapsed_ms": str(int(self.elapsed * 1000)),
        }


def _stringify(obj):
    if obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _map_ordered(fn, items, jobs):
    items = list(items)
    if jobs > 1 and len(items) > 1:
        chunk = max(1, len(items) // (jobs * 4))
        with get_context("fork").Pool(jobs) as pool:
            return pool.map(fn, items, chunk)
    return [fn(item) for item in items]


def _sweep(check, items, jobs):
    """Run a witness-or-None check over all items; first witness wins."""
    results = _map_ordered(check, items, jobs)
    for witness in results:
        if witness is not None:
            return FAIL, witness, len(results)
    return PASS, None, len(results)


def _require(params, key, default, low, high=None):
    value = int(params.get(key, default))
    if value < low:
        raise ValueError(f"{key} must be at least {low}")
    if high is not None and value > high:
        raise ValueError(f"{key}={value} exceeds the cap of {high}")
    return value


# -- orthogonality -----------------------------------------------------------------
#
# Columns: sum over shapes of chi(a)*chi(b) is the centralizer order when the
# classes agree, zero otherwise.  Rows: sum over classes of
# |C_a| * chi^lam(a) * chi^mu(a) is n! exactly on the diagonal.


def _check_orthogonality(item):
    kind, n, p, q = item
    shapes = list(enumerate_partitions(n))
    if kind == "col":
        total = sum(character(lam, p) * character(lam, q) for lam in shapes)
        want = centralizer_order(p) if p == q else 0
    else:
        total = sum(
            (factorial(n) // centralizer_order(alpha))
            * character(p, alpha)
            * character(q, alpha)
            for alpha in shapes
        )
        want = factorial(n) if p == q else 0
    if total != want:
        return {"kind": kind, "first": p, "second": q, "sum": total, "expected": want}
    return None


def _run_orthogonality(params, jobs):
    n = _require(params, "n", 8, 1, int(params.get("cap", CHAR_TABLE_CAP)))
    character_table(n, limit=max(n, CHAR_TABLE_CAP))
    parts = list(enumerate_partitions(n))
    items = [("col", n, p, q) for p in parts for q in parts]
    items += [("row", n, p, q) for p in parts for q in parts]
    return _sweep(_check_orthogonality, items, jobs)


# -- Kronecker symmetries ------------------------------------------------------------


def _check_symmetry(item):
    lam, mu, nu = item
    base = kron_char(lam, mu, nu)
    values = {
        "lmn": base,
        "lnm": kron_char(lam, nu, mu),
        "mln": kron_char(mu, lam, nu),
        "mnl": kron_char(mu, nu, lam),
        "nlm": kron_char(nu, lam, mu),
        "nml": kron_char(nu, mu, lam),
    }
    if len(set(values.values())) != 1:
        return {"lambda": lam, "mu": mu, "nu": nu, "values": values}
    return None


def _check_transpose(item):
    lam, mu, nu = item
    lhs = kron_char(lam, mu, nu)
    rhs = kron_char(conjugate(lam), conjugate(mu), nu)
    if lhs != rhs:
        return {"lambda": lam, "mu": mu, "nu": nu, "plain": lhs, "transposed": rhs}
    return None


def _canonical_triples(n):
    parts = list(enumerate_partitions(n))
    for i, lam in enumerate(parts):
        for j in range(i, len(parts)):
            for k in range(j, len(parts)):
                yield lam, parts[j], parts[k]


def _run_kron_symmetry(params, jobs):
    n = _require(params, "n", 5, 1, int(params.get("cap", CHAR_TABLE_CAP)))
    character_table(n, limit=max(n, CHAR_TABLE_CAP))
    return _sweep(_check_symmetry, _canonical_triples(n), jobs)


def _run_transpose(params, jobs):
    n = _require(params, "n", 5, 1, int(params.get("cap", CHAR_TABLE_CAP)))
    character_table(n, limit=max(n, CHAR_TABLE_CAP))
    parts = list(enumerate_partitions(n))
    items = [
        (parts[i], parts[j], nu)
        for i in range(len(parts))
        for j in range(i, len(parts))
        for nu in parts
    ]
    return _sweep(_check_transpose, items, jobs)


# -- dimension sum -------------------------------------------------------------------


def _check_dimension_sum(item):
    n, lam, mu = item
    total = sum(
        kron_char(lam, mu, nu) * dimension_hlf(nu) for nu in enumerate_partitions(n)
    )
    want = dimension_hlf(lam) * dimension_hlf(mu)
    if total != want:
        return {"lambda": lam, "mu": mu, "sum": total, "expected": want}
    return None


def _run_dimension_sum(params, jobs):
    n = _require(params, "n", 6, 1, int(params.get("cap", CHAR_TABLE_CAP)))
    character_table(n, limit=max(n, CHAR_TABLE_CAP))
    parts = list(enumerate_partitions(n))
    items = [
        (n, parts[i], parts[j])
        for i in range(len(parts))
        for j in range(i, len(parts))
    ]
    return _sweep(_check_dimension_sum, items, jobs)


# -- semigroup spot checks ------------------------------------------------------------


def _check_semigroup(item):
    first, second = item
    summed = tuple(add(p, q) for p, q in zip(first, second))
    got = kron_char(*summed)
    lower = max(kron_char(*first), kron_char(*second))
    if got < lower:
        return {
            "first": first,
            "second": second,
            "summed": summed,
            "value": got,
            "lower_bound": lower,
        }
    return None


def _run_semigroup(params, jobs):
    samples = _require(params, "samples", 40, 1)
    max_size = _require(params, "max_size", 5, 1, 6)
    positives = []
    for n in range(1, max_size + 1):
        for trip in _canonical_triples(n):
            if kron_char(*trip) > 0:
                positives.append(trip)
    rng = random.Random(SEMIGROUP_SEED)
    items = [
        (rng.choice(positives), rng.choice(positives)) for _ in range(samples)
    ]
    return _sweep(_check_semigroup, items, jobs)


# -- Murnaghan stability ---------------------------------------------------------------


def _check_murnaghan(item):
    lam, mu, nu, n = item
    g = kron_char(pad(lam, n), pad(mu, n), pad(nu, n))
    c = lr_coefficient(lam, mu, nu)
    if g != c:
        return {"lambda": lam, "mu": mu, "nu": nu, "n": n, "padded": g, "lr": c}
    return None


def _run_murnaghan(params, jobs):
    max_size = _require(params, "max_size", 4, 1, 8)
    items = []
    for total in range(1, max_size + 1):
        n = 2 * total + 1
        for lam in enumerate_partitions(total):
            for k in range(total + 1):
                for mu in enumerate_partitions(k):
                    for nu in enumerate_partitions(total - k):
                        items.append((lam, mu, nu, n))
    return _sweep(_check_murnaghan, items, jobs)


# -- two-row closed form ----------------------------------------------------------------


def _check_tworow(item):
    n, d, k = item
    lam = (n * d - k, k) if k else ((n * d,) if n * d else ())
    direct = kron_char(lam, (n,) * d, (n,) * d)
    closed = kron_tworow(n, d, k)
    if direct != closed:
        return {"n": n, "d": d, "k": k, "character": direct, "closed_form": closed}
    return None


def _run_tworow(params, jobs):
    max_cells = _require(params, "max_cells", 12, 1, 16)
    items = [
        (n, d, k)
        for n in range(1, max_cells + 1)
        for d in range(1, max_cells // n + 1)
        for k in range(n * d // 2 + 1)
    ]
    return _sweep(_check_tworow, items, jobs)


# -- Saxl staircase ----------------------------------------------------------------------


def _check_saxl(item):
    delta, mu = item
    value = kron_char(delta, delta, mu)
    if value <= 0:
        return {"staircase": delta, "mu": mu, "value": value}
    return None


def _run_saxl(params, jobs):
    k = _require(params, "k", 3, 1, 6)
    delta = tuple(range(k, 0, -1))
    n = k * (k + 1) // 2
    character_table(n, limit=max(n, CHAR_TABLE_CAP))
    items = [(delta, mu) for mu in enumerate_partitions(n)]
    return _sweep(_check_saxl, items, jobs)


# -- tensor squares covering every irreducible ----------------------------------------------


def _check_tensor_square(item):
    n, lam = item
    if not is_self_conjugate(lam):
        return (lam, False, None)
    missing = [
        mu for mu in enumerate_partitions(n) if kron_char(lam, lam, mu) <= 0
    ]
    return (lam, True, missing)


def _run_tensor_square(params, jobs):
    n = _require(params, "n", 9, 1, int(params.get("cap", CHAR_TABLE_CAP)))
    character_table(n, limit=max(n, CHAR_TABLE_CAP))
    items = [(n, lam) for lam in enumerate_partitions(n)]
    results = _map_ordered(_check_tensor_square, items, jobs)
    working = [lam for lam, selfconj, missing in results if selfconj and not missing]
    candidates = [lam for lam, selfconj, _ in results if selfconj]
    witness = {
        "note": "conjectured for n >= 9; smaller n reported for the record",
        "self_conjugate": candidates,
        "covering": working,
    }
    if n >= 9 and not working:
        return FAIL, witness, len(results)
    return PASS, witness, len(results)


# -- character lower bound -------------------------------------------------------------------


def _check_char_bound(item):
    lam, hooks, mu = item
    g = kron_char(lam, lam, mu)
    bound = abs(character(mu, hooks))
    if g < bound:
        return {
            "lambda": lam,
            "principal_hooks": hooks,
            "mu": mu,
            "value": g,
            "bound": bound,
        }
    return None


def _run_char_bound(params, jobs):
    n = _require(params, "n", 10, 1, int(params.get("cap", CHAR_TABLE_CAP)))
    character_table(n, limit=max(n, CHAR_TABLE_CAP))
    items = [
        (lam, principal_hooks(lam), mu)
        for lam in enumerate_partitions(n)
        if is_self_conjugate(lam)
        for mu in enumerate_partitions(n)
    ]
    return _sweep(_check_char_bound, items, jobs)


# -- contingency upper bound -----------------------------------------------------------------
#
# g(lam,mu,nu) <= (1 + lmr/n)^n * (1 + n/lmr)^(lmr) with l,m,r the lengths.
# Cross-multiplied to integers:  g * n^n * (lmr)^(lmr) <= (n + lmr)^(n + lmr).


def _check_pp20(item):
    lam, mu, nu = item
    n = sum(lam)
    lmr = len(lam) * len(mu) * len(nu)
    g = kron_char(lam, mu, nu)
    if g * n**n * lmr**lmr > (n + lmr) ** (n + lmr):
        return {"lambda": lam, "mu": mu, "nu": nu, "value": g}
    return None


def _run_pp20(params, jobs):
    n = _require(params, "n", 6, 1, int(params.get("cap", CHAR_TABLE_CAP)))
    character_table(n, limit=max(n, CHAR_TABLE_CAP))
    return _sweep(_check_pp20, _canonical_triples(n), jobs)


# -- Foulkes comparison ------------------------------------------------------------------------


def _run_foulkes(params, jobs):
    d = _require(params, "d", 3, 1)
    n = _require(params, "n", 2, 1)
    cap = _require(params, "cap", 16, 1)
    violations = foulkes_violations(d, n, cap=cap)
    checked = sum(1 for _ in enumerate_partitions(d * n))
    if violations:
        lam, big, small = violations[0]
        witness = {
            "note": "conjectured inequality failed; witness re-checkable",
            "lambda": lam,
            "outer_d_inner_n": big,
            "outer_n_inner_d": small,
        }
        return FAIL, witness, checked
    return PASS, None, checked


# -- ordinary-to-reduced identity -----------------------------------------------------------------


def _check_ip23(item):
    lam, mu, nu = item
    head = nu[0]
    first = tuple(part + head for part in lam)
    second = tuple(part + head for part in mu)
    third = (head,) * (len(lam) + len(mu)) + nu
    g = kron_char(lam, mu, nu)
    gbar = reduced_kron(first, second, third)
    if g != gbar:
        return {
            "lambda": lam,
            "mu": mu,
            "nu": nu,
            "ordinary": g,
            "reduced_arguments": [first, second, third],
            "reduced": gbar,
        }
    return None


def _run_ip23(params, jobs):
    n = _require(params, "n", 4, 1, 6)
    character_table(n, limit=CHAR_TABLE_CAP)
    parts = list(enumerate_partitions(n))
    items = [
        (parts[i], parts[j], nu)
        for i in range(len(parts))
        for j in range(i, len(parts))
        for nu in parts
    ]
    return _sweep(_check_ip23, items, jobs)


# -- truncated Cauchy identity ----------------------------------------------------------------------
#
# The coefficient of x^a y^b in prod 1/(1 - x_i y_j) counts nonnegative
# integer matrices with row sums a and column sums b; the Schur expansion
# turns that into sum over shapes of K(lam,a) * K(lam,b).


def _matrix_count(rows, cols):
    if not rows:
        return 1 if not any(cols) else 0
    total = 0
    first, rest = rows[0], rows[1:]

    def place(j, left, remaining):
        nonlocal total
        if j == len(remaining):
            if left == 0:
                total += _matrix_count(rest, tuple(remaining))
            return
        for take in range(min(left, remaining[j]) + 1):
            place(j + 1, left - take, remaining[: j] + (remaining[j] - take,) + remaining[j + 1 :])

    place(0, first, cols)
    return total


def _check_cauchy(item):
    nvars, a, b = item
    degree = sum(a)
    lhs = 0
    for lam in enumerate_partitions(degree):
        if len(lam) > nvars:
            continue
        terms = schur_in_monomials(lam, nvars).terms
        lhs += terms.get(a, 0) * terms.get(b, 0)
    rows = a + (0,) * (nvars - len(a))
    cols = b + (0,) * (nvars - len(b))
    rhs = _matrix_count(rows, cols)
    if lhs != rhs:
        return {"row_sums": a, "column_sums": b, "schur_side": lhs, "matrix_side": rhs}
    return None


def _run_cauchy(params, jobs):
    max_degree = _require(params, "max_degree", 5, 1, 8)
    nvars = _require(params, "nvars", 3, 1, 4)
    items = []
    for degree in range(1, max_degree + 1):
        shapes = [p for p in enumerate_partitions(degree) if len(p) <= nvars]
        items += [(nvars, a, b) for a in shapes for b in shapes]
    return _sweep(_check_cauchy, items, jobs)


# -- registry ------------------------------------------------------------------------------------------

_PROPERTIES = {
    "orthogonality": _run_orthogonality,
    "kron-symmetry": _run_kron_symmetry,
    "transpose": _run_transpose,
    "dimension-sum": _run_dimension_sum,
    "semigroup": _run_semigroup,
    "murnaghan": _run_murnaghan,
    "tworow": _run_tworow,
    "saxl": _run_saxl,
    "tensor-square": _run_tensor_square,
    "char-bound": _run_char_bound,
    "pp20-bound": _run_pp20,
    "foulkes": _run_foulkes,
    "ip23": _run_ip23,
    "cauchy": _run_cauchy,
}


def property_names():
    return sorted(_PROPERTIES)


def run_property(name, params=None, jobs=1):
    """Check one named property exhaustively; returns a deterministic Report."""
    if name not in _PROPERTIES:
        raise ValueError(
            f"unknown property {name!r}; known: {', '.join(property_names())}"
        )
    params = dict(params or {})
    start = time.perf_counter()
    status, witness, checked = _PROPERTIES[name](params, jobs)
    return Report(
        property=name,
        params=params,
        status=status,
        witness=witness,
        checked_count=checked,
        elapsed=time.perf_counter() - start,
    )


def search_saturation_counterexample(k, n_max, size_cap=SATURATION_SIZE_CAP):
    """Hunt for a saturation failure in the family (1^(k²-1), 1^(k²-1), k^(k-1)).

    Verifies the base triple has reduced coefficient 0, then stretches every
    part by N = 2..n_max looking for a positive value: finding one confirms
    the counterexample (positivity of a stretch without positivity of the
    base).  Stops with "inconclusive-within-range" if the padding size of
    the next stretch would exceed size_cap — raise the cap to push further.
    """
    if k < 3:
        raise ValueError("the family needs k >= 3")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    base = ((1,) * (k * k - 1), (1,) * (k * k - 1), (k,) * (k - 1))
    start = time.perf_counter()
    checked = 0
    witness = {"base": base}
    status = INCONCLUSIVE
    for n in range(1, n_max + 1):
        trip = tuple(stretch(p, n) for p in base)
        if padding_threshold(*trip) > size_cap:
            witness["stopped_at_stretch"] = n
            witness["reason"] = "padding size exceeds cap"
            break
        value = reduced_kron(*trip)
        checked += 1
        if n == 1:
            if value != 0:
                status = FAIL
                witness["base_value"] = value
                witness["reason"] = "base triple is already positive"
                break
            witness["base_value"] = 0
        elif value > 0:
            status = CONFIRMED
            witness["stretch"] = n
            witness["stretched"] = trip
            witness["value"] = value
            break
    else:
        witness["reason"] = "no positive stretch within range"
    return Report(
        property="saturation-cex",
        params={"k": k, "n_max": n_max, "size_cap": size_cap},
        status=status,
        witness=witness,
        checked_count=checked,
        elapsed=time.perf_counter() - start,
    )
