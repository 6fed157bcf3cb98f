"""Tableau enumeration: Kostka numbers and Littlewood-Richardson coefficients.

Counts are obtained by direct depth-first generation of (skew) semistandard
tableaux — rows weakly increase, columns strictly increase — with the ballot
condition enforced incrementally for LR coefficients.  The reading word of a
skew tableau scans rows right-to-left, top-to-bottom.
"""

from functools import cache

from .partitions import SizeMismatchError, contains

Partition = tuple[int, ...]


def is_ballot(word) -> bool:
    """Check the lattice/ballot condition.

    Args:
        word: iterable of positive integers.

    Returns:
        True iff in every prefix the number of i's is at least the number
        of (i+1)'s, for all i.
    """
    counts: dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


@cache
def kostka(lam: Partition, alpha: tuple[int, ...]) -> int:
    """Number of SSYT of shape ``lam`` and weight ``alpha``.

    ``alpha`` may be any composition of |lam| (Kostka numbers are invariant
    under permuting the weight, which the tests exercise rather than assume).

    Raises:
        SizeMismatchError: if |alpha| != |lam|.
    """
    lam = tuple(lam)
    alpha = tuple(alpha)
    if sum(lam) != sum(alpha):
        raise SizeMismatchError(f"|{alpha}| != |{lam}|")
    if not lam:
        return 1
    letters = len(alpha)
    budget = list(alpha)
    rows = len(lam)
    # previous row's entries; row 0 has no column constraint
    above = [0] * lam[0]
    total = 0

    def fill_row(i: int, j: int, row: list[int]) -> None:
        nonlocal total
        if j == lam[i]:
            if i + 1 == rows:
                total += 1
                return
            saved = above[: lam[i + 1]]
            above[: lam[i + 1]] = row[: lam[i + 1]]
            fill_row(i + 1, 0, [0] * lam[i + 1])
            above[: lam[i + 1]] = saved
            return
        lo = max(above[j] + 1, row[j - 1] if j else 1)
        for v in range(lo, letters + 1):
            if budget[v - 1] == 0:
                continue
            budget[v - 1] -= 1
            row[j] = v
            fill_row(i, j + 1, row)
            budget[v - 1] += 1

    fill_row(0, 0, [0] * lam[0])
    return total


def _skew_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    """Cells of outer/inner in reading order (rows top-down, right-to-left)."""
    cells = []
    for i, length in enumerate(outer):
        start = inner[i] if i < len(inner) else 0
        for j in range(length - 1, start - 1, -1):
            cells.append((i, j))
    return cells


@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu,nu}.

    Counts skew SSYT of shape lam/mu and weight nu whose reading word is a
    ballot sequence.  Returns 0 when mu is not contained in lam.

    Raises:
        SizeMismatchError: if |lam| != |mu| + |nu|.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu):
        raise SizeMismatchError(f"|{lam}| != |{mu}| + |{nu}|")
    if not contains(mu, lam):
        return 0
    if not nu:
        return 1
    cells = _skew_cells(lam, mu)
    budget = list(nu)
    letters = len(nu)
    entry: dict[tuple[int, int], int] = {}
    ballot = [0] * (letters + 1)
    ballot[0] = len(cells) + 1  # sentinel so letter 1 is always placeable
    total = 0

    def place(k: int) -> None:
        nonlocal total
        if k == len(cells):
            total += 1
            return
        i, j = cells[k]
        hi = entry.get((i, j + 1), letters)  # row weakly increases rightward
        lo = entry.get((i - 1, j), 0) + 1  # column strictly increases down
        for v in range(lo, hi + 1):
            if budget[v - 1] == 0 or ballot[v] + 1 > ballot[v - 1]:
                continue
            budget[v - 1] -= 1
            ballot[v] += 1
            entry[(i, j)] = v
            place(k + 1)
            del entry[(i, j)]
            ballot[v] -= 1
            budget[v - 1] += 1

    place(0)
    return total


@cache
def skew_schur_expansion(outer: Partition, inner: Partition) -> dict:
    """Expansion of the skew Schur function s_{outer/inner} in Schur terms.

    Returns:
        dict mapping content partition nu to c^outer_{inner,nu}, over all nu.
        Empty dict when inner is not contained in outer.
    """
    outer, inner = tuple(outer), tuple(inner)
    if not contains(inner, outer):
        return {}
    cells = _skew_cells(outer, inner)
    n = len(cells)
    if n == 0:
        return {(): 1}
    entry: dict[tuple[int, int], int] = {}
    ballot = [0] * (n + 1)
    ballot[0] = n + 1
    out: dict[Partition, int] = {}

    def place(k: int, maxletter: int) -> None:
        if k == n:
            content = tuple(ballot[1 : maxletter + 1])
            out[content] = out.get(content, 0) + 1
            return
        i, j = cells[k]
        hi = entry.get((i, j + 1), min(maxletter + 1, n))
        lo = entry.get((i - 1, j), 0) + 1
        for v in range(lo, hi + 1):
            if ballot[v] + 1 > ballot[v - 1]:
                continue
            ballot[v] += 1
            entry[(i, j)] = v
            place(k + 1, max(maxletter, v))
            del entry[(i, j)]
            ballot[v] -= 1

    place(0, 0)
    return out
