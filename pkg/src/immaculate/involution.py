"""The sign-reversing involution behind the immaculate LR rule.

A tableau ``T`` with ``sigma(T) = c(T) - lam + Id`` a permutation is encoded
as a content-side tableau ``Y(T)``; ``theta`` swaps tails of two adjacent rows
of ``Y`` around the most nefarious cell, and ``phi`` pulls that move back to
tableaux.  Rows and columns are 1-based in every public position.
"""

from __future__ import annotations

from typing import Sequence

from . import combinat as cb
from .combinat import DomainError
from .tableaux import ImmaculateTableau, YTableau, is_immaculate


def sigma_of(T: ImmaculateTableau, lam: Sequence[int]) -> tuple:
    lam = tuple(lam)
    content = T.content(len(lam))
    sigma = tuple(c - l + i for i, (c, l) in enumerate(zip(content, lam), start=1))
    if not cb.is_permutation(sigma):
        raise DomainError(f"c(T) - lam + Id = {sigma} is not a permutation")
    return sigma


def build_Y(T: ImmaculateTableau, lam: Sequence[int]) -> YTableau:
    """Entry ``r`` in row ``i`` of ``T`` puts an ``i`` into row ``sigma(r)``."""
    sigma = sigma_of(T, lam)
    rows: list[list[int]] = [[] for _ in lam]
    for i, row in enumerate(T.rows, start=1):
        for r in row:
            rows[sigma[r - 1] - 1].append(i)
    return YTableau(tuple(tuple(sorted(r)) for r in rows))


def recover_sigma(shape: Sequence[int], lam: Sequence[int]) -> tuple:
    """Solve ``shape - Id = (lam - Id) . sigma^{-1}`` for ``sigma``."""
    lam = tuple(lam)
    shape = tuple(shape)
    if len(shape) != len(lam):
        raise DomainError("Y must have one row per part of lam")
    where = {l - d: d for d, l in enumerate(lam, start=1)}
    sigma_inv = []
    for r, t in enumerate(shape, start=1):
        d = where.get(t - r)
        if d is None:
            raise DomainError(f"row lengths {shape} do not come from {lam}")
        sigma_inv.append(d)
    if not cb.is_permutation(sigma_inv):
        raise DomainError(f"row lengths {shape} do not come from {lam}")
    return cb.inverse(sigma_inv)


def invert_Y(Y: YTableau, lam: Sequence[int], alpha: Sequence[int]) -> ImmaculateTableau:
    """The unique ``T`` with ``build_Y(T, lam) = Y``."""
    sigma = recover_sigma(Y.shape(), lam)
    sigma_inv = cb.inverse(sigma)
    alpha = tuple(alpha)
    nrows = max([len(alpha)] + [v for row in Y.rows for v in row])
    rows: list[list[int]] = [[] for _ in range(nrows)]
    for u, row in enumerate(Y.rows, start=1):
        for i in row:
            rows[i - 1].append(sigma_inv[u - 1])
    T = ImmaculateTableau(alpha, tuple(tuple(sorted(r)) for r in rows))
    if not is_immaculate(T):
        raise DomainError("the preimage of Y is not an immaculate tableau")
    return T


def nefarious_cells(Y: YTableau) -> list:
    """Cells below row 1 whose upper neighbour is missing or weakly larger."""
    out = []
    for i in range(1, len(Y.rows)):
        above, row = Y.rows[i - 1], Y.rows[i]
        for c, a in enumerate(row):
            if c >= len(above) or above[c] >= a:
                out.append((i + 1, c + 1))
    return out


def most_nefarious_cell(Y: YTableau):
    """Bottom-most nefarious cell of the left-most column holding one."""
    cells = nefarious_cells(Y)
    if not cells:
        return None
    return min(cells, key=lambda rc: (rc[1], -rc[0]))


def theta(Y: YTableau) -> YTableau:
    cell = most_nefarious_cell(Y)
    if cell is None:
        return Y
    r1, c = cell
    r = r1 - 1
    upper, lower = Y.rows[r - 1], Y.rows[r1 - 1]
    if len(upper) >= c:
        # the cell above exists: swap the tails around column c
        new_upper = upper[: c - 1] + lower[c:]
        new_lower = lower[:c] + upper[c - 1:]
    else:
        # the cell above is empty: the part of the lower row right of x moves up
        new_upper = upper + lower[c:]
        new_lower = lower[:c]
    rows = list(Y.rows)
    rows[r - 1], rows[r1 - 1] = new_upper, new_lower
    return YTableau(tuple(rows))


def phi(T: ImmaculateTableau, lam: Sequence[int], alpha: Sequence[int] | None = None) -> ImmaculateTableau:
    """``Y^{-1} o theta o Y``."""
    if alpha is None:
        alpha = T.alpha
    return invert_Y(theta(build_Y(T, lam)), lam, alpha)


def trace(T: ImmaculateTableau, lam: Sequence[int]) -> dict:
    """The pipeline ``T -> Y -> theta(Y) -> T'`` with permutations."""
    Y = build_Y(T, lam)
    Y2 = theta(Y)
    T2 = invert_Y(Y2, lam, T.alpha)
    return {
        "lambda": list(lam),
        "T": T.to_json(),
        "sigma": list(sigma_of(T, lam)),
        "Y": Y.to_json(),
        "cell": list(most_nefarious_cell(Y) or []) or None,
        "theta_Y": Y2.to_json(),
        "T_prime": T2.to_json(),
        "sigma_prime": list(sigma_of(T2, lam)),
    }
