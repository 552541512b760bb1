"""Classical symmetric functions in the h, p and s bases.

These serve as independent oracles: products are computed through h (where
multiplication just merges partitions), Schur functions through the
Jacobi-Trudi determinant, and the classical MN and LR rules by brute force.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Sequence

from . import combinat as cb
from .combinat import DomainError
from .freemodule import Element, register_product


def straighten(zeta: Sequence[int]):
    """``(sign, partition)`` with ``s_zeta = sign * s_partition``, or ``None``
    when ``s_zeta = 0``.

    Each step replaces ``zeta`` by ``zeta * t_r`` at an ascent ``r`` and flips
    the sign; a fixed point of that move, or a negative part at the end,
    gives zero.
    """
    z = list(zeta)
    sgn = 1
    changed = True
    while changed:
        changed = False
        for r in range(1, len(z)):
            if z[r - 1] < z[r]:
                if z[r] == z[r - 1] + 1:
                    return None
                z = list(cb.star_transpose(z, r))
                sgn = -sgn
                changed = True
    if z and z[-1] < 0:
        return None
    return sgn, cb.strip_zeros(z)


def schur_from_composition(beta: Sequence[int]) -> Element:
    res = straighten(beta)
    if res is None:
        return Element.zero("s")
    sgn, lam = res
    return Element.monomial("s", lam, sgn)


@lru_cache(maxsize=None)
def jacobi_trudi(lam: tuple) -> Element:
    """``det(h_{lam_i + j - i})`` expanded over permutations, in the h basis."""
    lam = tuple(lam)
    m = len(lam)
    acc: Counter = Counter()
    for sigma in cb.permutations(m):
        parts = [lam[i] + sigma[i] - (i + 1) for i in range(m)]
        if any(p < 0 for p in parts):
            continue
        acc[cb.sort_to_partition(parts)] += cb.sign(sigma)
    return Element("h", acc)


def _horizontal_strips(mu: tuple, k: int):
    """Partitions ``lam`` with ``lam/mu`` a horizontal strip of size ``k``."""
    mu = tuple(mu)
    n = len(mu)
    bounds = [None] + list(mu)  # lam_i <= mu_{i-1}

    def walk(i, left, acc):
        if i == n:
            if left:
                acc.append(left)
            yield tuple(acc)
            if left:
                acc.pop()
            return
        top = left if i == 0 else min(left, bounds[i] - mu[i])
        for extra in range(top + 1):
            acc.append(mu[i] + extra)
            yield from walk(i + 1, left - extra, acc)
            acc.pop()

    for lam in walk(0, k, []):
        # the appended part must fit under the last part of mu
        if len(lam) > n and n and lam[-1] > mu[-1]:
            continue
        yield lam


@lru_cache(maxsize=None)
def h_to_s(lam: tuple) -> Element:
    """``h_lam`` in the Schur basis by the classical Pieri rule."""
    acc: Counter = Counter({(): 1})
    for k in lam:
        nxt: Counter = Counter()
        for mu, c in acc.items():
            for nu in _horizontal_strips(mu, k):
                nxt[nu] += c
        acc = nxt
    return Element("s", acc)


def _cells(lam: Sequence[int]) -> set:
    return {(i, j) for i, row in enumerate(lam) for j in range(row)}


def _is_border_strip(outer: tuple, inner: tuple) -> int | None:
    """Height (number of rows) when ``outer/inner`` is a connected skew shape
    without a 2x2 square, else ``None``."""
    cells = _cells(outer) - _cells(inner)
    if not cells:
        return None
    if any({(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells for i, j in cells):
        return None
    start = next(iter(cells))
    seen, stack = {start}, [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if seen != cells:
        return None
    return len({i for i, _ in cells})


def _contains(outer: tuple, inner: tuple) -> bool:
    return len(outer) >= len(inner) and all(o >= i for o, i in zip(outer, inner))


def classical_mn(mu: Sequence[int], k: int) -> Element:
    """``s_mu p_k`` as a signed sum over border strips of size ``k``."""
    if k < 1:
        raise DomainError(f"p_{k} is undefined")
    mu = cb.strip_zeros(mu)
    acc: Counter = Counter()
    for lam in cb.partitions_of(sum(mu) + k):
        if not _contains(lam, mu):
            continue
        ht = _is_border_strip(lam, mu)
        if ht is not None:
            acc[lam] += (-1) ** (ht - 1)
    return Element("s", acc)


@lru_cache(maxsize=None)
def p_to_s(lam: tuple) -> Element:
    x = Element.monomial("s", ())
    for k in lam:
        x = x.map_keys(lambda mu, k=k: classical_mn(mu, k), "s")
    return x


def classical_lr(mu: Sequence[int], lam: Sequence[int], nu: Sequence[int]) -> int:
    """Skew semistandard tableaux of shape ``nu/mu`` and content ``lam`` whose
    reading word (rows top down, right to left) is Yamanouchi."""
    mu, lam, nu = (cb.strip_zeros(x) for x in (mu, lam, nu))
    if sum(nu) != sum(mu) + sum(lam):
        raise DomainError("size mismatch in classical LR coefficient")
    if not _contains(nu, mu):
        return 0
    m = len(lam)
    inner = cb.pad(mu, len(nu))
    content = list(lam)
    counts = [0] * m
    total = 0

    def rows_for(j, prev_row):
        # weakly increasing row of length nu_j - mu_j with columns strict
        width = nu[j] - inner[j]
        row = [0] * width

        def walk(c, lo):
            if c == width:
                yield tuple(row)
                return
            col = inner[j] + c
            above = None
            if j > 0 and col < len(prev_row) + inner[j - 1] and col >= inner[j - 1]:
                above = prev_row[col - inner[j - 1]]
            start = max(lo, (above + 1) if above is not None else 1)
            for v in range(start, m + 1):
                if content[v - 1] - row[:c].count(v) <= 0:
                    continue
                row[c] = v
                yield from walk(c + 1, v)
            row[c] = 0

        yield from walk(0, 1)

    def dfs(j, prev_row):
        nonlocal total
        if j == len(nu):
            if not any(content):
                total += 1
            return
        for row in rows_for(j, prev_row):
            ok = True
            added = []
            for v in reversed(row):
                counts[v - 1] += 1
                added.append(v)
                if v > 1 and counts[v - 1] > counts[v - 2]:
                    ok = False
                    break
            if ok:
                for v in row:
                    content[v - 1] -= 1
                dfs(j + 1, row)
                for v in row:
                    content[v - 1] += 1
            for v in added:
                counts[v - 1] -= 1

    dfs(0, ())
    return total


# -- conversions and products ---------------------------------------------------------


def to_s(x: Element) -> Element:
    if x.tag == "s":
        return x
    if x.tag == "h":
        return x.map_keys(h_to_s, "s")
    if x.tag == "p":
        return x.map_keys(p_to_s, "s")
    raise DomainError(f"{x.tag} is not a classical basis")


def to_h(x: Element) -> Element:
    if x.tag == "h":
        return x
    return to_s(x).map_keys(jacobi_trudi, "h")


def schur_product_h(lam: Sequence[int], mu: Sequence[int]) -> Element:
    """``s_lam s_mu`` computed in the h basis."""
    return jacobi_trudi(tuple(lam)) * jacobi_trudi(tuple(mu))


def _h_rule(a: tuple, b: tuple) -> Element:
    return Element.monomial("h", cb.sort_to_partition(a + b))


def _p_rule(a: tuple, b: tuple) -> Element:
    return Element.monomial("p", cb.sort_to_partition(a + b))


def _s_rule(a: tuple, b: tuple) -> Element:
    return to_s(schur_product_h(a, b))


register_product("h", "h", _h_rule)
register_product("p", "p", _p_rule)
register_product("s", "s", _s_rule)
