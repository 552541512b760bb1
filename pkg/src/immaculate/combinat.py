"""Compositions, partitions and permutations.

Compositions and generalized integer indices are both plain tuples of ints;
``is_proper`` tells them apart.  Permutations are one-line words on
``1..m`` stored as tuples.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

Composition = tuple
Partition = tuple
Permutation = tuple


class DomainError(ValueError):
    """Raised when an operation is called outside its mathematical domain."""


def composition(parts: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(p) for p in parts)


def is_proper(alpha: Sequence[int]) -> bool:
    return all(p >= 1 for p in alpha)


def is_partition(lam: Sequence[int]) -> bool:
    return all(p >= 0 for p in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def size(alpha: Sequence[int]) -> int:
    return sum(alpha)


def compositions_of(n: int) -> list[tuple[int, ...]]:
    """All compositions of ``n`` in lexicographic order.

    ``compositions_of(3)`` is ``[(1,1,1), (1,2), (2,1), (3,)]``.
    """
    if n < 0:
        raise DomainError(f"no compositions of negative n={n}")
    if n == 0:
        return [()]
    return list(_compositions(n))


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def compositions_of_length(n: int, length: int) -> list[tuple[int, ...]]:
    return [c for c in compositions_of(n) if len(c) == length]


def partitions_of(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``n`` (positive parts), in reverse lexicographic order."""
    if n < 0:
        raise DomainError(f"no partitions of negative n={n}")
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def descent_set(alpha: Sequence[int]) -> frozenset[int]:
    """Partial sums of ``alpha`` excluding the total."""
    if not is_proper(alpha):
        raise DomainError(f"{tuple(alpha)} is not a proper composition")
    return frozenset(itertools.accumulate(alpha[:-1]))


def composition_from_set(subset: Iterable[int], n: int) -> tuple[int, ...]:
    """Inverse of :func:`descent_set` for compositions of ``n``."""
    points = sorted(set(subset))
    if points and (points[0] < 1 or points[-1] > n - 1):
        raise DomainError(f"descent set {points} not inside 1..{n - 1}")
    if n == 0:
        return ()
    cuts = [0, *points, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def refines(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """True when ``alpha <= beta`` in refinement order (alpha is finer)."""
    if sum(alpha) != sum(beta):
        raise DomainError(f"size mismatch: |{tuple(alpha)}| != |{tuple(beta)}|")
    return descent_set(beta) <= descent_set(alpha)


def coarsenings(alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """All ``beta >= alpha`` in refinement order (``alpha`` included)."""
    n = sum(alpha)
    cuts = sorted(descent_set(alpha))
    out = []
    for k in range(len(cuts) + 1):
        for sub in itertools.combinations(cuts, k):
            out.append(composition_from_set(sub, n))
    return sorted(out)


def pieri_extensions(alpha: Sequence[int], s: int) -> list[tuple[int, ...]]:
    """All ``beta`` with ``alpha`` contained in ``beta`` in the right-Pieri sense.

    ``|beta| = |alpha| + s``, ``beta_j >= alpha_j`` for ``j <= len(alpha)``
    and ``len(beta) <= len(alpha) + 1``.
    """
    alpha = tuple(alpha)
    if s < 0:
        raise DomainError(f"negative Pieri degree {s}")
    m = len(alpha)
    out = []
    # the appended row (if any) takes ``last`` cells, the rest go to old rows
    for last in range(0, s + 1):
        if last == 0 and m == 0 and s > 0:
            continue
        for extra in _weak_compositions(s - last, m):
            beta = tuple(a + e for a, e in zip(alpha, extra))
            out.append(beta + ((last,) if last else ()))
    return sorted(set(out))


def _weak_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in _weak_compositions(n - first, k - 1):
            yield (first,) + rest


def weak_compositions(n: int, k: int) -> list[tuple[int, ...]]:
    return list(_weak_compositions(n, k))


def concat(alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, ...]:
    return tuple(alpha) + tuple(beta)


def wedge(alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, ...]:
    if not alpha or not beta:
        raise DomainError("wedge needs two nonempty compositions")
    return tuple(alpha[:-1]) + (alpha[-1] + beta[0],) + tuple(beta[1:])


def star_transpose(zeta: Sequence[int], r: int) -> tuple[int, ...]:
    """``(.., zeta_{r+1} - 1, zeta_r + 1, ..)`` with ``r`` one-based."""
    zeta = tuple(zeta)
    if not 1 <= r < len(zeta):
        raise DomainError(f"transposition index r={r} outside 1..{len(zeta) - 1}")
    i = r - 1
    return zeta[:i] + (zeta[i + 1] - 1, zeta[i] + 1) + zeta[i + 2:]


def star(nu: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """Shifted right action ``(nu - Id) . sigma + Id``; agrees with
    :func:`star_transpose` on simple transpositions."""
    shifted = tuple(v - i for i, v in enumerate(nu, start=1))
    moved = apply_right(shifted, sigma)
    return tuple(v + i for i, v in enumerate(moved, start=1))


def sort_to_partition(alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((p for p in alpha if p != 0), reverse=True))


def strip_zeros(alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(p for p in alpha if p != 0)


def pad(alpha: Sequence[int], length: int) -> tuple[int, ...]:
    alpha = tuple(alpha)
    if len(alpha) > length:
        raise DomainError(f"{alpha} longer than {length}")
    return alpha + (0,) * (length - len(alpha))


def add_vectors(alpha: Sequence[int], nu: Sequence[int]) -> tuple[int, ...]:
    """Componentwise sum, padding the shorter operand with zeros."""
    m = max(len(alpha), len(nu))
    return tuple(a + b for a, b in zip(pad(alpha, m), pad(nu, m)))


# -- permutations ---------------------------------------------------------


def identity(m: int) -> tuple[int, ...]:
    return tuple(range(1, m + 1))


def is_permutation(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def permutations(m: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, m + 1))


def transposition(r: int, m: int) -> tuple[int, ...]:
    """``t_r`` in ``S_m``, swapping ``r`` and ``r + 1``."""
    if not 1 <= r < m:
        raise DomainError(f"t_{r} not in S_{m}")
    w = list(range(1, m + 1))
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def apply_left(sigma: Sequence[int], values: Sequence[int]) -> tuple[int, ...]:
    """``sigma . (a_1, .., a_d) = (sigma(a_1), .., sigma(a_d))``."""
    return tuple(sigma[a - 1] for a in values)


def apply_right(values: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """``(b_1, .., b_n) . sigma = (b_sigma(1), .., b_sigma(n))``."""
    if len(values) != len(sigma):
        raise DomainError("right action needs a list as long as the permutation")
    return tuple(values[s - 1] for s in sigma)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``sigma o tau``: first ``tau``, then ``sigma``."""
    return tuple(sigma[t - 1] for t in tau)


def inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def inversions(sigma: Sequence[int]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def sign(sigma: Sequence[int]) -> int:
    return -1 if inversions(sigma) % 2 else 1


def descents(sigma: Sequence[int]) -> frozenset[int]:
    return frozenset(r for r in range(1, len(sigma)) if sigma[r - 1] > sigma[r])


# -- text syntax ------------------------------------------------------------

_BRACKET = re.compile(r"^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$")


def parse_composition(text: str) -> tuple[int, ...]:
    """Parse ``[2,1,3]`` (or ``[]``); bare ``2,1,3`` is accepted too."""
    stripped = text.strip()
    if not stripped.startswith("["):
        stripped = f"[{stripped}]"
    if not _BRACKET.match(stripped):
        raise DomainError(f"malformed composition {text!r}")
    inner = stripped.strip()[1:-1].strip()
    if not inner:
        return ()
    return tuple(int(tok) for tok in inner.split(","))


def format_composition(alpha: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in alpha) + "]"
