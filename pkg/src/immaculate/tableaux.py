"""Skew immaculate tableaux and their enumeration.

A tableau stores its inner shape (zero padded to the number of rows) and, for
each row, the entries sitting to the right of the inner cells.  Rows below
the inner shape must be nonempty and their first entries strictly increase
from top to bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import combinat as cb
from .combinat import DomainError


@dataclass(frozen=True)
class ImmaculateTableau:
    inner: tuple
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        inner = tuple(int(a) for a in self.inner)
        while len(inner) > len(rows) and inner and inner[-1] == 0:
            inner = inner[:-1]
        # rows past the inner shape carry no cells unless filled
        while len(rows) > len(inner) and not rows[-1]:
            rows = rows[:-1]
        length = max(len(inner), len(rows))
        object.__setattr__(self, "inner", cb.pad(inner, length))
        object.__setattr__(self, "rows", rows + ((),) * (length - len(rows)))

    @classmethod
    def from_rows(cls, inner: Sequence[int], rows: Sequence[Sequence[int]]) -> "ImmaculateTableau":
        return cls(tuple(inner), tuple(tuple(r) for r in rows))

    @property
    def alpha(self) -> tuple:
        return cb.strip_zeros(self.inner)

    def outer(self) -> tuple:
        return tuple(a + len(r) for a, r in zip(self.inner, self.rows))

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> Iterator[int]:
        for r in self.rows:
            yield from r

    def content(self, m: int | None = None) -> tuple:
        top = max(self.entries(), default=0)
        if m is None:
            m = top
        elif top > m:
            raise DomainError(f"tableau uses letter {top} > {m}")
        counts = [0] * m
        for v in self.entries():
            counts[v - 1] += 1
        return tuple(counts)

    def reading_word(self) -> tuple:
        return reading_word(self)

    def is_valid(self) -> bool:
        return is_immaculate(self)

    def is_standard(self) -> bool:
        word = sorted(self.entries())
        return word == list(range(1, len(word) + 1))

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "ImmaculateTableau":
        return cls(tuple(data["inner"]), tuple(tuple(r) for r in data["rows"]))

    def render(self) -> str:
        lines = []
        for a, r in zip(self.inner, self.rows):
            cells = ["X"] * a + [str(v) for v in r]
            lines.append(" ".join(cells) if cells else ".")
        return "\n".join(lines)


@dataclass(frozen=True)
class YTableau:
    """Content-side tableau; row ``r`` may be empty."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in self.rows))

    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    def to_json(self) -> list:
        return [list(r) for r in self.rows]

    def render(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) if r else "." for r in self.rows)


def reading_word(T: ImmaculateTableau) -> tuple:
    """Rows top to bottom, each read right to left."""
    return tuple(v for r in T.rows for v in reversed(r))


def is_yamanouchi(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        if v < 1:
            raise DomainError(f"letters must be positive, got {v}")
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_immaculate(T: ImmaculateTableau) -> bool:
    """Rows weakly increasing, rows below the inner shape nonempty with
    strictly increasing first entries."""
    alpha_len = len(T.alpha)
    if any(a == 0 for a in T.inner[:alpha_len]):
        return False
    last_first = 0
    for j, r in enumerate(T.rows):
        if any(v < 1 for v in r):
            return False
        if any(r[i] > r[i + 1] for i in range(len(r) - 1)):
            return False
        if j >= alpha_len:
            if not r or r[0] <= last_first:
                return False
            last_first = r[0]
    return True


def descent_composition(T: ImmaculateTableau) -> tuple:
    if not T.is_standard():
        raise DomainError("descent composition needs a standard tableau")
    n = T.size()
    row_of = {}
    for j, r in enumerate(T.rows):
        for v in r:
            row_of[v] = j
    descents = [j for j in range(1, n) if row_of[j] < row_of[j + 1]]
    return cb.composition_from_set(descents, n)


# -- enumeration ----------------------------------------------------------------


def _row_choices(remaining: list, lo: int, total: int | None):
    """Count vectors ``x <= remaining`` with ``x[i] = 0`` for ``i < lo`` and,
    if given, ``sum(x) = total``."""
    m = len(remaining)
    x = [0] * m

    def walk(i, left):
        if i == m:
            if total is None or left == 0:
                yield tuple(x)
            return
        top = remaining[i] if i >= lo else 0
        if left is not None:
            top = min(top, left)
        for c in range(top, -1, -1):
            x[i] = c
            yield from walk(i + 1, None if left is None else left - c)
        x[i] = 0

    yield from walk(0, total)


def enumerate_immaculate(
    inner: Sequence[int],
    content: Sequence[int],
    outer: Sequence[int] | None = None,
    yamanouchi: bool = False,
) -> list:
    """All immaculate tableaux of inner shape ``inner`` and content ``content``.

    ``outer`` restricts the outer shape; ``yamanouchi`` keeps only tableaux
    with a Yamanouchi reading word (checked row by row while building).
    Output is in a canonical order (outer shape first, then rows).
    """
    alpha = tuple(inner)
    if not cb.is_proper(alpha):
        raise DomainError(f"inner shape {alpha} is not a proper composition")
    content = list(content)
    if any(c < 0 for c in content):
        raise DomainError(f"content {tuple(content)} has a negative entry")
    m = len(content)
    if outer is not None:
        outer = tuple(outer)
        if len(outer) < len(alpha) or any(b < a for a, b in zip(alpha, outer)):
            return []
        if sum(outer) != sum(alpha) + sum(content):
            return []
    out: list = []
    rows: list = []
    counts = [0] * m

    def admissible(x):
        if not yamanouchi:
            return True
        return all(counts[i] + x[i] <= counts[i - 1] for i in range(1, m) if x[i])

    def place(x):
        for i in range(m):
            counts[i] += x[i]
            content[i] -= x[i]
        rows.append(tuple(v + 1 for v in range(m) for _ in range(x[v])))

    def unplace(x):
        rows.pop()
        for i in range(m):
            counts[i] -= x[i]
            content[i] += x[i]

    def walk(j, last_first):
        left = sum(content)
        if j < len(alpha):
            total = None if outer is None else outer[j] - alpha[j]
            for x in _row_choices(content, 0, total):
                if admissible(x):
                    place(x)
                    walk(j + 1, 0)
                    unplace(x)
            return
        if left == 0:
            if outer is None or len(outer) == j:
                out.append(ImmaculateTableau(alpha, tuple(rows)))
            return
        if outer is not None and j >= len(outer):
            return
        # the new row starts with the smallest remaining letter and takes all
        # of its copies: later rows start strictly higher
        lo = next(i for i in range(m) if content[i])
        if lo + 1 <= last_first:
            return
        total = None if outer is None else outer[j]
        for x in _row_choices(content, lo, total):
            if x[lo] != content[lo]:
                continue
            if admissible(x):
                place(x)
                walk(j + 1, lo + 1)
                unplace(x)

    walk(0, 0)
    out.sort(key=lambda T: (T.outer(), T.rows))
    return out


def enumerate_standard_by_descent(inner: Sequence[int], n: int, descent: Sequence[int]) -> list:
    """Standard immaculate tableaux on ``inner`` with descent composition ``descent``."""
    descent = tuple(descent)
    if sum(descent) != n or not cb.is_proper(descent):
        raise DomainError(f"{descent} is not a composition of {n}")
    return [
        T
        for T in enumerate_immaculate(inner, (1,) * n)
        if descent_composition(T) == descent
    ]


def T_set(alpha: Sequence[int], lam: Sequence[int]) -> list:
    """Pairs ``(T, sigma)`` with ``sigma = c(T) - lam + Id`` a permutation."""
    lam = tuple(lam)
    if not cb.is_partition(lam):
        raise DomainError(f"{lam} is not a partition")
    m = len(lam)
    out = []
    for sigma in cb.permutations(m):
        content = tuple(l + s - i for i, (l, s) in enumerate(zip(lam, sigma), start=1))
        if any(c < 0 for c in content):
            continue
        for T in enumerate_immaculate(alpha, content):
            out.append((T, sigma))
    out.sort(key=lambda p: (p[0].outer(), p[0].rows, p[1]))
    return out
