"""Lattice points counting immaculate LR coefficients.

Coordinates ``a[i][j]`` for ``0 <= i <= j <= m`` record how many letters ``i``
sit in row ``j`` (row 0 holds the inner shape).  The hive transform takes
cumulative double sums.

Two switches exist on :class:`PolytopeSpec`:

* ``N`` weights the first-column inequalities.  It defaults to ``|nu|``; any
  value ``>= max(beta)`` is large enough to make the count exact.
* ``prefix_rule`` picks the prefix inequalities.  ``"reading"`` compares the
  letters ``i`` in rows ``<= j`` with the letters ``i+1`` in rows ``<= j+1``,
  which is what a right-to-left reading word demands.  ``"printed"`` stops the
  second sum at row ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import combinat as cb
from .combinat import DomainError
from .tableaux import ImmaculateTableau, is_immaculate, is_yamanouchi

PREFIX_RULES = ("reading", "printed")


@dataclass(frozen=True)
class TriangularArray:
    """``rows[j] = (x[0][j], ..., x[j][j])`` for ``j = 0..m``."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        for j, r in enumerate(rows):
            if len(r) != j + 1:
                raise DomainError(f"triangle row {j} has {len(r)} entries, expected {j + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def m(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.rows[j][i]

    def to_json(self) -> list:
        return [list(r) for r in self.rows]

    def render(self) -> str:
        width = max(len(str(v)) for r in self.rows for v in r)
        lines = []
        for j, r in enumerate(self.rows):
            pad = " " * ((self.m - j) * (width + 1) // 2)
            lines.append(pad + " ".join(str(v).rjust(width) for v in r))
        return "\n".join(line.rstrip() for line in lines)


@dataclass(frozen=True)
class PolytopeSpec:
    alpha: tuple
    nu: tuple
    beta: tuple
    N: int | None = None
    prefix_rule: str = "reading"
    m: int = field(init=False)

    def __post_init__(self):
        alpha, nu, beta = (tuple(int(v) for v in x) for x in (self.alpha, self.nu, self.beta))
        if not cb.is_partition(nu):
            raise DomainError(f"nu={nu} is not a partition")
        if sum(beta) != sum(alpha) + sum(nu):
            raise DomainError(f"size mismatch: |{beta}| != |{alpha}| + |{nu}|")
        if self.prefix_rule not in PREFIX_RULES:
            raise DomainError(f"unknown prefix rule {self.prefix_rule!r}")
        m = max(len(alpha), len(nu), len(beta))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "alpha", cb.pad(alpha, m))
        object.__setattr__(self, "nu", cb.pad(nu, m))
        object.__setattr__(self, "beta", cb.pad(beta, m))
        if self.N is None:
            object.__setattr__(self, "N", sum(nu))


# -- conditions on a-arrays ----------------------------------------------------------


def violations(a: TriangularArray, spec: PolytopeSpec) -> list:
    """Names of the violated conditions (empty when ``a`` is a point)."""
    m = spec.m
    if a.m != m:
        return ["dimension"]
    bad = []
    if a[0, 0] != 0:
        bad.append("pinned")
    if any(a[i, j] < 0 for j in range(1, m + 1) for i in range(1, j + 1)):
        bad.append("1")
    if any(a[0, j] != spec.alpha[j - 1] for j in range(1, m + 1)):
        bad.append("2")
    if any(sum(a[p, j] for p in range(j + 1)) != spec.beta[j - 1] for j in range(1, m + 1)):
        bad.append("3")
    if any(sum(a[i, q] for q in range(i, m + 1)) != spec.nu[i - 1] for i in range(1, m + 1)):
        bad.append("4")
    if not _prefix_ok(a, m, spec.prefix_rule):
        bad.append("5")
    if not _first_column_ok(a, m, spec.N):
        bad.append("6")
    return bad


def _prefix_ok(a, m: int, rule: str) -> bool:
    stop = 1 if rule == "reading" else 0
    top = m - 1 if rule == "reading" else m
    for i in range(1, m):
        for j in range(i, top + 1):
            lhs = sum(a[i, q] for q in range(i, j + 1))
            rhs = sum(a[i + 1, q] for q in range(i + 1, j + stop + 1))
            if lhs < rhs:
                return False
    return True


def _first_column_ok(a, m: int, N: int) -> bool:
    for j in range(1, m):
        for i in range(1, j + 1):
            lhs = N * sum(a[p, j] for p in range(i))
            rhs = sum(a[p, j + 1] for p in range(i + 1))
            if lhs < rhs:
                return False
    return True


def cs_ok(a, m: int) -> bool:
    """The classical replacement of the first-column condition."""
    return _first_column_ok(a, m, 1)


# -- enumeration -------------------------------------------------------------------------


def _raw_points(spec: PolytopeSpec) -> Iterator[TriangularArray]:
    """Arrays satisfying the equalities and nonnegativity.

    Letters are placed one at a time: letter ``i`` spreads ``nu_i`` over
    columns ``i..m``; column ``i`` is closed by letter ``i`` so ``a[i][i]``
    is forced.
    """
    m = spec.m
    cap = [b - a for a, b in zip(spec.alpha, spec.beta)]
    if any(c < 0 for c in cap):
        return
    grid = [[0] * (m + 1) for _ in range(m + 1)]
    for j in range(1, m + 1):
        grid[0][j] = spec.alpha[j - 1]

    def spread(i, j, left):
        # assign a[i][j'] for j' >= j with a[i][i] already set
        if j > m:
            if left == 0:
                yield
            return
        if j == m:
            if left <= cap[j - 1]:
                grid[i][j] = left
                cap[j - 1] -= left
                yield
                cap[j - 1] += left
                grid[i][j] = 0
            return
        for v in range(min(left, cap[j - 1]), -1, -1):
            grid[i][j] = v
            cap[j - 1] -= v
            yield from spread(i, j + 1, left - v)
            cap[j - 1] += v
        grid[i][j] = 0

    def letter(i):
        if i > m:
            yield TriangularArray(tuple(tuple(grid[p][j] for p in range(j + 1)) for j in range(m + 1)))
            return
        d = cap[i - 1]
        if d > spec.nu[i - 1]:
            return
        grid[i][i] = d
        cap[i - 1] = 0
        for _ in spread(i, i + 1, spec.nu[i - 1] - d):
            yield from letter(i + 1)
        cap[i - 1] = d
        grid[i][i] = 0

    yield from letter(1)


def enumerate_points(spec: PolytopeSpec) -> list:
    return [
        a
        for a in _raw_points(spec)
        if _prefix_ok(a, spec.m, spec.prefix_rule) and _first_column_ok(a, spec.m, spec.N)
    ]


def count_points(spec: PolytopeSpec) -> int:
    return len(enumerate_points(spec))


def classical_cs_count(mu: Sequence[int], lam: Sequence[int], nu: Sequence[int]) -> int:
    """Points under the equalities, the prefix rule and the classical
    inequality, for the outer shape ``lam`` over ``mu`` with content ``nu``."""
    spec = PolytopeSpec(tuple(mu), tuple(nu), tuple(lam))
    return sum(
        1
        for a in _raw_points(spec)
        if _prefix_ok(a, spec.m, "reading") and cs_ok(a, spec.m)
    )


# -- tableaux <-> arrays -------------------------------------------------------------------


def array_from_tableau(T: ImmaculateTableau, spec: PolytopeSpec | None = None, check: bool = True) -> TriangularArray:
    """``a[i][j]`` = number of letters ``i`` in row ``j`` of ``T``.

    With ``check`` the tableau must be an immaculate Yamanouchi tableau
    matching ``spec``; otherwise the counts are recorded as they are.
    """
    if check:
        if not is_immaculate(T):
            raise DomainError("tableau is not immaculate")
        if not is_yamanouchi(T.reading_word()):
            raise DomainError("tableau reading word is not Yamanouchi")
    outer = T.outer()
    if spec is None:
        content = T.content()
        nu = tuple(content)
        if not cb.is_partition(nu):
            raise DomainError(f"content {nu} is not a partition")
        spec = PolytopeSpec(T.alpha, cb.strip_zeros(nu), outer)
    m = spec.m
    if check:
        if cb.pad(T.alpha, m) != spec.alpha or cb.pad(outer, m) != spec.beta:
            raise DomainError("tableau shape does not match the polytope data")
        if cb.pad(T.content(), m) != spec.nu:
            raise DomainError("tableau content does not match the polytope data")
    if len(outer) > m or max(T.entries(), default=0) > m:
        raise DomainError("tableau does not fit in the polytope dimension")
    grid = [[0] * (m + 1) for _ in range(m + 1)]
    for j in range(1, m + 1):
        grid[0][j] = spec.alpha[j - 1]
    for j, row in enumerate(T.rows, start=1):
        for v in row:
            if v > j:
                raise DomainError(f"letter {v} in row {j} has no coordinate")
            grid[v][j] += 1
    return TriangularArray(tuple(tuple(grid[p][j] for p in range(j + 1)) for j in range(m + 1)))


def tableau_from_array(a: TriangularArray) -> ImmaculateTableau:
    """Rows of weakly increasing letters with the recorded multiplicities."""
    m = a.m
    inner = tuple(a[0, j] for j in range(1, m + 1))
    rows = tuple(
        tuple(i for i in range(1, j + 1) for _ in range(a[i, j])) for j in range(1, m + 1)
    )
    return ImmaculateTableau(cb.strip_zeros(inner), rows)


# -- hive arrays ------------------------------------------------------------------------------


def hive_from_array(a: TriangularArray) -> TriangularArray:
    """``h[i][j] = sum_{p <= i} sum_{p <= q <= j} a[p][q]``."""
    m = a.m
    h = [[0] * (m + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        for j in range(i, m + 1):
            row_part = sum(a[i, q] for q in range(i, j + 1))
            h[i][j] = row_part + (h[i - 1][j] if i else 0)
    return TriangularArray(tuple(tuple(h[i][j] for i in range(j + 1)) for j in range(m + 1)))


def array_from_hive(h: TriangularArray) -> TriangularArray:
    m = h.m
    a = [[0] * (m + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        for j in range(i, m + 1):
            row_j = h[i, j] - (h[i - 1, j] if i else 0)
            row_prev = (h[i, j - 1] - (h[i - 1, j - 1] if i else 0)) if j > i else 0
            a[i][j] = row_j - row_prev
    return TriangularArray(tuple(tuple(a[i][j] for i in range(j + 1)) for j in range(m + 1)))


def hive_violations(h: TriangularArray, spec: PolytopeSpec) -> list:
    """Violated hive conditions; mirrors :func:`violations` under the transform."""
    m, N = spec.m, spec.N
    H = lambda i, j: h[i, j]  # noqa: E731
    bad = []
    if H(0, 0) != 0:
        bad.append("pinned")
    if any(H(0, j) - H(0, j - 1) != spec.alpha[j - 1] for j in range(1, m + 1)):
        bad.append("1'")
    if any(H(j, j) - H(j - 1, j - 1) != spec.beta[j - 1] for j in range(1, m + 1)):
        bad.append("2'")
    if any(H(i, m) - H(i - 1, m) != spec.nu[i - 1] for i in range(1, m + 1)):
        bad.append("3'")
    if any(
        H(i, j) - H(i, j - 1) < H(i - 1, j) - H(i - 1, j - 1)
        for j in range(1, m + 1)
        for i in range(1, j)
    ):
        bad.append("4'")
    if not _hive_prefix_ok(H, m, spec.prefix_rule):
        bad.append("5'")
    if any(
        N * (H(i - 1, j) - H(i - 1, j - 1)) < H(i, j + 1) - H(i, j)
        for j in range(1, m)
        for i in range(1, j + 1)
    ):
        bad.append("6'")
    return bad


def _hive_prefix_ok(H, m: int, rule: str) -> bool:
    for i in range(1, m):
        for j in range(i, m if rule == "reading" else m + 1):
            lhs = H(i, j) - H(i - 1, j)
            if rule == "reading":
                rhs = H(i + 1, j + 1) - H(i, j + 1)
            elif j == i:
                rhs = 0
            else:
                # letters i+1 in rows i+1..j
                rhs = H(i + 1, j) - H(i, j)
            if lhs < rhs:
                return False
    return True


def _hive_inequalities(spec: PolytopeSpec) -> list:
    """Each hive inequality as ``(cells, lhs_terms, rhs_terms, weight)`` meaning
    ``weight * sum(lhs) >= sum(rhs)`` with signed cell terms."""
    m, N = spec.m, spec.N
    out = []
    for j in range(1, m + 1):
        for i in range(1, j):
            out.append(([(1, i, j), (-1, i, j - 1)], [(1, i - 1, j), (-1, i - 1, j - 1)], 1))
    for i in range(1, m):
        top = m - 1 if spec.prefix_rule == "reading" else m
        for j in range(i, top + 1):
            lhs = [(1, i, j), (-1, i - 1, j)]
            if spec.prefix_rule == "reading":
                rhs = [(1, i + 1, j + 1), (-1, i, j + 1)]
            elif j == i:
                rhs = []
            else:
                rhs = [(1, i + 1, j), (-1, i, j)]
            out.append((lhs, rhs, 1))
    for j in range(1, m):
        for i in range(1, j + 1):
            out.append(([(1, i - 1, j), (-1, i - 1, j - 1)], [(1, i, j + 1), (-1, i, j)], N))
    return out


def enumerate_hive_points(spec: PolytopeSpec) -> list:
    """Direct enumeration in hive coordinates.

    Boundary values are fixed by the margins.  The interior values
    ``h[i][j]`` with ``1 <= i < j < m`` are scanned between the bounds that
    keep ``a[i][j]``, the partial column and the partial row within range;
    each inequality is tested as soon as all of its cells are known, and
    survivors are checked once more against :func:`hive_violations`.
    """
    m = spec.m
    if m == 0:
        return [TriangularArray(((0,),))]
    h = [[None] * (m + 1) for _ in range(m + 1)]
    acc = 0
    h[0][0] = 0
    for j in range(1, m + 1):
        acc += spec.alpha[j - 1]
        h[0][j] = acc
    acc = 0
    for j in range(1, m + 1):
        acc += spec.beta[j - 1]
        h[j][j] = acc
    acc = sum(spec.alpha)
    for i in range(1, m + 1):
        acc += spec.nu[i - 1]
        if h[i][m] is not None and h[i][m] != acc:
            # the corner h[m][m] is pinned twice; the margins disagree
            return []
        h[i][m] = acc
    free = [(i, j) for i in range(1, m) for j in range(i + 1, m)]
    order = {cell: k for k, cell in enumerate(free)}
    checks: list[list] = [[] for _ in range(len(free) + 1)]
    for lhs, rhs, w in _hive_inequalities(spec):
        step = max((order.get((i, j), -1) for _, i, j in lhs + rhs), default=-1)
        checks[step + 1].append((lhs, rhs, w))

    def holds(k):
        for lhs, rhs, w in checks[k]:
            left = sum(s * h[i][j] for s, i, j in lhs)
            right = sum(s * h[i][j] for s, i, j in rhs)
            if w * left < right:
                return False
        return True

    out = []
    if not holds(0):
        return out

    def walk(k):
        if k == len(free):
            tri = TriangularArray(tuple(tuple(h[i][j] for i in range(j + 1)) for j in range(m + 1)))
            if not hive_violations(tri, spec):
                out.append(tri)
            return
        i, j = free[k]
        lo = h[i][j - 1] + h[i - 1][j] - h[i - 1][j - 1]
        hi = min(
            h[i][m] - h[i - 1][m] + h[i - 1][j],
            h[i][j - 1] + spec.beta[j - 1],
        )
        for v in range(lo, hi + 1):
            h[i][j] = v
            if holds(k + 1):
                walk(k + 1)
        h[i][j] = None

    walk(0)
    return out


def count_hive_points(spec: PolytopeSpec) -> int:
    return len(enumerate_hive_points(spec))
