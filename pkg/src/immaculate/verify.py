"""Independent oracles and the named invariant suites.

Every oracle here goes through the H basis and never touches tableaux or the
Pieri rule: an H-expansion is turned into immaculate functions by repeatedly
peeling off the lexicographically smallest key, which works because
``S_alpha = H_alpha + (lexicographically larger H terms)``.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import combinat as cb
from . import involution as inv
from . import nsym, polytope, rules, symfunc
from .freemodule import Element
from .tableaux import T_set, is_yamanouchi

# -- oracles ----------------------------------------------------------------------------


def immaculate_by_elimination(x: Element) -> Element:
    """H-basis element to the immaculate basis by triangular elimination."""
    if x.tag != "H":
        x = nsym.to_h(x)
    remaining = Counter(dict(x.items()))
    out: Counter = Counter()
    while remaining:
        gamma = min(remaining, key=lambda k: (sum(k), k))
        c = remaining[gamma]
        out[gamma] += c
        for key, v in nsym.immaculate_to_h(gamma).items():
            remaining[key] -= c * v
            if not remaining[key]:
                del remaining[key]
    return Element("S", out)


def h_route_product(alpha, right: Element) -> Element:
    """``S_alpha * right`` computed in H and converted back by elimination."""
    return immaculate_by_elimination(nsym.immaculate_to_h(tuple(alpha)) * nsym.to_h(right))


def perp_closed_form(beta, alpha) -> Element:
    """``M_beta^perp H_alpha`` from the explicit commutation relation: subtract
    a vector with zeros removed equal to ``beta``, entrywise below ``alpha``."""
    beta, alpha = tuple(beta), tuple(alpha)
    acc: Counter = Counter()
    for vec in itertools.product(*(range(a + 1) for a in alpha)):
        if cb.strip_zeros(vec) == beta:
            acc[cb.strip_zeros(tuple(a - v for a, v in zip(alpha, vec)))] += 1
    return Element("H", acc)


def dual_mn_oracle(beta, alpha) -> Element:
    return immaculate_by_elimination(nsym.perp_monomial(beta, nsym.immaculate_to_h(tuple(alpha))))


def psi_h(k: int) -> Element:
    return nsym.to_h(nsym.psi_to_ribbon(k))


# -- suite machinery ---------------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures"


@dataclass(frozen=True)
class Suite:
    name: str
    default_size: int
    cases: Callable[..., Iterable]
    check: Callable
    description: str = ""


SUITES: dict = {}


def _suite(name: str, default_size: int, description: str):
    def register(fn_pair):
        cases, check = fn_pair
        SUITES[name] = Suite(name, default_size, cases, check, description)
        return fn_pair

    return register


def run_suite(name: str, max_size: int | None = None, jobs: int = 1, **options) -> SuiteResult:
    suite = SUITES[name]
    size = suite.default_size if max_size is None else max_size
    cases = [(c, options) for c in suite.cases(size, **options)]
    result = SuiteResult(name, len(cases))
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # case costs are very uneven, so hand them out one at a time
            outcomes = pool.map(_run_check, [name] * len(cases), cases)
            for fails in outcomes:
                result.failures.extend(fails)
    else:
        for case in cases:
            result.failures.extend(_run_check(name, case))
    return result


def _run_check(name: str, case_opts) -> list:
    case, options = case_opts
    return SUITES[name].check(case, **options)


def _compositions_upto(n: int, include_empty: bool = True):
    for k in range(0 if include_empty else 1, n + 1):
        yield from cb.compositions_of(k)


def _partitions_upto(n: int, include_empty: bool = True):
    for k in range(0 if include_empty else 1, n + 1):
        yield from cb.partitions_of(k)


def _fail(**kw) -> dict:
    return {k: (str(v) if isinstance(v, Element) else v) for k, v in kw.items()}


# -- the suites ----------------------------------------------------------------------------


def _pieri_cases(size, **_):
    for alpha in _compositions_upto(size):
        for s in range(0, 5):
            yield alpha, s


def _pieri_check(case, **_):
    alpha, s = case
    got = rules.pieri_product(alpha, s)
    want = h_route_product(alpha, nsym.h_word((s,)))
    return [] if got == want else [_fail(alpha=alpha, s=s, got=got, want=want)]


_suite("pieri", 5, "Pieri rule against the H-basis route")((_pieri_cases, _pieri_check))


def _ribbon_cases(size, **_):
    for alpha in _compositions_upto(size):
        for beta in _compositions_upto(size, include_empty=False):
            yield alpha, beta


def _ribbon_check(case, **_):
    alpha, beta = case
    got = rules.ribbon_immaculate_product(alpha, beta)
    want = h_route_product(alpha, nsym.ribbon_to_h(beta))
    return [] if got == want else [_fail(alpha=alpha, beta=beta, got=got, want=want)]


_suite("ribbon", 4, "ribbon rule against the ribbon-to-H route")((_ribbon_cases, _ribbon_check))


def _mn_cases(size, **_):
    for alpha in _compositions_upto(size):
        for k in range(1, 5):
            yield alpha, k


def _mn_check(case, **_):
    alpha, k = case
    got = rules.mn_product(alpha, k)
    want = h_route_product(alpha, psi_h(k))
    positive = rules.sum_normalized(rules.mn_positive(alpha, k))
    out = []
    if got != want:
        out.append(_fail(alpha=alpha, k=k, got=got, want=want))
    if positive != want:
        out.append(_fail(alpha=alpha, k=k, form="positive", got=positive, want=want))
    return out


_suite("mn", 5, "Murnaghan-Nakayama rule (both forms) against Psi via ribbons")((_mn_cases, _mn_check))


def _dual_cases(size, **_):
    for alpha in _compositions_upto(size):
        for beta in _compositions_upto(3, include_empty=False):
            yield alpha, beta


def _dual_check(case, **_):
    alpha, beta = case
    got = rules.dual_mn(beta, alpha)
    want = dual_mn_oracle(beta, alpha)
    out = [] if got == want else [_fail(alpha=alpha, beta=beta, got=got, want=want)]
    closed = nsym.perp_monomial(beta, nsym.h_word(alpha))
    if closed != perp_closed_form(beta, alpha):
        out.append(_fail(alpha=alpha, beta=beta, form="perp closed form"))
    if len(beta) == 1 and alpha and all(beta[0] < a for a in alpha):
        if any(c < 0 for _, c in got.items()):
            out.append(_fail(alpha=alpha, beta=beta, form="positivity", got=got))
    return out


_suite("dual-mn", 5, "dual MN rule against the perp adjoint in H")((_dual_cases, _dual_check))


def _lr_cases(size, **_):
    for n in range(size + 1):
        for a in range(n + 1):
            for alpha in cb.compositions_of(a):
                for lam in cb.partitions_of(n - a):
                    yield alpha, lam


def _lr_check(case, **_):
    alpha, lam = case
    got = rules.immaculate_lr_product(alpha, lam)
    want = h_route_product(alpha, nsym.immaculate_to_h(lam))
    general = rules.general_imm_product(alpha, lam)
    out = []
    if got != want:
        out.append(_fail(alpha=alpha, lam=lam, got=got, want=want))
    if general != want:
        out.append(_fail(alpha=alpha, lam=lam, form="general", got=general, want=want))
    if any(c < 0 for _, c in got.items()):
        out.append(_fail(alpha=alpha, lam=lam, form="positivity", got=got))
    return out


_suite("lr", 7, "immaculate LR rule against the H route")((_lr_cases, _lr_check))


def _padded_cases(size, **_):
    for k in range(1, size + 1):
        for j in range(1, k + 1):
            yield j, k


def _padded_check(case, **_):
    j, k = case
    sign = (-1) ** (j + 1)
    got = nsym.normalize_immaculate((0,) * (j - 1) + (k,))
    ribbon = nsym.from_h(nsym.ribbon_to_h((1,) * (j - 1) + (k - j + 1,)), "S").scale(sign)
    by_length = Element("S", [(b, sign) for b in cb.compositions_of(k) if len(b) == j])
    out = []
    if got != ribbon:
        out.append(_fail(j=j, k=k, got=got, want=ribbon))
    if got != by_length:
        out.append(_fail(j=j, k=k, form="length sum", got=got, want=by_length))
    return out


_suite("padded", 5, "immaculate functions of [0^(j-1), k]")((_padded_cases, _padded_check))


def _involution_cases(size, **_):
    for n in range(size + 1):
        for a in range(n + 1):
            for alpha in cb.compositions_of(a):
                for lam in cb.partitions_of(n - a):
                    if lam:
                        yield alpha, lam


def involution_violations(alpha, lam) -> list:
    """Check every property of the involution over ``T_set(alpha, lam)``."""
    alpha, lam = tuple(alpha), tuple(lam)
    pairs = T_set(alpha, lam)
    members = {T for T, _ in pairs}
    out = []
    signed: Counter = Counter()
    for T, sigma in pairs:
        where = dict(alpha=alpha, lam=lam, T=T.to_json())
        signed[T.outer()] += cb.sign(sigma)
        Y = inv.build_Y(T, lam)
        tau = Y.shape()
        # Lemma-level predicates on the shape of Y
        shifted = tuple(t - r for r, t in enumerate(tau, start=1))
        lam_shift = tuple(l - d for d, l in enumerate(lam, start=1))
        if shifted != cb.apply_right(lam_shift, cb.inverse(sigma)):
            out.append(_fail(check="shape of Y", **where))
        ascents = {r for r in range(1, len(tau)) if tau[r - 1] < tau[r] - 1}
        if cb.descents(cb.inverse(sigma)) != ascents:
            out.append(_fail(check="descents of sigma^-1", **where))
        if any(tau[r - 1] == tau[r] - 1 for r in range(1, len(tau))):
            out.append(_fail(check="no unit ascent", **where))
        if cb.is_partition(tau) != (sigma == cb.identity(len(lam))):
            out.append(_fail(check="partition iff identity", **where))
        if inv.invert_Y(Y, lam, alpha) != T:
            out.append(_fail(check="Y injective", **where))
        Y2 = inv.theta(Y)
        if inv.theta(Y2) != Y:
            out.append(_fail(check="theta involution", **where))
        has_cell = inv.most_nefarious_cell(Y) is not None
        if has_cell == (Y2 == Y):
            out.append(_fail(check="theta moves iff nefarious", **where))
        try:
            T2 = inv.phi(T, lam, alpha)
        except cb.DomainError as exc:
            out.append(_fail(check="phi defined", error=str(exc), **where))
            continue
        if T2 not in members:
            out.append(_fail(check="(a) phi stays in T_set", **where))
            continue
        if inv.phi(T2, lam, alpha) != T:
            out.append(_fail(check="(b) phi involution", **where))
        fixed = T2 == T
        good = sigma == cb.identity(len(lam)) and is_yamanouchi(T.reading_word())
        if fixed != good:
            out.append(_fail(check="(c) fixed points", **where))
        if not fixed:
            if T2.outer() != T.outer():
                out.append(_fail(check="(d) shape preserved", **where))
            sigma2 = inv.sigma_of(T2, lam)
            m = len(lam)
            if not any(
                sigma2 == cb.compose(cb.transposition(r, m), sigma) for r in range(1, m)
            ):
                out.append(_fail(check="(e) sigma times t_r", **where))
    tally = rules.lr_tally(alpha, lam)
    for beta in set(signed) | set(tally):
        if signed[beta] != tally[beta]:
            out.append(_fail(check="cancellation", alpha=alpha, lam=lam, beta=beta))
    return out


def _involution_check(case, **_):
    return involution_violations(*case)


_suite("involution", 7, "properties of the sign-reversing involution")(
    (_involution_cases, _involution_check)
)


def _polytope_cases(size, **_):
    for n in range(size + 1):
        for a in range(n + 1):
            for alpha in cb.compositions_of(a):
                for nu in cb.partitions_of(n - a):
                    yield alpha, nu


def polytope_N(mode: str, beta, nu) -> int:
    if mode == "nu":
        return sum(nu)
    if mode == "max-beta":
        return max(beta, default=0)
    raise cb.DomainError(f"unknown N mode {mode!r}")


def _polytope_check(case, n_mode: str = "nu", hive: bool = True, **_):
    alpha, nu = case
    n = sum(alpha) + sum(nu)
    tally = rules.lr_tally(alpha, nu)
    out = []
    for beta in cb.compositions_of(n):
        spec = polytope.PolytopeSpec(alpha, nu, beta, N=polytope_N(n_mode, beta, nu))
        pts = polytope.count_points(spec)
        if pts != tally[beta]:
            out.append(
                _fail(check="points vs LR", alpha=alpha, nu=nu, beta=beta, N=spec.N,
                      points=pts, lr=tally[beta])
            )
        if hive:
            hv = polytope.count_hive_points(spec)
            if hv != pts:
                out.append(
                    _fail(check="hive vs points", alpha=alpha, nu=nu, beta=beta, N=spec.N,
                          hive=hv, points=pts)
                )
    if cb.is_partition(alpha):
        for lam in cb.partitions_of(n):
            cs = polytope.classical_cs_count(alpha, lam, nu)
            want = symfunc.classical_lr(alpha, nu, lam)
            if cs != want:
                out.append(_fail(check="CS vs classical", mu=alpha, nu=nu, lam=lam, cs=cs, lr=want))
    return out


_suite("polytope", 8, "lattice-point counts against LR coefficients")((_polytope_cases, _polytope_check))


def _shift_cases(size, **_):
    for n in range(size + 1):
        for a in range(1, n + 1):
            for alpha in cb.compositions_of(a):
                for lam in cb.partitions_of(n - a):
                    yield alpha, lam


def shift_violations(alpha, lam, max_shift: int = 2) -> list:
    base = rules.lr_tally(alpha, lam)
    out = []
    for nu in itertools.product(range(max_shift + 1), repeat=len(alpha)):
        if not any(nu):
            continue
        shifted = rules.lr_tally(cb.add_vectors(alpha, nu), lam)
        moved = Counter({cb.add_vectors(beta, nu): c for beta, c in base.items()})
        if moved != shifted:
            out.append(_fail(alpha=alpha, lam=lam, nu=nu))
    return out


def _shift_check(case, **_):
    return shift_violations(*case)


_suite("shift", 7, "shift symmetry of immaculate LR coefficients")((_shift_cases, _shift_check))


def _straightening_cases(size, **_):
    for n in range(size + 1):
        for nu in cb.partitions_of(n):
            for a in range(n + 1):
                for mu in cb.partitions_of(a):
                    for lam in cb.partitions_of(n - a):
                        yield mu, lam, nu


def _straightening_check(case, **_):
    mu, lam, nu = case
    want = symfunc.classical_lr(mu, lam, nu)
    got = rules.classical_lr_via_straightening(mu, lam, nu)
    out = []
    if got != want:
        out.append(_fail(mu=mu, lam=lam, nu=nu, got=got, want=want))
    if symfunc.classical_lr(lam, mu, nu) != want:
        out.append(_fail(mu=mu, lam=lam, nu=nu, check="commutativity"))
    return out


_suite("straightening", 8, "straightened immaculate sum against classical LR")(
    (_straightening_cases, _straightening_check)
)


def random_element(rng: random.Random, degree: int, terms: int = 3) -> Element:
    keys = cb.compositions_of(degree)
    return Element("S", [(rng.choice(keys), rng.randint(-3, 3)) for _ in range(terms)])


def _chi_cases(size, seed: int = 0, pairs: int = 100, **_):
    rng = random.Random(seed)
    for _ in range(pairs):
        d1 = rng.randint(0, size)
        d2 = rng.randint(0, size - d1)
        yield ("pair", random_element(rng, d1).to_json(), random_element(rng, d2).to_json())
    for lam in _partitions_upto(min(size + 1, 6)):
        yield ("schur", lam)
    for k in range(1, size + 1):
        yield ("psi", k)
    # products of two Schur functions up to degree size + 2
    for n in range(size + 3):
        for a in range(n + 1):
            for mu in cb.partitions_of(a):
                for lam in cb.partitions_of(n - a):
                    yield ("lr", mu, lam)
    for mu in _partitions_upto(size):
        for k in range(1, 5):
            yield ("mn", mu, k)


def _chi_check(case, **_):
    from .freemodule import from_json

    kind = case[0]
    if kind == "pair":
        x, y = from_json(case[1]), from_json(case[2])
        lhs = nsym.chi(x * y)
        rhs = nsym.chi(x) * nsym.chi(y)
        return [] if lhs == rhs else [_fail(kind=kind, x=x, y=y)]
    if kind == "schur":
        lam = case[1]
        ok = nsym.chi(Element.monomial("S", lam)) == symfunc.jacobi_trudi(lam)
        return [] if ok else [_fail(kind=kind, lam=lam)]
    if kind == "psi":
        k = case[1]
        ok = nsym.chi(nsym.Psi(k)) == symfunc.to_h(Element.monomial("p", (k,)))
        return [] if ok else [_fail(kind=kind, k=k)]
    if kind == "lr":
        mu, lam = case[1], case[2]
        lhs = symfunc.to_s(nsym.chi(rules.immaculate_lr_product(mu, lam)))
        rhs = symfunc.to_s(symfunc.schur_product_h(mu, lam))
        return [] if lhs == rhs else [_fail(kind=kind, mu=mu, lam=lam)]
    mu, k = case[1], case[2]
    lhs = symfunc.to_s(nsym.chi(rules.mn_product(mu, k)))
    rhs = symfunc.classical_mn(mu, k)
    return [] if lhs == rhs else [_fail(kind=kind, mu=mu, k=k)]


_suite("chi", 5, "projection to symmetric functions is an algebra map")((_chi_cases, _chi_check))
