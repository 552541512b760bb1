"""Product rules for the immaculate basis and their structure coefficients."""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from typing import Sequence

from . import combinat as cb
from . import nsym
from .combinat import DomainError
from .freemodule import Element, register_product
from .tableaux import descent_composition, enumerate_immaculate


def pieri_product(alpha: Sequence[int], s: int) -> Element:
    """``S_alpha H_s``: multiplicity free over ``alpha`` contained in ``beta``."""
    return Element("S", [(beta, 1) for beta in cb.pieri_extensions(alpha, s)])


def ribbon_immaculate_product(alpha: Sequence[int], beta: Sequence[int]) -> Element:
    """``S_alpha R_beta`` as a sum over standard tableaux with descent ``beta``."""
    beta = tuple(beta)
    if not beta:
        return Element.monomial("S", tuple(alpha))
    tally: Counter = Counter()
    for T in enumerate_immaculate(alpha, (1,) * sum(beta)):
        if descent_composition(T) == beta:
            tally[T.outer()] += 1
    return Element("S", tally)


def mn_product(alpha: Sequence[int], k: int) -> Element:
    """``S_alpha Psi_k``.

    The sign on the appended terms is ``(-1)^(len(beta) - 1)``, so the single
    part ``[alpha, k]`` enters positively.
    """
    if k < 1:
        raise DomainError(f"Psi_{k} is undefined")
    alpha = tuple(alpha)
    terms = [(alpha + beta, (-1) ** (len(beta) - 1)) for beta in cb.compositions_of(k)]
    for j in range(len(alpha)):
        terms.append((alpha[:j] + (alpha[j] + k,) + alpha[j + 1:], 1))
    return Element("S", terms)


def mn_positive(alpha: Sequence[int], k: int) -> list:
    """Generalized indices whose immaculate functions sum to ``S_alpha Psi_k``."""
    if k < 1:
        raise DomainError(f"Psi_{k} is undefined")
    alpha = tuple(alpha)
    out = [alpha[:j] + (alpha[j] + k,) + alpha[j + 1:] for j in range(len(alpha))]
    out += [alpha + (0,) * (j - 1) + (k,) for j in range(1, k + 1)]
    return out


def sum_normalized(indices) -> Element:
    out = Element.zero("S")
    for gamma in indices:
        out = out + nsym.normalize_immaculate(gamma)
    return out


def dual_mn(beta: Sequence[int], alpha: Sequence[int]) -> Element:
    """``M_beta^perp S_alpha``: subtract the parts of ``beta`` from ``alpha`` in
    order, at any increasing choice of positions, then normalize."""
    beta, alpha = tuple(beta), tuple(alpha)
    if not cb.is_proper(beta):
        raise DomainError(f"M index {beta} is not a proper composition")
    out = Element.zero("S")
    for gamma in dual_mn_indices(beta, alpha):
        out = out + nsym.normalize_immaculate(gamma)
    return out


def dual_mn_indices(beta: Sequence[int], alpha: Sequence[int]) -> list:
    beta, alpha = tuple(beta), tuple(alpha)
    out = []
    for positions in itertools.combinations(range(len(alpha)), len(beta)):
        gamma = list(alpha)
        for p, b in zip(positions, beta):
            gamma[p] -= b
        out.append(tuple(gamma))
    return out


# -- Littlewood-Richardson ---------------------------------------------------------


def lr_coefficient(alpha: Sequence[int], content: Sequence[int], beta: Sequence[int]) -> int:
    """Number of Yamanouchi immaculate tableaux of shape ``beta/alpha``."""
    alpha, content, beta = tuple(alpha), tuple(content), tuple(beta)
    if sum(beta) != sum(alpha) + sum(content):
        raise DomainError(
            f"size mismatch: |{beta}| != |{alpha}| + |{content}|"
        )
    if not cb.is_proper(beta):
        raise DomainError(f"outer shape {beta} is not a proper composition")
    return len(enumerate_immaculate(alpha, content, outer=beta, yamanouchi=True))


def lr_tally(alpha: Sequence[int], content: Sequence[int]) -> Counter:
    """``{beta: C}`` over every outer shape, from a single enumeration."""
    tally: Counter = Counter()
    for T in enumerate_immaculate(alpha, content, yamanouchi=True):
        tally[T.outer()] += 1
    return tally


def immaculate_lr_product(alpha: Sequence[int], lam: Sequence[int]) -> Element:
    """``S_alpha S_lam`` for a partition ``lam``, by counting Yamanouchi tableaux."""
    lam = tuple(lam)
    if not cb.is_partition(lam):
        raise DomainError(
            f"{lam} is not a partition; use general_imm_product for other right factors"
        )
    return Element("S", lr_tally(alpha, cb.strip_zeros(lam)))


def general_imm_product(alpha: Sequence[int], delta: Sequence[int]) -> Element:
    """``S_alpha S_delta`` for any right factor.

    ``S_delta`` is expanded as a signed sum of ``H`` words and each word is
    absorbed by repeated Pieri steps.
    """
    alpha, delta = tuple(alpha), tuple(delta)
    acc: Counter = Counter()
    for sgn, word in nsym._signed_h_words(delta):
        x = Element.monomial("S", alpha)
        for s in word:
            x = nsym._pieri_on(x, s)
        for key, c in x.items():
            acc[key] += sgn * c
    return Element("S", acc)


def shift_symmetry_check(alpha, lam, beta, nu) -> bool:
    """Compare ``C_{alpha,lam}^beta`` with ``C_{alpha+nu,lam}^{beta+nu}``."""
    alpha, nu = tuple(alpha), tuple(nu)
    if len(nu) > len(alpha):
        raise DomainError(f"shift {nu} longer than {alpha}")
    return lr_coefficient(alpha, lam, beta) == lr_coefficient(
        cb.add_vectors(alpha, nu), lam, cb.add_vectors(beta, nu)
    )


def _shifts(length: int, max_shift: int):
    """Nonzero compositions of length ``<= length`` with parts ``<= max_shift``,
    padded with zeros."""
    for k in range(1, length + 1):
        for parts in itertools.product(range(1, max_shift + 1), repeat=k):
            yield parts + (0,) * (length - k)


def conjecture_scan(bound: int, max_shift: int = 2) -> list:
    """Search for shapes where the shift identity fails for a composition
    right factor.  Returns a list of finding dicts (expected empty)."""
    findings = []
    for n in range(2, bound + 1):
        for a in range(1, n):
            for alpha in cb.compositions_of(a):
                for delta in cb.compositions_of(n - a):
                    base = general_imm_product(alpha, delta)
                    for nu in _shifts(len(alpha), max_shift):
                        findings.extend(_compare_shift(alpha, delta, nu, base))
    return findings


def _compare_shift(alpha, delta, nu, base: Element) -> list:
    shifted = general_imm_product(cb.add_vectors(alpha, nu), delta)
    out = []
    seen = set()
    for beta in list(base.keys()) + [_unshift(g, nu) for g in shifted.keys()]:
        if beta is None or beta in seen:
            continue
        seen.add(beta)
        lhs = base.coefficient(beta)
        rhs = shifted.coefficient(cb.add_vectors(beta, nu))
        if lhs != rhs:
            out.append(
                {
                    "alpha": list(alpha),
                    "delta": list(delta),
                    "nu": list(nu),
                    "beta": list(beta),
                    "lhs": lhs,
                    "rhs": rhs,
                }
            )
    return out


def _unshift(gamma: tuple, nu: tuple):
    if len(gamma) < len(nu):
        return None
    beta = tuple(g - v for g, v in zip(gamma, cb.pad(nu, len(gamma))))
    return beta if cb.is_proper(beta) else None


@lru_cache(maxsize=4096)
def _tally(alpha: tuple, content: tuple) -> dict:
    return dict(lr_tally(alpha, content))


def classical_lr_via_straightening(mu, lam, nu) -> int:
    """``sum_sigma sign(sigma) C_{mu,lam}^{nu * sigma}``.

    Since ``nu_j - j`` strictly decreases, ``beta = nu * sigma`` pins down
    ``sigma`` through ``beta_i - i = nu_sigma(i) - sigma(i)``, so the sum runs
    over the nonzero coefficients instead of all of ``S_m``.
    """
    mu, lam, nu = (cb.strip_zeros(x) for x in (mu, lam, nu))
    if sum(nu) != sum(mu) + sum(lam):
        raise DomainError("size mismatch in straightened LR sum")
    m = len(nu)
    position = {v - j: j for j, v in enumerate(nu, start=1)}
    total = 0
    for beta, c in _tally(mu, lam).items():
        if len(beta) != m:
            continue
        sigma = tuple(position.get(b - i) for i, b in enumerate(beta, start=1))
        if None in sigma or len(set(sigma)) != m:
            continue
        total += cb.sign(sigma) * c
    return total


def _imm_rule(a: tuple, b: tuple) -> Element:
    if cb.is_partition(b):
        return immaculate_lr_product(a, b)
    return general_imm_product(a, b)


def _imm_h_rule(a: tuple, b: tuple) -> Element:
    out = Element.monomial("S", a)
    for s in b:
        out = nsym._pieri_on(out, s)
    return out


def _imm_r_rule(a: tuple, b: tuple) -> Element:
    return ribbon_immaculate_product(a, b)


def _imm_psi_rule(a: tuple, b: tuple) -> Element:
    x = Element.monomial("S", a)
    for k in b:
        x = x.map_keys(lambda key, k=k: mn_product(key, k), "S")
    return x


register_product("S", "S", _imm_rule)
register_product("S", "H", _imm_h_rule)
register_product("S", "R", _imm_r_rule)
register_product("S", "Psi", _imm_psi_rule)
