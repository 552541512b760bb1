"""Non-commutative symmetric functions: the H, R, Psi and immaculate bases.

Everything is funnelled through the complete homogeneous basis H, where the
product is concatenation of indices.  The immaculate basis is written ``S``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import combinat as cb
from .combinat import DomainError
from .freemodule import Element, register_product

UNIT = ()


def H(*parts) -> Element:
    return Element.monomial("H", _key(parts))


def R(*parts) -> Element:
    return Element.monomial("R", _key(parts))


def Psi(*parts) -> Element:
    return Element.monomial("Psi", _key(parts))


def S(*parts) -> Element:
    return Element.monomial("S", _key(parts))


def _key(parts) -> tuple:
    if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
        parts = parts[0]
    key = tuple(int(p) for p in parts)
    if not cb.is_proper(key):
        raise DomainError(f"basis index {key} is not a proper composition")
    return key


# -- H basis ------------------------------------------------------------------


def h_product(alpha: Sequence[int], beta: Sequence[int]) -> Element:
    return Element.monomial("H", cb.concat(alpha, beta))


def _h_rule(a: tuple, b: tuple) -> Element:
    return Element.monomial("H", a + b)


def h_word(values: Sequence[int]) -> Element:
    """``H_{v_1} ... H_{v_m}`` with ``H_0 = 1`` and ``H_{<0} = 0``."""
    if any(v < 0 for v in values):
        return Element.zero("H")
    return Element.monomial("H", cb.strip_zeros(values))


# -- ribbons --------------------------------------------------------------------


@lru_cache(maxsize=None)
def ribbon_to_h(alpha: tuple) -> Element:
    alpha = tuple(alpha)
    if not alpha:
        return Element.monomial("H", ())
    return Element(
        "H",
        [(beta, (-1) ** (len(alpha) - len(beta))) for beta in cb.coarsenings(alpha)],
    )


@lru_cache(maxsize=None)
def h_to_ribbon(alpha: tuple) -> Element:
    alpha = tuple(alpha)
    if not alpha:
        return Element.monomial("R", ())
    return Element("R", [(beta, 1) for beta in cb.coarsenings(alpha)])


def ribbon_product(alpha: Sequence[int], beta: Sequence[int]) -> Element:
    """``R_alpha R_beta = R_[alpha,beta] + R_(alpha ^ beta)``."""
    alpha, beta = tuple(alpha), tuple(beta)
    if not alpha:
        return Element.monomial("R", beta)
    if not beta:
        return Element.monomial("R", alpha)
    return Element("R", [(cb.concat(alpha, beta), 1), (cb.wedge(alpha, beta), 1)])


# -- power sums -----------------------------------------------------------------


@lru_cache(maxsize=None)
def psi_to_ribbon(k: int) -> Element:
    """``Psi_k`` as an alternating sum of hook ribbons."""
    if k <= 0:
        raise DomainError(f"Psi_{k} is undefined")
    return Element("R", [((1,) * i + (k - i,), (-1) ** i) for i in range(k)])


@lru_cache(maxsize=None)
def psi_element(alpha: tuple) -> Element:
    """``Psi_alpha = Psi_alpha1 ... Psi_alpham`` in the ribbon basis."""
    out = Element.monomial("R", ())
    for k in alpha:
        out = out * psi_to_ribbon(k)
    return out


@lru_cache(maxsize=None)
def _psi_to_h(alpha: tuple) -> Element:
    return to_h(psi_element(alpha))


def h_to_psi(x: Element) -> Element:
    """Express an H-basis element in the Psi basis.

    ``Psi_alpha = (prod alpha_i) H_alpha + (finer terms)``, so elimination from
    the coarsest key works; the division must be exact since coefficients are
    integers, otherwise :class:`DomainError` is raised.
    """
    _require(x, "H")
    remaining = dict(x.items())
    out: dict[tuple, int] = {}
    while remaining:
        key = min(remaining, key=lambda k: (len(k), k))
        lead = 1
        for p in key:
            lead *= p
        c, rem = divmod(remaining[key], lead)
        if rem:
            raise DomainError(
                f"H-element has a non-integral Psi expansion (coefficient "
                f"{remaining[key]}/{lead} at Psi{list(key)})"
            )
        out[key] = c
        for k, v in _psi_to_h(key).items():
            remaining[k] = remaining.get(k, 0) - c * v
            if not remaining[k]:
                del remaining[k]
    return Element("Psi", out)


# -- immaculate basis -------------------------------------------------------------


def _signed_h_words(alpha: Sequence[int]):
    """Yield ``(sign, alpha + sigma - Id)`` for the permutations contributing to
    the Jacobi-Trudi-like sum, pruning negative entries early."""
    alpha = tuple(alpha)
    m = len(alpha)

    def walk(i, used, word, parity):
        if i == m:
            yield (-1 if parity else 1), tuple(word)
            return
        for s in range(1, m + 1):
            if used & (1 << s):
                continue
            v = alpha[i] + s - (i + 1)
            if v < 0:
                continue
            # inversions contributed by placing s after the already used values
            inv = sum(1 for t in range(s + 1, m + 1) if used & (1 << t))
            word.append(v)
            yield from walk(i + 1, used | (1 << s), word, parity ^ (inv & 1))
            word.pop()

    yield from walk(0, 0, [], 0)


@lru_cache(maxsize=None)
def immaculate_to_h(alpha: tuple) -> Element:
    """H-expansion of the immaculate function indexed by any integer sequence."""
    acc: dict[tuple, int] = {}
    for sgn, word in _signed_h_words(alpha):
        key = cb.strip_zeros(word)
        acc[key] = acc.get(key, 0) + sgn
    return Element("H", acc)


def _pieri_on(x: Element, s: int) -> Element:
    if s == 0:
        return x
    acc: dict[tuple, int] = {}
    for key, c in x.items():
        for beta in cb.pieri_extensions(key, s):
            acc[beta] = acc.get(beta, 0) + c
    return Element("S", acc)


@lru_cache(maxsize=None)
def h_to_immaculate(alpha: tuple) -> Element:
    """``H_alpha`` in the immaculate basis, by right-Pieri from the unit."""
    alpha = tuple(alpha)
    if not alpha:
        return Element.monomial("S", ())
    return _pieri_on(h_to_immaculate(alpha[:-1]), alpha[-1])


def normalize_immaculate(alpha: Sequence[int]) -> Element:
    """Immaculate function of a generalized index, in the proper basis."""
    alpha = tuple(alpha)
    if cb.is_proper(alpha):
        return Element.monomial("S", alpha)
    return from_h(immaculate_to_h(alpha), "S")


# -- basis changes ------------------------------------------------------------------


def to_h(x: Element) -> Element:
    if x.tag == "H":
        return x
    if x.tag == "R":
        return x.map_keys(ribbon_to_h, "H")
    if x.tag == "S":
        return x.map_keys(immaculate_to_h, "H")
    if x.tag == "Psi":
        return x.map_keys(_psi_to_h, "H")
    raise DomainError(f"{x.tag} is not an NSym basis")


def from_h(x: Element, tag: str) -> Element:
    _require(x, "H")
    if tag == "H":
        return x
    if tag == "R":
        return x.map_keys(h_to_ribbon, "R")
    if tag == "S":
        return x.map_keys(h_to_immaculate, "S")
    if tag == "Psi":
        return h_to_psi(x)
    raise DomainError(f"{tag} is not an NSym basis")


def to_basis(x: Element, tag: str) -> Element:
    if x.tag == tag:
        return x
    return from_h(to_h(x), tag)


def _require(x: Element, tag: str) -> None:
    if x.tag != tag:
        raise DomainError(f"expected an element in basis {tag}, got {x.tag}")


# -- Hopf structure ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def coproduct_h(alpha: tuple) -> dict:
    """``Delta(H_alpha)`` as ``{(left_key, right_key): coeff}``."""
    terms: dict[tuple, int] = {((), ()): 1}
    for r in alpha:
        nxt: dict[tuple, int] = {}
        for (left, right), c in terms.items():
            for i in range(r + 1):
                pair = (left + ((i,) if i else ()), right + ((r - i,) if r - i else ()))
                nxt[pair] = nxt.get(pair, 0) + c
        terms = nxt
    return terms


def pairing_h_m(x: Element, beta: Sequence[int]) -> int:
    """``<x, M_beta>`` for ``x`` in the H basis (the H and M bases are dual)."""
    _require(x, "H")
    return x.coefficient(tuple(beta))


def perp_monomial(beta: Sequence[int], x: Element) -> Element:
    """Adjoint of multiplication by ``M_beta`` acting on an H-basis element.

    Uses ``<F, M_beta G> = <Delta F, M_beta (x) G>``: pair the left tensor
    factor of the coproduct with ``M_beta`` and keep the right factor.
    """
    beta = tuple(beta)
    if not cb.is_proper(beta):
        raise DomainError(f"M index {beta} is not a proper composition")
    _require(x, "H")
    acc: dict[tuple, int] = {}
    for alpha, c in x.items():
        for (left, right), d in coproduct_h(alpha).items():
            if left == beta:
                acc[right] = acc.get(right, 0) + c * d
    return Element("H", acc)


def creation_B(m: int, x: Element) -> Element:
    """``B_m(x) = sum_i (-1)^i H_{m+i} M_{1^i}^perp(x)``, result in H."""
    x = to_h(x)
    out = Element.zero("H")
    for i in range(x.max_degree() + 1):
        if m + i < 0:
            continue
        perp = perp_monomial((1,) * i, x) if i else x
        if not perp:
            continue
        left = h_word((m + i,))
        out = out + ((-1) ** i) * (left * perp)
    return out


def creation_word(alpha: Sequence[int]) -> Element:
    """``B_alpha1 ... B_alpham (1)`` in the H basis."""
    x = Element.monomial("H", ())
    for a in reversed(tuple(alpha)):
        x = creation_B(a, x)
    return x


# -- projection to Sym --------------------------------------------------------------------


def chi(x: Element) -> Element:
    """Commutative image, in the h basis."""
    x = to_h(x)
    return Element("h", [(cb.sort_to_partition(k), c) for k, c in x.items()])


# -- products ------------------------------------------------------------------------------


def _ribbon_rule(a: tuple, b: tuple) -> Element:
    return ribbon_product(a, b)


def _psi_rule(a: tuple, b: tuple) -> Element:
    return Element.monomial("Psi", a + b)


register_product("H", "H", _h_rule)
register_product("R", "R", _ribbon_rule)
register_product("Psi", "Psi", _psi_rule)
