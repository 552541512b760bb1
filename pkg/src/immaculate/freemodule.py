"""Sparse integer linear combinations of basis elements indexed by tuples.

An :class:`Element` carries one basis tag (``H``, ``R``, ``Psi``, ``S`` for
NSym; ``h``, ``p``, ``s`` for symmetric functions) and a mapping from keys
to nonzero ints.  Elements are immutable.
"""

from __future__ import annotations

import json
import re
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from .combinat import DomainError

NSYM_TAGS = ("H", "R", "Psi", "S")
SYM_TAGS = ("h", "p", "s")
TAGS = NSYM_TAGS + SYM_TAGS


def family(tag: str) -> str:
    if tag in NSYM_TAGS:
        return "nsym"
    if tag in SYM_TAGS:
        return "sym"
    raise DomainError(f"unknown basis tag {tag!r}")


def sort_key(key: tuple) -> tuple:
    """Graded lex: by size, then lexicographically."""
    return (sum(key), key)


class Element:
    __slots__ = ("_tag", "_terms", "_hash")

    def __init__(self, tag: str, terms: Mapping | Iterable = ()):
        family(tag)
        acc: dict[tuple, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            if not isinstance(coeff, int):
                raise DomainError(f"coefficient {coeff!r} is not an integer")
            if coeff:
                key = tuple(key)
                acc[key] = acc.get(key, 0) + coeff
        self._tag = tag
        self._terms = {k: acc[k] for k in sorted(acc, key=sort_key) if acc[k]}
        self._hash = None

    @classmethod
    def monomial(cls, tag: str, key, coeff: int = 1) -> "Element":
        return cls(tag, [(tuple(key), coeff)])

    @classmethod
    def zero(cls, tag: str) -> "Element":
        return cls(tag)

    @property
    def tag(self) -> str:
        return self._tag

    @property
    def terms(self) -> Mapping[tuple, int]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key) -> int:
        return self._terms.get(tuple(key), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self):
        """Common size of all keys, ``"mixed"`` otherwise, ``None`` for zero."""
        sizes = {sum(k) for k in self._terms}
        if not sizes:
            return None
        if len(sizes) == 1:
            return sizes.pop()
        return "mixed"

    def max_degree(self) -> int:
        return max((sum(k) for k in self._terms), default=0)

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"cannot combine Element with {type(other).__name__}")
        if other._tag != self._tag:
            raise DomainError(f"basis mismatch: {self._tag} vs {other._tag}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return Element(self._tag, acc)

    __radd__ = __add__

    def __neg__(self):
        return Element(self._tag, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return self + (-other)

    def scale(self, c: int) -> "Element":
        if not isinstance(c, int):
            raise DomainError(f"scalar {c!r} is not an integer")
        return Element(self._tag, {k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, int):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, Element):
            return multiply(self, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, Element):
            return NotImplemented
        return self._tag == other._tag and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._tag, tuple(self._terms.items())))
        return self._hash

    def map_keys(self, fn: Callable[[tuple], "Element"], tag: str) -> "Element":
        """Linear extension of ``fn`` from keys to elements of basis ``tag``."""
        acc: dict[tuple, int] = {}
        for k, c in self._terms.items():
            image = fn(k)
            if image.tag != tag:
                raise DomainError(f"map produced {image.tag}, expected {tag}")
            for k2, c2 in image.items():
                acc[k2] = acc.get(k2, 0) + c * c2
        return Element(tag, acc)

    def render(self) -> str:
        return render(self)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Element({render(self)!r})"

    def to_json(self) -> dict:
        return {
            "tag": self._tag,
            "terms": [{"key": list(k), "coeff": c} for k, c in self._terms.items()],
        }


def render(x: Element) -> str:
    """``S[2,2,1,1] + S[2,2,2] - 2*S[3,1,1,1]``; zero renders as ``0``."""
    if not x:
        return "0"
    out = []
    for i, (key, c) in enumerate(x.items()):
        term = f"{x.tag}[{','.join(str(p) for p in key)}]"
        mag = abs(c)
        body = term if mag == 1 else f"{mag}*{term}"
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?(Psi|[HRSMhps])\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]\s*"
)


def parse(text: str) -> Element:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "0":
        raise DomainError("cannot infer the basis of a bare 0; use parse_in(tag, text)")
    pos, terms, tag = 0, [], None
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise DomainError(f"cannot parse element at position {pos}: {text[pos:]!r}")
        sgn, mag, t, body = m.groups()
        if terms and sgn is None:
            raise DomainError(f"missing operator at position {pos}")
        if tag is None:
            tag = t
        elif tag != t:
            raise DomainError(f"mixed bases {tag} and {t} in one element")
        key = tuple(int(v) for v in body.split(",")) if body else ()
        coeff = int(mag) if mag else 1
        terms.append((key, -coeff if sgn == "-" else coeff))
        pos = m.end()
    if tag is None:
        raise DomainError("empty element")
    return Element(tag, terms)


def parse_in(tag: str, text: str) -> Element:
    if text.strip() == "0":
        return Element.zero(tag)
    x = parse(text)
    if x.tag != tag:
        raise DomainError(f"expected basis {tag}, got {x.tag}")
    return x


def from_json(data) -> Element:
    if isinstance(data, str):
        data = json.loads(data)
    return Element(data["tag"], [(tuple(t["key"]), int(t["coeff"])) for t in data["terms"]])


# -- products -----------------------------------------------------------------

ProductRule = Callable[[tuple, tuple], Element]
_PRODUCT_RULES: dict[tuple[str, str], ProductRule] = {}


def register_product(left: str, right: str, rule: ProductRule) -> None:
    _PRODUCT_RULES[(left, right)] = rule


def product_rule(left: str, right: str) -> ProductRule | None:
    return _PRODUCT_RULES.get((left, right))


def multiply(x: Element, y: Element, rule: ProductRule | None = None) -> Element:
    """Bilinear extension of a product rule on basis keys."""
    if rule is None:
        rule = _PRODUCT_RULES.get((x.tag, y.tag))
        if rule is None:
            raise DomainError(f"no product rule registered for {x.tag} * {y.tag}")
    acc: dict[tuple, int] = {}
    tag = None
    for kx, cx in x.items():
        for ky, cy in y.items():
            image = rule(kx, ky)
            if tag is None:
                tag = image.tag
            for k, c in image.items():
                acc[k] = acc.get(k, 0) + cx * cy * c
    if tag is None:
        # an empty operand: the rule on the units tells us the target basis
        tag = rule((), ()).tag
    return Element(tag, acc)
