"""Exact computations with non-commutative symmetric functions and the
immaculate basis.

Importing the package registers the product rules for every basis pair
(``H*H``, ``R*R``, ``Psi*Psi``, ``S*S``, ``S*H``, ``S*R``, ``S*Psi`` and the
classical ``h*h``, ``p*p``, ``s*s``).
"""

from . import combinat, freemodule, nsym, rules, symfunc, tableaux  # noqa: F401
from . import involution, polytope  # noqa: F401
from .combinat import DomainError
from .freemodule import Element, parse, parse_in, render
from .nsym import H, Psi, R, S, chi, normalize_immaculate, to_basis
from .rules import (
    general_imm_product,
    immaculate_lr_product,
    lr_coefficient,
    mn_product,
    pieri_product,
    ribbon_immaculate_product,
)
from .tableaux import ImmaculateTableau, YTableau

__all__ = [
    "DomainError",
    "Element",
    "H",
    "ImmaculateTableau",
    "Psi",
    "R",
    "S",
    "YTableau",
    "chi",
    "general_imm_product",
    "immaculate_lr_product",
    "lr_coefficient",
    "mn_product",
    "normalize_immaculate",
    "parse",
    "parse_in",
    "pieri_product",
    "render",
    "ribbon_immaculate_product",
    "to_basis",
]

__version__ = "0.1.0"
