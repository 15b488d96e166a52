"""Exact Coxeter groupoids and Iwahori-Hecke type algebras for the Lie
superalgebra families A(m,n), B(m,n), C(n), D(m,n)."""

from .domains import CDDomain, Family, act, enumerate_domains, tau_minus, tau_plus
from .groupoid import ZERO, CoxeterGroupoid, Element, Word, dimension_formula, groupoid_for
from .hecke import HeckeAlgebra, HeckeElement, hecke_eval, hecke_poly
from .roots import RootSystem, root_system
from .scalars import BigRational, LaurentPoly, RationalFunction, eval_at
from .weylgroups import WeylType, is_semisimple, poincare
from .weylreps import Irrep, irreps, split_regular_module, split_regular_weyl

__all__ = [
    "BigRational",
    "CDDomain",
    "CoxeterGroupoid",
    "Element",
    "Family",
    "HeckeAlgebra",
    "HeckeElement",
    "Irrep",
    "LaurentPoly",
    "RationalFunction",
    "RootSystem",
    "WeylType",
    "Word",
    "ZERO",
    "act",
    "dimension_formula",
    "enumerate_domains",
    "eval_at",
    "groupoid_for",
    "hecke_eval",
    "hecke_poly",
    "irreps",
    "is_semisimple",
    "poincare",
    "root_system",
    "split_regular_module",
    "split_regular_weyl",
    "tau_minus",
    "tau_plus",
]

__version__ = "0.1.0"
