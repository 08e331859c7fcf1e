"""Exact arithmetic, traces and pillar diagrams for Temperley-Lieb algebras of type E_n."""

from .algebra import ScaledMonomial, a_value, p_classes, product
from .coxeter import (
    CoxeterGraph, FCElement, NotFullyCommutative, NotReduced, WordError,
    build_graph, enumerate_fc, inverse, normalize,
)
from .diagrams import PillarDiagram, ScaledDiagram, compose, rho, simplify, tau_bullet
from .kl import KLOracle, OracleLimits
from .laurent import DELTA, LaurentPolynomial
from .traces import gram_exponent, mu_tilde, tr, tr_exponent

__version__ = "0.1.0"

__all__ = [
    "CoxeterGraph", "FCElement", "NotFullyCommutative", "NotReduced", "WordError",
    "build_graph", "enumerate_fc", "inverse", "normalize",
    "ScaledMonomial", "a_value", "p_classes", "product",
    "PillarDiagram", "ScaledDiagram", "compose", "rho", "simplify", "tau_bullet",
    "KLOracle", "OracleLimits", "DELTA", "LaurentPolynomial",
    "gram_exponent", "mu_tilde", "tr", "tr_exponent",
]
