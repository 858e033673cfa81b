"""Semistable reduction data of superelliptic curves y^n = f(x) over Q_p."""

from .clusters import Cluster, ClusterPicture, CurveInput, build_cluster_picture, content_valuation, to_latex, wedge
from .errors import ConsistencyError, PreconditionError, SupergalError
from .fiber import ComponentFamily, component_genus, reduce_all, reduce_component
from .graph import DualGraph, H1Action, betti, build_dual_graph, h1_frobenius, rank_formula, to_dot
from .report import GaloisReport, TwistCharacter, assemble_report, curve_genus, dnew_genera, inertia_characters
from .triples import cross_check, enumerate_classes

__version__ = "0.1.0"

__all__ = [
    "Cluster", "ClusterPicture", "CurveInput", "build_cluster_picture", "content_valuation", "to_latex", "wedge",
    "ConsistencyError", "PreconditionError", "SupergalError",
    "ComponentFamily", "component_genus", "reduce_all", "reduce_component",
    "DualGraph", "H1Action", "betti", "build_dual_graph", "h1_frobenius", "rank_formula", "to_dot",
    "GaloisReport", "TwistCharacter", "assemble_report", "curve_genus", "dnew_genera", "inertia_characters",
    "cross_check", "enumerate_classes",
]
