"""Curvature positivity of invariant metrics on flag manifolds."""

from .rootsys import LieType, RootSystem, build_root_system
from .chevalley import ChevalleyTable, SignedSqrt, build_chevalley
from .flagspace import (
    FlagManifold,
    SolutionCone,
    almost_kahler_metrics,
    build_flag,
    kahler_metrics,
    parse_acs,
    parse_flag,
    parse_metric,
    quasi_kahler_metrics,
)
from .curvature import CurvatureEngine
from .positivity import (
    CpnMatrix,
    LemmaCertificate,
    PositivityVerdict,
    Verdict,
    acs_without_certificate,
    certificate_free_acs,
    classify,
    dual_nakano_matrix,
    griffiths_form,
    lemma_certificate,
    nakano_matrix,
)
from .campaigns import CAMPAIGNS, BoundExceeded, run_campaign, write_report

__version__ = "0.1.0"

__all__ = [
    "LieType",
    "RootSystem",
    "build_root_system",
    "ChevalleyTable",
    "SignedSqrt",
    "build_chevalley",
    "FlagManifold",
    "SolutionCone",
    "build_flag",
    "parse_flag",
    "parse_acs",
    "parse_metric",
    "kahler_metrics",
    "quasi_kahler_metrics",
    "almost_kahler_metrics",
    "CurvatureEngine",
    "Verdict",
    "PositivityVerdict",
    "LemmaCertificate",
    "classify",
    "lemma_certificate",
    "acs_without_certificate",
    "certificate_free_acs",
    "nakano_matrix",
    "dual_nakano_matrix",
    "griffiths_form",
    "CpnMatrix",
    "CAMPAIGNS",
    "BoundExceeded",
    "run_campaign",
    "write_report",
]
