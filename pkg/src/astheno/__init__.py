"""Exact symbolic wedge calculus on a product of two almost-contact metric
factors, with classification of astheno-Kahler, strong-KT and Gauduchon
vanishing conditions and a self-audit against the bundled reference tables.
"""

from .algebra import ETA1, ETA2, PHI1, PHI2, Form, Monomial, ProductGeometry
from .calculus import (
    Condition,
    Convention,
    InternalInconsistencyError,
    astheno_expansion,
    condition_tensor,
    d_c,
    exterior_d,
    j_action,
    kahler_form,
    wedge_identity_check,
)
from .classify import (
    ClassificationReport,
    FactorStructure,
    ScanReport,
    StructurePair,
    TableReport,
    analyze_residual,
    classify,
    pure_pair,
    reproduce_table,
    scan,
)
from .exprio import ParseError, RecordError, from_record, parse, print_latex, print_text, to_record
from .scalars import PARAMS, Scalar
from .audit import AuditReport, run_audit

__version__ = "0.1.0"

__all__ = [
    "ETA1", "ETA2", "PHI1", "PHI2",
    "Form", "Monomial", "ProductGeometry",
    "Condition", "Convention", "InternalInconsistencyError",
    "astheno_expansion", "condition_tensor", "d_c", "exterior_d",
    "j_action", "kahler_form", "wedge_identity_check",
    "ClassificationReport", "FactorStructure", "ScanReport", "StructurePair",
    "TableReport", "analyze_residual", "classify", "pure_pair",
    "reproduce_table", "scan",
    "ParseError", "RecordError", "from_record", "parse",
    "print_latex", "print_text", "to_record",
    "PARAMS", "Scalar",
    "AuditReport", "run_audit",
    "__version__",
]
