"""ontoforge: OWL ontology documents to Event-B context specifications.

Pipeline: :mod:`ontoforge.owl_ingest` parses the supported OWL subset,
:mod:`ontoforge.pivot_model` normalizes it into a language-neutral IR, and
:mod:`ontoforge.shallow_codegen` / :mod:`ontoforge.deep_codegen` emit the two
context encodings over the AST in :mod:`ontoforge.eventb_ast`.
:mod:`ontoforge.finite_checker` evaluates the generated axioms and theorems
over finite interpretations; :mod:`ontoforge.cli` drives it all in batch.
"""

from .deep_codegen import emit_deep, emit_deep_generic, emit_deep_specific
from .diagnostics import Diagnostic, Location, Severity
from .eventb_ast import EventBContext, check_context, print_context
from .finite_checker import (
    DEFAULT_MAX_DOMAIN,
    CheckReport,
    DerivedInterpretation,
    EvalResult,
    FiniteInterpretation,
    check_context_against,
    derive_interpretation,
    eval_predicate,
)
from .owl_ingest import ClassDecl, OwlDocument, parse_owl
from .pivot_model import PivotOntology, UnionDef, sanitize_identifier, to_pivot, validate_pivot
from .shallow_codegen import emit_shallow

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "ClassDecl",
    "DEFAULT_MAX_DOMAIN",
    "DerivedInterpretation",
    "Diagnostic",
    "EvalResult",
    "EventBContext",
    "FiniteInterpretation",
    "Location",
    "OwlDocument",
    "PivotOntology",
    "Severity",
    "UnionDef",
    "check_context",
    "check_context_against",
    "derive_interpretation",
    "emit_deep",
    "emit_deep_generic",
    "emit_deep_specific",
    "emit_shallow",
    "eval_predicate",
    "parse_owl",
    "print_context",
    "sanitize_identifier",
    "to_pivot",
    "validate_pivot",
]
