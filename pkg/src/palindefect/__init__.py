"""Palindromic defect, factor/palindromic complexity and the T series of
finite words and of prefixes of generated infinite words."""

__version__ = "0.1.0"

from .factors import FactorIndex, Oddity, build_factor_index, canonical
from .graph import (IndeterminateGraphError, SimplePath, SimplePathGraph, ZeroTest,
                    build_graph, enumerate_simple_paths, graph_zero_test)
from .palindex import PalIndex, build_pal_index, defect
from .verify import (AuditCaps, ConjectureReport, EquivalenceAudit, NoSquareError,
                     ReductionResult, TSeries, conjecture_report, equivalence_audit,
                     periodic_defect, periodic_reduction, periodic_t_values, t_series,
                     two_palindrome_decomposition)
from .words import (Alphabet, ExplicitWord, Morphism, MorphismFixedPoint, PeriodicWord,
                    RecurrenceWord, WordSource, builtin_source, generate_prefix,
                    is_palindrome, reverse, source_from_config)
from .estimators import ComplexityTransformer, ConjectureVerifier, DefectTransformer, PeriodicReducer

__all__ = [name for name in dir() if not name.startswith("_")]
