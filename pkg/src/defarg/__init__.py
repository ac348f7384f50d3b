"""Reiter default logic decided inside classical propositional logic.

A finite default theory is translated into a propositional argumentation
system; extensions, default terms and credulous/skeptical consequences are
then computed with satisfiability checks and minimal contradictions only.

>>> from defarg import parse_theory, translate, classify
>>> system = translate(parse_theory("default d1 = true : p / !p."))
>>> str(classify(system))
'no-extension'
"""

from .argumentation import (
    ArgumentationSystem,
    CJPair,
    SINK,
    TOP_PAIR,
    apply_default,
    is_applicable,
    is_inconsistent_term,
    is_safe_term,
    is_structure,
    make_term,
    minimal_contradictions,
    supporting_arguments,
)
from .errors import DefargError, ParseError, ReservedNameError
from .formula import Formula, parse_formula, to_text
from .logic import Lit, entails, forget, is_satisfiable, to_cnf
from .oracle import is_extension, oracle_extensions
from .reasoner import (
    Classification,
    DefaultTerm,
    ExtensionHandle,
    classify,
    credulous,
    default_terms,
    extension_of,
    extensions,
    in_extension,
    skeptical,
)
from .theory import Default, DefaultTheory, format_theory, parse_theory, select, variables
from .transform import AssumptionRegistry, DefaultAssumption, assumption_of, translate

__version__ = "0.1.0"
