"""Sturmian palindromes, Rauzy induction and substitutions over exact quadratic irrationals."""

from .errors import DomainError, InternalCheckError
from .exactnum import CFExpansion, QuadIrr, cf_expand, format_number, parse_number
from .induction import (
    InductionResult,
    PalState,
    Step,
    pal_step,
    regrow_palindrome,
    run_palindromic_induction,
    run_rauzy_induction,
)
from .subst import (
    E,
    G,
    G_TILDE,
    PHI_FIB,
    Substitution,
    alpha_from_substitution,
    compose,
    expand_one_sided,
    expand_two_sided,
    incidence,
    parse_rules,
)
from .verify import PrecisionBudget, check_fixed_window, numeric_oracle_window
from .words import (
    FiniteWord,
    RotationSystem,
    SymmetryType,
    balance_check,
    check_palindrome,
    code_window,
    factor_complexity,
    palindrome_systems,
)

__version__ = "0.1.0"
