"""Standard cellular automata: rule tables, the synchronous kernel and baseline solvers."""

from .rules import (
    BORDER,
    FIRE,
    GENERAL,
    QUIESCENT,
    RuleTable,
    dump_rule_file,
    parse_rule_text,
    read_rule_file,
    validate_rule,
)
from .line import FireReport, LineConfig, apply_rule, cone_advance, make_instance, run_until_fire
from .solvers import SOLVERS, BaselineSolver, get_solver, make_halving_solver, make_optimal_solver

__all__ = [
    "BORDER",
    "FIRE",
    "GENERAL",
    "QUIESCENT",
    "RuleTable",
    "dump_rule_file",
    "parse_rule_text",
    "read_rule_file",
    "validate_rule",
    "FireReport",
    "LineConfig",
    "apply_rule",
    "cone_advance",
    "make_instance",
    "run_until_fire",
    "SOLVERS",
    "BaselineSolver",
    "get_solver",
    "make_halving_solver",
    "make_optimal_solver",
]
