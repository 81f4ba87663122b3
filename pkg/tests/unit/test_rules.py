"""Unit tests for rule tables, validate_rule() and the rule-table text format."""

import pytest

from src.automata.rules import (
    BORDER,
    DISTINGUISHED,
    FIRE,
    GENERAL,
    QUIESCENT,
    RuleTable,
    dump_rule_file,
    parse_rule_text,
    read_rule_file,
    validate_rule,
)
from src.automata.solvers import make_optimal_solver
from src.errors import AlphabetMismatchError, RuleFileError


class TestRuleTable:
    """Tests for rule lookups."""

    def test_explicit_transition_wins(self):
        """An explicit transition is used before the function."""
        table = RuleTable(
            alphabet=DISTINGUISHED,
            transitions={(BORDER, GENERAL, BORDER): FIRE},
            function=lambda left, center, right: QUIESCENT,
        )
        assert table(BORDER, GENERAL, BORDER) == FIRE
        assert table(BORDER, GENERAL, QUIESCENT) == QUIESCENT

    def test_identity_fallback(self):
        """Without transition or function the centre symbol is kept."""
        table = RuleTable(alphabet=DISTINGUISHED)
        assert table(QUIESCENT, GENERAL, QUIESCENT) == GENERAL

    def test_unknown_symbol_rejected(self):
        """A symbol outside the alphabet raises AlphabetMismatchError."""
        table = RuleTable(alphabet=DISTINGUISHED)
        with pytest.raises(AlphabetMismatchError):
            table("X", QUIESCENT, QUIESCENT)

    def test_tabulate_matches_function(self):
        """Tabulating stores every triple with the function's value."""
        table = RuleTable(alphabet=DISTINGUISHED, function=lambda left, center, right: center)
        tabulated = table.tabulate()
        assert len(tabulated.transitions) == len(DISTINGUISHED) ** 3
        assert tabulated(GENERAL, QUIESCENT, BORDER) == QUIESCENT


class TestValidateRule:
    """Tests for the structural FSSP constraints."""

    def test_optimal_solver_is_valid(self):
        """The built-in counting solver has no violations."""
        assert validate_rule(make_optimal_solver(max_length=8)) == []

    def test_quiescence_violation(self):
        """f(_,_,_) = G is reported once, naming quiescence."""
        table = RuleTable(alphabet=DISTINGUISHED, transitions={(QUIESCENT, QUIESCENT, QUIESCENT): GENERAL})
        violations = validate_rule(table)
        assert len(violations) == 1
        assert "quiescence" in violations[0]

    def test_border_fixity_violation(self):
        """A rule that changes # is reported as a border fixity violation."""
        table = RuleTable(alphabet=DISTINGUISHED, transitions={(QUIESCENT, BORDER, QUIESCENT): GENERAL})
        violations = validate_rule(table)
        assert len(violations) == 1
        assert "border fixity" in violations[0]

    def test_missing_distinguished_state(self):
        """An alphabet without F cannot be a firing squad rule."""
        table = RuleTable(alphabet=(BORDER, GENERAL, QUIESCENT))
        violations = validate_rule(table)
        assert "missing distinguished states" in violations[0]


class TestRuleText:
    """Tests for parsing and writing rule-table files."""

    def test_parse_headers_and_comments(self):
        """Name, alphabet, comments and transitions are read."""
        table = parse_rule_text("name: tiny\nalphabet: # G _ F\n// comment\n\n# G # -> F\n")
        assert table.name == "tiny"
        assert table.alphabet == (BORDER, GENERAL, QUIESCENT, FIRE)
        assert table(BORDER, GENERAL, BORDER) == FIRE

    def test_transition_before_header_rejected(self):
        """Transitions need the alphabet first."""
        with pytest.raises(RuleFileError) as excinfo:
            parse_rule_text("# G # -> F\nalphabet: # G _ F\n")
        assert excinfo.value.field == "alphabet"

    def test_malformed_line_rejected(self):
        """A line without an arrow is an error naming the transitions."""
        with pytest.raises(RuleFileError) as excinfo:
            parse_rule_text("alphabet: # G _ F\n# G # F\n")
        assert excinfo.value.field == "transitions"

    def test_unknown_symbol_in_transition_rejected(self):
        """Symbols must come from the declared alphabet."""
        with pytest.raises(RuleFileError):
            parse_rule_text("alphabet: # G _ F\n# G X -> F\n")

    def test_missing_file(self, tmp_path):
        """Reading a missing file raises RuleFileError."""
        with pytest.raises(RuleFileError):
            read_rule_file(tmp_path / "absent.rules")

    def test_invalid_rule_file_rejected(self, tmp_path):
        """Files that break the constraints are refused on load."""
        path = tmp_path / "bad.rules"
        path.write_text("alphabet: # G _ F\n_ _ _ -> G\n")
        with pytest.raises(RuleFileError) as excinfo:
            read_rule_file(path)
        assert "quiescence" in str(excinfo.value)

    def test_dump_skips_identity_transitions(self, tmp_path):
        """Only transitions that change the centre are written, and they load back."""
        table = RuleTable(alphabet=DISTINGUISHED, transitions={(BORDER, GENERAL, BORDER): FIRE}, name="one")
        path = dump_rule_file(table, tmp_path / "one.rules")
        lines = path.read_text().splitlines()
        assert lines == ["name: one", "alphabet: # G _ F", "# G # -> F"]
        assert read_rule_file(path)(BORDER, GENERAL, BORDER) == FIRE
