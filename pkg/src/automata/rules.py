"""Symbols, rule tables and the rule-table text format."""

from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Callable, Optional, Union

from loguru import logger

from ..errors import AlphabetMismatchError, RuleFileError

# Distinguished states
BORDER = "#"
GENERAL = "G"
QUIESCENT = "_"
FIRE = "F"

DISTINGUISHED = (BORDER, GENERAL, QUIESCENT, FIRE)

Triple = tuple[str, str, str]


@dataclass
class RuleTable:
    """Total local rule over a finite alphabet.

    Lookups go to the explicit `transitions` first, then to `function`,
    and fall back to identity on the centre symbol.
    """

    alphabet: tuple[str, ...]
    transitions: dict[Triple, str] = field(default_factory=dict)
    function: Optional[Callable[[str, str, str], str]] = None
    name: str = "custom"
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.alphabet = tuple(self.alphabet)
        self._members = frozenset(self.alphabet)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._members

    def __call__(self, left: str, center: str, right: str) -> str:
        result = self.transitions.get((left, center, right))
        if result is not None:
            return result
        members = self._members
        for symbol in (left, center, right):
            if symbol not in members:
                raise AlphabetMismatchError(
                    f"symbol {symbol!r} is not in the alphabet of rule table {self.name!r}"
                )
        if self.function is not None:
            return self.function(left, center, right)
        return center

    def tabulate(self) -> "RuleTable":
        """Return a copy with every triple stored explicitly."""
        table = {
            triple: self(*triple) for triple in product(self.alphabet, repeat=3)
        }
        return RuleTable(alphabet=self.alphabet, transitions=table, name=self.name)


def validate_rule(rule) -> list[str]:
    """Check the structural constraints every FSSP rule must satisfy.

    Accepts a RuleTable or anything with a `rule` attribute (a solver).
    Returns a list of violation messages, empty when the table is sound.
    """
    table = rule if isinstance(rule, RuleTable) else rule.rule
    violations = []

    missing = [symbol for symbol in DISTINGUISHED if symbol not in table]
    if missing:
        violations.append(f"alphabet is missing distinguished states: {' '.join(missing)}")
        return violations

    # Border fixity
    for left, right in product(table.alphabet, repeat=2):
        result = table(left, BORDER, right)
        if result != BORDER:
            violations.append(f"border fixity: f({left},{BORDER},{right}) = {result}")
            break

    # Quiescence
    for right in (QUIESCENT, BORDER):
        result = table(QUIESCENT, QUIESCENT, right)
        if result != QUIESCENT:
            violations.append(f"quiescence: f({QUIESCENT},{QUIESCENT},{right}) = {result}")

    for left, right in product((QUIESCENT, BORDER), repeat=2):
        if table(left, QUIESCENT, right) == FIRE:
            violations.append(f"fire from quiescent neighbourhood: f({left},{QUIESCENT},{right})")

    for triple, result in table.transitions.items():
        if result not in table or any(symbol not in table for symbol in triple):
            violations.append(f"transition {' '.join(triple)} -> {result} leaves the alphabet")
            break

    return violations


def parse_rule_text(text: str, name: str = "custom") -> RuleTable:
    """Parse the `alphabet:` header plus `l c r -> s` lines.

    Blank lines and lines starting with `//` are ignored.
    """
    alphabet = None
    transitions = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        if line.startswith("alphabet:"):
            alphabet = tuple(line[len("alphabet:"):].split())
            continue
        if line.startswith("name:"):
            name = line[len("name:"):].strip() or name
            continue
        if alphabet is None:
            raise RuleFileError(f"line {lineno}: transition before 'alphabet:' header", field="alphabet")
        lhs, arrow, rhs = line.partition("->")
        triple = tuple(lhs.split())
        target = rhs.split()
        if not arrow or len(triple) != 3 or len(target) != 1:
            raise RuleFileError(f"line {lineno}: expected 'l c r -> s', got {raw!r}", field="transitions")
        unknown = [symbol for symbol in (*triple, target[0]) if symbol not in alphabet]
        if unknown:
            raise RuleFileError(
                f"line {lineno}: symbols not in alphabet: {' '.join(unknown)}", field="transitions"
            )
        transitions[triple] = target[0]

    if alphabet is None:
        raise RuleFileError("missing 'alphabet:' header", field="alphabet")
    missing = [symbol for symbol in DISTINGUISHED if symbol not in alphabet]
    if missing:
        raise RuleFileError(f"alphabet must contain {' '.join(missing)}", field="alphabet")
    if len(set(alphabet)) != len(alphabet):
        raise RuleFileError("alphabet lists a symbol twice", field="alphabet")

    return RuleTable(alphabet=alphabet, transitions=transitions, name=name)


def read_rule_file(filepath: Union[str, Path]) -> RuleTable:
    """Load and validate a rule table from disk.

    Args:
        filepath: Path to the rule-table text file.

    Returns:
        The parsed RuleTable.
    """
    filepath = Path(filepath)
    if not filepath.exists():
        raise RuleFileError(f"Rule file not found: {filepath}", field="solver")

    logger.info(f"Loading rule table from {filepath}")
    table = parse_rule_text(filepath.read_text(), name=filepath.stem)

    violations = validate_rule(table)
    if violations:
        raise RuleFileError(f"{filepath.name}: " + "; ".join(violations), field="transitions")

    logger.info(f"Loaded {len(table.transitions):,} transitions over {len(table.alphabet)} states")
    return table


def dump_rule_text(table: RuleTable, max_triples: int = 2_000_000) -> str:
    """Render a table in the text format, leaving identity transitions implicit."""
    if len(table.alphabet) ** 3 > max_triples:
        raise RuleFileError(
            f"alphabet of {len(table.alphabet)} states is too large to export", field="alphabet"
        )
    lines = [f"name: {table.name}", "alphabet: " + " ".join(table.alphabet)]
    for triple in product(table.alphabet, repeat=3):
        result = table(*triple)
        if result != triple[1]:
            lines.append(f"{' '.join(triple)} -> {result}")
    return "\n".join(lines) + "\n"


def dump_rule_file(table: RuleTable, filepath: Union[str, Path]) -> Path:
    """Write a table to disk so it can be passed back through --solver."""
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    filepath.write_text(dump_rule_text(table))
    logger.info(f"Rule table {table.name!r} written to {filepath}")
    return filepath
