"""Instance files: YAML documents holding a period assignment."""

from pathlib import Path
from typing import Any, Optional, Union

import yaml
from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from ..errors import InstanceError
from .kernel import PeriodAssignment


class InstanceDocument(BaseModel):
    """On-disk form of a problem instance."""

    periods: list[int] = Field(..., min_length=1, description="Per-cell periods p_1..p_n")
    name: Optional[str] = Field(None, description="Human-readable label")
    period_set: Optional[list[int]] = Field(
        None, description="Full period set P; defaults to the distinct periods"
    )
    provenance: Optional[dict[str, Any]] = Field(None, description="How the instance was generated")

    class Config:
        json_schema_extra = {
            "example": {
                "name": "alternating",
                "periods": [1, 2, 1, 2, 1, 2, 1, 2, 1],
                "period_set": [1, 2],
            }
        }

    def to_assignment(self) -> PeriodAssignment:
        return PeriodAssignment.of(self.periods, period_set=self.period_set)

    @classmethod
    def from_assignment(
        cls,
        assignment: PeriodAssignment,
        name: Optional[str] = None,
        provenance: Optional[dict[str, Any]] = None,
    ) -> "InstanceDocument":
        return cls(
            periods=list(assignment.periods),
            name=name,
            period_set=list(assignment.period_set.members),
            provenance=provenance,
        )


def parse_instance(data: Any) -> InstanceDocument:
    """Validate a decoded document, naming the first offending field on failure."""
    if not isinstance(data, dict):
        raise InstanceError("instance document must be a mapping with a 'periods' field", field="periods")
    try:
        document = InstanceDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "periods"
        raise InstanceError(f"invalid instance field '{field}': {first['msg']}", field=field) from e
    document.to_assignment()
    return document


def read_instance(filepath: Union[str, Path]) -> InstanceDocument:
    """Load an instance file.

    Args:
        filepath: Path to the YAML (or JSON) instance document.

    Returns:
        The validated InstanceDocument.
    """
    filepath = Path(filepath)
    if not filepath.exists():
        raise InstanceError(f"Instance file not found: {filepath}", field="instance")

    try:
        data = yaml.safe_load(filepath.read_text())
    except yaml.YAMLError as e:
        raise InstanceError(f"{filepath.name}: not a valid YAML document ({e})", field="instance") from e

    document = parse_instance(data)
    logger.debug(f"Loaded instance {document.name or filepath.stem} with {len(document.periods)} cells")
    return document


def dump_instance(document: InstanceDocument) -> str:
    return yaml.safe_dump(document.model_dump(exclude_none=True), sort_keys=False)


def write_instance(document: InstanceDocument, filepath: Union[str, Path]) -> Path:
    """Write an instance file, creating parent directories."""
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)
    filepath.write_text(dump_instance(document))
    return filepath
