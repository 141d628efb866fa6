"""Goal-based validation: questionnaire construction and answer evaluation."""

from __future__ import annotations

import datetime
import enum
from collections.abc import Mapping
from dataclasses import dataclass, field

from ..errors import IncompleteAnswersError
from ..requirements.model import VisGoal, VisualizationRequirement, literal
from ..vismodel.model import VisualizationModel


@dataclass(frozen=True)
class Question:
    goal: VisGoal
    text: str


class ValidationStatus(enum.Enum):
    VALIDATED = "validated"
    REQUIRES_REVISION = "requires_revision"


def _utcnow() -> datetime.datetime:
    return datetime.datetime.now(datetime.timezone.utc)


@dataclass(frozen=True)
class ValidationResult:
    status: ValidationStatus
    failed_goals: tuple[VisGoal, ...]
    timestamp: datetime.datetime = field(default_factory=_utcnow)

    def __post_init__(self) -> None:
        empty = not self.failed_goals
        validated = self.status is ValidationStatus.VALIDATED
        if empty != validated:
            raise ValueError("status must be Validated exactly when no goal failed")


def build_questionnaire(
    requirement: VisualizationRequirement,
    information_goal: str | None = None,
) -> list[Question]:
    """One yes/no question per goal, in declaration order; the text names the
    goal kind and the information goal the visualization serves."""
    target = information_goal if information_goal is not None else requirement.name
    return [
        Question(
            goal=goal,
            text=(
                f'Does the visualization fulfil its {literal(goal)} goal '
                f'for "{target}"?'
            ),
        )
        for goal in requirement.goals
    ]


def validate_visualization(
    model: VisualizationModel,
    requirement: VisualizationRequirement,
    answers: Mapping[VisGoal, bool],
    timestamp: datetime.datetime | None = None,
) -> ValidationResult:
    """Validated iff every goal was answered yes; failed goals are listed in
    declaration order. Answers for goals outside the requirement are ignored."""
    del model  # the verdict depends only on the answers
    missing = [goal for goal in requirement.goals if goal not in answers]
    if missing:
        names = ", ".join(literal(g) for g in missing)
        raise IncompleteAnswersError(f"unanswered goals: {names}")
    failed = tuple(goal for goal in requirement.goals if not answers[goal])
    status = ValidationStatus.REQUIRES_REVISION if failed else ValidationStatus.VALIDATED
    if timestamp is None:
        return ValidationResult(status=status, failed_goals=failed)
    return ValidationResult(status=status, failed_goals=failed, timestamp=timestamp)
