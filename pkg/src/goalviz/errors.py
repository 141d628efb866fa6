"""Exception hierarchy for the toolchain.

Functions that reject bad *content* return or carry :class:`Diagnostic` lists;
exceptions are reserved for contract violations the caller must handle.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .diagnostics import Diagnostic


class GoalVizError(Exception):
    """Base class for all toolchain errors."""


class GoalDslError(GoalVizError):
    """Raised when goal-model text cannot be parsed into a valid model."""

    def __init__(self, diagnostics: list["Diagnostic"]):
        self.diagnostics = list(diagnostics)
        summary = "; ".join(str(d) for d in self.diagnostics[:3])
        if len(self.diagnostics) > 3:
            summary += f" (+{len(self.diagnostics) - 3} more)"
        super().__init__(summary)


# -- dataset loading -------------------------------------------------------

class DatasetError(GoalVizError):
    pass


class MissingHeaderError(DatasetError):
    pass


class RaggedRowsError(DatasetError):
    def __init__(self, row_index: int, expected: int, got: int):
        self.row_index = row_index
        super().__init__(
            f"row {row_index} has {got} fields, header has {expected}"
        )


class DuplicateColumnError(DatasetError):
    pass


# -- profiling -------------------------------------------------------------

class ProfileError(GoalVizError):
    pass


class AllNullColumnError(ProfileError):
    pass


class EmptySelectionError(ProfileError):
    pass


class UnknownAttributeError(ProfileError):
    pass


class ZeroAttributesError(ProfileError):
    pass


# -- transformation --------------------------------------------------------

class ProfileMismatchError(GoalVizError):
    pass


class TooManyAttributesError(GoalVizError):
    pass


class IncompleteAnswersError(GoalVizError):
    pass


# -- refinement ------------------------------------------------------------

class RefinementError(GoalVizError):
    pass


class DuplicateAssignmentError(RefinementError):
    pass


class ChannelOccupiedError(RefinementError):
    pass


class InvalidBoundsError(RefinementError):
    pass


class OrientationNotApplicableError(RefinementError):
    pass


class UnknownAxisError(RefinementError):
    pass


class UnknownModelAttributeError(RefinementError):
    pass


class RefinementRejectedError(RefinementError):
    """Backstop: the op would leave the model violating an invariant."""

    def __init__(self, diagnostics: list["Diagnostic"]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in diagnostics))


# -- model (de)serialization ------------------------------------------------

class SchemaError(GoalVizError):
    pass


# -- code generation --------------------------------------------------------

class CodegenError(GoalVizError):
    pass


class UnsupportedGraphicTypeError(CodegenError):
    pass


class ModelInvalidError(CodegenError):
    def __init__(self, diagnostics: list["Diagnostic"]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in diagnostics))


class DanglingEdgeError(CodegenError):
    pass


# -- project service ---------------------------------------------------------

class ProjectError(GoalVizError):
    pass


class AlreadyExistsError(ProjectError):
    pass


class UnknownVisualizationError(ProjectError):
    pass


class NoModelError(ProjectError):
    """A step needed a derived model that the visualization does not have yet."""


class PipelineStageError(ProjectError):
    """Wraps a failure with the pipeline stage it occurred in."""

    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        super().__init__(f"[{stage}] {cause}")
