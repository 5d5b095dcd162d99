"""Algorithm identifiers and modified-conjugate options."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class AlgorithmId(str, Enum):
    """The six block matching strategies; values are the CLI names."""

    FULL_SEARCH = "full"
    LOG2D = "log2d"
    THREE_STEP = "tss"
    CONJUGATE_OTS = "ots"
    ORTHOGONAL = "osa"
    MODIFIED_CONJUGATE = "modconj"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    AlgorithmId.FULL_SEARCH: "FULL SEARCH",
    AlgorithmId.LOG2D: "2D LOGARITHMIC",
    AlgorithmId.THREE_STEP: "THREE STEP",
    AlgorithmId.CONJUGATE_OTS: "CONJUGATE",
    AlgorithmId.ORTHOGONAL: "ORTHOGONAL",
    AlgorithmId.MODIFIED_CONJUGATE: "MOD. CONJUGATE",
}


class ModConjOptions(BaseModel):
    """Independent, combinable switches for the conjugate-direction family."""

    model_config = ConfigDict(frozen=True)

    variation1: bool = Field(
        default=False,
        description="Defer the X refinement until after the Y coarse phase, then adjust on both axes",
    )
    variation2: bool = Field(
        default=False,
        description="Refine with a single probe toward the cheaper coarse flank",
    )
    full_cda: bool = Field(
        default=False,
        description="CONJUGATE_OTS only: keep alternating axes until neither moves",
    )

    @property
    def suffix(self) -> str:
        """Short tag for report labels, e.g. ``" +v1+v2"``."""
        tags = [name for name, on in (("v1", self.variation1), ("v2", self.variation2), ("cda", self.full_cda)) if on]
        return "".join(f" +{tag}" for tag in tags)
