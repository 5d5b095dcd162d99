"""Registry of block matching strategies.

Each strategy is a function ``(probe, options) -> MatchResult`` registered in
:data:`MATCHERS` under its :class:`AlgorithmId`. Every strategy starts from
the zero vector, only asks the probe for valid candidates, and returns the
cheapest displacement it evaluated.

To add another strategy:

1. Write the search in its own module here, decorated with
   :func:`blockmatch.search.matcher`.
2. Add an :class:`AlgorithmId` member and register the function in
   :data:`MATCHERS` below.
3. Select it with ``--algo <name>``.
"""

from __future__ import annotations

from collections.abc import Callable

from ..search import CostProbe, MatchResult
from .conjugate import modified_conjugate_search, ots_search
from .full import full_search
from .log2d import log2d_search
from .three_step import orthogonal_search, three_step_search
from .types import AlgorithmId, ModConjOptions

# algorithm -> (probe, options) -> result
MATCHERS: dict[AlgorithmId, Callable[[CostProbe, ModConjOptions], MatchResult]] = {
    AlgorithmId.FULL_SEARCH: lambda probe, options: full_search(probe),
    AlgorithmId.LOG2D: lambda probe, options: log2d_search(probe),
    AlgorithmId.THREE_STEP: lambda probe, options: three_step_search(probe),
    AlgorithmId.CONJUGATE_OTS: lambda probe, options: ots_search(probe, full_cda=options.full_cda),
    AlgorithmId.ORTHOGONAL: lambda probe, options: orthogonal_search(probe),
    AlgorithmId.MODIFIED_CONJUGATE: lambda probe, options: modified_conjugate_search(probe, options),
}


def available_algorithms() -> list[str]:
    """CLI names of all registered strategies."""
    return [algo.value for algo in MATCHERS]


def resolve_algorithm(name: str | AlgorithmId) -> AlgorithmId:
    """Look up a strategy by CLI name (``full``, ``log2d``, ``tss``, ``ots``, ``osa``, ``modconj``)."""
    try:
        return AlgorithmId(name)
    except ValueError:
        raise ValueError(
            f"Unknown algorithm {name!r}. Registered algorithms: {available_algorithms()}."
        ) from None


def run_matcher(
    probe: CostProbe, algorithm: AlgorithmId | str, options: ModConjOptions | None = None
) -> MatchResult:
    """Run the named strategy on ``probe``."""
    return MATCHERS[resolve_algorithm(algorithm)](probe, options or ModConjOptions())


__all__ = [
    "MATCHERS",
    "AlgorithmId",
    "ModConjOptions",
    "available_algorithms",
    "full_search",
    "log2d_search",
    "modified_conjugate_search",
    "orthogonal_search",
    "ots_search",
    "resolve_algorithm",
    "run_matcher",
    "three_step_search",
]
