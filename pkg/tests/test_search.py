import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from blockmatch.errors import FrameMismatchError, InvalidCandidateError
from blockmatch.search import (
    ZERO,
    CostProbe,
    Criterion,
    MotionVector,
    SearchConfig,
    ZeroCostReached,
    candidate_valid,
    mad,
    mse,
    normalize,
    sad,
    sse,
)
from frames import random_frame, translate

blocks = arrays(np.uint8, (4, 4))


# ============================================================================
# Criteria
# ============================================================================


def test_identical_blocks_cost_nothing(rng):
    block = rng.integers(0, 256, size=(16, 16), dtype=np.uint8)
    assert mad(block, block) == 0
    assert mse(block, block) == 0


def test_small_block_values():
    a = np.zeros((2, 2), dtype=np.uint8)
    b = np.array([[1, 2], [3, 4]], dtype=np.uint8)
    assert sad(a, b) == 10
    assert mad(a, b) == 2.5
    assert sse(a, b) == 30
    assert mse(a, b) == 7.5


def test_extreme_differences_do_not_wrap():
    a = np.zeros((1, 2), dtype=np.uint8)
    b = np.full((1, 2), 255, dtype=np.uint8)
    assert sad(a, b) == 510
    assert sse(a, b) == 2 * 255 * 255


@given(blocks, blocks)
def test_criteria_are_symmetric(a, b):
    assert mad(a, b) == mad(b, a)
    assert mse(a, b) == mse(b, a)


@given(blocks, blocks)
def test_lookup_squares_match_multiplication(a, b):
    diff = a.astype(np.int64) - b.astype(np.int64)
    assert sse(a, b) == int((diff * diff).sum())


def test_mismatched_blocks():
    with pytest.raises(FrameMismatchError):
        sad(np.zeros((2, 2)), np.zeros((2, 3)))


def test_normalize():
    assert normalize(512, 16) == 2.0


# ============================================================================
# Window
# ============================================================================


@pytest.mark.parametrize(
    ("mv", "origin", "expected"),
    [
        (MotionVector(0, 0), (0, 0), True),
        (MotionVector(-1, 0), (0, 0), False),
        (MotionVector(6, 6), (16, 16), True),
        (MotionVector(7, 0), (16, 16), False),
        (MotionVector(1, 0), (48, 0), False),
        (MotionVector(0, 1), (0, 48), False),
    ],
)
def test_candidate_valid(mv, origin, expected):
    config = SearchConfig(block_size=16, dm=6)
    assert candidate_valid(mv, origin, (64, 64), config) is expected


def test_config_defaults():
    config = SearchConfig()
    assert (config.block_size, config.dm, config.criterion, config.stop_on_zero) == (16, 6, Criterion.MAD, True)


def test_config_is_validated():
    with pytest.raises(ValueError):
        SearchConfig(dm=0)


# ============================================================================
# Probe
# ============================================================================


def _interior_probe(rng, **overrides) -> CostProbe:
    prev, cur = random_frame(rng), random_frame(rng)
    config = SearchConfig(**{"stop_on_zero": False, **overrides})
    return CostProbe.for_block(prev.pixels.astype(np.int32), cur.pixels.astype(np.int32), (24, 24), config)


def test_repeat_evaluation_is_memoized(rng):
    probe = _interior_probe(rng)
    first = probe.evaluate(ZERO)
    assert probe.evaluate(ZERO) == first
    assert probe.points_evaluated == 1


def test_whole_window_of_interior_block(rng):
    probe = _interior_probe(rng)
    for dy in range(-6, 7):
        for dx in range(-6, 7):
            probe.evaluate(MotionVector(dx, dy))
    assert probe.points_evaluated == 169


def test_out_of_window_candidate_is_refused(rng):
    probe = _interior_probe(rng)
    with pytest.raises(InvalidCandidateError):
        probe.evaluate(MotionVector(7, 0))
    assert probe.points_evaluated == 0


def test_cost_matches_displaced_window(rng):
    prev, cur = random_frame(rng), random_frame(rng)
    config = SearchConfig(stop_on_zero=False)
    probe = CostProbe.for_block(prev.pixels, cur.pixels, (16, 32), config)
    expected = sad(prev.pixels[32:48, 16:32], cur.pixels[35:51, 14:30])
    assert probe.evaluate(MotionVector(-2, 3)) == expected


def test_zero_cost_stops_when_asked(rng):
    prev = random_frame(rng)
    cur = translate(prev, 2, 3)
    stopping = CostProbe.for_block(prev.pixels, cur.pixels, (16, 16), SearchConfig())
    with pytest.raises(ZeroCostReached) as hit:
        stopping.evaluate(MotionVector(2, 3))
    assert hit.value.vector == (2, 3)
    assert stopping.zero_hit == (2, 3)

    counting = CostProbe.for_block(prev.pixels, cur.pixels, (16, 16), SearchConfig(stop_on_zero=False))
    assert counting.evaluate(MotionVector(2, 3)) == 0
    assert counting.zero_hit is None


def test_block_must_fit_frame(rng):
    frame = random_frame(rng, 32, 32)
    with pytest.raises(ValueError):
        CostProbe.for_block(frame.pixels, frame.pixels, (24, 0), SearchConfig())


def test_ties_keep_the_incumbent():
    probe = CostProbe(lambda mv: 5, dm=6)
    assert probe.best_of([MotionVector(1, 0)], (ZERO, 5)) == (ZERO, 5)


def test_ties_between_candidates_keep_the_first():
    probe = CostProbe(lambda mv: 1, dm=6)
    assert probe.best_of([MotionVector(0, 1), MotionVector(1, 0)]) == (MotionVector(0, 1), 1)


def test_best_of_needs_something():
    with pytest.raises(ValueError):
        CostProbe(lambda mv: 0, dm=1).best_of([])


def test_settle_collapses_repeats():
    probe = CostProbe(lambda mv: 0, dm=2)
    for mv in (MotionVector(1, 0), MotionVector(1, 0), MotionVector(2, 0)):
        probe.settle(mv)
    assert probe.path == [(1, 0), (2, 0)]


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), max_size=60))
def test_points_count_distinct_requests(requests):
    probe = CostProbe(lambda mv: abs(mv.dx) + abs(mv.dy) + 1, dm=6)
    for dx, dy in requests:
        probe.evaluate(MotionVector(dx, dy))
    assert probe.points_evaluated == len(set(requests))
