import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockmatch.errors import FrameMismatchError
from blockmatch.frame_io import Frame
from blockmatch.metrics import MetricReport, entropy, psnr, report, variance


def test_constant_residual_has_no_entropy():
    assert entropy([5] * 100) == 0.0


def test_two_equiprobable_values_cost_one_bit():
    assert entropy([0, 1]) == pytest.approx(1.0)


def test_skewed_histogram():
    assert entropy([0, 0, 0, 1]) == pytest.approx(0.811278, abs=1e-6)


@given(st.lists(st.integers(-255, 255), min_size=1, max_size=200), st.randoms())
def test_entropy_ignores_order_and_is_bounded(values, random):
    shuffled = list(values)
    random.shuffle(shuffled)
    assert entropy(shuffled) == pytest.approx(entropy(values))
    assert 0.0 <= entropy(values) <= math.log2(511) + 1e-9


def test_two_level_residual_variance():
    values = [0] * 50 + [255] * 50
    assert variance(values) == pytest.approx(16256.25)
    assert entropy(values) == pytest.approx(1.0)


def test_variance_of_constant_is_zero():
    assert variance(np.full(64, -7)) == 0.0


def test_empty_input_is_rejected():
    with pytest.raises(ValueError):
        entropy([])
    with pytest.raises(ValueError):
        variance(np.array([], dtype=np.int16))


def test_unit_error_psnr():
    cur = Frame(np.full((4, 4), 100, dtype=np.uint8))
    pred = Frame(np.tile(np.array([99, 101], dtype=np.uint8), (4, 2)))
    assert psnr(cur, pred) == pytest.approx(48.1308, abs=1e-4)


def test_identical_frames_have_no_psnr():
    frame = Frame.from_values(2, 2, [1, 2, 3, 4])
    assert psnr(frame, frame) is None


def test_halving_mse_adds_three_decibels():
    cur = Frame(np.full((4, 4), 100, dtype=np.uint8))
    everywhere = Frame(np.full((4, 4), 102, dtype=np.uint8))
    half = Frame(np.array([[102] * 4, [100] * 4] * 2, dtype=np.uint8))
    assert psnr(cur, half) - psnr(cur, everywhere) == pytest.approx(10 * math.log10(2))


def test_report_drops_psnr_for_exact_prediction():
    frame = Frame.from_values(2, 2, [1, 2, 3, 4])
    record = report(frame, frame).to_record()
    assert record == {"entropy_bits": 0.0, "variance": 0.0}


def test_report_values():
    cur = Frame.from_values(4, 1, [10, 10, 10, 11])
    pred = Frame.from_values(4, 1, [10, 10, 10, 10])
    result = report(cur, pred)
    assert isinstance(result, MetricReport)
    assert result.entropy_bits == pytest.approx(0.811278, abs=1e-6)
    assert result.variance == pytest.approx(0.1875)
    assert result.psnr_db == pytest.approx(10 * math.log10(255 * 255 * 4))


def test_report_size_mismatch():
    with pytest.raises(FrameMismatchError):
        report(Frame.from_values(1, 1, [0]), Frame.from_values(2, 1, [0, 0]))
