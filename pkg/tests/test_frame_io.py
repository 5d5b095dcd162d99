import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockmatch.compensation import ResidualImage
from blockmatch.errors import MalformedHeaderError, TruncatedDataError, UnsupportedMaxvalError
from blockmatch.frame_io import (
    RAYS,
    Frame,
    StarSpec,
    decode_pgm,
    encode_pgm,
    export_residual_view,
    generate_displaced_star,
    generate_star,
    load_pgm,
    save_pgm,
    star_squares,
)


# ============================================================================
# Frame / PGM
# ============================================================================


def test_decode_small_p5():
    frame = decode_pgm(b"P5\n2 2\n255\n" + bytes([0, 255, 128, 64]))
    assert frame == Frame.from_values(2, 2, [0, 255, 128, 64])
    assert frame.pixels.tolist() == [[0, 255], [128, 64]]


def test_header_comments_are_skipped():
    frame = decode_pgm(b"P5\n# made by hand\n2 1\n# depth\n255\n\xff\x00")
    assert frame.pixels.tolist() == [[255, 0]]


def test_rejects_16_bit_maxval():
    with pytest.raises(UnsupportedMaxvalError, match="unsupported maxval"):
        decode_pgm(b"P5\n1 1\n65535\n\x00\x00")


def test_rejects_ascii_and_unknown_magic():
    with pytest.raises(MalformedHeaderError, match="P2"):
        decode_pgm(b"P2\n1 1\n255\n0\n")
    with pytest.raises(MalformedHeaderError):
        decode_pgm(b"P6\n1 1\n255\n\x00\x00\x00")
    with pytest.raises(MalformedHeaderError):
        decode_pgm(b"P5\n1\n")


def test_rejects_truncated_payload():
    with pytest.raises(TruncatedDataError):
        decode_pgm(b"P5\n4 4\n255\n" + bytes(10))


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_pgm(tmp_path / "nope.pgm")


def test_single_pixel_file_layout(tmp_path):
    path = tmp_path / "one.pgm"
    save_pgm(Frame.from_values(1, 1, [0]), path)
    data = path.read_bytes()
    assert data == b"P5\n1 1\n255\n\x00"
    assert data.endswith(b"\x00") and len(data) == 12


def test_row_major_payload():
    assert encode_pgm(Frame.from_values(2, 1, [255, 0])).endswith(b"\xff\x00")


def test_file_round_trip(tmp_path, rng):
    frame = Frame(rng.integers(0, 256, size=(7, 5), dtype=np.uint8))
    save_pgm(frame, tmp_path / "f.pgm")
    assert load_pgm(tmp_path / "f.pgm") == frame


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 40), st.integers(1, 40), st.integers(0, 2**32 - 1))
def test_codec_round_trip(width, height, seed):
    rng = np.random.default_rng(seed)
    frame = Frame(rng.integers(0, 256, size=(height, width), dtype=np.uint8))
    assert decode_pgm(encode_pgm(frame)) == frame


def test_frames_are_read_only():
    frame = Frame.from_values(2, 1, [1, 2])
    with pytest.raises(ValueError):
        frame.pixels[0, 0] = 9


def test_frame_rejects_out_of_range_values():
    with pytest.raises(ValueError):
        Frame(np.array([[0, 256]]))


# ============================================================================
# Star pattern
# ============================================================================


def test_default_star_has_57_squares(star_pair):
    spec, star, _ = star_pair
    squares = star_squares(spec)
    assert len(squares) == 1 + 8 * 7
    assert star.size == (512, 512)
    assert int((star.pixels == 0).sum()) == 57 * 16 * 16


def test_star_center_black_corner_white(star_pair):
    _, star, _ = star_pair
    assert star.pixels[256, 256] == 0
    assert star.pixels[0, 0] == 255


def test_star_is_two_level(star_pair):
    _, star, displaced = star_pair
    assert set(np.unique(star.pixels).tolist()) == {0, 255}
    assert set(np.unique(displaced.pixels).tolist()) == {0, 255}


def test_touching_squares_form_bars():
    star = generate_star(StarSpec(pitch=16))
    row = star.pixels[256]
    assert (row[8:504] == 0).all()
    assert row[7] == 255 and row[504] == 255


def test_first_ray_square_does_not_move(star_pair):
    _, star, displaced = star_pair
    # +x ray, k=1: centre (288, 256)
    assert (star.pixels[248:264, 280:296] == 0).all()
    assert (displaced.pixels[248:264, 280:296] == 0).all()


def test_fourth_ray_square_moves_three_pixels(star_pair):
    _, star, displaced = star_pair
    # +x ray, k=4: centre (384, 256), footprint x in [376, 392)
    assert (star.pixels[248:264, 376:392] == 0).all()
    assert (displaced.pixels[248:264, 379:395] == 0).all()
    assert (displaced.pixels[248:264, 376:379] == 255).all()


def test_displacements_stay_within_schedule(star_pair):
    spec, _, _ = star_pair
    magnitudes = {abs(c) for square in star_squares(spec, displaced=True) for c in square.shift}
    assert magnitudes <= set(range(spec.max_displacement + 1))
    assert {0, 6} <= magnitudes


def test_displaced_star_only_changes_square_footprints(star_pair):
    spec, star, displaced = star_pair
    mask = np.zeros((spec.image_size, spec.image_size), dtype=bool)
    side = spec.square_size
    for square in star_squares(spec) + star_squares(spec, displaced=True):
        x, y = square.origin(side)
        mask[y : y + side, x : x + side] = True
    changed = star.pixels != displaced.pixels
    assert changed.any()
    assert not (changed & ~mask).any()


@pytest.mark.parametrize("transform", [np.fliplr, np.flipud, np.transpose, np.rot90])
def test_star_dihedral_symmetry(star_pair, transform):
    _, star, displaced = star_pair
    assert np.array_equal(transform(star.pixels), star.pixels)
    assert np.array_equal(transform(displaced.pixels), displaced.pixels)


def test_star_rays_cover_axes_and_diagonals():
    assert len(set(RAYS)) == 8
    assert {(1, 0), (0, -1), (1, 1), (-1, -1)} <= set(RAYS)


@pytest.mark.parametrize(
    "kwargs",
    [{"square_size": 15}, {"pitch": 8}, {"image_size": 0}],
)
def test_star_spec_validation(kwargs):
    with pytest.raises(ValueError):
        StarSpec(**kwargs)


def test_generators_default_geometry():
    assert generate_star() == generate_star(StarSpec())
    assert generate_displaced_star().size == (512, 512)


# ============================================================================
# Residual view
# ============================================================================


def test_residual_view_maps_zero_to_midgray():
    view = export_residual_view(ResidualImage(np.zeros((3, 4), dtype=np.int16)))
    assert (view.pixels == 128).all()


def test_residual_view_clamps():
    view = export_residual_view(ResidualImage(np.array([[-200, 100, 200, -128]])))
    assert view.pixels.tolist() == [[0, 228, 255, 0]]
