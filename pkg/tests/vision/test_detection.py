"""Tests for threshold-based blob detection."""

import numpy as np
import pytest

from src.vision.domain import model
from src.vision.service import detection, render

ORANGE = (255.0, 80.0, 0.0)
WATER = (40.0, 110.0, 130.0)


def _scene(*shapes: model.DiskShape | model.RectShape | model.GateShape) -> model.Image:
    return render.render_scene(model.SceneSpec(width=160, height=120, background=WATER, shapes=shapes))


class TestThreshold:
    """Tests for threshold."""

    def test_hue_range_wraps_through_zero(self) -> None:
        # Arrange
        image = model.Image(
            data=np.array([[[255, 0, 40], [255, 40, 0], [0, 255, 0]]], dtype=np.uint8)
        )

        # Act
        mask = detection.threshold(image, model.DetectConfig(kernel=1))

        # Assert
        assert mask.tolist() == [[True, True, False]]

    def test_grayscale_uses_value_only(self) -> None:
        image = model.Image(data=np.array([[10, 200]], dtype=np.uint8))

        mask = detection.threshold(image, model.DetectConfig(v_min=0.5))

        assert mask.tolist() == [[False, True]]


class TestCloseMask:
    def test_small_gap_is_filled(self) -> None:
        mask = np.zeros((20, 20), dtype=bool)
        mask[5:15, 5:9] = True
        mask[5:15, 10:14] = True

        closed = detection.close_mask(mask, kernel=3, iterations=1)

        assert closed[10, 9]
        assert not closed[0, 0]

    def test_border_pixels_survive(self) -> None:
        mask = np.zeros((10, 10), dtype=bool)
        mask[0:4, 0:4] = True

        closed = detection.close_mask(mask, kernel=5, iterations=1)

        assert np.array_equal(closed, mask)


class TestDetect:
    """Tests for detect."""

    def test_blank_image_finds_nothing(self) -> None:
        image = model.Image.blank(160, 120, WATER)

        assert detection.detect(image, model.DetectConfig()) is None

    def test_disk_center_and_size(self) -> None:
        # Arrange
        image = _scene(model.DiskShape(cx=70.0, cy=50.0, radius=10.0, color=ORANGE))

        # Act
        found = detection.detect(image, model.DetectConfig())

        # Assert
        assert found is not None
        assert found.center == pytest.approx((70.0, 50.0))
        assert found.blob_dim == pytest.approx(21.0)
        assert found.bbox == (60, 40, 80, 60)

    def test_blob_below_min_area_ignored(self) -> None:
        image = _scene(model.DiskShape(cx=70.0, cy=50.0, radius=2.0, color=ORANGE))

        assert detection.detect(image, model.DetectConfig(min_area=50)) is None

    def test_largest_blob_wins(self) -> None:
        image = _scene(
            model.DiskShape(cx=30.0, cy=30.0, radius=6.0, color=ORANGE),
            model.DiskShape(cx=110.0, cy=70.0, radius=12.0, color=ORANGE),
        )

        found = detection.detect(image, model.DetectConfig())

        assert found is not None
        assert found.center == pytest.approx((110.0, 70.0))

    def test_gate_uses_both_posts(self) -> None:
        # Arrange
        gate = model.GateShape(cx=80, cy=60, span=60, height=60, post_width=6, color=ORANGE)
        image = _scene(gate)

        # Act
        both = detection.detect(image, model.DetectConfig(components=2))
        one = detection.detect(image, model.DetectConfig(components=1))

        # Assert
        assert both is not None and one is not None
        assert both.center == pytest.approx((80.0, 60.0))
        assert both.bbox == (47, 30, 113, 90)
        assert one.center == pytest.approx((50.0, 60.0))

    def test_gate_needs_two_components(self) -> None:
        image = _scene(model.RectShape(x0=40, y0=30, x1=46, y1=90, color=ORANGE))

        assert detection.detect(image, model.DetectConfig(components=2)) is None

    def test_ellipse_center_is_area_centroid(self) -> None:
        image = _scene(model.RectShape(x0=40, y0=30, x1=60, y1=40, color=ORANGE))

        found = detection.detect(image, model.DetectConfig(center_method=model.CenterMethod.ELLIPSE))

        assert found is not None
        assert found.center == pytest.approx((50.0, 35.0))

    def test_blob_dimension_choice(self) -> None:
        image = _scene(model.RectShape(x0=40, y0=30, x1=69, y1=39, color=ORANGE))

        width = detection.detect(image, model.DetectConfig(blob_dim=model.BlobDimension.WIDTH))
        height = detection.detect(image, model.DetectConfig(blob_dim=model.BlobDimension.HEIGHT))

        assert width is not None and height is not None
        assert width.blob_dim == pytest.approx(30.0)
        assert height.blob_dim == pytest.approx(10.0)

    def test_hough_mode_reports_segments(self) -> None:
        image = _scene(model.RectShape(x0=40, y0=20, x1=100, y1=90, color=ORANGE))

        found = detection.detect(image, model.DetectConfig(mode=model.DetectionMode.HOUGH))

        assert found is not None
        assert found.lines is not None
        assert 0.0 <= found.center[0] <= 159.0
        assert 0.0 <= found.center[1] <= 119.0

    def test_hough_centre_sits_between_rectangle_corners(self) -> None:
        image = _scene(model.RectShape(x0=40, y0=20, x1=100, y1=90, color=ORANGE))

        found = detection.detect(image, model.DetectConfig(mode=model.DetectionMode.HOUGH))

        assert found is not None
        assert found.center == pytest.approx((70.0, 55.0), abs=3.0)


class TestSegmentsCenter:
    """Tests for the Hough line-intersection centre."""

    def test_rectangle_edges_meet_at_its_centre(self) -> None:
        # Arrange
        edges = [((10, 20), (70, 20)), ((70, 20), (70, 50)), ((70, 50), (10, 50)), ((10, 50), (10, 20))]

        # Act
        centre = detection.segments_center(edges, width=160, height=120)

        # Assert
        assert centre == pytest.approx((40.0, 35.0))

    def test_cross_centre_is_the_crossing_not_the_midpoints(self) -> None:
        cross = [((0, 50), (100, 50)), ((30, 0), (30, 100))]

        centre = detection.segments_center(cross, width=160, height=120)

        assert centre == pytest.approx((30.0, 50.0))

    def test_extended_lines_intersect_beyond_the_segments(self) -> None:
        corner = [((20, 40), (60, 40)), ((80, 10), (80, 30))]

        centre = detection.segments_center(corner, width=160, height=120)

        assert centre == pytest.approx((80.0, 40.0))

    def test_parallel_lines_fall_back_to_midpoints(self) -> None:
        rails = [((10, 10), (50, 10)), ((10, 30), (30, 30))]

        centre = detection.segments_center(rails, width=160, height=120)

        # length-weighted: (30, 10) twice as heavy as (20, 30)
        assert centre == pytest.approx((80.0 / 3.0, 50.0 / 3.0))

    def test_crossing_outside_the_frame_is_ignored(self) -> None:
        lines = [((0, 10), (20, 10)), ((150, 100), (155, 90))]

        centre = detection.segments_center(lines, width=160, height=120)

        assert centre == pytest.approx(detection._midpoint_center(lines))


class TestConfigForColor:
    def test_hue_window_centred_on_color(self) -> None:
        cfg = detection.config_for_color((0.0, 255.0, 0.0), hue_tolerance=10.0)

        assert cfg.h_min == pytest.approx(110.0)
        assert cfg.h_max == pytest.approx(130.0)

    def test_red_window_wraps(self) -> None:
        cfg = detection.config_for_color((255.0, 0.0, 0.0), hue_tolerance=20.0)

        assert cfg.h_min == pytest.approx(340.0)
        assert cfg.h_max == pytest.approx(20.0)
