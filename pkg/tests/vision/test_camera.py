"""Tests for camera projection and view rendering."""

import math

import numpy as np
import pytest

from src.core.domain import model as core_model
from src.vision.domain import camera
from src.vision.service import camera as camera_service


class TestToCamera:
    """Tests for to_camera and back_project."""

    def test_point_ahead_lands_on_principal_point(self) -> None:
        # Arrange
        cam = camera.CameraConfig()
        pose = core_model.Pose(x=1.0, y=2.0, z=1.5)

        # Act
        u, v, depth = camera_service.to_camera(cam, pose, np.array([4.0, 2.0, 1.5]))

        # Assert
        assert (u, v) == pytest.approx(cam.principal_point)
        assert depth == pytest.approx(3.0)

    def test_point_behind_is_not_visible(self) -> None:
        cam = camera.CameraConfig()

        assert camera_service.to_camera(cam, core_model.Pose(), np.array([-1.0, 0.0, 0.0])) is None

    def test_back_project_inverts_projection(self) -> None:
        cam = camera.CameraConfig(mount=camera.CameraMount.DOWN)
        pose = core_model.Pose(x=3.0, y=-1.0, z=1.0, psi=0.7)
        point = np.array([3.4, -0.8, 3.0])

        u, v, depth = camera_service.to_camera(cam, pose, point)
        recovered = camera_service.back_project(cam, pose, u, v, depth)

        assert recovered == pytest.approx(point)

    def test_focal_from_field_of_view(self) -> None:
        cam = camera.CameraConfig(width=160, fov=math.pi / 2)

        assert cam.focal == pytest.approx(80.0)


class TestProjectTarget:
    """Tests for project_target and render_view."""

    def test_buoy_radius_shrinks_with_distance(self) -> None:
        cam = camera.CameraConfig()
        buoy = camera.VisualTarget(name="buoy", kind=camera.TargetKind.BUOY, position=(2.0, 0.0, 0.0), size=0.5)

        depth, shapes = camera_service.project_target(cam, core_model.Pose(), buoy)

        assert depth == pytest.approx(2.0)
        assert shapes[0].radius == pytest.approx(80.0 * 0.25 / 2.0)

    def test_bin_invisible_to_forward_camera(self) -> None:
        cam = camera.CameraConfig()
        bin_target = camera.VisualTarget(name="bin", kind=camera.TargetKind.BIN, position=(2.0, 0.0, 3.0))

        assert camera_service.project_target(cam, core_model.Pose(), bin_target) == (0.0, [])

    def test_bin_seen_from_above(self) -> None:
        cam = camera.CameraConfig(mount=camera.CameraMount.DOWN)
        bin_target = camera.VisualTarget(name="bin", kind=camera.TargetKind.BIN, position=(0.0, 0.0, 2.0), size=0.6)

        depth, shapes = camera_service.project_target(cam, core_model.Pose(), bin_target)

        assert depth == pytest.approx(2.0)
        assert len(shapes) == 1

    def test_gate_projects_two_posts(self) -> None:
        cam = camera.CameraConfig()
        gate = camera.VisualTarget(
            name="gate", kind=camera.TargetKind.GATE, position=(3.0, 0.0, 0.0), size=1.5, height=1.0
        )

        depth, shapes = camera_service.project_target(cam, core_model.Pose(), gate)

        assert depth == pytest.approx(3.0)
        assert len(shapes) == 2

    def test_render_view_shows_buoy_color(self) -> None:
        cam = camera.CameraConfig()
        buoy = camera.VisualTarget(
            name="buoy", kind=camera.TargetKind.BUOY, position=(2.0, 0.0, 0.0), size=0.5, color=(255.0, 0.0, 0.0)
        )

        image = camera_service.render_view(cam, core_model.Pose(), [buoy])

        assert (image.width, image.height) == (160, 120)
        assert tuple(image.data[60, 80]) == (255, 0, 0)
        assert tuple(image.data[0, 0]) == (40, 110, 130)

    def test_render_view_skips_targets_behind(self) -> None:
        cam = camera.CameraConfig()
        buoy = camera.VisualTarget(name="buoy", kind=camera.TargetKind.BUOY, position=(-2.0, 0.0, 0.0))

        image = camera_service.render_view(cam, core_model.Pose(), [buoy])

        assert np.all(image.data == np.array([40, 110, 130], dtype=np.uint8))
