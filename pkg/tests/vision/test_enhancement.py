"""Tests for the degradation model and the blue filter."""

import numpy as np
import pytest

from src import exceptions
from src.vision.domain import model
from src.vision.service import enhancement


class TestDegrade:
    """Tests for degrade."""

    def test_zero_distance_is_identity(self) -> None:
        # Arrange
        image = model.Image.blank(4, 4, (200.0, 100.0, 50.0))

        # Act
        out = enhancement.degrade(image, model.DegradeConfig(distance=0.0))

        # Assert
        assert out == image

    def test_far_distance_tends_to_backlight(self) -> None:
        image = model.Image.blank(4, 4, (255.0, 255.0, 255.0))
        cfg = model.DegradeConfig(beta=(1.0, 1.0, 1.0), backlight=(15.0, 80.0, 100.0), distance=50.0)

        out = enhancement.degrade(image, cfg)

        assert tuple(out.data[0, 0]) == (15, 80, 100)

    def test_red_fades_fastest(self) -> None:
        image = model.Image.blank(2, 2, (255.0, 255.0, 255.0))

        out = enhancement.degrade(image, model.DegradeConfig(distance=2.0))

        r, g, b = (int(v) for v in out.data[0, 0])
        assert r < g
        assert r < b

    def test_negative_attenuation_rejected(self) -> None:
        with pytest.raises(ValueError):
            model.DegradeConfig(beta=(-0.1, 0.1, 0.1))


class TestWhiteBalance:
    """Tests for white_balance."""

    def test_random_images_span_full_range(self) -> None:
        # Arrange
        rng = np.random.default_rng(11)

        for _ in range(100):
            low = int(rng.integers(0, 100))
            high = int(rng.integers(low + 20, 256))
            data = rng.integers(low, high, size=(24, 32, 3), dtype=np.uint8)

            # Act
            out = enhancement.white_balance(model.Image(data=data))

            # Assert
            for channel in range(3):
                assert int(out.data[:, :, channel].min()) == 0
                assert int(out.data[:, :, channel].max()) == 255

    def test_constant_channel_unchanged(self) -> None:
        image = model.Image.blank(8, 8, (30.0, 60.0, 90.0))

        out = enhancement.white_balance(image)

        assert out == image

    @pytest.mark.parametrize("ratio", [-0.1, 0.5, 0.9])
    def test_discard_ratio_out_of_range(self, ratio: float) -> None:
        image = model.Image.blank(4, 4, 100.0)

        with pytest.raises(exceptions.ValidationError):
            enhancement.white_balance(image, ratio)

    def test_grayscale_stretch(self) -> None:
        data = np.tile(np.arange(50, 150, dtype=np.uint8), (10, 1))

        out = enhancement.white_balance(model.Image(data=data), discard_ratio=0.0)

        assert out.channels == 1
        assert int(out.data.min()) == 0
        assert int(out.data.max()) == 255


class TestClahe:
    """Tests for clahe."""

    def test_uniform_gray_image_unchanged(self) -> None:
        image = model.Image.blank(32, 32, 120.0)

        out = enhancement.clahe(image)

        assert out == image

    def test_low_contrast_gradient_is_spread(self) -> None:
        # Arrange
        data = np.tile(np.linspace(100, 140, 64).astype(np.uint8), (64, 1))
        image = model.Image(data=data)

        # Act
        out = enhancement.clahe(image, clip_limit=4.0, tiles=(2, 2))

        # Assert
        spread_before = int(data.max()) - int(data.min())
        spread_after = int(out.data.max()) - int(out.data.min())
        assert spread_after > spread_before

    def test_color_image_keeps_shape(self) -> None:
        rng = np.random.default_rng(3)
        image = model.Image(data=rng.integers(0, 256, size=(40, 48, 3), dtype=np.uint8))

        out = enhancement.clahe(image)

        assert out.data.shape == (40, 48, 3)

    def test_clip_limit_below_one_rejected(self) -> None:
        with pytest.raises(exceptions.ValidationError):
            enhancement.clahe(model.Image.blank(16, 16, 10.0), clip_limit=0.5)

    def test_tile_grid_larger_than_image_rejected(self) -> None:
        with pytest.raises(exceptions.ValidationError):
            enhancement.clahe(model.Image.blank(4, 4, 10.0), tiles=(8, 8))


class TestTileLut:
    def test_lut_is_monotone_and_bounded(self) -> None:
        rng = np.random.default_rng(5)
        tile = rng.integers(0, 256, size=(16, 16), dtype=np.uint8)

        lut = enhancement.tile_lut(tile, clip_limit=2.0)

        assert np.all(np.diff(lut) >= 0)
        assert lut[-1] == pytest.approx(255.0)
