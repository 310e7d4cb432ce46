"""Vision command handlers."""

import logging
import pathlib

import numpy as np

from src.vision.adapter import netpbm
from src.vision.domain import model
from src.vision.schema import command, response
from src.vision.service import detection, enhancement, ranging

logger = logging.getLogger(__name__)


class EnhanceImageHandler:
    """Handle blue-filter enhancement of an image file."""

    async def handle(self, cmd: command.EnhanceImage) -> response.EnhancedImage:
        image = netpbm.read_image(pathlib.Path(cmd.input_path))
        enhanced = enhancement.blue_filter(image, cmd.discard_ratio, cmd.clip_limit, cmd.tiles)
        netpbm.write_image(pathlib.Path(cmd.output_path), enhanced)
        return response.EnhancedImage(
            output_path=cmd.output_path,
            width=enhanced.width,
            height=enhanced.height,
            channels=enhanced.channels,
        )


def _annotate(image: model.Image, found: model.Detection) -> model.Image:
    """Outline the bounding box in white."""
    data = image.data.copy()
    x0, y0, x1, y1 = found.bbox
    data[y0, x0 : x1 + 1] = 255
    data[y1, x0 : x1 + 1] = 255
    data[y0 : y1 + 1, x0] = 255
    data[y0 : y1 + 1, x1] = 255
    return model.Image(data=np.asarray(data))


class DetectObjectHandler:
    """Handle blob detection on an image file."""

    async def handle(self, cmd: command.DetectObject) -> response.DetectionReport:
        image = netpbm.read_image(pathlib.Path(cmd.input_path))
        if cmd.enhance:
            image = enhancement.blue_filter(image)
        found = detection.detect(image, cmd.config)
        if found is not None and len(cmd.calibration) >= 2:
            calibration = ranging.calibrate(cmd.calibration)
            found = found.with_distance(ranging.estimate_distance(found.blob_dim, calibration))
        if cmd.output_path is not None:
            netpbm.write_image(
                pathlib.Path(cmd.output_path), image if found is None else _annotate(image, found)
            )
        logger.info("Detection on %s: %s", cmd.input_path, "found" if found else "not found")
        return response.DetectionReport.from_entity(found)
