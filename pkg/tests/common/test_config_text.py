"""Tests for the structured-text configuration dialect."""

import pydantic
import pytest

from src import exceptions
from src.common import config_text

DOCUMENT = """\
# vehicle profile
[vehicle]
mass = 26.4   # dry
count = 3
flag = on

[hydrostatics]
r_cb = 0, 0, -0.05
"""


class _Limits(pydantic.BaseModel):
    low: float = pydantic.Field(default=0.0, ge=0)
    high: float = 1.0


class TestConfigDocument:
    """Tests for ConfigDocument parsing and typed access."""

    def test_reads_typed_values_and_strips_inline_comments(self) -> None:
        # Arrange
        document = config_text.ConfigDocument(DOCUMENT)

        # Act / Assert
        assert document.get_float("vehicle", "mass") == 26.4
        assert document.get_int("vehicle", "count") == 3
        assert document.get_bool("vehicle", "flag") is True
        assert document.get_vector("hydrostatics", "r_cb", 3) == (0.0, 0.0, -0.05)

    def test_missing_key_returns_default(self) -> None:
        document = config_text.ConfigDocument(DOCUMENT)

        assert document.get_float("vehicle", "ballast_mass", 8.4) == 8.4
        assert document.get_float("absent", "mass") is None

    def test_line_numbers_are_one_based(self) -> None:
        document = config_text.ConfigDocument(DOCUMENT)

        assert document.line_of("vehicle") == 2
        assert document.line_of("vehicle", "mass") == 3
        assert document.line_of("hydrostatics", "r_cb") == 8

    def test_line_without_section_reports_its_line(self) -> None:
        with pytest.raises(exceptions.ConfigParseError) as exc_info:
            config_text.ConfigDocument("# header\nmass = 3\n")

        assert exc_info.value.line == 2

    def test_bad_number_names_section_key_and_line(self) -> None:
        # Arrange
        document = config_text.ConfigDocument("[vehicle]\nmass = heavy\n")

        # Act
        with pytest.raises(exceptions.ConfigParseError) as exc_info:
            document.get_float("vehicle", "mass")

        # Assert
        assert exc_info.value.line == 2
        assert "[vehicle] mass" in exc_info.value.message

    def test_wrong_vector_length_is_rejected(self) -> None:
        document = config_text.ConfigDocument("[hydrostatics]\nr_cb = 0, 0\n")

        with pytest.raises(exceptions.ConfigParseError):
            document.get_vector("hydrostatics", "r_cb", 3)

    def test_duplicate_key_is_a_parse_error(self) -> None:
        with pytest.raises(exceptions.ConfigParseError):
            config_text.ConfigDocument("[vehicle]\nmass = 1\nmass = 2\n")

    def test_sections_filter_by_prefix(self) -> None:
        document = config_text.ConfigDocument("[task.2]\n[task.1]\n[sim]\n")

        assert document.sections("task") == ["task.2", "task.1"]

    def test_parse_error_is_a_validation_error(self) -> None:
        assert issubclass(exceptions.ConfigParseError, exceptions.ValidationError)


class TestReadSection:
    """Tests for read_section and build_model."""

    def test_unknown_key_is_rejected(self) -> None:
        document = config_text.ConfigDocument("[limits]\nlow = 1\nwidth = 2\n")

        with pytest.raises(exceptions.ConfigParseError, match="unknown key"):
            config_text.read_section(document, "limits", {"low": "float", "high": "float"})

    def test_only_present_keys_are_returned(self) -> None:
        document = config_text.ConfigDocument("[limits]\nlow = 0.5\n")

        values = config_text.read_section(document, "limits", {"low": "float", "high": "float"})

        assert values == {"low": 0.5}

    def test_optional_float_accepts_none(self) -> None:
        document = config_text.ConfigDocument("[ping]\nsnr_db = none\n")

        values = config_text.read_section(document, "ping", {"snr_db": "optional_float"})

        assert values == {"snr_db": None}

    def test_build_model_reports_failing_key_with_line(self) -> None:
        # Arrange
        document = config_text.ConfigDocument("[limits]\nhigh = 2\nlow = -1\n")
        values = config_text.read_section(document, "limits", {"low": "float", "high": "float"})

        # Act
        with pytest.raises(exceptions.ConfigParseError) as exc_info:
            config_text.build_model(document, "limits", _Limits, values)

        # Assert
        assert exc_info.value.line == 3

    def test_render_document_round_trips(self) -> None:
        text = config_text.render_document({"sim": {"dt": "0.01", "seed": "7"}}, header="demo")

        document = config_text.ConfigDocument(text)

        assert document.get_float("sim", "dt") == 0.01
        assert document.get_int("sim", "seed") == 7
