"""Base model for every JSON-facing shagraph model.

Common configuration, Rich rendering and field formatting shared by
descriptors and reports.
"""

from abc import ABC
from typing import Any

from pydantic import BaseModel, ConfigDict
from pydantic.alias_generators import to_camel
from rich.panel import Panel

# Panel formatting constants
PANEL_VALUE_COLUMN: int = 24
PANEL_HANGING_INDENT: int = 4
PANEL_LONG_VALUE: int = 40


def format_field(
    label: str,
    value: Any,
    value_column: int | None = None,
    hanging_indent: int | None = None,
) -> str:
    """Format a label and value with Rich markup.

    Short values share the label's line, aligned at ``value_column``; long or
    multiline values start on the next line, indented by ``hanging_indent``.

    Parameters
    ----------
    label : str
        Field label
    value : Any
        Field value; lists and dicts are rendered one entry per line
    value_column : int | None
        Column where short values start
    hanging_indent : int | None
        Indentation of long and multiline values

    Returns
    -------
    str
        Formatted field string
    """
    value_column = value_column if value_column is not None else PANEL_VALUE_COLUMN
    hanging_indent = hanging_indent if hanging_indent is not None else PANEL_HANGING_INDENT

    if isinstance(value, dict):
        text = "\n".join(f"{k}: {v}" for k, v in value.items())
    elif isinstance(value, list | tuple) and value and isinstance(value[0], dict | list | tuple):
        text = "\n".join(str(v) for v in value)
    else:
        text = str(value)

    formatted_label = f"[label]{label}:[/label]"
    if "\n" in text or len(text) > PANEL_LONG_VALUE:
        indent = " " * hanging_indent
        body = "\n".join(f"{indent}{line}" for line in text.split("\n"))
        return f"{formatted_label}\n{body}"
    padding = " " * max(1, value_column - len(label) - 1)
    return f"{formatted_label}{padding}[value]{text}[/value]"


class ShagraphBaseModel(ABC, BaseModel):
    """Base model for descriptors, reports and error details.

    Provides a shared Pydantic configuration with:
    - Strict validation
    - Extra field prohibition
    - camelCase aliases on the JSON side, snake_case names in Python
    """

    model_config = ConfigDict(
        strict=True,
        frozen=False,
        extra="forbid",
        validate_assignment=True,
        arbitrary_types_allowed=False,
        populate_by_name=True,
        alias_generator=to_camel,
        use_enum_values=True,
    )

    def to_json_dict(self, **kwargs: Any) -> dict[str, Any]:
        """Aliased, JSON-compatible dump without ``None`` fields."""
        return self.model_dump(
            mode="json",
            by_alias=kwargs.pop("by_alias", True),
            exclude_none=kwargs.pop("exclude_none", True),
            **kwargs,
        )

    @property
    def formatted_fields_dict(self) -> dict[str, str]:
        """Formatted label/value strings for all set fields, keyed by field name."""
        formatted: dict[str, str] = {}
        for field_name in self.__class__.model_fields:
            value = getattr(self, field_name, None)
            if value is None:
                continue
            if isinstance(value, BaseModel):
                value = value.model_dump(mode="json", exclude_none=True)
            label = field_name.replace("_", " ").title()
            formatted[field_name] = format_field(label, value)
        return formatted

    @property
    def formatted_fields(self) -> list[str]:
        return list(self.formatted_fields_dict.values())

    def as_panel(self, title: str | None = None) -> Panel:
        """Render the model as a themed Rich panel."""
        from shagraph.cli.theme import CLISettings

        return CLISettings.panel(content="\n".join(self.formatted_fields), title=title or self.__class__.__name__)
