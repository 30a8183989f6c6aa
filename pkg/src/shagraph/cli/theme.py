"""Rich styling for shagraph panels, tables and messages."""

from __future__ import annotations

from typing import Any, ClassVar

from rich import box
from rich.align import AlignMethod
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.theme import Theme

# pyright: reportOptionalMemberAccess = false, reportUnknownMemberType = false


class CLISettings:
    """Theme, shared console and layout constants of the CLI.

    Reports render through :meth:`panel`, fixture and configuration listings
    through :meth:`create_table`. Verification flags print as one of three
    marks, see :meth:`check_mark`.
    """

    STYLES: ClassVar[dict[str, str]] = {
        # messages
        "info": "bright_cyan",
        "success": "bold bright_green",
        "danger": "bold bright_red",
        # report fields
        "header": "bold bright_blue",
        "label": "bold bright_blue",
        "value": "white",
        "value_missing": "dim italic",
        "footer": "dim white",
        # tables
        "table_header": "bold bright_blue on grey15",
        "row_even": "white",
        "row_odd": "bright_white",
        "row_emphasized": "bold bright_cyan",
    }

    WIDTH: int = 120
    PANEL_BOX: box.Box = box.ROUNDED
    PANEL_PADDING: tuple[int, int] = (1, 1)
    PANEL_TITLE_ALIGN: AlignMethod = "left"
    TABLE_BOX: box.Box = box.SIMPLE

    PASS_MARK: str = "[success]pass[/success]"
    FAIL_MARK: str = "[danger]FAIL[/danger]"
    SKIP_MARK: str = "[value_missing]n/a[/value_missing]"

    _console: Console | None = None
    _theme: Theme | None = None

    @classmethod
    def theme(cls) -> Theme:
        if cls._theme is None:
            cls._theme = Theme(cls.STYLES)
        return cls._theme

    @classmethod
    def console(cls) -> Console:
        """Console on stdout with the theme applied; created once."""
        if cls._console is None:
            cls._console = Console(theme=cls.theme(), markup=True, highlight=True, width=cls.WIDTH, soft_wrap=True)
        return cls._console

    @classmethod
    def check_mark(cls, ok: bool | None) -> str:
        """Mark for a verification flag; ``None`` means the check did not apply."""
        if ok is None:
            return cls.SKIP_MARK
        return cls.PASS_MARK if ok else cls.FAIL_MARK

    @classmethod
    def create_table(cls, title: str | None = None) -> Table:
        return Table(
            title=title,
            title_justify="left",
            header_style="table_header",
            row_styles=["row_even", "row_odd"],
            expand=True,
            box=cls.TABLE_BOX,
        )

    @classmethod
    def panel(cls, content: str | Any, *, title: str | None = None, width: int | None = None, **kwargs: Any) -> Panel:
        return Panel(
            content,
            title=title,
            box=cls.PANEL_BOX,
            width=width or cls.WIDTH,
            expand=True,
            padding=cls.PANEL_PADDING,
            title_align=cls.PANEL_TITLE_ALIGN,
            **kwargs,
        )
