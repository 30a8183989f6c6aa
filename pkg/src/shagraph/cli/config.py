"""Configuration management CLI commands."""

import sys

import click

from shagraph.cli.theme import CLISettings
from shagraph.config import Settings

# pyright: reportUnusedFunction = false


def register_config_commands(parent: click.Group) -> None:
    """Register config commands with parent group.

    Parameters
    ----------
    parent : click.Group
        Parent click group to attach commands to
    """

    @parent.group()
    def config() -> None:
        """Show configuration settings."""
        pass

    @config.command(name="get")
    @click.argument("key")
    def config_get(key: str) -> None:
        """Get a configuration value.

        Examples:
            shagraph config get max_group_order
            shagraph config get parallel
        """
        console = CLISettings.console()
        name = key.lower().removeprefix("shagraph_")
        if name not in Settings.model_fields:
            console.print(f"[danger]Setting '{key}' not found[/danger]")
            sys.exit(1)
        console.print(f"[header]{name}:[/header] {getattr(Settings(), name)}")

    @config.command(name="list")
    def config_list() -> None:
        """List all configuration settings with their environment variables."""
        console = CLISettings.console()
        settings = Settings()
        table = CLISettings.create_table("shagraph configuration")
        table.add_column("Setting")
        table.add_column("Environment")
        table.add_column("Value")
        prefix = Settings.model_config.get("env_prefix", "")
        for field_name in Settings.model_fields:
            table.add_row(field_name, f"{prefix}{field_name}".upper(), str(getattr(settings, field_name)))
        console.print(table)
        env_file = Settings.get_environment_file()
        console.print(f"[footer]Environment file: {env_file or 'none'}[/footer]")
