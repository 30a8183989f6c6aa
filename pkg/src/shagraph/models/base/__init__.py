"""Base model class and formatting helpers shared by all shagraph models."""

from shagraph.models.base.base_model import ShagraphBaseModel, format_field

__all__ = [
    "ShagraphBaseModel",
    "format_field",
]
