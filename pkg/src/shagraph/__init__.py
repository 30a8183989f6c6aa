"""Local-global obstruction groups of tori over arithmetic curves.

Exact integer linear algebra (Smith normal form, presented abelian groups),
Galois lattices with Tate cohomology and flasque resolutions, decorated graph
cohomology, and reduction-graph pipelines computing the obstruction group as
the first cohomology of a coefficient system.
"""

__version__ = "0.1.0"

import logging

from rich import logging as rich_logging
from rich.console import Console

from shagraph.config import LOG_LEVELS, Settings

DEFAULT_MAX_GROUP_ORDER = 64
ENVIRONMENT_PREFIX = "SHAGRAPH_"
LOGGER_NAME = "shagraph"

# Logger setup
handler = rich_logging.RichHandler(
    console=Console(stderr=True),
    rich_tracebacks=True,
    tracebacks_show_locals=True,
    markup=True,
    log_time_format="%Y-%m-%d %H:%M:%S",
    show_path=False,
    locals_max_length=40,
    locals_max_string=80,
)
handler.setLevel(logging.DEBUG)

logger = logging.getLogger(LOGGER_NAME)
logger.addHandler(handler)

default_settings = Settings()
logger.setLevel(default_settings.log_level)

__all__ = [
    "DEFAULT_MAX_GROUP_ORDER",
    "ENVIRONMENT_PREFIX",
    "LOGGER_NAME",
    "LOG_LEVELS",
    "Settings",
    "__version__",
    "default_settings",
    "logger",
]
