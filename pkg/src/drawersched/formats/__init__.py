"""Instance, schedule, drawer and benchmark file formats."""

from .best_known import BestKnown, load_best_known, parse_best_known
from .descriptor import (
    DescriptorEntry,
    PortfolioDescriptor,
    assemble_portfolio,
    load_portfolio,
    parse_descriptor,
    parse_portfolio,
)
from .drawer_file import load_drawer_config, parse_drawer_config, render_drawer_config
from .schedule_io import export_schedule, import_schedule
from .sm import parse_sm, render_sm
from .text_file import read_text_file

__all__ = [
    "BestKnown",
    "DescriptorEntry",
    "PortfolioDescriptor",
    "assemble_portfolio",
    "export_schedule",
    "import_schedule",
    "load_best_known",
    "load_drawer_config",
    "load_portfolio",
    "parse_best_known",
    "parse_descriptor",
    "parse_drawer_config",
    "parse_portfolio",
    "parse_sm",
    "read_text_file",
    "render_drawer_config",
    "render_sm",
]
