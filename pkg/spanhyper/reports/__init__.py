"""Text report rendering."""

from spanhyper.reports.renderer import TEMPLATE_DIR, ReportRenderer

__all__ = ["TEMPLATE_DIR", "ReportRenderer"]
