"""
Plain-text reports for the CLI.

Each report is a Jinja2 template under templates/ rendered from the to_dict()
form of a result object, so the text and --json outputs carry the same data.
"""

from pathlib import Path
from typing import Optional

from jinja2 import Environment, FileSystemLoader

TEMPLATE_DIR = Path(__file__).parent / "templates"


class ReportRenderer:
    """Render result dictionaries through the report templates."""

    def __init__(self, template_dir: Optional[Path] = None):
        self.template_dir = template_dir or TEMPLATE_DIR
        self.env = Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            trim_blocks=True,
            lstrip_blocks=True,
        )

    def render(self, template_name: str, **context) -> str:
        template_path = self.template_dir / f"{template_name}.txt.j2"
        if not template_path.exists():
            raise FileNotFoundError(f"Template not found: {template_name}")
        return self.env.get_template(template_path.name).render(**context).rstrip() + "\n"

    def gamma(self, report, threshold: Optional[float] = None, table: bool = True) -> str:
        ratios = {str(v): str(q) for v, q in report.ratios().items()}
        return self.render(
            "gamma", report=report.to_dict(), ratios=ratios, threshold=threshold, table=table
        )

    def fratio(self, report, check=None) -> str:
        return self.render(
            "fratio", report=report.to_dict(), check=check.to_dict() if check else None
        )

    def conditions(self, report) -> str:
        return self.render("conditions", report=report.to_dict())

    def embed_trace(self, trace) -> str:
        return self.render("embed_trace", trace=trace.to_dict())

    def goodness(self, report) -> str:
        return self.render("goodness", report=report.to_dict())

    def universal(self, report) -> str:
        return self.render("universal", report=report.to_dict())

    def list_templates(self) -> list[str]:
        return sorted(p.name.removesuffix(".txt.j2") for p in self.template_dir.glob("*.txt.j2"))
