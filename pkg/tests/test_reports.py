"""
Tests for the plain-text report templates.
"""

import tempfile
from fractions import Fraction
from pathlib import Path

import pytest

from spanhyper.constructions import verify_universal_sampled
from spanhyper.core import complete
from spanhyper.embedder import check_goodness, embed_universal, host_partition, partition_pattern
from spanhyper.generators import hamilton_cycle, perfect_matching
from spanhyper.reports import ReportRenderer
from spanhyper.thresholds import (
    chebyshev_check,
    check_riordan_conditions,
    gamma,
    second_moment_ratio,
)


class TestReportRenderer:
    """Test each template against a small real result."""

    def setup_method(self):
        self.renderer = ReportRenderer()

    def test_list_templates(self):
        assert self.renderer.list_templates() == [
            "conditions",
            "embed_trace",
            "fratio",
            "gamma",
            "goodness",
            "universal",
        ]

    def test_missing_template(self):
        with pytest.raises(FileNotFoundError):
            self.renderer.render("nonexistent")

    def test_custom_template_dir(self):
        tmp_dir = Path(tempfile.mkdtemp())
        (tmp_dir / "hello.txt.j2").write_text("hi {{ name }}\n\n")
        renderer = ReportRenderer(tmp_dir)
        assert renderer.render("hello", name="x") == "hi x\n"

    def test_gamma(self):
        report = gamma(complete(4, 3))
        text = self.renderer.gamma(report, threshold=0.5)
        assert text.startswith("gamma = 2 (~2.000000), attained at v = 4")
        assert "e_sub(v)" in text
        assert "expectation threshold n^(-1/gamma) = 0.5" in text

    def test_gamma_without_table(self):
        text = self.renderer.gamma(gamma(complete(4, 3)), table=False)
        assert "e_sub(v)" not in text
        assert "expectation threshold" not in text

    def test_fratio(self):
        report = second_moment_ratio(perfect_matching(6, 3), 6, 3)
        text = self.renderer.fratio(report, chebyshev_check(report))
        assert text.startswith("H(6, 3) with r = 3")
        assert "E(X)   = " in text
        assert "exact P(X = 0)" in text

    def test_conditions(self):
        report = check_riordan_conditions(hamilton_cycle(9, 3, 2), 0.5)
        text = self.renderer.conditions(report)
        assert text.startswith("n = 9, r = 3")
        assert "edge condition" in text

    def test_embed_trace(self):
        f = hamilton_cycle(24, 3, 1)
        ep = partition_pattern(f, 2, Fraction(1, 12), t_override=4)
        hp = host_partition(24, ep.t, ep.epsilon)
        text = self.renderer.embed_trace(embed_universal(complete(24, 3), f, hp, ep, seed=1))
        assert text.startswith("embedded (attempt")
        assert "failure:" not in text

    def test_goodness(self):
        hp = host_partition(12, 2, Fraction(1, 6), class_size=2)
        report = check_goodness(complete(12, 3), hp, 1.0, 1, samples=20, seed=3)
        text = self.renderer.goodness(report)
        assert text.startswith("goodness (sampled, 20 samples")
        assert "PASS" in text
        assert "(vacuous)" in text

    def test_universal(self):
        report = verify_universal_sampled(complete(8, 3), 8, 3, 2, samples=5, seed=1)
        text = self.renderer.universal(report)
        assert text.startswith("F^(3)(8, 2): 5/5 samples embedded (1.000)")
