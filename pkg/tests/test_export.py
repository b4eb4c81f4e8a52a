import io
import re

import numpy as np
import pytest

from bezout_arcs.export import PlotConfig, csv_text, read_csv, svg_text, write_csv

CIRCLE = re.compile(r'<circle cx="([-\d.]+)" cy="([-\d.]+)" r="[\d.]+"/>')


def test_csv_format(tmp_path):
    pts = np.array([[-2, 3], [1, -1]])
    assert csv_text(pts) == "x,y\n-2,3\n1,-1\n"
    assert csv_text(np.zeros((0, 2), dtype=int)) == "x,y\n"
    out = tmp_path / "a.csv"
    write_csv(pts, out)
    assert out.read_bytes() == b"x,y\n-2,3\n1,-1\n"
    assert read_csv(out).tolist() == pts.tolist()
    buf = io.StringIO()
    write_csv(pts, buf)
    assert buf.getvalue() == csv_text(pts)


def test_svg_one_to_one_centered():
    pts = [(1, 1), (-3, 2)]
    cfg = PlotConfig(width=7, height=7, scale="1:1", margin=0)
    text = svg_text(pts, 3, cfg, centered=True)
    assert text.startswith("<?xml")
    assert 'version="1.1"' in text
    # origin at (3, 3), y up
    assert CIRCLE.findall(text) == [("4", "2"), ("0", "1")]


def test_svg_lower_left():
    cfg = PlotConfig(width=4, height=4, scale="1:1", margin=0)
    assert CIRCLE.findall(svg_text([(1, 1)], 3, cfg, centered=False)) == [("1", "2")]


def test_svg_canvas_too_small():
    with pytest.raises(ValueError):
        svg_text([(1, 1)], 512, PlotConfig(width=1000, height=1025, scale="1:1"))


def test_svg_fit_is_deterministic():
    pts = [(5, 4), (-1, 1), (4, -5)]
    cfg = PlotConfig(width=300, height=200, axes=True)
    assert svg_text(pts, 6, cfg) == svg_text(pts, 6, cfg)
    assert len(CIRCLE.findall(svg_text(pts, 6, cfg))) == 3


def test_plot_config_validation():
    with pytest.raises(ValueError):
        PlotConfig(width=0)
    with pytest.raises(ValueError):
        PlotConfig(scale="2:1")
