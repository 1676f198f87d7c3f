import pytest

from spacetime_born.output.svg import render_line_plot


def test_plot_is_standalone_svg():
    svg = render_line_plot("Delta", "P", "Delta (%)", [(0.0, 0.0), (0.5, -16.7), (1.0, 0.0)])
    assert svg.startswith('<?xml version="1.0"')
    assert "<svg" in svg
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<polyline") == 1


def test_polyline_has_one_vertex_per_point():
    points = [(i / 10, float(i)) for i in range(11)]
    svg = render_line_plot("t", "x", "y", points)
    vertices = svg.split('points="')[1].split('"')[0].split()
    assert len(vertices) == 11


def test_labels_are_escaped():
    svg = render_line_plot("n1<n2 & \"odd\"", "P", "y", [(0.0, 1.0), (1.0, 2.0)])
    assert "n1&lt;n2 &amp; &quot;odd&quot;" in svg
    assert "n1<n2" not in svg


def test_flat_series_still_renders():
    svg = render_line_plot("flat", "P", "y", [(0.0, 0.0), (1.0, 0.0)])
    assert "<polyline" in svg


def test_empty_points_rejected():
    with pytest.raises(ValueError):
        render_line_plot("empty", "P", "y", [])
