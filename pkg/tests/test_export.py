import pytest

from rigikit import Framework, Mode, framework_svg, graph_from_edges, named_framework, to_tikz
from rigikit.errors import UnsupportedDimensionError


def test_tikz_single_edge():
    g = graph_from_edges([(0, 1)])
    f = Framework(g, {0: [0, 0], 1: [1, 0]}, Mode.EXACT)
    text = to_tikz(f)
    nodes = [line for line in text.splitlines() if "\\node[gvertex]" in line]
    draws = [line for line in text.splitlines() if "\\draw[edge]" in line]
    assert len(nodes) == 2 and len(draws) == 1
    assert "(0) at (0, 0)" in nodes[0]
    assert "(0) to (1)" in draws[0]


def test_tikz_three_prism():
    f = named_framework("ThreePrism", "parallel")
    text = to_tikz(f)
    assert text.count("\\node[gvertex]") == 6
    assert text.count("\\draw[edge]") == 9
    assert "(3) at (0, 6)" in text


def test_tikz_rejects_3d():
    g = graph_from_edges([(0, 1)])
    f = Framework(g, {0: [0, 0, 0], 1: [1, 0, 0]}, Mode.EXACT)
    with pytest.raises(UnsupportedDimensionError):
        to_tikz(f)


def test_static_svg():
    f = named_framework("ThreePrism", "parallel")
    svg = framework_svg(f)
    assert svg.count("<circle") == 6
    assert svg.count("<line") == 9
    assert "<animate" not in svg


def test_plotting_figures(tmp_path):
    from rigikit.plotting import plot_framework, plot_graph, save_figure
    from rigikit import inf_flexes, stresses, named_graph

    f = named_framework("ThreePrism", "parallel")
    fig = plot_framework(f, inf_flexes(f)[0], stresses(f)[0])
    target = tmp_path / "prism.png"
    save_figure(fig, str(target))
    assert target.stat().st_size > 1000
    gfig = plot_graph(named_graph("Cycle", 5))
    gtarget = tmp_path / "cycle.png"
    save_figure(gfig, str(gtarget))
    assert gtarget.exists()
