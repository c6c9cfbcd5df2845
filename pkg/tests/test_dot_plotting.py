from __future__ import annotations

from ogpd.builders import fixtures
from ogpd.dot import emit_dot
from ogpd.plotting import draw_groupoid, layout
from ogpd.quotient import factorize, quotient


def edges(text):
    lines = [ln.strip() for ln in text.splitlines() if "->" in ln]
    dashed = [ln for ln in lines if "dashed" in ln and "arrowhead=none" in ln]
    solid = [ln for ln in lines if "dashed" not in ln and "dotted" not in ln]
    return solid, dashed


def nodes(text):
    return [ln for ln in text.splitlines() if "[label=" in ln and "->" not in ln]


def test_example_groupoid_diagram():
    S = fixtures("example_vi").S
    text = emit_dot(S)
    solid, dashed = edges(text)
    assert len(nodes(text)) == 7
    assert len(solid) == 4
    assert len(dashed) == len(S.objects.covers()) == 8


def test_quotient_diagram_is_all_order():
    fx = fixtures("example_vi")
    text = emit_dot(quotient(fx.S, fx.A).groupoid)
    solid, dashed = edges(text)
    assert len(nodes(text)) == 5
    assert solid == [] and len(dashed) == 6


def test_dot_output_is_deterministic():
    S = fixtures("example_vi").S
    assert emit_dot(S) == emit_dot(S)


def test_functor_and_factorization_diagrams():
    fx = fixtures("klein_hlp")
    text = emit_dot(fx.p)
    assert "cluster_s" in text and "cluster_t" in text and "dotted" in text
    assert "cluster_q" in emit_dot(factorize(fx.p))


def test_figure_is_written(tmp_path):
    S = fixtures("example_vi").S
    pos = draw_groupoid(S, tmp_path / "s.png")
    assert (tmp_path / "s.png").stat().st_size > 0
    assert pos == layout(S)
    assert pos["z"][1] < pos["k"][1] < pos["x"][1]


def test_single_object_diagram():
    from ogpd.builders import one_point

    text = emit_dot(one_point())
    assert len(nodes(text)) == 1
    assert edges(text) == ([], [])
