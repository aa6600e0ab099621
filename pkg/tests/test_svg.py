"""SVG rendering: structure of the emitted document, not its aesthetics."""

import xml.etree.ElementTree as ET

from perptri.construction import construct
from perptri.svg import render_svg, svg_document


def test_document_structure(equilateral):
    doc = svg_document(construct(equilateral))
    assert doc.startswith("<svg")
    assert doc.rstrip().endswith("</svg>")
    assert 'viewBox="' in doc
    assert doc.count('class="construction"') == 3
    assert doc.count('class="triangle-source"') == 1
    assert doc.count('class="triangle-derived"') == 1
    assert doc.count('class="vertex-label"') == 6
    assert doc.count('class="phi-arc"') == 1


def test_document_is_wellformed_xml(t345, equilateral, obtuse_iso):
    for t in (t345, equilateral, obtuse_iso):
        root = ET.fromstring(svg_document(construct(t)))
        assert root.tag.endswith("svg")


def test_right_case_merges_gamma_prime_label(t345, equilateral):
    right_doc = svg_document(construct(t345))
    assert "Γ′ = B" in right_doc
    acute_doc = svg_document(construct(equilateral))
    assert "Γ′ = B" not in acute_doc
    assert "Γ′" in acute_doc


def test_vertex_labels_present(obtuse_iso):
    doc = svg_document(construct(obtuse_iso))
    for label in (">A<", ">B<", ">Γ<", ">A′<", ">B′<", ">Γ′<"):
        assert label in doc


def test_y_axis_is_flipped(equilateral):
    # Gamma sits at height +sqrt(3)/2; with the y-flip its rendered
    # coordinate is negative.
    doc = svg_document(construct(equilateral))
    source_path = next(
        line for line in doc.splitlines() if 'class="triangle-source"' in line
    )
    assert "-0.866025" in source_path


def test_render_svg_writes_file(tmp_path, t345):
    out = tmp_path / "construction.svg"
    render_svg(construct(t345), out)
    text = out.read_text(encoding="utf-8")
    assert text.startswith("<svg")
    assert text.endswith("</svg>\n")


def test_viewbox_covers_all_vertices(obtuse_iso):
    d = construct(obtuse_iso)
    root = ET.fromstring(svg_document(d))
    x0, y0, w, h = (float(v) for v in root.attrib["viewBox"].split())
    for p in (*d.source.vertices(), d.ap, d.bp, d.gp):
        assert x0 <= p.x <= x0 + w
        assert y0 <= -p.y <= y0 + h
