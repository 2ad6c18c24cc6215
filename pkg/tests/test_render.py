import re
import xml.etree.ElementTree as ET

import pytest

from gaussphi.phi import preimage_count
from gaussphi.regions import Region
from gaussphi.render import RenderStyle, render_decomposition, render_region

MARKER = re.compile(r"<rect ")
FILL = re.compile(r'fill="(#[0-9a-f]{6})"')


def marker_count(document):
    return len(MARKER.findall(document))


@pytest.mark.parametrize("a, b, expected", [(1, 1, 5), (2, 3, 21), (5, 6, 81)])
def test_region_marker_counts(a, b, expected):
    document = render_region(Region(a, b))
    assert marker_count(document) == expected
    assert Region(a, b).count() == expected


@pytest.mark.parametrize("n, markers, grays", [
    (0, 5, 1),
    (3, 125, 2),
    (4, 297, 3),
])
def test_decomposition_marker_and_gray_counts(n, markers, grays):
    document = render_decomposition(n)
    assert marker_count(document) == markers == preimage_count(n)
    assert len(set(FILL.findall(document))) == grays


def test_documents_are_well_formed_xml():
    for document in (render_region(Region(5, 6)), render_decomposition(3)):
        root = ET.fromstring(document)
        assert root.tag.endswith("svg")


def test_rendering_is_deterministic():
    style = RenderStyle(cell=10, axis_cross=True)
    assert render_region(Region(5, 6), style) == \
        render_region(Region(5, 6), style)
    assert render_decomposition(3) == render_decomposition(3)


def test_layer_fills_darken():
    style = RenderStyle()
    values = []
    for j in range(4):
        fill = style.layer_fill(j)
        values.append(int(fill[1:3], 16))
    assert values == sorted(values, reverse=True)
    assert len(set(values)) == len(values)
    # clamped at the floor from there on
    assert style.layer_fill(4) == style.layer_fill(3)


def test_axis_cross_is_optional():
    plain = render_region(Region(2, 3))
    crossed = render_region(Region(2, 3), RenderStyle(axis_cross=True))
    assert "<line" not in plain
    assert crossed.count("<line") == 2
    assert marker_count(plain) == marker_count(crossed)


def test_bad_styles_rejected():
    with pytest.raises(ValueError):
        RenderStyle(cell=1)
    with pytest.raises(ValueError):
        RenderStyle(lightness_step=0)
    with pytest.raises(ValueError):
        RenderStyle(min_lightness=90, base_lightness=80)


def test_marker_geometry():
    document = render_region(Region(1, 1), RenderStyle(cell=10))
    root = ET.fromstring(document)
    rects = [el for el in root.iter() if el.tag.endswith("rect")]
    # origin-centred: the middle point of E(1,1) sits at the canvas centre
    centre = [el for el in rects
              if int(el.get("x")) + int(el.get("width")) // 2 == 20
              and int(el.get("y")) + int(el.get("height")) // 2 == 20]
    assert len(centre) == 1
