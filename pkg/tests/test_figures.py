import xml.etree.ElementTree as ET

from sternbrocot import (
    ContinuedFraction,
    ExtendedRational,
    FunnelOverlay,
    LineOverlay,
    PointOverlay,
    build_diagram,
    funnel,
    line_family,
    render_svg,
)

R = ExtendedRational
SVG_NS = "{http://www.w3.org/2000/svg}"


def small_diagram():
    return build_diagram(R(0), R(1), 8)


def fig5_overlays():
    fam = line_family(ContinuedFraction((0, 3, 1, 4)), 2)
    partner = fam.shared_line_partner()
    plus, minus = fam.line_pair()
    return [
        LineOverlay(plus),
        LineOverlay(minus),
        PointOverlay(tuple(fam.vertex(m) for m in range(-6, 7))),
        PointOverlay(tuple(partner.vertex(m) for m in range(-6, 7)), color="#d4a017"),
    ]


def test_repeated_renders_are_byte_identical():
    d = small_diagram()
    overlays = fig5_overlays()
    assert render_svg(d, overlays) == render_svg(d, overlays)


def test_output_is_valid_svg_with_expected_element_counts():
    d = small_diagram()
    root = ET.fromstring(render_svg(d))
    assert root.tag == f"{SVG_NS}svg"
    circles = root.findall(f".//{SVG_NS}circle")
    lines = root.findall(f".//{SVG_NS}line")
    assert len(circles) == len(d.vertices)
    assert len(lines) == len(d.edges)


def test_empty_overlay_list_adds_no_overlay_groups():
    text = render_svg(small_diagram())
    assert "family-line" not in text
    assert "family-points" not in text
    assert "funnel" not in text


def test_overlay_groups_present_and_infinite_points_skipped():
    d = small_diagram()
    fam = line_family(ContinuedFraction((0, 2, 1, 2)), 2)  # m = -1 is infinite
    plus, minus = fam.line_pair()
    pts = PointOverlay(tuple(fam.vertex(m) for m in range(-2, 3)))
    text = render_svg(d, [LineOverlay(plus), LineOverlay(minus), pts])
    root = ET.fromstring(text)
    groups = {g.get("class") for g in root.findall(f"{SVG_NS}g")}
    assert {"edges", "vertices", "family-line", "family-points"} <= groups
    point_group = [
        g for g in root.findall(f"{SVG_NS}g") if g.get("class") == "family-points"
    ][0]
    assert len(point_group.findall(f"{SVG_NS}circle")) == 4  # 5 values, one infinite


def test_funnel_overlay_draws_strip_and_ray():
    d = small_diagram()
    f = funnel(R(2, 7))
    root = ET.fromstring(render_svg(d, [FunnelOverlay(f)]))
    fgroup = [g for g in root.findall(f"{SVG_NS}g") if g.get("class") == "funnel"][0]
    assert len(fgroup.findall(f"{SVG_NS}polygon")) == len(f.triangles)
    assert len(fgroup.findall(f"{SVG_NS}line")) == 1  # the dashed defining ray


def test_coordinates_use_six_significant_digits():
    root = ET.fromstring(render_svg(small_diagram()))
    seen = 0
    for el in root.iter():
        for attr in ("x1", "y1", "x2", "y2", "cx", "cy", "r"):
            val = el.get(attr)
            if val is None:
                continue
            seen += 1
            assert val == f"{float(val):.6g}"
    assert seen > 50
