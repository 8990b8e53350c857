"""SVG rendering of a layout. The only place coordinates become floats."""

from __future__ import annotations

import xml.etree.ElementTree as ET


def emit_svg(scr, scale: float = 40.0, labels: bool = True) -> str:
    fr = scr.frame
    x0 = float(fr.x)
    top = float(fr.top)
    pad = 0.5
    width = (float(fr.width) + 2 * pad) * scale
    height = (float(fr.height) + 2 * pad) * scale

    def X(x) -> float:
        return (float(x) - x0 + pad) * scale

    def Y(y) -> float:
        # SVG's y axis points down
        return (top - float(y) + pad) * scale

    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", width=f"{width:.2f}",
                     height=f"{height:.2f}", viewBox=f"0 0 {width:.2f} {height:.2f}")
    squares = ET.SubElement(svg, "g", {"class": "squares", "fill": "#9ecae1", "stroke": "#08519c",
                                       "stroke-width": "1"})
    gaps = ET.SubElement(svg, "g", {"class": "gaps", "fill": "none", "stroke": "#d94801",
                                    "stroke-width": "1", "stroke-dasharray": "4 2"})
    text = ET.SubElement(svg, "g", {"class": "labels", "font-family": "sans-serif",
                                    "text-anchor": "middle", "dominant-baseline": "middle"})
    for v in sorted(scr.squares):
        s = scr.squares[v]
        side = float(s.side) * scale
        ET.SubElement(squares, "rect", id=f"v{v}", x=f"{X(s.x):.3f}", y=f"{Y(s.top):.3f}",
                      width=f"{side:.3f}", height=f"{side:.3f}")
        if labels:
            t = ET.SubElement(text, "text", x=f"{X(s.x) + side / 2:.3f}", y=f"{Y(s.top) + side / 2:.3f}",
                              **{"font-size": f"{max(side / 4, 1):.2f}"})
            t.text = f"v{v}"
    for f in sorted(scr.gaps):
        r = scr.gaps[f]
        w, h = float(r.width) * scale, float(r.height) * scale
        ET.SubElement(gaps, "rect", id=f"f{f}", x=f"{X(r.x):.3f}", y=f"{Y(r.top):.3f}",
                      width=f"{w:.3f}", height=f"{h:.3f}")
        if labels:
            t = ET.SubElement(text, "text", x=f"{X(r.x) + w / 2:.3f}", y=f"{Y(r.top) + h / 2:.3f}",
                              fill="#d94801", **{"font-size": f"{max(min(w, h) / 4, 1):.2f}"})
            t.text = f"f{f}"
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"
