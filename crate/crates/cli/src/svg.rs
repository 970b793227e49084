//! SVG rendering of the Newton polygon: axes, support dots, the boundary
//! chain, face labels and the shaded upper region. Output is
//! deterministic for a fixed boundary.

use std::collections::BTreeSet;
use std::fmt::Write;

use mixedtori::newton::{LatticePoint, NewtonBoundary};

const SCALE: i64 = 40;
const MARGIN: i64 = 50;

struct Frame {
    width: i64,
    height: i64,
}

impl Frame {
    fn x(&self, x: i64) -> i64 {
        MARGIN + x * SCALE
    }

    fn y(&self, y: i64) -> i64 {
        self.height - MARGIN - y * SCALE
    }
}

fn subscript(i: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    i.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

/// Renders the polygon as standalone SVG 1.1 text.
pub fn render_polygon_svg(b: &NewtonBoundary, support: &BTreeSet<LatticePoint>) -> String {
    let max_x = support.iter().map(|p| p.x).max().unwrap_or(0).max(1) + 1;
    let max_y = support.iter().map(|p| p.y).max().unwrap_or(0).max(1) + 1;
    let frame = Frame {
        width: 2 * MARGIN + max_x * SCALE,
        height: 2 * MARGIN + max_y * SCALE,
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        frame.width, frame.height, frame.width, frame.height
    );
    let _ = writeln!(
        svg,
        r#"  <rect width="{}" height="{}" fill="white"/>"#,
        frame.width, frame.height
    );

    // Shaded region: the boundary chain extended upward and rightward.
    if !b.vertices.is_empty() {
        let first = b.vertices[0];
        let last = b.vertices[b.vertices.len() - 1];
        let mut pts = Vec::new();
        pts.push((frame.x(first.x), frame.y(max_y)));
        for v in &b.vertices {
            pts.push((frame.x(v.x), frame.y(v.y)));
        }
        pts.push((frame.x(max_x), frame.y(last.y)));
        pts.push((frame.x(max_x), frame.y(max_y)));
        let joined: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(
            svg,
            r##"  <polygon points="{}" fill="#fff3b0" fill-opacity="0.6" stroke="none"/>"##,
            joined.join(" ")
        );
    }

    // Axes with unit tick marks.
    let origin = (frame.x(0), frame.y(0));
    let _ = writeln!(
        svg,
        r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
        origin.0,
        origin.1,
        frame.x(max_x),
        origin.1
    );
    let _ = writeln!(
        svg,
        r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
        origin.0,
        origin.1,
        origin.0,
        frame.y(max_y)
    );
    for x in 1..=max_x {
        let _ = writeln!(
            svg,
            r#"  <line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="black" stroke-width="1"/>"#,
            frame.x(x),
            origin.1 - 3,
            origin.1 + 3
        );
    }
    for y in 1..=max_y {
        let _ = writeln!(
            svg,
            r#"  <line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="black" stroke-width="1"/>"#,
            frame.y(y),
            origin.0 - 3,
            origin.0 + 3
        );
    }

    // Boundary chain.
    if b.vertices.len() >= 2 {
        let pts: Vec<String> = b
            .vertices
            .iter()
            .map(|v| format!("{},{}", frame.x(v.x), frame.y(v.y)))
            .collect();
        let _ = writeln!(
            svg,
            r##"  <polyline points="{}" fill="none" stroke="#1f5fbf" stroke-width="2"/>"##,
            pts.join(" ")
        );
    }

    // Face labels at segment midpoints, offset towards the origin.
    for (i, face) in b.faces.iter().enumerate() {
        let mx = (frame.x(face.start.x) + frame.x(face.end.x)) / 2 - 26;
        let my = (frame.y(face.start.y) + frame.y(face.end.y)) / 2 - 8;
        let _ = writeln!(
            svg,
            r##"  <text x="{mx}" y="{my}" font-family="sans-serif" font-size="14" fill="#b02020">Δ¹{}</text>"##,
            subscript(i + 1)
        );
    }

    // Support dots on top.
    for p in support {
        let _ = writeln!(
            svg,
            r##"  <circle cx="{}" cy="{}" r="4" fill="#1f5fbf"/>"##,
            frame.x(p.x),
            frame.y(p.y)
        );
    }

    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use mixedtori::newton::{newton_boundary, support};
    use mixedtori::MixedPolynomial;

    #[test]
    fn general_fixture_svg_has_dots_chain_and_labels() {
        let p = MixedPolynomial::parse(
            "u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9",
        )
        .unwrap();
        let s = support(&p);
        let b = newton_boundary(&s).unwrap();
        let svg = render_polygon_svg(&b, &s);
        assert_eq!(svg.matches("<circle").count(), 5);
        assert_eq!(svg.matches("<polyline").count(), 1);
        for label in ["Δ¹₁", "Δ¹₂", "Δ¹₃"] {
            assert!(svg.contains(label), "missing {label}");
        }
        // Deterministic output.
        assert_eq!(svg, render_polygon_svg(&b, &s));
    }

    #[test]
    fn single_vertex_svg_has_one_dot_no_chain() {
        let p = MixedPolynomial::parse("u^2 v^3").unwrap();
        let s = support(&p);
        let b = newton_boundary(&s).unwrap();
        let svg = render_polygon_svg(&b, &s);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<polyline").count(), 0);
    }

    #[test]
    fn quartic_fixture_svg_shows_edge_point() {
        let p = MixedPolynomial::parse("u^4 + ~u u^2 v + u^2 ~v^2 + v^6").unwrap();
        let s = support(&p);
        let b = newton_boundary(&s).unwrap();
        let svg = render_polygon_svg(&b, &s);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg.matches("Δ¹").count(), 2);
    }
}
