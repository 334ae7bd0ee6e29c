//! Drawing arc diagrams. Points sit on a vertical line, `×` at the origin
//! below point 1. Each arc is a polyline that visits, at the height of every
//! point it passes, a horizontal offset whose size grows with nesting depth
//! and whose sign records the side.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arcs_a::{DiagramA, Side};
use crate::arcs_b::{DiagramB, TypeBArc};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Svg,
    Ascii,
    Tikz,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(Format::Svg),
            "ascii" => Ok(Format::Ascii),
            "tikz" => Ok(Format::Tikz),
            _ => Err(Error::Invalid(format!("unknown render format {s:?}"))),
        }
    }
}

/// Canvas size and point spacing, in pixels (svg), character cells (ascii)
/// or centimetres (tikz).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub format: Format,
    pub width: f64,
    pub height: f64,
    pub spacing: f64,
}

impl RenderSpec {
    pub fn new(format: Format, width: f64, height: f64, spacing: f64) -> Result<Self> {
        if !(width > 0.0 && height > 0.0 && spacing > 0.0) {
            return Err(Error::Invalid("render dimensions must be positive".into()));
        }
        Ok(RenderSpec { format, width, height, spacing })
    }

    pub fn default_for(format: Format, n: usize) -> Self {
        let rows = (n + 2) as f64;
        match format {
            Format::Svg => RenderSpec { format, width: 60.0 * rows, height: 60.0 * rows, spacing: 50.0 },
            Format::Ascii => RenderSpec { format, width: 8.0 * rows + 1.0, height: 4.0 * rows, spacing: 4.0 },
            Format::Tikz => RenderSpec { format, width: 1.2 * rows, height: 1.2 * rows, spacing: 1.0 },
        }
    }
}

/// Half-width of the box reserved for a point glyph, per unit spacing.
const GLYPH: f64 = 0.15;
/// Horizontal offset of a depth-one arc, per unit spacing.
const STEP: f64 = 0.4;

pub type Polyline = Vec<(f64, f64)>;

/// A diagram laid out with unit spacing.
#[derive(Clone, Debug, PartialEq)]
pub struct Layout {
    /// Labels and positions of glyphs; the orbifold point is labelled `×`.
    pub glyphs: Vec<(String, (f64, f64))>,
    /// Each arc with the glyphs it may touch (its endpoints).
    pub strokes: Vec<(Polyline, Vec<usize>)>,
}

fn sign(side: Side) -> f64 {
    match side {
        Side::Left => -1.0,
        Side::Right => 1.0,
    }
}

/// Depth of each interval: one more than the deepest interval strictly
/// inside it.
fn depths(extents: &[(i64, i64)]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..extents.len()).collect();
    order.sort_by_key(|&i| extents[i].1 - extents[i].0);
    let mut depth = vec![1; extents.len()];
    for (k, &i) in order.iter().enumerate() {
        let (lo, hi) = extents[i];
        for &j in &order[..k] {
            let (a, b) = extents[j];
            if lo <= a && b <= hi && (a, b) != (lo, hi) {
                depth[i] = depth[i].max(depth[j] + 1);
            }
        }
    }
    depth
}

pub fn layout_a(d: &DiagramA) -> Layout {
    let glyphs = (1..=d.n).map(|i| (i.to_string(), (0.0, i as f64))).collect();
    let extents: Vec<(i64, i64)> = d.arcs.iter().map(|a| (a.bottom as i64, a.top as i64)).collect();
    let depth = depths(&extents);
    let strokes = d
        .arcs
        .iter()
        .zip(depth)
        .map(|(a, k)| {
            let off = STEP * k as f64;
            let mut pts = vec![(0.0, a.bottom as f64)];
            pts.extend((a.bottom + 1..a.top).map(|c| (-sign(a.side_of(c)) * off, c as f64)));
            pts.push((0.0, a.top as f64));
            (pts, vec![a.bottom - 1, a.top - 1])
        })
        .collect();
    Layout { glyphs, strokes }
}

pub fn layout_b(d: &DiagramB) -> Layout {
    let n = d.n;
    let mut glyphs: Vec<(String, (f64, f64))> = (1..=n).map(|i| (i.to_string(), (0.0, i as f64))).collect();
    glyphs.push(("×".into(), (0.0, 0.0)));
    let orbifold = n;
    let extents: Vec<(i64, i64)> = d
        .arcs
        .iter()
        .map(|a| match *a {
            TypeBArc::Ordinary { bottom, top, .. } => (bottom as i64, top as i64),
            TypeBArc::Orbifold { top, .. } => (0, top as i64),
            TypeBArc::Long { .. } => (-1, a.max_point() as i64),
        })
        .collect();
    let depth = depths(&extents);
    // Offset sign at point `c`: positive when the arc passes right of `c`.
    let strokes = d
        .arcs
        .iter()
        .zip(depth)
        .map(|(a, k)| {
            let off = STEP * k as f64;
            let at = |c: usize, passes_right: bool| (if passes_right { off } else { -off }, c as f64);
            match *a {
                TypeBArc::Ordinary { bottom, top, right } => {
                    let mut pts = vec![(0.0, bottom as f64)];
                    pts.extend((bottom + 1..top).map(|c| at(c, !right.contains(c))));
                    pts.push((0.0, top as f64));
                    (pts, vec![bottom - 1, top - 1])
                }
                TypeBArc::Orbifold { top, right } => {
                    let mut pts = vec![(0.0, top as f64)];
                    pts.extend((1..top).rev().map(|c| at(c, !right.contains(c))));
                    pts.push((0.0, 0.0));
                    (pts, vec![top - 1, orbifold])
                }
                TypeBArc::Long { left_ep, right_ep, left, right } => {
                    let mut pts = vec![(0.0, left_ep as f64)];
                    pts.extend((1..left_ep).rev().map(|c| at(c, left.contains(c))));
                    pts.extend([(-off, 0.0), (0.0, -off), (off, 0.0)]);
                    pts.extend((1..right_ep).map(|c| at(c, !right.contains(c))));
                    pts.push((0.0, right_ep as f64));
                    (pts, vec![left_ep - 1, right_ep - 1])
                }
            }
        })
        .collect();
    Layout { glyphs, strokes }
}

/// Stroke segments meeting the glyph box of a point other than their own
/// endpoints.
pub fn glyph_overlaps(l: &Layout) -> Vec<String> {
    let mut out = Vec::new();
    for (s, (pts, own)) in l.strokes.iter().enumerate() {
        for seg in pts.windows(2) {
            for (g, (label, c)) in l.glyphs.iter().enumerate() {
                if !own.contains(&g) && segment_meets_box(seg[0], seg[1], *c, GLYPH) {
                    out.push(format!("stroke {s} meets glyph {label}"));
                }
            }
        }
    }
    out
}

/// Liang–Barsky clipping of a segment against an axis-aligned square.
fn segment_meets_box(p: (f64, f64), q: (f64, f64), c: (f64, f64), r: f64) -> bool {
    let (dx, dy) = (q.0 - p.0, q.1 - p.1);
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    for (delta, lo, hi, start) in [(dx, c.0 - r, c.0 + r, p.0), (dy, c.1 - r, c.1 + r, p.1)] {
        if delta == 0.0 {
            if start < lo || start > hi {
                return false;
            }
            continue;
        }
        let (a, b) = ((lo - start) / delta, (hi - start) / delta);
        t0 = t0.max(a.min(b));
        t1 = t1.min(a.max(b));
        if t0 > t1 {
            return false;
        }
    }
    true
}

struct Frame {
    scale: f64,
    cx: f64,
    cy: f64,
}

impl Frame {
    /// Centres the layout's bounding box on the canvas; output y grows
    /// downward.
    fn new(l: &Layout, spec: &RenderSpec) -> Self {
        let ys = l.glyphs.iter().map(|g| g.1 .1).chain(l.strokes.iter().flat_map(|s| s.0.iter().map(|p| p.1)));
        let (lo, hi) = ys.fold((f64::MAX, f64::MIN), |(a, b), y| (a.min(y), b.max(y)));
        Frame { scale: spec.spacing, cx: spec.width / 2.0, cy: spec.height / 2.0 + (hi + lo) / 2.0 * spec.spacing }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (self.cx + x * self.scale, self.cy - y * self.scale)
    }
}

pub fn render_layout(l: &Layout, spec: &RenderSpec) -> String {
    match spec.format {
        Format::Svg => svg(l, spec),
        Format::Tikz => tikz(l, spec),
        Format::Ascii => ascii(l, spec),
    }
}

pub fn render_b(d: &DiagramB, spec: &RenderSpec) -> String {
    render_layout(&layout_b(d), spec)
}

pub fn render_a(d: &DiagramA, spec: &RenderSpec) -> String {
    render_layout(&layout_a(d), spec)
}

fn svg(l: &Layout, spec: &RenderSpec) -> String {
    let f = Frame::new(l, spec);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"#,
        w = spec.width,
        h = spec.height
    );
    for (pts, _) in &l.strokes {
        let coords: Vec<String> = pts.iter().map(|&p| f.map(p)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let _ = writeln!(s, r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#, coords.join(" "));
    }
    let r = GLYPH * spec.spacing;
    for (label, p) in &l.glyphs {
        let (x, y) = f.map(*p);
        if label == "×" {
            let _ = writeln!(
                s,
                r#"  <path d="M{:.2},{:.2}L{:.2},{:.2}M{:.2},{:.2}L{:.2},{:.2}" stroke="black" stroke-width="2"/>"#,
                x - r,
                y - r,
                x + r,
                y + r,
                x - r,
                y + r,
                x + r,
                y - r
            );
        } else {
            let _ = writeln!(s, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="black"/>"#, r * 0.6);
            let _ = writeln!(
                s,
                r#"  <text x="{:.2}" y="{:.2}" font-size="{:.2}" font-family="sans-serif">{label}</text>"#,
                x + r * 1.2,
                y - r * 1.2,
                r * 2.0
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

fn tikz(l: &Layout, spec: &RenderSpec) -> String {
    let k = spec.spacing;
    let mut s = String::from("\\begin{tikzpicture}\n");
    for (pts, _) in &l.strokes {
        let coords: Vec<String> = pts.iter().map(|(x, y)| format!("({:.3},{:.3})", x * k, y * k)).collect();
        let _ = writeln!(s, "  \\draw[thick] {};", coords.join(" -- "));
    }
    for (label, (x, y)) in &l.glyphs {
        if label == "×" {
            let _ = writeln!(s, "  \\node at ({:.3},{:.3}) {{$\\times$}};", x * k, y * k);
        } else {
            let _ = writeln!(
                s,
                "  \\fill ({:.3},{:.3}) circle[radius={:.3}] node[right=2pt] {{${label}$}};",
                x * k,
                y * k,
                GLYPH * k * 0.6
            );
        }
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

fn ascii(l: &Layout, spec: &RenderSpec) -> String {
    let (w, h) = (spec.width.round().max(1.0) as usize, spec.height.round().max(1.0) as usize);
    let f = Frame::new(l, spec);
    let mut grid = vec![vec![' '; w]; h];
    let put = |x: f64, y: f64, ch: char, grid: &mut Vec<Vec<char>>| {
        let (cx, cy) = (x.round(), y.round());
        if cx >= 0.0 && cy >= 0.0 && (cx as usize) < w && (cy as usize) < h {
            grid[cy as usize][cx as usize] = ch;
        }
    };
    for (pts, _) in &l.strokes {
        for seg in pts.windows(2) {
            let (a, b) = (f.map(seg[0]), f.map(seg[1]));
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            let ch = match (dx.abs() < 1e-9, dy.abs() < 1e-9) {
                (true, _) => '|',
                (_, true) => '-',
                _ if (dx > 0.0) == (dy > 0.0) => '\\',
                _ => '/',
            };
            let steps = dx.abs().max(dy.abs()).ceil().max(1.0) as usize;
            for i in 0..=steps {
                let t = i as f64 / steps as f64;
                put(a.0 + dx * t, a.1 + dy * t, ch, &mut grid);
            }
        }
    }
    for (label, p) in &l.glyphs {
        let (x, y) = f.map(*p);
        let ch = if label == "×" { 'x' } else { 'o' };
        put(x, y, ch, &mut grid);
        for (i, c) in label.chars().filter(|_| label != "×").enumerate() {
            put(x + 1.0 + i as f64, y, c, &mut grid);
        }
    }
    let mut s = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs_a::delta_a;
    use crate::arcs_b::delta_b_orb;
    use crate::pointset::PointSet;
    use crate::weak::{CoxeterElement, Permutation, SignedPermutation};

    #[test]
    fn empty_diagram_draws_points_and_orbifold_point_only() {
        let l = layout_b(&DiagramB::empty(3));
        assert_eq!(l.glyphs.len(), 4);
        assert!(l.strokes.is_empty());
        let svg = render_b(&DiagramB::empty(3), &RenderSpec::default_for(Format::Svg, 3));
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(!svg.contains("<polyline"));
    }

    #[test]
    fn s0_is_a_single_arc_to_the_orbifold_point() {
        let d = delta_b_orb(&SignedPermutation::new(vec![-1, 2]).unwrap());
        let l = layout_b(&d);
        assert_eq!(l.strokes, vec![(vec![(0.0, 1.0), (0.0, 0.0)], vec![0, 2])]);
    }

    #[test]
    fn output_is_deterministic() {
        let d = delta_b_orb(&SignedPermutation::new(vec![3, -1, 2]).unwrap());
        for format in [Format::Svg, Format::Ascii, Format::Tikz] {
            let spec = RenderSpec::default_for(format, 3);
            assert_eq!(render_b(&d, &spec), render_b(&d, &spec));
        }
    }

    #[test]
    fn strokes_avoid_other_glyphs() {
        for n in 1..=6 {
            for pi in SignedPermutation::all(n) {
                let bad = glyph_overlaps(&layout_b(&delta_b_orb(&pi)));
                assert!(bad.is_empty(), "{pi}: {bad:?}");
            }
        }
        for pi in Permutation::all(6) {
            assert!(glyph_overlaps(&layout_a(&delta_a(&pi))).is_empty(), "{pi}");
        }
    }

    #[test]
    fn long_arcs_wrap_below_the_orbifold_point() {
        let d = DiagramB::new(2, [TypeBArc::long(1, 2, PointSet::EMPTY, PointSet::EMPTY).unwrap()]).unwrap();
        let l = layout_b(&d);
        assert!(l.strokes[0].0.iter().any(|p| p.1 < 0.0));
    }

    #[test]
    fn ascii_marks_points() {
        let d = delta_b_orb(&SignedPermutation::new(vec![2, -1]).unwrap());
        let out = render_b(&d, &RenderSpec::default_for(Format::Ascii, 2));
        assert_eq!(out.matches('o').count(), 2);
        assert!(out.contains('x'));
        assert!(RenderSpec::new(Format::Ascii, 0.0, 3.0, 1.0).is_err());
    }
}
