//! Static SVG rendering of three-vertex arrangements.
//!
//! Hyperplanes are drawn as lines in the plane `x_1 + x_2 + x_3 = const`
//! under a fixed orthonormal projection; the origin is marked, and region
//! labels can be placed at the witness points. Coordinates are converted to
//! floating point for display only; everything upstream stays exact.

use std::fmt;

use num::ToPrimitive;
use parkplane::regions::enumerate_regions_with_limit;
use parkplane::types::{Arrangement, Point};

#[derive(Debug)]
pub enum PlotError {
    UnsupportedDimension(usize),
    Lib(parkplane::Error),
}

impl fmt::Display for PlotError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlotError::UnsupportedDimension(n) => {
                write!(f, "plotting needs exactly 3 vertices, got {n}")
            }
            PlotError::Lib(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for PlotError {}

impl From<parkplane::Error> for PlotError {
    fn from(err: parkplane::Error) -> PlotError {
        PlotError::Lib(err)
    }
}

/// 2D normal of the hyperplane family `(p, q)` under the projection
/// `X = (x1 - x2) / sqrt(2)`, `Y = (x1 + x2 - 2 x3) / sqrt(6)`:
/// the line of `(p, q, a)` is `{P : normal . P = a}`.
fn pair_normal(p: usize, q: usize) -> (f64, f64) {
    let sqrt2 = 2f64.sqrt();
    let sqrt6 = 6f64.sqrt();
    let base = |p: usize, q: usize| -> (f64, f64) {
        match (p, q) {
            (1, 2) => (sqrt2, 0.0),
            (2, 3) => (-1.0 / sqrt2, 3.0 / sqrt6),
            (1, 3) => (1.0 / sqrt2, 3.0 / sqrt6),
            _ => unreachable!("normalized to p < q"),
        }
    };
    if p < q {
        base(p, q)
    } else {
        let (x, y) = base(q, p);
        (-x, -y)
    }
}

fn project(point: &Point) -> (f64, f64) {
    let coord = |i: usize| point.coord(i).to_f64().expect("desk-scale rational");
    let (x1, x2, x3) = (coord(1), coord(2), coord(3));
    (
        (x1 - x2) / 2f64.sqrt(),
        (x1 + x2 - 2.0 * x3) / 6f64.sqrt(),
    )
}

struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Bounds {
    fn cover(points: &[(f64, f64)]) -> Bounds {
        let mut b = Bounds {
            min_x: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            min_y: f64::INFINITY,
            max_y: f64::NEG_INFINITY,
        };
        for &(x, y) in points {
            b.min_x = b.min_x.min(x);
            b.max_x = b.max_x.max(x);
            b.min_y = b.min_y.min(y);
            b.max_y = b.max_y.max(y);
        }
        let pad = (0.25 * (b.max_x - b.min_x).max(b.max_y - b.min_y)).max(1.0);
        b.min_x -= pad;
        b.max_x += pad;
        b.min_y -= pad;
        b.max_y += pad;
        b
    }

    fn span(&self) -> f64 {
        (self.max_x - self.min_x).max(self.max_y - self.min_y)
    }
}

/// Clips the line `{base + t * dir}` to the bounds, returning segment
/// endpoints when the line meets the box.
fn clip_line(base: (f64, f64), dir: (f64, f64), b: &Bounds) -> Option<((f64, f64), (f64, f64))> {
    let mut t_min = f64::NEG_INFINITY;
    let mut t_max = f64::INFINITY;
    let checks = [
        (dir.0, b.min_x - base.0, b.max_x - base.0),
        (dir.1, b.min_y - base.1, b.max_y - base.1),
    ];
    for (d, low, high) in checks {
        if d.abs() < 1e-12 {
            if low > 0.0 || high < 0.0 {
                return None;
            }
            continue;
        }
        let (t0, t1) = (low / d, high / d);
        let (t0, t1) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        t_min = t_min.max(t0);
        t_max = t_max.min(t1);
    }
    if t_min >= t_max {
        return None;
    }
    Some((
        (base.0 + t_min * dir.0, base.1 + t_min * dir.1),
        (base.0 + t_max * dir.0, base.1 + t_max * dir.1),
    ))
}

/// Renders the arrangement as an SVG document. Only `n = 3` is supported.
pub fn plot_svg(
    arr: &Arrangement,
    with_labels: bool,
    max_hyperplanes: usize,
) -> Result<String, PlotError> {
    if arr.n() != 3 {
        return Err(PlotError::UnsupportedDimension(arr.n()));
    }

    let lines: Vec<((f64, f64), f64)> = arr
        .hyperplanes()
        .iter()
        .map(|h| {
            let normal = pair_normal(h.p(), h.q());
            let a = h.constant().to_f64().expect("desk-scale rational");
            (normal, a)
        })
        .collect();

    let labels: Vec<(String, (f64, f64))> = if with_labels {
        enumerate_regions_with_limit(arr, max_hyperplanes)?
            .iter()
            .map(|r| (r.label().to_string(), project(r.witness())))
            .collect()
    } else {
        Vec::new()
    };

    // Cover the origin, each line's closest point to the origin, all pairwise
    // line intersections, and any label anchors.
    let mut anchors = vec![(0.0, 0.0)];
    for &((nx, ny), a) in &lines {
        let norm2 = nx * nx + ny * ny;
        anchors.push((nx * a / norm2, ny * a / norm2));
    }
    for (i, &((nx1, ny1), a1)) in lines.iter().enumerate() {
        for &((nx2, ny2), a2) in lines.iter().skip(i + 1) {
            let det = nx1 * ny2 - nx2 * ny1;
            if det.abs() > 1e-9 {
                anchors.push(((a1 * ny2 - a2 * ny1) / det, (nx1 * a2 - nx2 * a1) / det));
            }
        }
    }
    anchors.extend(labels.iter().map(|(_, at)| *at));
    let bounds = Bounds::cover(&anchors);

    let span = bounds.span();
    let stroke = span / 400.0;
    let font = span / 28.0;
    let dot = span / 120.0;

    // SVG y grows downward; math y is negated on output.
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.4} {:.4} {:.4} {:.4}\">\n",
        bounds.min_x,
        -bounds.max_y,
        bounds.max_x - bounds.min_x,
        bounds.max_y - bounds.min_y
    ));

    for &((nx, ny), a) in &lines {
        let norm2 = nx * nx + ny * ny;
        let base = (nx * a / norm2, ny * a / norm2);
        let dir = (-ny, nx);
        if let Some(((x1, y1), (x2, y2))) = clip_line(base, dir, &bounds) {
            svg.push_str(&format!(
                "  <line x1=\"{x1:.4}\" y1=\"{:.4}\" x2=\"{x2:.4}\" y2=\"{:.4}\" stroke=\"#222222\" stroke-width=\"{stroke:.4}\"/>\n",
                -y1, -y2
            ));
        }
    }

    svg.push_str(&format!(
        "  <circle cx=\"0\" cy=\"0\" r=\"{dot:.4}\" fill=\"#000000\"/>\n"
    ));

    for (text, (x, y)) in &labels {
        svg.push_str(&format!(
            "  <text x=\"{x:.4}\" y=\"{:.4}\" font-size=\"{font:.4}\" text-anchor=\"middle\" font-family=\"sans-serif\">{text}</text>\n",
            -y
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use parkplane::factory::k_shi;
    use parkplane::types::Arrangement;

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    #[test]
    fn shi_plot_has_all_lines_and_labels() {
        let arr = k_shi(3, 1).unwrap();
        let svg = plot_svg(&arr, true, 64).unwrap();
        assert_eq!(count(&svg, "<line "), 6);
        assert_eq!(count(&svg, "<text "), 16);
        assert_eq!(count(&svg, "<circle "), 1);
    }

    #[test]
    fn empty_arrangement_plot() {
        let arr = Arrangement::new(3, Vec::new()).unwrap();
        let svg = plot_svg(&arr, true, 64).unwrap();
        assert_eq!(count(&svg, "<line "), 0);
        assert_eq!(count(&svg, "<text "), 1);
        assert!(svg.contains(">000</text>"));
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        let arr = Arrangement::new(2, Vec::new()).unwrap();
        assert!(matches!(
            plot_svg(&arr, false, 64),
            Err(PlotError::UnsupportedDimension(2))
        ));
    }

    #[test]
    fn plot_is_byte_stable() {
        let arr = k_shi(3, 1).unwrap();
        assert_eq!(
            plot_svg(&arr, true, 64).unwrap(),
            plot_svg(&arr, true, 64).unwrap()
        );
    }
}
