//! SVG chord diagrams of arcs, thick subcategories, aisles and coaisles.
//!
//! Limit point `a_i` sits at angle `(i - 1) 2π / n`, measured anticlockwise.
//! The marked point of offset `k` in interval `i` sits at fraction
//! `1 / (1 + e^{-k/3})` of the sector from `a_i` to `a_{i+1}`. All numbers are
//! printed with three decimals so the output bytes depend only on the input.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::circle::{Arc, CircleModel, MarkedPoint};
use crate::error::{Error, Result};
use crate::lattice::HasseGraph;
use crate::thick::ThickSubcat;
use crate::tstructure::{coaisle_presentation, DecorationLevel, TStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RenderFormat {
    Svg,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub format: RenderFormat,
    /// Label limit points and decoration points.
    pub annotate: bool,
    /// Width and height in pixels.
    pub size: u32,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            format: RenderFormat::Svg,
            annotate: true,
            size: 400,
        }
    }
}

pub enum RenderObject<'a> {
    Arcs { n: usize, arcs: &'a [Arc] },
    Thick(&'a ThickSubcat),
    Aisle(&'a TStructure),
    Coaisle(&'a TStructure),
    Hasse(&'a HasseGraph),
}

/// A shaded piece: offsets of one interval between two bounds, `None`
/// meaning the limit point on that side.
#[derive(Debug, Clone, Copy)]
struct Piece {
    interval: usize,
    from: Option<i64>,
    to: Option<i64>,
}

struct Canvas {
    n: usize,
    size: f64,
    out: String,
}

fn fraction(k: i64) -> f64 {
    1.0 / (1.0 + (-(k as f64) / 3.0).exp())
}

impl Canvas {
    fn new(n: usize, size: u32) -> Self {
        let s = f64::from(size);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
        );
        let _ = writeln!(
            out,
            "<rect width=\"{size}\" height=\"{size}\" fill=\"white\"/>"
        );
        Self { n, size: s, out }
    }

    fn radius(&self) -> f64 {
        self.size * 0.4
    }

    fn sector(&self) -> f64 {
        TAU / self.n as f64
    }

    fn limit_angle(&self, i: usize) -> f64 {
        (i - 1) as f64 * self.sector()
    }

    fn point_angle(&self, interval: usize, offset: Option<i64>, upper: bool) -> f64 {
        let base = self.limit_angle(interval);
        match offset {
            Some(k) => base + fraction(k) * self.sector(),
            None if upper => base + self.sector(),
            None => base,
        }
    }

    fn xy(&self, angle: f64, r: f64) -> (f64, f64) {
        let c = self.size / 2.0;
        (c + r * angle.cos(), c - r * angle.sin())
    }

    fn marked_xy(&self, p: MarkedPoint) -> (f64, f64) {
        self.xy(
            self.point_angle(p.interval, Some(p.offset), false),
            self.radius(),
        )
    }

    fn circle(&mut self, annotate: bool) {
        let c = self.size / 2.0;
        let r = self.radius();
        let _ = writeln!(
            self.out,
            "<circle cx=\"{c:.3}\" cy=\"{c:.3}\" r=\"{r:.3}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.000\"/>"
        );
        for i in 1..=self.n {
            let (x, y) = self.xy(self.limit_angle(i), r);
            let _ = writeln!(
                self.out,
                "<circle class=\"limit\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4.000\" fill=\"white\" stroke=\"black\" stroke-width=\"1.000\"/>"
            );
            if annotate {
                let (lx, ly) = self.xy(self.limit_angle(i), r + 16.0);
                let _ = writeln!(
                    self.out,
                    "<text x=\"{lx:.3}\" y=\"{ly:.3}\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">a{i}</text>"
                );
            }
        }
    }

    fn tick(&mut self, p: MarkedPoint, label: bool) {
        let angle = self.point_angle(p.interval, Some(p.offset), false);
        let r = self.radius();
        let (x0, y0) = self.xy(angle, r - 5.0);
        let (x1, y1) = self.xy(angle, r + 5.0);
        let _ = writeln!(
            self.out,
            "<line class=\"tick\" x1=\"{x0:.3}\" y1=\"{y0:.3}\" x2=\"{x1:.3}\" y2=\"{y1:.3}\" stroke=\"black\" stroke-width=\"1.000\"/>"
        );
        if label {
            let (lx, ly) = self.xy(angle, r + 28.0);
            let _ = writeln!(
                self.out,
                "<text x=\"{lx:.3}\" y=\"{ly:.3}\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">{p}</text>"
            );
        }
    }

    fn chord(&mut self, a: &Arc) {
        let (x0, y0) = self.marked_xy(a.lo());
        let (x1, y1) = self.marked_xy(a.hi());
        let _ = writeln!(
            self.out,
            "<line class=\"arc\" x1=\"{x0:.3}\" y1=\"{y0:.3}\" x2=\"{x1:.3}\" y2=\"{y1:.3}\" stroke=\"steelblue\" stroke-width=\"1.500\"/>"
        );
        self.tick(a.lo(), false);
        self.tick(a.hi(), false);
    }

    /// One closed path: circle pieces joined by chords.
    fn region(&mut self, pieces: &[Piece]) {
        let r = self.radius();
        let mut d = String::new();
        for (idx, piece) in pieces.iter().enumerate() {
            let start = self.point_angle(piece.interval, piece.from, false);
            let end = self.point_angle(piece.interval, piece.to, true);
            let (x0, y0) = self.xy(start, r);
            let (x1, y1) = self.xy(end, r);
            let cmd = if idx == 0 { 'M' } else { 'L' };
            let _ = write!(
                d,
                "{cmd} {x0:.3} {y0:.3} A {r:.3} {r:.3} 0 0 0 {x1:.3} {y1:.3} "
            );
        }
        d.push('Z');
        let _ = writeln!(
            self.out,
            "<path class=\"region\" d=\"{d}\" fill=\"lightgrey\" fill-opacity=\"0.700\" stroke=\"grey\" stroke-width=\"1.000\"/>"
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

/// Pieces of `(a_i, x_i]` for the intervals of one block.
fn aisle_pieces(ts: &TStructure, block: &[usize]) -> Vec<Piece> {
    block
        .iter()
        .filter_map(|&i| match ts.level(i) {
            DecorationLevel::Bottom => None,
            DecorationLevel::At(k) => Some(Piece {
                interval: i,
                from: None,
                to: Some(k),
            }),
            DecorationLevel::Top => Some(Piece {
                interval: i,
                from: None,
                to: None,
            }),
        })
        .collect()
}

/// Pieces of `[y_i, a_{i+1})` for the intervals of one Kreweras block.
fn coaisle_pieces(ts: &TStructure, block: &[usize]) -> Vec<Piece> {
    block
        .iter()
        .filter_map(|&i| match ts.level(i) {
            DecorationLevel::Bottom => Some(Piece {
                interval: i,
                from: None,
                to: None,
            }),
            DecorationLevel::At(k) => Some(Piece {
                interval: i,
                from: Some(k - 1),
                to: None,
            }),
            DecorationLevel::Top => None,
        })
        .collect()
}

/// Number of shaded regions `render_svg` draws for `object`.
pub fn shaded_region_count(object: &RenderObject<'_>) -> usize {
    match object {
        RenderObject::Arcs { .. } | RenderObject::Hasse(_) => 0,
        RenderObject::Thick(t) => t.partition.blocks().len(),
        RenderObject::Aisle(ts) => ts
            .partition()
            .blocks()
            .iter()
            .filter(|b| !aisle_pieces(ts, b).is_empty())
            .count(),
        RenderObject::Coaisle(ts) => coaisle_presentation(ts)
            .partition
            .blocks()
            .iter()
            .filter(|b| !coaisle_pieces(ts, b).is_empty())
            .count(),
    }
}

pub fn render_svg(object: &RenderObject<'_>, spec: &RenderSpec) -> Result<String> {
    let n = match object {
        RenderObject::Arcs { n, .. } => *n,
        RenderObject::Thick(t) => t.n(),
        RenderObject::Aisle(ts) | RenderObject::Coaisle(ts) => ts.n(),
        RenderObject::Hasse(_) => {
            return Err(Error::PreconditionViolated(
                "Hasse diagrams render as dot or json".into(),
            ))
        }
    };
    let model = CircleModel::new(n)?;
    let mut canvas = Canvas::new(n, spec.size);
    match object {
        RenderObject::Thick(t) => {
            for b in t.partition.blocks() {
                let pieces: Vec<Piece> = b
                    .iter()
                    .map(|&i| Piece {
                        interval: i,
                        from: None,
                        to: None,
                    })
                    .collect();
                canvas.region(&pieces);
            }
        }
        RenderObject::Aisle(ts) => {
            for b in ts.partition().blocks() {
                let pieces = aisle_pieces(ts, b);
                if !pieces.is_empty() {
                    canvas.region(&pieces);
                }
            }
        }
        RenderObject::Coaisle(ts) => {
            for b in coaisle_presentation(ts).partition.blocks() {
                let pieces = coaisle_pieces(ts, b);
                if !pieces.is_empty() {
                    canvas.region(&pieces);
                }
            }
        }
        RenderObject::Arcs { .. } | RenderObject::Hasse(_) => {}
    }
    canvas.circle(spec.annotate);
    match object {
        RenderObject::Arcs { arcs, .. } => {
            for a in arcs.iter() {
                model.check_arc(a)?;
                canvas.chord(a);
            }
        }
        RenderObject::Aisle(ts) | RenderObject::Coaisle(ts) => {
            for i in 1..=n {
                if let DecorationLevel::At(k) = ts.level(i) {
                    canvas.tick(MarkedPoint::new(i, k), spec.annotate);
                }
            }
        }
        RenderObject::Thick(_) | RenderObject::Hasse(_) => {}
    }
    Ok(canvas.finish())
}

/// Renders `object` in the format of `spec`.
pub fn render(object: &RenderObject<'_>, spec: &RenderSpec) -> Result<String> {
    let unsupported = |what: &str| {
        Err(Error::PreconditionViolated(format!(
            "cannot render {what} as {:?}",
            spec.format
        )))
    };
    match (spec.format, object) {
        (RenderFormat::Svg, _) => render_svg(object, spec),
        (RenderFormat::Dot, RenderObject::Hasse(g)) => Ok(g.to_dot()),
        (RenderFormat::Dot, _) => unsupported("a disc diagram"),
        (RenderFormat::Json, RenderObject::Hasse(g)) => to_json(g),
        (RenderFormat::Json, RenderObject::Arcs { arcs, .. }) => to_json(arcs),
        (RenderFormat::Json, RenderObject::Thick(t)) => to_json(t),
        (RenderFormat::Json, RenderObject::Aisle(ts)) => to_json(ts),
        (RenderFormat::Json, RenderObject::Coaisle(ts)) => to_json(&coaisle_presentation(ts)),
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six_point_ts() -> TStructure {
        "1,3|2|4,5,6; 1:0,a2,3:0,4:0,a6,6:0".parse().unwrap()
    }

    #[test]
    fn region_counts() {
        let ts = six_point_ts();
        assert_eq!(shaded_region_count(&RenderObject::Aisle(&ts)), 2);
        assert_eq!(shaded_region_count(&RenderObject::Coaisle(&ts)), 3);
        let svg = render_svg(&RenderObject::Aisle(&ts), &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("class=\"region\"").count(), 2);
        let svg = render_svg(&RenderObject::Coaisle(&ts), &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("class=\"region\"").count(), 3);
    }

    #[test]
    fn empty_object_shows_only_limit_points() {
        let svg = render_svg(
            &RenderObject::Arcs { n: 4, arcs: &[] },
            &RenderSpec::default(),
        )
        .unwrap();
        assert_eq!(svg.matches("class=\"limit\"").count(), 4);
        assert!(!svg.contains("class=\"arc\""));
        assert!(!svg.contains("class=\"region\""));
    }

    #[test]
    fn output_is_deterministic() {
        let ts = six_point_ts();
        let spec = RenderSpec::default();
        assert_eq!(
            render(&RenderObject::Aisle(&ts), &spec).unwrap(),
            render(&RenderObject::Aisle(&ts), &spec).unwrap()
        );
    }

    #[test]
    fn unsupported_pairs_are_rejected() {
        let spec = RenderSpec {
            format: RenderFormat::Dot,
            ..RenderSpec::default()
        };
        assert!(render(&RenderObject::Arcs { n: 2, arcs: &[] }, &spec).is_err());
    }
}
