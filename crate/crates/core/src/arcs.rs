//! Objects of the cluster category as finite multisets of arcs, together with
//! suspension, Hom dimensions, factorization and the two triangle
//! constructions used throughout: the extension triangle of two crossing arcs
//! and the zig-zag cone of an arc against a fan of parallel arcs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circle::{
    cyclic_lt3, make_arc, Arc, ArcOrZero, CirclePoint, HalfOpenRegion, MarkedPoint,
};
use crate::error::{Error, Result};

/// Isomorphism class of an object: a sorted multiset of arcs. The empty
/// multiset is the zero object.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Arc>", into = "Vec<Arc>")]
pub struct ArcObject {
    summands: Vec<Arc>,
}

impl ArcObject {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(summands: impl IntoIterator<Item = Arc>) -> Self {
        let mut summands: Vec<Arc> = summands.into_iter().collect();
        summands.sort();
        Self { summands }
    }

    /// Drops the zero pieces.
    pub fn from_pieces(pieces: impl IntoIterator<Item = ArcOrZero>) -> Self {
        Self::new(pieces.into_iter().filter_map(ArcOrZero::arc))
    }

    pub fn single(a: Arc) -> Self {
        Self { summands: vec![a] }
    }

    pub fn summands(&self) -> &[Arc] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn direct_sum(&self, other: &ArcObject) -> ArcObject {
        ArcObject::new(self.summands.iter().chain(&other.summands).copied())
    }

    /// Sorted multiset of all endpoints of all summands.
    pub fn endpoints(&self) -> Vec<MarkedPoint> {
        let mut pts: Vec<MarkedPoint> = self.summands.iter().flat_map(Arc::endpoints).collect();
        pts.sort();
        pts
    }

    pub fn suspend(&self, m: i64) -> ArcObject {
        ArcObject::new(self.summands.iter().map(|a| a.suspend(m)))
    }
}

impl From<Vec<Arc>> for ArcObject {
    fn from(v: Vec<Arc>) -> Self {
        ArcObject::new(v)
    }
}

impl From<ArcObject> for Vec<Arc> {
    fn from(o: ArcObject) -> Self {
        o.summands
    }
}

impl fmt::Display for ArcObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (idx, a) in self.summands.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construction {
    Extension,
    ZigZag,
    Approximation,
}

/// A distinguished triangle `first -> middle -> last -> Σ first`, recorded as
/// a certificate of the construction that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub first: ArcObject,
    pub middle: ArcObject,
    pub last: ArcObject,
    pub construction: Construction,
}

impl Triangle {
    /// Every endpoint of the middle term is an endpoint of an outer term.
    pub fn endpoint_containment(&self) -> bool {
        let outer = self.first.direct_sum(&self.last).endpoints();
        self.middle
            .endpoints()
            .iter()
            .all(|p| outer.binary_search(p).is_ok())
    }

    /// Endpoints of the middle term equal those of the outer terms as
    /// multisets.
    pub fn endpoint_multiset_identity(&self) -> bool {
        self.middle.endpoints() == self.first.direct_sum(&self.last).endpoints()
    }
}

pub fn suspend(obj: &ArcObject, m: i64) -> ArcObject {
    obj.suspend(m)
}

/// `dim Hom(X, Y)`: one when `X` crosses `Σ^{-1} Y`, zero otherwise.
pub fn hom_dim(x: &Arc, y: &Arc) -> u32 {
    u32::from(x.crosses(&y.suspend(-1)))
}

/// Labels `(y0, y1, y0', y1')` with `y0 < y0'^+ < y1 < y1'^+`, if a non-zero
/// morphism `X -> Y` exists.
fn morphism_labeling(x: &Arc, y: &Arc) -> Option<[MarkedPoint; 4]> {
    for (y0, y1) in [(x.lo(), x.hi()), (x.hi(), x.lo())] {
        for (z0, z1) in [(y.lo(), y.hi()), (y.hi(), y.lo())] {
            let (p0, p1) = (CirclePoint::from(z0.succ()), CirclePoint::from(z1.succ()));
            let (q0, q1) = (CirclePoint::from(y0), CirclePoint::from(y1));
            if cyclic_lt3(q0, p0, q1) && cyclic_lt3(q1, p1, q0) {
                return Some([y0, y1, z0, z1]);
            }
        }
    }
    None
}

/// Whether the non-zero morphism `X -> Y` factors through the indecomposable
/// `S`.
pub fn factors_through(x: &Arc, y: &Arc, s: &Arc) -> Result<bool> {
    let [y0, y1, z0, z1] = morphism_labeling(x, y)
        .ok_or_else(|| Error::NoNonzeroMorphism(x.to_string(), y.to_string()))?;
    let first = HalfOpenRegion::closed(y0.into(), z0.into());
    let second = HalfOpenRegion::closed(y1.into(), z1.into());
    let fits =
        |s0: MarkedPoint, s1: MarkedPoint| first.contains(s0.into()) && second.contains(s1.into());
    Ok(fits(s.lo(), s.hi()) || fits(s.hi(), s.lo()))
}

/// The extension triangle `Y' -> X ⊕ Z -> Y -> Σ Y'` of two crossing arcs,
/// where `X = {y0, y0'}` and `Z = {y1, y1'}` for `y0 < y0' < y1 < y1'`.
/// Trivial chords are dropped.
pub fn cocone_of_crossing(y_prime: &Arc, y: &Arc) -> Result<Triangle> {
    if !y.crosses(y_prime) {
        return Err(Error::NotCrossing(y_prime.to_string(), y.to_string()));
    }
    let (y0, y1) = (y.lo(), y.hi());
    let inside = |p: MarkedPoint| y0 < p && p < y1;
    let (z0, z1) = if inside(y_prime.lo()) {
        (y_prime.lo(), y_prime.hi())
    } else {
        (y_prime.hi(), y_prime.lo())
    };
    Ok(Triangle {
        first: ArcObject::single(*y_prime),
        middle: ArcObject::from_pieces([make_arc(y0, z0), make_arc(y1, z1)]),
        last: ArcObject::single(*y),
        construction: Construction::Extension,
    })
}

/// The triangle `X -> C -> ⊕ Y_j -> Σ X` for mutually non-crossing arcs
/// `Y_j` that all cross `X`.
///
/// With `X = {x, x'}` and `x < y'_1 < ... < y'_m < x' < y_m < ... < y_1 < x`,
/// `C` is the sum of `{x, y_1}, {y'_1, y_2}, ..., {y'_m, x'}` minus trivial
/// pieces. An empty fan gives `C = X`.
pub fn zigzag_cone(x: &Arc, ys: &[Arc]) -> Result<Triangle> {
    for (idx, y) in ys.iter().enumerate() {
        if !y.crosses(x) {
            return Err(Error::PreconditionViolated(format!(
                "{y} does not cross {x}"
            )));
        }
        for other in &ys[idx + 1..] {
            if other == y {
                return Err(Error::PreconditionViolated(format!("{y} occurs twice")));
            }
            if other.crosses(y) {
                return Err(Error::PreconditionViolated(format!("{y} crosses {other}")));
            }
        }
    }
    let (start, end) = (x.lo(), x.hi());
    // (y'_j, y_j) with y'_j on the anticlockwise side from x to x'
    let mut fan: Vec<(MarkedPoint, MarkedPoint)> = ys
        .iter()
        .map(|y| {
            if start < y.lo() && y.lo() < end {
                (y.lo(), y.hi())
            } else {
                (y.hi(), y.lo())
            }
        })
        .collect();
    fan.sort();

    let mut pieces = Vec::with_capacity(fan.len() + 1);
    let mut left = start;
    for &(y_near, y_far) in &fan {
        pieces.push(make_arc(left, y_far));
        left = y_near;
    }
    pieces.push(make_arc(left, end));

    Ok(Triangle {
        first: ArcObject::single(*x),
        middle: ArcObject::from_pieces(pieces),
        last: ArcObject::new(ys.iter().copied()),
        construction: Construction::ZigZag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(s: &str) -> Arc {
        s.parse().unwrap()
    }

    fn obj(list: &[&str]) -> ArcObject {
        ArcObject::new(list.iter().map(|s| arc(s)))
    }

    #[test]
    fn suspension_examples() {
        assert_eq!(suspend(&obj(&["[1:0,2:3]"]), 1), obj(&["[1:-1,2:2]"]));
        let o = obj(&["[1:0,2:3]", "[1:4,1:9]"]);
        assert_eq!(suspend(&o, 0), o);
        assert_eq!(suspend(&obj(&["[1:0,2:0]"]), -2), obj(&["[1:2,2:2]"]));
        assert_eq!(suspend(&suspend(&o, 5), -5), o);
    }

    #[test]
    fn hom_examples() {
        let x = arc("[1:0,2:0]");
        let x2 = arc("[1:1,2:2]");
        assert!(x.crosses(&x2));
        assert_eq!(hom_dim(&x, &x2.suspend(1)), 1);
        assert_eq!(hom_dim(&x, &arc("[1:5,1:9]").suspend(1)), 0);
        // X crosses ΣX, so Hom(X, Σ²X) is one-dimensional while Ext¹(X, X) = 0
        assert!(x.crosses(&x.suspend(1)));
        assert_eq!(hom_dim(&x, &x.suspend(2)), 1);
        assert_eq!(hom_dim(&x, &x.suspend(1)), 0);
        // identity
        assert_eq!(hom_dim(&x, &x), 1);
        assert_eq!(hom_dim(&arc("[1:0,1:2]"), &arc("[1:0,1:2]")), 1);
    }

    #[test]
    fn factorization_examples() {
        let x = arc("[1:0,2:0]");
        let y = arc("[1:2,2:3]");
        assert_eq!(factors_through(&x, &y, &x), Ok(true));
        assert_eq!(factors_through(&x, &y, &arc("[1:1,2:1]")), Ok(true));
        assert_eq!(factors_through(&x, &y, &arc("[1:3,2:1]")), Ok(false));
        assert_eq!(factors_through(&x, &y, &y), Ok(true));
        assert!(matches!(
            factors_through(&x, &arc("[1:5,1:9]"), &x),
            Err(Error::NoNonzeroMorphism(..))
        ));
    }

    #[test]
    fn extension_triangle_examples() {
        let y = arc("[1:0,2:0]");
        let t = cocone_of_crossing(&arc("[1:2,2:3]"), &y).unwrap();
        assert_eq!(t.middle, obj(&["[1:0,1:2]", "[2:0,2:3]"]));
        assert!(t.endpoint_multiset_identity());

        let t = cocone_of_crossing(&arc("[1:1,2:1]"), &y).unwrap();
        assert!(t.middle.is_zero());

        let t = cocone_of_crossing(&arc("[1:1,2:3]"), &y).unwrap();
        assert_eq!(t.middle, obj(&["[2:0,2:3]"]));
        assert!(t.endpoint_containment());

        assert!(matches!(
            cocone_of_crossing(&arc("[1:1,1:3]"), &y),
            Err(Error::NotCrossing(..))
        ));
    }

    #[test]
    fn zigzag_examples() {
        let x = arc("[1:0,2:0]");
        let t = zigzag_cone(&x, &[arc("[1:5,2:5]")]).unwrap();
        assert_eq!(t.middle, obj(&["[1:0,2:5]", "[1:5,2:0]"]));

        let t = zigzag_cone(&x, &[arc("[1:3,2:8]"), arc("[1:6,2:4]")]).unwrap();
        assert_eq!(t.middle, obj(&["[1:0,2:8]", "[1:3,2:4]", "[1:6,2:0]"]));
        assert!(t.endpoint_multiset_identity());
        // input order does not matter
        let t2 = zigzag_cone(&x, &[arc("[1:6,2:4]"), arc("[1:3,2:8]")]).unwrap();
        assert_eq!(t, t2);

        let t = zigzag_cone(&x, &[arc("[1:1,1:-1]")]).unwrap();
        assert_eq!(t.middle, obj(&["[1:1,2:0]"]));
        assert!(t.endpoint_containment());

        assert!(zigzag_cone(&x, &[]).unwrap().middle == ArcObject::single(x));
    }

    #[test]
    fn zigzag_rejects_bad_fans() {
        let x = arc("[1:0,2:0]");
        let crossing_pair = [arc("[1:3,2:4]"), arc("[1:6,2:8]")];
        assert!(crossing_pair[0].crosses(&crossing_pair[1]));
        assert!(matches!(
            zigzag_cone(&x, &crossing_pair),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(zigzag_cone(&x, &[arc("[1:3,1:6]")]).is_err());
        assert!(zigzag_cone(&x, &[arc("[1:3,2:4]"), arc("[1:3,2:4]")]).is_err());
    }

    #[test]
    fn zigzag_with_one_arc_is_the_extension_triangle() {
        let x = arc("[1:0,2:0]");
        for y in ["[1:5,2:5]", "[1:1,2:3]", "[1:2,1:-2]", "[2:-1,2:4]"] {
            let y = arc(y);
            let zig = zigzag_cone(&x, &[y]).unwrap();
            let ext = cocone_of_crossing(&x, &y).unwrap();
            assert_eq!(zig.middle, ext.middle, "{y}");
        }
    }

    #[test]
    fn json_shapes() {
        let t = cocone_of_crossing(&arc("[1:2,2:3]"), &arc("[1:0,2:0]")).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"first":["[1:2,2:3]"],"middle":["[1:0,1:2]","[2:0,2:3]"],"last":["[1:0,2:0]"],"construction":"Extension"}"#
        );
        let back: Triangle = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}
