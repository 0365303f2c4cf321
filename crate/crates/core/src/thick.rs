//! Thick subcategories, named by non-exhaustive non-crossing partitions.
//!
//! The partition `P` names the additive closure of all arcs whose two
//! endpoints lie in the union of the intervals of a single block of `P`.

use serde::{Deserialize, Serialize};

use crate::circle::Arc;
use crate::error::Result;
use crate::noncrossing::{noncrossing_closure, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThickSubcat {
    pub partition: Partition,
}

impl ThickSubcat {
    pub fn new(partition: Partition) -> Self {
        Self { partition }
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn contains(&self, a: &Arc) -> bool {
        thick_contains(self, a)
    }
}

pub fn thick_contains(t: &ThickSubcat, a: &Arc) -> bool {
    let (i, j) = a.intervals();
    t.partition.same_block(i, j)
}

/// Smallest thick subcategory containing `arcs`: the intervals touched by an
/// arc, grouped by the arcs joining them, with crossing groups merged.
pub fn thick_generated(arcs: &[Arc], n: usize) -> ThickSubcat {
    let pairs: Vec<(usize, usize)> = arcs.iter().map(Arc::intervals).collect();
    let blocks = noncrossing_closure(n, std::iter::empty(), pairs);
    ThickSubcat::new(Partition::from_canonical(n, blocks))
}

pub fn thick_leq(a: &ThickSubcat, b: &ThickSubcat) -> Result<bool> {
    a.partition.leq(&b.partition)
}

pub fn thick_meet(a: &ThickSubcat, b: &ThickSubcat) -> Result<ThickSubcat> {
    a.partition.meet(&b.partition).map(ThickSubcat::new)
}

pub fn thick_join(a: &ThickSubcat, b: &ThickSubcat) -> Result<ThickSubcat> {
    a.partition.join(&b.partition).map(ThickSubcat::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::parse_arc_list;

    fn thick(n: usize, s: &str) -> ThickSubcat {
        ThickSubcat::new(Partition::parse_compact(n, s).unwrap())
    }

    fn arc(s: &str) -> Arc {
        s.parse().unwrap()
    }

    #[test]
    fn membership() {
        let t = thick(6, "1,3|4,5,6");
        assert!(thick_contains(&t, &arc("[1:2,3:0]")));
        assert!(!thick_contains(&t, &arc("[1:2,2:0]")));
        assert!(thick_contains(&t, &arc("[4:0,4:7]")));
        assert!(!thick_contains(&t, &arc("[2:0,2:7]")));
    }

    #[test]
    fn generated() {
        assert_eq!(
            thick_generated(&parse_arc_list("[1:0,3:0]").unwrap(), 4),
            thick(4, "1,3")
        );
        assert_eq!(
            thick_generated(&parse_arc_list("[1:0,3:0];[2:0,4:0]").unwrap(), 4),
            thick(4, "1,2,3,4")
        );
        assert_eq!(thick_generated(&[], 4), thick(4, ""));
        assert_eq!(
            thick_generated(&parse_arc_list("[2:0,2:5]").unwrap(), 3),
            thick(3, "2")
        );
    }

    #[test]
    fn lattice_transport() {
        assert_eq!(
            thick_meet(&thick(3, "1,3"), &thick(3, "1,2")).unwrap(),
            thick(3, "1")
        );
        assert!(thick_leq(&thick(4, ""), &thick(4, "1,2|3")).unwrap());
        assert_eq!(
            thick_join(&thick(4, "1"), &thick(4, "3")).unwrap(),
            thick(4, "1|3")
        );
    }

    #[test]
    fn json_shape() {
        let t = thick(4, "1,3");
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"n":4,"blocks":[[1,3]]}"#
        );
    }
}
