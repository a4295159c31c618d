//! Pointed view of a valued quiver: labels `(m, m)` expand into `m`
//! parallel arrows, and comodules become nilpotent representations.

use crate::quiver::{ValuedQuiver, VertexId};
use crate::rep::RepError;
use std::rc::Rc;

/// One arrow of the pointed expansion; `copy` distinguishes parallel
/// arrows coming from a label `(m, m)` with `m > 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointedArrow {
    pub src: usize,
    pub dst: usize,
    pub copy: usize,
}

/// A valued quiver with all labels of the form `(m, m)`, indexed for
/// representation work: vertices are numbered in sorted-name order and
/// every parallel arrow copy gets its own slot.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointedQuiver {
    pub quiver: ValuedQuiver,
    pub verts: Vec<VertexId>,
    pub arrows: Vec<PointedArrow>,
}

impl PointedQuiver {
    pub fn from_valued(q: &ValuedQuiver) -> Result<Rc<Self>, RepError> {
        let verts: Vec<VertexId> = q.vertices().cloned().collect();
        let mut arrows = Vec::new();
        for a in q.arrows() {
            if a.d1 != a.d2 {
                return Err(RepError::NonPointedLabel {
                    src: a.src.clone(),
                    dst: a.dst.clone(),
                    d1: a.d1,
                    d2: a.d2,
                });
            }
            let src = verts.binary_search(&a.src).unwrap();
            let dst = verts.binary_search(&a.dst).unwrap();
            for copy in 0..a.d1 as usize {
                arrows.push(PointedArrow { src, dst, copy });
            }
        }
        Ok(Rc::new(PointedQuiver {
            quiver: q.clone(),
            verts,
            arrows,
        }))
    }

    pub fn vertex_index(&self, v: &VertexId) -> Result<usize, RepError> {
        self.verts
            .binary_search(v)
            .map_err(|_| RepError::UnknownVertex(v.clone()))
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    /// Indices of pointed arrows with the given source.
    pub fn arrows_from(&self, src: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].src == src)
            .collect()
    }

    /// Indices of pointed arrows with the given target.
    pub fn arrows_into(&self, dst: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].dst == dst)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    #[test]
    fn expansion_counts_parallel_copies() {
        let q = parse_quiver("vertex a\narrow a a 2 2").unwrap();
        let pq = PointedQuiver::from_valued(&q).unwrap();
        assert_eq!(pq.arrows.len(), 2);
        assert_eq!(pq.arrows[0].copy, 0);
        assert_eq!(pq.arrows[1].copy, 1);
    }

    #[test]
    fn rejects_non_pointed() {
        let q = parse_quiver("vertex a\nvertex b\narrow a b 1 2").unwrap();
        assert!(matches!(
            PointedQuiver::from_valued(&q),
            Err(RepError::NonPointedLabel { .. })
        ));
    }
}
