//! Finite-dimensional right comodules over a pointed path coalgebra,
//! encoded as nilpotent quiver representations with exact scalars.
//!
//! Convention: the arrow `a: x -> y` acts by a "strip the first arrow"
//! map `M_x -> M_y`. Under this convention subcomodules are exactly the
//! graded subspaces closed under all arrow maps, and the socle is the
//! per-vertex joint kernel of the outgoing maps.

use crate::field::{Field, Rat};
use crate::linalg::{unit, Matrix, Subspace};
use crate::pointed::PointedQuiver;
use crate::quiver::VertexId;
use std::rc::Rc;
use thiserror::Error;

#[derive(Error, Clone, Debug, PartialEq, Eq)]
pub enum RepError {
    #[error("non-pointed label ({d1},{d2}) on arrow {src} -> {dst}")]
    NonPointedLabel {
        src: VertexId,
        dst: VertexId,
        d1: u64,
        d2: u64,
    },
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("subspace is not closed under the arrow maps (vertex index {0})")]
    NotInvariant(usize),
    #[error("dimension bound exceeded: {0}")]
    DimensionBoundExceeded(String),
    #[error("representation is not nilpotent")]
    NotNilpotent,
    #[error("bad representation data: {0}")]
    BadData(String),
}

/// A representation: per-vertex dimensions plus one matrix per pointed arrow.
#[derive(Clone, PartialEq, Debug)]
pub struct Representation<F: Field> {
    pub pq: Rc<PointedQuiver>,
    pub dims: Vec<usize>,
    /// `maps[a]` has shape `dims[dst] x dims[src]`.
    pub maps: Vec<Matrix<F>>,
}

/// One subspace per vertex; subcomodules are exactly the invariant ones.
pub type GradedSubspace<F> = Vec<Subspace<F>>;

/// A comodule homomorphism: per-vertex blocks commuting with all arrow maps.
#[derive(Clone, PartialEq, Debug)]
pub struct Morphism<F: Field> {
    /// `blocks[x]`: `dim N_x x dim M_x` for a morphism `M -> N`.
    pub blocks: Vec<Matrix<F>>,
}

/// Loewy (socle) filtration data.
#[derive(Clone, Debug)]
pub struct LoewyData<F: Field> {
    /// `chain[t]` is `soc^t M` (starting from `soc^0 = 0`).
    pub chain: Vec<GradedSubspace<F>>,
    /// `layers[t][x]` = multiplicity of the simple at vertex `x` in layer `t+1`.
    pub layers: Vec<Vec<usize>>,
    /// Whether the filtration exhausts the module (true iff nilpotent).
    pub exhausted: bool,
}

impl<F: Field> LoewyData<F> {
    pub fn loewy_length(&self) -> usize {
        self.layers.len()
    }

    /// Total composition S_x-length summed over all layers.
    pub fn simple_length(&self, x: usize) -> usize {
        self.layers.iter().map(|l| l[x]).sum()
    }
}

/// Result of a quotient construction: the quotient representation, the
/// canonical projection, and a linear section (right inverse of it).
pub struct QuotientData<F: Field> {
    pub rep: Representation<F>,
    pub proj: Morphism<F>,
    pub section: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(pq: Rc<PointedQuiver>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        assert_eq!(dims.len(), pq.vertex_count());
        assert_eq!(maps.len(), pq.arrows.len());
        for (a, m) in pq.arrows.iter().zip(maps.iter()) {
            assert_eq!((m.rows, m.cols), (dims[a.dst], dims[a.src]));
        }
        Representation { pq, dims, maps }
    }

    pub fn zero(pq: Rc<PointedQuiver>) -> Self {
        let dims = vec![0; pq.vertex_count()];
        let maps = pq.arrows.iter().map(|_| Matrix::zero(0, 0)).collect();
        Representation { pq, dims, maps }
    }

    pub fn simple(pq: Rc<PointedQuiver>, vertex: usize) -> Self {
        let mut dims = vec![0; pq.vertex_count()];
        dims[vertex] = 1;
        let maps = pq
            .arrows
            .iter()
            .map(|a| Matrix::zero(dims[a.dst], dims[a.src]))
            .collect();
        Representation { pq, dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn zero_subspace(&self) -> GradedSubspace<F> {
        self.dims.iter().map(|&d| Subspace::zero(d)).collect()
    }

    pub fn full_subspace(&self) -> GradedSubspace<F> {
        self.dims.iter().map(|&d| Subspace::full(d)).collect()
    }

    fn check_invariant(&self, sub: &GradedSubspace<F>) -> Result<(), RepError> {
        for (ai, a) in self.pq.arrows.iter().enumerate() {
            for b in sub[a.src].basis_vectors() {
                if !sub[a.dst].contains(&self.maps[ai].apply(&b)) {
                    return Err(RepError::NotInvariant(a.src));
                }
            }
        }
        Ok(())
    }

    /// Smallest subrepresentation containing the given vectors.
    pub fn closure(&self, vectors: &[(usize, Vec<F>)]) -> GradedSubspace<F> {
        let mut sub = self.zero_subspace();
        let mut queue: Vec<(usize, Vec<F>)> = vectors.to_vec();
        while let Some((x, v)) = queue.pop() {
            if sub[x].contains(&v) {
                continue;
            }
            sub[x] = sub[x].sum(&Subspace::from_vectors(
                self.dims[x],
                std::slice::from_ref(&v),
            ));
            for ai in self.pq.arrows_from(x) {
                let a = &self.pq.arrows[ai];
                queue.push((a.dst, self.maps[ai].apply(&v)));
            }
        }
        sub
    }

    /// The socle: per-vertex joint kernel of all outgoing arrow maps.
    pub fn socle(&self) -> GradedSubspace<F> {
        (0..self.dims.len())
            .map(|x| {
                let outgoing = self.pq.arrows_from(x);
                if outgoing.is_empty() {
                    return Subspace::full(self.dims[x]);
                }
                let mut stacked = Matrix::zero(0, self.dims[x]);
                for ai in outgoing {
                    stacked = stacked.vstack(&self.maps[ai]);
                }
                Subspace::from_vectors(self.dims[x], &stacked.kernel_basis())
            })
            .collect()
    }

    /// Restriction to an invariant graded subspace, with the inclusion.
    pub fn sub_rep(
        &self,
        sub: &GradedSubspace<F>,
    ) -> Result<(Representation<F>, Morphism<F>), RepError> {
        self.check_invariant(sub)?;
        let dims: Vec<usize> = sub.iter().map(|s| s.dim()).collect();
        let mut maps = Vec::new();
        for (ai, a) in self.pq.arrows.iter().enumerate() {
            let mut m = Matrix::zero(dims[a.dst], dims[a.src]);
            for (c, b) in sub[a.src].basis_vectors().iter().enumerate() {
                let w = self.maps[ai].apply(b);
                let coords = sub[a.dst].coords(&w).ok_or(RepError::NotInvariant(a.src))?;
                for (r, v) in coords.into_iter().enumerate() {
                    m.set(r, c, v);
                }
            }
            maps.push(m);
        }
        let inclusion = Morphism {
            blocks: (0..self.dims.len())
                .map(|x| {
                    let mut m = Matrix::zero(self.dims[x], dims[x]);
                    for (c, b) in sub[x].basis_vectors().iter().enumerate() {
                        for (r, v) in b.iter().enumerate() {
                            m.set(r, c, v.clone());
                        }
                    }
                    m
                })
                .collect(),
        };
        Ok((Representation::new(self.pq.clone(), dims, maps), inclusion))
    }

    /// Quotient by an invariant graded subspace.
    pub fn quotient(&self, sub: &GradedSubspace<F>) -> Result<QuotientData<F>, RepError> {
        self.check_invariant(sub)?;
        // Quotient basis at x: standard coordinates away from the pivots.
        let copivots: Vec<Vec<usize>> = sub.iter().map(|s| s.copivots()).collect();
        let dims: Vec<usize> = copivots.iter().map(|c| c.len()).collect();
        let mut proj_blocks = Vec::new();
        let mut section = Vec::new();
        for x in 0..self.dims.len() {
            let mut p = Matrix::zero(dims[x], self.dims[x]);
            for j in 0..self.dims[x] {
                let (res, _) = sub[x].reduce(&unit(self.dims[x], j));
                for (r, &c) in copivots[x].iter().enumerate() {
                    p.set(r, j, res[c].clone());
                }
            }
            let mut s = Matrix::zero(self.dims[x], dims[x]);
            for (r, &c) in copivots[x].iter().enumerate() {
                s.set(c, r, F::one());
            }
            proj_blocks.push(p);
            section.push(s);
        }
        let mut maps = Vec::new();
        for (ai, a) in self.pq.arrows.iter().enumerate() {
            // induced map = proj_dst . v_a . section_src
            maps.push(proj_blocks[a.dst].mul(&self.maps[ai]).mul(&section[a.src]));
        }
        Ok(QuotientData {
            rep: Representation::new(self.pq.clone(), dims, maps),
            proj: Morphism {
                blocks: proj_blocks,
            },
            section,
        })
    }

    /// Direct sum with the canonical inclusions and projections.
    pub fn direct_sum(&self, other: &Representation<F>) -> DirectSum<F> {
        assert!(Rc::ptr_eq(&self.pq, &other.pq) || self.pq == other.pq);
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(other.dims.iter())
            .map(|(&a, &b)| a + b)
            .collect();
        let mut maps = Vec::new();
        for (ai, a) in self.pq.arrows.iter().enumerate() {
            let mut m = Matrix::zero(dims[a.dst], dims[a.src]);
            for r in 0..self.dims[a.dst] {
                for c in 0..self.dims[a.src] {
                    m.set(r, c, self.maps[ai].get(r, c).clone());
                }
            }
            for r in 0..other.dims[a.dst] {
                for c in 0..other.dims[a.src] {
                    m.set(
                        self.dims[a.dst] + r,
                        self.dims[a.src] + c,
                        other.maps[ai].get(r, c).clone(),
                    );
                }
            }
            maps.push(m);
        }
        let n = self.dims.len();
        let block = |left: bool, x: usize, into_sum: bool| {
            let (small, off) = if left {
                (self.dims[x], 0)
            } else {
                (other.dims[x], self.dims[x])
            };
            let (rows, cols) = if into_sum {
                (dims[x], small)
            } else {
                (small, dims[x])
            };
            let mut m = Matrix::zero(rows, cols);
            for i in 0..small {
                if into_sum {
                    m.set(off + i, i, F::one());
                } else {
                    m.set(i, off + i, F::one());
                }
            }
            m
        };
        let inc_left = Morphism {
            blocks: (0..n).map(|x| block(true, x, true)).collect(),
        };
        let inc_right = Morphism {
            blocks: (0..n).map(|x| block(false, x, true)).collect(),
        };
        let proj_left = Morphism {
            blocks: (0..n).map(|x| block(true, x, false)).collect(),
        };
        let proj_right = Morphism {
            blocks: (0..n).map(|x| block(false, x, false)).collect(),
        };
        DirectSum {
            rep: Representation::new(self.pq.clone(), dims, maps),
            inc_left,
            inc_right,
            proj_left,
            proj_right,
        }
    }

    /// Loewy series via iterated socles of quotients.
    pub fn loewy_series(&self) -> LoewyData<F> {
        let mut chain = vec![self.zero_subspace()];
        let mut layers = Vec::new();
        loop {
            let cur = chain.last().unwrap().clone();
            let qd = self.quotient(&cur).expect("chain members are invariant");
            if qd.rep.is_zero() {
                break;
            }
            let soc_q = qd.rep.socle();
            if soc_q.iter().all(|s| s.dim() == 0) {
                // quotient nonzero with zero socle: not nilpotent
                break;
            }
            let mut next = cur.clone();
            let mut layer = vec![0usize; self.dims.len()];
            for x in 0..self.dims.len() {
                layer[x] = soc_q[x].dim();
                for b in soc_q[x].basis_vectors() {
                    let lift = qd.section[x].apply(&b);
                    next[x] = next[x].sum(&Subspace::from_vectors(self.dims[x], &[lift]));
                }
            }
            layers.push(layer);
            chain.push(next);
        }
        let exhausted = chain
            .last()
            .unwrap()
            .iter()
            .zip(self.dims.iter())
            .all(|(s, &d)| s.dim() == d);
        LoewyData {
            chain,
            layers,
            exhausted,
        }
    }

    /// Nilpotency: the socle filtration exhausts the module.
    pub fn is_nilpotent(&self) -> bool {
        self.loewy_series().exhausted
    }

    /// Every Loewy layer has total dimension at most one (and the series
    /// exhausts the module): the subcomodule lattice is a chain.
    pub fn is_uniserial(&self) -> bool {
        let l = self.loewy_series();
        l.exhausted
            && l.layers
                .iter()
                .all(|layer| layer.iter().sum::<usize>() <= 1)
    }
}

pub struct DirectSum<F: Field> {
    pub rep: Representation<F>,
    pub inc_left: Morphism<F>,
    pub inc_right: Morphism<F>,
    pub proj_left: Morphism<F>,
    pub proj_right: Morphism<F>,
}

impl<F: Field> Morphism<F> {
    pub fn identity(rep: &Representation<F>) -> Self {
        Morphism {
            blocks: rep.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn zero(from: &Representation<F>, to: &Representation<F>) -> Self {
        Morphism {
            blocks: from
                .dims
                .iter()
                .zip(to.dims.iter())
                .map(|(&m, &n)| Matrix::zero(n, m))
                .collect(),
        }
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(other.blocks.iter())
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(other.blocks.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(other.blocks.iter())
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Morphism<F> {
        Morphism {
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> Morphism<F> {
        self.scale(&F::one().neg())
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    /// Invertible on every vertex block (hence an isomorphism).
    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols)
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows)
    }

    pub fn total_rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    /// Verifies the commutation equations of a morphism `from -> to`.
    pub fn is_valid(&self, from: &Representation<F>, to: &Representation<F>) -> bool {
        for (ai, a) in from.pq.arrows.iter().enumerate() {
            let lhs = self.blocks[a.dst].mul(&from.maps[ai]);
            let rhs = to.maps[ai].mul(&self.blocks[a.src]);
            if lhs != rhs {
                return false;
            }
        }
        true
    }
}

// --- JSON interchange (exact rationals serialized as "p/q" strings) ---

impl Representation<Rat> {
    pub fn to_json(&self) -> serde_json::Value {
        let dims: serde_json::Map<String, serde_json::Value> = self
            .pq
            .verts
            .iter()
            .zip(self.dims.iter())
            .map(|(v, &d)| (v.to_string(), serde_json::json!(d)))
            .collect();
        let maps: Vec<serde_json::Value> = self
            .pq
            .arrows
            .iter()
            .zip(self.maps.iter())
            .map(|(a, m)| {
                let rows: Vec<Vec<String>> = (0..m.rows)
                    .map(|r| (0..m.cols).map(|c| m.get(r, c).to_string()).collect())
                    .collect();
                serde_json::json!({
                    "src": self.pq.verts[a.src].to_string(),
                    "dst": self.pq.verts[a.dst].to_string(),
                    "copy": a.copy,
                    "matrix": rows,
                })
            })
            .collect();
        serde_json::json!({
            "quiver": self.pq.quiver.emit_dsl(),
            "dims": dims,
            "maps": maps,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, RepError> {
        let bad = |m: &str| RepError::BadData(m.to_string());
        let dsl = value["quiver"]
            .as_str()
            .ok_or_else(|| bad("missing quiver"))?;
        let q = crate::quiver::parse_quiver(dsl).map_err(|e| RepError::BadData(e.to_string()))?;
        let pq = PointedQuiver::from_valued(&q)?;
        let mut dims = vec![0usize; pq.vertex_count()];
        let dmap = value["dims"]
            .as_object()
            .ok_or_else(|| bad("missing dims"))?;
        for (name, d) in dmap {
            let x = pq.vertex_index(&VertexId::new(name.clone()))?;
            dims[x] = d.as_u64().ok_or_else(|| bad("bad dim"))? as usize;
        }
        let mut maps: Vec<Matrix<Rat>> = pq
            .arrows
            .iter()
            .map(|a| Matrix::zero(dims[a.dst], dims[a.src]))
            .collect();
        for entry in value["maps"]
            .as_array()
            .ok_or_else(|| bad("missing maps"))?
        {
            let src = pq.vertex_index(&VertexId::new(
                entry["src"].as_str().ok_or_else(|| bad("bad src"))?,
            ))?;
            let dst = pq.vertex_index(&VertexId::new(
                entry["dst"].as_str().ok_or_else(|| bad("bad dst"))?,
            ))?;
            let copy = entry["copy"].as_u64().unwrap_or(0) as usize;
            let ai = pq
                .arrows
                .iter()
                .position(|a| a.src == src && a.dst == dst && a.copy == copy)
                .ok_or_else(|| bad("unknown arrow"))?;
            let rows = entry["matrix"]
                .as_array()
                .ok_or_else(|| bad("bad matrix"))?;
            if rows.len() != dims[dst] {
                return Err(bad("matrix row count mismatch"));
            }
            for (r, row) in rows.iter().enumerate() {
                let row = row.as_array().ok_or_else(|| bad("bad matrix row"))?;
                if row.len() != dims[src] {
                    return Err(bad("matrix column count mismatch"));
                }
                for (c, cell) in row.iter().enumerate() {
                    let s = cell
                        .as_str()
                        .ok_or_else(|| bad("matrix entries are strings"))?;
                    maps[ai].set(r, c, Rat::parse(s).ok_or_else(|| bad("bad rational"))?);
                }
            }
        }
        Ok(Representation::new(pq, dims, maps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;
    use crate::quiver::parse_quiver;

    fn a3() -> Rc<PointedQuiver> {
        let q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3").unwrap();
        PointedQuiver::from_valued(&q).unwrap()
    }

    /// The uniserial (1,1,1) module over A_3 with identity arrow maps.
    fn interval3() -> Representation<Rat> {
        let pq = a3();
        let maps = vec![Matrix::identity(1), Matrix::identity(1)];
        Representation::new(pq, vec![1, 1, 1], maps)
    }

    #[test]
    fn socle_of_simple_is_whole() {
        let pq = a3();
        let s = Representation::<Rat>::simple(pq, 0);
        let soc = s.socle();
        assert_eq!(soc[0].dim(), 1);
    }

    #[test]
    fn socle_of_interval_is_sink() {
        let m = interval3();
        let soc = m.socle();
        assert_eq!(
            soc.iter().map(|s| s.dim()).collect::<Vec<_>>(),
            vec![0, 0, 1]
        );
    }

    #[test]
    fn loewy_of_interval() {
        let m = interval3();
        let l = m.loewy_series();
        assert!(l.exhausted);
        assert_eq!(l.layers.len(), 3);
        assert!(m.is_uniserial());
    }

    #[test]
    fn semisimple_one_layer() {
        let pq = a3();
        let s1 = Representation::<Rat>::simple(pq.clone(), 0);
        let s2 = Representation::<Rat>::simple(pq, 1);
        let sum = s1.direct_sum(&s2).rep;
        let l = sum.loewy_series();
        assert_eq!(l.layers.len(), 1);
        assert!(!sum.is_uniserial());
    }

    #[test]
    fn non_nilpotent_detected() {
        let q = parse_quiver("vertex a\narrow a a").unwrap();
        let pq = PointedQuiver::from_valued(&q).unwrap();
        let m = Representation::<Rat>::new(pq, vec![1], vec![Matrix::identity(1)]);
        assert!(!m.is_nilpotent());
    }

    #[test]
    fn quotient_and_sub() {
        let m = interval3();
        let soc = m.socle();
        let qd = m.quotient(&soc).unwrap();
        assert_eq!(qd.rep.total_dim(), 2);
        assert!(qd.proj.is_valid(&m, &qd.rep));
        let (sub, inc) = m.sub_rep(&soc).unwrap();
        assert_eq!(sub.total_dim(), 1);
        assert!(inc.is_valid(&sub, &m));
    }

    #[test]
    fn closure_of_socle_generator() {
        let m = interval3();
        let sub = m.closure(&[(2, vec![Rat::from_i64(1)])]);
        assert_eq!(sub.iter().map(|s| s.dim()).sum::<usize>(), 1);
        let sub = m.closure(&[(0, vec![Rat::from_i64(1)])]);
        assert_eq!(sub.iter().map(|s| s.dim()).sum::<usize>(), 3);
    }

    #[test]
    fn direct_sum_dims_add() {
        let m = interval3();
        let ds = m.direct_sum(&m);
        assert_eq!(ds.rep.total_dim(), 6);
        assert!(ds.inc_left.is_valid(&m, &ds.rep));
        assert!(ds.proj_right.is_valid(&ds.rep, &m));
        let id = ds.proj_left.compose(&ds.inc_left);
        assert_eq!(id, Morphism::identity(&m));
    }

    #[test]
    fn json_roundtrip() {
        let m = interval3();
        let j = m.to_json();
        let back = Representation::from_json(&j).unwrap();
        assert_eq!(back.dims, m.dims);
        assert_eq!(back.maps, m.maps);
    }
}
