//! Truncated injective comodules over a pointed path coalgebra, the Ext
//! computation between simples, and recovery of the Gabriel quiver.
//!
//! `soc^k E_i` is realized on the basis of directed paths of length `< k`
//! ending at `i`; an arrow acts by stripping the first arrow of a path.

use crate::field::{Field, Rat};
use crate::homs::hom_dim;
use crate::linalg::Matrix;
use crate::pointed::PointedQuiver;
use crate::quiver::{QuiverError, ValuedQuiver, VertexId};
use crate::rep::{RepError, Representation};
use std::rc::Rc;

/// A directed path as a sequence of pointed-arrow indices, listed from
/// the start of the path toward its end. Empty means a lazy path.
pub type Path = Vec<usize>;

/// Per-vertex bases of a truncated injective: `paths[x]` lists the basis
/// paths of `M_x`, ordered by (length, lexicographic arrow indices).
#[derive(Clone, Debug)]
pub struct TruncationBasis {
    pub end: usize,
    pub depth: usize,
    pub paths: Vec<Vec<Path>>,
}

/// All directed paths of length `< depth` ending at vertex `end`,
/// grouped by start vertex.
pub fn truncation_paths(pq: &PointedQuiver, end: usize, depth: usize) -> TruncationBasis {
    assert!(depth >= 1);
    let mut by_vertex: Vec<Vec<Path>> = vec![Vec::new(); pq.vertex_count()];
    by_vertex[end].push(Vec::new());
    let mut frontier: Vec<Path> = vec![Vec::new()];
    for _ in 1..depth {
        let mut next = Vec::new();
        for p in &frontier {
            let start = if p.is_empty() {
                end
            } else {
                pq.arrows[p[0]].src
            };
            for a in pq.arrows_into(start) {
                let mut longer = Vec::with_capacity(p.len() + 1);
                longer.push(a);
                longer.extend_from_slice(p);
                next.push(longer);
            }
        }
        for p in &next {
            by_vertex[pq.arrows[p[0]].src].push(p.clone());
        }
        frontier = next;
    }
    // frontier growth by length keeps each vertex list sorted by length;
    // sort ties lexicographically for a stable basis
    for list in by_vertex.iter_mut() {
        list.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    }
    TruncationBasis {
        end,
        depth,
        paths: by_vertex,
    }
}

/// `soc^k E_i` as a representation, together with its path basis.
pub fn injective_truncation_indexed<F: Field>(
    pq: &Rc<PointedQuiver>,
    end: usize,
    depth: usize,
) -> (Representation<F>, TruncationBasis) {
    let basis = truncation_paths(pq, end, depth);
    let dims: Vec<usize> = basis.paths.iter().map(|p| p.len()).collect();
    let maps: Vec<Matrix<F>> = pq
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zero(dims[a.dst], dims[a.src]);
            for (col, p) in basis.paths[a.src].iter().enumerate() {
                if !p.is_empty() && p[0] == ai {
                    let stripped: Path = p[1..].to_vec();
                    let row = basis.paths[a.dst]
                        .iter()
                        .position(|q| *q == stripped)
                        .expect("stripped path is shorter, hence in the basis");
                    m.set(row, col, F::one());
                }
            }
            m
        })
        .collect();
    (Representation::new(pq.clone(), dims, maps), basis)
}

/// `soc^k E_i` addressed by vertex name.
pub fn injective_truncation<F: Field>(
    pq: &Rc<PointedQuiver>,
    i: &VertexId,
    depth: usize,
) -> Result<Representation<F>, RepError> {
    let end = pq.vertex_index(i)?;
    Ok(injective_truncation_indexed::<F>(pq, end, depth).0)
}

/// dim Ext^1(S_i, S_j) computed as dim Hom(S_j, soc^depth E_i / soc E_i).
/// Depth 2 already captures the socle of `E_i/S_i`; in the pointed case
/// this is the number of arrows from `j` to `i`.
pub fn ext1_dim(pq: &Rc<PointedQuiver>, i: usize, j: usize, depth: usize) -> usize {
    assert!(depth >= 2);
    let (e, _) = injective_truncation_indexed::<Rat>(pq, i, depth);
    let q = e.quotient(&e.socle()).expect("socle is invariant").rep;
    let s = Representation::<Rat>::simple(pq.clone(), j);
    hom_dim(&s, &q)
}

/// Right seriality at the comodule level: every `soc^2 E_i / soc E_i`
/// must be zero or simple. Returns the offending vertex otherwise.
pub fn is_right_serial_comodule_level(
    pq: &Rc<PointedQuiver>,
    depth: usize,
) -> (bool, Option<VertexId>) {
    let depth = depth.max(2);
    for i in 0..pq.vertex_count() {
        let (e, _) = injective_truncation_indexed::<Rat>(pq, i, depth);
        let layers = e.loewy_series().layers;
        if layers.len() >= 2 && layers[1].iter().sum::<usize>() > 1 {
            return (false, Some(pq.verts[i].clone()));
        }
    }
    (true, None)
}

/// Recover the valued Gabriel quiver from comodule data: an arrow
/// `j -> i` labelled `(d, d)` for each `d = dim Ext^1(S_i, S_j) > 0`.
pub fn gabriel_quiver(pq: &Rc<PointedQuiver>) -> Result<ValuedQuiver, QuiverError> {
    let mut q = ValuedQuiver::new();
    for v in &pq.verts {
        q.add_vertex(v.clone())?;
    }
    for i in 0..pq.vertex_count() {
        for j in 0..pq.vertex_count() {
            let d = ext1_dim(pq, i, j, 2) as u64;
            if d > 0 {
                q.add_arrow(pq.verts[j].clone(), pq.verts[i].clone(), d, d)?;
            }
        }
    }
    Ok(q)
}
