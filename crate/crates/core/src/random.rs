//! Seeded random generators for fuzz suites. All randomness flows from a
//! caller-supplied ChaCha stream so runs are reproducible.

use crate::field::Gf2;
use crate::linalg::Matrix;
use crate::pointed::PointedQuiver;
use crate::quiver::{ValuedQuiver, VertexId};
use crate::rep::Representation;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::rc::Rc;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

fn vname(i: usize) -> VertexId {
    VertexId::new(format!("v{}", i))
}

/// Random valued quiver: up to `max_vertices` vertices, each ordered pair
/// carrying an arrow with probability ~1/3, labels in 1..=3.
pub fn random_quiver(rng: &mut ChaCha8Rng, max_vertices: usize) -> ValuedQuiver {
    let n = rng.gen_range(1..=max_vertices);
    let mut q = ValuedQuiver::new();
    for i in 0..n {
        q.add_vertex(vname(i)).unwrap();
    }
    for i in 0..n {
        for j in 0..n {
            if rng.gen_ratio(1, 3) {
                let d1 = rng.gen_range(1..=3);
                let d2 = rng.gen_range(1..=3);
                q.add_arrow(vname(i), vname(j), d1, d2).unwrap();
            }
        }
    }
    q
}

/// Random acyclic quiver: arrows only increase the vertex index, so the
/// hereditary localization calculus is exact and all labels are finite.
pub fn random_acyclic_quiver(rng: &mut ChaCha8Rng, max_vertices: usize) -> ValuedQuiver {
    let n = rng.gen_range(1..=max_vertices);
    let mut q = ValuedQuiver::new();
    for i in 0..n {
        q.add_vertex(vname(i)).unwrap();
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_ratio(2, 5) {
                let d1 = rng.gen_range(1..=3);
                let d2 = rng.gen_range(1..=3);
                q.add_arrow(vname(i), vname(j), d1, d2).unwrap();
            }
        }
    }
    q
}

/// Random pointed quiver (all labels (m,m), m in 1..=2).
pub fn random_pointed_quiver(rng: &mut ChaCha8Rng, max_vertices: usize) -> ValuedQuiver {
    let n = rng.gen_range(1..=max_vertices);
    let mut q = ValuedQuiver::new();
    for i in 0..n {
        q.add_vertex(vname(i)).unwrap();
    }
    for i in 0..n {
        for j in 0..n {
            if rng.gen_ratio(1, 3) {
                let m = rng.gen_range(1..=2);
                q.add_arrow(vname(i), vname(j), m, m).unwrap();
            }
        }
    }
    q
}

/// Random nilpotent representation over the 2-element field with total
/// dimension at most `dim_bound`. Retries random maps until nilpotent,
/// falling back to zero maps; on acyclic quivers every draw works.
pub fn random_nilpotent_rep(
    rng: &mut ChaCha8Rng,
    pq: &Rc<PointedQuiver>,
    dim_bound: usize,
) -> Representation<Gf2> {
    let n = pq.vertex_count();
    let mut dims = vec![0usize; n];
    let total = rng.gen_range(1..=dim_bound);
    for _ in 0..total {
        dims[rng.gen_range(0..n)] += 1;
    }
    for _ in 0..50 {
        let maps: Vec<Matrix<Gf2>> = pq
            .arrows
            .iter()
            .map(|a| {
                let mut m = Matrix::zero(dims[a.dst], dims[a.src]);
                for r in 0..dims[a.dst] {
                    for c in 0..dims[a.src] {
                        m.set(r, c, Gf2(rng.gen_bool(0.5)));
                    }
                }
                m
            })
            .collect();
        let rep = Representation::new(pq.clone(), dims.clone(), maps);
        if rep.is_nilpotent() {
            return rep;
        }
    }
    let maps = pq
        .arrows
        .iter()
        .map(|a| Matrix::zero(dims[a.dst], dims[a.src]))
        .collect();
    Representation::new(pq.clone(), dims, maps)
}
