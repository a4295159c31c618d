//! Localization at a vertex subset: the localized valued quiver computed
//! by enumerating directed paths whose interior vertices are torsion, and
//! the comodule-level restriction to the kept vertices.
//!
//! The quiver-level calculus is exact for hereditary path coalgebra
//! models only; the comodule-level restriction is exact always.

use crate::classify::is_right_serial;
use crate::linalg::Matrix;
use crate::pointed::PointedQuiver;
use crate::quiver::{ValuedQuiver, VertexId};
use crate::rep::{RepError, Representation};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum LocalizeError {
    #[error("kept subset must be nonempty")]
    EmptySubset,
    #[error("unknown vertex: {0}")]
    UnknownVertex(VertexId),
    #[error("localized label does not fit in 64 bits for pair ({0},{1})")]
    LabelOverflow(VertexId, VertexId),
    #[error("path enumeration exceeded the safety bound without a detected cycle")]
    PathBoundExceeded,
    #[error("localization is infinite; no finite quiver to restrict over")]
    InfiniteLocalization,
}

/// The torsion-free simples; the kept vertices carry the idempotent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSubset {
    pub kept: BTreeSet<VertexId>,
}

impl VertexSubset {
    pub fn new(kept: impl IntoIterator<Item = VertexId>) -> Self {
        VertexSubset {
            kept: kept.into_iter().collect(),
        }
    }

    fn validate(&self, q: &ValuedQuiver) -> Result<(), LocalizeError> {
        if self.kept.is_empty() {
            return Err(LocalizeError::EmptySubset);
        }
        for v in &self.kept {
            if !q.vertices().any(|u| u == v) {
                return Err(LocalizeError::UnknownVertex(v.clone()));
            }
        }
        Ok(())
    }
}

/// One contributing path for a localized arrow: its full vertex sequence
/// (endpoints kept, interior torsion) and the per-path label products.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PathEvidence {
    pub vertices: Vec<VertexId>,
    pub product: (u64, u64),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LocalizationResult {
    Finite {
        quiver: ValuedQuiver,
        evidence: BTreeMap<(VertexId, VertexId), Vec<PathEvidence>>,
    },
    Infinite {
        pairs: Vec<(VertexId, VertexId)>,
    },
}

const PATH_BOUND: usize = 1_000_000;

/// Torsion vertices usable between x and z: reachable from x and
/// co-reachable from z through torsion-interior moves.
fn usable_torsion(
    q: &ValuedQuiver,
    torsion: &BTreeSet<VertexId>,
    x: &VertexId,
    z: &VertexId,
) -> BTreeSet<VertexId> {
    let mut fwd: BTreeSet<VertexId> = BTreeSet::new();
    let mut stack = vec![x.clone()];
    while let Some(v) = stack.pop() {
        for a in q.out_arrows(&v) {
            if torsion.contains(&a.dst) && fwd.insert(a.dst.clone()) {
                stack.push(a.dst);
            }
        }
    }
    let mut bwd: BTreeSet<VertexId> = BTreeSet::new();
    let mut stack = vec![z.clone()];
    while let Some(v) = stack.pop() {
        for a in q.in_arrows(&v) {
            if torsion.contains(&a.src) && bwd.insert(a.src.clone()) {
                stack.push(a.src);
            }
        }
    }
    fwd.intersection(&bwd).cloned().collect()
}

/// Whether the torsion subgraph induced on `usable` contains a directed
/// cycle; any such cycle pumps infinitely many torsion-interior paths.
fn has_cycle_within(q: &ValuedQuiver, usable: &BTreeSet<VertexId>) -> bool {
    // Kahn peeling on the induced subgraph.
    let mut indeg: BTreeMap<&VertexId, usize> = usable.iter().map(|v| (v, 0)).collect();
    let mut arcs = 0usize;
    for a in q.arrows() {
        if usable.contains(&a.src) && usable.contains(&a.dst) {
            *indeg.get_mut(&a.dst).unwrap() += 1;
            arcs += 1;
        }
    }
    if arcs == 0 {
        return false;
    }
    let mut queue: Vec<VertexId> = indeg
        .iter()
        .filter(|(_, &d)| d == 0)
        .map(|(v, _)| (*v).clone())
        .collect();
    let mut removed = 0usize;
    while let Some(v) = queue.pop() {
        removed += 1;
        for a in q.out_arrows(&v) {
            if usable.contains(&a.dst) {
                let d = indeg.get_mut(&a.dst).unwrap();
                *d -= 1;
                if *d == 0 {
                    queue.push(a.dst);
                }
            }
        }
    }
    removed < usable.len()
}

/// All torsion-interior paths x -> z, as vertex sequences. `None` marks
/// an infinite family. The usable torsion set is acyclic in the finite
/// case, so depth-first enumeration terminates.
fn torsion_paths(
    q: &ValuedQuiver,
    torsion: &BTreeSet<VertexId>,
    x: &VertexId,
    z: &VertexId,
) -> Result<Option<Vec<Vec<VertexId>>>, LocalizeError> {
    let usable = usable_torsion(q, torsion, x, z);
    if has_cycle_within(q, &usable) {
        return Ok(None);
    }
    let mut out: Vec<Vec<VertexId>> = Vec::new();
    let mut stack: Vec<Vec<VertexId>> = vec![vec![x.clone()]];
    while let Some(path) = stack.pop() {
        let v = path.last().unwrap();
        for a in q.out_arrows(v) {
            if &a.dst == z {
                let mut done = path.clone();
                done.push(a.dst.clone());
                out.push(done);
                if out.len() > PATH_BOUND {
                    return Err(LocalizeError::PathBoundExceeded);
                }
            }
            if usable.contains(&a.dst) {
                let mut longer = path.clone();
                longer.push(a.dst);
                stack.push(longer);
            }
        }
    }
    out.sort();
    Ok(Some(out))
}

fn path_product(q: &ValuedQuiver, path: &[VertexId]) -> Option<(u64, u64)> {
    let mut p1: u64 = 1;
    let mut p2: u64 = 1;
    for w in path.windows(2) {
        let (d1, d2) = q.label(&w[0], &w[1]).expect("evidence paths follow arrows");
        p1 = p1.checked_mul(d1)?;
        p2 = p2.checked_mul(d2)?;
    }
    Some((p1, p2))
}

/// The localized valued quiver over the kept vertices. For each ordered
/// kept pair the arrow label is the sum over torsion-interior paths of
/// the per-path label products; a usable torsion cycle makes the pair's
/// label infinite.
pub fn localize_quiver(
    q: &ValuedQuiver,
    w: &VertexSubset,
) -> Result<LocalizationResult, LocalizeError> {
    w.validate(q)?;
    let torsion: BTreeSet<VertexId> = q
        .vertices()
        .filter(|v| !w.kept.contains(v))
        .cloned()
        .collect();
    let mut infinite: Vec<(VertexId, VertexId)> = Vec::new();
    let mut evidence: BTreeMap<(VertexId, VertexId), Vec<PathEvidence>> = BTreeMap::new();
    for x in &w.kept {
        for z in &w.kept {
            match torsion_paths(q, &torsion, x, z)? {
                None => infinite.push((x.clone(), z.clone())),
                Some(paths) if paths.is_empty() => {}
                Some(paths) => {
                    let mut ev = Vec::with_capacity(paths.len());
                    for p in paths {
                        let product = path_product(q, &p)
                            .ok_or_else(|| LocalizeError::LabelOverflow(x.clone(), z.clone()))?;
                        ev.push(PathEvidence {
                            vertices: p,
                            product,
                        });
                    }
                    evidence.insert((x.clone(), z.clone()), ev);
                }
            }
        }
    }
    if !infinite.is_empty() {
        return Ok(LocalizationResult::Infinite { pairs: infinite });
    }
    let mut quiver = ValuedQuiver::new();
    for v in &w.kept {
        quiver
            .add_vertex(v.clone())
            .expect("kept vertices are distinct");
    }
    for ((x, z), ev) in &evidence {
        let mut h1: u64 = 0;
        let mut h2: u64 = 0;
        for p in ev {
            h1 = h1
                .checked_add(p.product.0)
                .ok_or_else(|| LocalizeError::LabelOverflow(x.clone(), z.clone()))?;
            h2 = h2
                .checked_add(p.product.1)
                .ok_or_else(|| LocalizeError::LabelOverflow(x.clone(), z.clone()))?;
        }
        quiver
            .add_arrow(x.clone(), z.clone(), h1, h2)
            .expect("pairs are distinct");
    }
    Ok(LocalizationResult::Finite { quiver, evidence })
}

/// Localization at a single vertex: a one-vertex quiver with a loop
/// label, no loop, or an infinite label.
pub fn localize_colocal(
    q: &ValuedQuiver,
    x: &VertexId,
) -> Result<LocalizationResult, LocalizeError> {
    localize_quiver(q, &VertexSubset::new([x.clone()]))
}

/// Restriction of a comodule to the kept vertices: the carrier is the
/// kept part and each localized pointed arrow acts by the composite of
/// the original maps along one evidence path.
pub fn restrict_comodule<F: crate::field::Field>(
    m: &Representation<F>,
    w: &VertexSubset,
) -> Result<Representation<F>, RepError> {
    let pq = &m.pq;
    let loc = localize_quiver(&pq.quiver, w).map_err(|e| RepError::BadData(e.to_string()))?;
    let quiver = match loc {
        LocalizationResult::Infinite { .. } => {
            return Err(RepError::BadData(
                LocalizeError::InfiniteLocalization.to_string(),
            ))
        }
        LocalizationResult::Finite { quiver, .. } => quiver,
    };
    let loc_pq = PointedQuiver::from_valued(&quiver)?;

    // pointed torsion-interior paths x -> z, as pointed arrow sequences,
    // in deterministic order
    let torsion: BTreeSet<usize> = (0..pq.vertex_count())
        .filter(|&i| !w.kept.contains(&pq.verts[i]))
        .collect();
    let pointed_paths = |x: usize, z: usize| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(x, Vec::new())];
        while let Some((v, path)) = stack.pop() {
            for a in pq.arrows_from(v) {
                let dst = pq.arrows[a].dst;
                if dst == z {
                    let mut done = path.clone();
                    done.push(a);
                    out.push(done);
                }
                if torsion.contains(&dst) {
                    let mut longer = path.clone();
                    longer.push(a);
                    // finiteness was certified at the quiver level
                    stack.push((dst, longer));
                }
            }
        }
        out.sort();
        out
    };

    let dims: Vec<usize> = loc_pq
        .verts
        .iter()
        .map(|v| m.dims[pq.vertex_index(v).expect("kept vertex exists upstream")])
        .collect();
    let mut composites: BTreeMap<(usize, usize), Vec<Matrix<F>>> = BTreeMap::new();
    let maps: Vec<Matrix<F>> = loc_pq
        .arrows
        .iter()
        .map(|la| {
            let x = pq.vertex_index(&loc_pq.verts[la.src]).unwrap();
            let z = pq.vertex_index(&loc_pq.verts[la.dst]).unwrap();
            let per_pair = composites.entry((x, z)).or_insert_with(|| {
                pointed_paths(x, z)
                    .into_iter()
                    .map(|arrows| {
                        let mut acc = Matrix::identity(m.dims[x]);
                        for a in arrows {
                            acc = m.maps[a].mul(&acc);
                        }
                        acc
                    })
                    .collect()
            });
            per_pair[la.copy].clone()
        })
        .collect();
    Ok(Representation::new(loc_pq, dims, maps))
}

/// Subset sweep relating local and global right-seriality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalGlobalReport {
    pub global_right_serial: bool,
    /// Subsets of size at most 3 whose localization fails right-seriality.
    pub failing_le3: Vec<Vec<VertexId>>,
    /// Subsets of size at most 2 whose localization fails right-seriality.
    pub failing_le2: Vec<Vec<VertexId>>,
    /// Subsets whose localization has an infinite label.
    pub indeterminate: Vec<Vec<VertexId>>,
    /// Verdict of the size-3 sweep agrees with the global verdict.
    pub le3_matches_global: bool,
    /// A size-2-only sweep would wrongly report serial.
    pub le2_false_positive: bool,
}

fn subsets_up_to(verts: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let n = verts.len();
    let mut stack: Vec<(usize, Vec<VertexId>)> = vec![(0, Vec::new())];
    while let Some((start, cur)) = stack.pop() {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() < k {
            for i in start..n {
                let mut next = cur.clone();
                next.push(verts[i].clone());
                stack.push((i + 1, next));
            }
        }
    }
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

pub fn check_serial_local_global(q: &ValuedQuiver) -> Result<LocalGlobalReport, LocalizeError> {
    let verts: Vec<VertexId> = q.vertices().cloned().collect();
    let global = is_right_serial(q);
    let mut failing_le3 = Vec::new();
    let mut failing_le2 = Vec::new();
    let mut indeterminate = Vec::new();
    for subset in subsets_up_to(&verts, 3) {
        let w = VertexSubset::new(subset.iter().cloned());
        match localize_quiver(q, &w)? {
            LocalizationResult::Infinite { .. } => indeterminate.push(subset),
            LocalizationResult::Finite { quiver, .. } => {
                if !is_right_serial(&quiver) {
                    if subset.len() <= 2 {
                        failing_le2.push(subset.clone());
                    }
                    failing_le3.push(subset);
                }
            }
        }
    }
    let le3_serial = failing_le3.is_empty();
    let le2_serial = failing_le2.is_empty();
    Ok(LocalGlobalReport {
        global_right_serial: global,
        le3_matches_global: le3_serial == global,
        le2_false_positive: le2_serial && !global,
        failing_le3,
        failing_le2,
        indeterminate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    fn q(dsl: &str) -> ValuedQuiver {
        parse_quiver(dsl).unwrap()
    }

    fn keep(names: &[&str]) -> VertexSubset {
        VertexSubset::new(names.iter().map(|n| VertexId::new(*n)))
    }

    #[test]
    fn triangle_two_paths() {
        let tri = q("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3\narrow 1 3");
        match localize_quiver(&tri, &keep(&["1", "3"])).unwrap() {
            LocalizationResult::Finite { quiver, evidence } => {
                let key = (VertexId::new("1"), VertexId::new("3"));
                assert_eq!(quiver.label(&key.0, &key.1), Some((2, 2)));
                assert_eq!(evidence[&key].len(), 2);
            }
            _ => panic!("expected finite localization"),
        }
    }

    #[test]
    fn keeping_everything_is_identity() {
        let tri = q("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3\narrow 1 3");
        match localize_quiver(&tri, &keep(&["1", "2", "3"])).unwrap() {
            LocalizationResult::Finite { quiver, .. } => assert_eq!(quiver, tri),
            _ => panic!("expected finite localization"),
        }
    }

    #[test]
    fn torsion_loop_pumps_infinitely() {
        let quiv = q("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 2\narrow 2 3");
        match localize_quiver(&quiv, &keep(&["1", "3"])).unwrap() {
            LocalizationResult::Infinite { pairs } => {
                assert_eq!(pairs, vec![(VertexId::new("1"), VertexId::new("3"))]);
            }
            _ => panic!("expected infinite localization"),
        }
    }

    #[test]
    fn colocal_cases() {
        let crown = q("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3\narrow 3 1");
        match localize_colocal(&crown, &VertexId::new("2")).unwrap() {
            LocalizationResult::Finite { quiver, .. } => {
                assert_eq!(
                    quiver.label(&VertexId::new("2"), &VertexId::new("2")),
                    Some((1, 1))
                );
            }
            _ => panic!("expected finite"),
        }
        let line = q("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3");
        match localize_colocal(&line, &VertexId::new("2")).unwrap() {
            LocalizationResult::Finite { quiver, .. } => {
                assert!(quiver
                    .label(&VertexId::new("2"), &VertexId::new("2"))
                    .is_none());
            }
            _ => panic!("expected finite"),
        }
        // a kept vertex's own loop is a zero-interior path, kept verbatim
        let two_loop = q("vertex a\narrow a a 2 2");
        match localize_colocal(&two_loop, &VertexId::new("a")).unwrap() {
            LocalizationResult::Finite { quiver, .. } => {
                assert_eq!(
                    quiver.label(&VertexId::new("a"), &VertexId::new("a")),
                    Some((2, 2))
                );
            }
            _ => panic!("expected finite"),
        }
    }

    #[test]
    fn empty_and_unknown_subsets() {
        let line = q("vertex 1\nvertex 2\narrow 1 2");
        assert_eq!(
            localize_quiver(&line, &VertexSubset::new([])),
            Err(LocalizeError::EmptySubset)
        );
        assert_eq!(
            localize_quiver(&line, &keep(&["9"])),
            Err(LocalizeError::UnknownVertex(VertexId::new("9")))
        );
    }

    #[test]
    fn restrict_composes_arrow_maps() {
        use crate::field::Rat;
        use crate::injectives::injective_truncation;
        let line = q("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3");
        let pq = PointedQuiver::from_valued(&line).unwrap();
        let m = injective_truncation::<Rat>(&pq, &VertexId::new("3"), 3).unwrap();
        let r = restrict_comodule(&m, &keep(&["1", "3"])).unwrap();
        assert_eq!(r.total_dim(), 2);
        assert!(r.is_uniserial());

        // torsion simple restricts to zero
        let s2 = Representation::<Rat>::simple(pq.clone(), 1);
        let z = restrict_comodule(&s2, &keep(&["1", "3"])).unwrap();
        assert!(z.is_zero());

        // keeping everything returns the same maps
        let full = restrict_comodule(&m, &keep(&["1", "2", "3"])).unwrap();
        assert_eq!(full.dims, m.dims);
        assert_eq!(full.maps, m.maps);
    }

    #[test]
    fn local_global_vee() {
        let vee = q("vertex 1\nvertex 2\nvertex 3\narrow 1 3\narrow 2 3");
        let report = check_serial_local_global(&vee).unwrap();
        assert!(!report.global_right_serial);
        assert!(report.le2_false_positive);
        assert!(report.le3_matches_global);
        assert_eq!(report.failing_le3.len(), 1);
    }

    #[test]
    fn local_global_serial_inputs() {
        for dsl in [
            "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow 1 2\narrow 2 3\narrow 3 4",
            "vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3\narrow 3 1",
        ] {
            let report = check_serial_local_global(&q(dsl)).unwrap();
            assert!(report.global_right_serial);
            assert!(report.failing_le3.is_empty());
            assert!(report.le3_matches_global);
            assert!(!report.le2_false_positive);
        }
    }
}
