//! Hom-space computation, isomorphism search, indecomposability and
//! exhaustive subcomodule enumeration.
//!
//! `hom_space` solves the defining commutation equations exactly; the
//! searches on top of it are conclusive: exhaustive over a finite field,
//! and by polynomial identity testing on a grid over the rationals.

use crate::field::Field;
use crate::linalg::{all_subspaces, Matrix};
use crate::rep::{GradedSubspace, Morphism, RepError, Representation};

/// Basis of `Hom(m, n)`: all per-vertex block families commuting with
/// every arrow map.
pub fn hom_space<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Vec<Morphism<F>> {
    let verts = m.dims.len();
    let mut offset = vec![0usize; verts + 1];
    for x in 0..verts {
        offset[x + 1] = offset[x] + n.dims[x] * m.dims[x];
    }
    let nvars = offset[verts];
    let var = |x: usize, r: usize, c: usize| offset[x] + r * m.dims[x] + c;

    let mut rows: Vec<Vec<F>> = Vec::new();
    for (ai, a) in m.pq.arrows.iter().enumerate() {
        // f_dst . vM_a - vN_a . f_src = 0
        for r in 0..n.dims[a.dst] {
            for c in 0..m.dims[a.src] {
                let mut row = vec![F::zero(); nvars];
                for k in 0..m.dims[a.dst] {
                    let coeff = m.maps[ai].get(k, c).clone();
                    if !coeff.is_zero() {
                        row[var(a.dst, r, k)] = row[var(a.dst, r, k)].add(&coeff);
                    }
                }
                for k in 0..n.dims[a.src] {
                    let coeff = n.maps[ai].get(r, k).clone();
                    if !coeff.is_zero() {
                        row[var(a.src, k, c)] = row[var(a.src, k, c)].sub(&coeff);
                    }
                }
                rows.push(row);
            }
        }
    }
    let eqs = Matrix::from_rows(nvars, &rows);
    eqs.kernel_basis()
        .into_iter()
        .map(|sol| {
            let blocks = (0..verts)
                .map(|x| {
                    let mut b = Matrix::zero(n.dims[x], m.dims[x]);
                    for r in 0..n.dims[x] {
                        for c in 0..m.dims[x] {
                            b.set(r, c, sol[var(x, r, c)].clone());
                        }
                    }
                    b
                })
                .collect();
            Morphism { blocks }
        })
        .collect()
}

pub fn hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    hom_space(m, n).len()
}

fn combine<F: Field>(basis: &[Morphism<F>], coeffs: &[F]) -> Morphism<F> {
    let mut acc = basis[0].scale(&coeffs[0]);
    for (b, c) in basis.iter().zip(coeffs.iter()).skip(1) {
        acc = acc.add(&b.scale(c));
    }
    acc
}

/// Iterate over all coefficient tuples from `points^len`, calling `visit`
/// until it returns `Some`.
fn search_tuples<F: Field, T>(
    points: &[F],
    len: usize,
    mut visit: impl FnMut(&[F]) -> Option<T>,
) -> Option<T> {
    let mut idx = vec![0usize; len];
    loop {
        let coeffs: Vec<F> = idx.iter().map(|&i| points[i].clone()).collect();
        if let Some(t) = visit(&coeffs) {
            return Some(t);
        }
        let mut carry = true;
        for i in idx.iter_mut() {
            if carry {
                *i += 1;
                if *i == points.len() {
                    *i = 0;
                } else {
                    carry = false;
                }
            }
        }
        if carry {
            return None;
        }
    }
}

const SEARCH_LIMIT: usize = 2_000_000;

/// Find an isomorphism `m -> n`, or certify that none exists.
///
/// Over a finite field the coefficient search is exhaustive. Over the
/// rationals the per-vertex determinants of a morphism are polynomials of
/// total degree at most `total_dim` in the Hom coordinates, so a grid of
/// `total_dim + 1` points per coordinate is conclusive.
pub fn find_isomorphism<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
) -> Result<Option<Morphism<F>>, RepError> {
    if m.dims != n.dims {
        return Ok(None);
    }
    if m.total_dim() == 0 {
        return Ok(Some(Morphism::identity(m)));
    }
    let basis = hom_space(m, n);
    if basis.is_empty() {
        return Ok(None);
    }
    let points = F::sample_points(m.total_dim());
    let combos = points.len().checked_pow(basis.len() as u32);
    if combos.is_none_or(|c| c > SEARCH_LIMIT) {
        return Err(RepError::DimensionBoundExceeded(format!(
            "isomorphism search over {} hom-basis elements",
            basis.len()
        )));
    }
    Ok(search_tuples(&points, basis.len(), |coeffs| {
        if coeffs.iter().all(|c| c.is_zero()) {
            return None;
        }
        let f = combine(&basis, coeffs);
        if f.is_invertible() {
            Some(f)
        } else {
            None
        }
    }))
}

pub fn is_isomorphic<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
) -> Result<bool, RepError> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// Indecomposability via idempotent search in `End(m)`.
///
/// A one-dimensional endomorphism algebra settles it immediately. Otherwise
/// idempotents are searched over `{0,1}` coefficients (exhaustively over a
/// finite field); finding one is a proof of decomposability over any field.
/// Over the rationals an inconclusive search raises an error rather than
/// guessing.
pub fn is_indecomposable<F: Field>(
    m: &Representation<F>,
    dim_bound: usize,
) -> Result<bool, RepError> {
    assert!(
        !m.is_zero(),
        "indecomposability of the zero module is undefined"
    );
    if m.total_dim() > dim_bound {
        return Err(RepError::DimensionBoundExceeded(format!(
            "total dimension {} exceeds bound {}",
            m.total_dim(),
            dim_bound
        )));
    }
    let end = hom_space(m, m);
    if end.len() == 1 {
        // End = K . id is local.
        return Ok(true);
    }
    let exhaustive = F::all_elements().is_some();
    let points = match F::all_elements() {
        Some(all) => all,
        None => vec![F::zero(), F::one()],
    };
    if points
        .len()
        .checked_pow(end.len() as u32)
        .is_none_or(|c| c > SEARCH_LIMIT)
    {
        return Err(RepError::DimensionBoundExceeded(format!(
            "idempotent search over End of dimension {}",
            end.len()
        )));
    }
    let id = Morphism::identity(m);
    let found = search_tuples(&points, end.len(), |coeffs| {
        if coeffs.iter().all(|c| c.is_zero()) {
            return None;
        }
        let e = combine(&end, coeffs);
        if e.is_zero() || e == id {
            return None;
        }
        if e.compose(&e) == e {
            Some(())
        } else {
            None
        }
    });
    match found {
        Some(()) => Ok(false),
        None if exhaustive => Ok(true),
        None => Err(RepError::DimensionBoundExceeded(
            "nontrivial End over an infinite field; idempotent search inconclusive".into(),
        )),
    }
}

/// Solve `g . f = h` for a morphism `g: mid -> n`, where `f: m -> mid`
/// and `h: m -> n`. Returns `None` when no factoring exists.
pub fn factor_through<F: Field>(
    mid: &Representation<F>,
    n: &Representation<F>,
    f: &Morphism<F>,
    h: &Morphism<F>,
) -> Option<Morphism<F>> {
    let verts = mid.dims.len();
    let mut offset = vec![0usize; verts + 1];
    for x in 0..verts {
        offset[x + 1] = offset[x] + n.dims[x] * mid.dims[x];
    }
    let nvars = offset[verts];
    let var = |x: usize, r: usize, c: usize| offset[x] + r * mid.dims[x] + c;

    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut rhs: Vec<F> = Vec::new();
    // morphism commutation for g
    for (ai, a) in mid.pq.arrows.iter().enumerate() {
        for r in 0..n.dims[a.dst] {
            for c in 0..mid.dims[a.src] {
                let mut row = vec![F::zero(); nvars];
                for k in 0..mid.dims[a.dst] {
                    let coeff = mid.maps[ai].get(k, c).clone();
                    if !coeff.is_zero() {
                        row[var(a.dst, r, k)] = row[var(a.dst, r, k)].add(&coeff);
                    }
                }
                for k in 0..n.dims[a.src] {
                    let coeff = n.maps[ai].get(r, k).clone();
                    if !coeff.is_zero() {
                        row[var(a.src, k, c)] = row[var(a.src, k, c)].sub(&coeff);
                    }
                }
                rows.push(row);
                rhs.push(F::zero());
            }
        }
    }
    // g_x . f_x = h_x
    for x in 0..verts {
        let mcols = f.blocks[x].cols;
        for r in 0..n.dims[x] {
            for c in 0..mcols {
                let mut row = vec![F::zero(); nvars];
                for k in 0..mid.dims[x] {
                    let coeff = f.blocks[x].get(k, c).clone();
                    if !coeff.is_zero() {
                        row[var(x, r, k)] = row[var(x, r, k)].add(&coeff);
                    }
                }
                rows.push(row);
                rhs.push(h.blocks[x].get(r, c).clone());
            }
        }
    }
    let a = Matrix::from_rows(nvars, &rows);
    let sol = a.solve(&rhs)?;
    let blocks = (0..verts)
        .map(|x| {
            let mut b = Matrix::zero(n.dims[x], mid.dims[x]);
            for r in 0..n.dims[x] {
                for c in 0..mid.dims[x] {
                    b.set(r, c, sol[var(x, r, c)].clone());
                }
            }
            b
        })
        .collect();
    Some(Morphism { blocks })
}

/// All subcomodules of `m`, by exhaustive graded-subspace enumeration.
/// Needs a finite coefficient field and a small total dimension.
pub fn enumerate_subcomodules<F: Field>(
    m: &Representation<F>,
    dim_bound: usize,
) -> Result<Vec<GradedSubspace<F>>, RepError> {
    assert!(
        F::all_elements().is_some(),
        "subcomodule enumeration needs a finite coefficient field"
    );
    if m.total_dim() > dim_bound {
        return Err(RepError::DimensionBoundExceeded(format!(
            "total dimension {} exceeds bound {}",
            m.total_dim(),
            dim_bound
        )));
    }
    let per_vertex: Vec<Vec<_>> = m.dims.iter().map(|&d| all_subspaces::<F>(d)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; m.dims.len()];
    loop {
        let candidate: GradedSubspace<F> = idx
            .iter()
            .enumerate()
            .map(|(x, &i)| per_vertex[x][i].clone())
            .collect();
        let invariant = m.pq.arrows.iter().enumerate().all(|(ai, a)| {
            candidate[a.src]
                .basis_vectors()
                .iter()
                .all(|b| candidate[a.dst].contains(&m.maps[ai].apply(b)))
        });
        if invariant {
            out.push(candidate);
        }
        let mut carry = true;
        for (x, i) in idx.iter_mut().enumerate() {
            if carry {
                *i += 1;
                if *i == per_vertex[x].len() {
                    *i = 0;
                } else {
                    carry = false;
                }
            }
        }
        if carry {
            break;
        }
    }
    Ok(out)
}

pub fn graded_contains<F: Field>(outer: &GradedSubspace<F>, inner: &GradedSubspace<F>) -> bool {
    outer
        .iter()
        .zip(inner.iter())
        .all(|(o, i)| o.contains_subspace(i))
}

/// A lattice of subcomodules is a chain iff every two members are comparable.
pub fn lattice_is_chain<F: Field>(subs: &[GradedSubspace<F>]) -> bool {
    for (i, a) in subs.iter().enumerate() {
        for b in subs.iter().skip(i + 1) {
            if !graded_contains(a, b) && !graded_contains(b, a) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rat};
    use crate::pointed::PointedQuiver;
    use crate::quiver::parse_quiver;
    use std::rc::Rc;

    fn a3() -> Rc<PointedQuiver> {
        let q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3").unwrap();
        PointedQuiver::from_valued(&q).unwrap()
    }

    fn interval<F: Field>(pq: Rc<PointedQuiver>, from: usize, to: usize) -> Representation<F> {
        // interval module on a line quiver with identity maps on [from, to]
        let mut dims = vec![0; pq.vertex_count()];
        for x in from..=to {
            dims[x] = 1;
        }
        let maps = pq
            .arrows
            .iter()
            .map(|a| {
                let mut m = Matrix::zero(dims[a.dst], dims[a.src]);
                if dims[a.src] == 1 && dims[a.dst] == 1 {
                    m.set(0, 0, F::one());
                }
                m
            })
            .collect();
        Representation::new(pq, dims, maps)
    }

    #[test]
    fn hom_between_simples() {
        let pq = a3();
        let s1 = Representation::<Rat>::simple(pq.clone(), 0);
        let s2 = Representation::<Rat>::simple(pq, 1);
        assert_eq!(hom_dim(&s1, &s1), 1);
        assert_eq!(hom_dim(&s1, &s2), 0);
    }

    #[test]
    fn hom_of_nested_intervals() {
        let pq = a3();
        // soc^2 E_3 = interval [2,3], soc^3 E_3 = interval [1,3]
        let small = interval::<Rat>(pq.clone(), 1, 2);
        let big = interval::<Rat>(pq, 0, 2);
        assert_eq!(hom_dim(&small, &big), 1);
    }

    #[test]
    fn iso_search_conclusive() {
        let pq = a3();
        let m = interval::<Rat>(pq.clone(), 0, 2);
        assert!(find_isomorphism(&m, &m).unwrap().is_some());
        let s = Representation::<Rat>::simple(pq, 0);
        assert!(find_isomorphism(&m, &s).unwrap().is_none());
    }

    #[test]
    fn indecomposability() {
        let pq = a3();
        let m = interval::<Rat>(pq.clone(), 0, 2);
        assert!(is_indecomposable(&m, 8).unwrap());
        let s = Representation::<Rat>::simple(pq, 0);
        let ss = s.direct_sum(&s).rep;
        assert!(!is_indecomposable(&ss, 8).unwrap());
    }

    #[test]
    fn factoring_inclusion() {
        let pq = a3();
        let small = interval::<Rat>(pq.clone(), 1, 2);
        let big = interval::<Rat>(pq.clone(), 0, 2);
        let f = hom_space(&small, &big).pop().unwrap();
        // h = f factors through f trivially via the identity
        let g = factor_through(&big, &big, &f, &f).unwrap();
        assert!(g.is_valid(&big, &big));
        assert_eq!(g.compose(&f), f);
    }

    #[test]
    fn subcomodule_lattice_chain_vs_not() {
        let pq = a3();
        let m = interval::<Gf2>(pq.clone(), 0, 2);
        let subs = enumerate_subcomodules(&m, 5).unwrap();
        assert_eq!(subs.len(), 4); // 0 < S < soc^2 < M
        assert!(lattice_is_chain(&subs));

        let s = Representation::<Gf2>::simple(pq, 0);
        let ss = s.direct_sum(&s).rep;
        let subs = enumerate_subcomodules(&ss, 5).unwrap();
        assert_eq!(subs.len(), 5); // all subspaces of a 2-dim semisimple over F2
        assert!(!lattice_is_chain(&subs));
    }

    #[test]
    fn zero_module_single_subcomodule() {
        let pq = a3();
        let z = Representation::<Gf2>::zero(pq);
        let subs = enumerate_subcomodules(&z, 5).unwrap();
        assert_eq!(subs.len(), 1);
    }
}
