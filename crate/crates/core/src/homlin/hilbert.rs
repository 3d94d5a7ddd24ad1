//! Hilbert functions of graded quotients of polynomial rings.

use std::collections::BTreeMap;

use super::sparse::SparseMatrix;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ring::CoefficientRing;

/// An exponent vector.
pub type Monomial = Vec<u32>;

pub type Polynomial = LinComb<Monomial, i64>;

pub fn monomial_degree(m: &[u32], var_degrees: &[usize]) -> usize {
    m.iter().zip(var_degrees).map(|(&e, &d)| e as usize * d).sum()
}

/// All monomials of internal degree `d`.
pub fn monomials_of_degree(var_degrees: &[usize], d: usize) -> Vec<Monomial> {
    fn rec(var_degrees: &[usize], i: usize, left: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == var_degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = var_degrees[i];
        if w == 0 {
            panic!("variables must have positive degree");
        }
        let mut e = 0;
        while e * w <= left {
            cur[i] = e as u32;
            rec(var_degrees, i + 1, left - e * w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(var_degrees, 0, d, &mut vec![0; var_degrees.len()], &mut out);
    out
}

/// Rank of a family of sparse vectors over a field.
pub fn rank_of_vectors<K: Ord + Clone>(vectors: &[LinComb<K, i64>], ring: CoefficientRing) -> Result<usize> {
    if !ring.is_field() {
        return Err(Error::NotField(ring.to_string()));
    }
    let mut index: BTreeMap<K, usize> = BTreeMap::new();
    for v in vectors {
        for k in v.keys() {
            let n = index.len();
            index.entry(k.clone()).or_insert(n);
        }
    }
    let mut m = SparseMatrix::new(vectors.len(), index.len());
    for (i, v) in vectors.iter().enumerate() {
        for (k, a) in v {
            m.add(i, index[k], *a);
        }
    }
    Ok(match ring {
        CoefficientRing::IntegersMod { modulus } => m.rank_mod(modulus),
        _ => m.rank_rational(),
    })
}

/// `dim_k (k[x_1, ..., x_n] / (relations))_d` for `d = 0..=max_degree`.
///
/// Relations must be homogeneous.
pub fn hilbert_function(
    var_degrees: &[usize],
    relations: &[Polynomial],
    max_degree: usize,
    ring: CoefficientRing,
) -> Result<Vec<usize>> {
    if !ring.is_field() {
        return Err(Error::NotField(ring.to_string()));
    }
    if var_degrees.contains(&0) {
        return Err(Error::Invalid("variables must have positive degree".into()));
    }
    let mut rel_degrees = Vec::new();
    for r in relations {
        let degs: Vec<usize> = r.keys().map(|m| monomial_degree(m, var_degrees)).collect();
        match degs.first() {
            None => rel_degrees.push(None),
            Some(&d) if degs.iter().all(|&e| e == d) => rel_degrees.push(Some(d)),
            Some(_) => return Err(Error::Invalid(format!("relation {r:?} is not homogeneous"))),
        }
    }
    let mut out = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let basis = monomials_of_degree(var_degrees, d);
        let mut spanning = Vec::new();
        for (r, e) in relations.iter().zip(&rel_degrees) {
            let Some(e) = *e else { continue };
            if e > d {
                continue;
            }
            for m in monomials_of_degree(var_degrees, d - e) {
                spanning.push(r.map_keys(|t| Some((t.iter().zip(&m).map(|(a, b)| a + b).collect::<Monomial>(), 1))));
            }
        }
        out.push(basis.len() - rank_of_vectors(&spanning, ring)?);
    }
    Ok(out)
}
