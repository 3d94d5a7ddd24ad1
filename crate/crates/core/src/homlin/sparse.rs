//! Sparse matrices and exact rank computations by pivoted elimination.
//!
//! Pivots are chosen to keep fill low: the sparsest remaining row, and within
//! it the entry whose column is sparsest.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{invariant_factors, IntMatrix};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![BTreeMap::new(); nrows],
        }
    }

    pub fn from_triplets(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut m = Self::new(nrows, ncols);
        for (i, j, v) in entries {
            m.add(i, j, v);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            rows.len(),
            ncols,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v))),
        )
    }

    pub fn add(&mut self, i: usize, j: usize, v: i64) {
        assert!(i < self.nrows && j < self.ncols, "entry ({i}, {j}) out of bounds");
        if v == 0 {
            return;
        }
        let e = self.rows[i].entry(j).or_insert(0);
        *e += v;
        if *e == 0 {
            self.rows[i].remove(&j);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i].get(&j).copied().unwrap_or(0)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.rows[i].iter().map(|(&j, &v)| (j, v))
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.nrows, self.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            for (&j, &v) in r {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut out = SparseMatrix::new(self.nrows, other.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            for (&k, &a) in r {
                for (&j, &b) in &other.rows[k] {
                    out.add(i, j, a.checked_mul(b).expect("entry overflow"));
                }
            }
        }
        out
    }

    /// Rank over the rationals.
    pub fn rank_rational(&self) -> usize {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(&j, &v)| (j, BigInt::from(v))).collect())
            .collect();
        eliminate(rows, self.ncols, &FractionFree, |_| ())
    }

    /// Rank over `𝔽_p`; `p` must be prime.
    pub fn rank_mod(&self, p: u64) -> usize {
        let f = ModP(p);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(&j, &v)| (j, v.rem_euclid(p as i64) as u64))
                    .filter(|(_, v)| *v != 0)
                    .collect()
            })
            .collect();
        eliminate(rows, self.ncols, &f, |_| ())
    }

    /// All invariant factors (including units) of the integer matrix.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut rows: Vec<BTreeMap<usize, BigInt>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(&j, &v)| (j, BigInt::from(v))).collect())
            .collect();
        let units = eliminate_units(&mut rows, self.ncols);
        // compress what is left into a dense block
        let live_rows: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
        let live_cols: BTreeSet<usize> = live_rows.iter().flat_map(|&i| rows[i].keys().copied()).collect();
        let col_index: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut dense = IntMatrix::zeros(live_rows.len(), live_cols.len());
        for (a, &i) in live_rows.iter().enumerate() {
            for (j, v) in &rows[i] {
                dense[(a, col_index[j])] = v.clone();
            }
        }
        let mut out = vec![BigInt::one(); units];
        out.extend(invariant_factors(&dense));
        out
    }
}

trait Elim {
    type E: Clone;
    fn is_zero(&self, x: &Self::E) -> bool;
    /// New value of row `i` at a column, given the pivot `a_rc`, row `i`'s
    /// entry `a_ic` in the pivot column, and the two current entries.
    fn combine(&self, a_rc: &Self::E, a_ic: &Self::E, x_i: Option<&Self::E>, x_r: &Self::E) -> Self::E;
    fn scale_untouched(&self, a_rc: &Self::E, x_i: &Self::E) -> Self::E;
    fn normalize(&self, _row: &mut BTreeMap<usize, Self::E>) {}
}

struct ModP(u64);

impl ModP {
    fn inv(&self, a: u64) -> u64 {
        let mut r = 1u64;
        let mut b = a % self.0;
        let mut e = self.0 - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = ((r as u128 * b as u128) % self.0 as u128) as u64;
            }
            b = ((b as u128 * b as u128) % self.0 as u128) as u64;
            e >>= 1;
        }
        r
    }
}

impl Elim for ModP {
    type E = u64;
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn combine(&self, a_rc: &u64, a_ic: &u64, x_i: Option<&u64>, x_r: &u64) -> u64 {
        let p = self.0 as u128;
        let f = (*a_ic as u128 * self.inv(*a_rc) as u128) % p;
        let sub = (f * *x_r as u128) % p;
        ((x_i.copied().unwrap_or(0) as u128 + p - sub) % p) as u64
    }
    fn scale_untouched(&self, _a_rc: &u64, x_i: &u64) -> u64 {
        *x_i
    }
}

struct FractionFree;

impl Elim for FractionFree {
    type E = BigInt;
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn combine(&self, a_rc: &BigInt, a_ic: &BigInt, x_i: Option<&BigInt>, x_r: &BigInt) -> BigInt {
        let base = x_i.map_or_else(BigInt::zero, |x| a_rc * x);
        base - a_ic * x_r
    }
    fn scale_untouched(&self, a_rc: &BigInt, x_i: &BigInt) -> BigInt {
        a_rc * x_i
    }
    fn normalize(&self, row: &mut BTreeMap<usize, BigInt>) {
        let g = row.values().fold(BigInt::zero(), |g, v| g.gcd(v));
        if !g.is_zero() && !g.is_one() {
            for v in row.values_mut() {
                *v /= &g;
            }
        }
    }
}

/// Gaussian elimination; returns the rank. `on_pivot` sees each pivot row.
fn eliminate<F: Elim>(
    mut rows: Vec<BTreeMap<usize, F::E>>,
    ncols: usize,
    field: &F,
    mut on_pivot: impl FnMut(&BTreeMap<usize, F::E>),
) -> usize {
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for &j in r.keys() {
            cols[j].insert(i);
        }
    }
    let mut alive: BTreeSet<(usize, usize)> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_empty())
        .map(|(i, r)| (r.len(), i))
        .collect();
    let mut rank = 0;
    while let Some(&(len, r)) = alive.iter().next() {
        alive.remove(&(len, r));
        if rows[r].is_empty() {
            continue;
        }
        let c = *rows[r].keys().min_by_key(|&&j| cols[j].len()).unwrap();
        let pivot_row = std::mem::take(&mut rows[r]);
        for &j in pivot_row.keys() {
            cols[j].remove(&r);
        }
        on_pivot(&pivot_row);
        rank += 1;
        let a_rc = pivot_row[&c].clone();
        let targets: Vec<usize> = cols[c].iter().copied().collect();
        for i in targets {
            let old_len = rows[i].len();
            let a_ic = rows[i][&c].clone();
            let mut new_row: BTreeMap<usize, F::E> = BTreeMap::new();
            for (j, x) in &rows[i] {
                if !pivot_row.contains_key(j) {
                    new_row.insert(*j, field.scale_untouched(&a_rc, x));
                }
            }
            for (j, x_r) in &pivot_row {
                let v = field.combine(&a_rc, &a_ic, rows[i].get(j), x_r);
                if !field.is_zero(&v) {
                    new_row.insert(*j, v);
                }
            }
            field.normalize(&mut new_row);
            for j in rows[i].keys() {
                if !new_row.contains_key(j) {
                    cols[*j].remove(&i);
                }
            }
            for j in new_row.keys() {
                cols[*j].insert(i);
            }
            rows[i] = new_row;
            alive.remove(&(old_len, i));
            if !rows[i].is_empty() {
                alive.insert((rows[i].len(), i));
            }
        }
    }
    rank
}

/// Eliminates unit pivots in place, deleting their rows and columns; returns
/// how many were removed. The invariant factors of what remains, together
/// with that many ones, are those of the input.
fn eliminate_units(rows: &mut [BTreeMap<usize, BigInt>], ncols: usize) -> usize {
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for &j in r.keys() {
            cols[j].insert(i);
        }
    }
    let mut count = 0;
    loop {
        // Markowitz cost (row_len - 1) * (col_len - 1) among unit entries
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            for (&j, v) in r {
                if v.abs().is_one() {
                    let cost = (r.len() - 1) * (cols[j].len() - 1);
                    if best.is_none_or(|(b, _, _)| cost < b) {
                        best = Some((cost, i, j));
                    }
                }
            }
            if best.is_some_and(|(b, _, _)| b == 0) {
                break;
            }
        }
        let Some((_, r, c)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[r]);
        for &j in pivot_row.keys() {
            cols[j].remove(&r);
        }
        let a_rc = pivot_row[&c].clone();
        let targets: Vec<usize> = cols[c].iter().copied().collect();
        for i in targets {
            // row_i -= (a_ic / a_rc) row_r, exact since a_rc = ±1
            let f = &rows[i][&c] * &a_rc;
            for (j, x) in &pivot_row {
                let v = rows[i].get(j).cloned().unwrap_or_default() - &f * x;
                if v.is_zero() {
                    rows[i].remove(j);
                    cols[*j].remove(&i);
                } else {
                    rows[i].insert(*j, v);
                    cols[*j].insert(i);
                }
            }
        }
        count += 1;
    }
    count
}

/// Matrix of a linear map between finite bases, target rows by source columns.
pub fn matrix_of<K: Ord + Clone + std::hash::Hash>(
    source: &[K],
    target: &[K],
    image: impl Fn(&K) -> Result<LinComb<K, i64>>,
) -> Result<SparseMatrix> {
    let index: HashMap<&K, usize> = target.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = SparseMatrix::new(target.len(), source.len());
    for (j, s) in source.iter().enumerate() {
        for (k, c) in &image(s)? {
            let Some(&i) = index.get(k) else {
                return Err(Error::Invalid("differential leaves the computed basis".into()));
            };
            m.add(i, j, *c);
        }
    }
    Ok(m)
}
