//! Exact sparse Gaussian elimination.
//!
//! Rows are sparse maps from an ordered column key to a nonzero scalar; the
//! pivot of a row is its greatest key. Every stored row is monic and no two
//! share a pivot, so the span of stored rows meets `{keys <= k}` exactly in
//! the span of the rows whose pivot is `<= k`.

use alloc::collections::BTreeMap;

use crate::scalar::{FieldSpec, Scalar};

pub type SparseRow<K> = BTreeMap<K, Scalar>;

#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    field: FieldSpec,
    rows: BTreeMap<K, SparseRow<K>>,
}

pub(crate) fn add_scaled_row<K: Ord + Clone>(acc: &mut SparseRow<K>, c: &Scalar, row: &SparseRow<K>) {
    for (k, v) in row {
        let delta = c * v;
        match acc.get_mut(k) {
            Some(e) => {
                let s = &*e + &delta;
                if s.is_zero() {
                    acc.remove(k);
                } else {
                    *e = s;
                }
            }
            None => {
                if !delta.is_zero() {
                    acc.insert(k.clone(), delta);
                }
            }
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new(field: FieldSpec) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Subtracts stored rows until the leading key is not a pivot.
    pub fn top_reduce(&self, mut row: SparseRow<K>) -> SparseRow<K> {
        while let Some((k, c)) = row.last_key_value() {
            let Some(p) = self.rows.get(k) else { break };
            let c = -c;
            add_scaled_row(&mut row, &c, p);
        }
        row
    }

    pub fn contains(&self, row: SparseRow<K>) -> bool {
        self.top_reduce(row).is_empty()
    }

    /// Adds a row to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow<K>) -> bool {
        let r = self.top_reduce(row);
        let Some((k, c)) = r.last_key_value() else {
            return false;
        };
        let inv = c.inverse().expect("nonzero pivot");
        let k = k.clone();
        let monic: SparseRow<K> = r.iter().map(|(key, v)| (key.clone(), v * &inv)).collect();
        self.rows.insert(k, monic);
        true
    }

    /// Number of stored rows whose pivot satisfies `pred`.
    pub fn count_pivots(&self, pred: impl Fn(&K) -> bool) -> usize {
        self.rows.keys().filter(|k| pred(k)).count()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseRow<K>> {
        self.rows.values()
    }
}

/// Rank of a dense matrix.
pub fn rank(field: FieldSpec, matrix: &[alloc::vec::Vec<Scalar>]) -> usize {
    let mut e: Echelon<usize> = Echelon::new(field);
    for row in matrix {
        let sparse: SparseRow<usize> = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        e.insert(sparse);
    }
    e.rank()
}
