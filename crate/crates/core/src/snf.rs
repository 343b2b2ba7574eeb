//! Smith normal form over the integers.
//!
//! Unit pivots are eliminated sparsely first (boundary matrices are almost
//! entirely ±1). Whatever survives is reduced densely with the
//! smallest-absolute-value pivot rule. Arithmetic runs in checked i64 and the
//! whole computation is redone with big integers if anything overflows.

use std::collections::BTreeSet;
use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    /// Row-major sparse rows of (column, value), sorted by column, no zeros.
    data: Vec<Vec<(usize, i64)>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let data = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
            .collect();
        IntegerMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut m = IntegerMatrix::zeros(rows, cols);
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            m.data[r].push((c, v));
        }
        for row in &mut m.data {
            row.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *row = merged;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r].binary_search_by_key(&c, |e| e.0).map_or(0, |i| self.data[r][i].1)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                d[r][c] = v;
            }
        }
        d
    }

    /// Product self · other, exact in i128 and narrowed back to i64.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: std::collections::BTreeMap<usize, i128> = Default::default();
            for &(k, a) in row {
                for &(c, b) in &other.data[k] {
                    *acc.entry(c).or_insert(0) += a as i128 * b as i128;
                }
            }
            out.push(
                acc.into_iter()
                    .filter(|e| e.1 != 0)
                    .map(|(c, v)| (c, i64::try_from(v).expect("product entry fits i64")))
                    .collect(),
            );
        }
        IntegerMatrix { rows: self.rows, cols: other.cols, data: out }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors d₁ | d₂ | …, all positive.
    pub diagonal: Vec<BigUint>,
    pub rank: usize,
    /// True when the i64 pass overflowed and big integers were used.
    pub escalated: bool,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

#[derive(Debug)]
struct Overflow;

trait Scalar: Clone + Debug + PartialEq + Ord {
    fn from_i64(v: i64) -> Self;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_val(&self) -> Self;
    /// a − q·b
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Result<Self, Overflow>;
    fn add(a: &Self, b: &Self) -> Result<Self, Overflow>;
    /// Floor division quotient.
    fn quot(a: &Self, b: &Self) -> Self;
    fn divides(a: &Self, b: &Self) -> bool;
    fn neg(&self) -> Result<Self, Overflow>;
    fn to_biguint(&self) -> BigUint;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_val(&self) -> Self {
        self.checked_abs().unwrap_or(i64::MAX)
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        q.checked_mul(*b).and_then(|p| a.checked_sub(p)).ok_or(Overflow)
    }
    fn add(a: &Self, b: &Self) -> Result<Self, Overflow> {
        a.checked_add(*b).ok_or(Overflow)
    }
    fn quot(a: &Self, b: &Self) -> Self {
        a.div_floor(b)
    }
    fn divides(a: &Self, b: &Self) -> bool {
        b % a == 0
    }
    fn neg(&self) -> Result<Self, Overflow> {
        self.checked_neg().ok_or(Overflow)
    }
    fn to_biguint(&self) -> BigUint {
        BigUint::from(self.unsigned_abs())
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        Ok(a - q * b)
    }
    fn add(a: &Self, b: &Self) -> Result<Self, Overflow> {
        Ok(a + b)
    }
    fn quot(a: &Self, b: &Self) -> Self {
        a.div_floor(b)
    }
    fn divides(a: &Self, b: &Self) -> bool {
        Zero::is_zero(&(b % a))
    }
    fn neg(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
    fn to_biguint(&self) -> BigUint {
        self.magnitude().clone()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    match snf_generic::<i64>(m) {
        Ok(diag) => SmithForm { rank: diag.len(), diagonal: diag, escalated: false },
        Err(Overflow) => {
            let diag = snf_generic::<BigInt>(m).expect("big integers do not overflow");
            SmithForm { rank: diag.len(), diagonal: diag, escalated: true }
        }
    }
}

/// Rank only; same arithmetic as the full form.
pub fn rank(m: &IntegerMatrix) -> usize {
    smith_normal_form(m).rank
}

fn snf_generic<T: Scalar>(m: &IntegerMatrix) -> Result<Vec<BigUint>, Overflow> {
    let mut rows: Vec<Vec<(usize, T)>> =
        m.data.iter().map(|r| r.iter().map(|&(c, v)| (c, T::from_i64(v))).collect()).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c].insert(r);
        }
    }
    let mut row_alive = vec![true; m.rows];
    let mut units = 0usize;

    // sparse phase: eliminate unit pivots, cheapest Markowitz cost first
    loop {
        let mut best: Option<(usize, usize, usize)> = None; // (cost, row, col)
        'scan: for (c, rs) in col_rows.iter().enumerate() {
            if rs.is_empty() {
                continue;
            }
            for &r in rs {
                let row = &rows[r];
                let v = &row[row.binary_search_by_key(&c, |e| e.0).expect("index in sync")].1;
                if v.is_unit() {
                    let cost = (rs.len() - 1) * (row.len() - 1);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, r, c));
                        if cost == 0 {
                            break 'scan;
                        }
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[pr]);
        let pv = pivot_row[pivot_row.binary_search_by_key(&pc, |e| e.0).expect("pivot")].1.clone();
        let others: Vec<usize> = col_rows[pc].iter().copied().filter(|&r| r != pr).collect();
        for r in others {
            let row = std::mem::take(&mut rows[r]);
            let a = &row[row.binary_search_by_key(&pc, |e| e.0).expect("entry")].1;
            // pivot is ±1, so a/pv is exact
            let q = T::quot(a, &pv);
            let merged = axpy(&row, &q, &pivot_row)?;
            for &(c, _) in &row {
                col_rows[c].remove(&r);
            }
            for &(c, _) in &merged {
                col_rows[c].insert(r);
            }
            rows[r] = merged;
        }
        for &(c, _) in &pivot_row {
            col_rows[c].remove(&pr);
        }
        row_alive[pr] = false;
        units += 1;
    }

    // dense phase on the leftover block
    let live_rows: Vec<usize> = (0..m.rows).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols).filter(|&c| !col_rows[c].is_empty()).collect();
    let mut cidx = vec![usize::MAX; m.cols];
    for (i, &c) in live_cols.iter().enumerate() {
        cidx[c] = i;
    }
    let mut dense: Vec<Vec<T>> = live_rows
        .iter()
        .map(|&r| {
            let mut d = vec![T::zero(); live_cols.len()];
            for (c, v) in &rows[r] {
                d[cidx[*c]] = v.clone();
            }
            d
        })
        .collect();
    let tail = dense_snf(&mut dense)?;
    let mut diag = vec![BigUint::one(); units];
    diag.extend(tail.iter().map(Scalar::to_biguint));
    Ok(diag)
}

/// row − q·pivot, both sorted by column.
fn axpy<T: Scalar>(row: &[(usize, T)], q: &T, pivot: &[(usize, T)]) -> Result<Vec<(usize, T)>, Overflow> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            let v = T::sub_mul(&T::zero(), q, &pivot[j].1)?;
            out.push((cj, v));
            j += 1;
        } else {
            let v = T::sub_mul(&row[i].1, q, &pivot[j].1)?;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// In-place Smith reduction; returns the nonzero diagonal as a divisibility chain.
fn dense_snf<T: Scalar>(a: &mut [Vec<T>]) -> Result<Vec<T>, Overflow> {
    let nr = a.len();
    let nc = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..nr.min(nc) {
        // smallest |entry| in the trailing block
        let mut best: Option<(T, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() {
                    let av = v.abs_val();
                    if best.as_ref().is_none_or(|b| av < b.0) {
                        best = Some((av, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = T::quot(&a[i][t], &a[t][t]);
                for j in t..nc {
                    let v = T::sub_mul(&a[i][j], &q, &a[t][j])?;
                    a[i][j] = v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = T::quot(&a[t][j], &a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = T::sub_mul(&row[j], &q, &row[t])?;
                    row[j] = v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // the pivot must divide the rest of the block; fold an offending row in if not
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !T::divides(&a[t][t], &a[i][j])));
            match bad {
                Some(i) => {
                    for j in t..nc {
                        let v = T::add(&a[t][j], &a[i][j])?;
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        let d = a[t][t].clone();
        diag.push(if d < T::zero() { d.neg()? } else { d });
    }
    Ok(diag)
}

/// Convenience for small factors in reports and tests.
pub fn factors_u64(f: &[BigUint]) -> Vec<u64> {
    f.iter().map(|d| d.to_u64().expect("invariant factor fits u64")).collect()
}
