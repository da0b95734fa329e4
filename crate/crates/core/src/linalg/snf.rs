//! Smith normal form over the integers.
//!
//! Elimination always pivots on the entry of smallest absolute value in the
//! active block and reduces with rounded quotients, which keeps intermediate
//! entries small on the sparse ±1 matrices coming from face lattices.

use log::{debug, trace};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

/// `u · a · v = diag(d)` with `u`, `v` unimodular and `d[k] | d[k+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: Vec<BigInt>,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !x.is_zero()).count()
    }

    /// Diagonal matrix with the shape of the original input.
    pub fn diagonal_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::diagonal(self.u.rows(), self.v.cols(), &self.d)
    }
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SmithForm {
    let mut calc = SnfCalc::new(a, true);
    calc.run();
    let (d, u, v) = calc.finish();
    SmithForm {
        d,
        u: u.expect("transforms tracked"),
        v: v.expect("transforms tracked"),
    }
}

/// Diagonal of the Smith form only. Skips the transform bookkeeping.
pub fn invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    let mut calc = SnfCalc::new(a, false);
    calc.run();
    calc.finish().0
}

pub fn rank(a: &IntegerMatrix) -> usize {
    invariant_factors(a).iter().filter(|x| !x.is_zero()).count()
}

struct SnfCalc {
    a: Vec<Vec<BigInt>>,
    m: usize,
    n: usize,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            let mut r = vec![BigInt::zero(); n];
            r[i] = BigInt::one();
            r
        })
        .collect()
}

/// Quotient rounded to nearest, so that the remainder has |r| ≤ |b|/2.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    let twice = &r * 2;
    if b.is_positive() {
        if twice > *b {
            q + 1
        } else {
            q
        }
    } else if twice < *b {
        q + 1
    } else {
        q
    }
}

impl SnfCalc {
    fn new(a: &IntegerMatrix, track: bool) -> Self {
        let (m, n) = a.shape();
        Self {
            a: (0..m).map(|i| a.row(i).to_vec()).collect(),
            m,
            n,
            u: track.then(|| identity_rows(m)),
            v: track.then(|| identity_rows(n)),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = &mut self.u {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            if let Some(v) = &mut self.v {
                for row in v.iter_mut() {
                    row.swap(i, j);
                }
            }
        }
    }

    /// row[target] -= q * row[src], restricted to columns ≥ from.
    fn row_axpy(&mut self, target: usize, src: usize, q: &BigInt, from: usize) {
        let (t, s) = two_mut(&mut self.a, target, src);
        for k in from..t.len() {
            if !s[k].is_zero() {
                t[k] -= q * &s[k];
            }
        }
        if let Some(u) = &mut self.u {
            let (t, s) = two_mut(u, target, src);
            for k in 0..t.len() {
                if !s[k].is_zero() {
                    t[k] -= q * &s[k];
                }
            }
        }
    }

    /// col[target] -= q * col[src], restricted to rows ≥ from.
    fn col_axpy(&mut self, target: usize, src: usize, q: &BigInt, from: usize) {
        for row in &mut self.a[from..] {
            if !row[src].is_zero() {
                let delta = q * &row[src];
                row[target] -= delta;
            }
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                if !row[src].is_zero() {
                    let delta = q * &row[src];
                    row[target] -= delta;
                }
            }
        }
    }

    fn min_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                let better = match &best {
                    None => true,
                    Some((_, _, b)) => ax < *b,
                };
                if better {
                    let unit = ax.is_one();
                    best = Some((i, j, ax));
                    if unit {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Smallest nonzero entry in row t / column t outside the pivot.
    fn min_in_cross(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        let mut consider = |i: usize, j: usize, x: &BigInt| {
            if x.is_zero() {
                return;
            }
            let ax = x.abs();
            if best.as_ref().map_or(true, |(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        };
        for i in t + 1..self.m {
            consider(i, t, &self.a[i][t]);
        }
        for j in t + 1..self.n {
            consider(t, j, &self.a[t][j]);
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) {
        debug!("snf start: {}x{}", self.m, self.n);
        let steps = self.m.min(self.n);
        for t in 0..steps {
            let Some((pi, pj)) = self.min_in_block(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                self.clear_cross(t);
                if let Some((i, j)) = self.min_in_cross(t) {
                    // a remainder is smaller than the pivot: promote it
                    if i == t {
                        self.swap_cols(t, j);
                    } else {
                        self.swap_rows(t, i);
                    }
                    continue;
                }
                match self.non_divisible(t) {
                    Some(i) => {
                        let minus_one = -BigInt::one();
                        self.row_axpy(t, i, &minus_one, t);
                    }
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                for x in &mut self.a[t][t..] {
                    *x = -&*x;
                }
                if let Some(u) = &mut self.u {
                    for x in &mut u[t] {
                        *x = -&*x;
                    }
                }
            }
            trace!("snf pivot {t}: {}", self.a[t][t]);
        }
        debug!("snf done");
    }

    fn clear_cross(&mut self, t: usize) {
        let p = self.a[t][t].clone();
        for i in t + 1..self.m {
            if self.a[i][t].is_zero() {
                continue;
            }
            let q = round_div(&self.a[i][t], &p);
            if !q.is_zero() {
                self.row_axpy(i, t, &q, t);
            }
        }
        for j in t + 1..self.n {
            if self.a[t][j].is_zero() {
                continue;
            }
            let q = round_div(&self.a[t][j], &p);
            if !q.is_zero() {
                self.col_axpy(j, t, &q, t);
            }
        }
    }

    fn non_divisible(&self, t: usize) -> Option<usize> {
        let p = &self.a[t][t];
        if p.abs().is_one() {
            return None;
        }
        (t + 1..self.m).find(|&i| {
            self.a[i][t + 1..]
                .iter()
                .any(|x| !x.is_zero() && !x.is_multiple_of(p))
        })
    }

    fn finish(self) -> (Vec<BigInt>, Option<IntegerMatrix>, Option<IntegerMatrix>) {
        let k = self.m.min(self.n);
        let d = (0..k).map(|i| self.a[i][i].clone()).collect();
        let to_matrix = |rows: Vec<Vec<BigInt>>| {
            let n = rows.len();
            IntegerMatrix::new(n, n, rows.into_iter().flatten().collect()).expect("square")
        };
        (d, self.u.map(to_matrix), self.v.map(to_matrix))
    }
}

fn two_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}
