use std::collections::{BTreeMap, HashMap, HashSet};

use log::debug;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::CharClassError;

/// Sparse vector over the basis, keyed by basis position.
pub(crate) type Coeffs = BTreeMap<usize, BigRational>;

pub const UNIT_LABEL: &str = "1";

/// A product line of a ring description: `left * right = Σ q · label`.
pub type ProductRule = (String, String, Vec<(String, BigRational)>);

/// Finite graded-commutative ring over ℚ given by a basis and structure
/// constants, with a designated top-degree basis element.
///
/// The unit is the basis element labelled `"1"`; its products are implicit.
/// If only one of `a·b`, `b·a` is given the other follows from graded
/// commutativity. Everything not given is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRing {
    name: String,
    labels: Vec<String>,
    degrees: Vec<usize>,
    index: HashMap<String, usize>,
    table: Vec<Vec<Coeffs>>,
    unit: usize,
    top: usize,
    top_sign: i8,
    top_degree: usize,
}

fn koszul(a: usize, b: usize) -> bool {
    a * b % 2 == 1
}

fn negated(c: &Coeffs) -> Coeffs {
    c.iter().map(|(k, v)| (*k, -v)).collect()
}

pub(crate) fn axpy(acc: &mut Coeffs, q: &BigRational, x: &Coeffs) {
    for (k, v) in x {
        let e = acc.entry(*k).or_insert_with(BigRational::zero);
        *e += q * v;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

impl GradedRing {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<(String, usize)>,
        products: Vec<ProductRule>,
        top: &str,
        top_sign: i8,
    ) -> Result<Self, CharClassError> {
        let mut index = HashMap::new();
        let mut labels = Vec::with_capacity(basis.len());
        let mut degrees = Vec::with_capacity(basis.len());
        for (label, degree) in basis {
            if index.insert(label.clone(), labels.len()).is_some() {
                return Err(CharClassError::DuplicateLabel(label));
            }
            labels.push(label);
            degrees.push(degree);
        }
        let unit = match index.get(UNIT_LABEL) {
            Some(&u) if degrees[u] == 0 => u,
            _ => return Err(CharClassError::MissingUnit),
        };
        let n = labels.len();
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| CharClassError::UnknownLabel(l.to_string()));

        let mut table = vec![vec![Coeffs::new(); n]; n];
        for i in 0..n {
            table[unit][i] = Coeffs::from([(i, BigRational::one())]);
            table[i][unit] = Coeffs::from([(i, BigRational::one())]);
        }
        let mut given: HashSet<(usize, usize)> = HashSet::new();
        for (left, right, terms) in products {
            let (a, b) = (lookup(&left)?, lookup(&right)?);
            let mut c = Coeffs::new();
            for (label, q) in terms {
                let t = lookup(&label)?;
                if degrees[t] != degrees[a] + degrees[b] {
                    return Err(CharClassError::DegreeMismatch {
                        left,
                        right,
                        term: label,
                        got: degrees[t],
                        expected: degrees[a] + degrees[b],
                    });
                }
                axpy(&mut c, &q, &Coeffs::from([(t, BigRational::one())]));
            }
            if a == unit || b == unit {
                if c != table[a][b] {
                    return Err(CharClassError::UnitConflict(format!("{left}*{right}")));
                }
                continue;
            }
            table[a][b] = c;
            given.insert((a, b));
        }
        for &(a, b) in &given {
            if !given.contains(&(b, a)) {
                table[b][a] = if koszul(degrees[a], degrees[b]) {
                    negated(&table[a][b])
                } else {
                    table[a][b].clone()
                };
            }
        }
        Self::from_table(name.into(), labels, degrees, table, unit, top, top_sign)
    }

    pub(crate) fn from_table(
        name: String,
        labels: Vec<String>,
        degrees: Vec<usize>,
        table: Vec<Vec<Coeffs>>,
        unit: usize,
        top: &str,
        top_sign: i8,
    ) -> Result<Self, CharClassError> {
        let index: HashMap<String, usize> = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        if index.len() != labels.len() {
            let mut seen = HashSet::new();
            let dup = labels.iter().find(|l| !seen.insert(*l)).cloned().unwrap_or_default();
            return Err(CharClassError::DuplicateLabel(dup));
        }
        let top_degree = degrees.iter().copied().max().unwrap_or(0);
        let top_idx = *index.get(top).ok_or_else(|| CharClassError::UnknownLabel(top.to_string()))?;
        if degrees[top_idx] != top_degree {
            return Err(CharClassError::FundamentalClass {
                label: top.to_string(),
                top: top_degree,
            });
        }
        if top_sign != 1 && top_sign != -1 {
            return Err(CharClassError::Parse(format!("fundamental class sign {top_sign}")));
        }
        let ring = Self {
            name,
            labels,
            degrees,
            index,
            table,
            unit,
            top: top_idx,
            top_sign,
            top_degree,
        };
        ring.check()?;
        Ok(ring)
    }

    fn check(&self) -> Result<(), CharClassError> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for t in self.table[a][b].keys() {
                    if self.degrees[*t] != self.degrees[a] + self.degrees[b] {
                        return Err(CharClassError::DegreeMismatch {
                            left: self.labels[a].clone(),
                            right: self.labels[b].clone(),
                            term: self.labels[*t].clone(),
                            got: self.degrees[*t],
                            expected: self.degrees[a] + self.degrees[b],
                        });
                    }
                }
                let swapped = if koszul(self.degrees[a], self.degrees[b]) {
                    negated(&self.table[b][a])
                } else {
                    self.table[b][a].clone()
                };
                if swapped != self.table[a][b] {
                    return Err(CharClassError::NotGradedCommutative(
                        self.labels[a].clone(),
                        self.labels[b].clone(),
                    ));
                }
            }
        }
        let mut triples = 0usize;
        for a in 0..n {
            for b in 0..n {
                if self.degrees[a] + self.degrees[b] > self.top_degree {
                    continue;
                }
                let ab = &self.table[a][b];
                for c in 0..n {
                    // above the top degree both sides vanish for degree reasons
                    if self.degrees[a] + self.degrees[b] + self.degrees[c] > self.top_degree {
                        continue;
                    }
                    triples += 1;
                    let left = self.mul_coeffs(ab, &Coeffs::from([(c, BigRational::one())]));
                    let right = self.mul_coeffs(&Coeffs::from([(a, BigRational::one())]), &self.table[b][c]);
                    if left != right {
                        return Err(CharClassError::NotAssociative(
                            self.labels[a].clone(),
                            self.labels[b].clone(),
                            self.labels[c].clone(),
                        ));
                    }
                }
            }
        }
        debug!("ring {}: {} basis elements, {triples} triples checked", self.name, n);
        Ok(())
    }

    pub(crate) fn mul_coeffs(&self, x: &Coeffs, y: &Coeffs) -> Coeffs {
        let mut out = Coeffs::new();
        for (i, p) in x {
            for (j, q) in y {
                let t = &self.table[*i][*j];
                if !t.is_empty() {
                    axpy(&mut out, &(p * q), t);
                }
            }
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn position(&self, label: &str) -> Result<usize, CharClassError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| CharClassError::UnknownLabel(label.to_string()))
    }

    pub fn degree_of(&self, label: &str) -> Result<usize, CharClassError> {
        Ok(self.degrees[self.position(label)?])
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn top_label(&self) -> &str {
        &self.labels[self.top]
    }

    pub(crate) fn top_index(&self) -> usize {
        self.top
    }

    /// `+1` or `−1`: orientation of the fundamental class relative to the
    /// top basis element.
    pub fn top_sign(&self) -> i8 {
        self.top_sign
    }

    /// Product of two basis elements as `(label, coefficient)` pairs.
    pub fn product(&self, a: &str, b: &str) -> Result<Vec<(String, BigRational)>, CharClassError> {
        let (a, b) = (self.position(a)?, self.position(b)?);
        Ok(self.table[a][b]
            .iter()
            .map(|(k, q)| (self.labels[*k].clone(), q.clone()))
            .collect())
    }

    pub(crate) fn table_entry(&self, a: usize, b: usize) -> &Coeffs {
        &self.table[a][b]
    }

    /// All nonzero products of non-unit basis elements, in basis order.
    pub fn product_rules(&self) -> Vec<ProductRule> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if a == self.unit || b == self.unit || self.table[a][b].is_empty() {
                    continue;
                }
                out.push((
                    self.labels[a].clone(),
                    self.labels[b].clone(),
                    self.table[a][b]
                        .iter()
                        .map(|(k, q)| (self.labels[*k].clone(), q.clone()))
                        .collect(),
                ));
            }
        }
        out
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn basis(items: &[(&str, usize)]) -> Vec<(String, usize)> {
        items.iter().map(|(l, d)| (l.to_string(), *d)).collect()
    }

    fn rule(a: &str, b: &str, terms: &[(&str, i64)]) -> ProductRule {
        (
            a.into(),
            b.into(),
            terms.iter().map(|(l, c)| (l.to_string(), q(*c))).collect(),
        )
    }

    #[test]
    fn exterior_algebra_partner_filled() {
        let r = GradedRing::new(
            "T2",
            basis(&[("1", 0), ("a", 1), ("b", 1), ("ab", 2)]),
            vec![rule("a", "b", &[("ab", 1)])],
            "ab",
            1,
        )
        .unwrap();
        assert_eq!(r.product("b", "a").unwrap(), vec![("ab".to_string(), q(-1))]);
        assert!(r.product("a", "a").unwrap().is_empty());
        assert_eq!(r.top_degree(), 2);
    }

    #[test]
    fn rejects_bad_rings() {
        let b = basis(&[("1", 0), ("a", 1), ("b", 1), ("ab", 2)]);
        let err = GradedRing::new(
            "x",
            b.clone(),
            vec![rule("a", "b", &[("ab", 1)]), rule("b", "a", &[("ab", 1)])],
            "ab",
            1,
        );
        assert!(matches!(err, Err(CharClassError::NotGradedCommutative(..))));
        let err = GradedRing::new("x", b.clone(), vec![rule("a", "b", &[("a", 1)])], "ab", 1);
        assert!(matches!(err, Err(CharClassError::DegreeMismatch { .. })));
        let err = GradedRing::new("x", b.clone(), vec![], "a", 1);
        assert!(matches!(err, Err(CharClassError::FundamentalClass { .. })));
        let err = GradedRing::new("x", basis(&[("a", 0)]), vec![], "a", 1);
        assert!(matches!(err, Err(CharClassError::MissingUnit)));
        let err = GradedRing::new("x", basis(&[("1", 0), ("1", 0)]), vec![], "1", 1);
        assert!(matches!(err, Err(CharClassError::DuplicateLabel(_))));
        let err = GradedRing::new("x", b, vec![rule("1", "a", &[("b", 1)])], "ab", 1);
        assert!(matches!(err, Err(CharClassError::UnitConflict(_))));
    }

    #[test]
    fn associativity_checked() {
        // x*y = z, y*y = w, but x*w ≠ z*y
        let b = basis(&[("1", 0), ("x", 2), ("y", 2), ("z", 4), ("w", 4), ("t", 6)]);
        let err = GradedRing::new(
            "x",
            b,
            vec![
                rule("x", "y", &[("z", 1)]),
                rule("y", "y", &[("w", 1)]),
                rule("z", "y", &[("t", 1)]),
                rule("x", "w", &[("t", 2)]),
            ],
            "t",
            1,
        );
        assert!(matches!(err, Err(CharClassError::NotAssociative(..))));
    }
}
