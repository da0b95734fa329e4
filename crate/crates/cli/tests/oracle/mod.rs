//! Simplicial cohomology of the order complex of a face poset, written
//! without the library's linear algebra.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};

use cornerk_core::CornerComplex;

/// `(free rank, torsion coefficients > 1)` of one cohomology group.
pub type Group = (usize, Vec<i64>);

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Invariant factors of a small dense matrix by repeated gcd reduction.
fn dense_factors(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..m {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..n {
                        a[i][j] -= q * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..n {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if !dirty {
                // divisibility of the rest of the block
                if let Some(i) = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0)) {
                    for j in t..n {
                        a[t][j] += a[i][j];
                    }
                    continue;
                }
                break;
            }
            // move the smallest remainder into the pivot position
            let (bi, bj) = (t..m)
                .map(|i| (i, t))
                .chain((t..n).map(|j| (t, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs())
                .unwrap();
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    let mut out: Vec<i128> = out.into_iter().filter(|&x| x != 0).collect();
    // normalise to a divisibility chain
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            let g = gcd(out[i], out[j]);
            let l = out[i] / g * out[j];
            out[i] = g;
            out[j] = l;
        }
    }
    out
}

/// Rank and non-unit invariant factors of a sparse integer matrix given as
/// rows of `(column, value)`.
pub fn sparse_factors(rows_in: Vec<Vec<(usize, i64)>>) -> (usize, Vec<i64>) {
    let mut rows: Vec<BTreeMap<usize, i128>> = rows_in
        .into_iter()
        .map(|r| {
            let mut m = BTreeMap::new();
            for (c, v) in r {
                *m.entry(c).or_insert(0) += v as i128;
            }
            m.retain(|_, v| *v != 0);
            m
        })
        .collect();
    let mut cols: HashMap<usize, HashSet<usize>> = HashMap::new();
    for (i, r) in rows.iter().enumerate() {
        for c in r.keys() {
            cols.entry(*c).or_default().insert(i);
        }
    }
    let mut alive = vec![true; rows.len()];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = rows.iter().enumerate().map(|(i, r)| Reverse((r.len(), i))).collect();
    let mut rank = 0;
    while let Some(Reverse((len, r))) = heap.pop() {
        if !alive[r] || rows[r].len() != len || len == 0 {
            continue;
        }
        let Some((&c, &a)) = rows[r]
            .iter()
            .filter(|(_, v)| v.abs() == 1)
            .min_by_key(|(c, _)| cols[*c].len())
        else {
            continue;
        };
        let pivot_row = rows[r].clone();
        let others: Vec<usize> = cols[&c].iter().copied().filter(|&x| x != r).collect();
        for o in others {
            let f = rows[o][&c] * a;
            for (&k, &v) in &pivot_row {
                let e = rows[o].entry(k).or_insert(0);
                *e -= f * v;
                if *e == 0 {
                    rows[o].remove(&k);
                    cols.get_mut(&k).unwrap().remove(&o);
                } else {
                    cols.entry(k).or_default().insert(o);
                }
            }
            heap.push(Reverse((rows[o].len(), o)));
        }
        for k in pivot_row.keys() {
            cols.get_mut(k).unwrap().remove(&r);
        }
        alive[r] = false;
        rows[r].clear();
        rank += 1;
    }
    let rest: Vec<&BTreeMap<usize, i128>> = rows.iter().filter(|r| !r.is_empty()).collect();
    let mut colset: Vec<usize> = rest.iter().flat_map(|r| r.keys().copied()).collect();
    colset.sort_unstable();
    colset.dedup();
    let pos: HashMap<usize, usize> = colset.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let dense: Vec<Vec<i128>> = rest
        .iter()
        .map(|r| {
            let mut v = vec![0; colset.len()];
            for (c, x) in r.iter() {
                v[pos[c]] = *x;
            }
            v
        })
        .collect();
    let factors = dense_factors(dense);
    rank += factors.len();
    (rank, factors.into_iter().filter(|&d| d > 1).map(|d| d as i64).collect())
}

/// `H^k` of the order complex of the face poset for `k = 0..=n`.
pub fn order_complex_cohomology(c: &CornerComplex) -> Vec<Group> {
    let faces = c.faces();
    let idx: HashMap<&str, usize> = faces.iter().enumerate().map(|(i, f)| (f.id.as_str(), i)).collect();
    // faces strictly above each face
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
    for e in c.incidence_entries() {
        up[idx[e.low.as_str()]].push(idx[e.high.as_str()]);
    }
    let mut above: Vec<HashSet<usize>> = vec![HashSet::new(); faces.len()];
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.sort_by_key(|&i| Reverse(faces[i].dim));
    for &i in &order {
        let mut s = HashSet::new();
        for &j in &up[i] {
            s.insert(j);
            s.extend(above[j].iter().copied());
        }
        above[i] = s;
    }
    let mut chains: Vec<Vec<Vec<usize>>> = vec![Vec::new(); c.dim() + 2];
    fn extend(chain: &mut Vec<usize>, above: &[HashSet<usize>], out: &mut Vec<Vec<Vec<usize>>>) {
        out[chain.len() - 1].push(chain.clone());
        let last = *chain.last().unwrap();
        let mut next: Vec<usize> = above[last].iter().copied().collect();
        next.sort_unstable();
        for j in next {
            chain.push(j);
            extend(chain, above, out);
            chain.pop();
        }
    }
    for i in 0..faces.len() {
        extend(&mut vec![i], &above, &mut chains);
    }
    let index: Vec<HashMap<&Vec<usize>, usize>> = chains
        .iter()
        .map(|cs| cs.iter().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    // boundary ∂_k : C_k → C_{k-1}, one row per k-simplex
    let boundary_factors: Vec<(usize, Vec<i64>)> = (0..chains.len())
        .map(|k| {
            if k == 0 {
                return (0, Vec::new());
            }
            let rows = chains[k]
                .iter()
                .map(|s| {
                    (0..s.len())
                        .map(|j| {
                            let mut t = s.clone();
                            t.remove(j);
                            (index[k - 1][&t], if j % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            sparse_factors(rows)
        })
        .collect();
    (0..=c.dim())
        .map(|k| {
            let r_k = boundary_factors[k].0;
            let r_next = boundary_factors.get(k + 1).map_or(0, |b| b.0);
            (chains[k].len() - r_k - r_next, boundary_factors[k].1.clone())
        })
        .collect()
}
