//! Built-in cohomology rings.
//!
//! Grammar: `point`, `torus:N`, `sphere:N`, `cp:N`, `product:A,B`, with
//! `product` nesting to the left as in `product:torus:1,product:sphere:2,cp:1`.
//!
//! Orientation conventions: the fundamental class of `torus:N` is
//! `t1*…*tN`, of `sphere:N` the generator `u`, of `cp:N` the power `x^N`,
//! and of a product the product of the two top classes, all with sign `+1`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::{axpy, Coeffs, GradedRing, UNIT_LABEL};
use crate::error::CharClassError;

pub const MAX_TORUS_DIM: usize = 8;
pub const MAX_TOP_DEGREE: usize = 16;
pub const MAX_BASIS: usize = 512;

pub fn point() -> GradedRing {
    GradedRing::new("point", vec![(UNIT_LABEL.into(), 0)], vec![], UNIT_LABEL, 1).expect("valid")
}

fn subset_label(mask: u32, n: usize) -> String {
    if mask == 0 {
        return UNIT_LABEL.into();
    }
    (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| format!("t{}", i + 1))
        .collect::<Vec<_>>()
        .join("*")
}

/// Exterior algebra on `t1, …, tn` in degree 1.
pub fn torus(n: usize) -> Result<GradedRing, CharClassError> {
    if n > MAX_TORUS_DIM {
        return Err(CharClassError::UnknownBuiltin(format!("torus:{n} (at most {MAX_TORUS_DIM})")));
    }
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
    let pos: std::collections::HashMap<u32, usize> = masks.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let labels: Vec<String> = masks.iter().map(|&m| subset_label(m, n)).collect();
    let degrees: Vec<usize> = masks.iter().map(|m| m.count_ones() as usize).collect();
    let size = masks.len();
    let mut table = vec![vec![Coeffs::new(); size]; size];
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            if a & b != 0 {
                continue;
            }
            // sign of sorting the concatenated generator list
            let swaps: u32 = (0..n).filter(|k| b >> k & 1 == 1).map(|k| (a >> k).count_ones() - (a >> k & 1)).sum();
            let q = if swaps % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            table[i][j] = Coeffs::from([(pos[&(a | b)], q)]);
        }
    }
    let top = subset_label((1u32 << n) - 1, n);
    GradedRing::from_table(format!("torus:{n}"), labels, degrees, table, 0, &top, 1)
}

/// `H*(S^n)`: one generator `u` in degree `n` with `u² = 0`.
pub fn sphere(n: usize) -> Result<GradedRing, CharClassError> {
    if n == 0 || n > MAX_TOP_DEGREE {
        return Err(CharClassError::UnknownBuiltin(format!("sphere:{n}")));
    }
    GradedRing::new(
        format!("sphere:{n}"),
        vec![(UNIT_LABEL.into(), 0), ("u".into(), n)],
        vec![],
        "u",
        1,
    )
}

fn power_label(k: usize) -> String {
    match k {
        0 => UNIT_LABEL.into(),
        1 => "x".into(),
        _ => format!("x^{k}"),
    }
}

/// `H*(CP^n) = ℚ[x]/(x^{n+1})` with `x` in degree 2.
pub fn projective(n: usize) -> Result<GradedRing, CharClassError> {
    if n == 0 || 2 * n > MAX_TOP_DEGREE {
        return Err(CharClassError::UnknownBuiltin(format!("cp:{n}")));
    }
    let basis = (0..=n).map(|k| (power_label(k), 2 * k)).collect();
    let mut products = Vec::new();
    for a in 1..=n {
        for b in 1..=n - a {
            if a + b <= n {
                products.push((power_label(a), power_label(b), vec![(power_label(a + b), BigRational::one())]));
            }
        }
    }
    GradedRing::new(format!("cp:{n}"), basis, products, &power_label(n), 1)
}

fn join_label(a: &str, b: &str) -> String {
    match (a == UNIT_LABEL, b == UNIT_LABEL) {
        (true, true) => UNIT_LABEL.into(),
        (true, false) => b.into(),
        (false, true) => a.into(),
        (false, false) => format!("{a}*{b}"),
    }
}

/// Tensor product `H*(A) ⊗ H*(B)` with the Koszul sign
/// `(a⊗b)(a'⊗b') = (−1)^{|b||a'|} aa' ⊗ bb'`.
pub fn product(a: &GradedRing, b: &GradedRing) -> Result<GradedRing, CharClassError> {
    let clash = a
        .labels()
        .iter()
        .any(|l| l != UNIT_LABEL && b.labels().contains(l));
    let tag = |prefix: &str, l: &str| {
        if clash && l != UNIT_LABEL {
            format!("{prefix}.{l}")
        } else {
            l.to_string()
        }
    };
    let (na, nb) = (a.len(), b.len());
    if na * nb > MAX_BASIS {
        return Err(CharClassError::UnknownBuiltin(format!(
            "product:{},{} has {} basis elements (at most {MAX_BASIS})",
            a.name(),
            b.name(),
            na * nb
        )));
    }
    let idx = |i: usize, j: usize| i * nb + j;
    let mut labels = Vec::with_capacity(na * nb);
    let mut degrees = Vec::with_capacity(na * nb);
    for i in 0..na {
        for j in 0..nb {
            labels.push(join_label(&tag("l", a.label(i)), &tag("r", b.label(j))));
            degrees.push(a.degree(i) + b.degree(j));
        }
    }
    let mut table = vec![vec![Coeffs::new(); na * nb]; na * nb];
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                for l in 0..nb {
                    let left = a.table_entry(i, k);
                    let right = b.table_entry(j, l);
                    if left.is_empty() || right.is_empty() {
                        continue;
                    }
                    let sign = if b.degree(j) * a.degree(k) % 2 == 1 {
                        -BigRational::one()
                    } else {
                        BigRational::one()
                    };
                    let mut c = Coeffs::new();
                    for (p, x) in left {
                        for (r, y) in right {
                            axpy(&mut c, &(&sign * x * y), &Coeffs::from([(idx(*p, *r), BigRational::one())]));
                        }
                    }
                    c.retain(|_, v| !v.is_zero());
                    table[idx(i, j)][idx(k, l)] = c;
                }
            }
        }
    }
    let unit = idx(a.unit_index(), b.unit_index());
    let top = join_label(&tag("l", a.top_label()), &tag("r", b.top_label()));
    GradedRing::from_table(
        format!("product:{},{}", a.name(), b.name()),
        labels,
        degrees,
        table,
        unit,
        &top,
        a.top_sign() * b.top_sign(),
    )
}

fn parse_count(name: &str, arg: Option<&str>) -> Result<usize, CharClassError> {
    arg.and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| CharClassError::UnknownBuiltin(format!("{name} needs a nonnegative integer")))
}

/// Parses a builtin ring spec such as `torus:2` or `product:torus:1,cp:2`.
pub fn parse_builtin_ring(spec: &str) -> Result<GradedRing, CharClassError> {
    let tokens: Vec<&str> = spec.split([':', ',']).map(str::trim).collect();
    let mut pos = 0;
    let ring = parse_ring(&tokens, &mut pos, spec)?;
    if pos != tokens.len() {
        return Err(CharClassError::UnknownBuiltin(spec.to_string()));
    }
    Ok(ring)
}

fn parse_ring(tokens: &[&str], pos: &mut usize, spec: &str) -> Result<GradedRing, CharClassError> {
    let name = *tokens
        .get(*pos)
        .ok_or_else(|| CharClassError::UnknownBuiltin(spec.to_string()))?;
    *pos += 1;
    let mut count = || {
        let arg = tokens.get(*pos).copied();
        *pos += 1;
        parse_count(name, arg)
    };
    match name {
        "point" => Ok(point()),
        "torus" => torus(count()?),
        "sphere" => sphere(count()?),
        "cp" => projective(count()?),
        "product" => {
            let a = parse_ring(tokens, pos, spec)?;
            let b = parse_ring(tokens, pos, spec)?;
            let r = product(&a, &b)?;
            if r.top_degree() > MAX_TOP_DEGREE {
                return Err(CharClassError::UnknownBuiltin(format!(
                    "{spec}: top degree {} exceeds {MAX_TOP_DEGREE}",
                    r.top_degree()
                )));
            }
            Ok(r)
        }
        _ => Err(CharClassError::UnknownBuiltin(spec.to_string())),
    }
}
