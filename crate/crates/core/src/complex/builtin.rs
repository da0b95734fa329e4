//! Builtin manifold specs: `point`, `interval`, `cube:N`, `simplex:N`, and
//! `product:A,B` where `A` and `B` are themselves specs. Products nest, e.g.
//! `product:product:cube:1,cube:1,simplex:2`.

use super::{build_cube, build_simplex, product, CornerComplex};
use crate::error::ComplexError;

/// Largest builtin dimension; `cube:12` already has half a million faces.
pub const MAX_BUILTIN_DIM: usize = 12;

pub fn parse_builtin(spec: &str) -> Result<CornerComplex, ComplexError> {
    let tokens: Vec<&str> = spec.split([':', ',']).map(str::trim).collect();
    let mut pos = 0;
    let c = parse(&tokens, &mut pos).ok_or_else(|| ComplexError::UnknownBuiltin(spec.to_string()))?;
    if pos != tokens.len() {
        return Err(ComplexError::UnknownBuiltin(spec.to_string()));
    }
    Ok(c)
}

fn parse(tokens: &[&str], pos: &mut usize) -> Option<CornerComplex> {
    let head = *tokens.get(*pos)?;
    *pos += 1;
    match head {
        "point" => Some(build_cube(0)),
        "interval" => Some(build_cube(1)),
        "cube" | "simplex" => {
            let n: usize = tokens.get(*pos)?.parse().ok()?;
            *pos += 1;
            if n > MAX_BUILTIN_DIM {
                return None;
            }
            Some(if head == "cube" {
                build_cube(n)
            } else {
                build_simplex(n)
            })
        }
        "product" => {
            let a = parse(tokens, pos)?;
            let b = parse(tokens, pos)?;
            if a.dim() + b.dim() > MAX_BUILTIN_DIM {
                return None;
            }
            Some(product(&a, &b))
        }
        _ => None,
    }
}
