use super::{CornerComplex, Face, IncidenceEntry};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Coord {
    Low,
    High,
    Free,
}

fn cube_id(n: usize, coords: &[Coord]) -> String {
    let body: Vec<&str> = coords
        .iter()
        .map(|c| match c {
            Coord::Low => "0",
            Coord::High => "1",
            Coord::Free => "*",
        })
        .collect();
    format!("cube{n}:f({})", body.join(","))
}

/// Face lattice of `[0,1]^n`: `3^n` faces, each coordinate fixed at 0, fixed
/// at 1, or free. Every face is oriented by its free axes in increasing order.
///
/// Fixing the `j`-th free axis (counted among the free axes) at 0 makes
/// `+e` the inward normal, at 1 it is `-e`; moving `e` to the front of the
/// frame costs `(-1)^j`, so `[F:F'] = (-1)^j` at 0 and `-(-1)^j` at 1.
pub fn build_cube(n: usize) -> CornerComplex {
    let total = 3usize.pow(n as u32);
    let mut faces = Vec::with_capacity(total);
    let mut incidences = Vec::new();
    let mut coords = vec![Coord::Low; n];
    for code in 0..total {
        let mut c = code;
        for slot in coords.iter_mut() {
            *slot = match c % 3 {
                0 => Coord::Low,
                1 => Coord::High,
                _ => Coord::Free,
            };
            c /= 3;
        }
        let id = cube_id(n, &coords);
        let free: Vec<usize> = (0..n).filter(|&p| coords[p] == Coord::Free).collect();
        for (j, &p) in free.iter().enumerate() {
            let parity: i8 = if j % 2 == 0 { 1 } else { -1 };
            for (value, side) in [(Coord::Low, 1i8), (Coord::High, -1i8)] {
                let mut lower = coords.clone();
                lower[p] = value;
                incidences.push(IncidenceEntry::new(&id, cube_id(n, &lower), parity * side));
            }
        }
        faces.push(Face::new(id, free.len()));
    }
    CornerComplex::new(format!("cube{n}"), n, faces, incidences).expect("cube lattice is well formed")
}

fn simplex_id(n: usize, vertices: &[usize]) -> String {
    let body: Vec<String> = vertices.iter().map(ToString::to_string).collect();
    format!("simplex{n}:s({})", body.join(","))
}

/// Face lattice of the `n`-simplex: nonempty subsets of `{0..n}`, each
/// oriented by its vertex order. Dropping the `j`-th vertex gives incidence
/// `(-1)^(j+1)` under the inward-normal rule (the opposite of the usual
/// simplicial boundary sign).
pub fn build_simplex(n: usize) -> CornerComplex {
    let mut faces = Vec::new();
    let mut incidences = Vec::new();
    for mask in 1u64..(1u64 << (n + 1)) {
        let vertices: Vec<usize> = (0..=n).filter(|&v| mask & (1 << v) != 0).collect();
        let id = simplex_id(n, &vertices);
        if vertices.len() > 1 {
            for j in 0..vertices.len() {
                let mut rest = vertices.clone();
                rest.remove(j);
                let sign = if j % 2 == 0 { -1 } else { 1 };
                incidences.push(IncidenceEntry::new(&id, simplex_id(n, &rest), sign));
            }
        }
        faces.push(Face::new(id, vertices.len() - 1));
    }
    CornerComplex::new(format!("simplex{n}"), n, faces, incidences)
        .expect("simplex lattice is well formed")
}

fn product_id(a: &str, b: &str) -> String {
    format!("{a}|{b}")
}

/// Faces of `A × B` are pairs of faces. Boundary hypersurfaces come from
/// either factor, with the Koszul sign `(-1)^dim F₁` on the second.
pub fn product(a: &CornerComplex, b: &CornerComplex) -> CornerComplex {
    let mut faces = Vec::with_capacity(a.faces().len() * b.faces().len());
    let mut incidences = Vec::new();
    for (ka, fa) in a.faces().iter().enumerate() {
        for (kb, fb) in b.faces().iter().enumerate() {
            let id = product_id(&fa.id, &fb.id);
            for &(la, s) in a.boundary_indices(ka) {
                incidences.push(IncidenceEntry::new(
                    &id,
                    product_id(&a.faces()[la].id, &fb.id),
                    s,
                ));
            }
            let koszul: i8 = if fa.dim % 2 == 0 { 1 } else { -1 };
            for &(lb, s) in b.boundary_indices(kb) {
                incidences.push(IncidenceEntry::new(
                    &id,
                    product_id(&fa.id, &b.faces()[lb].id),
                    koszul * s,
                ));
            }
            let face = Face::new(id, fa.dim + fb.dim).with_orientation(fa.orientation * fb.orientation);
            faces.push(face);
        }
    }
    CornerComplex::new(
        format!("product({},{})", a.name(), b.name()),
        a.dim() + b.dim(),
        faces,
        incidences,
    )
    .expect("product of well-formed lattices is well formed")
}
