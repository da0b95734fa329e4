//! Oriented face lattices of compact manifolds with corners.
//!
//! A [`CornerComplex`] only keeps the combinatorics: faces with their
//! dimension and a reference orientation, and the incidence numbers `[F:F']`
//! between a face and its boundary hypersurfaces. Incidence numbers follow the
//! inward-normal rule: `[F:F'] = +1` when an oriented frame of `F` whose first
//! vector points into `F` restricts to the chosen orientation of `F'`.

mod build;
mod builtin;
mod io;

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::ComplexError;
use crate::linalg::IntegerMatrix;

pub use build::{build_cube, build_simplex, product};
pub use builtin::parse_builtin;
pub use io::ManifoldFile;

/// A complex from a JSON file path or a builtin spec such as `cube:3`.
pub fn load(source: &str) -> Result<CornerComplex, ComplexError> {
    let path = std::path::Path::new(source);
    if path.is_file() || source.ends_with(".json") {
        let text = std::fs::read_to_string(path).map_err(|e| ComplexError::Json(format!("{source}: {e}")))?;
        CornerComplex::from_json(&text)
    } else {
        parse_builtin(source)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub id: String,
    pub dim: usize,
    /// +1 or -1 relative to the face's reference axis ordering.
    pub orientation: i8,
    pub label: Option<String>,
}

impl Face {
    pub fn new(id: impl Into<String>, dim: usize) -> Self {
        Self {
            id: id.into(),
            dim,
            orientation: 1,
            label: None,
        }
    }

    pub fn with_orientation(mut self, orientation: i8) -> Self {
        self.orientation = orientation;
        self
    }
}

/// One entry `[high : low] = sign` of the incidence relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceEntry {
    pub high: String,
    pub low: String,
    pub sign: i8,
}

impl IncidenceEntry {
    pub fn new(high: impl Into<String>, low: impl Into<String>, sign: i8) -> Self {
        Self {
            high: high.into(),
            low: low.into(),
            sign,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerComplex {
    name: String,
    dim: usize,
    /// Sorted by (dim, id).
    faces: Vec<Face>,
    index: HashMap<String, usize>,
    /// `by_dim[l]` lists face indices of dimension l in order.
    by_dim: Vec<Vec<usize>>,
    /// Position of each face inside its dimension block.
    position: Vec<usize>,
    /// Boundary hypersurfaces of each face with their incidence sign, as given.
    boundary: Vec<Vec<(usize, i8)>>,
}

/// A failed structural invariant, found by [`CornerComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TopFaceCount { count: usize },
    Disconnected { components: usize },
    DuplicateBoundary { face: String, boundary: String },
    Differential { high: String, low: String, sum: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TopFaceCount { count } => {
                write!(f, "expected exactly one top-dimensional face, found {count}")
            }
            Violation::Disconnected { components } => {
                write!(f, "face lattice has {components} connected components")
            }
            Violation::DuplicateBoundary { face, boundary } => {
                write!(f, "face {face} lists boundary hypersurface {boundary} more than once")
            }
            Violation::Differential { high, low, sum } => write!(
                f,
                "composed incidences from {high} to {low} sum to {sum}, expected 0"
            ),
        }
    }
}

impl CornerComplex {
    /// Assembles a complex, checking references, dimensions and signs.
    /// Topological invariants are left to [`CornerComplex::validate`].
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        mut faces: Vec<Face>,
        incidences: Vec<IncidenceEntry>,
    ) -> Result<Self, ComplexError> {
        faces.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        let mut index = HashMap::with_capacity(faces.len());
        let mut by_dim = vec![Vec::new(); dim + 1];
        let mut position = Vec::with_capacity(faces.len());
        for (k, face) in faces.iter().enumerate() {
            if face.dim > dim {
                return Err(ComplexError::FaceDimension {
                    face: face.id.clone(),
                    dim: face.dim,
                    top: dim,
                });
            }
            if face.orientation != 1 && face.orientation != -1 {
                return Err(ComplexError::Orientation(face.id.clone()));
            }
            if index.insert(face.id.clone(), k).is_some() {
                return Err(ComplexError::DuplicateFace(face.id.clone()));
            }
            position.push(by_dim[face.dim].len());
            by_dim[face.dim].push(k);
        }
        let mut boundary = vec![Vec::new(); faces.len()];
        for inc in incidences {
            let lookup = |id: &str| {
                index
                    .get(id)
                    .copied()
                    .ok_or_else(|| ComplexError::UnknownFace(id.to_string()))
            };
            let (h, l) = (lookup(&inc.high)?, lookup(&inc.low)?);
            let bad = |reason: &str| ComplexError::BadIncidence {
                high: inc.high.clone(),
                low: inc.low.clone(),
                reason: reason.to_string(),
            };
            if faces[h].dim != faces[l].dim + 1 {
                return Err(bad("faces must differ in dimension by one"));
            }
            if inc.sign != 1 && inc.sign != -1 {
                return Err(bad("incidence must be 1 or -1"));
            }
            boundary[h].push((l, inc.sign));
        }
        for b in &mut boundary {
            b.sort_by_key(|&(l, _)| l);
        }
        Ok(Self {
            name: name.into(),
            dim,
            faces,
            index,
            by_dim,
            position,
            boundary,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: &str) -> Option<&Face> {
        self.index.get(id).map(|&k| &self.faces[k])
    }

    pub fn faces_of_dim(&self, l: usize) -> impl Iterator<Item = &Face> + '_ {
        self.by_dim
            .get(l)
            .into_iter()
            .flatten()
            .map(move |&k| &self.faces[k])
    }

    pub fn count_of_dim(&self, l: usize) -> usize {
        self.by_dim.get(l).map_or(0, Vec::len)
    }

    /// Face counts indexed by dimension.
    pub fn face_counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    /// Boundary hypersurfaces of a face with their incidence numbers.
    pub fn boundary_of(&self, id: &str) -> Option<impl Iterator<Item = (&Face, i8)> + '_> {
        let k = *self.index.get(id)?;
        Some(self.boundary[k].iter().map(move |&(l, s)| (&self.faces[l], s)))
    }

    /// `[F:F']`, summing repeated entries; 0 if `F'` is not on the boundary.
    pub fn incidence(&self, high: &str, low: &str) -> i64 {
        match (self.index.get(high), self.index.get(low)) {
            (Some(&h), Some(&l)) => self.boundary[h]
                .iter()
                .filter(|&&(b, _)| b == l)
                .map(|&(_, s)| i64::from(s))
                .sum(),
            _ => 0,
        }
    }

    pub(crate) fn boundary_indices(&self, k: usize) -> &[(usize, i8)] {
        &self.boundary[k]
    }

    pub fn incidence_entries(&self) -> Vec<IncidenceEntry> {
        self.boundary
            .iter()
            .enumerate()
            .flat_map(|(h, b)| {
                b.iter()
                    .map(move |&(l, s)| IncidenceEntry::new(&self.faces[h].id, &self.faces[l].id, s))
            })
            .collect()
    }

    /// Rows: faces of dimension `l`; columns: faces of dimension `l-1`.
    /// Column `F'` is the image `Σ_F [F:F'] e_F`.
    pub fn incidence_matrix(&self, l: usize) -> Result<IntegerMatrix, ComplexError> {
        if l == 0 || l > self.dim {
            return Err(ComplexError::LevelOutOfRange { l, top: self.dim });
        }
        let mut m = IntegerMatrix::zeros(self.count_of_dim(l), self.count_of_dim(l - 1));
        for &h in &self.by_dim[l] {
            let row = self.position[h];
            for &(lo, s) in &self.boundary[h] {
                let col = self.position[lo];
                let v = m.get(row, col) + BigInt::from(s);
                m.set(row, col, v);
            }
        }
        Ok(m)
    }

    /// Reverses the orientation of one face. All incidences touching it
    /// change sign; gauge-invariant quantities are unaffected.
    pub fn flip_orientation(&self, id: &str) -> Result<CornerComplex, ComplexError> {
        let k = *self
            .index
            .get(id)
            .ok_or_else(|| ComplexError::UnknownFace(id.to_string()))?;
        let mut out = self.clone();
        out.faces[k].orientation = -out.faces[k].orientation;
        for (h, b) in out.boundary.iter_mut().enumerate() {
            for (l, s) in b.iter_mut() {
                if h == k || *l == k {
                    *s = -*s;
                }
            }
        }
        Ok(out)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let top = self.count_of_dim(self.dim);
        if top != 1 {
            out.push(Violation::TopFaceCount { count: top });
        }
        let components = self.components();
        if components > 1 {
            out.push(Violation::Disconnected { components });
        }
        for (h, b) in self.boundary.iter().enumerate() {
            let mut seen = HashSet::new();
            let mut reported = HashSet::new();
            for &(l, _) in b {
                if !seen.insert(l) && reported.insert(l) {
                    out.push(Violation::DuplicateBoundary {
                        face: self.faces[h].id.clone(),
                        boundary: self.faces[l].id.clone(),
                    });
                }
            }
        }
        // ∂∘∂ = 0, checked face by face over the sparse boundary lists
        for (h, b) in self.boundary.iter().enumerate() {
            let mut sums: Vec<(usize, i64)> = Vec::new();
            for &(mid, s1) in b {
                for &(low, s2) in &self.boundary[mid] {
                    let term = i64::from(s1) * i64::from(s2);
                    match sums.iter_mut().find(|(l, _)| *l == low) {
                        Some((_, acc)) => *acc += term,
                        None => sums.push((low, term)),
                    }
                }
            }
            sums.sort_by_key(|&(l, _)| l);
            for (low, sum) in sums {
                if sum != 0 {
                    out.push(Violation::Differential {
                        high: self.faces[h].id.clone(),
                        low: self.faces[low].id.clone(),
                        sum,
                    });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Returns `self` if valid, else the full violation list as an error.
    pub fn require_valid(&self) -> Result<&Self, ComplexError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(ComplexError::Invalid(v))
        }
    }

    fn components(&self) -> usize {
        let n = self.faces.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (h, b) in self.boundary.iter().enumerate() {
            for &(l, _) in b {
                let (a, c) = (find(&mut parent, h), find(&mut parent, l));
                parent[a] = c;
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }
}
