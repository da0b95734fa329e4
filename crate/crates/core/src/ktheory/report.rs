use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use super::{d1_differential, e1_page, e2_page, E1Page, E2Page};
use crate::complex::CornerComplex;
use crate::error::KTheoryError;
use crate::linalg::IntegerMatrix;

pub const HIGHER_DIFFERENTIALS_NOTE: &str =
    "E2 is reported as computed; K_*(I_0) may differ from it by higher differentials d_r, r >= 2";

/// E¹, all d₁ and E² of a complex, in one document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageReport {
    pub e1: E1Page,
    /// `(l, i, d₁ into slot (l, i))` for `1 ≤ l ≤ n`, `i ∈ {0, 1}`.
    pub d1: Vec<(usize, usize, IntegerMatrix)>,
    pub e2: E2Page,
}

pub fn page_report(c: &CornerComplex) -> Result<PageReport, KTheoryError> {
    let e1 = e1_page(c)?;
    let mut d1 = Vec::new();
    for l in 1..=c.dim() {
        for i in 0..2 {
            d1.push((l, i, d1_differential(c, l, i as i64)?));
        }
    }
    let e2 = e2_page(c)?;
    Ok(PageReport { e1, d1, e2 })
}

fn key(l: usize, i: usize) -> String {
    format!("{l},{i}")
}

impl PageReport {
    pub fn e1_json(&self) -> Value {
        let mut m = Map::new();
        for (l, row) in self.e1.slots.iter().enumerate() {
            for (i, slot) in row.iter().enumerate() {
                m.insert(
                    key(l, i),
                    json!({ "rank": slot.group.rank(), "generators": slot.generators }),
                );
            }
        }
        Value::Object(m)
    }

    pub fn d1_json(&self) -> Value {
        let mut m = Map::new();
        for (l, i, mat) in &self.d1 {
            m.insert(key(*l, *i), mat.to_json());
        }
        Value::Object(m)
    }

    pub fn e2_json(&self) -> Value {
        let mut m = Map::new();
        for (l, row) in self.e2.groups.iter().enumerate() {
            for (i, g) in row.iter().enumerate() {
                m.insert(key(l, i), g.to_json());
            }
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "complex": self.e1.complex,
            "E1": self.e1_json(),
            "d1": self.d1_json(),
            "E2": self.e2_json(),
            "notes": [HIGHER_DIFFERENTIALS_NOTE],
        })
    }

    pub fn e1_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "E1 page of {} (n = {})", self.e1.complex, self.e1.n).unwrap();
        writeln!(s, "{:>3} {:>2}  {}", "l", "i", "group").unwrap();
        for (l, row) in self.e1.slots.iter().enumerate() {
            for (i, slot) in row.iter().enumerate() {
                writeln!(s, "{l:>3} {i:>2}  {}", slot.group).unwrap();
            }
        }
        s
    }

    pub fn d1_text(&self) -> String {
        let mut s = String::new();
        for (l, i, m) in &self.d1 {
            let (r, c) = m.shape();
            writeln!(
                s,
                "d1 into (l={l}, i={i}) from (l={}, i={}): {r}x{c}",
                l - 1,
                (i + 1) % 2
            )
            .unwrap();
            if r * c > 0 {
                s.push_str(&m.to_string());
            }
        }
        s
    }

    pub fn e2_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "E2 page of {} (n = {})", self.e2.complex, self.e2.n).unwrap();
        writeln!(s, "{:>3} {:>2}  {}", "l", "i", "group").unwrap();
        for (l, row) in self.e2.groups.iter().enumerate() {
            for (i, g) in row.iter().enumerate() {
                writeln!(s, "{l:>3} {i:>2}  {g}").unwrap();
            }
        }
        writeln!(s, "note: {HIGHER_DIFFERENTIALS_NOTE}").unwrap();
        s
    }

    pub fn to_text(&self) -> String {
        format!("{}\n{}\n{}", self.e1_text(), self.d1_text(), self.e2_text())
    }
}
