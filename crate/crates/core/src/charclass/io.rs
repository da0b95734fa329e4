use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::ring::GradedRing;
use crate::error::CharClassError;
use crate::toeplitz::parse_rational;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisRecord {
    label: String,
    degree: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TopRecord {
    label: String,
    #[serde(default = "plus", skip_serializing_if = "is_plus")]
    sign: i8,
}

fn plus() -> i8 {
    1
}

fn is_plus(s: &i8) -> bool {
    *s == 1
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    basis: Vec<BasisRecord>,
    #[serde(default)]
    products: Vec<(String, String, Map<String, Value>)>,
    top: TopRecord,
}

impl GradedRing {
    /// Reads `{"basis": [{"label", "degree"}], "products": [[a, b, {label: "p/q"}]],
    /// "top": {"label", "sign"?}}`.
    pub fn from_json(text: &str) -> Result<Self, CharClassError> {
        let file: RingFile = serde_json::from_str(text).map_err(|e| CharClassError::Json(e.to_string()))?;
        let basis = file.basis.into_iter().map(|b| (b.label, b.degree)).collect();
        let mut products = Vec::with_capacity(file.products.len());
        for (a, b, terms) in file.products {
            let mut parsed = Vec::with_capacity(terms.len());
            for (label, v) in terms {
                let q = match &v {
                    Value::String(s) => parse_rational(s).ok(),
                    Value::Number(n) => parse_rational(&n.to_string()).ok(),
                    _ => None,
                }
                .ok_or_else(|| CharClassError::Json(format!("coefficient of {label} in {a}*{b}: {v}")))?;
                parsed.push((label, q));
            }
            products.push((a, b, parsed));
        }
        let name = file.name.unwrap_or_else(|| "ring".into());
        Self::new(name, basis, products, &file.top.label, file.top.sign)
    }

    pub fn to_json(&self) -> Value {
        let file = RingFile {
            name: Some(self.name().to_string()),
            basis: self
                .labels()
                .iter()
                .zip(self.degrees())
                .map(|(l, d)| BasisRecord {
                    label: l.clone(),
                    degree: *d,
                })
                .collect(),
            products: self
                .product_rules()
                .into_iter()
                .map(|(a, b, terms)| {
                    let m = terms
                        .into_iter()
                        .map(|(l, q)| (l, Value::String(q.to_string())))
                        .collect();
                    (a, b, m)
                })
                .collect(),
            top: TopRecord {
                label: self.top_label().to_string(),
                sign: self.top_sign(),
            },
        };
        serde_json::to_value(file).expect("serializable")
    }
}
