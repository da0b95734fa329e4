use std::fmt::Write as _;
use std::sync::Arc;

use cornerk_core::charclass::{index_pairing, load_ring, RingElement};
use cornerk_core::complex;
use cornerk_core::ktheory::{
    boundary_case_k1_qm, d1_differential, page_report, six_term_solve, PageReport, SixTermProblem,
};
use cornerk_core::toeplitz::{toeplitz_index, toeplitz_index_with_samples, winding_number, winding_number_numeric};
use cornerk_core::{AbelianGroup, CornerComplex, LaurentSymbol};
use log::info;
use serde_json::{json, Value};

use crate::errors::{charclass_error, complex_error, ktheory_error, toeplitz_error, CliError};
use crate::{Command, Format};

/// Output of a command. `error` is set when the body was produced but the
/// command still fails, as `validate` does on an invalid lattice.
#[derive(Debug, Default)]
pub struct Rendered {
    pub body: String,
    pub warnings: Vec<String>,
    pub error: Option<CliError>,
}

impl Rendered {
    fn ok(body: String) -> Self {
        Self {
            body,
            ..Self::default()
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn emit(format: Format, json: impl FnOnce() -> Value, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => pretty(&json()),
        Format::Text => {
            let mut s = text();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

fn load_complex(source: &str) -> Result<CornerComplex, CliError> {
    let c = complex::load(source).map_err(|e| complex_error("load", e))?;
    info!("loaded {} with face counts {:?}", c.name(), c.face_counts());
    Ok(c)
}

fn load_valid(source: &str, op: &'static str) -> Result<CornerComplex, CliError> {
    let c = load_complex(source)?;
    c.require_valid().map_err(|e| complex_error(op, e))?;
    Ok(c)
}

fn report(source: &str, op: &'static str) -> Result<PageReport, CliError> {
    let c = load_valid(source, op)?;
    page_report(&c).map_err(|e| ktheory_error(op, e))
}

fn faces_text(c: &CornerComplex) -> String {
    let mut s = String::new();
    writeln!(s, "complex {} (n = {})", c.name(), c.dim()).unwrap();
    writeln!(s, "{:>3} {:>6}  {}", "dim", "orient", "id").unwrap();
    for f in c.faces() {
        writeln!(s, "{:>3} {:>+6}  {}", f.dim, f.orientation, f.id).unwrap();
    }
    writeln!(s, "incidence [F:F']").unwrap();
    for e in c.incidence_entries() {
        writeln!(s, "{:>+3}  {} > {}", e.sign, e.high, e.low).unwrap();
    }
    s
}

fn parse_group(text: &str) -> Result<AbelianGroup, CliError> {
    text.parse()
        .map_err(|e: cornerk_core::GroupError| CliError::parse("ktheory_engine", "boundary_case_k1_qm", e.to_string()))
}

fn load_problem(source: &str) -> Result<SixTermProblem, CliError> {
    if let Some(rest) = source.strip_prefix("wiener-hopf") {
        let index = match rest.strip_prefix(':') {
            Some(k) => k
                .trim()
                .parse()
                .map_err(|_| CliError::parse("ktheory_engine", "six_term_solve", format!("bad index in {source:?}")))?,
            None if rest.is_empty() => -1,
            None => {
                return Err(CliError::parse(
                    "ktheory_engine",
                    "six_term_solve",
                    format!("unknown problem {source:?}"),
                ))
            }
        };
        return Ok(SixTermProblem::wiener_hopf(index));
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| CliError::parse("ktheory_engine", "six_term_solve", format!("{source}: {e}")))?;
    SixTermProblem::from_json(&text).map_err(|e| ktheory_error("six_term_solve", e))
}

pub fn run(command: &Command) -> Result<Rendered, CliError> {
    let format = command.output().format;
    match command {
        Command::Faces { manifold, .. } => {
            let c = load_complex(&manifold.manifold)?;
            let body = match format {
                Format::Json => {
                    let mut s = c.to_json();
                    s.push('\n');
                    s
                }
                Format::Text => faces_text(&c),
            };
            Ok(Rendered::ok(body))
        }
        Command::Validate { manifold, .. } => {
            let c = load_complex(&manifold.manifold)?;
            let violations = c.validate();
            let body = emit(
                format,
                || {
                    json!({
                        "complex": c.name(),
                        "valid": violations.is_empty(),
                        "violations": violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                },
                || {
                    if violations.is_empty() {
                        format!("{}: valid", c.name())
                    } else {
                        violations.iter().map(|v| format!("{}: {v}\n", c.name())).collect()
                    }
                },
            );
            let error = (!violations.is_empty()).then(|| {
                CliError::domain(
                    "corner_complex",
                    "validate",
                    format!("{} violation(s), first: {}", violations.len(), violations[0]),
                )
            });
            Ok(Rendered {
                body,
                error,
                ..Rendered::default()
            })
        }
        Command::E1 { manifold, .. } => {
            let r = report(&manifold.manifold, "e1_page")?;
            Ok(Rendered::ok(emit(format, || r.e1_json(), || r.e1_text())))
        }
        Command::D1 { manifold, l, i, .. } => match (l, i) {
            (Some(l), Some(i)) => {
                let c = load_valid(&manifold.manifold, "d1_differential")?;
                let m = d1_differential(&c, *l, *i).map_err(|e| ktheory_error("d1_differential", e))?;
                let (r, k) = m.shape();
                Ok(Rendered::ok(emit(
                    format,
                    || m.to_json(),
                    || format!("d1 into (l={l}, i={i}): {r}x{k}\n{}", if r * k > 0 { m.to_string() } else { String::new() }),
                )))
            }
            _ => {
                let r = report(&manifold.manifold, "d1_differential")?;
                Ok(Rendered::ok(emit(format, || r.d1_json(), || r.d1_text())))
            }
        },
        Command::E2 { manifold, .. } => {
            let r = report(&manifold.manifold, "e2_page")?;
            Ok(Rendered::ok(emit(
                format,
                || {
                    json!({
                        "complex": r.e2.complex,
                        "E2": r.e2_json(),
                        "notes": [cornerk_core::ktheory::HIGHER_DIFFERENTIALS_NOTE],
                    })
                },
                || r.e2_text(),
            )))
        }
        Command::Report { manifold, .. } => {
            let r = report(&manifold.manifold, "report")?;
            Ok(Rendered::ok(emit(format, || r.to_json(), || r.to_text())))
        }
        Command::Sixterm { problem, .. } => {
            let p = load_problem(problem)?;
            let sol = six_term_solve(&p).map_err(|e| ktheory_error("six_term_solve", e))?;
            let mut out = Rendered::ok(emit(format, || sol.to_json(), || sol.to_string()));
            for s in sol.ambiguous_slots() {
                out.warnings.push(format!("{s} is not determined by exactness"));
            }
            Ok(out)
        }
        Command::BoundaryK1 { k1_sstar, .. } => {
            let g = parse_group(k1_sstar)?;
            let k = boundary_case_k1_qm(&g);
            Ok(Rendered::ok(emit(
                format,
                || json!({ "K1(S*M)": g.to_json(), "K1(Q_M)": k.to_json() }),
                || k.to_string(),
            )))
        }
        Command::Toeplitz { symbol, samples, .. } => {
            let s: LaurentSymbol = symbol.parse().map_err(|e| toeplitz_error("parse_symbol", e))?;
            let (index, winding) = match samples {
                Some(n) => {
                    let idx = toeplitz_index_with_samples(&s, *n).map_err(|e| toeplitz_error("toeplitz_index", e))?;
                    let w = winding_number_numeric(&s, *n).map_err(|e| toeplitz_error("winding_number_numeric", e))?;
                    (idx, w)
                }
                None => {
                    let idx = toeplitz_index(&s).map_err(|e| toeplitz_error("toeplitz_index", e))?;
                    let w = winding_number(&s).map_err(|e| toeplitz_error("winding_number_numeric", e))?;
                    (idx, w)
                }
            };
            info!("symbol {s}: winding {winding}, index {index}");
            Ok(Rendered::ok(emit(
                format,
                || json!({ "symbol": s.to_string(), "winding": winding, "index": index }),
                || index.to_string(),
            )))
        }
        Command::Pairing {
            ring, class, todd, dim_f, ..
        } => {
            let r = Arc::new(load_ring(ring).map_err(|e| charclass_error("load_ring", e))?);
            let a = RingElement::parse(&r, class).map_err(|e| charclass_error("parse_class", e))?;
            let t = RingElement::parse(&r, todd).map_err(|e| charclass_error("parse_class", e))?;
            let p = index_pairing(&a, &t, *dim_f).map_err(|e| charclass_error("index_pairing", e))?;
            let mut out = Rendered::ok(emit(
                format,
                || {
                    json!({
                        "ring": r.name(),
                        "class": a.to_json(),
                        "todd": t.to_json(),
                        "dim_f": dim_f,
                        "value": p.value.to_string(),
                        "integral": p.integral,
                    })
                },
                || p.value.to_string(),
            ));
            out.warnings.extend(p.warning());
            Ok(out)
        }
    }
}
