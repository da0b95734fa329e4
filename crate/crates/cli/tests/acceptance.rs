//! Acceptance suite: one PASS/FAIL line per criterion.

mod oracle;

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use cornerk_core::charclass::{
    chern_character, higher_indicial_k_groups, index_pairing, parse_builtin_ring, todd_class, BundleData, GradedRing,
    RingElement,
};
use cornerk_core::complex::parse_builtin;
use cornerk_core::ktheory::{boundary_case_k1_qm, e1_page, e2_page, six_term_solve, SixTermProblem, Slot};
use cornerk_core::toeplitz::{toeplitz_index, winding_number, winding_number_roots, LaurentSymbol};
use cornerk_core::{AbelianGroup, CornerComplex};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn builtin_specs() -> Vec<String> {
    let mut specs = Vec::new();
    for n in 0..=6 {
        specs.push(format!("cube:{n}"));
        specs.push(format!("simplex:{n}"));
    }
    let factors: Vec<(String, usize)> = (1..=5)
        .flat_map(|n| [(format!("cube:{n}"), n), (format!("simplex:{n}"), n)])
        .collect();
    for (a, da) in &factors {
        for (b, db) in &factors {
            if da + db <= 6 {
                specs.push(format!("product:{a},{b}"));
            }
        }
    }
    specs
}

fn builtins() -> Result<Vec<CornerComplex>, String> {
    builtin_specs()
        .iter()
        .map(|s| parse_builtin(s).map_err(|e| format!("{s}: {e}")))
        .collect()
}

fn differential_property() -> Outcome {
    let cs = builtins()?;
    let mut checked = 0;
    for c in &cs {
        for l in 1..c.dim() {
            let lower = c.incidence_matrix(l).map_err(|e| e.to_string())?;
            let upper = c.incidence_matrix(l + 1).map_err(|e| e.to_string())?;
            let prod = upper.mul(&lower).map_err(|e| e.to_string())?;
            ensure(prod.is_zero(), || format!("{}: M_{} M_{} != 0", c.name(), l + 1, l))?;
            checked += 1;
        }
    }
    Ok(format!("{} complexes, {checked} products", cs.len()))
}

fn e1_shape() -> Outcome {
    let cs = builtins()?;
    for c in &cs {
        let e1 = e1_page(c).map_err(|e| e.to_string())?;
        let n = c.dim();
        for l in 0..=n {
            for i in 0..2i64 {
                let g = &e1.slot(l, i).group;
                let expected = if (n - l + i as usize) % 2 == 0 {
                    AbelianGroup::free(c.count_of_dim(l))
                } else {
                    AbelianGroup::trivial()
                };
                ensure(*g == expected, || format!("{} slot ({l},{i}): {g} vs {expected}", c.name()))?;
            }
        }
    }
    Ok(format!("{} complexes", cs.len()))
}

fn e2_matches_cohomology() -> Outcome {
    let mut done = Vec::new();
    for kind in ["cube", "simplex"] {
        for n in 0..=5 {
            let spec = format!("{kind}:{n}");
            let c = parse_builtin(&spec).map_err(|e| e.to_string())?;
            let e2 = e2_page(&c).map_err(|e| e.to_string())?;
            let h = oracle::order_complex_cohomology(&c);
            for l in 0..=n {
                let parity = ((n - l) % 2) as i64;
                let (rank, torsion) = &h[l];
                let expected = AbelianGroup::from_cyclic_orders(*rank, torsion.iter().map(|&t| t as u64));
                ensure(*e2.group(l, parity) == expected, || {
                    format!("{spec} at l={l}: E2 {} vs H^{l} {expected}", e2.group(l, parity))
                })?;
                ensure(e2.group(l, 1 - parity).is_trivial(), || format!("{spec}: ({l},{}) nonzero", 1 - parity))?;
            }
            let nz = e2.nonzero();
            ensure(
                nz.len() == 1 && nz[0].0 == 0 && nz[0].1 == n % 2 && *nz[0].2 == AbelianGroup::free(1),
                || format!("{spec}: E2 is not a single Z at (0,{})", n % 2),
            )?;
            done.push(spec);
        }
    }
    Ok(format!("{} complexes against order-complex cohomology", done.len()))
}

fn gauge_invariance() -> Outcome {
    let c = parse_builtin("cube:3").map_err(|e| e.to_string())?;
    let base = e2_page(&c).map_err(|e| e.to_string())?;
    for f in c.faces() {
        let flipped = c.flip_orientation(&f.id).map_err(|e| e.to_string())?;
        ensure(flipped.is_valid(), || format!("flipping {} breaks validity", f.id))?;
        let e2 = e2_page(&flipped).map_err(|e| e.to_string())?;
        ensure(e2.groups == base.groups, || format!("flipping {} changes E2", f.id))?;
    }
    Ok(format!("{} single-face flips", c.faces().len()))
}

fn random_symbol(rng: &mut StdRng) -> (LaurentSymbol, i64) {
    let shift = rng.gen_range(-3..=3);
    let mut s = LaurentSymbol::monomial(shift);
    let mut inside = 0;
    for _ in 0..rng.gen_range(0..=4) {
        let r = if rng.gen_bool(0.5) {
            inside += 1;
            rng.gen_range(0.05..0.99)
        } else {
            rng.gen_range(1.01..3.0)
        };
        let root = Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU));
        let factor = LaurentSymbol::from_f64(&[(1, Complex64::new(1.0, 0.0)), (0, -root)]).unwrap();
        s = s.mul(&factor);
    }
    (s, inside + shift)
}

fn wiener_hopf_index() -> Outcome {
    let z = LaurentSymbol::monomial(1);
    ensure(toeplitz_index(&z) == Ok(-1), || format!("index(z) = {:?}", toeplitz_index(&z)))?;
    for k in -8..=8 {
        let s = LaurentSymbol::monomial(k);
        let w = winding_number(&s).map_err(|e| e.to_string())?;
        let r = winding_number_roots(&s).map_err(|e| e.to_string())?;
        let idx = toeplitz_index(&s).map_err(|e| e.to_string())?;
        ensure(w == k && r == k && idx == -k, || format!("z^{k}: winding {w}, roots {r}, index {idx}"))?;
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let (a, wa) = random_symbol(&mut rng);
        let (b, wb) = random_symbol(&mut rng);
        let ia = toeplitz_index(&a).map_err(|e| format!("trial {trial}: {e}"))?;
        let ib = toeplitz_index(&b).map_err(|e| format!("trial {trial}: {e}"))?;
        let iab = toeplitz_index(&a.mul(&b)).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(ia == -wa && ib == -wb, || format!("trial {trial}: index off the root count"))?;
        ensure(iab == ia + ib, || format!("trial {trial}: {iab} != {ia} + {ib}"))?;
    }
    Ok("z^k for |k| <= 8 and 100 random products".into())
}

fn wiener_hopf_algebra_is_k_trivial() -> Outcome {
    for index in [-1, 1] {
        let sol = six_term_solve(&SixTermProblem::wiener_hopf(index)).map_err(|e| e.to_string())?;
        for slot in [Slot::K0Algebra, Slot::K1Algebra] {
            let g = sol.group(slot);
            ensure(g.is_some_and(AbelianGroup::is_trivial), || {
                format!("boundary map {index}: {slot} = {}", sol.slot(slot))
            })?;
        }
    }
    Ok("K0 = K1 = 0 for boundary map +1 and -1".into())
}

fn boundary_split() -> Outcome {
    for text in ["0", "Z", "Z^2", "Z + Z/2"] {
        let g: AbelianGroup = text.parse().map_err(|e: cornerk_core::GroupError| e.to_string())?;
        let expected = AbelianGroup::free(1).direct_sum(&g);
        let got = boundary_case_k1_qm(&g);
        ensure(got == expected, || format!("{text}: got {got}"))?;
        ensure(got.rank() == g.rank() + 1 && got.torsion() == g.torsion(), || format!("{text}: shape"))?;
    }
    Ok("0, Z, Z^2, Z + Z/2".into())
}

fn factorial(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).map(BigInt::from).product())
}

/// Coefficients of x/(1 − e^{−x}) by inverting Σ (−1)^n x^n/(n+1)!.
fn todd_oracle(n: usize) -> Vec<BigRational> {
    let g: Vec<BigRational> = (0..=n)
        .map(|k| {
            let s = factorial(k + 1).recip();
            if k % 2 == 1 {
                -s
            } else {
                s
            }
        })
        .collect();
    let mut f = vec![BigRational::zero(); n + 1];
    f[0] = g[0].recip();
    for k in 1..=n {
        let s: BigRational = (1..=k).map(|j| &g[j] * &f[k - j]).sum();
        f[k] = -s / &g[0];
    }
    f
}

fn random_bundle(ring: &Arc<GradedRing>, rng: &mut StdRng) -> BundleData {
    let rank = rng.gen_range(0..=3);
    let chern = (1..=rank)
        .map(|k| {
            let terms: Vec<(&str, BigRational)> = ring
                .labels()
                .iter()
                .filter(|l| ring.degree_of(l).unwrap() == 2 * k)
                .map(|l| (l.as_str(), BigRational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into())))
                .collect();
            RingElement::from_terms(ring, terms).unwrap()
        })
        .collect();
    BundleData::new(ring, rank, chern).unwrap()
}

fn characteristic_classes() -> Outcome {
    let specs = ["cp:4", "product:cp:2,cp:2", "product:sphere:2,cp:3", "product:torus:2,cp:3", "product:torus:4,sphere:4"];
    let rings: Vec<Arc<GradedRing>> = specs
        .iter()
        .map(|s| parse_builtin_ring(s).map(Arc::new).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    ensure(rings.iter().all(|r| r.top_degree() <= 8), || "ring above degree 8".into())?;
    let mut rng = StdRng::seed_from_u64(8);
    for trial in 0..50 {
        let ring = &rings[trial % rings.len()];
        let (e, f) = (random_bundle(ring, &mut rng), random_bundle(ring, &mut rng));
        let sum = e.direct_sum(&f).map_err(|e| e.to_string())?;
        let td = todd_class(&e).mul(&todd_class(&f)).map_err(|e| e.to_string())?;
        ensure(todd_class(&sum) == td, || format!("trial {trial}: Td not multiplicative in {}", ring.name()))?;
        let ch = chern_character(&e).add(&chern_character(&f)).map_err(|e| e.to_string())?;
        ensure(chern_character(&sum) == ch, || format!("trial {trial}: ch not additive in {}", ring.name()))?;
    }
    let ring = Arc::new(parse_builtin_ring("cp:2").map_err(|e| e.to_string())?);
    let x = RingElement::basis(&ring, "x").map_err(|e| e.to_string())?;
    let td = todd_class(&BundleData::line(x).map_err(|e| e.to_string())?);
    let f = todd_oracle(2);
    ensure(f[1] == BigRational::new(1.into(), 2.into()) && f[2] == BigRational::new(1.into(), 12.into()), || {
        "oracle disagrees with 1/2, 1/12".into()
    })?;
    for (k, label) in ["1", "x", "x^2"].iter().enumerate() {
        let got = td.coefficient(label).map_err(|e| e.to_string())?;
        ensure(got == f[k], || format!("Td coefficient of {label}: {got} vs {}", f[k]))?;
    }
    Ok(format!("50 bundle pairs, Td(line) = {td}"))
}

fn torus_pairing() -> Outcome {
    let ring = Arc::new(parse_builtin_ring("torus:2").map_err(|e| e.to_string())?);
    let ch = RingElement::parse(&ring, &format!("1:1,{}:1", ring.top_label())).map_err(|e| e.to_string())?;
    let p = index_pairing(&ch, &RingElement::one(&ring), 1).map_err(|e| e.to_string())?;
    ensure(p.value == -BigRational::one(), || format!("pairing = {}", p.value))?;
    ensure(p.integral && p.value.abs().is_one(), || "not a unit integer".into())?;
    Ok(format!("pairing = {}", p.value))
}

fn higher_indicial() -> Outcome {
    let (a, b) = higher_indicial_k_groups((&AbelianGroup::free(2), &AbelianGroup::free(3)), true, 1)
        .map_err(|e| e.to_string())?;
    ensure(a == AbelianGroup::free(1) && b == AbelianGroup::free(3), || format!("got ({a}, {b})"))?;
    Ok(format!("({a}, {b})"))
}

fn cornerk(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cornerk"))
        .args(args)
        .env("CORNERK_LOG", "quiet")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("cornerk {args:?} failed: {}", String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn cli_roundtrip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("cube3.json");
    let faces = cornerk(&["faces", "--manifold", "cube:3", "--format", "json"])?;
    std::fs::write(&path, &faces).map_err(|e| e.to_string())?;
    let file = path.to_str().unwrap();
    cornerk(&["validate", "--manifold", file])?;
    for format in ["json", "text"] {
        let direct = cornerk(&["report", "--manifold", "cube:3", "--format", format])?;
        let again = cornerk(&["report", "--manifold", file, "--format", format])?;
        ensure(direct == again, || format!("{format} report differs after round trip"))?;
    }
    Ok(format!("{} bytes of face JSON", faces.len()))
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("differential property", Some(Duration::from_secs(10)), differential_property),
        ("E1 shape", None, e1_shape),
        ("E2 vs cohomology oracle", Some(Duration::from_secs(30)), e2_matches_cohomology),
        ("orientation-gauge invariance", None, gauge_invariance),
        ("Wiener-Hopf index", Some(Duration::from_secs(5)), wiener_hopf_index),
        ("K_*(L0) = 0", None, wiener_hopf_algebra_is_k_trivial),
        ("boundary split sequence", None, boundary_split),
        ("characteristic-class identities", Some(Duration::from_secs(5)), characteristic_classes),
        ("equivariant index pairing", None, torus_pairing),
        ("higher indicial K-groups", None, higher_indicial),
        ("CLI round-trip", None, cli_roundtrip),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(limit)) if took > *limit => Err(format!("took {took:.2?}, limit {limit:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS {:>2}  {name}: {detail} ({:.2} s)", k + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}  {name}: {why} ({:.2} s)", k + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
