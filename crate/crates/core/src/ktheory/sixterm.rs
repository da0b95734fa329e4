//! Rank bookkeeping for the cyclic six-term exact sequence of an extension
//! `0 → I → A → A/I → 0`:
//!
//! ```text
//! K₀(I) → K₀(A) → K₀(A/I)
//!   ↑                 ↓
//! K₁(A/I) ← K₁(A) ← K₁(I)
//! ```
//!
//! Slots are numbered in arrow order, so map `k` goes from slot `k` to slot
//! `k + 1 (mod 6)`. Exactness gives `rank(slot k) = rank(im map k-1) +
//! rank(im map k)` at every slot, which pins down missing ranks. Torsion of a
//! missing group is filled only when the extension it sits in is forced to
//! split; otherwise it is reported as ambiguous.

use std::fmt;

use serde::Deserialize;
use serde_json::Value;

use crate::error::KTheoryError;
use crate::group::AbelianGroup;
use crate::linalg::{invariant_factors, IntegerMatrix};
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    K0Ideal,
    K0Algebra,
    K0Quotient,
    K1Ideal,
    K1Algebra,
    K1Quotient,
}

impl Slot {
    pub const ALL: [Slot; 6] = [
        Slot::K0Ideal,
        Slot::K0Algebra,
        Slot::K0Quotient,
        Slot::K1Ideal,
        Slot::K1Algebra,
        Slot::K1Quotient,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(k: usize) -> Slot {
        Self::ALL[k % 6]
    }

    pub fn next(self) -> Slot {
        Self::from_index(self.index() + 1)
    }

    pub fn prev(self) -> Slot {
        Self::from_index(self.index() + 5)
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::K0Ideal => "K0(I)",
            Slot::K0Algebra => "K0(A)",
            Slot::K0Quotient => "K0(A/I)",
            Slot::K1Ideal => "K1(I)",
            Slot::K1Algebra => "K1(A)",
            Slot::K1Quotient => "K1(A/I)",
        }
    }

    pub fn parse(s: &str) -> Option<Slot> {
        Self::ALL.into_iter().find(|x| x.name() == s.trim())
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Name of the map leaving `slot`.
pub fn map_name(slot: Slot) -> String {
    format!("{}->{}", slot, slot.next())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SixTermProblem {
    groups: [Option<AbelianGroup>; 6],
    /// `maps[k]` leaves slot k, acting on free parts: rank(k+1) × rank(k).
    maps: [Option<IntegerMatrix>; 6],
}

impl SixTermProblem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_group(mut self, slot: Slot, group: AbelianGroup) -> Self {
        self.groups[slot.index()] = Some(group);
        self
    }

    /// Sets the map leaving `source`.
    pub fn with_map(mut self, source: Slot, matrix: IntegerMatrix) -> Self {
        self.maps[source.index()] = Some(matrix);
        self
    }

    pub fn group(&self, slot: Slot) -> Option<&AbelianGroup> {
        self.groups[slot.index()].as_ref()
    }

    pub fn map(&self, source: Slot) -> Option<&IntegerMatrix> {
        self.maps[source.index()].as_ref()
    }

    /// The Wiener-Hopf extension `0 → 𝒦 → ℒ₀ → C₀(ℝ) → 0`, whose index map
    /// `K₁(C₀(ℝ)) → K₀(𝒦)` is multiplication by `index` (the shift has −1).
    pub fn wiener_hopf(index: i64) -> Self {
        Self::new()
            .with_group(Slot::K0Ideal, AbelianGroup::free(1))
            .with_group(Slot::K1Ideal, AbelianGroup::trivial())
            .with_group(Slot::K0Quotient, AbelianGroup::trivial())
            .with_group(Slot::K1Quotient, AbelianGroup::free(1))
            .with_map(Slot::K1Quotient, IntegerMatrix::from_rows(&[[index]]))
    }

    /// `{"groups": {"K0(I)": "Z", ...}, "maps": {"K1(A/I)": {"rows": 1, "cols": 1, "data": [-1]}}}`;
    /// maps are keyed by their source slot.
    pub fn from_json(text: &str) -> Result<Self, KTheoryError> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            #[serde(default)]
            groups: serde_json::Map<String, Value>,
            #[serde(default)]
            maps: serde_json::Map<String, Value>,
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct RawMatrix {
            rows: usize,
            cols: usize,
            data: Vec<i64>,
        }
        let bad = KTheoryError::Parse;
        let raw: Raw = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let mut p = Self::new();
        for (k, v) in raw.groups {
            let slot = Slot::parse(&k).ok_or_else(|| bad(format!("unknown slot {k:?}")))?;
            let text = v.as_str().ok_or_else(|| bad(format!("group for {k} must be a string")))?;
            let g = text.parse().map_err(|e: crate::error::GroupError| bad(e.to_string()))?;
            p = p.with_group(slot, g);
        }
        for (k, v) in raw.maps {
            let slot = Slot::parse(&k).ok_or_else(|| bad(format!("unknown slot {k:?}")))?;
            let m: RawMatrix = serde_json::from_value(v).map_err(|e| bad(e.to_string()))?;
            let m = IntegerMatrix::new(m.rows, m.cols, m.data.into_iter().map(Into::into).collect())
                .map_err(|e| bad(e.to_string()))?;
            p = p.with_map(slot, m);
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlotSolution {
    Given(AbelianGroup),
    /// Forced by exactness, torsion included.
    Solved(AbelianGroup),
    /// Rank forced, torsion depends on an extension problem.
    RankOnly { rank: usize },
    /// Several ranks are compatible with exactness.
    Underdetermined { ranks: Vec<usize> },
}

impl SlotSolution {
    pub fn group(&self) -> Option<&AbelianGroup> {
        match self {
            SlotSolution::Given(g) | SlotSolution::Solved(g) => Some(g),
            _ => None,
        }
    }
}

impl fmt::Display for SlotSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlotSolution::Given(g) => write!(f, "{g} (given)"),
            SlotSolution::Solved(g) => write!(f, "{g} (solved)"),
            SlotSolution::RankOnly { rank } => {
                write!(f, "rank {rank}, torsion ambiguous (extension problem)")
            }
            SlotSolution::Underdetermined { ranks } => {
                let r: Vec<String> = ranks.iter().map(ToString::to_string).collect();
                write!(f, "underdetermined, rank in {{{}}}", r.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixTermSolution {
    pub slots: [SlotSolution; 6],
    /// Rank of the image of the map leaving each slot, when forced.
    pub map_ranks: [Option<usize>; 6],
}

impl SixTermSolution {
    pub fn slot(&self, slot: Slot) -> &SlotSolution {
        &self.slots[slot.index()]
    }

    pub fn group(&self, slot: Slot) -> Option<&AbelianGroup> {
        self.slot(slot).group()
    }

    pub fn is_complete(&self) -> bool {
        self.slots.iter().all(|s| s.group().is_some())
    }

    /// Slots whose rank or torsion exactness leaves open.
    pub fn ambiguous_slots(&self) -> Vec<Slot> {
        Slot::ALL
            .into_iter()
            .filter(|s| self.slot(*s).group().is_none())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let mut slots = serde_json::Map::new();
        for s in Slot::ALL {
            let v = match self.slot(s) {
                SlotSolution::Given(g) => serde_json::json!({"status": "given", "group": g.to_json()}),
                SlotSolution::Solved(g) => serde_json::json!({"status": "solved", "group": g.to_json()}),
                SlotSolution::RankOnly { rank } => serde_json::json!({"status": "rank_only", "rank": rank}),
                SlotSolution::Underdetermined { ranks } => {
                    serde_json::json!({"status": "underdetermined", "ranks": ranks})
                }
            };
            slots.insert(s.name().to_string(), v);
        }
        let mut ranks = serde_json::Map::new();
        for s in Slot::ALL {
            ranks.insert(map_name(s), self.map_ranks[s.index()].into());
        }
        serde_json::json!({"slots": slots, "map_ranks": ranks, "complete": self.is_complete()})
    }
}

impl fmt::Display for SixTermSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in Slot::ALL {
            writeln!(f, "{:<8} {}", s.name(), self.slot(s))?;
        }
        for s in Slot::ALL {
            let r = self.map_ranks[s.index()].map_or("?".to_string(), |r| r.to_string());
            writeln!(f, "rank im({}) = {}", map_name(s), r)?;
        }
        Ok(())
    }
}

fn matrix_rank(m: &IntegerMatrix) -> usize {
    invariant_factors(m).iter().filter(|x| !x.is_zero()).count()
}

pub fn six_term_solve(p: &SixTermProblem) -> Result<SixTermSolution, KTheoryError> {
    let known: Vec<Option<usize>> = p.groups.iter().map(|g| g.as_ref().map(AbelianGroup::rank)).collect();
    for s in Slot::ALL {
        if known[s.index()].is_none() {
            for nb in [s.prev(), s.next()] {
                if known[nb.index()].is_none() {
                    return Err(KTheoryError::AdjacentUnknowns {
                        slot: s.to_string(),
                        neighbour: nb.to_string(),
                    });
                }
            }
        }
    }
    let mut fixed = [None; 6];
    for s in Slot::ALL {
        let k = s.index();
        let Some(m) = &p.maps[k] else { continue };
        let (Some(src), Some(dst)) = (known[k], known[s.next().index()]) else {
            return Err(KTheoryError::Inconsistent {
                slot: s.to_string(),
                reason: format!("map {} touches an unknown group", map_name(s)),
            });
        };
        if m.shape() != (dst, src) {
            return Err(KTheoryError::MapShape {
                map: map_name(s),
                got: m.shape(),
                expected: (dst, src),
            });
        }
        fixed[k] = Some(matrix_rank(m));
    }
    // every map touches a known slot, so its rank is bounded
    let bounds: Vec<usize> = (0..6)
        .map(|k| {
            [known[k], known[(k + 1) % 6]]
                .into_iter()
                .flatten()
                .min()
                .expect("one endpoint is known")
        })
        .collect();

    let mut solutions: Vec<[usize; 6]> = Vec::new();
    let mut fail_slot = None;
    let mut current = [0usize; 6];
    enumerate(0, &mut current, &known, &fixed, &bounds, &mut solutions, &mut fail_slot);
    if solutions.is_empty() {
        let slot = Slot::from_index(fail_slot.unwrap_or(0));
        return Err(KTheoryError::Inconsistent {
            slot: slot.to_string(),
            reason: "no assignment of image ranks satisfies rank exactness".into(),
        });
    }

    // exactness on free parts where both neighbouring maps are explicit
    for s in Slot::ALL {
        let k = s.index();
        let into = &p.maps[s.prev().index()];
        let out = &p.maps[k];
        if let (Some(f), Some(g), Some(group)) = (into, out, &p.groups[k]) {
            let comp = g.mul(f).expect("shapes checked");
            if !comp.is_zero() {
                return Err(KTheoryError::Inconsistent {
                    slot: s.to_string(),
                    reason: "consecutive maps do not compose to zero".into(),
                });
            }
            if group.is_free() {
                let d = invariant_factors(f);
                let image_saturated = d.iter().all(|x| x.is_zero() || x.is_one());
                let rf = d.iter().filter(|x| !x.is_zero()).count();
                if group.rank() != rf + matrix_rank(g) || !image_saturated {
                    return Err(KTheoryError::Inconsistent {
                        slot: s.to_string(),
                        reason: "image of the incoming map differs from the kernel of the outgoing map".into(),
                    });
                }
            }
        }
    }

    let map_ranks: [Option<usize>; 6] = std::array::from_fn(|k| {
        let first = solutions[0][k];
        solutions.iter().all(|s| s[k] == first).then_some(first)
    });

    let slots: [SlotSolution; 6] = std::array::from_fn(|k| {
        if let Some(g) = &p.groups[k] {
            return SlotSolution::Given(g.clone());
        }
        let mut ranks: Vec<usize> = solutions.iter().map(|s| s[(k + 5) % 6] + s[k]).collect();
        ranks.sort_unstable();
        ranks.dedup();
        if ranks.len() > 1 {
            return SlotSolution::Underdetermined { ranks };
        }
        let rank = ranks[0];
        match forced_group(p, &map_ranks, Slot::from_index(k), rank) {
            Some(g) => SlotSolution::Solved(g),
            None => SlotSolution::RankOnly { rank },
        }
    });

    Ok(SixTermSolution { slots, map_ranks })
}

fn enumerate(
    k: usize,
    current: &mut [usize; 6],
    known: &[Option<usize>],
    fixed: &[Option<usize>; 6],
    bounds: &[usize],
    out: &mut Vec<[usize; 6]>,
    fail_slot: &mut Option<usize>,
) {
    if k == 6 {
        // slot 0 closes the cycle
        if known[0].map_or(true, |g| g == current[5] + current[0]) {
            out.push(*current);
        } else {
            fail_slot.get_or_insert(0);
        }
        return;
    }
    let range = match fixed[k] {
        Some(r) => r..=r,
        None => 0..=bounds[k],
    };
    for r in range {
        current[k] = r;
        if k > 0 {
            if let Some(g) = known[k] {
                if g != current[k - 1] + r {
                    *fail_slot = Some(fail_slot.map_or(k, |f: usize| f.max(k)));
                    continue;
                }
            }
        }
        enumerate(k + 1, current, known, fixed, bounds, out, fail_slot);
    }
}

/// Fills an unknown slot `X` between known `A → X → B` when the extension
/// `0 → A / im(W → A) → X → ker(X → B) → 0` is forced to split, i.e. when
/// `B` is free. The left term must itself be computable.
fn forced_group(
    p: &SixTermProblem,
    map_ranks: &[Option<usize>; 6],
    x: Slot,
    rank: usize,
) -> Option<AbelianGroup> {
    let a_slot = x.prev();
    let w_slot = a_slot.prev();
    let a = p.group(a_slot)?;
    let b = p.group(x.next())?;
    if !b.is_free() {
        return None;
    }
    let image_of_a = if a.is_trivial() {
        AbelianGroup::trivial()
    } else if p.group(w_slot).is_some_and(AbelianGroup::is_trivial)
        || (a.is_free() && map_ranks[w_slot.index()] == Some(0))
    {
        a.clone()
    } else if let (Some(h), true) = (p.map(w_slot), a.is_free()) {
        AbelianGroup::cokernel(h)
    } else {
        return None;
    };
    if image_of_a.rank() > rank {
        return None;
    }
    Some(image_of_a.direct_sum(&AbelianGroup::free(rank - image_of_a.rank())))
}
