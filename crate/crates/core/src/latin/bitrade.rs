use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::square::{first_violations, Alphabets, PairIndex, PartialLatinSquare, Role, Triple};
use crate::error::{Error, Result, Violation};

/// Where a bitrade came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Explicit,
    FromPerms,
    FromGroup {
        group: String,
        a: String,
        b: String,
        c: String,
        /// Whether `<a, b, c>` is the whole group.
        generates: bool,
    },
}

/// A latin bitrade `(T∘, T⋆)`: disjoint partial latin squares over shared
/// alphabets such that every triple of either one agrees in any two
/// coordinates with exactly one triple of the other.
#[derive(Clone, Debug)]
pub struct Bitrade {
    circ: PartialLatinSquare,
    star: PartialLatinSquare,
    provenance: Provenance,
}

impl PartialEq for Bitrade {
    fn eq(&self, other: &Self) -> bool {
        self.circ == other.circ && self.star == other.star
    }
}

/// Maximum number of violations collected before validation stops.
const MAX_REPORTED: usize = 16;

impl Bitrade {
    /// Validates R1–R3 for a pair of partial latin squares. Alphabets are
    /// merged by label when the two squares were built separately.
    pub fn new(circ: PartialLatinSquare, star: PartialLatinSquare, provenance: Provenance) -> Result<Self> {
        let (circ, star) = if circ.alphabets() == star.alphabets() {
            let shared = circ.alphabets().clone();
            (circ, star.share_alphabets(shared))
        } else {
            let merged = Arc::new(merge(circ.alphabets(), star.alphabets()));
            let c = circ.reindexed(&merged)?;
            let s = star.reindexed(&merged)?;
            (
                PartialLatinSquare::new(merged.clone(), c).map_err(|e| coverage("R3", "T∘", "T⋆", e))?,
                PartialLatinSquare::new(merged, s).map_err(|e| coverage("R2", "T⋆", "T∘", e))?,
            )
        };
        let b = Bitrade { circ, star, provenance };
        b.validate()?;
        Ok(b)
    }

    /// Builds from labelled triple lists.
    pub fn from_labels<S: AsRef<str>>(circ: &[[S; 3]], star: &[[S; 3]]) -> Result<Self> {
        Bitrade::new(
            PartialLatinSquare::from_labels(circ)?,
            PartialLatinSquare::from_labels(star)?,
            Provenance::Explicit,
        )
    }

    /// Builds from index triples over shared alphabets.
    pub fn from_indexed(
        alphabets: Arc<Alphabets>,
        circ: Vec<Triple>,
        star: Vec<Triple>,
        provenance: Provenance,
    ) -> Result<Self> {
        let circ = PartialLatinSquare::new(alphabets.clone(), circ).map_err(|e| coverage("R3", "T∘", "T⋆", e))?;
        let star = PartialLatinSquare::new(alphabets, star).map_err(|e| coverage("R2", "T⋆", "T∘", e))?;
        Bitrade::new(circ, star, provenance)
    }

    fn validate(&self) -> Result<()> {
        let circ_index = PairIndex::build(self.circ.triples()).expect("T∘ satisfies P1");
        let star_index = PairIndex::build(self.star.triples()).expect("T⋆ satisfies P1");
        let mut violations = Vec::new();
        for t in self.circ.triples() {
            if self.star.contains(t) {
                violations.push(Violation::new("R1", format!("{} lies in both T∘ and T⋆", self.circ.show(t))));
            }
        }
        for (cond, from, into, index) in [
            ("R2", &self.circ, "T⋆", &star_index),
            ("R3", &self.star, "T∘", &circ_index),
        ] {
            for t in from.triples() {
                for free in 0..3 {
                    if index.find(t, free).is_none() {
                        violations.push(Violation::new(
                            cond,
                            format!(
                                "no triple of {into} agrees with {} outside the {}",
                                from.show(t),
                                Role::ALL[free].name()
                            ),
                        ));
                    }
                    if violations.len() >= MAX_REPORTED {
                        return first_violations(violations);
                    }
                }
            }
        }
        if violations.is_empty() && self.circ.len() != self.star.len() {
            violations.push(Violation::new("R2", format!("|T∘| = {} but |T⋆| = {}", self.circ.len(), self.star.len())));
        }
        first_violations(violations)
    }

    pub fn circ(&self) -> &PartialLatinSquare {
        &self.circ
    }

    pub fn star(&self) -> &PartialLatinSquare {
        &self.star
    }

    pub fn alphabets(&self) -> &Arc<Alphabets> {
        self.circ.alphabets()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// `|T∘|`.
    pub fn size(&self) -> usize {
        self.circ.len()
    }

    /// Isotopic copy with every label renamed. Each map lists `(old, new)`
    /// pairs for one role, in the order the new alphabet should take.
    pub fn relabeled(&self, maps: [&[(String, String)]; 3]) -> Result<Bitrade> {
        let alph = self.alphabets();
        let mut new_labels: [Vec<String>; 3] = Default::default();
        let mut remap: [Vec<u32>; 3] = Default::default();
        for role in Role::ALL {
            let k = role as usize;
            let old = alph.get(role);
            if maps[k].len() != old.len() {
                return Err(Error::Domain(format!("{} relabelling must cover all {} labels", role.name(), old.len())));
            }
            remap[k] = vec![u32::MAX; old.len()];
            for (i, (from, to)) in maps[k].iter().enumerate() {
                let j = alph
                    .position(role, from)
                    .ok_or_else(|| Error::Domain(format!("unknown {} label '{from}'", role.name())))?;
                if remap[k][j as usize] != u32::MAX {
                    return Err(Error::Domain(format!("{} label '{from}' mapped twice", role.name())));
                }
                remap[k][j as usize] = i as u32;
                new_labels[k].push(to.clone());
            }
        }
        let [rows, cols, syms] = new_labels;
        let alphabets = Arc::new(Alphabets::new(rows, cols, syms));
        let apply = |ts: &[Triple]| -> Vec<Triple> {
            ts.iter().map(|t| [remap[0][t[0] as usize], remap[1][t[1] as usize], remap[2][t[2] as usize]]).collect()
        };
        Bitrade::from_indexed(alphabets, apply(self.circ.triples()), apply(self.star.triples()), self.provenance.clone())
    }

    /// The symbol at `(row, col)` in T∘ and in T⋆, if the cell is filled.
    pub fn cell(&self, row: u32, col: u32) -> Option<(u32, u32)> {
        let find = |p: &PartialLatinSquare| {
            let i = p.triples().partition_point(|t| (t[0], t[1]) < (row, col));
            p.triples().get(i).filter(|t| t[0] == row && t[1] == col).map(|t| t[2])
        };
        Some((find(&self.circ)?, find(&self.star)?))
    }
}

/// An unused label after alphabet merging means one square does not cover
/// the other; report it as the bitrade condition that fails.
fn coverage(cond: &'static str, this: &str, other: &str, e: Error) -> Error {
    match e {
        Error::Violations(v) if v.iter().all(|v| v.condition == "P2") => Error::Violations(vec![Violation::new(
            cond,
            format!("{this} does not cover {other}: {}", v[0].detail),
        )]),
        other => other,
    }
}

fn merge(a: &Alphabets, b: &Alphabets) -> Alphabets {
    let extend = |x: &[String], y: &[String]| {
        let mut out = x.to_vec();
        for l in y {
            if !out.contains(l) {
                out.push(l.clone());
            }
        }
        out
    };
    Alphabets::new(extend(&a.rows, &b.rows), extend(&a.cols, &b.cols), extend(&a.syms, &b.syms))
}
