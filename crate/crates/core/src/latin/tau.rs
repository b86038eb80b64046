//! The permutation view of a bitrade.
//!
//! `β_r : T⋆ → T∘` changes coordinate `r` only. The three permutations
//! `τ1 = β2⁻¹β3`, `τ2 = β3⁻¹β1`, `τ3 = β1⁻¹β2` of T∘ are fixed-point free,
//! multiply to the identity, and cycles of different τ's share at most one
//! point. Conversely any such triple of permutations on a set X yields a
//! bitrade of size |X| whose rows, columns and symbols are the cycles.

use std::collections::HashMap;
use std::sync::Arc;

use super::bitrade::{Bitrade, Provenance};
use super::square::{Alphabets, PairIndex, Role, Triple};
use crate::error::{Error, Result, Violation};
use crate::group::Perm;

/// `β_r` for `r` = row, column, symbol, as maps from T⋆ index to T∘ index.
pub fn beta_maps(b: &Bitrade) -> [Vec<u32>; 3] {
    let circ = PairIndex::build(b.circ().triples()).expect("T∘ satisfies P1");
    [0, 1, 2].map(|r| {
        b.star()
            .triples()
            .iter()
            .map(|t| {
                let i = circ.find(t, r).expect("R3 guarantees a unique partner");
                debug_assert_ne!(b.circ().triples()[i as usize][r], t[r]);
                i
            })
            .collect()
    })
}

/// Three permutations of `{0..n}` with their cycle structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauTriple {
    perms: [Vec<u32>; 3],
    /// Cycles of length at least two, each starting at its smallest point,
    /// ordered by that point.
    cycles: [Vec<Vec<u32>>; 3],
    /// Cycle id of each point, `u32::MAX` for fixed points.
    cycle_of: [Vec<u32>; 3],
}

fn cycles_of(perm: &[u32]) -> (Vec<Vec<u32>>, Vec<u32>) {
    let mut cycle_of = vec![u32::MAX; perm.len()];
    let mut cycles = Vec::new();
    let mut seen = vec![false; perm.len()];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            c.push(x as u32);
            x = perm[x] as usize;
        }
        if c.len() > 1 {
            for &p in &c {
                cycle_of[p as usize] = cycles.len() as u32;
            }
            cycles.push(c);
        }
    }
    (cycles, cycle_of)
}

fn show_cycle(c: &[u32]) -> String {
    let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
    format!("({})", pts.join(","))
}

impl TauTriple {
    /// Validates Q1–Q3 and records cycle structure. Points are `0..n`.
    pub fn new(perms: [Vec<u32>; 3]) -> Result<Self> {
        let n = perms[0].len();
        if n == 0 || perms.iter().any(|p| p.len() != n) {
            return Err(Error::Domain("the three permutations must act on the same non-empty set".into()));
        }
        for p in &perms {
            let mut seen = vec![false; n];
            for &x in p {
                if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::Domain("not a permutation".into()));
                }
            }
        }
        let (c0, o0) = cycles_of(&perms[0]);
        let (c1, o1) = cycles_of(&perms[1]);
        let (c2, o2) = cycles_of(&perms[2]);
        let tau = TauTriple { perms, cycles: [c0, c1, c2], cycle_of: [o0, o1, o2] };

        let mut violations = Vec::new();
        for i in 0..3 {
            if let Some(x) = tau.cycle_of[i].iter().position(|&c| c == u32::MAX) {
                violations.push(Violation::new("Q2", format!("τ{} fixes point {}", i + 1, x + 1)));
            }
        }
        if let Some(x) = (0..n).find(|&x| tau.apply_all(x) != x) {
            violations.push(Violation::new("Q3", format!("τ1τ2τ3 moves point {} to {}", x + 1, tau.apply_all(x) + 1)));
        }
        for (r, s) in [(0, 1), (0, 2), (1, 2)] {
            let mut first: HashMap<(u32, u32), usize> = HashMap::new();
            for x in 0..n {
                let (cr, cs) = (tau.cycle_of[r][x], tau.cycle_of[s][x]);
                if cr == u32::MAX || cs == u32::MAX {
                    continue;
                }
                if let Some(&y) = first.get(&(cr, cs)) {
                    violations.push(Violation::new(
                        "Q1",
                        format!(
                            "cycles {} of τ{} and {} of τ{} share points {} and {}",
                            show_cycle(&tau.cycles[r][cr as usize]),
                            r + 1,
                            show_cycle(&tau.cycles[s][cs as usize]),
                            s + 1,
                            y + 1,
                            x + 1
                        ),
                    ));
                    break;
                }
                first.insert((cr, cs), x);
            }
        }
        if violations.is_empty() {
            Ok(tau)
        } else {
            Err(Error::Violations(violations))
        }
    }

    /// From permutations of `{1..n}`.
    pub fn from_perms(perms: &[Perm; 3]) -> Result<Self> {
        let conv = |p: &Perm| (0..p.degree()).map(|x| p.apply(x) as u32).collect::<Vec<u32>>();
        if perms[1].degree() != perms[0].degree() || perms[2].degree() != perms[0].degree() {
            return Err(Error::Domain("the three permutations must have the same degree".into()));
        }
        TauTriple::new([conv(&perms[0]), conv(&perms[1]), conv(&perms[2])])
    }

    fn apply_all(&self, x: usize) -> usize {
        let y = self.perms[0][x] as usize;
        let z = self.perms[1][y] as usize;
        self.perms[2][z] as usize
    }

    pub fn len(&self) -> usize {
        self.perms[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms[0].is_empty()
    }

    /// `τ_{i+1}` as an image array over `0..n`.
    pub fn perm(&self, i: usize) -> &[u32] {
        &self.perms[i]
    }

    pub fn cycles(&self, i: usize) -> &[Vec<u32>] {
        &self.cycles[i]
    }

    pub fn cycle_of(&self, i: usize, x: u32) -> u32 {
        self.cycle_of[i][x as usize]
    }

    /// Sorted cycle lengths of `τ_{i+1}`.
    pub fn cycle_type(&self, i: usize) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles[i].iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// Orbits of the group generated by the three permutations, each
    /// sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start as u32];
            seen[start] = true;
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k] as usize;
                for p in &self.perms {
                    let y = p[x] as usize;
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y as u32);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

/// The τ permutations of a bitrade, acting on T∘ indices.
pub fn tau_perms(b: &Bitrade) -> Result<TauTriple> {
    let circ = PairIndex::build(b.circ().triples()).expect("T∘ satisfies P1");
    let star = PairIndex::build(b.star().triples()).expect("T⋆ satisfies P1");
    let perms = [0usize, 1, 2].map(|i| {
        let (leave, enter) = ((i + 1) % 3, (i + 2) % 3);
        b.circ()
            .triples()
            .iter()
            .map(|t| {
                let s = star.find(t, leave).expect("R2 guarantees a partner in T⋆");
                let via = &b.star().triples()[s as usize];
                circ.find(via, enter).expect("R3 guarantees a partner in T∘")
            })
            .collect::<Vec<u32>>()
    });
    TauTriple::new(perms).map_err(|e| Error::Inconsistent(format!("τ permutations of a valid bitrade fail: {e}")))
}

const PREFIXES: [&str; 3] = ["r", "c", "s"];

fn cycle_label(role: usize, cycle: &[u32]) -> String {
    format!("{}{}", PREFIXES[role], cycle[0] + 1)
}

/// The bitrade whose rows, columns and symbols are the cycles of the three
/// permutations. Labels are `r<k>`, `c<k>`, `s<k>` where `k` is the
/// smallest (1-based) point of the cycle.
pub fn from_perms(tau: &TauTriple) -> Result<Bitrade> {
    let alphabets = Arc::new(Alphabets::new(
        tau.cycles[0].iter().map(|c| cycle_label(0, c)).collect(),
        tau.cycles[1].iter().map(|c| cycle_label(1, c)).collect(),
        tau.cycles[2].iter().map(|c| cycle_label(2, c)).collect(),
    ));
    let n = tau.len();
    let mut circ: Vec<Triple> = Vec::with_capacity(n);
    let mut star: Vec<Triple> = Vec::with_capacity(n);
    for x in 0..n {
        circ.push([tau.cycle_of[0][x], tau.cycle_of[1][x], tau.cycle_of[2][x]]);
        let x1 = tau.perms[0][x] as usize;
        let x2 = tau.perms[1][x1] as usize;
        star.push([tau.cycle_of[0][x], tau.cycle_of[1][x1], tau.cycle_of[2][x2]]);
    }
    let b = Bitrade::from_indexed(alphabets, circ, star, Provenance::FromPerms)?;
    if b.size() != n {
        return Err(Error::Inconsistent(format!("size {} differs from |X| = {n}", b.size())));
    }
    Ok(b)
}

/// A row, column or symbol label meeting more than one τ cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub role: Role,
    pub label: String,
    /// Two distinct cycles, each shown by its first T∘ triple.
    pub cycles: [String; 2],
}

/// First label, by role then alphabet order, whose triples span two cycles.
pub fn separation_violation(b: &Bitrade, tau: &TauTriple) -> Option<SeparationWitness> {
    let alph = b.alphabets();
    for role in Role::ALL {
        let i = role as usize;
        let mut cycle_for = vec![u32::MAX; alph.get(role).len()];
        let mut found: Option<(u32, u32, u32)> = None;
        for (x, t) in b.circ().triples().iter().enumerate() {
            let c = tau.cycle_of[i][x];
            let slot = &mut cycle_for[t[i] as usize];
            if *slot == u32::MAX {
                *slot = c;
            } else if *slot != c {
                let cand = (t[i], (*slot).min(c), (*slot).max(c));
                if found.is_none_or(|f| cand < f) {
                    found = Some(cand);
                }
            }
        }
        if let Some((label, c1, c2)) = found {
            let show = |c: u32| b.circ().show(&b.circ().triples()[tau.cycles[i][c as usize][0] as usize]);
            return Some(SeparationWitness {
                role,
                label: alph.label(role, label).to_string(),
                cycles: [show(c1), show(c2)],
            });
        }
    }
    None
}

/// Outcome of relabelling a separated bitrade by its τ cycles.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub holds: bool,
    /// `(original label, cycle label)` per role, in cycle-label order.
    pub maps: [Vec<(String, String)>; 3],
}

/// Relabels each row, column and symbol by the τ cycle it gives rise to and
/// checks the result equals the bitrade rebuilt from the τ permutations.
pub fn roundtrip_check(b: &Bitrade) -> Result<RoundTrip> {
    let tau = tau_perms(b)?;
    if let Some(w) = separation_violation(b, &tau) {
        return Err(Error::Precondition(format!(
            "bitrade is not separated: {} '{}' meets cycles {} and {}",
            w.role.name(),
            w.label,
            w.cycles[0],
            w.cycles[1]
        )));
    }
    let rebuilt = from_perms(&tau)?;
    let alph = b.alphabets();
    let maps = [0usize, 1, 2].map(|i| {
        let role = Role::ALL[i];
        let mut pairs: Vec<(u32, String, String)> = tau.cycles[i]
            .iter()
            .enumerate()
            .map(|(cid, cycle)| {
                let t = b.circ().triples()[cycle[0] as usize];
                (cid as u32, alph.label(role, t[i]).to_string(), cycle_label(i, cycle))
            })
            .collect();
        pairs.sort_by_key(|p| p.0);
        pairs.into_iter().map(|(_, from, to)| (from, to)).collect::<Vec<_>>()
    });
    let relabeled = b.relabeled([&maps[0], &maps[1], &maps[2]])?;
    let holds = relabeled.circ().label_triples() == rebuilt.circ().label_triples()
        && relabeled.star().label_triples() == rebuilt.star().label_triples();
    Ok(RoundTrip { holds, maps })
}
