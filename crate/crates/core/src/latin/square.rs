use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result, Violation};

/// `(row, column, symbol)` as indices into an [`Alphabets`].
pub type Triple = [u32; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Row = 0,
    Col = 1,
    Sym = 2,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::Row, Role::Col, Role::Sym];

    pub fn name(self) -> &'static str {
        match self {
            Role::Row => "row",
            Role::Col => "column",
            Role::Sym => "symbol",
        }
    }
}

/// Row, column and symbol labels. Their order is the canonical order used
/// for output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabets {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub syms: Vec<String>,
}

impl Alphabets {
    pub fn new(rows: Vec<String>, cols: Vec<String>, syms: Vec<String>) -> Self {
        Alphabets { rows, cols, syms }
    }

    pub fn get(&self, role: Role) -> &[String] {
        match role {
            Role::Row => &self.rows,
            Role::Col => &self.cols,
            Role::Sym => &self.syms,
        }
    }

    pub fn label(&self, role: Role, i: u32) -> &str {
        &self.get(role)[i as usize]
    }

    pub fn labels(&self, t: &Triple) -> [&str; 3] {
        [self.label(Role::Row, t[0]), self.label(Role::Col, t[1]), self.label(Role::Sym, t[2])]
    }

    pub fn position(&self, role: Role, label: &str) -> Option<u32> {
        self.get(role).iter().position(|l| l == label).map(|i| i as u32)
    }

    fn lookup(&self) -> [HashMap<&str, u32>; 3] {
        Role::ALL.map(|r| self.get(r).iter().enumerate().map(|(i, l)| (l.as_str(), i as u32)).collect())
    }

    /// P2 disjointness: no label serves two roles.
    fn check_disjoint(&self) -> Result<()> {
        let mut owner: HashMap<&str, Role> = HashMap::new();
        for role in Role::ALL {
            let mut local = HashSet::new();
            for l in self.get(role) {
                if !local.insert(l.as_str()) {
                    return Err(Error::violation("P2", format!("{} label '{l}' listed twice", role.name())));
                }
                if let Some(prev) = owner.insert(l.as_str(), role) {
                    return Err(Error::violation(
                        "P2",
                        format!("label '{l}' is both a {} and a {} label", prev.name(), role.name()),
                    ));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn pair_key(x: u32, y: u32) -> u64 {
    ((x as u64) << 32) | y as u64
}

/// Lookup from two coordinates to the triple index, for each of the three
/// coordinate pairs `(row, col)`, `(row, sym)`, `(col, sym)`.
pub(crate) struct PairIndex {
    maps: [HashMap<u64, u32>; 3],
}

/// Coordinate pairs, indexed by the coordinate left out.
pub(crate) const PAIRS: [(usize, usize); 3] = [(1, 2), (0, 2), (0, 1)];

impl PairIndex {
    /// Builds the index, reporting the first P1 clash.
    pub(crate) fn build(triples: &[Triple]) -> std::result::Result<Self, (usize, usize)> {
        let mut maps: [HashMap<u64, u32>; 3] = Default::default();
        for m in maps.iter_mut() {
            m.reserve(triples.len());
        }
        for (i, t) in triples.iter().enumerate() {
            for (free, &(x, y)) in PAIRS.iter().enumerate() {
                if let Some(&j) = maps[free].get(&pair_key(t[x], t[y])) {
                    return Err((j as usize, i));
                }
                maps[free].insert(pair_key(t[x], t[y]), i as u32);
            }
        }
        Ok(PairIndex { maps })
    }

    /// The triple agreeing with `t` everywhere except (possibly) coordinate `free`.
    pub(crate) fn find(&self, t: &Triple, free: usize) -> Option<u32> {
        let (x, y) = PAIRS[free];
        self.maps[free].get(&pair_key(t[x], t[y])).copied()
    }
}

/// A finite set of `(row, column, symbol)` triples in which two distinct
/// triples agree in at most one coordinate (P1) and every label is used
/// (P2). Triples are kept sorted.
#[derive(Clone, Debug)]
pub struct PartialLatinSquare {
    alphabets: Arc<Alphabets>,
    triples: Vec<Triple>,
}

impl PartialEq for PartialLatinSquare {
    fn eq(&self, other: &Self) -> bool {
        self.alphabets == other.alphabets && self.triples == other.triples
    }
}

impl PartialLatinSquare {
    /// Validates index triples against the given alphabets. Duplicate
    /// triples collapse.
    pub fn new(alphabets: Arc<Alphabets>, mut triples: Vec<Triple>) -> Result<Self> {
        if triples.is_empty() {
            return Err(Error::Precondition("a partial latin square needs at least one triple".into()));
        }
        for t in &triples {
            for role in Role::ALL {
                if t[role as usize] as usize >= alphabets.get(role).len() {
                    return Err(Error::Domain(format!("{} index {} out of range", role.name(), t[role as usize])));
                }
            }
        }
        triples.sort_unstable();
        triples.dedup();
        let pls = PartialLatinSquare { alphabets, triples };
        pls.check_p1()?;
        pls.check_p2()?;
        Ok(pls)
    }

    /// Builds a partial latin square from labelled triples, inferring the
    /// alphabets (sorted by label).
    pub fn from_labels<S: AsRef<str>>(triples: &[[S; 3]]) -> Result<Self> {
        if triples.is_empty() {
            return Err(Error::Precondition("a partial latin square needs at least one triple".into()));
        }
        let mut sets: [Vec<String>; 3] = Default::default();
        for t in triples {
            for k in 0..3 {
                sets[k].push(t[k].as_ref().to_string());
            }
        }
        for s in sets.iter_mut() {
            s.sort();
            s.dedup();
        }
        let [rows, cols, syms] = sets;
        let alphabets = Alphabets::new(rows, cols, syms);
        let lookup = alphabets.lookup();
        let indexed = triples
            .iter()
            .map(|t| [0, 1, 2].map(|k| lookup[k][t[k].as_ref()]))
            .collect();
        PartialLatinSquare::new(Arc::new(alphabets), indexed)
    }

    fn check_p1(&self) -> Result<()> {
        PairIndex::build(&self.triples).map(|_| ()).map_err(|(i, j)| {
            Error::violation(
                "P1",
                format!(
                    "{} and {} agree in two coordinates",
                    self.show(&self.triples[i]),
                    self.show(&self.triples[j])
                ),
            )
        })
    }

    fn check_p2(&self) -> Result<()> {
        self.alphabets.check_disjoint()?;
        for role in Role::ALL {
            let mut used = vec![false; self.alphabets.get(role).len()];
            for t in &self.triples {
                used[t[role as usize] as usize] = true;
            }
            if let Some(i) = used.iter().position(|u| !u) {
                return Err(Error::violation(
                    "P2",
                    format!("{} label '{}' occurs in no triple", role.name(), self.alphabets.get(role)[i]),
                ));
            }
        }
        Ok(())
    }

    pub(crate) fn share_alphabets(mut self, alphabets: Arc<Alphabets>) -> Self {
        debug_assert_eq!(*alphabets, *self.alphabets);
        self.alphabets = alphabets;
        self
    }

    pub fn alphabets(&self) -> &Arc<Alphabets> {
        &self.alphabets
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.triples.binary_search(t).is_ok()
    }

    pub fn show(&self, t: &Triple) -> String {
        let [r, c, s] = self.alphabets.labels(t);
        format!("({r},{c},{s})")
    }

    pub fn label_triples(&self) -> Vec<[String; 3]> {
        self.triples.iter().map(|t| self.alphabets.labels(t).map(str::to_string)).collect()
    }

    /// Number of triples per label of `role`.
    pub fn counts(&self, role: Role) -> Vec<usize> {
        let mut c = vec![0; self.alphabets.get(role).len()];
        for t in &self.triples {
            c[t[role as usize] as usize] += 1;
        }
        c
    }

    /// Re-expresses the triples over a superset alphabet.
    pub(crate) fn reindexed(&self, target: &Arc<Alphabets>) -> Result<Vec<Triple>> {
        let lookup = target.lookup();
        self.triples
            .iter()
            .map(|t| {
                let labels = self.alphabets.labels(t);
                let mut out = [0u32; 3];
                for k in 0..3 {
                    out[k] = *lookup[k]
                        .get(labels[k])
                        .ok_or_else(|| Error::Domain(format!("label '{}' missing from alphabet", labels[k])))?;
                }
                Ok(out)
            })
            .collect()
    }
}

pub(crate) fn first_violations(v: Vec<Violation>) -> Result<()> {
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Violations(v))
    }
}
