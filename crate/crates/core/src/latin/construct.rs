//! Bitrades from group elements `a, b, c` with `abc = 1`:
//! `T∘ = {(gA, gB, gC)}` and `T⋆ = {(gA, gB, ga⁻¹C)}` over `g ∈ G`, where
//! `A = ⟨a⟩`, `B = ⟨b⟩`, `C = ⟨c⟩`.

use std::sync::Arc;

use super::bitrade::{Bitrade, Provenance};
use super::square::{Alphabets, Triple};
use crate::error::{Error, Result, Violation};
use crate::group::{Element, Group, IndexedGroup};

/// Group elements proposed for the coset construction.
#[derive(Clone, Debug)]
pub struct GroupTripleInput {
    pub group: Group,
    pub a: Element,
    pub b: Element,
    pub c: Element,
}

impl GroupTripleInput {
    /// Checks membership, that no element is the identity, G1 (`abc = 1`)
    /// and G2 (pairwise trivial intersections of the cyclic subgroups).
    pub fn new(group: Group, a: Element, b: Element, c: Element) -> Result<Self> {
        for (name, x) in [("a", &a), ("b", &b), ("c", &c)] {
            group.check(x)?;
            if !group.contains(x) {
                return Err(Error::Domain(format!("{name} = {x} is not an element of {group}")));
            }
            if group.is_identity(x) {
                return Err(Error::InvalidParameter(format!("{name} must not be the identity")));
            }
        }
        let input = GroupTripleInput { group, a, b, c };
        let violations = input.violations();
        if violations.is_empty() {
            Ok(input)
        } else {
            Err(Error::Violations(violations))
        }
    }

    /// Parses the three elements in the group's element syntax.
    pub fn parse(group: Group, a: &str, b: &str, c: &str) -> Result<Self> {
        let (a, b, c) = (group.parse_element(a)?, group.parse_element(b)?, group.parse_element(c)?);
        GroupTripleInput::new(group, a, b, c)
    }

    fn violations(&self) -> Vec<Violation> {
        let g = &self.group;
        let mut out = Vec::new();
        let abc = g.mul_unchecked(&g.mul_unchecked(&self.a, &self.b), &self.c);
        if !g.is_identity(&abc) {
            out.push(Violation::new("G1", format!("abc = {abc}, not the identity")));
        }
        let [sa, sb, sc] = [&self.a, &self.b, &self.c].map(|x| g.generated_subgroup(x));
        for (name, x, y) in [("A∩B", &sa, &sb), ("A∩C", &sa, &sc), ("B∩C", &sb, &sc)] {
            let n = x.intersection_size(y);
            if n != 1 {
                out.push(Violation::new("G2", format!("|{name}|={n}")));
            }
        }
        out
    }

    pub fn provenance(&self, generates: bool) -> Provenance {
        Provenance::FromGroup {
            group: self.group.to_string(),
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
            generates,
        }
    }
}

/// Index tables and coset partitions shared by the construction and the
/// shape checks.
pub struct CosetData {
    pub group: IndexedGroup,
    /// Coset id of each element for `A`, `B`, `C`.
    pub ids: [Vec<u32>; 3],
    /// Smallest element index of each coset.
    pub reps: [Vec<u32>; 3],
    /// Whether `⟨a, b, c⟩` is the whole group.
    pub generates: bool,
    /// Index of `g a⁻¹` for each `g`.
    a_inverse: Vec<u32>,
}

impl CosetData {
    pub fn new(input: &GroupTripleInput) -> Result<Self> {
        let group = IndexedGroup::new(&input.group)?;
        let ta = group.right_mul_table(&input.a)?;
        let tb = group.right_mul_table(&input.b)?;
        let tc = group.right_mul_table(&input.c)?;
        let generates = group.generated_size(&[&ta, &tb, &tc]) == group.len();
        let (ida, repa) = IndexedGroup::coset_ids(&ta);
        let (idb, repb) = IndexedGroup::coset_ids(&tb);
        let (idc, repc) = IndexedGroup::coset_ids(&tc);
        let a_inverse = crate::group::invert_table(&ta);
        Ok(CosetData { group, ids: [ida, idb, idc], reps: [repa, repb, repc], generates, a_inverse })
    }

    fn labels(&self, k: usize) -> Vec<String> {
        let tag = ["A", "B", "C"][k];
        self.reps[k].iter().map(|&r| format!("{tag}:{}", self.group.element(r))).collect()
    }
}

/// The coset bitrade. Rows, columns and symbols are labelled `A:x`, `B:x`,
/// `C:x` by the smallest element `x` of the coset, in that order.
pub fn from_group(input: &GroupTripleInput) -> Result<Bitrade> {
    let data = CosetData::new(input)?;
    from_coset_data(input, &data)
}

pub fn from_coset_data(input: &GroupTripleInput, data: &CosetData) -> Result<Bitrade> {
    let n = data.group.len();
    let [ida, idb, idc] = &data.ids;
    let circ: Vec<Triple> = (0..n).map(|g| [ida[g], idb[g], idc[g]]).collect();
    let star: Vec<Triple> = (0..n).map(|g| [ida[g], idb[g], idc[data.a_inverse[g] as usize]]).collect();
    let alphabets = Arc::new(Alphabets::new(data.labels(0), data.labels(1), data.labels(2)));
    let b = Bitrade::from_indexed(alphabets, circ, star, input.provenance(data.generates))?;
    if b.size() != n {
        return Err(Error::Inconsistent(format!("coset construction gave size {} for a group of order {n}", b.size())));
    }
    Ok(b)
}
