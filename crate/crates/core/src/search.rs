//! Exhaustive search over triples `(a, b, (ab)⁻¹)` of a small group.

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::{Group, IndexedGroup};
use crate::latin::{from_group, GroupTripleInput, Provenance};
use crate::properties::{group_orthogonal_criterion, group_thin_criterion, orthogonal_violation, thin_violation};

pub const DEFAULT_SEARCH_CAP: usize = 200;

/// One triple satisfying G1 and G2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchRecord {
    pub group: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub size: usize,
    pub orders: [u64; 3],
    pub generates: bool,
    pub thin: bool,
    pub orthogonal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    /// SHA-256 of the bitrade's two triple lists.
    pub signature: String,
}

#[derive(Clone, Debug, Default)]
pub struct SearchFilter {
    /// Only triples with `ord a = ord b = ord c = k`.
    pub k: Option<u64>,
    /// Only triples generating the whole group.
    pub generating: bool,
}

fn signature(b: &crate::latin::Bitrade) -> String {
    let mut h = Sha256::new();
    for t in b.circ().label_triples().iter().chain(&b.star().label_triples()) {
        h.update(t.join("\u{1f}").as_bytes());
        h.update(b"\x1e");
    }
    h.finalize().iter().map(|x| format!("{x:02x}")).collect()
}

/// All triples in element order of `a` then `b`. The direct scans and the
/// group criteria are both evaluated; a disagreement is an error.
pub fn search(group: &Group, filter: &SearchFilter, cap: usize) -> Result<Vec<SearchRecord>> {
    let order = group.order()?;
    if order > cap as u128 {
        return Err(Error::Resource { what: format!("searching {group}"), needed: order, cap });
    }
    let ig = IndexedGroup::new(group)?;
    let elems = ig.elements();
    let per_a: Vec<Result<Vec<SearchRecord>>> = elems
        .par_iter()
        .map(|a| {
            let mut out = Vec::new();
            if group.is_identity(a) {
                return Ok(out);
            }
            for b in elems.iter() {
                if group.is_identity(b) {
                    continue;
                }
                let c = group.inverse(&group.mul(a, b)?);
                if group.is_identity(&c) {
                    continue;
                }
                let orders = [group.order_of(a), group.order_of(b), group.order_of(&c)];
                if filter.k.is_some_and(|k| orders != [k; 3]) {
                    continue;
                }
                let input = match GroupTripleInput::new(group.clone(), a.clone(), b.clone(), c) {
                    Ok(i) => i,
                    Err(Error::Violations(_)) => continue,
                    Err(e) => return Err(e),
                };
                let bt = from_group(&input)?;
                let generates = matches!(bt.provenance(), Provenance::FromGroup { generates: true, .. });
                if filter.generating && !generates {
                    continue;
                }
                let thin = thin_violation(&bt).is_none();
                let orthogonal = orthogonal_violation(&bt).is_none();
                if thin != group_thin_criterion(&input).0 || orthogonal != group_orthogonal_criterion(&input) {
                    return Err(Error::Inconsistent(format!(
                        "scan and group criterion disagree for a={}, b={}",
                        input.a, input.b
                    )));
                }
                out.push(SearchRecord {
                    group: group.to_string(),
                    a: input.a.to_string(),
                    b: input.b.to_string(),
                    c: input.c.to_string(),
                    size: bt.size(),
                    orders,
                    generates,
                    thin,
                    orthogonal,
                    k: (orders[0] == orders[1] && orders[1] == orders[2]).then_some(orders[0]),
                    signature: signature(&bt),
                });
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_a {
        all.extend(r?);
    }
    Ok(all)
}

pub fn to_json_lines(records: &[SearchRecord]) -> String {
    records.iter().map(|r| serde_json::to_string(r).expect("records serialize") + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two_has_no_triples() {
        let g: Group = "cyc:2".parse().unwrap();
        assert!(search(&g, &SearchFilter::default(), 200).unwrap().is_empty());
    }

    #[test]
    fn s3_contains_worked_example() {
        let g: Group = "sym:3".parse().unwrap();
        let recs = search(&g, &SearchFilter::default(), 200).unwrap();
        assert!(recs.iter().any(|r| r.a == "(1,2,3)" && r.b == "(1,2)" && r.c == "(2,3)"));
    }

    #[test]
    fn cap_is_enforced() {
        let g: Group = "sym:6".parse().unwrap();
        assert!(matches!(search(&g, &SearchFilter::default(), 200), Err(Error::Resource { .. })));
    }
}
