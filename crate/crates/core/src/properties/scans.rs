//! Property scans that look only at the triples.

use rayon::prelude::*;

use crate::latin::{Bitrade, Role, TauTriple};

/// `(i, j, i', j')` as alphabet indices.
pub type CellPair = [u32; 4];

fn symbol_classes(b: &Bitrade) -> Vec<Vec<(u32, u32)>> {
    let mut classes = vec![Vec::new(); b.alphabets().syms.len()];
    for t in b.circ().triples() {
        classes[t[2] as usize].push((t[0], t[1]));
    }
    classes
}

fn star_symbol(b: &Bitrade, row: u32, col: u32) -> Option<u32> {
    let ts = b.star().triples();
    let i = ts.partition_point(|t| (t[0], t[1]) < (row, col));
    ts.get(i).filter(|t| t[0] == row && t[1] == col).map(|t| t[2])
}

/// Smallest `(i, j, i', j')` with `i∘j = i'∘j'` where `i⋆j'` is defined
/// and differs from `i∘j`.
pub fn thin_violation(b: &Bitrade) -> Option<CellPair> {
    symbol_classes(b)
        .par_iter()
        .enumerate()
        .filter_map(|(s, cells)| {
            let mut best: Option<CellPair> = None;
            for &(i, j) in cells {
                for &(i2, j2) in cells {
                    if i == i2 || j == j2 {
                        continue;
                    }
                    if star_symbol(b, i, j2).is_some_and(|x| x != s as u32) {
                        let w = [i, j, i2, j2];
                        if best.is_none_or(|b| w < b) {
                            best = Some(w);
                        }
                    }
                }
            }
            best
        })
        .min()
}

/// Smallest `(i, j, i', j')` with `i∘j = i'∘j'` and `i⋆j = i'⋆j'`.
pub fn orthogonal_violation(b: &Bitrade) -> Option<CellPair> {
    symbol_classes(b)
        .par_iter()
        .filter_map(|cells| {
            let mut starred: Vec<(u32, u32, u32)> = cells
                .iter()
                .map(|&(i, j)| (star_symbol(b, i, j).expect("R2 fills the same cells"), i, j))
                .collect();
            starred.sort_unstable();
            let mut best: Option<CellPair> = None;
            for w in starred.windows(2) {
                if w[0].0 == w[1].0 {
                    // Within a run of equal ⋆-symbols the first two cells
                    // give the smallest pair.
                    let cand = [w[0].1, w[0].2, w[1].1, w[1].2];
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
            best
        })
        .min()
}

/// Entry counts of rows, columns and symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(usize),
    /// A label whose count differs from that of the first row.
    Not { first_row: usize, role: Role, label: u32, count: usize },
}

pub fn homogeneity(b: &Bitrade) -> Homogeneity {
    let k = b.circ().counts(Role::Row)[0];
    for role in Role::ALL {
        if let Some((label, &count)) = b.circ().counts(role).iter().enumerate().find(|(_, &c)| c != k) {
            return Homogeneity::Not { first_row: k, role, label: label as u32, count };
        }
    }
    Homogeneity::Homogeneous(k)
}

/// Orbits of `⟨τ1, τ2, τ3⟩` on T∘. A bitrade is primary exactly when there
/// is one orbit: an orbit `O` together with `β⁻¹(O)` is itself a bitrade,
/// and conversely the triples of any sub-bitrade are closed under the τ's.
pub fn tau_orbits(tau: &TauTriple) -> Vec<Vec<u32>> {
    tau.orbits()
}
