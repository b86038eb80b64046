//! Exhaustive searches used to cross-check the fast deciders on small
//! instances.

use crate::latin::{Bitrade, PartialLatinSquare, Provenance, Triple};

/// Result of a capped search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Yes,
    /// With the triples of a witness, as T∘ indices.
    No(Vec<u32>),
    /// Instance larger than the cap.
    Unknown,
}

fn subset(triples: &[Triple], mask: u64) -> Vec<Triple> {
    (0..triples.len()).filter(|&i| mask >> i & 1 == 1).map(|i| triples[i]).collect()
}

fn indices(mask: u64) -> Vec<u32> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Primary by definition: no proper sub-bitrade. For a subset `U∘` of T∘
/// the only possible partner is the set of T⋆ triples sharing two
/// coordinates with some member of `U∘`, so each subset is checked with
/// the generic bitrade validator.
pub fn primary_oracle(b: &Bitrade, cap: usize) -> OracleOutcome {
    let n = b.size();
    if n > cap || n >= 64 {
        return OracleOutcome::Unknown;
    }
    let circ = b.circ().triples();
    let star = b.star().triples();
    let agree2 = |s: &Triple, t: &Triple| (0..3).filter(|&k| s[k] == t[k]).count() == 2;
    let full = (1u64 << n) - 1;
    for mask in 1..full {
        let u = subset(circ, mask);
        let w: Vec<Triple> = star.iter().filter(|s| u.iter().any(|t| agree2(s, t))).copied().collect();
        if w.len() != u.len() {
            continue;
        }
        let labels = |ts: &[Triple]| -> Vec<[String; 3]> {
            ts.iter().map(|t| b.alphabets().labels(t).map(str::to_string)).collect()
        };
        let (Ok(uc), Ok(us)) =
            (PartialLatinSquare::from_labels(&labels(&u)), PartialLatinSquare::from_labels(&labels(&w)))
        else {
            continue;
        };
        if Bitrade::new(uc, us, Provenance::Explicit).is_ok() {
            return OracleOutcome::No(indices(mask));
        }
    }
    OracleOutcome::Yes
}

/// Whether some proper subset of `T∘` has a disjoint mate. Subsets are
/// tried in increasing order of their bit masks (bit `i` is the `i`-th
/// sorted triple).
pub fn minimal_oracle(circ: &PartialLatinSquare, cap: usize) -> OracleOutcome {
    let n = circ.len();
    if n > cap || n >= 64 {
        return OracleOutcome::Unknown;
    }
    let alph = circ.alphabets();
    if alph.rows.len() > 64 || alph.cols.len() > 64 || alph.syms.len() > 64 {
        return OracleOutcome::Unknown;
    }
    let triples = circ.triples();
    let full = (1u64 << n) - 1;
    let mut counts = [vec![0u8; alph.rows.len()], vec![0u8; alph.cols.len()], vec![0u8; alph.syms.len()]];
    for mask in 1..full {
        if mask.count_ones() < 4 {
            continue;
        }
        let u = subset(triples, mask);
        // Every row, column and symbol of a trade appears at least twice.
        for c in counts.iter_mut() {
            c.iter_mut().for_each(|x| *x = 0);
        }
        for t in &u {
            for k in 0..3 {
                counts[k][t[k] as usize] += 1;
            }
        }
        if counts.iter().any(|c| c.contains(&1)) {
            continue;
        }
        if has_mate(&u) {
            return OracleOutcome::No(indices(mask));
        }
    }
    OracleOutcome::Yes
}

/// A disjoint mate of `u`: new symbols on the same cells, each row and
/// column keeping its symbol set, and no cell keeping its symbol.
fn has_mate(u: &[Triple]) -> bool {
    let mut row_free = [0u64; 64];
    let mut col_free = [0u64; 64];
    for t in u {
        row_free[t[0] as usize] |= 1 << t[2];
        col_free[t[1] as usize] |= 1 << t[2];
    }
    fn go(u: &[Triple], k: usize, row_free: &mut [u64; 64], col_free: &mut [u64; 64]) -> bool {
        let Some(t) = u.get(k) else { return true };
        let (r, c) = (t[0] as usize, t[1] as usize);
        let mut cand = row_free[r] & col_free[c] & !(1u64 << t[2]);
        while cand != 0 {
            let s = cand.trailing_zeros();
            cand &= cand - 1;
            row_free[r] &= !(1 << s);
            col_free[c] &= !(1 << s);
            if go(u, k + 1, row_free, col_free) {
                return true;
            }
            row_free[r] |= 1 << s;
            col_free[c] |= 1 << s;
        }
        false
    }
    go(u, 0, &mut row_free, &mut col_free)
}
