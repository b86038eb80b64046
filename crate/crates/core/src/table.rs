//! Sizes of the smallest known minimal k-homogeneous bitrades for odd k,
//! from the group families and from a published construction.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{find_r, Family};
use crate::group::{factorial, is_prime};
use crate::latin::from_group;
use crate::properties::{group_orthogonal_criterion, group_thin_criterion, minimal_oracle, OracleOutcome};

/// Published sizes for k = 3, 5, 7, 9, 11.
const LITERATURE: [(u64, u128); 5] = [(3, 21), (5, 75), (7, 133), (9, 243), (11, 407)];

/// Alternating-group sizes above this are printed as `n!/2`.
const PRINT_LIMIT: u128 = 10_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PqCell {
    pub size: u128,
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub k: u64,
    pub p3: Option<u128>,
    pub pq: Option<PqCell>,
    pub alt: u128,
    pub literature: u128,
    pub smallest: u128,
    /// Columns whose construction was rebuilt and checked.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verified: Vec<String>,
}

/// Smallest prime `p ≡ 1 (mod q)` that admits a thin choice of `r`, with
/// the smallest such `r`.
pub fn best_pq(q: u64) -> Option<PqCell> {
    if q < 3 || !is_prime(q) {
        return None;
    }
    (1..).map(|t| t * q + 1).filter(|&p| is_prime(p)).find_map(|p| {
        let rs = find_r(p, q).expect("q divides p - 1");
        rs.into_iter()
            .find(|&r| crate::properties::pq_thin_predicate(p, q, r))
            .map(|r| PqCell { size: (p * q) as u128, p, q, r })
    })
}

fn literature(k: u64) -> u128 {
    LITERATURE.iter().find(|(kk, _)| *kk == k).map(|(_, v)| *v).unwrap_or_else(|| {
        // ⌈1.75k² + 3⌉ k, in integers: ⌈(7k² + 12) / 4⌉ k.
        let k = k as u128;
        (7 * k * k + 12).div_ceil(4) * k
    })
}

pub fn predicted_row(k: u64) -> Result<TableRow> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("k must be odd and at least 3 (got {k})")));
    }
    let p3 = is_prime(k).then(|| (k as u128).pow(3));
    let pq = best_pq(k);
    let m = (k - 1) / 2;
    let alt = factorial(3 * m as usize + 1) / 2;
    let literature = literature(k);
    let smallest = [p3, pq.as_ref().map(|c| c.size), Some(alt), Some(literature)].into_iter().flatten().min().unwrap();
    Ok(TableRow { k, p3, pq, alt, literature, smallest, verified: Vec::new() })
}

pub fn predicted_table(ks: &[u64]) -> Result<Vec<TableRow>> {
    ks.iter().map(|&k| predicted_row(k)).collect()
}

/// Builds a family instance and checks size, homogeneity, thinness,
/// orthogonality and primality through the group criteria. Small
/// instances are also run through the minimality oracle.
pub fn verify_family(family: Family, cap: usize, oracle_cap: usize) -> Result<bool> {
    let pred = family.predict()?;
    let input = family.input(cap)?;
    let b = from_group(&input)?;
    let generates = matches!(b.provenance(), crate::latin::Provenance::FromGroup { generates: true, .. });
    let ok = b.size() as u128 == pred.size
        && crate::properties::group_homogeneity(&input) == Some(pred.k)
        && group_thin_criterion(&input).0
        && group_orthogonal_criterion(&input)
        && generates;
    if ok && b.size() <= oracle_cap {
        return Ok(minimal_oracle(b.circ(), oracle_cap) == OracleOutcome::Yes);
    }
    Ok(ok)
}

/// The table with each buildable cell of at most `cap` elements rebuilt
/// and verified.
pub fn recompute_table(ks: &[u64], cap: usize, oracle_cap: usize) -> Result<Vec<TableRow>> {
    let mut rows = predicted_table(ks)?;
    rows.par_iter_mut().try_for_each(|row| -> Result<()> {
        let mut jobs: Vec<(&str, Family, u128)> = Vec::new();
        if let Some(size) = row.p3 {
            jobs.push(("p3", Family::P3 { p: row.k as u32 }, size));
        }
        if let Some(c) = &row.pq {
            jobs.push(("pq", Family::Pq { p: c.p as u32, q: c.q as u32, r: c.r as u32 }, c.size));
        }
        jobs.push(("alt", Family::Alt { m: (row.k as u32 - 1) / 2 }, row.alt));
        for (name, family, size) in jobs {
            if size > cap as u128 {
                continue;
            }
            if !verify_family(family, cap, oracle_cap)? {
                return Err(Error::Inconsistent(format!("{family} failed verification")));
            }
            row.verified.push(name.to_string());
        }
        Ok(())
    })?;
    Ok(rows)
}

fn show_alt(k: u64, v: u128) -> String {
    if v > PRINT_LIMIT {
        format!("{}!/2", 3 * (k - 1) / 2 + 1)
    } else {
        v.to_string()
    }
}

pub fn render_table(rows: &[TableRow]) -> String {
    let with_marks = rows.iter().any(|r| !r.verified.is_empty());
    let mut cells: Vec<Vec<String>> = vec![["k", "p^3", "pq", "alt(3m+1)", "literature", "smallest known"]
        .iter()
        .map(|s| s.to_string())
        .collect()];
    if with_marks {
        cells[0].push("verified".into());
    }
    for r in rows {
        let na = || "N/A".to_string();
        let mut line = vec![
            r.k.to_string(),
            r.p3.map_or_else(na, |v| v.to_string()),
            r.pq.as_ref().map_or_else(na, |c| format!("{} (p={}, q={}, r={})", c.size, c.p, c.q, c.r)),
            show_alt(r.k, r.alt),
            r.literature.to_string(),
            r.smallest.to_string(),
        ];
        if with_marks {
            line.push(r.verified.join(","));
        }
        cells.push(line);
    }
    let widths: Vec<usize> =
        (0..cells[0].len()).map(|j| cells.iter().map(|row| row[j].chars().count()).max().unwrap()).collect();
    let mut out = String::new();
    for row in &cells {
        let parts: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        out.push_str(parts.join(" | ").trim_end());
        out.push('\n');
    }
    out
}
