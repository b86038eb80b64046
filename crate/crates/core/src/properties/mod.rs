//! Deciders for separated, primary, thin, orthogonal, homogeneous and
//! minimal, with cross-checks between methods where more than one applies.

mod criteria;
mod oracle;
mod scans;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

pub use criteria::{
    conjugate_intersection, group_homogeneity, group_orthogonal_criterion, group_thin_criterion, pq_thin_predicate,
    pq_thin_solutions, thin_solutions,
};
pub use oracle::{minimal_oracle, primary_oracle, OracleOutcome};
pub use scans::{homogeneity, orthogonal_violation, tau_orbits, thin_violation, CellPair, Homogeneity};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::latin::{separation_violation, tau_perms, Bitrade, GroupTripleInput, Provenance, Role};

pub const DEFAULT_MINIMAL_CAP: usize = 24;
pub const DEFAULT_PRIMARY_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DirectScan,
    GroupCriterion,
    Orbit,
    Oracle,
}

/// One decided property.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Finding {
    pub value: Verdict,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// The common count, for homogeneity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Further methods that ran and agreed.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub confirmed_by: Vec<Method>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Finding {
    pub fn new(value: impl Into<Verdict>, method: Method) -> Self {
        Finding { value: value.into(), method, witness: None, k: None, confirmed_by: Vec::new(), elapsed_ms: None }
    }

    fn witness(mut self, w: Option<String>) -> Self {
        self.witness = w;
        self
    }

    /// Records a second method's verdict, failing if it disagrees.
    fn confirm(&mut self, name: &str, value: Verdict, method: Method) -> Result<()> {
        if value == Verdict::Unknown {
            return Ok(());
        }
        if value != self.value {
            return Err(Error::Inconsistent(format!(
                "{name}: {:?} says {} but {:?} says {value}",
                self.method, self.value, method
            )));
        }
        self.confirmed_by.push(method);
        Ok(())
    }
}

/// A property that can be requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Bitrade,
    Separated,
    Primary,
    Thin,
    Orthogonal,
    Homogeneous,
    Minimal,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Bitrade,
        Check::Separated,
        Check::Primary,
        Check::Thin,
        Check::Orthogonal,
        Check::Homogeneous,
        Check::Minimal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bitrade => "bitrade",
            Check::Separated => "separated",
            Check::Primary => "primary",
            Check::Thin => "thin",
            Check::Orthogonal => "orthogonal",
            Check::Homogeneous => "homogeneous",
            Check::Minimal => "minimal",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(text: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if part == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check '{s}'")))
    }
}

/// Settings for [`report`].
#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub checks: Vec<Check>,
    pub minimal_cap: usize,
    pub primary_cap: usize,
    /// Skip the triple scans for thin and orthogonal above this size when
    /// a group criterion is available.
    pub scan_cap: usize,
    pub timings: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            checks: Check::ALL.to_vec(),
            minimal_cap: DEFAULT_MINIMAL_CAP,
            primary_cap: DEFAULT_PRIMARY_CAP,
            scan_cap: usize::MAX,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct PropertyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bitrade: Option<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separated: Option<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primary: Option<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thin: Option<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orthogonal: Option<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homogeneous_k: Option<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal: Option<Finding>,
}

impl PropertyReport {
    pub fn get(&self, check: Check) -> Option<&Finding> {
        match check {
            Check::Bitrade => self.bitrade.as_ref(),
            Check::Separated => self.separated.as_ref(),
            Check::Primary => self.primary.as_ref(),
            Check::Thin => self.thin.as_ref(),
            Check::Orthogonal => self.orthogonal.as_ref(),
            Check::Homogeneous => self.homogeneous_k.as_ref(),
            Check::Minimal => self.minimal.as_ref(),
        }
    }

    fn slot(&mut self, check: Check) -> &mut Option<Finding> {
        match check {
            Check::Bitrade => &mut self.bitrade,
            Check::Separated => &mut self.separated,
            Check::Primary => &mut self.primary,
            Check::Thin => &mut self.thin,
            Check::Orthogonal => &mut self.orthogonal,
            Check::Homogeneous => &mut self.homogeneous_k,
            Check::Minimal => &mut self.minimal,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One `name: value (method)` line per decided property.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for check in Check::ALL {
            if let Some(f) = self.get(check) {
                out.push_str(&format!("{:<12} {}", check.name(), f.value));
                if let Some(k) = f.k {
                    out.push_str(&format!(" k={k}"));
                }
                out.push_str(&format!(" ({}", method_name(f.method)));
                for m in &f.confirmed_by {
                    out.push_str(&format!(", {}", method_name(*m)));
                }
                out.push(')');
                if let Some(w) = &f.witness {
                    out.push_str(&format!(": {w}"));
                }
                out.push('\n');
            }
        }
        out
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::DirectScan => "direct-scan",
        Method::GroupCriterion => "group-criterion",
        Method::Orbit => "orbit",
        Method::Oracle => "oracle",
    }
}

/// Rebuilds the group input recorded in a coset bitrade's provenance.
pub fn group_input_of(b: &Bitrade) -> Result<Option<GroupTripleInput>> {
    match b.provenance() {
        Provenance::FromGroup { group, a, b, c, .. } => {
            let g: Group = group.parse()?;
            Ok(Some(GroupTripleInput::parse(g, a, b, c)?))
        }
        _ => Ok(None),
    }
}

fn show_pair(b: &Bitrade, w: CellPair) -> String {
    let a = b.alphabets();
    format!(
        "({},{}) and ({},{})",
        a.label(Role::Row, w[0]),
        a.label(Role::Col, w[1]),
        a.label(Role::Row, w[2]),
        a.label(Role::Col, w[3])
    )
}

fn show_triples(b: &Bitrade, idx: &[u32]) -> String {
    const SHOWN: usize = 8;
    let mut parts: Vec<String> =
        idx.iter().take(SHOWN).map(|&i| b.circ().show(&b.circ().triples()[i as usize])).collect();
    if idx.len() > SHOWN {
        parts.push(format!("… {} triples", idx.len()));
    }
    format!("{{{}}}", parts.join(","))
}

fn timed<T>(timings: bool, f: impl FnOnce() -> Result<(T, Finding)>) -> Result<(T, Finding)> {
    let start = Instant::now();
    let (x, mut finding) = f()?;
    if timings {
        finding.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok((x, finding))
}

/// Decides the requested properties of a valid bitrade. Coset bitrades
/// are also checked through their group elements; any disagreement
/// between methods is an error.
pub fn report(b: &Bitrade, group: Option<&GroupTripleInput>, opts: &ReportOptions) -> Result<PropertyReport> {
    let mut rep = PropertyReport::default();
    let wants = |c: Check| opts.checks.contains(&c);
    let needs_tau = wants(Check::Separated) || wants(Check::Primary) || wants(Check::Minimal);
    let tau = if needs_tau { Some(tau_perms(b)?) } else { None };

    if wants(Check::Bitrade) {
        rep.bitrade = Some(Finding::new(true, Method::DirectScan));
    }
    if wants(Check::Separated) {
        let tau = tau.as_ref().expect("computed above");
        let (_, f) = timed(opts.timings, || {
            let w = separation_violation(b, tau);
            let witness = w.as_ref().map(|w| {
                format!("{} {} meets cycles through {} and {}", w.role.name(), w.label, w.cycles[0], w.cycles[1])
            });
            Ok(((), Finding::new(w.is_none(), Method::DirectScan).witness(witness)))
        })?;
        rep.separated = Some(f);
    }
    if wants(Check::Primary) || wants(Check::Minimal) {
        let tau = tau.as_ref().expect("computed above");
        let (_, f) = timed(opts.timings, || {
            let orbits = tau_orbits(tau);
            let witness = (orbits.len() > 1).then(|| format!("proper orbit {}", show_triples(b, &orbits[0])));
            let mut f = Finding::new(orbits.len() == 1, Method::Orbit).witness(witness);
            let oracle = match primary_oracle(b, opts.primary_cap) {
                OracleOutcome::Yes => Verdict::Yes,
                OracleOutcome::No(_) => Verdict::No,
                OracleOutcome::Unknown => Verdict::Unknown,
            };
            f.confirm("primary", oracle, Method::Oracle)?;
            if group.is_some() && matches!(b.provenance(), Provenance::FromGroup { generates: true, .. }) {
                // Generating triples always give primary bitrades.
                f.confirm("primary", Verdict::Yes, Method::GroupCriterion)?;
            }
            Ok(((), f))
        })?;
        *rep.slot(Check::Primary) = Some(f);
    }
    let scan = group.is_none() || b.size() <= opts.scan_cap;
    if wants(Check::Thin) || wants(Check::Minimal) {
        let (_, f) = timed(opts.timings, || {
            let mut f: Option<Finding> = None;
            if scan {
                let w = thin_violation(b);
                let a = b.alphabets();
                f = Some(Finding::new(w.is_none(), Method::DirectScan).witness(w.map(|w| {
                    format!(
                        "{} share a symbol but ⋆ at ({},{}) differs",
                        show_pair(b, w),
                        a.label(Role::Row, w[0]),
                        a.label(Role::Col, w[3])
                    )
                })));
            }
            if let Some(input) = group {
                let (thin, w) = group_thin_criterion(input);
                let w = w.map(|s| format!("a^{} b^{} c^{} = 1", s[0], s[1], s[2]));
                match f.as_mut() {
                    Some(f) => f.confirm("thin", thin.into(), Method::GroupCriterion)?,
                    None => f = Some(Finding::new(thin, Method::GroupCriterion).witness(w)),
                }
            }
            Ok(((), f.expect("one method ran")))
        })?;
        rep.thin = Some(f);
    }
    if wants(Check::Orthogonal) {
        let (_, f) = timed(opts.timings, || {
            let mut f: Option<Finding> = None;
            if scan {
                let w = orthogonal_violation(b);
                f = Some(
                    Finding::new(w.is_none(), Method::DirectScan)
                        .witness(w.map(|w| format!("{} agree in both squares", show_pair(b, w)))),
                );
            }
            if let Some(input) = group {
                let n = conjugate_intersection(input);
                match f.as_mut() {
                    Some(f) => f.confirm("orthogonal", (n == 1).into(), Method::GroupCriterion)?,
                    None => {
                        f = Some(Finding::new(n == 1, Method::GroupCriterion).witness(
                            (n != 1).then(|| format!("|C ∩ a⁻¹Ca| = {n}")),
                        ))
                    }
                }
            }
            Ok(((), f.expect("one method ran")))
        })?;
        rep.orthogonal = Some(f);
    }
    if wants(Check::Homogeneous) {
        let (_, f) = timed(opts.timings, || {
            let h = homogeneity(b);
            let mut f = match &h {
                Homogeneity::Homogeneous(k) => {
                    let mut f = Finding::new(true, Method::DirectScan);
                    f.k = Some(*k);
                    f
                }
                Homogeneity::Not { first_row, role, label, count } => Finding::new(false, Method::DirectScan)
                    .witness(Some(format!(
                        "first row has {first_row} entries, {} {} has {count}",
                        role.name(),
                        b.alphabets().label(*role, *label)
                    ))),
            };
            if let Some(input) = group {
                let k = group_homogeneity(input);
                f.confirm("homogeneous", k.is_some().into(), Method::GroupCriterion)?;
                if let (Some(k), Some(fk)) = (k, f.k) {
                    if k as usize != fk {
                        return Err(Error::Inconsistent(format!("homogeneous: scan gives k={fk}, orders give {k}")));
                    }
                }
            }
            Ok(((), f))
        })?;
        rep.homogeneous_k = Some(f);
    }
    if wants(Check::Minimal) {
        let (_, f) = timed(opts.timings, || {
            let outcome = minimal_oracle(b.circ(), opts.minimal_cap);
            let mut f = match &outcome {
                OracleOutcome::Yes => Finding::new(true, Method::Oracle),
                OracleOutcome::No(w) => Finding::new(false, Method::Oracle)
                    .witness(Some(format!("smaller trade {}", show_triples(b, w)))),
                OracleOutcome::Unknown => {
                    let mut f = Finding::new(false, Method::Oracle);
                    f.value = Verdict::Unknown;
                    f
                }
            };
            let thin_primary = rep.thin.as_ref().is_some_and(|t| t.value == Verdict::Yes)
                && rep.primary.as_ref().is_some_and(|p| p.value == Verdict::Yes);
            if f.value == Verdict::Unknown {
                let mut note = format!("size {} exceeds oracle cap {}", b.size(), opts.minimal_cap);
                if thin_primary {
                    note.push_str("; thin and primary, hence minimal");
                }
                f.witness = Some(note);
            } else if thin_primary && f.value == Verdict::No {
                return Err(Error::Inconsistent("thin primary bitrade failed the minimality oracle".into()));
            }
            Ok(((), f))
        })?;
        rep.minimal = Some(f);
        if !wants(Check::Primary) {
            rep.primary = None;
        }
        if !wants(Check::Thin) {
            rep.thin = None;
        }
    }
    Ok(rep)
}

/// Outcome of checking that thin and primary imply minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TpmCheck {
    /// Thin or primary fails, so nothing is claimed.
    NotApplicable,
    Consistent,
    /// The oracle did not run.
    Unknown,
}

pub fn thin_primary_implies_minimal_check(b: &Bitrade, cap: usize) -> Result<TpmCheck> {
    let tau = tau_perms(b)?;
    if thin_violation(b).is_some() || tau_orbits(&tau).len() != 1 {
        return Ok(TpmCheck::NotApplicable);
    }
    match minimal_oracle(b.circ(), cap) {
        OracleOutcome::Yes => Ok(TpmCheck::Consistent),
        OracleOutcome::Unknown => Ok(TpmCheck::Unknown),
        OracleOutcome::No(w) => Err(Error::Inconsistent(format!(
            "thin primary bitrade has a smaller trade {}",
            show_triples(b, &w)
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latin::examples::*;
    use crate::latin::from_group;

    fn all(b: &Bitrade) -> PropertyReport {
        report(b, None, &ReportOptions::default()).unwrap()
    }

    #[test]
    fn egg1_report() {
        let r = all(&egg1());
        assert_eq!(r.separated.unwrap().value, Verdict::Yes);
        let p = r.primary.unwrap();
        assert_eq!(p.value, Verdict::Yes);
        assert_eq!(p.confirmed_by, [Method::Oracle]);
        assert_eq!(r.thin.unwrap().value, Verdict::Yes);
        assert_eq!(r.homogeneous_k.unwrap().value, Verdict::No);
        assert_eq!(r.minimal.unwrap().value, Verdict::Yes);
    }

    #[test]
    fn non_separated_witness_names_row_c() {
        let f = all(&non_separated()).separated.unwrap();
        assert_eq!(f.value, Verdict::No);
        assert!(f.witness.unwrap().starts_with("row c "));
    }

    #[test]
    fn intercalate_is_not_orthogonal() {
        let r = all(&intercalate());
        assert_eq!(r.orthogonal.unwrap().value, Verdict::No);
        assert_eq!(r.homogeneous_k.unwrap().k, Some(2));
    }

    #[test]
    fn two_intercalates_are_not_primary() {
        let r = all(&two_intercalates());
        let p = r.primary.unwrap();
        assert_eq!(p.value, Verdict::No);
        assert_eq!(p.confirmed_by, [Method::Oracle]);
        assert_eq!(r.minimal.unwrap().value, Verdict::No);
    }

    #[test]
    fn a4_report_uses_both_methods() {
        let input = GroupTripleInput::parse("alt:4".parse().unwrap(), "(1,2,3)", "(2,1,4)", "(2,4,3)").unwrap();
        let b = from_group(&input).unwrap();
        let r = report(&b, Some(&input), &ReportOptions::default()).unwrap();
        for f in [&r.thin, &r.orthogonal, &r.primary, &r.minimal] {
            assert_eq!(f.as_ref().unwrap().value, Verdict::Yes);
        }
        assert!(r.thin.unwrap().confirmed_by.contains(&Method::GroupCriterion));
        assert_eq!(r.homogeneous_k.unwrap().k, Some(3));
        assert_eq!(thin_primary_implies_minimal_check(&b, 24).unwrap(), TpmCheck::Consistent);
    }

    #[test]
    fn check_list_parsing() {
        assert_eq!(Check::parse_list("thin,bitrade").unwrap(), [Check::Bitrade, Check::Thin]);
        assert_eq!(Check::parse_list("all").unwrap().len(), 7);
        assert!(Check::parse_list("round").is_err());
    }
}
