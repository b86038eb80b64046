//! JSON form of a bitrade:
//! `{"rows","cols","syms","t_circ","t_star","provenance"}` with triples
//! given as label lists in sorted order.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::bitrade::{Bitrade, Provenance};
use super::square::{Alphabets, PartialLatinSquare, Triple};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
pub struct BitradeDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub syms: Option<Vec<String>>,
    pub t_circ: Vec<[String; 3]>,
    pub t_star: Vec<[String; 3]>,
    #[serde(default = "explicit")]
    pub provenance: Provenance,
}

fn explicit() -> Provenance {
    Provenance::Explicit
}

impl From<&Bitrade> for BitradeDocument {
    fn from(b: &Bitrade) -> Self {
        let alph = b.alphabets();
        BitradeDocument {
            rows: Some(alph.rows.clone()),
            cols: Some(alph.cols.clone()),
            syms: Some(alph.syms.clone()),
            t_circ: b.circ().label_triples(),
            t_star: b.star().label_triples(),
            provenance: b.provenance().clone(),
        }
    }
}

impl BitradeDocument {
    /// Validates the document. Without explicit alphabets, labels are
    /// inferred and sorted.
    pub fn into_bitrade(self) -> Result<Bitrade> {
        match (self.rows, self.cols, self.syms) {
            (Some(rows), Some(cols), Some(syms)) => {
                let alph = Arc::new(Alphabets::new(rows, cols, syms));
                let index = |ts: &[[String; 3]]| -> Result<Vec<Triple>> {
                    ts.iter()
                        .map(|t| {
                            let mut out = [0u32; 3];
                            for (k, role) in super::Role::ALL.into_iter().enumerate() {
                                out[k] = alph.position(role, &t[k]).ok_or_else(|| {
                                    Error::Domain(format!("{} label '{}' is not in the alphabet", role.name(), t[k]))
                                })?;
                            }
                            Ok(out)
                        })
                        .collect()
                };
                let (circ, star) = (index(&self.t_circ)?, index(&self.t_star)?);
                Bitrade::from_indexed(alph, circ, star, self.provenance)
            }
            (None, None, None) => Bitrade::new(
                PartialLatinSquare::from_labels(&self.t_circ)?,
                PartialLatinSquare::from_labels(&self.t_star)?,
                self.provenance,
            ),
            _ => Err(Error::Domain("rows, cols and syms must be given together or not at all".into())),
        }
    }
}

pub fn to_json(b: &Bitrade) -> String {
    serde_json::to_string_pretty(&BitradeDocument::from(b)).expect("documents serialize")
}

pub fn from_json(text: &str) -> Result<Bitrade> {
    serde_json::from_str::<BitradeDocument>(text)?.into_bitrade()
}

pub fn read_bitrade(path: &Path) -> Result<Bitrade> {
    from_json(&std::fs::read_to_string(path)?)
}

pub fn write_bitrade(path: &Path, b: &Bitrade) -> Result<()> {
    let mut text = to_json(b);
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
