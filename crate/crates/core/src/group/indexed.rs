use std::sync::Arc;

use rayon::prelude::*;

use super::{Element, Group};
use crate::error::{Error, Result};

/// A materialized group whose elements are addressed by their position in
/// canonical order. Right-multiplication maps are computed as index tables,
/// which is what the coset sweeps need.
pub struct IndexedGroup {
    group: Group,
    elements: Arc<Vec<Element>>,
}

impl IndexedGroup {
    pub fn new(group: &Group) -> Result<Self> {
        let elements = group.elements()?;
        Ok(IndexedGroup { group: group.clone(), elements })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: u32) -> &Element {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn index_of(&self, g: &Element) -> Option<u32> {
        self.elements.binary_search(g).ok().map(|i| i as u32)
    }

    /// `table[i]` is the index of `element(i) * g`.
    pub fn right_mul_table(&self, g: &Element) -> Result<Vec<u32>> {
        self.group.check(g)?;
        self.elements
            .par_iter()
            .map(|x| {
                let y = self.group.mul_unchecked(x, g);
                self.index_of(&y).ok_or_else(|| Error::Domain(format!("{g} is not an element of {}", self.group)))
            })
            .collect()
    }

    /// Orbits of a right-multiplication table, i.e. the left cosets of
    /// `<g>`. Returns each element's coset id and, per id, the smallest
    /// element index in the coset. Ids follow representative order.
    pub fn coset_ids(table: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let mut ids = vec![u32::MAX; table.len()];
        let mut reps = Vec::new();
        for start in 0..table.len() {
            if ids[start] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(start as u32);
            let mut x = start;
            while ids[x] == u32::MAX {
                ids[x] = id;
                x = table[x] as usize;
            }
        }
        (ids, reps)
    }

    /// Size of the subgroup generated by the given right-multiplication
    /// tables: the orbit of the identity.
    pub fn generated_size(&self, tables: &[&[u32]]) -> usize {
        let id = self.index_of(&self.group.identity()).expect("identity is an element");
        let mut seen = vec![false; self.len()];
        let mut stack = vec![id];
        seen[id as usize] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for t in tables {
                let y = t[x as usize];
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }
}

pub(crate) fn invert_table(table: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; table.len()];
    for (i, &j) in table.iter().enumerate() {
        inv[j as usize] = i as u32;
    }
    inv
}
