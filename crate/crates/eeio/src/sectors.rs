//! Sector catalog: the ordered list of sectors an economy table is indexed by.

use crate::error::{Error, Result};
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq)]
pub struct Sector {
    pub index: usize,
    pub code: String,
    pub name: String,
    pub is_energy: bool,
}

/// Ordered sector list. Indices are contiguous `0..n`, codes unique, and the
/// catalog always contains at least one energy and one non-energy sector.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorCatalog {
    entries: Vec<Sector>,
}

impl SectorCatalog {
    pub fn new(entries: Vec<Sector>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidCatalog("catalog is empty".into()));
        }
        for (pos, sector) in entries.iter().enumerate() {
            if sector.index != pos {
                return Err(Error::InvalidCatalog(format!(
                    "sector {:?} declares index {} at position {pos}; indices must be contiguous 0..{}",
                    sector.code,
                    sector.index,
                    entries.len()
                )));
            }
        }
        let mut seen = HashSet::new();
        for sector in &entries {
            if !seen.insert(sector.code.as_str()) {
                return Err(Error::DuplicateSector {
                    code: sector.code.clone(),
                });
            }
        }
        let energy = entries.iter().filter(|s| s.is_energy).count();
        if energy == 0 {
            return Err(Error::InvalidCatalog("catalog has no energy sector".into()));
        }
        if energy == entries.len() {
            return Err(Error::InvalidCatalog(
                "catalog has no non-energy sector".into(),
            ));
        }
        Ok(SectorCatalog { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sector> {
        self.entries.iter()
    }

    pub fn get(&self, index: usize) -> &Sector {
        &self.entries[index]
    }

    pub fn by_code(&self, code: &str) -> Option<&Sector> {
        self.entries.iter().find(|s| s.code == code)
    }

    pub fn codes(&self) -> Vec<&str> {
        self.entries.iter().map(|s| s.code.as_str()).collect()
    }

    pub fn energy_indices(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|s| s.is_energy)
            .map(|s| s.index)
            .collect()
    }

    pub fn non_energy_indices(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|s| !s.is_energy)
            .map(|s| s.index)
            .collect()
    }
}

#[cfg(test)]
pub(crate) fn test_catalog(n: usize, energy: &[usize]) -> SectorCatalog {
    let entries = (0..n)
        .map(|i| Sector {
            index: i,
            code: format!("S{i:02}"),
            name: format!("Sector {i}"),
            is_energy: energy.contains(&i),
        })
        .collect();
    SectorCatalog::new(entries).unwrap()
}
