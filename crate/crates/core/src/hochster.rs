//! Multigraded Betti numbers of squarefree quotients by Hochster's formula,
//! and depth through Auslander-Buchsbaum.
//!
//! `beta_{i,F}(S/I) = dim H~_{|F|-i-1}(Delta|_F)` where `Delta` is the
//! Stanley-Reisner complex of `I`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::sr_complex;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

pub const MAX_ORACLE_AMBIENT: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub ambient: usize,
    /// Nonzero entries keyed by homological index and squarefree degree
    /// (bitmask of `F`).
    pub entries: BTreeMap<(usize, u32), usize>,
    pub restrictions: usize,
    pub euler_failures: usize,
}

impl BettiTable {
    pub fn get(&self, i: usize, f: u32) -> usize {
        self.entries.get(&(i, f)).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().expect("beta_{0,0} is always present")
    }

    pub fn depth(&self) -> usize {
        self.ambient - self.projective_dimension()
    }

    /// Nonzero entries as `(i, sorted 1-based indices of F, rank)`, ordered
    /// by `i`, then `|F|`, then bitmask.
    pub fn rows(&self) -> Vec<(usize, Vec<usize>, usize)> {
        let mut keys: Vec<&(usize, u32)> = self.entries.keys().collect();
        keys.sort_by_key(|&&(i, f)| (i, f.count_ones(), f));
        keys.into_iter()
            .map(|&(i, f)| {
                let idx = (0..32).filter(|j| f >> j & 1 == 1).map(|j| j + 1).collect();
                (i, idx, self.entries[&(i, f)])
            })
            .collect()
    }
}

/// Betti table of `S/I` for squarefree, nonzero, proper `I` in at most 14
/// variables.
pub fn hochster_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let n = ideal.ambient();
    if n > MAX_ORACLE_AMBIENT {
        return Err(Error::OracleAmbient(n));
    }
    let complex = sr_complex(ideal)?;
    let mut subsets: Vec<u32> = (0..(1u32 << n)).collect();
    subsets.sort_by_key(|&f| (f.count_ones(), f));
    let per_subset: Vec<(u32, Vec<usize>, bool)> = subsets
        .par_iter()
        .map(|&f| {
            let h = complex.restricted_homology(f);
            let ok = h.euler_consistent();
            (f, h.betti, ok)
        })
        .collect();
    let mut entries = BTreeMap::new();
    let mut euler_failures = 0;
    for (f, betti, ok) in &per_subset {
        if !ok {
            euler_failures += 1;
        }
        let size = f.count_ones() as usize;
        // betti[s] is H~_{s-1}; i = |F| - (s - 1) - 1 = |F| - s
        for (s, &b) in betti.iter().enumerate() {
            if b > 0 {
                entries.insert((size - s, *f), b);
            }
        }
    }
    Ok(BettiTable { ambient: n, entries, restrictions: per_subset.len(), euler_failures })
}

/// `n - pd(S/I)`.
pub fn depth_squarefree(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(hochster_betti(ideal)?.depth())
}
