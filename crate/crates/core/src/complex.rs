//! Simplicial complexes on at most 32 vertices, stored through their minimal
//! non-faces, and their reduced homology over the rationals.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::rank::rank;

/// Vertex `j` is bit `j` (the variable `x{j+1}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    nonfaces: Vec<u32>,
}

/// The Stanley-Reisner complex of a squarefree ideal: `F` is a face iff
/// `x_F` is not in `I`.
pub fn sr_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::DegenerateIdeal);
    }
    Ok(SimplicialComplex {
        vertices: ideal.ambient(),
        nonfaces: ideal.gens().iter().map(|g| g.support_mask()).collect(),
    })
}

impl SimplicialComplex {
    pub fn from_nonfaces(vertices: usize, nonfaces: Vec<u32>) -> Self {
        SimplicialComplex { vertices, nonfaces }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn minimal_nonfaces(&self) -> &[u32] {
        &self.nonfaces
    }

    pub fn is_face(&self, set: u32) -> bool {
        self.nonfaces.iter().all(|&nf| nf & set != nf)
    }

    /// Faces contained in `within`, ordered by size then bitmask.
    pub fn faces_within(&self, within: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut sub = within;
        loop {
            if self.is_face(sub) {
                out.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & within;
        }
        out.sort_by_key(|&f| (f.count_ones(), f));
        out
    }

    pub fn faces(&self) -> Vec<u32> {
        self.faces_within(full_mask(self.vertices))
    }

    /// Reduced homology of the restriction to `within`.
    /// A vertex of `within` lying in no non-face inside `within`; the
    /// restriction is then a cone over it.
    pub fn cone_apex(&self, within: u32) -> Option<usize> {
        let used = self.nonfaces.iter().filter(|&&g| g & !within == 0).fold(0u32, |acc, &g| acc | g);
        let free = within & !used;
        (free != 0).then(|| free.trailing_zeros() as usize + 1)
    }

    pub fn restricted_homology(&self, within: u32) -> Homology {
        let faces = self.faces_within(within);
        let top = faces.last().map_or(0, |f| f.count_ones() as usize);
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        for f in faces {
            by_size[f.count_ones() as usize].push(f);
        }
        let face_counts: Vec<usize> = by_size.iter().map(Vec::len).collect();
        if within != 0 && self.cone_apex(within).is_some() {
            return Homology { betti: vec![0; face_counts.len()], face_counts };
        }
        // boundary ranks: ranks[s] = rank of the map from size-s faces to size-(s-1) faces
        let mut ranks = vec![0usize; top + 2];
        for s in 1..=top {
            ranks[s] = rank(&boundary_matrix(&by_size[s], &by_size[s - 1]));
        }
        let betti = (0..=top).map(|s| face_counts[s] - ranks[s] - ranks[s + 1]).collect();
        Homology { face_counts, betti }
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Rows are the faces in `lower`, columns the faces in `upper`; entry is the
/// sign `(-1)^i` when the lower face drops the `i`-th vertex of the upper one.
pub(crate) fn boundary_matrix(upper: &[u32], lower: &[u32]) -> Vec<Vec<i64>> {
    let row_of: HashMap<u32, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (c, &f) in upper.iter().enumerate() {
        let mut rest = f;
        let mut pos = 0;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let r = row_of[&(f & !(1 << v))];
            m[r][c] = if pos % 2 == 0 { 1 } else { -1 };
            pos += 1;
        }
    }
    m
}

/// Face counts and reduced Betti numbers of a complex, both indexed by face
/// size: entry `s` belongs to dimension `s - 1`, so entry 0 is `H~_{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub face_counts: Vec<usize>,
    pub betti: Vec<usize>,
}

impl Homology {
    /// Reduced Euler characteristic computed both ways agrees.
    pub fn euler_consistent(&self) -> bool {
        let alt = |v: &[usize]| -> i64 {
            v.iter().enumerate().map(|(s, &x)| if s % 2 == 1 { x as i64 } else { -(x as i64) }).sum()
        };
        alt(&self.face_counts) == alt(&self.betti)
    }
}
