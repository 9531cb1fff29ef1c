//! Characteristic posets of quotients `I/J` of monomial ideals.
//!
//! For a bound `g` dominating every generator, the poset holds the multidegrees
//! `a <= g` with `x^a` in `I` but not in `J`. Interval partitions of it are in
//! bijection with a class of Stanley decompositions rich enough to realize the
//! Stanley depth, where an interval `[a, b]` contributes pieces with
//! `|Z| = rho(b)`, the number of coordinates at which `b` meets `g`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::quotient::QuotientPresentation;

/// Default maximum number of poset elements.
pub const DEFAULT_POSET_CAP: usize = 2_000_000;

/// Boxes larger than this are refused outright, whatever the element count.
const BOX_LIMIT: u64 = 1 << 28;
const DENSE_LOOKUP_LIMIT: u64 = 1 << 22;

#[derive(Clone, Debug)]
pub struct PosetOptions {
    pub cap: usize,
    /// Override for the bound `g`; must dominate the generator lcm.
    pub bound: Option<Vec<u8>>,
}

impl Default for PosetOptions {
    fn default() -> Self {
        PosetOptions { cap: DEFAULT_POSET_CAP, bound: None }
    }
}

#[derive(Clone, Debug)]
enum Lookup {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

/// Elements are stored in a linear extension: ascending total degree, then
/// ascending mixed-radix code. For all-ones bounds the code is the bitmask of
/// the support.
#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    bound: Vec<u8>,
    strides: Vec<u64>,
    codes: Vec<u64>,
    rho: Vec<u8>,
    lookup: Lookup,
    boolean: bool,
}

pub fn build_poset(pair: &QuotientPresentation) -> Result<CharacteristicPoset> {
    build_poset_with(pair, &PosetOptions::default())
}

pub fn build_poset_with(pair: &QuotientPresentation, opts: &PosetOptions) -> Result<CharacteristicPoset> {
    let n = pair.ambient();
    let lcm: Vec<u8> = pair
        .numerator()
        .lcm_exponents()
        .iter()
        .zip(pair.denominator().lcm_exponents())
        .map(|(&a, b)| a.max(b))
        .collect();
    let bound = match &opts.bound {
        Some(g) => {
            if g.len() != n {
                return Err(Error::AmbientMismatch { left: n, right: g.len() });
            }
            if g.iter().zip(&lcm).any(|(a, b)| a < b) {
                return Err(Error::InvalidPresentation("bound does not dominate the generators".into()));
            }
            g.clone()
        }
        None => lcm,
    };

    let mut strides = Vec::with_capacity(n);
    let mut box_size: u64 = 1;
    for &g in &bound {
        strides.push(box_size);
        box_size =
            box_size.checked_mul(g as u64 + 1).filter(|&s| s <= BOX_LIMIT).ok_or(Error::PosetCap { cap: opts.cap })?;
    }

    let num = pair.numerator().gens();
    let den = pair.denominator().gens();
    let member = |gens: &[Monomial], a: &[u8]| gens.iter().any(|g| g.exponents().iter().zip(a).all(|(x, y)| x <= y));

    let mut found: Vec<(u32, u64)> = Vec::new();
    let mut a = vec![0u8; n];
    for code in 0..box_size {
        if member(num, &a) && !member(den, &a) {
            if found.len() == opts.cap {
                return Err(Error::PosetCap { cap: opts.cap });
            }
            let deg = a.iter().map(|&e| e as u32).sum();
            found.push((deg, code));
        }
        // odometer increment
        for j in 0..n {
            if a[j] < bound[j] {
                a[j] += 1;
                break;
            }
            a[j] = 0;
        }
    }
    if found.is_empty() {
        return Err(Error::InvalidPresentation("characteristic poset is empty".into()));
    }
    found.sort_unstable();

    let codes: Vec<u64> = found.into_iter().map(|(_, c)| c).collect();
    let lookup = if box_size <= DENSE_LOOKUP_LIMIT {
        let mut dense = vec![u32::MAX; box_size as usize];
        for (i, &c) in codes.iter().enumerate() {
            dense[c as usize] = i as u32;
        }
        Lookup::Dense(dense)
    } else {
        Lookup::Sparse(codes.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect())
    };
    let boolean = bound.iter().all(|&g| g <= 1);
    let mut poset = CharacteristicPoset { bound, strides, codes, rho: Vec::new(), lookup, boolean };
    poset.rho = (0..poset.codes.len()).map(|i| poset.rho_of(&poset.exponents(i)) as u8).collect();
    debug_assert!(poset.sampled_convexity_holds());
    Ok(poset)
}

impl CharacteristicPoset {
    pub fn ambient(&self) -> usize {
        self.bound.len()
    }

    pub fn bound(&self) -> &[u8] {
        &self.bound
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// True when every coordinate of the bound is at most one (squarefree case).
    pub fn is_boolean(&self) -> bool {
        self.boolean
    }

    pub fn code(&self, i: usize) -> u64 {
        self.codes[i]
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn strides(&self) -> &[u64] {
        &self.strides
    }

    pub fn rho(&self, i: usize) -> usize {
        self.rho[i] as usize
    }

    pub fn exponents(&self, i: usize) -> Vec<u8> {
        self.decode(self.codes[i])
    }

    pub fn monomial(&self, i: usize) -> Monomial {
        Monomial::from_exps_unchecked(self.exponents(i))
    }

    pub fn decode(&self, code: u64) -> Vec<u8> {
        self.bound.iter().zip(&self.strides).map(|(&g, &s)| ((code / s) % (g as u64 + 1)) as u8).collect()
    }

    /// Code of an exponent vector, or `None` when it leaves the box.
    pub fn encode(&self, exps: &[u8]) -> Option<u64> {
        if exps.len() != self.bound.len() || exps.iter().zip(&self.bound).any(|(a, g)| a > g) {
            return None;
        }
        Some(exps.iter().zip(&self.strides).map(|(&a, &s)| a as u64 * s).sum())
    }

    /// Index of the element with the given code.
    pub fn index_of_code(&self, code: u64) -> Option<usize> {
        match &self.lookup {
            Lookup::Dense(d) => d.get(code as usize).copied().filter(|&i| i != u32::MAX).map(|i| i as usize),
            Lookup::Sparse(m) => m.get(&code).map(|&i| i as usize),
        }
    }

    pub fn index_of(&self, exps: &[u8]) -> Option<usize> {
        self.encode(exps).and_then(|c| self.index_of_code(c))
    }

    /// Number of coordinates where `exps` meets the bound.
    pub fn rho_of(&self, exps: &[u8]) -> usize {
        exps.iter().zip(&self.bound).filter(|(a, g)| a == g).count()
    }

    /// Bitmask of coordinates where `exps` meets the bound.
    pub fn at_bound_mask(&self, exps: &[u8]) -> u32 {
        exps.iter().zip(&self.bound).enumerate().filter(|(_, (a, g))| a == g).fold(0, |m, (j, _)| m | (1 << j))
    }

    /// Codes of the cells of the pure interval from `bottom` raising the
    /// coordinates in `raise` to the bound. Calls `f` until it returns false.
    pub(crate) fn for_each_cell(&self, bottom: u64, raise: u32, mut f: impl FnMut(u64) -> bool) -> bool {
        if self.boolean {
            // submask enumeration of the raised code bits over the bottom
            let raise = self.code_mask(raise) as u32;
            let mut sub: u32 = 0;
            loop {
                if !f(bottom | sub as u64) {
                    return false;
                }
                if sub == raise {
                    return true;
                }
                sub = (sub.wrapping_sub(raise)) & raise;
            }
        }
        let exps = self.decode(bottom);
        let coords: Vec<usize> = (0..self.bound.len()).filter(|&j| raise >> j & 1 == 1).collect();
        let mut offs = vec![0u8; coords.len()];
        let mut code = bottom;
        loop {
            if !f(code) {
                return false;
            }
            let mut t = 0;
            loop {
                if t == coords.len() {
                    return true;
                }
                let j = coords[t];
                if exps[j] + offs[t] < self.bound[j] {
                    offs[t] += 1;
                    code += self.strides[j];
                    break;
                }
                code -= offs[t] as u64 * self.strides[j];
                offs[t] = 0;
                t += 1;
            }
        }
    }

    /// Sum of strides over the coordinates in `coords`; in the boolean case the
    /// code bits of those coordinates.
    pub(crate) fn code_mask(&self, coords: u32) -> u64 {
        (0..self.bound.len()).filter(|&j| coords >> j & 1 == 1).map(|j| self.strides[j]).sum()
    }

    /// Codes of all box cells `c <= top` (not necessarily in the poset).
    pub(crate) fn for_each_below(&self, top: u64, mut f: impl FnMut(u64)) {
        if self.boolean {
            let top = top as u32;
            let mut sub = top;
            loop {
                f(sub as u64);
                if sub == 0 {
                    return;
                }
                sub = (sub - 1) & top;
            }
        }
        let exps = self.decode(top);
        let mut cur = vec![0u8; exps.len()];
        let mut code = 0u64;
        loop {
            f(code);
            let mut j = 0;
            loop {
                if j == exps.len() {
                    return;
                }
                if cur[j] < exps[j] {
                    cur[j] += 1;
                    code += self.strides[j];
                    break;
                }
                code -= cur[j] as u64 * self.strides[j];
                cur[j] = 0;
                j += 1;
            }
        }
    }

    fn sampled_convexity_holds(&self) -> bool {
        let n = self.len();
        let step = (n / 8).max(1);
        for i in (0..n).step_by(step) {
            for j in (i..n).step_by(step) {
                let (a, b) = (self.exponents(i), self.exponents(j));
                if a.iter().zip(&b).any(|(x, y)| x > y) {
                    continue;
                }
                let raise = (0..a.len()).filter(|&t| a[t] < b[t]).fold(0u32, |m, t| m | 1 << t);
                let mut ok = true;
                let mut cur = a.clone();
                // every cell between a and b must be present
                loop {
                    if self.index_of(&cur).is_none() {
                        ok = false;
                        break;
                    }
                    let mut t = 0;
                    while t < cur.len() {
                        if raise >> t & 1 == 1 && cur[t] < b[t] {
                            cur[t] += 1;
                            break;
                        }
                        cur[t] = a[t];
                        t += 1;
                    }
                    if t == cur.len() {
                        break;
                    }
                }
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}
