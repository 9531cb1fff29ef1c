//! Exact interval-partition search on characteristic posets.
//!
//! `exists_partition(P, k)` decides whether `P` splits into intervals whose
//! tops all have `rho >= k`. Two normalizations keep the search small without
//! losing completeness:
//!
//! * An interval `[a, b]` can be cut along any coordinate where `b` stays below
//!   the bound, so only *pure* intervals are needed: every coordinate of `b`
//!   is either `a_j` or `g_j`.
//! * The elements of a pure interval with top `rho >= k` that have `rho < k`
//!   split into pure intervals with top `rho` exactly `k` (the Boolean lattice
//!   truncated at rank `r` partitions into intervals with tops at rank `r`),
//!   and the remaining elements, all with `rho >= k`, can stand alone.
//!
//! So the search only has to cover the elements with `rho < k`, each by a pure
//! interval raising exactly `k - rho(a)` coordinates of its bottom `a` to the
//! bound. Elements are visited in the poset's linear extension; the first
//! uncovered one has all smaller elements covered and must therefore be the
//! bottom of its interval, which makes branching over its tops exhaustive.
//!
//! Rotations and reflections of the variables that map the poset onto itself
//! are used for symmetry breaking: while every placed interval is fixed by a
//! symmetry that also fixes the current bottom, only one top per orbit is tried.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::decomposition::{StanleyDecomposition, StanleyPiece};
use crate::error::{Error, Result};
use crate::poset::{build_poset_with, CharacteristicPoset, PosetOptions};
use crate::quotient::QuotientPresentation;

pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(300);

#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Per decision call.
    pub time_limit: Duration,
    /// Remember failed covered-sets; only used for posets of at most 64 elements.
    pub memo: bool,
    /// Prune tops that are images of other tops under a dihedral symmetry.
    pub symmetry: bool,
    pub poset: PosetOptions,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { time_limit: DEFAULT_TIME_LIMIT, memo: false, symmetry: true, poset: PosetOptions::default() }
    }
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    /// Coordinates raised to the bound.
    raise: u32,
    top: u64,
    top_idx: u32,
    size: u64,
}

struct Frame {
    bottom: usize,
    cands: Vec<Candidate>,
    next: usize,
    placed: Option<Candidate>,
    /// Low-list cursor when this frame was opened.
    cursor: usize,
    /// Symmetries fixing every placed interval and this bottom.
    sym: Vec<u16>,
}

struct Search<'a> {
    poset: &'a CharacteristicPoset,
    k: usize,
    low: Vec<usize>,
    covered: Vec<bool>,
    /// Uncovered counts per rho level `0..=k` (used for the Boolean counting bound).
    level_counts: Vec<i64>,
    /// The same counts restricted to elements containing `x_j`, for each
    /// Boolean coordinate `j` with bound 1, as `(stride, counts)`.
    slice_counts: Vec<(u64, Vec<i64>)>,
    binom: Vec<Vec<i64>>,
    started: Instant,
    limit: Duration,
    nodes: u64,
    memo: Option<HashSet<u64>>,
    /// Element permutations induced by poset symmetries, identity excluded.
    perms: Vec<Vec<u32>>,
}

/// Statistics from the last decision call.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

/// Returns a partition with all tops at `rho >= k`, `None` when none exists.
pub fn exists_partition(
    poset: &CharacteristicPoset,
    k: usize,
    opts: &SolverOptions,
) -> Result<Option<StanleyDecomposition>> {
    exists_partition_stats(poset, k, opts).map(|(d, _)| d)
}

pub fn exists_partition_stats(
    poset: &CharacteristicPoset,
    k: usize,
    opts: &SolverOptions,
) -> Result<(Option<StanleyDecomposition>, SearchStats)> {
    let mut s = Search::new(poset, k, opts);
    let found = s.run()?;
    let stats = SearchStats { nodes: s.nodes };
    Ok((found.map(|placed| s.decomposition(&placed)), stats))
}

impl<'a> Search<'a> {
    fn new(poset: &'a CharacteristicPoset, k: usize, opts: &SolverOptions) -> Self {
        let low: Vec<usize> = (0..poset.len()).filter(|&i| poset.rho(i) < k).collect();
        let mut level_counts = vec![0i64; k + 1];
        for i in 0..poset.len() {
            if poset.rho(i) <= k {
                level_counts[poset.rho(i)] += 1;
            }
        }
        let mut slice_counts: Vec<(u64, Vec<i64>)> = Vec::new();
        if poset.is_boolean() {
            for j in (0..poset.ambient()).filter(|&j| poset.bound()[j] == 1) {
                let stride = poset.strides()[j];
                let mut counts = vec![0i64; k + 1];
                for i in 0..poset.len() {
                    if poset.rho(i) <= k && poset.code(i) & stride != 0 {
                        counts[poset.rho(i)] += 1;
                    }
                }
                slice_counts.push((stride, counts));
            }
        }
        let mut binom = vec![vec![0i64; k + 1]; k + 1];
        for a in 0..=k {
            binom[a][0] = 1;
            for b in 1..=a {
                binom[a][b] = binom[a - 1][b - 1] + if b < a { binom[a - 1][b] } else { 0 };
            }
        }
        let memo = (opts.memo && poset.len() <= 64).then(HashSet::new);
        let perms =
            if opts.symmetry && poset.len() <= SYMMETRY_LIMIT { dihedral_symmetries(poset) } else { Vec::new() };
        Search {
            poset,
            k,
            low,
            covered: vec![false; poset.len()],
            level_counts,
            slice_counts,
            binom,
            started: Instant::now(),
            limit: opts.time_limit,
            nodes: 0,
            memo,
            perms,
        }
    }

    fn covered_key(&self) -> u64 {
        self.covered.iter().enumerate().fold(0u64, |m, (i, &c)| if c { m | 1 << i } else { m })
    }

    /// Pure tops above `bottom` raising exactly `k - rho` coordinates, whose
    /// whole interval is in the poset and uncovered. Sorted by interval size,
    /// then top code.
    fn candidates(&self, bottom: usize) -> Vec<Candidate> {
        let p = self.poset;
        let exps = p.exponents(bottom);
        let g = p.bound();
        let need = self.k - p.rho(bottom);
        let free: Vec<usize> = (0..exps.len()).filter(|&j| exps[j] < g[j]).collect();
        let mut out = Vec::new();
        if free.len() < need {
            return out;
        }
        let base = p.code(bottom);
        for_each_combination(free.len(), need, |pick| {
            let mut raise = 0u32;
            let mut top = base;
            let mut size = 1u64;
            for &t in pick {
                let j = free[t];
                raise |= 1 << j;
                top += (g[j] - exps[j]) as u64 * p.strides()[j];
                size *= (g[j] - exps[j]) as u64 + 1;
            }
            if let Some(top_idx) = p.index_of_code(top) {
                if self.interval_free(base, raise) {
                    out.push(Candidate { raise, top, top_idx: top_idx as u32, size });
                }
            }
        });
        out.sort_by_key(|c| (c.size, c.top));
        out
    }

    fn interval_free(&self, base: u64, raise: u32) -> bool {
        let p = self.poset;
        p.for_each_cell(base, raise, |code| match p.index_of_code(code) {
            Some(i) => !self.covered[i],
            None => {
                debug_assert!(false, "pure interval between poset elements left the poset");
                false
            }
        })
    }

    fn has_candidate(&self, elem: usize) -> bool {
        let p = self.poset;
        let exps = p.exponents(elem);
        let g = p.bound();
        let need = self.k - p.rho(elem);
        let free: Vec<usize> = (0..exps.len()).filter(|&j| exps[j] < g[j]).collect();
        if free.len() < need {
            return false;
        }
        let base = p.code(elem);
        let mut found = false;
        for_each_combination(free.len(), need, |pick| {
            if found {
                return;
            }
            let mut raise = 0u32;
            let mut top = base;
            for &t in pick {
                let j = free[t];
                raise |= 1 << j;
                top += (g[j] - exps[j]) as u64 * p.strides()[j];
            }
            if p.index_of_code(top).is_some() && self.interval_free(base, raise) {
                found = true;
            }
        });
        found
    }

    fn mark(&mut self, bottom: usize, c: Candidate, value: bool) {
        let p = self.poset;
        let base = p.code(bottom);
        let delta = if value { -1 } else { 1 };
        let k = self.k;
        let covered = &mut self.covered;
        let counts = &mut self.level_counts;
        let slices = &mut self.slice_counts;
        p.for_each_cell(base, c.raise, |code| {
            let i = p.index_of_code(code).expect("interval inside poset");
            covered[i] = value;
            let r = p.rho(i);
            if r <= k {
                counts[r] += delta;
                for (stride, sc) in slices.iter_mut() {
                    if code & *stride != 0 {
                        sc[r] += delta;
                    }
                }
            }
            true
        });
    }

    /// Level counts of the uncovered region must be realizable by intervals
    /// from level `i` to level `k`, which cover `C(k-i, j-i)` elements at level `j`.
    /// The same holds inside each slice `{a : a_j = 1}`, since every interval
    /// meets a slice in an interval with the same top or not at all.
    fn counting_bound_ok(&self) -> bool {
        if !self.poset.is_boolean() {
            return true;
        }
        self.counts_realizable(&self.level_counts) && self.slice_counts.iter().all(|(_, c)| self.counts_realizable(c))
    }

    fn counts_realizable(&self, counts: &[i64]) -> bool {
        let k = self.k;
        let mut alpha = [0i64; 32];
        let mut intervals = 0i64;
        for j in 0..k {
            let mut rest = counts[j];
            for (i, a) in alpha[..j].iter().enumerate() {
                rest -= a * self.binom[k - i][j - i];
            }
            if rest < 0 {
                return false;
            }
            alpha[j] = rest;
            intervals += rest;
        }
        intervals <= counts[k]
    }

    /// Every uncovered low element below the new top must still fit under
    /// some admissible top; only those elements can have lost options.
    fn neighbours_ok(&self, top: u64) -> bool {
        let p = self.poset;
        let mut ok = true;
        p.for_each_below(top, |code| {
            if !ok {
                return;
            }
            if let Some(i) = p.index_of_code(code) {
                if !self.covered[i] && p.rho(i) < self.k && !self.has_candidate(i) {
                    ok = false;
                }
            }
        });
        ok
    }

    /// Keeps the candidates whose top has the least index in its orbit.
    fn canonical(&self, cands: Vec<Candidate>, sym: &[u16]) -> Vec<Candidate> {
        if sym.is_empty() {
            return cands;
        }
        cands
            .into_iter()
            .filter(|c| sym.iter().all(|&g| self.perms[g as usize][c.top_idx as usize] >= c.top_idx))
            .collect()
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.started.elapsed() > self.limit {
            return Err(Error::TimeLimit { millis: self.limit.as_millis() as u64 });
        }
        Ok(())
    }

    /// Returns the placed `(bottom, candidate)` list on success.
    fn run(&mut self) -> Result<Option<Vec<(usize, Candidate)>>> {
        if !self.counting_bound_ok() || self.low.iter().any(|&e| !self.has_candidate(e)) {
            return Ok(None);
        }
        let mut stack: Vec<Frame> = Vec::new();
        let mut cursor = 0usize;
        let mut state_sym: Vec<u16> = (0..self.perms.len() as u16).collect();
        'descend: loop {
            self.tick()?;
            while cursor < self.low.len() && self.covered[self.low[cursor]] {
                cursor += 1;
            }
            if cursor == self.low.len() {
                return Ok(Some(stack.iter().map(|f| (f.bottom, f.placed.expect("placed"))).collect()));
            }
            let skip = match &self.memo {
                Some(memo) => memo.contains(&self.covered_key()),
                None => false,
            };
            let bottom = self.low[cursor];
            let sym: Vec<u16> =
                state_sym.iter().copied().filter(|&g| self.perms[g as usize][bottom] == bottom as u32).collect();
            let cands = if skip { Vec::new() } else { self.canonical(self.candidates(bottom), &sym) };
            stack.push(Frame { bottom, cands, next: 0, placed: None, cursor, sym });

            // advance the top frame; pop exhausted frames
            loop {
                let Some(frame) = stack.last_mut() else {
                    return Ok(None);
                };
                let bottom = frame.bottom;
                if let Some(prev) = frame.placed.take() {
                    self.mark(bottom, prev, false);
                }
                let frame = stack.last_mut().expect("frame");
                if frame.next < frame.cands.len() {
                    let c = frame.cands[frame.next];
                    frame.next += 1;
                    self.mark(bottom, c, true);
                    if self.counting_bound_ok() && self.neighbours_ok(c.top) {
                        let frame = stack.last_mut().expect("frame");
                        frame.placed = Some(c);
                        cursor = frame.cursor;
                        let perms = &self.perms;
                        state_sym = frame
                            .sym
                            .iter()
                            .copied()
                            .filter(|&g| perms[g as usize][c.top_idx as usize] == c.top_idx)
                            .collect();
                        continue 'descend;
                    }
                    self.mark(bottom, c, false);
                    self.tick()?;
                    continue;
                }
                stack.pop();
                if self.memo.is_some() {
                    let key = self.covered_key();
                    if let Some(memo) = self.memo.as_mut() {
                        memo.insert(key);
                    }
                }
            }
        }
    }

    fn decomposition(&self, placed: &[(usize, Candidate)]) -> StanleyDecomposition {
        let p = self.poset;
        let mut covered = vec![false; p.len()];
        let mut pieces: Vec<(usize, StanleyPiece)> = Vec::new();
        for &(bottom, c) in placed {
            p.for_each_cell(p.code(bottom), c.raise, |code| {
                covered[p.index_of_code(code).expect("inside")] = true;
                true
            });
            let exps = p.exponents(bottom);
            let vars = c.raise | p.at_bound_mask(&exps);
            pieces.push((bottom, StanleyPiece { bottom: p.monomial(bottom), vars }));
        }
        for i in (0..p.len()).filter(|&i| !covered[i]) {
            debug_assert!(p.rho(i) >= self.k);
            let exps = p.exponents(i);
            pieces.push((i, StanleyPiece { bottom: p.monomial(i), vars: p.at_bound_mask(&exps) }));
        }
        pieces.sort_by_key(|(i, _)| *i);
        StanleyDecomposition { pieces: pieces.into_iter().map(|(_, piece)| piece).collect() }
    }
}

/// Posets above this size skip symmetry detection.
const SYMMETRY_LIMIT: usize = 1 << 20;

/// Rotations and reflections of the coordinates that preserve the bound and
/// map the element set onto itself, as permutations of element indices.
fn dihedral_symmetries(poset: &CharacteristicPoset) -> Vec<Vec<u32>> {
    let n = poset.ambient();
    let g = poset.bound();
    let strides = poset.strides();
    let mut out = Vec::new();
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for r in 0..n {
        maps.push((0..n).map(|j| (j + r) % n).collect());
        maps.push((0..n).map(|j| (n + r - j) % n).collect());
    }
    maps.sort();
    maps.dedup();
    'map: for map in maps {
        if map.iter().enumerate().all(|(j, &t)| j == t) || (0..n).any(|j| g[map[j]] != g[j]) {
            continue;
        }
        let mut perm = Vec::with_capacity(poset.len());
        for i in 0..poset.len() {
            let exps = poset.exponents(i);
            let code: u64 = (0..n).map(|j| exps[j] as u64 * strides[map[j]]).sum();
            match poset.index_of_code(code) {
                Some(k) => perm.push(k as u32),
                None => continue 'map,
            }
        }
        out.push(perm);
    }
    out
}

/// Calls `f` with each `r`-subset of `0..n` as an ascending index slice, in
/// lexicographic order.
fn for_each_combination(n: usize, r: usize, mut f: impl FnMut(&[usize])) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        f(&idx);
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - r + i {
                idx[i] += 1;
                for t in i + 1..r {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return;
            }
        }
    }
}

/// Stanley depth with its certificate.
#[derive(Clone, Debug)]
pub struct SdepthResult {
    pub value: usize,
    pub certificate: StanleyDecomposition,
    pub poset_size: usize,
    /// Whether the search at `value + 1` was run and failed (false only when
    /// `value` equals the ambient size).
    pub refuted_next: bool,
    pub nodes: u64,
}

/// Largest `k` admitting a partition, by binary search over `[0, n]`.
pub fn sdepth_of_pair(pair: &QuotientPresentation, opts: &SolverOptions) -> Result<SdepthResult> {
    let poset = build_poset_with(pair, &opts.poset)?;
    // S/I with I nonzero and proper is never free, so n is out of reach.
    let upper = if pair.is_cyclic_quotient() { pair.ambient() - 1 } else { pair.ambient() };
    sdepth_of_poset(&poset, upper, opts)
}

/// Binary search on a prebuilt poset, with `upper` a known bound on the answer.
pub fn sdepth_of_poset(poset: &CharacteristicPoset, upper: usize, opts: &SolverOptions) -> Result<SdepthResult> {
    let n = poset.ambient();
    let mut nodes = 0;
    let mut decide = |k: usize| -> Result<Option<StanleyDecomposition>> {
        let (d, stats) = exists_partition_stats(poset, k, opts)?;
        nodes += stats.nodes;
        Ok(d)
    };
    let mut best = decide(0)?.expect("singletons always partition");
    let (mut lo, mut hi) = (0usize, upper.min(n) + 1);
    let mut refuted_next = false;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match decide(mid)? {
            Some(d) => {
                lo = mid;
                best = d;
            }
            None => {
                hi = mid;
                refuted_next = hi == lo + 1;
            }
        }
    }
    if !refuted_next && lo < n {
        refuted_next = decide(lo + 1)?.is_none();
        debug_assert!(refuted_next, "upper bound {upper} was not valid");
    }
    Ok(SdepthResult { value: lo, certificate: best, poset_size: poset.len(), refuted_next, nodes })
}
