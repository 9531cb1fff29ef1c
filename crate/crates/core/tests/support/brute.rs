//! Exhaustive interval-partition search, independent of the library's poset
//! and solver code. Works on raw exponent vectors.

#![allow(dead_code)]

pub struct BrutePoset {
    pub bound: Vec<u8>,
    pub elements: Vec<Vec<u8>>,
}

fn divides(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn in_ideal(gens: &[Vec<u8>], a: &[u8]) -> bool {
    gens.iter().any(|g| divides(g, a))
}

/// Elements `a <= g` with `x^a` in `(num)` but not in `(den)`, where `g` is the
/// coordinatewise maximum of all generators. An empty `num` list means the
/// unit ideal.
pub fn brute_poset(n: usize, num: &[Vec<u8>], den: &[Vec<u8>]) -> BrutePoset {
    let mut bound = vec![0u8; n];
    for g in num.iter().chain(den) {
        for j in 0..n {
            bound[j] = bound[j].max(g[j]);
        }
    }
    let mut elements = Vec::new();
    let mut a = vec![0u8; n];
    loop {
        let in_num = num.is_empty() || in_ideal(num, &a);
        if in_num && !in_ideal(den, &a) {
            elements.push(a.clone());
        }
        let mut j = 0;
        while j < n && a[j] == bound[j] {
            a[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
        a[j] += 1;
    }
    BrutePoset { bound, elements }
}

impl BrutePoset {
    fn rho(&self, b: &[u8]) -> usize {
        b.iter().zip(&self.bound).filter(|(x, g)| x == g).count()
    }

    /// All intervals `[a, b]` of the poset, as (member indices, rho of top).
    fn intervals(&self) -> Vec<(Vec<usize>, usize)> {
        let mut out = Vec::new();
        for a in &self.elements {
            for b in &self.elements {
                if !divides(a, b) {
                    continue;
                }
                let members: Vec<usize> = (0..self.elements.len())
                    .filter(|&i| divides(a, &self.elements[i]) && divides(&self.elements[i], b))
                    .collect();
                let box_size: usize = a.iter().zip(b).map(|(x, y)| (y - x) as usize + 1).product();
                if members.len() == box_size {
                    out.push((members, self.rho(b)));
                }
            }
        }
        out
    }

    /// Maximum over all interval partitions of the minimum `rho` of the tops,
    /// with the number of partitions enumerated.
    pub fn best(&self) -> (usize, u64) {
        let intervals = self.intervals();
        let mut by_first: Vec<Vec<usize>> = vec![Vec::new(); self.elements.len()];
        for (idx, (members, _)) in intervals.iter().enumerate() {
            for &e in members {
                by_first[e].push(idx);
            }
        }
        let mut covered = vec![false; self.elements.len()];
        let mut best = None;
        let mut count = 0;
        search(&intervals, &by_first, &mut covered, usize::MAX, &mut best, &mut count);
        (best.expect("singletons always partition"), count)
    }
}

fn search(
    intervals: &[(Vec<usize>, usize)],
    containing: &[Vec<usize>],
    covered: &mut [bool],
    current: usize,
    best: &mut Option<usize>,
    count: &mut u64,
) {
    let Some(e) = covered.iter().position(|c| !c) else {
        *count += 1;
        let value = if current == usize::MAX { 0 } else { current };
        *best = Some(best.map_or(value, |b| b.max(value)));
        return;
    };
    for &idx in &containing[e] {
        let (members, rho) = &intervals[idx];
        if members.iter().any(|&i| covered[i]) {
            continue;
        }
        members.iter().for_each(|&i| covered[i] = true);
        search(intervals, containing, covered, current.min(*rho), best, count);
        members.iter().for_each(|&i| covered[i] = false);
    }
}
