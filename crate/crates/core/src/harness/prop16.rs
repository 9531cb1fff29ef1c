//! Component structure of `J_{n,m}/I_{n,m}`.
//!
//! A squarefree `F` with `x_F` in `J` but not in `I` must contain one of the
//! wrap-around windows `W_t = {n-m+t+1, ..., n, 1, ..., t}` (`t = 1..m-1`).
//! Assigning `F` to the least such `t`, the residuals `F \ W_t` form a
//! line-type Stanley-Reisner family on `V_t = {t+1, ..., n-m+t-1}`, whose
//! minimal non-faces are the truncated window `{t+1, ..., m}` and the full
//! length-`m` windows inside `V_t`. Each component then contributes depth
//! `depth(K[V_t]/N_t) + m`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{cycle_path_ideal, line_path_ideal, psi};
use crate::hochster::depth_squarefree;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub const MAX_STRUCTURE_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub t: usize,
    /// `W_t`, 1-based.
    pub window: Vec<usize>,
    /// The variable that no element of this component contains.
    pub forced: usize,
    /// `V_t`, 1-based.
    pub residual_vars: Vec<usize>,
    pub residual_size: usize,
    pub minimal_nonfaces: Vec<Vec<usize>>,
    pub expected_nonfaces: Vec<Vec<usize>>,
    pub downward_closed: bool,
    pub residual_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop16Report {
    pub n: usize,
    pub m: usize,
    pub elements: usize,
    pub components: Vec<ComponentReport>,
    pub derived_depth: i64,
    pub expected_depth: i64,
    /// Structural mismatches; empty when the component description holds.
    pub failures: Vec<String>,
}

impl Prop16Report {
    pub fn structure_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn depth_matches(&self) -> bool {
        self.derived_depth == self.expected_depth
    }

    pub fn passed(&self) -> bool {
        self.structure_ok() && self.depth_matches()
    }
}

fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect()
}

fn range_mask(lo: usize, hi: usize) -> u32 {
    (lo..=hi).fold(0, |m, i| m | 1 << (i - 1))
}

pub fn prop16_structure_check(n: usize, m: usize) -> Result<Prop16Report> {
    if m < 2 || m >= n || n > MAX_STRUCTURE_N {
        return Err(Error::FamilyBounds(format!("structure check needs 2 <= m < n <= 12, got n={n}, m={m}")));
    }
    let j = cycle_path_ideal(n, m)?;
    let i = line_path_ideal(n, m)?;
    let windows: Vec<u32> = (1..m).map(|t| range_mask(n - m + t + 1, n) | range_mask(1, t)).collect();

    let mut failures = Vec::new();
    let mut residuals: Vec<Vec<u32>> = vec![Vec::new(); m - 1];
    let mut elements = 0;
    for f in 0..(1u32 << n) {
        let x = Monomial::from_mask(n, f);
        if !j.contains(&x) || i.contains(&x) {
            continue;
        }
        elements += 1;
        match windows.iter().position(|&w| w & f == w) {
            Some(t0) => residuals[t0].push(f & !windows[t0]),
            None => failures.push(format!("{x} contains no wrap window")),
        }
    }

    let mut components = Vec::with_capacity(m - 1);
    let mut derived = i64::MAX;
    for t in 1..m {
        let family = &residuals[t - 1];
        let forced = n - m + t;
        let vars = if t < n - m + t - 1 { range_mask(t + 1, n - m + t - 1) } else { 0 };
        let in_family = |g: u32| family.binary_search(&g).is_ok();

        if family.iter().any(|&g| g & !vars != 0) {
            failures.push(format!("t={t}: residual leaves V_t"));
        }
        if family.iter().any(|&g| g >> (forced - 1) & 1 == 1) {
            failures.push(format!("t={t}: forced variable x{forced} appears"));
        }
        let downward_closed = family.iter().all(|&g| {
            let mut rest = g;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if !in_family(g & !v) {
                    return false;
                }
            }
            true
        });
        if !downward_closed {
            failures.push(format!("t={t}: residual family is not downward closed"));
        }

        let mut minimal = Vec::new();
        let mut sub = vars;
        loop {
            if !in_family(sub) {
                let mut rest = sub;
                let mut all_below = true;
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    if !in_family(sub & !v) {
                        all_below = false;
                        break;
                    }
                }
                if all_below {
                    minimal.push(sub);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & vars;
        }
        minimal.sort_by_key(|&g| (g.count_ones(), g));

        let last = n - m + t - 1;
        let mut expected = Vec::new();
        if m <= last {
            expected.push(range_mask(t + 1, m));
        }
        for s in t + 2..=last.saturating_sub(m - 1) {
            expected.push(range_mask(s, s + m - 1));
        }
        expected.sort_by_key(|&g| (g.count_ones(), g));
        if minimal != expected {
            failures.push(format!(
                "t={t}: minimal non-faces {:?} differ from expected windows {:?}",
                minimal.iter().map(|&g| indices(g)).collect::<Vec<_>>(),
                expected.iter().map(|&g| indices(g)).collect::<Vec<_>>()
            ));
        }

        let residual_size = vars.count_ones() as usize;
        let residual_depth = residual_depth(vars, &minimal)?;
        derived = derived.min(residual_depth as i64 + m as i64);
        components.push(ComponentReport {
            t,
            window: indices(windows[t - 1]),
            forced,
            residual_vars: indices(vars),
            residual_size,
            minimal_nonfaces: minimal.iter().map(|&g| indices(g)).collect(),
            expected_nonfaces: expected.iter().map(|&g| indices(g)).collect(),
            downward_closed,
            residual_depth,
        });
    }
    let expected_depth = psi(n, m) + m as i64 - 1;
    Ok(Prop16Report { n, m, elements, components, derived_depth: derived, expected_depth, failures })
}

/// Depth of `K[V]/N` where `N` is generated by the given squarefree supports,
/// relabelled onto `1..|V|`.
fn residual_depth(vars: u32, nonfaces: &[u32]) -> Result<usize> {
    let size = vars.count_ones() as usize;
    if nonfaces.is_empty() {
        return Ok(size);
    }
    let order: Vec<u32> = (0..32).filter(|j| vars >> j & 1 == 1).collect();
    let relabel = |g: u32| -> Monomial {
        let local = order.iter().enumerate().filter(|(_, &j)| g >> j & 1 == 1).map(|(i, _)| i + 1);
        Monomial::squarefree(size, local).expect("inside V")
    };
    let ideal = MonomialIdeal::minimalize(nonfaces.iter().map(|&g| relabel(g)), size)?;
    depth_squarefree(&ideal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_two() {
        let r = prop16_structure_check(4, 2).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.elements, 1);
        assert_eq!(r.components[0].residual_vars, vec![2]);
        assert_eq!(r.components[0].minimal_nonfaces, vec![vec![2]]);
        assert_eq!(r.derived_depth, 2);
    }

    #[test]
    fn five_two() {
        let r = prop16_structure_check(5, 2).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.elements, 2);
        let c = &r.components[0];
        assert_eq!(c.window, vec![1, 5]);
        assert_eq!(c.forced, 4);
        assert_eq!(c.residual_vars, vec![2, 3]);
        assert_eq!(c.minimal_nonfaces, vec![vec![2]]);
        assert_eq!(r.derived_depth, 3);
    }

    #[test]
    fn seven_three() {
        let r = prop16_structure_check(7, 3).unwrap();
        assert!(r.structure_ok(), "{:?}", r.failures);
        let c = &r.components[0];
        assert_eq!(c.window, vec![1, 6, 7]);
        assert_eq!(c.residual_vars, vec![2, 3, 4]);
        assert_eq!(c.minimal_nonfaces, vec![vec![2, 3]]);
        // K[x2,x3,x4]/(x2x3) and K[x3,x4,x5]/(x3) both have depth 2, so each
        // component has depth 5, one below psi+m-1. The module has dimension
        // 5 (no 6-subset of 1..7 avoids three consecutive indices).
        assert_eq!(r.components[1].minimal_nonfaces, vec![vec![3]]);
        assert_eq!((r.derived_depth, r.expected_depth), (5, 6));
        assert!(!r.depth_matches());
    }

    #[test]
    fn bounds() {
        assert!(prop16_structure_check(13, 2).is_err());
        assert!(prop16_structure_check(5, 1).is_err());
        assert!(prop16_structure_check(5, 5).is_err());
    }
}
