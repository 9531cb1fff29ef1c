//! Path ideals of the line graph `L_n` and the cycle graph `C_n`, their closed
//! depth formulas, and the colon/sum tower used to bound Stanley depth.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, MAX_AMBIENT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Line,
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyInstance {
    pub kind: FamilyKind,
    pub n: usize,
    pub m: usize,
}

/// Shortcut cases where the family collapses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degenerate {
    /// `m = n`: a principal ideal.
    Principal,
    /// `m = 1`: the maximal ideal, quotient is the field.
    Maximal,
}

impl FamilyInstance {
    pub fn new(kind: FamilyKind, n: usize, m: usize) -> Result<Self> {
        check_bounds(n, m)?;
        Ok(FamilyInstance { kind, n, m })
    }

    pub fn degenerate(&self) -> Option<Degenerate> {
        if self.m == self.n {
            Some(Degenerate::Principal)
        } else if self.m == 1 {
            Some(Degenerate::Maximal)
        } else {
            None
        }
    }

    pub fn ideal(&self) -> MonomialIdeal {
        match self.kind {
            FamilyKind::Line => line_path_ideal(self.n, self.m),
            FamilyKind::Cycle => cycle_path_ideal(self.n, self.m),
        }
        .expect("bounds checked at construction")
    }
}

fn check_bounds(n: usize, m: usize) -> Result<()> {
    if m < 1 || m > n || n > MAX_AMBIENT {
        return Err(Error::FamilyBounds(format!("need 1 <= m <= n <= 20, got n={n}, m={m}")));
    }
    Ok(())
}

/// Squarefree monomial on the consecutive indices `start..start+len`, taken
/// cyclically modulo `n` (1-based).
pub fn cyclic_window(n: usize, start: usize, len: usize) -> Monomial {
    Monomial::squarefree(n, (0..len).map(|o| (start - 1 + o) % n + 1)).expect("indices in range")
}

/// `I_{n,m}`: the `m`-path ideal of the line graph.
pub fn line_path_ideal(n: usize, m: usize) -> Result<MonomialIdeal> {
    check_bounds(n, m)?;
    MonomialIdeal::minimalize((1..=n - m + 1).map(|i| cyclic_window(n, i, m)), n)
}

/// `J_{n,m}`: the `m`-path ideal of the cycle graph.
pub fn cycle_path_ideal(n: usize, m: usize) -> Result<MonomialIdeal> {
    check_bounds(n, m)?;
    MonomialIdeal::minimalize((1..=n).map(|i| cyclic_window(n, i, m)), n)
}

/// `n + 1 - floor((n+1)/(m+1)) - ceil((n+1)/(m+1))`, the depth of `S/I_{n,m}`.
pub fn phi(n: usize, m: usize) -> i64 {
    let (q, c) = floor_ceil(n as i64 + 1, m as i64 + 1);
    n as i64 + 1 - q - c
}

/// `n - floor(n/(m+1)) - ceil(n/(m+1))`, the depth of `S/J_{n,m}`.
pub fn psi(n: usize, m: usize) -> i64 {
    let (q, c) = floor_ceil(n as i64, m as i64 + 1);
    n as i64 - q - c
}

fn floor_ceil(a: i64, b: i64) -> (i64, i64) {
    debug_assert!(a >= 0 && b > 0);
    (a / b, (a + b - 1) / b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaRecord {
    pub phi: i64,
    pub psi: i64,
    pub pd_line: i64,
    pub pd_cycle: i64,
    pub depth_line: i64,
    pub depth_cycle: i64,
    /// `floor(n/(m+1))`.
    pub p: i64,
    /// `n - (m+1)p`.
    pub d: i64,
}

/// Evaluates every closed formula for the pair `(n, m)`.
pub fn formula_table(n: usize, m: usize) -> Result<FormulaRecord> {
    check_bounds(n, m)?;
    let (ni, mi) = (n as i64, m as i64);
    let p = ni / (mi + 1);
    let d = ni - (mi + 1) * p;
    let pd_cycle = if d != 0 { 2 * p + 1 } else { 2 * p };
    let dl = ni % (mi + 1);
    let pd_line = if dl < mi { 2 * (ni - dl) / (mi + 1) } else { (2 * ni - mi + 1) / (mi + 1) };
    Ok(FormulaRecord {
        phi: phi(n, m),
        psi: psi(n, m),
        pd_line,
        pd_cycle,
        depth_line: ni - pd_line,
        depth_cycle: ni - pd_cycle,
        p,
        d,
    })
}

/// One level of the colon/sum tower: `L_k` and `U_k = (L_k, x_{n-k})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerLevel {
    pub k: usize,
    pub l: MonomialIdeal,
    pub u: MonomialIdeal,
}

/// `L_0 = J_{n,m}`, `L_{k+1} = (L_k : x_{n-k})`, `U_k = (L_k, x_{n-k})` for
/// `k = 0..m-1`. Requires `3 <= m + 1 < n`.
pub fn proof_tower(n: usize, m: usize) -> Result<Vec<TowerLevel>> {
    check_bounds(n, m)?;
    if m < 2 || m + 1 >= n {
        return Err(Error::FamilyBounds(format!("tower needs 3 <= m+1 < n, got n={n}, m={m}")));
    }
    let mut levels = Vec::with_capacity(m);
    let mut l = cycle_path_ideal(n, m)?;
    for k in 0..m {
        let x = Monomial::var(n, n - k)?;
        let u = l.add_generators([x.clone()])?;
        let next = l.colon(&x)?;
        levels.push(TowerLevel { k, l, u });
        l = next;
    }
    Ok(levels)
}

/// `V_{k,j} = (x_1...x_{m-j}, x_2...x_{m+1}, ..., x_{n-m-k}...x_{n-k-1})` in
/// `n-k-1` variables. Requires `0 <= j <= k <= m-2` and `n-m-k >= 2`.
pub fn v_ideal(n: usize, m: usize, k: usize, j: usize) -> Result<MonomialIdeal> {
    check_bounds(n, m)?;
    if m < 2 || j > k || k > m - 2 || n < m + k + 2 {
        return Err(Error::FamilyBounds(format!(
            "V needs 0 <= j <= k <= m-2 and n-m-k >= 2, got n={n}, m={m}, k={k}, j={j}"
        )));
    }
    let amb = n - k - 1;
    let head = Monomial::squarefree(amb, 1..=m - j)?;
    let windows = (2..=n - m - k).map(|i| Monomial::squarefree(amb, i..i + m).expect("in range"));
    MonomialIdeal::minimalize(std::iter::once(head).chain(windows.collect::<Vec<_>>()), amb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal(s).unwrap()
    }

    #[test]
    fn line_family() {
        assert_eq!(line_path_ideal(4, 2).unwrap(), ideal("n=4: x1*x2, x2*x3, x3*x4"));
        assert!(line_path_ideal(6, 6).unwrap().is_principal());
        assert_eq!(line_path_ideal(5, 1).unwrap().gens().len(), 5);
        assert!(line_path_ideal(3, 4).is_err());
        assert!(line_path_ideal(3, 0).is_err());
    }

    #[test]
    fn cycle_family() {
        assert_eq!(cycle_path_ideal(5, 2).unwrap(), ideal("n=5: x1*x2, x2*x3, x3*x4, x4*x5, x5*x1"));
        assert_eq!(cycle_path_ideal(5, 5).unwrap(), ideal("n=5: x1*x2*x3*x4*x5"));
        let max = cycle_path_ideal(4, 1).unwrap();
        assert_eq!(max, ideal("n=4: x1, x2, x3, x4"));
        assert_eq!(FamilyInstance::new(FamilyKind::Cycle, 4, 4).unwrap().degenerate(), Some(Degenerate::Principal));
        assert_eq!(FamilyInstance::new(FamilyKind::Cycle, 4, 1).unwrap().degenerate(), Some(Degenerate::Maximal));
    }

    #[test]
    fn cycle_generators_rotate() {
        for n in 3..=12 {
            for m in 2..n {
                let j = cycle_path_ideal(n, m).unwrap();
                assert_eq!(j.gens().len(), n);
                assert!(j.gens().iter().all(|g| g.is_squarefree() && g.degree() == m as u32));
                let rot: Vec<_> = (0..n).map(|i| Some((i + 1) % n + 1)).collect();
                assert_eq!(j.relabel(&rot, n).unwrap(), j);
            }
        }
    }

    #[test]
    fn formula_examples() {
        let r = formula_table(6, 2).unwrap();
        assert_eq!((r.phi, r.psi, r.pd_cycle, r.depth_cycle), (2, 2, 4, 2));
        let r = formula_table(9, 3).unwrap();
        assert_eq!((r.phi, r.psi, r.pd_cycle, r.p, r.d), (5, 4, 5, 2, 1));
        for n in 1..=20 {
            assert_eq!(formula_table(n, n).unwrap().phi, n as i64 - 1);
        }
    }

    #[test]
    fn formula_identities_over_grid() {
        for n in 1..=20 {
            for m in 1..=n {
                let r = formula_table(n, m).unwrap();
                let ni = n as i64;
                assert_eq!(r.depth_line, ni - r.pd_line);
                assert_eq!(r.depth_cycle, ni - r.pd_cycle);
                assert_eq!(r.depth_line, r.phi, "line depth at ({n},{m})");
                assert_eq!(r.depth_cycle, r.psi, "cycle depth at ({n},{m})");
                assert!(0 <= r.d && r.d <= m as i64);
                if n >= 2 {
                    assert_eq!(r.psi, phi(n - 1, m), "psi(n,m) = phi(n-1,m) at ({n},{m})");
                }
                let equal = n % (m + 1) == 0 || n % (m + 1) == m;
                assert_eq!(r.phi == r.psi, equal, "({n},{m})");
            }
        }
    }

    #[test]
    fn tower_7_3() {
        let t = proof_tower(7, 3).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].l, cycle_path_ideal(7, 3).unwrap());
        assert_eq!(t[1].l, ideal("n=7: x1*x2, x2*x3*x4, x3*x4*x5, x5*x6, x6*x1"));
        assert_eq!(t[2].l, ideal("n=7: x1, x2*x3*x4, x5"));
        assert_eq!(t[0].u, ideal("n=7: x7, x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x6"));
        assert!(proof_tower(4, 3).is_err());
        assert!(proof_tower(5, 1).is_err());
    }

    #[test]
    fn tower_sum_structure() {
        for n in 4..=14 {
            for m in 2..n - 1 {
                for level in proof_tower(n, m).unwrap() {
                    let x = Monomial::var(n, n - level.k).unwrap();
                    let expected = MonomialIdeal::minimalize(
                        level.l.gens().iter().filter(|g| !x.divides(g)).cloned().chain(std::iter::once(x.clone())),
                        n,
                    )
                    .unwrap();
                    assert_eq!(level.u, expected, "U_{} at ({n},{m})", level.k);
                }
            }
        }
    }

    #[test]
    fn v_ideals() {
        assert_eq!(v_ideal(7, 3, 1, 1).unwrap(), ideal("n=5: x1*x2, x2*x3*x4, x3*x4*x5"));
        for n in 5..=14usize {
            for m in 2..n {
                for k in 0..=m.saturating_sub(2) {
                    if n < m + k + 2 {
                        continue;
                    }
                    assert_eq!(v_ideal(n, m, k, 0).unwrap(), line_path_ideal(n - k - 1, m).unwrap());
                }
            }
        }
        assert!(v_ideal(7, 3, 0, 1).is_err());
        assert!(v_ideal(7, 3, 2, 0).is_err());
    }

    #[test]
    fn sum_level_matches_v_ideal() {
        // S/U_k is S_k/V_{k,k} with the variables past x_{n-k} adjoined freely.
        for n in 5..=12 {
            for m in 3..n - 1 {
                for level in proof_tower(n, m).unwrap() {
                    let k = level.k;
                    if k > m - 2 || n < m + k + 2 {
                        continue;
                    }
                    let x = Monomial::var(n, n - k).unwrap();
                    let rest: Vec<Monomial> = level.u.gens().iter().filter(|g| **g != x).cloned().collect();
                    let rest = MonomialIdeal::minimalize(rest, n).unwrap();
                    let map: Vec<_> = (1..=n).map(|i| (i < n - k).then_some(i)).collect();
                    assert_eq!(rest.relabel(&map, n - k - 1).unwrap(), v_ideal(n, m, k, k).unwrap());
                }
            }
        }
    }
}
