use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal held by its minimal generators in canonical order.
///
/// The zero ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: vec![Monomial::one(ambient)] }
    }

    /// Builds the ideal generated by `gens`, keeping only minimal generators.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, ambient: usize) -> Result<Self> {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.ambient() != ambient) {
            return Err(Error::AmbientMismatch { left: ambient, right: g.ambient() });
        }
        gens.sort();
        gens.dedup();
        // In graded order a divisor always precedes its multiples.
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        Ok(MonomialIdeal { ambient, gens: kept })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// The colon ideal `(self : u)`.
    pub fn colon(&self, u: &Monomial) -> Result<Self> {
        self.check_ambient(u.ambient())?;
        let quotients = self.gens.iter().map(|g| {
            // g / gcd(g, u) always exists.
            g.div(&g.gcd(u)).expect("gcd divides")
        });
        MonomialIdeal::minimalize(quotients, self.ambient)
    }

    /// The ideal `(self, extra)`.
    pub fn add_generators(&self, extra: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let extra: Vec<Monomial> = extra.into_iter().collect();
        for e in &extra {
            self.check_ambient(e.ambient())?;
        }
        MonomialIdeal::minimalize(self.gens.iter().cloned().chain(extra), self.ambient)
    }

    /// Renames variables: `map[j]` is the new 1-based index for old variable
    /// `x{j+1}`, or `None` if unmapped. The map must be injective and defined on
    /// the support of every generator.
    pub fn relabel(&self, map: &[Option<usize>], new_ambient: usize) -> Result<Self> {
        let mut seen = vec![false; new_ambient + 1];
        for &target in map.iter().flatten() {
            if target == 0 || target > new_ambient {
                return Err(Error::IndexOutOfRange { index: target, ambient: new_ambient });
            }
            if seen[target] {
                return Err(Error::NotInjective(target));
            }
            seen[target] = true;
        }
        let mut renamed = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut exps = vec![0u8; new_ambient];
            for (j, &e) in g.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map.get(j).copied().flatten() {
                    Some(t) => exps[t - 1] = e,
                    None => return Err(Error::UnmappedIndex(j + 1)),
                }
            }
            renamed.push(Monomial::from_exps_unchecked(exps));
        }
        MonomialIdeal::minimalize(renamed, new_ambient)
    }

    /// Least common multiple of all generators (the zero monomial exponent for
    /// the zero ideal).
    pub fn lcm_exponents(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.ambient];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if other != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other });
        }
        Ok(())
    }
}

/// Formats in the textual ideal grammar, e.g. `n=3: x1*x2, x2*x3`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}: ", self.ambient)?;
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use proptest::prelude::*;

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal(s).unwrap()
    }

    fn mono(n: usize, idx: &[usize]) -> Monomial {
        Monomial::squarefree(n, idx.iter().copied()).unwrap()
    }

    #[test]
    fn minimalize_absorbs_multiples() {
        let i = MonomialIdeal::minimalize([mono(2, &[1, 2]), mono(2, &[1])], 2).unwrap();
        assert_eq!(i.to_string(), "n=2: x1");
        let empty = MonomialIdeal::minimalize(Vec::new(), 3).unwrap();
        assert!(empty.is_zero());
    }

    #[test]
    fn minimalize_dedups_identical_windows() {
        let window = mono(4, &[1, 2, 3, 4]);
        let i = MonomialIdeal::minimalize(vec![window; 4], 4).unwrap();
        assert!(i.is_principal());
    }

    #[test]
    fn colon_examples() {
        let j43 = ideal("n=4: x1*x2*x3, x2*x3*x4, x3*x4*x1, x4*x1*x2");
        let c = j43.colon(&Monomial::var(4, 4).unwrap()).unwrap();
        assert_eq!(c, ideal("n=4: x1*x2, x2*x3, x3*x1"));
        assert_eq!(j43.colon(&Monomial::one(4)).unwrap(), j43);

        let j73 = ideal("n=7: x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x6, x5*x6*x7, x6*x7*x1, x7*x1*x2");
        let c = j73.colon(&Monomial::var(7, 7).unwrap()).unwrap();
        assert_eq!(c, ideal("n=7: x1*x2, x5*x6, x6*x1, x2*x3*x4, x3*x4*x5"));
    }

    #[test]
    fn add_generators_examples() {
        let j73 = ideal("n=7: x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x6, x5*x6*x7, x6*x7*x1, x7*x1*x2");
        let u = j73.add_generators([Monomial::var(7, 7).unwrap()]).unwrap();
        assert_eq!(u, ideal("n=7: x7, x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x6"));
        assert!(j73.add_generators([Monomial::one(7)]).unwrap().is_unit());
        let z = MonomialIdeal::zero(2).add_generators([Monomial::var(2, 1).unwrap()]).unwrap();
        assert_eq!(z, ideal("n=2: x1"));
    }

    #[test]
    fn membership() {
        let j53 = ideal("n=5: x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x1, x5*x1*x2");
        assert!(j53.contains(&mono(5, &[1, 2, 3])));
        assert!(!j53.contains(&mono(5, &[1, 3])));
        assert!(!MonomialIdeal::zero(5).contains(&Monomial::one(5)));
    }

    #[test]
    fn relabel_examples() {
        let j43 = ideal("n=4: x1*x2*x3, x2*x3*x4, x3*x4*x1, x4*x1*x2");
        let c = j43.colon(&Monomial::var(4, 4).unwrap()).unwrap();
        let r = c.relabel(&[Some(1), Some(2), Some(3), None], 3).unwrap();
        assert_eq!(r, ideal("n=3: x1*x2, x2*x3, x3*x1"));
        let id: Vec<_> = (1..=4).map(Some).collect();
        assert_eq!(j43.relabel(&id, 4).unwrap(), j43);
        assert_eq!(j43.relabel(&[Some(1), Some(2), Some(3), None], 3), Err(Error::UnmappedIndex(4)));
        assert_eq!(j43.relabel(&[Some(1), Some(1), Some(2), Some(3)], 3), Err(Error::NotInjective(1)));
    }

    fn arb_monomial(n: usize, max_deg: u8) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0..=max_deg, n)
            .prop_filter("degree bound", move |e| e.iter().map(|&x| x as u32).sum::<u32>() <= max_deg as u32)
            .prop_map(|e| Monomial::from_exponents(e).unwrap())
    }

    fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(arb_monomial(n, 3), 0..=5).prop_map(move |g| MonomialIdeal::minimalize(g, n).unwrap())
    }

    proptest! {
        #[test]
        fn minimalize_is_idempotent_and_order_free(
            gens in proptest::collection::vec(arb_monomial(4, 3), 0..8),
            seed in any::<u64>(),
        ) {
            let a = MonomialIdeal::minimalize(gens.clone(), 4).unwrap();
            let mut shuffled = gens.clone();
            let len = shuffled.len().max(1);
            shuffled.rotate_left((seed as usize) % len);
            shuffled.reverse();
            prop_assert_eq!(&MonomialIdeal::minimalize(shuffled, 4).unwrap(), &a);
            prop_assert_eq!(&MonomialIdeal::minimalize(a.gens().to_vec(), 4).unwrap(), &a);
            for (i, g) in a.gens().iter().enumerate() {
                for (j, h) in a.gens().iter().enumerate() {
                    prop_assert!(i == j || !g.divides(h));
                }
            }
            for g in &gens {
                prop_assert!(a.contains(g));
            }
        }

        #[test]
        fn colon_composes(i in arb_ideal(4), u in arb_monomial(4, 3), v in arb_monomial(4, 3)) {
            let lhs = i.colon(&u).unwrap().colon(&v).unwrap();
            let rhs = i.colon(&u.mul(&v).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            prop_assert!(i.colon(&u).unwrap().contains_ideal(&i));
        }

        #[test]
        fn membership_is_monotone(i in arb_ideal(5), u in arb_monomial(5, 3), v in arb_monomial(5, 2)) {
            let uv = u.mul(&v).unwrap();
            if i.contains(&u) {
                prop_assert!(i.contains(&uv));
            }
            prop_assert_eq!(i.contains(&u), i.gens().iter().any(|g| g.divides(&u)));
        }

        #[test]
        fn format_parse_round_trip(i in arb_ideal(5)) {
            prop_assert_eq!(parse_ideal(&i.to_string()).unwrap(), i);
        }
    }
}
