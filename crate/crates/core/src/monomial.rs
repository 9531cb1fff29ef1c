use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest exponent accepted for any variable.
pub const MAX_EXPONENT: u8 = 30;
/// Largest ambient variable count.
pub const MAX_AMBIENT: usize = 20;

/// A monomial `x^a` over a fixed number of variables.
///
/// Index `i` of the exponent vector is the variable written `x{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    pub fn one(ambient: usize) -> Self {
        Monomial { exps: vec![0; ambient] }
    }

    pub fn from_exponents(exps: Vec<u8>) -> Result<Self> {
        if let Some(&e) = exps.iter().find(|&&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentOutOfRange { exponent: e as u32, max: MAX_EXPONENT });
        }
        Ok(Monomial { exps })
    }

    /// The variable `x{index}` (1-based, as written).
    pub fn var(ambient: usize, index: usize) -> Result<Self> {
        if index == 0 || index > ambient {
            return Err(Error::IndexOutOfRange { index, ambient });
        }
        let mut exps = vec![0; ambient];
        exps[index - 1] = 1;
        Ok(Monomial { exps })
    }

    /// Squarefree monomial `x_F` for 1-based indices.
    pub fn squarefree(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut exps = vec![0; ambient];
        for index in indices {
            if index == 0 || index > ambient {
                return Err(Error::IndexOutOfRange { index, ambient });
            }
            exps[index - 1] = 1;
        }
        Ok(Monomial { exps })
    }

    /// Squarefree monomial from a bitmask, bit `j` standing for `x{j+1}`.
    pub fn from_mask(ambient: usize, mask: u32) -> Self {
        Monomial { exps: (0..ambient).map(|j| ((mask >> j) & 1) as u8).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn exponent(&self, j: usize) -> u8 {
        self.exps[j]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Support as a bitmask (bit `j` for `x{j+1}`).
    pub fn support_mask(&self) -> u32 {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (j, _)| m | (1 << j))
    }

    /// 1-based indices of the support, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, _)| j + 1).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    /// Product; fails when an exponent would exceed the cap.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps: Vec<u8> = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.saturating_add(b)).collect();
        Monomial::from_exponents(exps)
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a - b).collect() })
    }

    /// The variable indices (1-based) of `self` written as a sorted word, with
    /// repeated variables adjacent: `x1^2*x3` gives `[1, 1, 3]`.
    pub fn index_word(&self) -> Vec<usize> {
        self.exps.iter().enumerate().flat_map(|(j, &e)| std::iter::repeat_n(j + 1, e as usize)).collect()
    }

    pub(crate) fn from_exps_unchecked(exps: Vec<u8>) -> Self {
        Monomial { exps }
    }
}

/// Graded order: total degree first, then the sorted index word
/// lexicographically, so `x1*x2 < x1*x3 < x2*x3`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", j + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u8]) -> Monomial {
        Monomial::from_exponents(exps.to_vec()).unwrap()
    }

    #[test]
    fn order_is_graded_then_index_word() {
        let mut v = [m(&[0, 1, 1]), m(&[1, 0, 1]), m(&[1, 1, 0]), m(&[2, 0, 0]), m(&[0, 0, 1])];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["x3", "x1^2", "x1*x2", "x1*x3", "x2*x3"]);
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = m(&[1, 1, 0]);
        let b = m(&[2, 1, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a), Some(m(&[1, 0, 1])));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.gcd(&m(&[0, 3, 1])), m(&[0, 1, 0]));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
    }

    #[test]
    fn exponent_cap() {
        assert!(Monomial::from_exponents(vec![31]).is_err());
        assert!(m(&[20]).mul(&m(&[11])).is_err());
        assert_eq!(m(&[1, 2]).index_word(), vec![1, 2, 2]);
    }

    #[test]
    fn squarefree_predicate() {
        assert!(m(&[1, 0, 1]).is_squarefree());
        assert!(!m(&[2, 0, 0]).is_squarefree());
        assert_eq!(Monomial::from_mask(3, 0b101), m(&[1, 0, 1]));
        assert_eq!(m(&[1, 0, 1]).support_mask(), 0b101);
    }
}
