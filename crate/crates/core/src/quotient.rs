use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// The module `numerator / denominator` for monomial ideals
/// `denominator ⊆ numerator`.
///
/// `S/I` is presented as `(unit, I)`; the ideal `I` itself as `(I, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    numerator: MonomialIdeal,
    denominator: MonomialIdeal,
}

impl QuotientPresentation {
    pub fn new(numerator: MonomialIdeal, denominator: MonomialIdeal) -> Result<Self> {
        if numerator.ambient() != denominator.ambient() {
            return Err(Error::AmbientMismatch { left: numerator.ambient(), right: denominator.ambient() });
        }
        if !numerator.contains_ideal(&denominator) {
            return Err(Error::InvalidPresentation(format!(
                "denominator {denominator} is not contained in numerator {numerator}"
            )));
        }
        if numerator == denominator {
            return Err(Error::InvalidPresentation("module is zero".into()));
        }
        Ok(QuotientPresentation { numerator, denominator })
    }

    /// `S/I`.
    pub fn quotient_ring(ideal: MonomialIdeal) -> Result<Self> {
        let unit = MonomialIdeal::unit(ideal.ambient());
        Self::new(unit, ideal)
    }

    /// The ideal `I` viewed as a module.
    pub fn ideal_module(ideal: MonomialIdeal) -> Result<Self> {
        let zero = MonomialIdeal::zero(ideal.ambient());
        Self::new(ideal, zero)
    }

    pub fn numerator(&self) -> &MonomialIdeal {
        &self.numerator
    }

    pub fn denominator(&self) -> &MonomialIdeal {
        &self.denominator
    }

    pub fn ambient(&self) -> usize {
        self.numerator.ambient()
    }

    /// True for `S/I` with `I` nonzero and proper.
    pub fn is_cyclic_quotient(&self) -> bool {
        self.numerator.is_unit() && !self.denominator.is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.numerator.is_squarefree() && self.denominator.is_squarefree()
    }
}
