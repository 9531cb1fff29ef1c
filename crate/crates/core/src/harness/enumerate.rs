//! Canonical enumeration of small monomial ideals.

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_ambient: usize,
    pub max_gens: usize,
    pub max_exponent: u8,
}

/// Every nonzero proper ideal in `1..=max_ambient` variables whose minimal
/// generators number at most `max_gens` and have exponents at most
/// `max_exponent`. Each ideal appears once, with generator sets enumerated
/// as increasing tuples in the canonical monomial order.
pub fn small_ideals(bounds: EnumerationBounds) -> Result<Vec<MonomialIdeal>> {
    let mut out = Vec::new();
    for n in 1..=bounds.max_ambient {
        let mut monos = Vec::new();
        let base = bounds.max_exponent as usize + 1;
        for code in 1..base.pow(n as u32) {
            let exps: Vec<u8> = (0..n).map(|j| (code / base.pow(j as u32) % base) as u8).collect();
            monos.push(Monomial::from_exponents(exps)?);
        }
        monos.sort();
        let mut chosen = Vec::new();
        extend(&monos, 0, bounds.max_gens, &mut chosen, &mut |gens| {
            out.push(MonomialIdeal::minimalize(gens.iter().cloned(), n));
        });
    }
    out.into_iter().collect()
}

fn extend(
    monos: &[Monomial],
    start: usize,
    left: usize,
    chosen: &mut Vec<Monomial>,
    emit: &mut impl FnMut(&[Monomial]),
) {
    if !chosen.is_empty() {
        emit(chosen);
    }
    if left == 0 {
        return;
    }
    for i in start..monos.len() {
        let u = &monos[i];
        if chosen.iter().any(|g| g.divides(u) || u.divides(g)) {
            continue;
        }
        chosen.push(u.clone());
        extend(monos, i + 1, left - 1, chosen, emit);
        chosen.pop();
    }
}
