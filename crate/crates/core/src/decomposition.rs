//! Stanley decompositions as lists of `(bottom, Z)` pieces, their certificate
//! text format, and verification against a characteristic poset.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::parse::parse_monomial;
use crate::poset::CharacteristicPoset;

/// One piece `x^a K[Z]`. As an interval of the characteristic poset it is
/// `[a, b]` with `b_j = g_j` for `x_j` in `Z` and `b_j = a_j` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StanleyPiece {
    pub bottom: Monomial,
    /// Bit `j` set for `x{j+1}` in `Z`.
    pub vars: u32,
}

impl StanleyPiece {
    pub fn var_count(&self) -> usize {
        self.vars.count_ones() as usize
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub pieces: Vec<StanleyPiece>,
}

impl StanleyDecomposition {
    /// `min |Z_i|`, or `None` for an empty decomposition.
    pub fn sdepth(&self) -> Option<usize> {
        self.pieces.iter().map(StanleyPiece::var_count).min()
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Parses the certificate format: one piece per line,
    /// `bottom ; {x_i, x_j, ...}`, with `1` for the constant bottom.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str, ambient: usize) -> Result<Self> {
        let mut pieces = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cert_err = |msg: String| Error::Certificate { line: no + 1, msg };
            let (bottom, vars) = line.split_once(';').ok_or_else(|| cert_err("missing ';'".into()))?;
            let bottom = parse_monomial(bottom, ambient).map_err(|e| cert_err(e.to_string()))?;
            let vars = vars.trim();
            let inner = vars
                .strip_prefix('{')
                .and_then(|v| v.strip_suffix('}'))
                .ok_or_else(|| cert_err("variable set must be written {x_i, ...}".into()))?;
            let mut mask = 0u32;
            for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let idx: usize = tok
                    .strip_prefix('x')
                    .and_then(|d| d.trim().parse().ok())
                    .ok_or_else(|| cert_err(format!("bad variable '{tok}'")))?;
                if idx == 0 || idx > ambient {
                    return Err(cert_err(format!("variable x{idx} out of range")));
                }
                mask |= 1 << (idx - 1);
            }
            pieces.push(StanleyPiece { bottom, vars: mask });
        }
        Ok(StanleyDecomposition { pieces })
    }
}

impl fmt::Display for StanleyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pieces {
            let vars: Vec<String> = (0..32).filter(|j| p.vars >> j & 1 == 1).map(|j| format!("x{}", j + 1)).collect();
            writeln!(f, "{} ; {{{}}}", p.bottom, vars.join(", "))?;
        }
        Ok(())
    }
}

/// Why a decomposition was rejected. Indices refer to pieces in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VerifyFailure {
    AmbientMismatch {
        piece: usize,
    },
    /// The piece's interval leaves the poset at `element`.
    OutsidePoset {
        piece: usize,
        element: String,
    },
    DoubleCover {
        element: String,
        first: usize,
        second: usize,
    },
    Uncovered {
        element: String,
    },
    BelowLevel {
        piece: usize,
        rho: usize,
        k: usize,
    },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::AmbientMismatch { piece } => write!(f, "piece {piece}: ambient mismatch"),
            VerifyFailure::OutsidePoset { piece, element } => {
                write!(f, "piece {piece}: interval leaves the poset at {element}")
            }
            VerifyFailure::DoubleCover { element, first, second } => {
                write!(f, "double cover of {element} by pieces {first} and {second}")
            }
            VerifyFailure::Uncovered { element } => write!(f, "uncovered element {element}"),
            VerifyFailure::BelowLevel { piece, rho, k } => {
                write!(f, "piece {piece}: top has rho {rho} < {k}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub failure: Option<VerifyFailure>,
    /// Minimum `rho` over interval tops, when every piece lies in the poset.
    pub min_rho: Option<usize>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that the pieces are intervals of the poset, pairwise disjoint, cover
/// it exactly, and have tops with `rho >= k`.
pub fn verify_decomposition(poset: &CharacteristicPoset, decomp: &StanleyDecomposition, k: usize) -> VerifyReport {
    let fail = |failure| VerifyReport { failure: Some(failure), min_rho: None };
    let n = poset.ambient();
    let g = poset.bound();
    let mut owner: Vec<Option<usize>> = vec![None; poset.len()];
    let mut min_rho = usize::MAX;
    let mut tops = Vec::with_capacity(decomp.len());
    for (pi, piece) in decomp.pieces.iter().enumerate() {
        if piece.bottom.ambient() != n || (n < 32 && piece.vars >> n != 0) {
            return fail(VerifyFailure::AmbientMismatch { piece: pi });
        }
        let a = piece.bottom.exponents();
        let Some(bottom) = poset.encode(a) else {
            return fail(VerifyFailure::OutsidePoset { piece: pi, element: piece.bottom.to_string() });
        };
        let raise = (0..n).filter(|&j| piece.vars >> j & 1 == 1 && a[j] < g[j]).fold(0u32, |m, j| m | 1 << j);
        let mut failure = None;
        poset.for_each_cell(bottom, raise, |code| match poset.index_of_code(code) {
            None => {
                failure = Some(VerifyFailure::OutsidePoset {
                    piece: pi,
                    element: Monomial::from_exps_unchecked(poset.decode(code)).to_string(),
                });
                false
            }
            Some(i) => match owner[i] {
                Some(first) => {
                    failure =
                        Some(VerifyFailure::DoubleCover { element: poset.monomial(i).to_string(), first, second: pi });
                    false
                }
                None => {
                    owner[i] = Some(pi);
                    true
                }
            },
        });
        if let Some(f) = failure {
            return fail(f);
        }
        let top: Vec<u8> = (0..n).map(|j| if raise >> j & 1 == 1 { g[j] } else { a[j] }).collect();
        let rho = poset.rho_of(&top);
        tops.push(rho);
        min_rho = min_rho.min(rho);
    }
    if let Some(i) = owner.iter().position(Option::is_none) {
        return fail(VerifyFailure::Uncovered { element: poset.monomial(i).to_string() });
    }
    if let Some((pi, &rho)) = tops.iter().enumerate().find(|(_, &r)| r < k) {
        return VerifyReport { failure: Some(VerifyFailure::BelowLevel { piece: pi, rho, k }), min_rho: Some(min_rho) };
    }
    VerifyReport { failure: None, min_rho: (min_rho != usize::MAX).then_some(min_rho) }
}

/// Stanley decomposition of `S/(u)`: writing `u = x_{j_1} ... x_{j_r}` with
/// indices ascending, the pieces are `u_i = x_{j_1} ... x_{j_{i-1}}` with
/// `Z_i` all variables except `x_{j_i}`.
pub fn principal_decomposition(u: &Monomial) -> Result<StanleyDecomposition> {
    if u.is_one() {
        return Err(Error::DegenerateIdeal);
    }
    let n = u.ambient();
    let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let word = u.index_word();
    let mut bottom = vec![0u8; n];
    let mut pieces = Vec::with_capacity(word.len());
    for &j in &word {
        pieces
            .push(StanleyPiece { bottom: Monomial::from_exps_unchecked(bottom.clone()), vars: all & !(1 << (j - 1)) });
        bottom[j - 1] += 1;
    }
    Ok(StanleyDecomposition { pieces })
}
