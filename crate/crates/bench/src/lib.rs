//! Shared inputs for the criterion benches.

use sdepthlab::{cycle_path_ideal, line_path_ideal, QuotientPresentation};

/// `S/J_{n,m}`.
pub fn cycle_quotient(n: usize, m: usize) -> QuotientPresentation {
    QuotientPresentation::quotient_ring(cycle_path_ideal(n, m).expect("valid family")).expect("proper")
}

/// `J_{n,m}/I_{n,m}`.
pub fn cycle_over_line(n: usize, m: usize) -> QuotientPresentation {
    QuotientPresentation::new(
        cycle_path_ideal(n, m).expect("valid family"),
        line_path_ideal(n, m).expect("valid family"),
    )
    .expect("nonzero module")
}
