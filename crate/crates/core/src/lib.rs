//! Exact Stanley depth of monomial quotients via interval partitions of
//! characteristic posets, an independent depth oracle for squarefree
//! quotients based on Hochster's formula, and verification scans over the
//! path ideals of line and cycle graphs.

pub mod complex;
pub mod decomposition;
pub mod error;
pub mod families;
pub mod harness;
pub mod hochster;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod poset;
pub mod quotient;
pub mod rank;
pub mod solver;

pub use decomposition::{
    principal_decomposition, verify_decomposition, StanleyDecomposition, StanleyPiece, VerifyReport,
};
pub use error::{Error, Result};
pub use families::{cycle_path_ideal, formula_table, line_path_ideal, phi, psi, FamilyKind, FormulaRecord};
pub use harness::{run_scan, Check, ScanConfig, ScanRow, Status};
pub use hochster::{depth_squarefree, hochster_betti, BettiTable};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use parse::parse_ideal;
pub use poset::{build_poset, CharacteristicPoset};
pub use quotient::QuotientPresentation;
pub use solver::{exists_partition, sdepth_of_pair, SdepthResult, SolverOptions};
