//! Bundled example systems used by tests and the command line tool.

use crate::labeled::{LabeledBasis, SigLabeledPoly};
use crate::parse::SystemFile;

/// Three generators in `Q[x,y,z,t]` under grevlex.
pub const EXAMPLE_SYSTEM: &str = include_str!("../fixtures/example.sys");

/// A hand-listed signature-labeled Gröbner basis of [`EXAMPLE_SYSTEM`].
pub const EXAMPLE_SIGNATURE_BASIS: &str = include_str!("../fixtures/example_signature_basis.sys");

/// Three generators in `Q[x,y,z]` that already form a Gröbner basis.
pub const SMALL_GB_SYSTEM: &str = include_str!("../fixtures/small_gb.sys");

pub fn example_system() -> SystemFile {
    SystemFile::parse(EXAMPLE_SYSTEM).expect("bundled fixture parses")
}

pub fn small_gb_system() -> SystemFile {
    SystemFile::parse(SMALL_GB_SYSTEM).expect("bundled fixture parses")
}

pub fn example_signature_basis() -> LabeledBasis<SigLabeledPoly> {
    let sys = SystemFile::parse(EXAMPLE_SIGNATURE_BASIS).expect("bundled fixture parses");
    LabeledBasis::from_pairs(sys.gens, sys.basis).expect("bundled fixture is consistent")
}
