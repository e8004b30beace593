//! Power tuples and the regular triple constructions.

mod regular;
mod taxicab;
mod tuple;

pub use regular::{bst_family, construct_regular, regularity_defect, RegularTriple};
pub use taxicab::{dehomogenize, from_taxicab, taxicab_triples, sextic_form_check, AffineCandidate, SexticForm, TaxicabHit};
pub use tuple::{verify_tuple, verify_tuple_with, FailureKind, PairFailure, PowerTuple, Verdict, WitnessPolicy};
