//! Identities of expanded varieties: expansion maps, liftings, modules of
//! consequences and the block-matrix search for new identities.

mod files;
mod lifting;
mod newids;
mod opword;
mod rule;
mod system;

pub use files::{parse_rule_file, parse_system_file, system_to_text};
pub use lifting::{
    insert_orbits, lifting_basis, lifting_echelon, lifting_generators, lifting_module, liftings,
    poly_row, row_poly, symmetric_span, PermTable, MAX_AMBIENT,
};
pub use newids::{
    find_new_identities, identities_by_kernel, is_consequence, minimize_generators,
    NewIdentityReport,
};
pub use opword::{apply_operator_word, operator_word_to_poly};
pub use rule::{expand, ExpansionRule};
pub use system::IdentitySystem;
