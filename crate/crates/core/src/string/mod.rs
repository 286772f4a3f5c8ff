//! Words, strings and string modules over presentations, together with the
//! linear algebra of representations.

pub mod biserial;
pub mod relations;
pub mod rep;
pub mod word;

pub use biserial::{
    associated_string_coalgebra, check_special_biserial, injective_comodule, injective_form,
    is_projective, BiserialReport, FormCase, InjectiveComodule, InjectiveForm,
};
pub use relations::{dual_relations, RelationSet};
pub use rep::{
    hom_basis, is_isomorphic, string_module, Homomorphism, QuotientRepresentation, Representation,
    RepresentationJson, Subrepresentation,
};
pub use word::{
    enumerate_strings, is_string, make_word, Direction, Letter, LetterJson, StringClass, Word,
};
