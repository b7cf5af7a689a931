//! Extended Soergel bimodules: tensor words, canonical elements, images of generating
//! diagrams, and evaluation of diagrammatic relations.

mod element;
mod expr;
mod gens;
mod relations;
mod witness;

pub use element::{format_letters, format_tag, parse_letters, BimElement, SoergelObject, Strand};
pub use expr::{apply_at, apply_morphism, MorphismExpr};
pub use gens::{adjacent, apply_gen, distant, next_color, Generator};
pub use relations::{all_generators, catalogue, check_relation, compare_morphisms, degree_audit, find_relation, relation_sweep, remark_checks, Relation};
pub use witness::{decompose_witness, random_element, twist_weight_check, WitnessReport};
