//! Extended singular Soergel bimodules: partial-invariant rings, `rho`-twists, the color-`n`
//! cup, cap, crossing and dot maps, bubbles and the images of degree-two endomorphisms of `1_r`.

mod bimod;
mod bubbles;
mod checks;
mod fprime;
mod sym;

pub use bimod::{decompose, Step, TensorElement, Word};
pub use bubbles::{
    bubble_checks, bubble_value_n, end_ring_image, end_ring_relation, sigma_box_image, triangle_check, EndGen,
    Orientation,
};
pub use checks::{
    bimodule_check, compositions, degree_check, fprime_sweep, instances, pieces, two_form_check, zigzag_checks,
};
pub use fprime::{
    apply_dots, apply_local, cap_fe_displayed, dot_poly, down_mn_variant, up_nm_variant, Ctx, Formula, LocalMap, Piece,
};
pub use sym::{
    complete, elementary, last_block_expansion, rho_power_image, rotate_right, shifted_elementary_identity,
    shifted_vars, sym_eval, twist_ring_check, PartialInvariantRing, SymFn, SymKind,
};
