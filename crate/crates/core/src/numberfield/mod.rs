//! Abelian extensions of ℚ: Dirichlet characters and L-functions, the
//! induced zeta systems, `g` in closed form and its zero catalog.

pub mod character;
pub mod gfun;
pub mod special;
pub mod system;
pub mod zeros;

pub use character::{kronecker_symbol, CharacterSpec, DirichletCharacter};
pub use gfun::{ClosedFormG, TailCorrectedPartial};
pub use special::{dirichlet_l, hurwitz_zeta, ln_gamma, xi, zeta};
pub use system::{cyclic_system, kronecker_system, AbelianBackend, AbelianSystem};
pub use zeros::{
    find_singularities, find_zeros_in_rect, winding_number, zero_difference_table, zeta_zeros, LocatedZero, Rect,
};
