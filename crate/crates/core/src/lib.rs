//! Linear quaternion functions in quaternary canonical form.
//!
//! Any finite sum `Σ m_p q n_p` is reduced to `A q + B q i + C q j + D q k`,
//! either through the 4×4 real matrix homomorphism or through involution
//! identities. Canonical forms add, scale and compose without leaving the
//! form, so whole networks of functions collapse to a single 4-tuple.
//!
//! The crate is `no_std`; it needs `alloc` only for [`TermList`].

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod linfunc;
pub mod matrix;
pub mod quaternion;

pub use crate::linfunc::{
    compose, compose_right, conjugation_form, equivalent, from_right_form,
    reduce_involution_method, reduce_matrix_method, to_right_form, CanonicalForm, Method,
    RightForm, TermList,
};
pub use crate::matrix::{
    bar_operator_matrix, decode, encode_standard, encode_transmuted, operator_matrix, BarOp,
    Matrix4,
};
pub use crate::quaternion::{Axis, Basis, Quaternion, DEFAULT_TOLERANCE};
