//! Linear quaternion functions and their quaternary canonical form.
//!
//! A general linear function is a [`TermList`], `f(q) = Σ m_p q n_p`. It
//! reduces to a [`CanonicalForm`] `{A, B, C, D}` meaning
//! `A q + B q i + C q j + D q k`, either by the matrix method
//! ([`reduce_matrix_method`]) or by the involution method
//! ([`reduce_involution_method`]). The two must agree on every input.

use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::matrix::{decode, encode_standard, encode_transmuted, operator_matrix, Matrix4};
use crate::quaternion::{Basis, Quaternion};

/// Ordered list of `(m_p, n_p)` pairs. Empty means the zero function.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TermList {
    terms: Vec<(Quaternion, Quaternion)>,
}

impl TermList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, left: Quaternion, right: Quaternion) {
        self.terms.push((left, right));
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Quaternion, Quaternion)> + '_ {
        self.terms.iter()
    }

    pub fn as_slice(&self) -> &[(Quaternion, Quaternion)] {
        &self.terms
    }

    /// `Σ m_p q n_p`, evaluated literally.
    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        self.terms.iter().map(|&(m, n)| m * q * n).sum()
    }
}

impl From<Vec<(Quaternion, Quaternion)>> for TermList {
    fn from(terms: Vec<(Quaternion, Quaternion)>) -> Self {
        TermList { terms }
    }
}

impl FromIterator<(Quaternion, Quaternion)> for TermList {
    fn from_iter<I: IntoIterator<Item = (Quaternion, Quaternion)>>(iter: I) -> Self {
        TermList {
            terms: iter.into_iter().collect(),
        }
    }
}

impl Extend<(Quaternion, Quaternion)> for TermList {
    fn extend<I: IntoIterator<Item = (Quaternion, Quaternion)>>(&mut self, iter: I) {
        self.terms.extend(iter);
    }
}

/// `f(q) = A q + B q i + C q j + D q k`.
///
/// The sixteen real coefficients are unique for the function they represent,
/// so coefficient equality and functional equality coincide.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CanonicalForm {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
    pub d: Quaternion,
}

impl CanonicalForm {
    pub const ZERO: CanonicalForm = CanonicalForm::new(
        Quaternion::ZERO,
        Quaternion::ZERO,
        Quaternion::ZERO,
        Quaternion::ZERO,
    );
    pub const IDENTITY: CanonicalForm = CanonicalForm::new(
        Quaternion::ONE,
        Quaternion::ZERO,
        Quaternion::ZERO,
        Quaternion::ZERO,
    );

    pub const fn new(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Self {
        CanonicalForm { a, b, c, d }
    }

    /// `m q n` as a canonical form.
    pub fn sandwich(left: Quaternion, right: Quaternion) -> Self {
        reduce_involution_method(&TermList::from(alloc::vec![(left, right)]))
    }

    /// Coefficients in slot order `[A, B, C, D]`.
    pub const fn slots(&self) -> [Quaternion; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub const fn from_slots(s: [Quaternion; 4]) -> Self {
        CanonicalForm::new(s[0], s[1], s[2], s[3])
    }

    /// The slot whose right-hand basis element is `which`.
    pub fn slot(&self, which: Basis) -> Quaternion {
        self.slots()[which.index()]
    }

    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        self.a * q
            + self.b * q * Quaternion::I
            + self.c * q * Quaternion::J
            + self.d * q * Quaternion::K
    }

    pub fn scale(&self, factor: f64) -> Self {
        self.map(|x| x.scale(factor))
    }

    /// `self ∘ inner`; see [`compose`].
    pub fn after(&self, inner: &CanonicalForm) -> Self {
        compose(self, inner)
    }

    pub fn matrix(&self) -> Matrix4 {
        operator_matrix(self)
    }

    /// The four-term list `[(A,1), (B,i), (C,j), (D,k)]`.
    pub fn to_terms(&self) -> TermList {
        Basis::ALL
            .iter()
            .map(|&e| (self.slot(e), e.unit()))
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.slots().iter().fold(0.0, |m, x| m.max(x.max_abs()))
    }

    pub fn normalize_zero(&self) -> Self {
        self.map(Quaternion::normalize_zero)
    }

    fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> Self {
        CanonicalForm::new(f(self.a), f(self.b), f(self.c), f(self.d))
    }
}

impl Add for CanonicalForm {
    type Output = CanonicalForm;

    fn add(self, rhs: CanonicalForm) -> CanonicalForm {
        CanonicalForm::new(
            self.a + rhs.a,
            self.b + rhs.b,
            self.c + rhs.c,
            self.d + rhs.d,
        )
    }
}

impl Sub for CanonicalForm {
    type Output = CanonicalForm;

    fn sub(self, rhs: CanonicalForm) -> CanonicalForm {
        CanonicalForm::new(
            self.a - rhs.a,
            self.b - rhs.b,
            self.c - rhs.c,
            self.d - rhs.d,
        )
    }
}

impl Neg for CanonicalForm {
    type Output = CanonicalForm;

    fn neg(self) -> CanonicalForm {
        self.map(Neg::neg)
    }
}

/// `f(q) = q A' + i q B' + j q C' + k q D'`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RightForm {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
    pub d: Quaternion,
}

impl RightForm {
    pub const IDENTITY: RightForm = RightForm::new(
        Quaternion::ONE,
        Quaternion::ZERO,
        Quaternion::ZERO,
        Quaternion::ZERO,
    );

    pub const fn new(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Self {
        RightForm { a, b, c, d }
    }

    pub const fn slots(&self) -> [Quaternion; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub const fn from_slots(s: [Quaternion; 4]) -> Self {
        RightForm::new(s[0], s[1], s[2], s[3])
    }

    pub fn evaluate(&self, q: Quaternion) -> Quaternion {
        q * self.a
            + Quaternion::I * q * self.b
            + Quaternion::J * q * self.c
            + Quaternion::K * q * self.d
    }
}

/// Which reduction algorithm turns a [`TermList`] into a [`CanonicalForm`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// `decode(Σ [m_p][n_p]†)`
    #[default]
    Matrix,
    /// Coefficient extraction of each `n_p` through involutions.
    Involution,
}

impl Method {
    pub fn reduce(self, terms: &TermList) -> CanonicalForm {
        match self {
            Method::Matrix => reduce_matrix_method(terms),
            Method::Involution => reduce_involution_method(terms),
        }
    }
}

/// Matrix method: map each pair to `[m_p][n_p]†`, sum into a single matrix
/// `R`, then decode `R` into `(A|1) + (B|i) + (C|j) + (D|k)`.
pub fn reduce_matrix_method(terms: &TermList) -> CanonicalForm {
    let r = terms.iter().fold(Matrix4::ZERO, |acc, &(m, n)| {
        acc + encode_standard(m) * encode_transmuted(n)
    });
    decode(&r)
}

/// Involution method. With `n_p = w_p + x_p i + y_p j + z_p k`,
///
/// ```text
/// A = Σ m_p w_p,   w_p = ½(n_p + n̄_p)
/// B = Σ m_p x_p,   x_p = ½(n̄_p^i − n_p) i
/// C = Σ m_p y_p,   y_p = ½(n̄_p^j − n_p) j
/// D = Σ m_p z_p,   z_p = ½(n̄_p^k − n_p) k
/// ```
///
/// The extracted `w_p … z_p` are real, so they are applied as real scalars.
pub fn reduce_involution_method(terms: &TermList) -> CanonicalForm {
    let mut slots = [Quaternion::ZERO; 4];
    for &(m, n) in terms.iter() {
        for (slot, e) in slots.iter_mut().zip(Basis::ALL) {
            *slot += m.scale(n.component(e));
        }
    }
    CanonicalForm::from_slots(slots).normalize_zero()
}

/// `f2 ∘ f1`, i.e. `q ↦ f2(f1(q))`.
///
/// ```text
/// A₃ = A₂A₁ − B₂B₁ − C₂C₁ − D₂D₁
/// B₃ = A₂B₁ + B₂A₁ − C₂D₁ + D₂C₁
/// C₃ = A₂C₁ + B₂D₁ + C₂A₁ − D₂B₁
/// D₃ = A₂D₁ − B₂C₁ + C₂B₁ + D₂A₁
/// ```
pub fn compose(f2: &CanonicalForm, f1: &CanonicalForm) -> CanonicalForm {
    let (a2, b2, c2, d2) = (f2.a, f2.b, f2.c, f2.d);
    let (a1, b1, c1, d1) = (f1.a, f1.b, f1.c, f1.d);
    CanonicalForm::new(
        a2 * a1 - b2 * b1 - c2 * c1 - d2 * d1,
        a2 * b1 + b2 * a1 - c2 * d1 + d2 * c1,
        a2 * c1 + b2 * d1 + c2 * a1 - d2 * b1,
        a2 * d1 - b2 * c1 + c2 * b1 + d2 * a1,
    )
}

/// Canonical form of the quaternion conjugate,
/// `q̄ = −½(q + i q i + j q j + k q k)`, i.e. `{−½, −i/2, −j/2, −k/2}`.
pub fn conjugation_form() -> CanonicalForm {
    CanonicalForm::new(
        Quaternion::real(-0.5),
        Quaternion::I.scale(-0.5),
        Quaternion::J.scale(-0.5),
        Quaternion::K.scale(-0.5),
    )
}

/// Rewrites `A q + B q i + C q j + D q k` as `q A' + i q B' + j q C' + k q D'`.
///
/// Both forms are sums of `c(e, g) · (e|g)` over basis pairs. The left form
/// stores `c(·, g)` in slot `g`, the right form stores `c(e, ·)` in slot `e`,
/// so the conversion is a transpose of the 4×4 real coefficient grid.
pub fn to_right_form(f: &CanonicalForm) -> RightForm {
    RightForm::from_slots(transpose_slots(f.slots()))
}

/// Reduces the right form's term list `[(1,A'), (i,B'), (j,C'), (k,D')]`.
pub fn from_right_form(g: &RightForm) -> CanonicalForm {
    let terms: TermList = Basis::ALL
        .iter()
        .zip(g.slots())
        .map(|(e, coeff)| (e.unit(), coeff))
        .collect();
    reduce_matrix_method(&terms)
}

fn transpose_slots(slots: [Quaternion; 4]) -> [Quaternion; 4] {
    let mut out = [[0.0; 4]; 4];
    for (g, slot) in slots.iter().enumerate() {
        for (e, value) in slot.to_array().into_iter().enumerate() {
            out[e][g] = value;
        }
    }
    out.map(Quaternion::from_array)
}

/// `g2 ∘ g1` for right forms.
///
/// `g2(g1(q)) = Σ (e₂e₁) q (X₁X₂)`, so the slot signs follow the quaternion
/// product `g2 · g1` while each coefficient product is written first-applied
/// on the left:
///
/// ```text
/// A₃' = A₁'A₂' − B₁'B₂' − C₁'C₂' − D₁'D₂'
/// B₃' = A₁'B₂' + B₁'A₂' + D₁'C₂' − C₁'D₂'
/// C₃' = A₁'C₂' + C₁'A₂' + B₁'D₂' − D₁'B₂'
/// D₃' = A₁'D₂' + D₁'A₂' + C₁'B₂' − B₁'C₂'
/// ```
pub fn compose_right(g2: &RightForm, g1: &RightForm) -> RightForm {
    let (a2, b2, c2, d2) = (g2.a, g2.b, g2.c, g2.d);
    let (a1, b1, c1, d1) = (g1.a, g1.b, g1.c, g1.d);
    RightForm::new(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + d1 * c2 - c1 * d2,
        a1 * c2 + c1 * a2 + b1 * d2 - d1 * b2,
        a1 * d2 + d1 * a2 + c1 * b2 - b1 * c2,
    )
}

/// True when every coefficient of `f` and `g` agrees within `tol`, scaled by
/// the larger max-norm of the two forms (floored at 1). `tol = 0` is exact.
pub fn equivalent(f: &CanonicalForm, g: &CanonicalForm, tol: f64) -> bool {
    let scale = f.max_abs().max(g.max_abs()).max(1.0);
    (*f - *g).max_abs() <= tol * scale
}
