//! The quaternion/4×4 real matrix homomorphism.
//!
//! `[p]` (standard form) encodes left multiplication by `p`, and `[q]†`
//! (transmuted form) encodes right multiplication by `q`. Every linear
//! quaternion function is a 4×4 real matrix, and every 4×4 real matrix is
//! the image of exactly one canonical form `(A|1) + (B|i) + (C|j) + (D|k)`.

use core::ops::{Add, Mul, Neg, Sub};

use crate::linfunc::CanonicalForm;
use crate::quaternion::{Basis, Quaternion};

/// Dense row-major 4×4 real matrix.
///
/// [`r`](Self::r) uses 1-based `(row, column)` indices, matching the usual
/// `r_ij` notation for operator matrices.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Matrix4 {
    rows: [[f64; 4]; 4],
}

impl Matrix4 {
    pub const ZERO: Matrix4 = Matrix4 {
        rows: [[0.0; 4]; 4],
    };
    pub const IDENTITY: Matrix4 = Matrix4 {
        rows: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
    };

    pub const fn from_rows(rows: [[f64; 4]; 4]) -> Self {
        Matrix4 { rows }
    }

    pub const fn rows(&self) -> &[[f64; 4]; 4] {
        &self.rows
    }

    /// Row-major flattening.
    pub fn to_array(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        for (n, v) in self.rows.iter().flatten().enumerate() {
            out[n] = *v;
        }
        out
    }

    pub fn from_array(values: [f64; 16]) -> Self {
        let mut rows = [[0.0; 4]; 4];
        for (n, v) in values.into_iter().enumerate() {
            rows[n / 4][n % 4] = v;
        }
        Matrix4 { rows }
    }

    /// Element `r_ij`, 1-based.
    ///
    /// # Panics
    /// If `row` or `col` is outside `1..=4`.
    #[inline]
    pub fn r(&self, row: usize, col: usize) -> f64 {
        assert!((1..=4).contains(&row) && (1..=4).contains(&col));
        self.rows[row - 1][col - 1]
    }

    pub fn transpose(&self) -> Matrix4 {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[j][i] = *v;
            }
        }
        Matrix4 { rows: out }
    }

    pub fn mat_multiply(&self, rhs: &Matrix4) -> Matrix4 {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| self.rows[i][k] * rhs.rows[k][j]).sum();
            }
        }
        Matrix4 { rows: out }
    }

    pub fn mat_add(&self, rhs: &Matrix4) -> Matrix4 {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn scale(&self, factor: f64) -> Matrix4 {
        let mut out = self.rows;
        out.iter_mut().flatten().for_each(|v| *v *= factor);
        Matrix4 { rows: out }
    }

    /// `R · vec(q)`, where `vec(q)` is the column `(q0, q1, q2, q3)`.
    pub fn mat_vec(&self, q: Quaternion) -> Quaternion {
        let v = q.to_array();
        let mut out = [0.0; 4];
        for (o, row) in out.iter_mut().zip(&self.rows) {
            *o = row.iter().zip(&v).map(|(a, b)| a * b).sum();
        }
        Quaternion::from_array(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.rows.iter().flatten().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Max-norm comparison scaled by the larger operand, floored at 1.
    pub fn approx_eq(&self, other: &Matrix4, tol: f64) -> bool {
        let scale = self.max_abs().max(other.max_abs()).max(1.0);
        (*self - *other).max_abs() <= tol * scale
    }

    fn zip_with(&self, rhs: &Matrix4, f: impl Fn(f64, f64) -> f64) -> Matrix4 {
        Matrix4 {
            rows: core::array::from_fn(|i| {
                core::array::from_fn(|j| f(self.rows[i][j], rhs.rows[i][j]))
            }),
        }
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;

    fn add(self, rhs: Matrix4) -> Matrix4 {
        self.mat_add(&rhs)
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;

    fn sub(self, rhs: Matrix4) -> Matrix4 {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl Neg for Matrix4 {
    type Output = Matrix4;

    fn neg(self) -> Matrix4 {
        self.scale(-1.0)
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;

    fn mul(self, rhs: Matrix4) -> Matrix4 {
        self.mat_multiply(&rhs)
    }
}

impl Mul<Quaternion> for Matrix4 {
    type Output = Quaternion;

    fn mul(self, rhs: Quaternion) -> Quaternion {
        self.mat_vec(rhs)
    }
}

/// `[p]`: the matrix of `q ↦ p q`. Preserves the order of the product.
pub fn encode_standard(p: Quaternion) -> Matrix4 {
    let Quaternion { q0, q1, q2, q3 } = p;
    Matrix4::from_rows([
        [q0, -q1, -q2, -q3],
        [q1, q0, -q3, q2],
        [q2, q3, q0, -q1],
        [q3, -q2, q1, q0],
    ])
}

/// `[q]†`: the matrix of `p ↦ p q`. Reverses the order of the product.
///
/// Equal to `[q]` with its lower-right 3×3 block transposed.
pub fn encode_transmuted(q: Quaternion) -> Matrix4 {
    let Quaternion { q0, q1, q2, q3 } = q;
    Matrix4::from_rows([
        [q0, -q1, -q2, -q3],
        [q1, q0, q3, -q2],
        [q2, -q3, q0, q1],
        [q3, q2, -q1, q0],
    ])
}

/// A signed bar-operator `±(e₁|e₂)`, the map `q ↦ ±e₁ q e₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BarOp {
    pub left: Basis,
    pub right: Basis,
    pub negative: bool,
}

impl BarOp {
    pub const IDENTITY: BarOp = BarOp::new(Basis::One, Basis::One);

    pub const fn new(left: Basis, right: Basis) -> Self {
        BarOp {
            left,
            right,
            negative: false,
        }
    }

    pub const fn negated(self) -> Self {
        BarOp {
            negative: !self.negative,
            ..self
        }
    }

    /// `self ∘ inner`: `(e₁|e₂)(f₁|f₂) = (e₁f₁ | f₂e₂)`, signs folded in.
    pub fn compose(self, inner: BarOp) -> BarOp {
        let (neg_left, left) = self.left.product(inner.left);
        let (neg_right, right) = inner.right.product(self.right);
        BarOp {
            left,
            right,
            negative: self.negative ^ inner.negative ^ neg_left ^ neg_right,
        }
    }

    pub fn apply(self, q: Quaternion) -> Quaternion {
        let out = self.left.unit() * q * self.right.unit();
        if self.negative {
            -out
        } else {
            out
        }
    }

    pub fn matrix(self) -> Matrix4 {
        bar_operator_matrix(self)
    }
}

/// `±[e₁][e₂]†`
pub fn bar_operator_matrix(op: BarOp) -> Matrix4 {
    let m = encode_standard(op.left.unit()) * encode_transmuted(op.right.unit());
    if op.negative {
        -m
    } else {
        m
    }
}

/// Matrix of `A q + B q i + C q j + D q k`.
pub fn operator_matrix(f: &CanonicalForm) -> Matrix4 {
    encode_standard(f.a)
        + encode_standard(f.b) * encode_transmuted(Quaternion::I)
        + encode_standard(f.c) * encode_transmuted(Quaternion::J)
        + encode_standard(f.d) * encode_transmuted(Quaternion::K)
}

/// Splits an arbitrary 4×4 real matrix into `(A|1) + (B|i) + (C|j) + (D|k)`.
///
/// The sixteen unknowns fall into four independent groups of four (for
/// instance `{α0, β1, γ2, δ3}` depends only on the diagonal), and each is
/// solved in closed form by averaging four matrix entries.
pub fn decode(m: &Matrix4) -> CanonicalForm {
    let r = |i, j| m.r(i, j);
    let a = Quaternion::new(
        r(1, 1) + r(2, 2) + r(3, 3) + r(4, 4),
        r(2, 1) - r(1, 2) + r(4, 3) - r(3, 4),
        r(3, 1) - r(1, 3) - r(4, 2) + r(2, 4),
        r(4, 1) - r(1, 4) + r(3, 2) - r(2, 3),
    );
    let b = Quaternion::new(
        r(2, 1) - r(1, 2) - r(4, 3) + r(3, 4),
        -r(1, 1) - r(2, 2) + r(3, 3) + r(4, 4),
        -r(4, 1) - r(1, 4) - r(3, 2) - r(2, 3),
        r(3, 1) + r(1, 3) - r(4, 2) - r(2, 4),
    );
    let c = Quaternion::new(
        r(3, 1) - r(1, 3) + r(4, 2) - r(2, 4),
        r(4, 1) + r(1, 4) - r(3, 2) - r(2, 3),
        -r(1, 1) + r(2, 2) - r(3, 3) + r(4, 4),
        -r(2, 1) - r(1, 2) - r(4, 3) - r(3, 4),
    );
    let d = Quaternion::new(
        r(4, 1) - r(1, 4) - r(3, 2) + r(2, 3),
        -r(3, 1) - r(1, 3) - r(4, 2) - r(2, 4),
        r(2, 1) + r(1, 2) - r(4, 3) - r(3, 4),
        -r(1, 1) + r(2, 2) + r(3, 3) - r(4, 4),
    );
    CanonicalForm::new(a.scale(0.25), b.scale(0.25), c.scale(0.25), d.scale(0.25)).normalize_zero()
}
