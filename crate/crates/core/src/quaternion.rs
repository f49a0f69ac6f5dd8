//! Cartesian quaternion arithmetic, conjugation and the generalized
//! conjugates built from it.

use core::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Default tolerance used by approximate comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// A quaternion `q0 + q1 i + q2 j + q3 k` over `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

/// One of the pure imaginary units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    I,
    J,
    K,
}

/// A basis element of the quaternions, including the scalar unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    One,
    I,
    J,
    K,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];

    pub fn unit(self) -> Quaternion {
        Basis::from(self).unit()
    }
}

impl From<Axis> for Basis {
    fn from(axis: Axis) -> Self {
        match axis {
            Axis::I => Basis::I,
            Axis::J => Basis::J,
            Axis::K => Basis::K,
        }
    }
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::One, Basis::I, Basis::J, Basis::K];

    /// Position of this element in the `(q0, q1, q2, q3)` ordering.
    pub fn index(self) -> usize {
        match self {
            Basis::One => 0,
            Basis::I => 1,
            Basis::J => 2,
            Basis::K => 3,
        }
    }

    pub fn from_index(index: usize) -> Option<Basis> {
        Self::ALL.get(index).copied()
    }

    pub fn unit(self) -> Quaternion {
        let mut c = [0.0; 4];
        c[self.index()] = 1.0;
        Quaternion::from_array(c)
    }

    /// Product of two basis elements as `(negative, element)`.
    pub fn product(self, rhs: Basis) -> (bool, Basis) {
        use Basis::*;
        match (self, rhs) {
            (One, e) | (e, One) => (false, e),
            (I, I) | (J, J) | (K, K) => (true, One),
            (I, J) => (false, K),
            (J, I) => (true, K),
            (J, K) => (false, I),
            (K, J) => (true, I),
            (K, I) => (false, J),
            (I, K) => (true, J),
        }
    }
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Self { q0, q1, q2, q3 }
    }

    #[inline]
    pub const fn real(value: f64) -> Self {
        Self::new(value, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub const fn from_array(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    #[inline]
    pub const fn to_array(self) -> [f64; 4] {
        [self.q0, self.q1, self.q2, self.q3]
    }

    /// The stored component selected by `which`.
    #[inline]
    pub fn get(self, which: Basis) -> f64 {
        self.to_array()[which.index()]
    }

    /// Hamilton product `self * rhs`.
    #[inline]
    pub fn multiply(self, rhs: Quaternion) -> Quaternion {
        let (p0, p1, p2, p3) = (self.q0, self.q1, self.q2, self.q3);
        let (q0, q1, q2, q3) = (rhs.q0, rhs.q1, rhs.q2, rhs.q3);
        Quaternion::new(
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p1 * q0 + p0 * q1 - p3 * q2 + p2 * q3,
            p2 * q0 + p0 * q2 + p3 * q1 - p1 * q3,
            p3 * q0 + p0 * q3 - p2 * q1 + p1 * q2,
        )
    }

    #[inline]
    pub fn scale(self, factor: f64) -> Quaternion {
        Quaternion::new(
            factor * self.q0,
            factor * self.q1,
            factor * self.q2,
            factor * self.q3,
        )
    }

    /// `q0 - q1 i - q2 j - q3 k`
    #[inline]
    pub fn conjugate(self) -> Quaternion {
        Quaternion::new(self.q0, -self.q1, -self.q2, -self.q3)
    }

    /// The generalized conjugate `-ε q̄ ε`.
    ///
    /// Negates exactly the `ε` component. It is an involution: self-inverse,
    /// additive, and anti-homomorphic.
    pub fn generalized_conjugate(self, axis: Axis) -> Quaternion {
        let e = axis.unit();
        -(e * self.conjugate() * e)
    }

    /// The anti-involution `-ε q ε`, i.e. the conjugate of
    /// [`generalized_conjugate`](Self::generalized_conjugate).
    ///
    /// Keeps the scalar and `ε` components and negates the other two. It is
    /// self-inverse, additive, and homomorphic.
    pub fn anti_involution(self, axis: Axis) -> Quaternion {
        let e = axis.unit();
        -(e * self * e)
    }

    /// Extracts a real component through involution identities only:
    ///
    /// ```text
    /// q0 = ½(q + q̄)
    /// qε = ½(q̄^ε − q) ε      for ε ∈ {i, j, k}
    /// ```
    ///
    /// The intermediate quaternion is real, so its scalar part is returned.
    pub fn component(self, which: Basis) -> f64 {
        let extracted = match which {
            Basis::One => (self + self.conjugate()).scale(0.5),
            Basis::I => Self::imaginary_extractor(self, Axis::I),
            Basis::J => Self::imaginary_extractor(self, Axis::J),
            Basis::K => Self::imaginary_extractor(self, Axis::K),
        };
        debug_assert!(
            extracted.vector_is_zero(DEFAULT_TOLERANCE * extracted.max_abs().max(1.0)),
            "component extraction produced a non-real intermediate: {extracted:?}"
        );
        extracted.q0
    }

    fn imaginary_extractor(q: Quaternion, axis: Axis) -> Quaternion {
        ((q.generalized_conjugate(axis) - q) * axis.unit()).scale(0.5)
    }

    #[inline]
    pub fn max_abs(self) -> f64 {
        self.q0
            .abs()
            .max(self.q1.abs())
            .max(self.q2.abs())
            .max(self.q3.abs())
    }

    fn vector_is_zero(self, tol: f64) -> bool {
        self.q1.abs() <= tol && self.q2.abs() <= tol && self.q3.abs() <= tol
    }

    pub fn is_real(self) -> bool {
        self.q1 == 0.0 && self.q2 == 0.0 && self.q3 == 0.0
    }

    /// Approximate equality: `max|aₙ − bₙ| <= tol · max(1, |a|∞, |b|∞)`.
    ///
    /// `tol = 0` is exact comparison.
    pub fn approx_eq(self, other: Quaternion, tol: f64) -> bool {
        let scale = self.max_abs().max(other.max_abs()).max(1.0);
        (self - other).max_abs() <= tol * scale
    }

    /// Replaces `-0.0` components with `+0.0`.
    #[inline]
    pub fn normalize_zero(self) -> Quaternion {
        Quaternion::new(self.q0 + 0.0, self.q1 + 0.0, self.q2 + 0.0, self.q3 + 0.0)
    }
}

impl From<Basis> for Quaternion {
    fn from(b: Basis) -> Self {
        b.unit()
    }
}

impl From<f64> for Quaternion {
    fn from(value: f64) -> Self {
        Quaternion::real(value)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.q0 + rhs.q0,
            self.q1 + rhs.q1,
            self.q2 + rhs.q2,
            self.q3 + rhs.q3,
        )
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, rhs: Quaternion) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.q0 - rhs.q0,
            self.q1 - rhs.q1,
            self.q2 - rhs.q2,
            self.q3 - rhs.q3,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.q0, -self.q1, -self.q2, -self.q3)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn mul(self, rhs: Quaternion) -> Quaternion {
        self.multiply(rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn mul(self, rhs: f64) -> Quaternion {
        self.scale(rhs)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;

    #[inline]
    fn mul(self, rhs: Quaternion) -> Quaternion {
        rhs.scale(self)
    }
}

impl core::iter::Sum for Quaternion {
    fn sum<I: Iterator<Item = Quaternion>>(iter: I) -> Quaternion {
        iter.fold(Quaternion::ZERO, Add::add)
    }
}
