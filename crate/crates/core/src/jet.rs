//! Truncated Taylor expansions (jets) of order 3 in `d` variables.
//!
//! A [`Jet3`] carries the value of a scalar quantity together with all of its
//! partial derivatives through third order at a point. Arithmetic propagates
//! derivatives by the truncated Leibniz rule; composition with elementary
//! functions goes through the order-3 chain rule. Symmetric derivative slots
//! are stored packed (`i <= j`, `i <= j <= k` only).
//!
//! Jets over both real and complex coefficients are supported through the
//! [`JetScalar`] trait.

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by fallible jet operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum JetError {
    #[error("coordinate index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("jet dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("division by a jet with zero value")]
    DivisionByZero,
    #[error("{func} applied outside its domain (value {value})")]
    Domain { func: &'static str, value: f64 },
    #[error("non-finite entries after {0}")]
    NonFinite(&'static str),
}

/// Scalar coefficient types a jet can be built over.
///
/// Implemented for `f64` and `Complex64`. The domain predicates encode where
/// the corresponding real/complex elementary function is smooth; the complex
/// versions only exclude branch points.
pub trait JetScalar:
    Copy
    + PartialEq
    + std::fmt::Debug
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(v: f64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_finite(&self) -> bool;
    /// Magnitude, used for pivoting and error reports.
    fn modulus(&self) -> f64;

    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn tan(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn tanh(self) -> Self;
    fn atan(self) -> Self;
    /// Raise to a real constant power.
    fn powf(self, e: f64) -> Self;

    /// Whether `ln`/`sqrt`/non-integer powers are smooth at this value.
    fn log_domain_ok(&self) -> bool;
}

impl JetScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(v: f64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn modulus(&self) -> f64 {
        self.abs()
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn tan(self) -> Self {
        f64::tan(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    fn tanh(self) -> Self {
        f64::tanh(self)
    }
    fn atan(self) -> Self {
        f64::atan(self)
    }
    fn powf(self, e: f64) -> Self {
        f64::powf(self, e)
    }
    fn log_domain_ok(&self) -> bool {
        *self > 0.0
    }
}

impl JetScalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_f64(v: f64) -> Self {
        Complex64::new(v, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
    fn sin(self) -> Self {
        Complex64::sin(self)
    }
    fn cos(self) -> Self {
        Complex64::cos(self)
    }
    fn tan(self) -> Self {
        Complex64::tan(self)
    }
    fn exp(self) -> Self {
        Complex64::exp(self)
    }
    fn ln(self) -> Self {
        Complex64::ln(self)
    }
    fn sqrt(self) -> Self {
        Complex64::sqrt(self)
    }
    fn sinh(self) -> Self {
        Complex64::sinh(self)
    }
    fn cosh(self) -> Self {
        Complex64::cosh(self)
    }
    fn tanh(self) -> Self {
        Complex64::tanh(self)
    }
    fn atan(self) -> Self {
        Complex64::atan(self)
    }
    fn powf(self, e: f64) -> Self {
        Complex64::powf(self, e)
    }
    fn log_domain_ok(&self) -> bool {
        // Away from the branch point only.
        !(self.re == 0.0 && self.im == 0.0)
    }
}

/// Number of packed entries of a symmetric rank-2 slot.
pub fn sym2_len(d: usize) -> usize {
    d * (d + 1) / 2
}

/// Number of packed entries of a fully symmetric rank-3 slot.
pub fn sym3_len(d: usize) -> usize {
    d * (d + 1) * (d + 2) / 6
}

/// Packed offset of (i, j), i <= j.
#[inline]
pub fn sym2_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < d);
    i * d - i * (i + 1) / 2 + j
}

/// Packed offset of (i, j, k), i <= j <= k.
#[inline]
pub fn sym3_index(d: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i <= j && j <= k && k < d);
    // Entries with first index < i occupy full triangles of shrinking size.
    let mut base = 0;
    for a in 0..i {
        let r = d - a;
        base += r * (r + 1) / 2;
    }
    base + sym2_index(d - i, j - i, k - i)
}

fn sort2(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

fn sort3(i: usize, j: usize, k: usize) -> (usize, usize, usize) {
    let (a, b) = sort2(i, j);
    if k >= b {
        (a, b, k)
    } else if k >= a {
        (a, k, b)
    } else {
        (k, a, b)
    }
}

/// Order-3 jet: value, gradient, Hessian and third derivatives of a scalar
/// at a point, over coefficients `T`.
///
/// Operations that can only shed derivative information (extracting a partial
/// derivative, multiplying jets that were themselves obtained that way) leave
/// the highest slots zeroed; callers track how many orders remain meaningful.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet3<T: JetScalar> {
    dim: usize,
    pub value: T,
    grad: Vec<T>,
    hess: Vec<T>,
    third: Vec<T>,
}

impl<T: JetScalar> Jet3<T> {
    /// Jet of a constant.
    pub fn constant(dim: usize, value: T) -> Self {
        Jet3 {
            dim,
            value,
            grad: vec![T::zero(); dim],
            hess: vec![T::zero(); sym2_len(dim)],
            third: vec![T::zero(); sym3_len(dim)],
        }
    }

    /// Jet of the `index`-th coordinate function at `point`.
    pub fn coordinate(point: &[T], index: usize) -> Result<Self, JetError> {
        let dim = point.len();
        if index >= dim {
            return Err(JetError::IndexOutOfRange { index, dim });
        }
        let mut jet = Jet3::constant(dim, point[index]);
        jet.grad[index] = T::one();
        Ok(jet)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn grad(&self, i: usize) -> T {
        self.grad[i]
    }

    #[inline]
    pub fn hess(&self, i: usize, j: usize) -> T {
        let (i, j) = sort2(i, j);
        self.hess[sym2_index(self.dim, i, j)]
    }

    #[inline]
    pub fn third(&self, i: usize, j: usize, k: usize) -> T {
        let (i, j, k) = sort3(i, j, k);
        self.third[sym3_index(self.dim, i, j, k)]
    }

    pub fn set_grad(&mut self, i: usize, v: T) {
        self.grad[i] = v;
    }

    pub fn set_hess(&mut self, i: usize, j: usize, v: T) {
        let (i, j) = sort2(i, j);
        self.hess[sym2_index(self.dim, i, j)] = v;
    }

    pub fn set_third(&mut self, i: usize, j: usize, k: usize, v: T) {
        let (i, j, k) = sort3(i, j, k);
        self.third[sym3_index(self.dim, i, j, k)] = v;
    }

    /// True if every stored entry is finite.
    pub fn all_finite(&self) -> bool {
        self.value.is_finite()
            && self.grad.iter().all(|v| v.is_finite())
            && self.hess.iter().all(|v| v.is_finite())
            && self.third.iter().all(|v| v.is_finite())
    }

    /// Largest modulus over all stored entries.
    pub fn max_abs(&self) -> f64 {
        let mut m = self.value.modulus();
        for v in self.grad.iter().chain(&self.hess).chain(&self.third) {
            m = m.max(v.modulus());
        }
        m
    }

    /// The jet of the partial derivative with respect to coordinate `i`.
    ///
    /// Every derivative order shifts down by one; the third-order slots of
    /// the result are zero and carry no information.
    pub fn partial(&self, i: usize) -> Self {
        let d = self.dim;
        let mut out = Jet3::constant(d, self.grad[i]);
        for j in 0..d {
            out.grad[j] = self.hess(i, j);
        }
        for j in 0..d {
            for k in j..d {
                out.hess[sym2_index(d, j, k)] = self.third(i, j, k);
            }
        }
        out
    }

    fn assert_same(&self, other: &Self) -> Result<(), JetError> {
        if self.dim != other.dim {
            return Err(JetError::DimMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other).expect("jet dim mismatch");
        let mut out = self.clone();
        out.value = out.value + other.value;
        for (a, b) in out.grad.iter_mut().zip(&other.grad) {
            *a = *a + *b;
        }
        for (a, b) in out.hess.iter_mut().zip(&other.hess) {
            *a = *a + *b;
        }
        for (a, b) in out.third.iter_mut().zip(&other.third) {
            *a = *a + *b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same(other).expect("jet dim mismatch");
        let mut out = self.clone();
        out.value = out.value - other.value;
        for (a, b) in out.grad.iter_mut().zip(&other.grad) {
            *a = *a - *b;
        }
        for (a, b) in out.hess.iter_mut().zip(&other.hess) {
            *a = *a - *b;
        }
        for (a, b) in out.third.iter_mut().zip(&other.third) {
            *a = *a - *b;
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.value = -out.value;
        for a in out.grad.iter_mut() {
            *a = -*a;
        }
        for a in out.hess.iter_mut() {
            *a = -*a;
        }
        for a in out.third.iter_mut() {
            *a = -*a;
        }
        out
    }

    pub fn scale(&self, c: T) -> Self {
        let mut out = self.clone();
        out.value = out.value * c;
        for a in out.grad.iter_mut() {
            *a = *a * c;
        }
        for a in out.hess.iter_mut() {
            *a = *a * c;
        }
        for a in out.third.iter_mut() {
            *a = *a * c;
        }
        out
    }

    /// Truncated Leibniz product.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same(other).expect("jet dim mismatch");
        let d = self.dim;
        let mut out = Jet3::constant(d, self.value * other.value);
        for i in 0..d {
            out.grad[i] = self.grad[i] * other.value + self.value * other.grad[i];
        }
        for i in 0..d {
            for j in i..d {
                let v = self.hess(i, j) * other.value
                    + self.grad[i] * other.grad[j]
                    + self.grad[j] * other.grad[i]
                    + self.value * other.hess(i, j);
                out.hess[sym2_index(d, i, j)] = v;
            }
        }
        for i in 0..d {
            for j in i..d {
                for k in j..d {
                    // All eight subset splits of the three derivative slots.
                    let v = self.third(i, j, k) * other.value
                        + self.hess(i, j) * other.grad[k]
                        + self.hess(i, k) * other.grad[j]
                        + self.hess(j, k) * other.grad[i]
                        + self.grad[i] * other.hess(j, k)
                        + self.grad[j] * other.hess(i, k)
                        + self.grad[k] * other.hess(i, j)
                        + self.value * other.third(i, j, k);
                    out.third[sym3_index(d, i, j, k)] = v;
                }
            }
        }
        out
    }

    /// Order-3 chain rule: compose with a function given by its first three
    /// derivatives `(f, f', f'', f''')` at `self.value`.
    pub fn compose(&self, f: [T; 4]) -> Self {
        let d = self.dim;
        let [f0, f1, f2, f3] = f;
        let mut out = Jet3::constant(d, f0);
        for i in 0..d {
            out.grad[i] = f1 * self.grad[i];
        }
        for i in 0..d {
            for j in i..d {
                out.hess[sym2_index(d, i, j)] =
                    f2 * self.grad[i] * self.grad[j] + f1 * self.hess(i, j);
            }
        }
        for i in 0..d {
            for j in i..d {
                for k in j..d {
                    let v = f3 * self.grad[i] * self.grad[j] * self.grad[k]
                        + f2 * (self.hess(i, j) * self.grad[k]
                            + self.hess(i, k) * self.grad[j]
                            + self.hess(j, k) * self.grad[i])
                        + f1 * self.third(i, j, k);
                    out.third[sym3_index(d, i, j, k)] = v;
                }
            }
        }
        out
    }

    /// Reciprocal jet; errors on zero value.
    pub fn recip(&self) -> Result<Self, JetError> {
        if self.value.is_zero() {
            return Err(JetError::DivisionByZero);
        }
        let u = self.value;
        let iu = T::one() / u;
        let iu2 = iu * iu;
        let two = T::from_f64(2.0);
        let six = T::from_f64(6.0);
        let out = self.compose([iu, -iu2, two * iu2 * iu, -six * iu2 * iu2]);
        if !out.all_finite() {
            return Err(JetError::NonFinite("recip"));
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self, JetError> {
        self.assert_same(other)?;
        Ok(self.mul(&other.recip()?))
    }

    /// Integer power by repeated squaring on jets (valid for any base value).
    pub fn powi(&self, e: i64) -> Result<Self, JetError> {
        if e < 0 {
            return self.recip()?.powi(-e);
        }
        let mut acc = Jet3::constant(self.dim, T::one());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Raise to a constant real power. Integer exponents work for any base;
    /// fractional exponents need a base value in the domain of `ln`.
    pub fn powf(&self, e: f64) -> Result<Self, JetError> {
        if e == e.trunc() && e.abs() <= 64.0 {
            return self.powi(e as i64);
        }
        if !self.value.log_domain_ok() {
            return Err(JetError::Domain {
                func: "pow",
                value: self.value.modulus(),
            });
        }
        let u = self.value;
        let f0 = u.powf(e);
        let f1 = T::from_f64(e) * u.powf(e - 1.0);
        let f2 = T::from_f64(e * (e - 1.0)) * u.powf(e - 2.0);
        let f3 = T::from_f64(e * (e - 1.0) * (e - 2.0)) * u.powf(e - 3.0);
        let out = self.compose([f0, f1, f2, f3]);
        if !out.all_finite() {
            return Err(JetError::NonFinite("pow"));
        }
        Ok(out)
    }

    pub fn sin(&self) -> Self {
        let u = self.value;
        self.compose([u.sin(), u.cos(), -u.sin(), -u.cos()])
    }

    pub fn cos(&self) -> Self {
        let u = self.value;
        self.compose([u.cos(), -u.sin(), -u.cos(), u.sin()])
    }

    pub fn tan(&self) -> Result<Self, JetError> {
        let t = self.value.tan();
        if !t.is_finite() {
            return Err(JetError::Domain {
                func: "tan",
                value: self.value.modulus(),
            });
        }
        let one = T::one();
        let two = T::from_f64(2.0);
        let six = T::from_f64(6.0);
        let s = one + t * t; // sec^2
        let out = self.compose([t, s, two * t * s, s * (two + six * t * t)]);
        if !out.all_finite() {
            return Err(JetError::NonFinite("tan"));
        }
        Ok(out)
    }

    pub fn exp(&self) -> Self {
        let e = self.value.exp();
        self.compose([e, e, e, e])
    }

    pub fn ln(&self) -> Result<Self, JetError> {
        if !self.value.log_domain_ok() {
            return Err(JetError::Domain {
                func: "log",
                value: self.value.modulus(),
            });
        }
        let u = self.value;
        let iu = T::one() / u;
        let iu2 = iu * iu;
        Ok(self.compose([u.ln(), iu, -iu2, T::from_f64(2.0) * iu2 * iu]))
    }

    pub fn sqrt(&self) -> Result<Self, JetError> {
        if !self.value.log_domain_ok() {
            return Err(JetError::Domain {
                func: "sqrt",
                value: self.value.modulus(),
            });
        }
        self.powf(0.5)
    }

    pub fn sinh(&self) -> Self {
        let u = self.value;
        self.compose([u.sinh(), u.cosh(), u.sinh(), u.cosh()])
    }

    pub fn cosh(&self) -> Self {
        let u = self.value;
        self.compose([u.cosh(), u.sinh(), u.cosh(), u.sinh()])
    }

    pub fn tanh(&self) -> Self {
        let t = self.value.tanh();
        let one = T::one();
        let s = one - t * t;
        let two = T::from_f64(2.0);
        let six = T::from_f64(6.0);
        self.compose([t, s, -two * t * s, s * (six * t * t - two)])
    }

    pub fn atan(&self) -> Self {
        let u = self.value;
        let one = T::one();
        let den = one / (one + u * u);
        let den2 = den * den;
        let two = T::from_f64(2.0);
        let six = T::from_f64(6.0);
        self.compose([
            u.atan(),
            den,
            -two * u * den2,
            (six * u * u - two) * den2 * den,
        ])
    }
}

impl Jet3<f64> {
    /// Reinterpret a real jet as a complex jet with zero imaginary parts.
    pub fn to_complex(&self) -> Jet3<Complex64> {
        Jet3 {
            dim: self.dim,
            value: Complex64::new(self.value, 0.0),
            grad: self.grad.iter().map(|v| Complex64::new(*v, 0.0)).collect(),
            hess: self.hess.iter().map(|v| Complex64::new(*v, 0.0)).collect(),
            third: self.third.iter().map(|v| Complex64::new(*v, 0.0)).collect(),
        }
    }
}

impl Jet3<Complex64> {
    /// Real parts of every slot, as a real jet.
    pub fn real_part(&self) -> Jet3<f64> {
        Jet3 {
            dim: self.dim,
            value: self.value.re,
            grad: self.grad.iter().map(|v| v.re).collect(),
            hess: self.hess.iter().map(|v| v.re).collect(),
            third: self.third.iter().map(|v| v.re).collect(),
        }
    }

    /// Largest imaginary modulus over all slots.
    pub fn max_imag(&self) -> f64 {
        let mut m = self.value.im.abs();
        for v in self.grad.iter().chain(&self.hess).chain(&self.third) {
            m = m.max(v.im.abs());
        }
        m
    }
}

macro_rules! jet_binop {
    ($tr:ident, $m:ident) => {
        impl<T: JetScalar> std::ops::$tr for &Jet3<T> {
            type Output = Jet3<T>;
            fn $m(self, rhs: &Jet3<T>) -> Jet3<T> {
                Jet3::$m(self, rhs)
            }
        }
        impl<T: JetScalar> std::ops::$tr for Jet3<T> {
            type Output = Jet3<T>;
            fn $m(self, rhs: Jet3<T>) -> Jet3<T> {
                Jet3::$m(&self, &rhs)
            }
        }
    };
}

jet_binop!(Add, add);
jet_binop!(Sub, sub);
jet_binop!(Mul, mul);

impl<T: JetScalar> std::ops::Neg for &Jet3<T> {
    type Output = Jet3<T>;
    fn neg(self) -> Jet3<T> {
        Jet3::neg(self)
    }
}

impl<T: JetScalar> std::ops::Neg for Jet3<T> {
    type Output = Jet3<T>;
    fn neg(self) -> Jet3<T> {
        Jet3::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jet_xy(x: f64, y: f64) -> (Jet3<f64>, Jet3<f64>) {
        let p = [x, y];
        (
            Jet3::coordinate(&p, 0).unwrap(),
            Jet3::coordinate(&p, 1).unwrap(),
        )
    }

    #[test]
    fn coordinate_jet_basics() {
        let p = [2.0, 5.0];
        let j = Jet3::coordinate(&p, 0).unwrap();
        assert_eq!(j.value, 2.0);
        assert_eq!(j.grad(0), 1.0);
        assert_eq!(j.grad(1), 0.0);
        assert_eq!(j.hess(0, 0), 0.0);
        assert_eq!(j.hess(0, 1), 0.0);

        let q = [0.0, 0.0, 0.0];
        let j = Jet3::coordinate(&q, 2).unwrap();
        assert_eq!(j.value, 0.0);
        assert_eq!(j.grad(2), 1.0);

        assert!(matches!(
            Jet3::<f64>::coordinate(&q, 3),
            Err(JetError::IndexOutOfRange { index: 3, dim: 3 })
        ));
    }

    #[test]
    fn product_of_coordinates() {
        let (x, y) = jet_xy(3.0, 4.0);
        let m = x.mul(&y);
        assert_eq!(m.value, 12.0);
        assert_eq!(m.grad(0), 4.0);
        assert_eq!(m.grad(1), 3.0);
        assert_eq!(m.hess(0, 1), 1.0);
        assert_eq!(m.hess(0, 0), 0.0);
        assert_eq!(m.third(0, 0, 1), 0.0);
    }

    #[test]
    fn add_zero_is_identity() {
        let (x, y) = jet_xy(1.5, -0.3);
        let e = x.mul(&y).sin();
        let z = Jet3::constant(2, 0.0);
        assert_eq!(e.add(&z), e);
    }

    #[test]
    fn reciprocal_derivatives() {
        // 1/x at x=2: values 0.5, -0.25, 0.25, -0.375
        let p = [2.0];
        let x = Jet3::coordinate(&p, 0).unwrap();
        let r = x.recip().unwrap();
        assert!((r.value - 0.5).abs() < 1e-15);
        assert!((r.grad(0) + 0.25).abs() < 1e-15);
        assert!((r.hess(0, 0) - 0.25).abs() < 1e-15);
        assert!((r.third(0, 0, 0) + 0.375).abs() < 1e-15);
    }

    #[test]
    fn exp_of_zero_jet() {
        let z = Jet3::constant(3, 0.0);
        let e = z.exp();
        assert_eq!(e.value, 1.0);
        assert_eq!(e.max_abs(), 1.0);
    }

    #[test]
    fn log_exp_roundtrip() {
        let p = [0.7, -0.2];
        let x = Jet3::coordinate(&p, 0).unwrap();
        let y = Jet3::coordinate(&p, 1).unwrap();
        let a = x.mul(&y).add(&Jet3::constant(2, 1.3)).mul(&x.sin());
        let b = a.exp().ln().unwrap();
        let diff = a.sub(&b);
        assert!(diff.max_abs() < 1e-12, "max diff {}", diff.max_abs());
    }

    #[test]
    fn division_by_zero_value() {
        let z = Jet3::constant(1, 0.0);
        let o = Jet3::constant(1, 1.0);
        assert!(matches!(o.div(&z), Err(JetError::DivisionByZero)));
    }

    #[test]
    fn log_domain_violation() {
        let m = Jet3::constant(1, -1.0);
        assert!(matches!(m.ln(), Err(JetError::Domain { .. })));
        assert!(m.sqrt().is_err());
    }

    #[test]
    fn integer_pow_of_negative_base() {
        let p = [-1.5];
        let x = Jet3::coordinate(&p, 0).unwrap();
        let c = x.powf(3.0).unwrap();
        assert!((c.value - (-3.375)).abs() < 1e-14);
        assert!((c.grad(0) - 6.75).abs() < 1e-14);
        // fractional power of a negative base must fail
        assert!(x.powf(0.5).is_err());
    }

    #[test]
    fn partial_shifts_orders() {
        // f = x^2 y, d/dx = 2xy with gradient (2y, 2x)
        let (x, y) = jet_xy(3.0, 4.0);
        let f = x.mul(&x).mul(&y);
        let fx = f.partial(0);
        assert_eq!(fx.value, 24.0);
        assert_eq!(fx.grad(0), 8.0);
        assert_eq!(fx.grad(1), 6.0);
        assert_eq!(fx.hess(0, 1), 2.0);
        assert_eq!(fx.third(0, 0, 0), 0.0); // truncated
    }

    #[test]
    fn complex_matches_real_on_real_input() {
        let p = [0.4, 1.1];
        let x = Jet3::coordinate(&p, 0).unwrap();
        let y = Jet3::coordinate(&p, 1).unwrap();
        let real = x.sin().mul(&y.exp()).div(&y).unwrap();

        let cp = [Complex64::new(0.4, 0.0), Complex64::new(1.1, 0.0)];
        let cx = Jet3::coordinate(&cp, 0).unwrap();
        let cy = Jet3::coordinate(&cp, 1).unwrap();
        let cplx = cx.sin().mul(&cy.exp()).div(&cy).unwrap();

        assert_eq!(cplx.real_part(), real);
        assert_eq!(cplx.max_imag(), 0.0);
    }

    #[test]
    fn sym3_indexing_roundtrip() {
        for d in 1..=8 {
            let mut seen = vec![false; sym3_len(d)];
            for i in 0..d {
                for j in i..d {
                    for k in j..d {
                        let idx = sym3_index(d, i, j, k);
                        assert!(!seen[idx]);
                        seen[idx] = true;
                    }
                }
            }
            assert!(seen.iter().all(|s| *s));
        }
    }
}
