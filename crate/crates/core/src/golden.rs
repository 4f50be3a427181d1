//! Exact arithmetic over the golden field Q(√5).
//!
//! A [`GoldenScalar`] is a + b√5 with rational a, b stored as
//! arbitrary-precision ratios, so ring operations never round. The golden
//! ratio φ = (1 + √5)/2 is a unit here: φ·φ⁻¹ = 1 and φ⁻¹ = φ − 1 hold
//! exactly. Real vectors and small matrices over the field support the
//! icosahedron and R⁷ line constructions, where every claimed identity is
//! exact rather than approximate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Element a + b√5 of Q(√5), exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenScalar {
    a: BigRational,
    b: BigRational,
}

impl GoldenScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_integer(n: i64) -> Self {
        Self {
            a: BigRational::from_integer(BigInt::from(n)),
            b: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self {
            a: BigRational::new(BigInt::from(num), BigInt::from(den)),
            b: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn sqrt5() -> Self {
        Self {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// The golden ratio φ = (1 + √5)/2.
    pub fn phi() -> Self {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        Self {
            a: half.clone(),
            b: half,
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the √5 coefficient vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact integer value, if the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_rational() && self.a.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }

    /// Galois conjugate a − b√5.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm (a + b√5)(a − b√5) = a² − 5b², a rational.
    pub fn field_norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(√5)");
        let n = self.field_norm();
        Self {
            a: &self.a / &n,
            b: -&self.b / &n,
        }
    }

    pub fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap() + 5f64.sqrt() * self.b.to_f64().unwrap()
    }

    /// Sign of the real number a + b√5 (−1, 0 or 1), decided exactly.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // mixed signs: compare a² with 5b² exactly
        let a2 = &self.a * &self.a;
        let b2_5 = BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b;
        match a2.cmp(&b2_5) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

fn rational_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for GoldenScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for GoldenScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Mul for GoldenScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + b√5)(c + d√5) = ac + 5bd + (ad + bc)√5
        let five = BigRational::from_integer(BigInt::from(5));
        Self {
            a: &self.a * &rhs.a + five * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for GoldenScalar {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl Neg for GoldenScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl fmt::Display for GoldenScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√5", self.b)
        } else {
            write!(f, "{} + {}√5", self.a, self.b)
        }
    }
}

/// Real vector with exact golden-field or floating entries.
#[derive(Debug, Clone, PartialEq)]
pub enum RealVector {
    Exact(Vec<GoldenScalar>),
    Float(Vec<f64>),
}

impl RealVector {
    pub fn exact_integers(values: &[i64]) -> Self {
        RealVector::Exact(
            values
                .iter()
                .map(|&v| GoldenScalar::from_integer(v))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        match self {
            RealVector::Exact(v) => v.len(),
            RealVector::Float(v) => v.len(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RealVector::Exact(_))
    }

    /// Exact dot product; `None` unless both vectors are exact.
    pub fn exact_dot(&self, other: &Self) -> Option<GoldenScalar> {
        match (self, other) {
            (RealVector::Exact(u), RealVector::Exact(v)) => {
                assert_eq!(u.len(), v.len());
                let mut acc = GoldenScalar::zero();
                for (x, y) in u.iter().zip(v) {
                    acc = acc + x.clone() * y.clone();
                }
                Some(acc)
            }
            _ => None,
        }
    }

    pub fn float_dot(&self, other: &Self) -> f64 {
        let u = self.to_floats();
        let v = other.to_floats();
        assert_eq!(u.len(), v.len());
        u.iter().zip(&v).map(|(x, y)| x * y).sum()
    }

    pub fn to_floats(&self) -> Vec<f64> {
        match self {
            RealVector::Exact(v) => v.iter().map(|g| g.to_f64()).collect(),
            RealVector::Float(v) => v.clone(),
        }
    }

    /// Exact negation test: u = −v.
    pub fn is_exact_negation_of(&self, other: &Self) -> bool {
        match (self, other) {
            (RealVector::Exact(u), RealVector::Exact(v)) => {
                u.len() == v.len()
                    && u.iter()
                        .zip(v)
                        .all(|(x, y)| x.clone() + y.clone() == GoldenScalar::zero())
            }
            (RealVector::Float(u), RealVector::Float(v)) => {
                u.len() == v.len() && u.iter().zip(v).all(|(x, y)| (x + y).abs() < 1e-12)
            }
            _ => false,
        }
    }
}

/// Small dense matrix over Q(√5), exact. Used for the real shift/phase
/// operators and the tetrahedral group closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenMatrix {
    n: usize,
    entries: Vec<GoldenScalar>,
}

impl GoldenMatrix {
    pub fn from_integer_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n);
            for &v in *row {
                entries.push(GoldenScalar::from_integer(v));
            }
        }
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![GoldenScalar::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = GoldenScalar::one();
        }
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GoldenScalar {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = vec![GoldenScalar::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = entries[i * n + j].clone() + a.clone() * other.get(k, j).clone();
                    entries[i * n + j] = v;
                }
            }
        }
        Self { n, entries }
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|e| -e.clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![GoldenScalar::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j).clone();
            }
        }
        Self { n, entries }
    }

    /// Exact orthogonality test MᵀM = I.
    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self) == Self::identity(self.n)
    }

    /// Exact determinant by Laplace expansion; fine at n ≤ 4.
    pub fn determinant(&self) -> GoldenScalar {
        let n = self.n;
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut det = GoldenScalar::zero();
        for j in 0..n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let minor = self.minor(0, j);
            let term = a.clone() * minor.determinant();
            det = if j % 2 == 0 { det + term } else { det - term };
        }
        det
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == row {
                continue;
            }
            for j in 0..n {
                if j == col {
                    continue;
                }
                entries.push(self.get(i, j).clone());
            }
        }
        Self { n: n - 1, entries }
    }

    pub fn apply(&self, v: &[GoldenScalar]) -> Vec<GoldenScalar> {
        assert_eq!(v.len(), self.n);
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut acc = GoldenScalar::zero();
                for j in 0..n {
                    acc = acc + self.get(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }
}
