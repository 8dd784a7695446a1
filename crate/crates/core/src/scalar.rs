//! Exact field elements: rationals (with a machine-word fast path) and residues modulo a prime.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Values whose numerator and denominator stay below this bound use the `i64` fast path.
const SMALL_BOUND: i64 = 1 << 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("{0} is not a supported prime modulus (must be prime and below 2^32)")]
    BadModulus(u64),
    #[error("unknown field descriptor `{0}` (expected `Q` or `Fp:<p>`)")]
    BadField(String),
}

/// The ground field of an instance. Every scalar of an instance lives in the same field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if !(2..(1 << 32)).contains(&p) || !is_prime(p) {
            return Err(ScalarError::BadModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::from_ratio(Ratio::from_integer(v)),
            Field::Prime(p) => Scalar::Residue { value: v.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// `num / den` in this field. Panics if `den` is zero in the field.
    pub fn fraction(self, num: i64, den: i64) -> Scalar {
        self.from_i64(num) / self.from_i64(den)
    }

    /// Parses `p/q` or `p` for rationals, and a (possibly negative) integer for residues.
    pub fn parse(self, text: &str) -> Result<Scalar, ScalarError> {
        let t = text.trim();
        match self {
            Field::Rational => {
                let (num, den) = match t.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (t, "1"),
                };
                let num = BigInt::from_str(num.trim()).map_err(|_| ScalarError::Parse(text.into()))?;
                let den = BigInt::from_str(den.trim()).map_err(|_| ScalarError::Parse(text.into()))?;
                if den.is_zero() {
                    return Err(ScalarError::ZeroDenominator(text.into()));
                }
                Ok(Scalar::from_big(BigRational::new(num, den)))
            }
            Field::Prime(p) => {
                let v = BigInt::from_str(t).map_err(|_| ScalarError::Parse(text.into()))?;
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Ok(Scalar::Residue { value: r.to_u64().expect("residue fits"), modulus: p })
            }
        }
    }

    /// The file-format descriptor: `Q` or `Fp:<p>`.
    pub fn descriptor(self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("Fp:{p}"),
        }
    }

    pub fn from_descriptor(text: &str) -> Result<Field, ScalarError> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(p) = t.strip_prefix("Fp:") {
            let p: u64 = p.parse().map_err(|_| ScalarError::BadField(text.into()))?;
            return Field::prime(p);
        }
        Err(ScalarError::BadField(text.into()))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar.
///
/// Rationals are kept normalized; a value uses `Small` exactly when both its numerator and
/// denominator are below 2^62 in absolute value, so structural equality is value equality.
/// Mixing scalars from different fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    fn from_ratio(r: Ratio<i64>) -> Scalar {
        if r.numer().abs() < SMALL_BOUND && *r.denom() < SMALL_BOUND {
            Scalar::Small(r)
        } else {
            Scalar::from_big(BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())))
        }
    }

    fn from_big(r: BigRational) -> Scalar {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n.abs() < SMALL_BOUND && d < SMALL_BOUND {
                return Scalar::Small(Ratio::new_raw(n, d));
            }
        }
        Scalar::Big(Box::new(r))
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Scalar::Big(b) => (**b).clone(),
            Scalar::Residue { .. } => panic!("scalar field mismatch: residue used as rational"),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Small(_) | Scalar::Big(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_zero(),
            Scalar::Big(b) => b.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_one(),
            Scalar::Big(b) => b.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Small(r) => Scalar::from_ratio(r.recip()),
            Scalar::Big(b) => Scalar::from_big(b.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    fn combine(
        &self,
        other: &Scalar,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
        residue: impl Fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Small(a), Scalar::Small(b)) => match small(a, b) {
                Some(r) => Scalar::from_ratio(r),
                None => Scalar::from_big(big(self.to_big(), other.to_big())),
            },
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                assert_eq!(p, q, "scalar field mismatch: different moduli");
                Scalar::Residue { value: residue(*a, *b, *p), modulus: *p }
            }
            (Scalar::Residue { .. }, _) | (_, Scalar::Residue { .. }) => {
                panic!("scalar field mismatch: rational combined with residue")
            }
            _ => Scalar::from_big(big(self.to_big(), other.to_big())),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Scalar::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Scalar::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, |a, b| a.checked_add(b), |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, |a, b| a.checked_sub(b), |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, |a, b| a.checked_mul(b), |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Small(r) => Scalar::Small(-r),
            Scalar::Big(b) => Scalar::from_big(-(**b).clone()),
            Scalar::Residue { value, modulus } => Scalar::Residue { value: (modulus - value) % modulus, modulus: *modulus },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Scalar {
    /// `self += a * b`, the inner loop of every contraction in the crate.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a * b;
        *self += &prod;
    }

    /// Total order used only for deterministic tie-breaking in reports.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Residue { value: a, .. }, Scalar::Residue { value: b, .. }) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_negative(),
            Scalar::Big(b) => b.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }
}

/// Vector helpers shared by the linear-algebra and algebra layers.
pub mod vector {
    use super::{Field, Scalar};

    pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
        vec![field.zero(); n]
    }

    pub fn unit(field: Field, n: usize, k: usize) -> Vec<Scalar> {
        let mut v = zeros(field, n);
        v[k] = field.one();
        v
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
        v.iter().map(|x| c * x).collect()
    }

    /// `acc += c * v`.
    pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            a.add_product(c, x);
        }
    }

    /// Index of the first nonzero coordinate.
    pub fn leading(v: &[Scalar]) -> Option<usize> {
        v.iter().position(|x| !x.is_zero())
    }

    pub fn render(v: &[Scalar]) -> String {
        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Renders `v` as a combination of named basis vectors, e.g. `e11 + 2*e12`.
    pub fn render_named(v: &[Scalar], labels: &[String]) -> String {
        let mut out = String::new();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&labels[k]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Field::Rational;
        let third = q.fraction(1, 3);
        let sum = &(&third + &third) + &third;
        assert!(sum.is_one());
        assert_eq!(q.fraction(2, 4), q.fraction(1, 2));
        assert_eq!(q.fraction(-3, 6).to_string(), "-1/2");
        assert_eq!(q.from_i64(7).to_string(), "7");
    }

    #[test]
    fn overflow_promotes_to_bigint_and_back() {
        let q = Field::Rational;
        let big = q.from_i64(1 << 40);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Small(_)));
    }

    #[test]
    fn residues_wrap_and_invert() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!((&three * &three.inv().unwrap()), f.one());
        assert_eq!(f.from_i64(-1).to_string(), "6");
        let two = Field::prime(2).unwrap().from_i64(2);
        assert!(two.is_zero());
    }

    #[test]
    fn parsing_round_trips() {
        let q = Field::Rational;
        for s in ["0", "5", "-2/3", "123456789012345678901234567891/2"] {
            assert_eq!(q.parse(s).unwrap().to_string(), s);
        }
        assert_eq!(q.parse("4/6").unwrap().to_string(), "2/3");
        assert!(q.parse("1/0").is_err());
        assert!(Field::prime(4).is_err());
        assert_eq!(Field::from_descriptor("Fp:5").unwrap(), Field::Prime(5));
        assert_eq!(Field::from_descriptor("Q").unwrap().descriptor(), "Q");
    }
}
