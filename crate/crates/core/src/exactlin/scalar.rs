use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds the prime field of order `p`, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) && p < (1 << 32) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Characteristic of the field; zero for the rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                residue: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Builds `num / den`, failing when `den` vanishes in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// `1/n`, which requires `n` to be invertible in the field.
    pub fn inverse_of(self, n: i64) -> Result<Scalar> {
        self.ratio(1, n).map_err(|_| Error::CharacteristicTooSmall {
            characteristic: self.characteristic(),
            reason: format!("{n} is not invertible"),
        })
    }

    /// Fails unless every integer in `1..=n` is invertible.
    pub fn require_invertible_up_to(self, n: u64, context: &str) -> Result<()> {
        match self {
            Field::Prime(p) if p <= n => Err(Error::CharacteristicTooSmall {
                characteristic: p,
                reason: format!("{context} needs 1..={n} to be invertible"),
            }),
            _ => Ok(()),
        }
    }

    /// Parses `"a"` or `"a/b"` into this field.
    pub fn parse(self, input: &str) -> Result<Scalar> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let text = input.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |v: &BigInt| {
                    let m = BigInt::from(p);
                    (((v % &m) + &m) % &m).to_u64().unwrap()
                };
                let n = Scalar::Prime {
                    residue: reduce(&num),
                    modulus: p,
                };
                let d = Scalar::Prime {
                    residue: reduce(&den),
                    modulus: p,
                };
                n.div(&d).map_err(|_| err("denominator vanishes modulo p"))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element: a reduced rational or a residue modulo a prime.
///
/// Binary operators panic when the two operands belong to different fields.
/// Every container in this crate carries a single field tag and validates it
/// on construction, so a mismatch there is a logic error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { residue, .. } => *residue == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { residue, modulus } => Scalar::Prime {
                residue: pow_mod(*residue, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiplies by a small integer.
    pub fn times(&self, n: i64) -> Scalar {
        self * &self.field().from_i64(n)
    }

    fn check_same(&self, rhs: &Scalar) {
        if let (Scalar::Prime { modulus: a, .. }, Scalar::Prime { modulus: b, .. }) = (self, rhs) {
            assert_eq!(a, b, "scalar arithmetic across different prime fields");
        } else {
            assert_eq!(
                self.field(),
                rhs.field(),
                "scalar arithmetic across different fields"
            );
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Prime {
                    residue: a,
                    modulus,
                },
                Scalar::Prime { residue: b, .. },
            ) => {
                let s = a + b;
                Scalar::Prime {
                    residue: if s >= *modulus { s - modulus } else { s },
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Prime {
                    residue: a,
                    modulus,
                },
                Scalar::Prime { residue: b, .. },
            ) => Scalar::Prime {
                residue: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { residue, modulus } => Scalar::Prime {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (
                Scalar::Prime { residue, modulus },
                Scalar::Prime {
                    residue: b,
                    modulus: m,
                },
            ) => {
                assert_eq!(
                    modulus, m,
                    "scalar arithmetic across different prime fields"
                );
                let s = *residue + b;
                *residue = if s >= *modulus { s - *modulus } else { s };
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => panic!("scalar arithmetic across different fields"),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &(-rhs);
    }
}

impl Scalar {
    /// `self += a * b`, the inner loop of every contraction.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (
                Scalar::Prime { residue, modulus },
                Scalar::Prime { residue: x, .. },
                Scalar::Prime { residue: y, .. },
            ) => {
                let m = *modulus as u128;
                *residue = ((*residue as u128 + *x as u128 * *y as u128) % m) as u64;
            }
            _ => {
                let p = a * b;
                *self += &p;
            }
        }
    }
}
