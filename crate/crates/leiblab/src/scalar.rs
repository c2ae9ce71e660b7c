//! Exact scalar arithmetic over the two supported coefficient fields:
//! arbitrary-precision rationals and prime fields GF(p) for odd primes p.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// Largest allowed prime modulus (exclusive). Products of two reduced
/// residues then fit comfortably in `u128` intermediates.
const MAX_MODULUS: u64 = 1 << 31;

/// The coefficient field of an algebra or matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers (characteristic 0).
    Rational,
    /// The prime field GF(p); `p` is a validated odd prime when constructed
    /// through [`FieldSpec::gf`].
    Gf(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// Validated constructor for GF(p). Rejects characteristic 2 and
    /// non-prime or oversized moduli.
    pub fn gf(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::Char2Field);
        }
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldSpec::Gf(p))
    }

    /// Re-checks the invariants of an already-constructed value (enum
    /// variants are public, so data arriving from outside is re-validated
    /// at algebra-construction time).
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Gf(p) => FieldSpec::gf(*p).map(|_| ()),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Gf(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
            FieldSpec::Gf(p) => Scalar::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::one()),
            FieldSpec::Gf(p) => Scalar::Fp { val: 1, p: *p },
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Gf(p) => Scalar::Fp {
                val: v.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    /// Parses a coefficient written as a decimal integer or `"num/den"`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num_s, den_s) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num_s
            .parse()
            .map_err(|_| Error::ParseError(format!("invalid numerator in coefficient {text:?}")))?;
        let den: BigInt = match den_s {
            Some(d) => d.parse().map_err(|_| {
                Error::ParseError(format!("invalid denominator in coefficient {text:?}"))
            })?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::ParseError(format!(
                "zero denominator in coefficient {text:?}"
            )));
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Rat(BigRational::new(num, den))),
            FieldSpec::Gf(p) => {
                let pb = BigInt::from(*p);
                let n = num.mod_floor(&pb).to_u64().expect("reduced residue fits");
                let d = den.mod_floor(&pb).to_u64().expect("reduced residue fits");
                if d == 0 {
                    return Err(Error::ParseError(format!(
                        "denominator of {text:?} is not invertible modulo {p}"
                    )));
                }
                let inv = mod_inverse(d, *p);
                Ok(Scalar::Fp {
                    val: mul_mod(n, inv, *p),
                    p: *p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Gf(p) => write!(f, "gf({p})"),
        }
    }
}

/// Parses a field description: `"rational"`, `"q"`, `"gf(p)"`, `"gf p"` or `"gfp"`.
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    let t = text.trim().to_ascii_lowercase();
    if t == "rational" || t == "q" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(rest) = t.strip_prefix("gf") {
        let digits = rest
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::ParseError(format!("invalid field {text:?}")))?;
        return FieldSpec::gf(p);
    }
    Err(Error::ParseError(format!("invalid field {text:?}")))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow_mod(a, p - 2, p)
}

/// An exact scalar. All arithmetic between scalars of different fields is a
/// programming error and panics; public entry points validate field
/// compatibility before arithmetic starts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Fp { p, .. } => FieldSpec::Gf(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) if p == q => Scalar::Fp {
                val: (a + b) % p,
                p: *p,
            },
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) if p == q => Scalar::Fp {
                val: mul_mod(*a, *b, *p),
                p: *p,
            },
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: (p - val) % p,
                p: *p,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: mod_inverse(*val, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// Reduction of a rational scalar modulo p (denominator must stay
    /// invertible); identity on scalars already in GF(p) with the same p.
    pub fn to_gf(&self, p: u64) -> Result<Scalar> {
        match self {
            Scalar::Fp { val, p: q } if *q == p => Ok(Scalar::Fp { val: *val, p }),
            Scalar::Fp { .. } => Err(Error::FieldMismatch),
            Scalar::Rat(r) => {
                let pb = BigInt::from(p);
                let n = r.numer().mod_floor(&pb).to_u64().expect("residue fits");
                let d = r.denom().mod_floor(&pb).to_u64().expect("residue fits");
                if d == 0 {
                    return Err(Error::ParseError(format!(
                        "denominator of {self} is not invertible modulo {p}"
                    )));
                }
                Ok(Scalar::Fp {
                    val: mul_mod(n, mod_inverse(d, p), p),
                    p,
                })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}
