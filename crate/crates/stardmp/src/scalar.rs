//! Exact scalar arithmetic: the field interface shared by the matrix
//! carriers, Gaussian rationals, and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Context object for an exact field with a (possibly trivial) conjugation.
///
/// Elements are plain values; all operations go through the field object so
/// that fields carrying runtime data (a prime modulus, say) and zero-sized
/// fields share one interface.
pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Conjugation; the identity on fields without a distinguished one.
    fn conj(&self, a: &Self::Elem) -> Self::Elem;
    /// The image of a small integer in the field.
    fn embed_i64(&self, v: i64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// A finite field that can enumerate itself in a fixed order.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    /// The i-th element of the fixed enumeration, `0 <= i < order()`.
    fn elem_at(&self, i: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;
}

/// An element of Q(i): an exact complex number with rational real and
/// imaginary parts. Both parts are kept reduced with positive denominators
/// by the underlying rational type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_parts(n, 1, 0, 1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_parts(0, 1, 1, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn neg(&self) -> Self {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    /// `1/self`, or `None` for zero. Uses the norm re^2 + im^2, which is
    /// zero in Q only for the zero element.
    pub fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return None;
        }
        Some(GaussianRational {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Prints in the entry grammar accepted by [`GaussianRational::from_str`]:
    /// `p/q`, `r/s i` or `p/q+r/s i` with reduced parts and no spaces, e.g.
    /// `0`, `-3/2`, `i`, `-i`, `2i`, `1/2-3/4i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let imag = |f: &mut fmt::Formatter<'_>, im: &BigRational, with_sign: bool| {
            let mag = im.abs();
            let sign = if im.is_negative() {
                "-"
            } else if with_sign {
                "+"
            } else {
                ""
            };
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{}i", fmt_rational(&mag))
            }
        };
        if self.re.is_zero() {
            imag(f, &self.im, false)
        } else {
            write!(f, "{}", fmt_rational(&self.re))?;
            imag(f, &self.im, true)
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| format!("invalid integer '{num}'"))?;
    let d = BigInt::from_str(den).map_err(|_| format!("invalid integer '{den}'"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in '{s}'"));
    }
    if d.is_negative() {
        return Err(format!("denominator must be positive in '{s}'"));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for GaussianRational {
    type Err = String;

    /// Accepts `p/q`, `[p/q]±[r/s]i` and the shorthands `i`, `-i`, `+i`;
    /// rationals may be unreduced; spaces are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty entry".into());
        }
        if let Some(body) = compact.strip_suffix('i') {
            // Split off the real part at the last interior sign.
            let split = if body.len() > 1 {
                body[1..].rfind(['+', '-']).map(|j| j + 1)
            } else {
                None
            };
            let (re_str, im_str) = match split {
                Some(j) => (&body[..j], &body[j..]),
                None => ("", body),
            };
            let im = match im_str {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                t => parse_rational(t)?,
            };
            let re = if re_str.is_empty() {
                BigRational::zero()
            } else {
                parse_rational(re_str)?
            };
            Ok(GaussianRational::new(re, im))
        } else {
            Ok(GaussianRational::new(
                parse_rational(&compact)?,
                BigRational::zero(),
            ))
        }
    }
}

/// The field Q(i); conjugation is complex conjugation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GaussianField;

impl Field for GaussianField {
    type Elem = GaussianRational;

    fn zero(&self) -> GaussianRational {
        GaussianRational::from_integer(0)
    }
    fn one(&self) -> GaussianRational {
        GaussianRational::from_integer(1)
    }
    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a.add(b)
    }
    fn neg(&self, a: &GaussianRational) -> GaussianRational {
        a.neg()
    }
    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a.mul(b)
    }
    fn inv(&self, a: &GaussianRational) -> Option<GaussianRational> {
        a.inv()
    }
    fn conj(&self, a: &GaussianRational) -> GaussianRational {
        a.conj()
    }
    fn embed_i64(&self, v: i64) -> GaussianRational {
        GaussianRational::from_integer(v)
    }
    fn is_zero(&self, a: &GaussianRational) -> bool {
        a.is_zero()
    }
}

/// The prime field F_p with elements represented as `u64` values in `[0, p)`.
/// Conjugation is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// `None` unless `p` is prime.
    pub fn new(p: u64) -> Option<Self> {
        is_prime(p).then_some(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2) mod p.
        let mut base = *a as u128;
        let mut exp = self.p - 2;
        let m = self.p as u128;
        let mut acc: u128 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        Some(acc as u64)
    }
    fn conj(&self, a: &u64) -> u64 {
        *a
    }
    fn embed_i64(&self, v: i64) -> u64 {
        self.reduce(v)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

impl FiniteField for PrimeField {
    fn order(&self) -> u64 {
        self.p
    }
    fn elem_at(&self, i: u64) -> u64 {
        i
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
}
