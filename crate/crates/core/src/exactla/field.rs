use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact field with dense row operations.
// elements are built by the field value, hence `from_*(&self)`
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + Send + Sync + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    /// A rational representative (symmetric residue for prime fields).
    fn to_rational(&self, a: &Self::Elem) -> BigRational;

    /// `dst[k] -= c * src[k]` for every `k`.
    fn sub_mul_assign(&self, dst: &mut [Self::Elem], c: &Self::Elem, src: &[Self::Elem]) {
        for (d, s) in dst.iter_mut().zip(src) {
            if !self.is_zero(s) {
                *d = self.sub(d, &self.mul(c, s));
            }
        }
    }

    fn scale_assign(&self, v: &mut [Self::Elem], c: &Self::Elem) {
        for x in v.iter_mut() {
            if !self.is_zero(x) {
                *x = self.mul(x, c);
            }
        }
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
            .expect("integers are representable")
    }
}

/// The prime field `F_P` with residues stored as `u16`.
#[derive(Clone, Copy, Default, PartialEq, Eq)]
pub struct PrimeField<const P: u32>;

pub type Fp101 = PrimeField<101>;

impl<const P: u32> PrimeField<P> {
    const CHECK: () = assert!(P >= 2 && P < 65536, "modulus must fit in u16");

    pub fn new() -> Self {
        let () = Self::CHECK;
        PrimeField
    }

    pub const fn modulus(&self) -> u32 {
        P
    }

    fn pow(a: u32, mut e: u32) -> u32 {
        let mut base = a % P;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        acc
    }

    fn reduce_big(n: &BigInt) -> u32 {
        n.mod_floor(&BigInt::from(P)).to_u32().unwrap()
    }
}

impl<const P: u32> fmt::Debug for PrimeField<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{P}")
    }
}

impl<const P: u32> Field for PrimeField<P> {
    type Elem = u16;

    fn name(&self) -> String {
        format!("F_{P}")
    }
    fn zero(&self) -> u16 {
        0
    }
    fn one(&self) -> u16 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u16) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u16, b: &u16) -> u16 {
        ((*a as u32 + *b as u32) % P) as u16
    }
    #[inline]
    fn sub(&self, a: &u16, b: &u16) -> u16 {
        ((*a as u32 + P - *b as u32) % P) as u16
    }
    #[inline]
    fn mul(&self, a: &u16, b: &u16) -> u16 {
        (*a as u32 * *b as u32 % P) as u16
    }
    fn neg(&self, a: &u16) -> u16 {
        ((P - *a as u32) % P) as u16
    }
    fn inv(&self, a: &u16) -> Option<u16> {
        (*a != 0).then(|| Self::pow(*a as u32, P - 2) as u16)
    }
    fn from_rational(&self, q: &BigRational) -> Result<u16> {
        let d = Self::reduce_big(q.denom());
        if d == 0 {
            return Err(Error::NotRepresentable(q.to_string()));
        }
        let n = Self::reduce_big(q.numer());
        Ok((n * Self::pow(d, P - 2) % P) as u16)
    }
    fn to_rational(&self, a: &u16) -> BigRational {
        let a = *a as i64;
        let v = if a > (P as i64) / 2 { a - P as i64 } else { a };
        BigRational::from_integer(BigInt::from(v))
    }

    #[inline]
    fn sub_mul_assign(&self, dst: &mut [u16], c: &u16, src: &[u16]) {
        let f = (P - *c as u32) % P;
        if f == 0 {
            return;
        }
        for (d, s) in dst.iter_mut().zip(src) {
            *d = ((*d as u32 + f * *s as u32) % P) as u16;
        }
    }

    fn scale_assign(&self, v: &mut [u16], c: &u16) {
        let c = *c as u32;
        for x in v.iter_mut() {
            *x = (*x as u32 * c % P) as u16;
        }
    }
}

/// The field of rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
    fn to_rational(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn sub_mul_assign(&self, dst: &mut [BigRational], c: &BigRational, src: &[BigRational]) {
        if c.is_zero() {
            return;
        }
        for (d, s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                *d -= c * s;
            }
        }
    }
}

/// Which field(s) a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FieldChoice {
    #[default]
    P101,
    Rational,
    Both,
}

impl std::str::FromStr for FieldChoice {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "p101" => Ok(FieldChoice::P101),
            "rational" => Ok(FieldChoice::Rational),
            "both" => Ok(FieldChoice::Both),
            _ => Err(format!(
                "unknown field `{s}` (expected p101, rational or both)"
            )),
        }
    }
}
